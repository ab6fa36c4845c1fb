#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dsmt/model.hpp"
#include "dsmt/proposition.hpp"

namespace dsmt {

inline constexpr double kMassTolerance = 1e-9;

// Basic belief assignment: a sparse map from focal elements to masses.
// A well-formed bba keeps zero mass on the empty proposition and on
// anything the model forces empty, and sums to one. Rules that park mass
// on the empty set (conjunctive bookkeeping in the open-world style) or
// lose mass set `unnormalized`; validation then skips the sum-to-one and
// empty-set checks.
struct Bba {
  std::shared_ptr<const Model> model;
  std::map<Proposition, double> masses;
  bool unnormalized = false;
};

// All mass on total ignorance.
Bba vacuous(std::shared_ptr<const Model> model);

struct BbaCheck {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  Bba canonical;  // masses re-keyed to reduced propositions
  bool ok() const { return violations.empty(); }
};

// Reports every violated invariant instead of throwing. Mass sitting on a
// reducible proposition is re-keyed to the reduced form with a warning;
// mass on an irreducibly empty proposition is a violation.
BbaCheck validate(const Bba& b);

// Explicit opt-in rescaling to sum one. Never applied implicitly.
Bba renormalized(const Bba& b);

// Generalized belief and plausibility. Subset and intersection tests are
// model-aware, so under an all-exclusive model these agree with the
// classical power-set definitions. A must be non-empty under the model.
double belief(const Proposition& a, const Bba& b);
double plausibility(const Proposition& a, const Bba& b);

}  // namespace dsmt
