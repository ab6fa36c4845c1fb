#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dsmt/model.hpp"
#include "dsmt/proposition.hpp"

namespace dsmt {

// Ordered linguistic scale L0 < L1 < ... < L(m+1) with m interior labels.
// L0 plays the role of 0 and L(m+1) the role of 1.
struct LabelScale {
  int m = 2;
  int top() const { return m + 1; }
};

struct Label {
  int index = 0;
  friend bool operator==(const Label&, const Label&) = default;
  friend bool operator<(const Label& a, const Label& b) { return a.index < b.index; }
};

// Label arithmetic: addition saturates at the top label, multiplication is
// the minimum, subtraction floors at L0. (L, +, x) is a commutative
// bisemigroup with units L0 and L(m+1).
Label qadd(Label a, Label b, const LabelScale& scale);
Label qmul(Label a, Label b);
Label qsub(Label a, Label b);

std::string label_name(Label a);                                  // "L3"
Label parse_label(std::string_view text, const LabelScale& scale);  // throws

// Qualitative belief assignment. There is no normalization constraint;
// quasi-normalization (label subtraction) stands in for it.
struct QBba {
  std::shared_ptr<const Model> model;
  LabelScale scale;
  std::map<Proposition, Label> masses;
};

struct QFusionReport {
  QBba result;
  // Total label mass of the conflicting tuples. Reported, never assigned
  // to the empty proposition.
  Label conflict{0};
};

// Conjunctive consensus in label arithmetic over the sources' model.
QFusionReport qcr(const std::vector<QBba>& sources);

// Conjunctive consensus over the free lattice (conflicts land on the
// surviving intersections, so the conflict label stays L0).
QFusionReport qdsmc(const std::vector<QBba>& sources);

// Hybrid routing (consensus, degenerate, conflict) in label arithmetic.
QFusionReport qdsmh(const std::vector<QBba>& sources, std::shared_ptr<const Model> model);

// Approximate proportional conflict redistribution for two sources. Each
// conflicting pair's product label is split as exact rational label
// indices, proportionally to the two committed label indices (an even
// split when both are L0-free equal; discarded when both are L0); the
// accumulated fractional index per proposition is rounded half away from
// zero and added to the conjunctive result.
QFusionReport qpcr5_two(const QBba& q1, const QBba& q2, std::shared_ptr<const Model> model);

// Subtracts c from every focal label.
QBba quasi_normalize(const QBba& q, Label c);

}  // namespace dsmt
