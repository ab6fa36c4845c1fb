#pragma once

#include <map>
#include <memory>
#include <vector>

#include "dsmt/interval_set.hpp"
#include "dsmt/model.hpp"
#include "dsmt/proposition.hpp"

namespace dsmt {

// Belief assignment with set-valued masses. Admissible when some precise
// selection (one value per focal element) sums to one.
struct ImpreciseBba {
  std::shared_ptr<const Model> model;
  std::map<Proposition, IntervalSet> masses;
};

// Mass of p; the point {0} when p is not focal.
IntervalSet imprecise_mass(const ImpreciseBba& b, const Proposition& p);

// Conjunctive consensus with set addition/multiplication in place of + and
// x, computed over the free lattice of the sources' frame. Reduces to the
// precise conjunctive rule when every mass is a point.
ImpreciseBba imprecise_classic(const std::vector<ImpreciseBba>& sources);

// Same with the hybrid routing of conflicting and degenerate tuples.
ImpreciseBba imprecise_hybrid(const std::vector<ImpreciseBba>& sources,
                              std::shared_ptr<const Model> model);

struct Admissibility {
  bool admissible = false;
  std::map<Proposition, double> witness;  // empty when not admissible
};

// Folds set addition over all masses and tests membership of 1 (with a
// 1e-12 slack for accumulated rounding), then extracts a witness selection
// by a greedy walk that prefers the infimum of an original piece whenever
// one is feasible.
Admissibility check_admissibility(const ImpreciseBba& b);

}  // namespace dsmt
