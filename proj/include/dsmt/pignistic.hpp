#pragma once

#include <map>
#include <vector>

#include "dsmt/bba.hpp"

namespace dsmt {

struct PignisticResult {
  // Probability of every surviving non-empty proposition.
  std::map<Proposition, double> values;
  // All singleton maximizers (ties reported together), canonical order.
  std::vector<Proposition> argmax;
};

// Betting probability over the power set: P{A} = sum |X n A| / |X| m(X)
// with classical cardinalities. The bba must live on an all-exclusive
// model (every focal element a union of singletons). P{empty} is 0.
PignisticResult classic_pignistic(const Bba& b);

// Same construction with part counts in place of classical cardinalities,
// valid for any model; agrees with classic_pignistic on all-exclusive
// models.
PignisticResult generalized_pignistic(const Bba& b);

}  // namespace dsmt
