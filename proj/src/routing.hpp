#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "dsmt/model.hpp"
#include "dsmt/proposition.hpp"

namespace dsmt::detail {

// Destination of one tuple of focal elements under a model. A tuple whose
// conjunction survives carries consensus mass; a tuple made entirely of
// empty propositions is degenerate and its mass belongs to the union of the
// hypotheses its members were built from (or to total ignorance when even
// that union is empty); any other empty conjunction is a conflict whose
// mass belongs to the reduced disjunction of the tuple.
enum class Section { Meet, AllEmpty, EmptyMeet };

struct Route {
  Section section;
  Proposition target;  // reduced and non-empty
};

inline Route classify(const std::vector<const Proposition*>& tuple, const Model& m) {
  Proposition conj = *tuple.front();
  for (std::size_t i = 1; i < tuple.size(); ++i) conj = meet(conj, *tuple[i]);
  if (!m.is_empty(conj)) return {Section::Meet, m.reduce(conj)};

  bool all_empty = true;
  for (const Proposition* p : tuple)
    if (!m.is_empty(*p)) {
      all_empty = false;
      break;
    }
  if (all_empty) {
    Proposition u = Proposition::empty();
    for (const Proposition* p : tuple) u = join(u, hypothesis_union(*p));
    if (!m.is_empty(u)) return {Section::AllEmpty, m.reduce(u)};
    return {Section::AllEmpty, m.total_ignorance()};
  }

  Proposition disj = Proposition::empty();
  for (const Proposition* p : tuple) disj = join(disj, *p);
  return {Section::EmptyMeet, m.reduce(disj)};
}

// Aligns a mass map with the fusion model: keys that stay non-empty are
// replaced by their reduced form (collisions combined with `merge`), while
// keys empty under the model are kept verbatim so degenerate routing still
// sees what they were built from.
template <typename V, typename MergeFn>
std::vector<std::pair<Proposition, V>> aligned_core(const std::map<Proposition, V>& masses,
                                                    const Model& m, MergeFn merge) {
  std::map<Proposition, V> acc;
  for (const auto& [p, v] : masses) {
    Proposition key = m.is_empty(p) ? p : m.reduce(p);
    auto [it, inserted] = acc.emplace(std::move(key), v);
    if (!inserted) it->second = merge(it->second, v);
  }
  return {acc.begin(), acc.end()};
}

// Odometer over the cartesian product of the cores, last index varying
// fastest. fn receives one index per source. Does nothing when any core is
// empty.
template <typename V, typename Fn>
void for_each_tuple(const std::vector<std::vector<std::pair<Proposition, V>>>& cores, Fn&& fn) {
  for (const auto& c : cores)
    if (c.empty()) return;
  std::vector<std::size_t> idx(cores.size(), 0);
  for (;;) {
    fn(idx);
    std::size_t k = idx.size();
    while (k > 0 && ++idx[k - 1] == cores[k - 1].size()) {
      idx[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
}

}  // namespace dsmt::detail
