#include "dsmt/pignistic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace dsmt {

namespace {

void fill_argmax(PignisticResult& r, const Model& m) {
  double best = -1.0;
  std::vector<Proposition> winners;
  for (std::size_t i = 0; i < m.frame().size(); ++i) {
    Proposition s = m.reduce(Proposition::singleton(i));
    if (s.is_empty()) continue;
    double p = r.values.at(s);
    if (p > best + 1e-12) {
      best = p;
      winners.assign(1, s);
    } else if (std::abs(p - best) <= 1e-12) {
      if (std::find(winners.begin(), winners.end(), s) == winners.end()) winners.push_back(s);
    }
  }
  r.argmax = std::move(winners);
}

}  // namespace

PignisticResult classic_pignistic(const Bba& b) {
  const Model& m = *b.model;
  std::size_t n = m.frame().size();

  // Focal elements as singleton index sets.
  std::vector<std::pair<std::uint32_t, double>> focals;
  for (const auto& [p, v] : b.masses) {
    if (p.is_empty() || v <= 0.0) continue;
    std::uint32_t set = 0;
    Proposition reduced = m.reduce(p);
    if (reduced.is_empty())
      throw std::invalid_argument("classic pignistic: mass on an empty proposition");
    for (Term t : reduced.terms()) {
      if (std::popcount(t) != 1)
        throw std::invalid_argument(
            "classic pignistic: focal element is not a union of singletons");
      set |= t;
    }
    focals.emplace_back(set, v);
  }

  PignisticResult out;
  for (std::uint32_t a = 1; a < (std::uint32_t{1} << n); ++a) {
    double p = 0.0;
    for (const auto& [x, v] : focals)
      p += v * std::popcount(x & a) / std::popcount(x);
    std::vector<Term> singles;
    for (std::size_t i = 0; i < n; ++i)
      if (a & (std::uint32_t{1} << i)) singles.push_back(Term{1} << i);
    Proposition prop = m.reduce(Proposition::from_terms(std::move(singles)));
    if (!prop.is_empty()) out.values[prop] = p;
  }
  fill_argmax(out, m);
  return out;
}

PignisticResult generalized_pignistic(const Bba& b) {
  const Model& m = *b.model;

  std::vector<std::pair<std::uint64_t, double>> focals;  // regions, mass
  for (const auto& [p, v] : b.masses) {
    if (p.is_empty() || v <= 0.0) continue;
    std::uint64_t r = m.regions(p);
    if (r == 0) throw std::invalid_argument("generalized pignistic: mass on empty proposition");
    focals.emplace_back(r, v);
  }

  PignisticResult out;
  for (const auto& a : surviving_elements(m)) {
    if (a.is_empty()) continue;
    std::uint64_t ra = m.regions(a);
    double p = 0.0;
    for (const auto& [rx, v] : focals)
      p += v * std::popcount(rx & ra) / std::popcount(rx);
    out.values[a] = p;
  }
  fill_argmax(out, m);
  return out;
}

}  // namespace dsmt
