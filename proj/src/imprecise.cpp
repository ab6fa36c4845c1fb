#include "dsmt/imprecise.hpp"

#include <cmath>
#include <stdexcept>

#include "routing.hpp"

namespace dsmt {

namespace {

using detail::Route;
using detail::Section;

using Core = std::vector<std::pair<Proposition, IntervalSet>>;

std::vector<Core> cores_of(const std::vector<ImpreciseBba>& sources, const Model& m) {
  if (sources.size() < 2)
    throw std::invalid_argument("imprecise fusion: at least two sources required");
  std::vector<Core> cores;
  for (const auto& s : sources) {
    if (!s.model || !(s.model->frame() == m.frame()))
      throw std::invalid_argument("imprecise fusion: source frame differs from the model's");
    cores.push_back(detail::aligned_core(
        s.masses, m, [](const IntervalSet& a, const IntervalSet& b) { return box_add(a, b); }));
  }
  return cores;
}

ImpreciseBba combine(const std::vector<ImpreciseBba>& sources,
                     std::shared_ptr<const Model> model) {
  const Model& m = *model;
  std::vector<Core> cores = cores_of(sources, m);
  std::map<Proposition, IntervalSet> acc;
  std::vector<const Proposition*> keys(cores.size());
  detail::for_each_tuple(cores, [&](const std::vector<std::size_t>& idx) {
    IntervalSet product = cores[0][idx[0]].second;
    keys[0] = &cores[0][idx[0]].first;
    for (std::size_t i = 1; i < cores.size(); ++i) {
      keys[i] = &cores[i][idx[i]].first;
      product = box_mul(product, cores[i][idx[i]].second);
    }
    Route route = detail::classify(keys, m);
    auto [it, inserted] = acc.emplace(route.target, product);
    if (!inserted) it->second = box_add(it->second, product);
  });
  ImpreciseBba out;
  out.model = std::move(model);
  for (auto& [p, s] : acc) out.masses[p] = s.clipped(0.0, 1.0);
  return out;
}

}  // namespace

IntervalSet imprecise_mass(const ImpreciseBba& b, const Proposition& p) {
  auto it = b.masses.find(p);
  return it == b.masses.end() ? IntervalSet::point(0.0) : it->second;
}

ImpreciseBba imprecise_classic(const std::vector<ImpreciseBba>& sources) {
  if (sources.empty()) throw std::invalid_argument("imprecise fusion: no sources");
  return combine(sources, Model::make_free(sources.front().model->frame()));
}

ImpreciseBba imprecise_hybrid(const std::vector<ImpreciseBba>& sources,
                              std::shared_ptr<const Model> model) {
  return combine(sources, std::move(model));
}

Admissibility check_admissibility(const ImpreciseBba& b) {
  std::vector<std::pair<Proposition, IntervalSet>> focals(b.masses.begin(), b.masses.end());
  std::vector<IntervalSet> suffix(focals.size() + 1);
  suffix[focals.size()] = IntervalSet::point(0.0);
  for (std::size_t i = focals.size(); i-- > 0;)
    suffix[i] = box_add(focals[i].second, suffix[i + 1]);

  Admissibility out;
  if (!suffix[0].contains(1.0, 1e-12)) return out;

  // Greedy selection front to back: at each focal element the feasible
  // values are those from which the remaining sets can still reach the
  // remaining target (a 1e-9 band absorbs rounding from the set folds).
  double target = 1.0;
  std::map<Proposition, double> witness;
  for (std::size_t i = 0; i < focals.size(); ++i) {
    IntervalSet band = IntervalSet::interval(target - 1e-9, target + 1e-9);
    IntervalSet feasible = focals[i].second.intersect(box_sub(band, suffix[i + 1]));
    if (feasible.empty()) return out;

    double v = 0.0;
    bool picked = false;
    for (const auto& piece : focals[i].second.pieces())
      if (piece.lo_closed && feasible.contains(piece.lo, 1e-12)) {
        v = piece.lo;
        picked = true;
        break;
      }
    if (!picked) {
      const auto& first = feasible.pieces().front();
      v = (first.lo == first.hi) ? first.lo : (first.lo + first.hi) / 2.0;
    }
    witness[focals[i].first] = v;
    target -= v;
  }
  if (std::abs(target) > 1e-6) return out;
  out.admissible = true;
  out.witness = std::move(witness);
  return out;
}

}  // namespace dsmt
