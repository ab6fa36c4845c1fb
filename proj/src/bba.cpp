#include "dsmt/bba.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dsmt {

Bba vacuous(std::shared_ptr<const Model> model) {
  Bba b;
  b.model = std::move(model);
  b.masses[b.model->total_ignorance()] = 1.0;
  return b;
}

BbaCheck validate(const Bba& b) {
  BbaCheck check;
  check.canonical.model = b.model;
  check.canonical.unnormalized = b.unnormalized;
  if (!b.model) {
    check.violations.push_back("bba has no model");
    return check;
  }
  const Model& m = *b.model;
  double sum = 0.0;
  for (const auto& [p, v] : b.masses) {
    std::string name = format(p, m.frame());
    if (!(v >= 0.0) || v > 1.0 + kMassTolerance) {
      std::ostringstream os;
      os << "mass " << v << " on '" << name << "' outside [0,1]";
      check.violations.push_back(os.str());
      continue;
    }
    sum += v;
    if (p.is_empty()) {
      if (v > kMassTolerance && !b.unnormalized)
        check.violations.push_back("mass on the empty proposition");
      if (v > 0.0) check.canonical.masses[p] += v;
      continue;
    }
    Proposition r = m.reduce(p);
    if (r.is_empty()) {
      if (v > kMassTolerance)
        check.violations.push_back("mass on empty proposition '" + name + "'");
      continue;
    }
    if (!(r == p))
      check.warnings.push_back("mass on '" + name + "' re-keyed to '" + format(r, m.frame()) +
                               "'");
    if (v > 0.0) check.canonical.masses[r] += v;
  }
  if (!b.unnormalized && std::abs(sum - 1.0) > kMassTolerance) {
    std::ostringstream os;
    os << "sum=" << sum;
    check.violations.push_back(os.str());
  }
  return check;
}

Bba renormalized(const Bba& b) {
  double sum = 0.0;
  for (const auto& [p, v] : b.masses)
    if (!p.is_empty()) sum += v;
  if (sum <= 0.0) throw std::invalid_argument("renormalized: no mass on non-empty propositions");
  Bba out;
  out.model = b.model;
  for (const auto& [p, v] : b.masses)
    if (!p.is_empty() && v > 0.0) out.masses[p] = v / sum;
  return out;
}

double belief(const Proposition& a, const Bba& b) {
  if (b.model->is_empty(a)) throw std::invalid_argument("belief: empty proposition");
  double sum = 0.0;
  for (const auto& [p, v] : b.masses)
    if (!b.model->is_empty(p) && b.model->subset(p, a)) sum += v;
  return sum;
}

double plausibility(const Proposition& a, const Bba& b) {
  if (b.model->is_empty(a)) throw std::invalid_argument("plausibility: empty proposition");
  double sum = 0.0;
  for (const auto& [p, v] : b.masses)
    if (b.model->intersects(p, a)) sum += v;
  return sum;
}

}  // namespace dsmt
