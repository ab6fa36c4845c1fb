#include "dsmt/fusion.hpp"

#include <map>
#include <stdexcept>

#include "routing.hpp"

namespace dsmt {

namespace {

using detail::Route;
using detail::Section;

using Core = std::vector<std::pair<Proposition, double>>;

std::vector<Core> cores_of(const std::vector<Bba>& sources, const Model& m,
                           std::size_t min_sources = 2) {
  if (sources.size() < min_sources)
    throw std::invalid_argument("fusion: at least two sources required");
  std::vector<Core> cores;
  cores.reserve(sources.size());
  for (const auto& s : sources) {
    if (!s.model || !(s.model->frame() == m.frame()))
      throw std::invalid_argument("fusion: source frame differs from the fusion model's frame");
    Core core;
    for (auto& [p, v] :
         detail::aligned_core(s.masses, m, [](double a, double b) { return a + b; }))
      if (v > 0.0) core.emplace_back(std::move(p), v);
    cores.push_back(std::move(core));
  }
  return cores;
}

// Runs fn(route, keys, product) over every tuple of focal elements.
template <typename Fn>
void walk(const std::vector<Core>& cores, const Model& m, Fn&& fn) {
  std::vector<const Proposition*> keys(cores.size());
  detail::for_each_tuple(cores, [&](const std::vector<std::size_t>& idx) {
    double product = 1.0;
    for (std::size_t i = 0; i < cores.size(); ++i) {
      keys[i] = &cores[i][idx[i]].first;
      product *= cores[i][idx[i]].second;
    }
    fn(detail::classify(keys, m), keys, product);
  });
}

void record_conflict(FusionReport& report, const std::vector<const Proposition*>& keys,
                     double product) {
  report.total_conflict += product;
  std::vector<Proposition> tuple;
  tuple.reserve(keys.size());
  for (const Proposition* k : keys) tuple.push_back(*k);
  report.partial_conflicts.emplace_back(std::move(tuple), product);
}

FusionReport fresh_report(Rule rule, std::shared_ptr<const Model> model) {
  FusionReport report;
  report.rule = rule;
  report.result.model = std::move(model);
  return report;
}

void drop_zero_masses(Bba& b) {
  for (auto it = b.masses.begin(); it != b.masses.end();)
    it = (it->second == 0.0) ? b.masses.erase(it) : std::next(it);
}

}  // namespace

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::Conjunctive: return "conjunctive";
    case Rule::DsmHybrid: return "dsmh";
    case Rule::Pcr5: return "pcr5";
    case Rule::Dempster: return "dempster";
    case Rule::Smets: return "smets";
    case Rule::Yager: return "yager";
    case Rule::DuboisPrade: return "dubois-prade";
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (Rule r : {Rule::Conjunctive, Rule::DsmHybrid, Rule::Pcr5, Rule::Dempster, Rule::Smets,
                 Rule::Yager, Rule::DuboisPrade})
    if (name == rule_name(r)) return r;
  return std::nullopt;
}

FusionReport conjunctive(const std::vector<Bba>& sources, std::shared_ptr<const Model> model) {
  FusionReport report = fresh_report(Rule::Conjunctive, model);
  walk(cores_of(sources, *model), *model, [&](const Route& route,
                                              const std::vector<const Proposition*>& keys,
                                              double product) {
    if (route.section == Section::Meet)
      report.result.masses[route.target] += product;
    else
      record_conflict(report, keys, product);
  });
  report.result.unnormalized = report.total_conflict > kMassTolerance;
  return report;
}

FusionReport dsm_hybrid(const std::vector<Bba>& sources, std::shared_ptr<const Model> model) {
  FusionReport report = fresh_report(Rule::DsmHybrid, model);
  walk(cores_of(sources, *model), *model, [&](const Route& route,
                                              const std::vector<const Proposition*>& keys,
                                              double product) {
    report.result.masses[route.target] += product;
    if (route.section != Section::Meet) record_conflict(report, keys, product);
  });
  return report;
}

FusionReport dempster(const std::vector<Bba>& sources, std::shared_ptr<const Model> model) {
  FusionReport report = fresh_report(Rule::Dempster, model);
  walk(cores_of(sources, *model), *model, [&](const Route& route,
                                              const std::vector<const Proposition*>& keys,
                                              double product) {
    if (route.section == Section::Meet)
      report.result.masses[route.target] += product;
    else
      record_conflict(report, keys, product);
  });
  double open = 1.0 - report.total_conflict;
  if (open <= kMassTolerance)
    throw RuleUndefined("dempster: total conflict is 1, normalization undefined (0/0)");
  for (auto& [p, v] : report.result.masses) v /= open;
  return report;
}

FusionReport smets(const std::vector<Bba>& sources, std::shared_ptr<const Model> model) {
  FusionReport report = fresh_report(Rule::Smets, model);
  walk(cores_of(sources, *model), *model, [&](const Route& route,
                                              const std::vector<const Proposition*>& keys,
                                              double product) {
    if (route.section == Section::Meet)
      report.result.masses[route.target] += product;
    else
      record_conflict(report, keys, product);
  });
  if (report.total_conflict > 0.0)
    report.result.masses[Proposition::empty()] += report.total_conflict;
  report.result.unnormalized = true;
  return report;
}

FusionReport yager(const std::vector<Bba>& sources, std::shared_ptr<const Model> model) {
  FusionReport report = fresh_report(Rule::Yager, model);
  walk(cores_of(sources, *model), *model, [&](const Route& route,
                                              const std::vector<const Proposition*>& keys,
                                              double product) {
    if (route.section == Section::Meet)
      report.result.masses[route.target] += product;
    else
      record_conflict(report, keys, product);
  });
  if (report.total_conflict > 0.0)
    report.result.masses[model->total_ignorance()] += report.total_conflict;
  return report;
}

FusionReport dubois_prade(const Bba& b1, const Bba& b2, std::shared_ptr<const Model> model) {
  FusionReport report = fresh_report(Rule::DuboisPrade, model);
  walk(cores_of({b1, b2}, *model), *model, [&](const Route& route,
                                               const std::vector<const Proposition*>& keys,
                                               double product) {
    if (route.section == Section::Meet) {
      report.result.masses[route.target] += product;
      return;
    }
    record_conflict(report, keys, product);
    Proposition target = model->reduce(join(*keys[0], *keys[1]));
    if (target.is_empty())
      report.mass_deficit += product;
    else
      report.result.masses[target] += product;
  });
  report.result.unnormalized = report.mass_deficit > kMassTolerance;
  return report;
}

namespace {

// Splits a conflicting tuple's product over the distinct propositions in
// it, proportionally to the product of the masses each one contributed.
// Propositions empty under the model take no share; a tuple with no
// surviving member loses its product to the deficit.
void redistribute(FusionReport& report, const Model& m,
                  const std::vector<const Proposition*>& keys,
                  const std::vector<double>& masses, double product) {
  std::map<Proposition, double> weight;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, inserted] = weight.emplace(*keys[i], masses[i]);
    if (!inserted) it->second *= masses[i];
  }
  double denom = 0.0;
  std::size_t survivors = 0;
  const Proposition* last_alive = nullptr;
  for (const auto& [p, w] : weight)
    if (!m.is_empty(p)) {
      denom += w;
      ++survivors;
      last_alive = &p;
    }
  if (survivors == 0) {
    report.mass_deficit += product;
    return;
  }
  if (survivors == 1) {
    report.result.masses[*last_alive] += product;
    return;
  }
  for (const auto& [p, w] : weight)
    if (!m.is_empty(p)) report.result.masses[p] += product * w / denom;
}

}  // namespace

FusionReport pcr5(const std::vector<Bba>& sources, std::shared_ptr<const Model> model) {
  FusionReport report = fresh_report(Rule::Pcr5, model);
  std::vector<Core> cores = cores_of(sources, *model);
  std::vector<double> masses(cores.size());
  std::vector<const Proposition*> keys(cores.size());
  detail::for_each_tuple(cores, [&](const std::vector<std::size_t>& idx) {
    double product = 1.0;
    for (std::size_t i = 0; i < cores.size(); ++i) {
      keys[i] = &cores[i][idx[i]].first;
      masses[i] = cores[i][idx[i]].second;
      product *= masses[i];
    }
    Route route = detail::classify(keys, *model);
    if (route.section == Section::Meet) {
      report.result.masses[route.target] += product;
    } else {
      record_conflict(report, keys, product);
      redistribute(report, *model, keys, masses, product);
    }
  });
  report.result.unnormalized = report.mass_deficit > kMassTolerance;
  return report;
}

FusionReport pcr5_two(const Bba& b1, const Bba& b2, std::shared_ptr<const Model> model) {
  FusionReport report = fresh_report(Rule::Pcr5, model);
  std::vector<Core> cores = cores_of({b1, b2}, *model);
  for (const auto& [x, mx] : cores[0]) {
    for (const auto& [y, my] : cores[1]) {
      double product = mx * my;
      std::vector<const Proposition*> keys{&x, &y};
      Route route = detail::classify(keys, *model);
      if (route.section == Section::Meet) {
        report.result.masses[route.target] += product;
        continue;
      }
      record_conflict(report, keys, product);
      bool x_alive = !model->is_empty(x);
      bool y_alive = !model->is_empty(y);
      if (x_alive && y_alive) {
        // m1(X)^2 m2(Y) / (m1(X)+m2(Y)) to X, the mirrored fraction to Y,
        // written as product-proportional shares.
        double denom = mx + my;
        report.result.masses[x] += product * mx / denom;
        report.result.masses[y] += product * my / denom;
      } else if (x_alive) {
        report.result.masses[x] += product;
      } else if (y_alive) {
        report.result.masses[y] += product;
      } else {
        report.mass_deficit += product;
      }
    }
  }
  report.result.unnormalized = report.mass_deficit > kMassTolerance;
  return report;
}

FusionReport fuse(Rule rule, const std::vector<Bba>& sources,
                  std::shared_ptr<const Model> model) {
  switch (rule) {
    case Rule::Conjunctive: return conjunctive(sources, std::move(model));
    case Rule::DsmHybrid: return dsm_hybrid(sources, std::move(model));
    case Rule::Pcr5: return pcr5(sources, std::move(model));
    case Rule::Dempster: return dempster(sources, std::move(model));
    case Rule::Smets: return smets(sources, std::move(model));
    case Rule::Yager: return yager(sources, std::move(model));
    case Rule::DuboisPrade:
      if (sources.size() != 2)
        throw std::invalid_argument("dubois-prade: exactly two sources required");
      return dubois_prade(sources[0], sources[1], std::move(model));
  }
  throw std::invalid_argument("fuse: unknown rule");
}

std::vector<FusionReport> sequential(Rule rule, const std::vector<Bba>& sources,
                                     std::shared_ptr<const Model> model) {
  if (sources.size() < 2)
    throw std::invalid_argument("sequential: at least two sources required");
  std::vector<FusionReport> steps;
  Bba acc = sources[0];
  for (std::size_t i = 1; i < sources.size(); ++i) {
    FusionReport step = fuse(rule, {acc, sources[i]}, model);
    drop_zero_masses(step.result);
    acc = step.result;
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace dsmt
