#include "dsmt/qualitative.hpp"

#include <numeric>
#include <stdexcept>

#include "routing.hpp"

namespace dsmt {

Label qadd(Label a, Label b, const LabelScale& scale) {
  int sum = a.index + b.index;
  return Label{sum < scale.top() ? sum : scale.top()};
}

Label qmul(Label a, Label b) { return Label{a.index < b.index ? a.index : b.index}; }

Label qsub(Label a, Label b) { return Label{a.index >= b.index ? a.index - b.index : 0}; }

std::string label_name(Label a) { return "L" + std::to_string(a.index); }

Label parse_label(std::string_view text, const LabelScale& scale) {
  if (text.size() < 2 || text[0] != 'L')
    throw std::invalid_argument("label must look like 'L<k>': '" + std::string(text) + "'");
  int idx = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("label must look like 'L<k>': '" + std::string(text) + "'");
    idx = idx * 10 + (c - '0');
  }
  if (idx > scale.top())
    throw std::invalid_argument("label " + std::string(text) + " exceeds the scale top L" +
                                std::to_string(scale.top()));
  return Label{idx};
}

namespace {

using detail::Route;
using detail::Section;

using Core = std::vector<std::pair<Proposition, Label>>;

struct QSetup {
  std::vector<Core> cores;
  LabelScale scale;
};

QSetup cores_of(const std::vector<QBba>& sources, const Model& m) {
  if (sources.size() < 2)
    throw std::invalid_argument("qualitative fusion: at least two sources required");
  QSetup setup;
  setup.scale = sources.front().scale;
  for (const auto& s : sources) {
    if (!s.model || !(s.model->frame() == m.frame()))
      throw std::invalid_argument("qualitative fusion: source frame differs from the model's");
    if (s.scale.m != setup.scale.m)
      throw std::invalid_argument("qualitative fusion: sources use different label scales");
    setup.cores.push_back(detail::aligned_core(
        s.masses, m, [&](Label a, Label b) { return qadd(a, b, setup.scale); }));
  }
  return setup;
}

QFusionReport label_combine(const std::vector<QBba>& sources,
                            std::shared_ptr<const Model> model, bool hybrid) {
  const Model& m = *model;
  QSetup setup = cores_of(sources, m);
  QFusionReport report;
  report.result.model = std::move(model);
  report.result.scale = setup.scale;

  std::vector<const Proposition*> keys(setup.cores.size());
  detail::for_each_tuple(setup.cores, [&](const std::vector<std::size_t>& idx) {
    Label product{setup.scale.top()};  // multiplicative unit
    for (std::size_t i = 0; i < setup.cores.size(); ++i) {
      keys[i] = &setup.cores[i][idx[i]].first;
      product = qmul(product, setup.cores[i][idx[i]].second);
    }
    Route route = detail::classify(keys, m);
    auto credit = [&](const Proposition& p) {
      auto [it, inserted] = report.result.masses.emplace(p, product);
      if (!inserted) it->second = qadd(it->second, product, setup.scale);
    };
    if (route.section == Section::Meet) {
      credit(route.target);
    } else if (hybrid) {
      credit(route.target);
      report.conflict = qadd(report.conflict, product, setup.scale);
    } else {
      report.conflict = qadd(report.conflict, product, setup.scale);
    }
  });
  return report;
}

}  // namespace

QFusionReport qcr(const std::vector<QBba>& sources) {
  if (sources.empty()) throw std::invalid_argument("qualitative fusion: no sources");
  return label_combine(sources, sources.front().model, false);
}

QFusionReport qdsmc(const std::vector<QBba>& sources) {
  if (sources.empty()) throw std::invalid_argument("qualitative fusion: no sources");
  return label_combine(sources, Model::make_free(sources.front().model->frame()), false);
}

QFusionReport qdsmh(const std::vector<QBba>& sources, std::shared_ptr<const Model> model) {
  return label_combine(sources, std::move(model), true);
}

namespace {

// Exact fraction of label indices; values stay tiny.
struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction plus(long long n, long long d) const {
    Fraction r{num * d + n * den, den * d};
    long long g = std::gcd(r.num < 0 ? -r.num : r.num, r.den);
    if (g > 1) {
      r.num /= g;
      r.den /= g;
    }
    return r;
  }

  // Half away from zero; only non-negative values occur here.
  int rounded() const { return static_cast<int>((2 * num + den) / (2 * den)); }
};

}  // namespace

QFusionReport qpcr5_two(const QBba& q1, const QBba& q2, std::shared_ptr<const Model> model) {
  const Model& m = *model;
  QFusionReport report = label_combine({q1, q2}, model, false);
  const LabelScale scale = report.result.scale;

  QSetup setup = cores_of({q1, q2}, m);
  std::map<Proposition, Fraction> transfer;
  for (const auto& [x, lx] : setup.cores[0]) {
    for (const auto& [y, ly] : setup.cores[1]) {
      if (!m.is_empty(meet(x, y))) continue;
      int a = lx.index, b = ly.index;
      if (a + b == 0) continue;  // no committed mass to trace
      int p = qmul(lx, ly).index;
      if (!m.is_empty(x)) transfer[x] = transfer[x].plus(static_cast<long long>(a) * p, a + b);
      if (!m.is_empty(y)) transfer[y] = transfer[y].plus(static_cast<long long>(b) * p, a + b);
    }
  }
  for (const auto& [p, frac] : transfer) {
    Label add{frac.rounded()};
    auto [it, inserted] = report.result.masses.emplace(p, add);
    if (!inserted) it->second = qadd(it->second, add, scale);
  }
  return report;
}

QBba quasi_normalize(const QBba& q, Label c) {
  QBba out;
  out.model = q.model;
  out.scale = q.scale;
  for (const auto& [p, l] : q.masses) out.masses[p] = qsub(l, c);
  return out;
}

}  // namespace dsmt
