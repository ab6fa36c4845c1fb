// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in place; printed-table
// values are checked at 5e-7 unless they are exact fractions, labels or
// interval endpoints, which are checked exactly.

#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dsmt/fusion.hpp"
#include "dsmt/imprecise.hpp"
#include "dsmt/pignistic.hpp"
#include "dsmt/qualitative.hpp"

using namespace dsmt;

namespace {

constexpr double kGolden = 5e-7;
constexpr double kConservation = 1e-9;

struct Checker {
  int checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }

  void near(double got, double want, double tol, const std::string& what) {
    ++checks;
    if (!(std::abs(got - want) <= tol)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want << " (tol " << tol << ")";
      failures.push_back(os.str());
    }
  }
};

int g_failed_criteria = 0;

void criterion(int number, const std::string& title,
               const std::function<void(Checker&)>& body) {
  Checker c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  if (c.failures.empty()) {
    std::cout << "[PASS] criterion " << number << ": " << title << " (" << c.checks
              << " checks)\n";
  } else {
    ++g_failed_criteria;
    std::cout << "[FAIL] criterion " << number << ": " << title << " -- "
              << c.failures.size() << " of " << c.checks << " checks failed\n";
    for (const auto& f : c.failures) std::cout << "       " << f << "\n";
  }
}

Frame frame(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("t" + std::to_string(i + 1));
  return Frame{names};
}

Bba make_bba(const Frame& f, std::initializer_list<std::pair<const char*, double>> masses) {
  Bba b;
  b.model = Model::make_free(f);
  for (const auto& [expr, v] : masses) b.masses[parse(expr, f)] += v;
  return b;
}

double mass(const FusionReport& r, const char* expr) {
  Proposition p = parse(expr, r.result.model->frame());
  auto it = r.result.masses.find(p);
  return it == r.result.masses.end() ? 0.0 : it->second;
}

double sum_of(const Bba& b) {
  double sum = 0.0;
  for (const auto& [p, v] : b.masses) sum += v;
  return sum;
}

std::shared_ptr<const Model> police_model() {
  Frame f = frame(3);
  auto constraints = Model::make_shafer(f)->constraints();
  constraints.push_back(parse("t3", f));
  return Model::make_hybrid(f, constraints);
}

Bba random_bba(const std::shared_ptr<const Model>& model,
               const std::vector<Proposition>& elements, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  std::uniform_int_distribution<int> how_many(1, 4);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::map<Proposition, double> masses;
  int k = how_many(rng);
  for (int i = 0; i < k; ++i) masses[elements[pick(rng)]] += weight(rng);
  double sum = 0.0;
  for (auto& [p, v] : masses) sum += v;
  Bba b;
  b.model = model;
  for (auto& [p, v] : masses) b.masses[p] = v / sum;
  return b;
}

// ---------------------------------------------------------------------

void criterion1(Checker& c) {
  std::vector<std::size_t> expected{1, 2, 5, 19, 167, 7580};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    std::size_t got = generate(frame(n)).size();
    c.expect(got == expected[n], "lattice size for n=" + std::to_string(n) + " is " +
                                     std::to_string(got) + ", want " +
                                     std::to_string(expected[n]));
  }

  Frame f = frame(3);
  std::vector<const char*> listed{
      "empty",         "t1 & t2 & t3",  "t1 & t2",       "t1 & t3",
      "t2 & t3",       "(t1 | t2) & t3", "(t1 | t3) & t2", "(t2 | t3) & t1",
      "(t1 & t2) | (t1 & t3) | (t2 & t3)", "t1",  "t2",  "t3",
      "(t1 & t2) | t3", "(t1 & t3) | t2", "(t2 & t3) | t1",
      "t1 | t2",       "t1 | t3",       "t2 | t3",       "t1 | t2 | t3"};
  std::set<Proposition> expected_set;
  for (const char* s : listed) expected_set.insert(parse(s, f));
  std::vector<Proposition> got = generate(f);
  c.expect(std::set<Proposition>(got.begin(), got.end()) == expected_set,
           "the 19-element enumeration does not match the expected set");
}

void criterion2(Checker& c) {
  Frame f = frame(3);
  auto m = Model::make_hybrid(f, {parse("t1 & t3", f), parse("t2 & t3", f)});
  std::vector<std::pair<const char*, std::size_t>> table{
      {"empty", 0}, {"t1 & t2", 1}, {"t3", 1},      {"t1", 2},      {"t2", 2},
      {"t1 | t2", 3}, {"t1 | t3", 3}, {"t2 | t3", 3}, {"t1 | t2 | t3", 4}};
  std::vector<Proposition> alive = surviving_elements(*m);
  // The nine tabulated rows appear with exactly these part counts and in
  // this order. The surviving lattice holds one further element,
  // (t1 & t2) | t3 with two parts, which the nine-row table does not list.
  std::size_t at = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    Proposition want = parse(table[i].first, f);
    while (at < alive.size() && !(alive[at] == want)) ++at;
    c.expect(at < alive.size(), std::string("row ") + table[i].first + " present in order");
    if (at >= alive.size()) break;
    c.expect(m->cardinality(alive[at]) == table[i].second,
             std::string("row ") + table[i].first + " cardinality");
  }
  c.expect(alive.size() == 10, "surviving lattice has the nine rows plus (t1 & t2) | t3");
}

void criterion3(Checker& c) {
  Frame f = frame(4);
  auto free4 = Model::make_free(f);
  auto shafer4 = Model::make_shafer(f);
  std::vector<Bba> sources{make_bba(f, {{"t1", 0.6}, {"t3", 0.4}}),
                           make_bba(f, {{"t2", 0.2}, {"t4", 0.8}})};

  bool threw = false;
  try {
    dempster(sources, shafer4);
  } catch (const RuleUndefined&) {
    threw = true;
  }
  c.expect(threw, "normalized rule should be undefined at total conflict");

  FusionReport classic = conjunctive(sources, free4);
  c.near(mass(classic, "t1 & t2"), 0.12, kGolden, "classic t1&t2");
  c.near(mass(classic, "t1 & t4"), 0.48, kGolden, "classic t1&t4");
  c.near(mass(classic, "t2 & t3"), 0.08, kGolden, "classic t2&t3");
  c.near(mass(classic, "t3 & t4"), 0.32, kGolden, "classic t3&t4");

  FusionReport hybrid = dsm_hybrid(sources, shafer4);
  c.near(mass(hybrid, "t1 | t2"), 0.12, kGolden, "hybrid t1|t2");
  c.near(mass(hybrid, "t1 | t4"), 0.48, kGolden, "hybrid t1|t4");
  c.near(mass(hybrid, "t2 | t3"), 0.08, kGolden, "hybrid t2|t3");
  c.near(mass(hybrid, "t3 | t4"), 0.32, kGolden, "hybrid t3|t4");
}

void criterion4(Checker& c) {
  Frame f = frame(3);
  auto free3 = Model::make_free(f);
  auto shafer3 = Model::make_shafer(f);
  auto sources_for = [&](double e1, double e2) {
    return std::vector<Bba>{make_bba(f, {{"t1", 1 - e1}, {"t3", e1}}),
                            make_bba(f, {{"t2", 1 - e2}, {"t3", e2}})};
  };

  double e1 = 0.1, e2 = 0.1;
  FusionReport classic = conjunctive(sources_for(e1, e2), free3);
  c.near(mass(classic, "t3"), e1 * e2, kGolden, "classic t3");
  c.near(mass(classic, "t1 & t2"), (1 - e1) * (1 - e2), kGolden, "classic t1&t2");
  c.near(mass(classic, "t1 & t3"), (1 - e1) * e2, kGolden, "classic t1&t3");
  c.near(mass(classic, "t2 & t3"), (1 - e2) * e1, kGolden, "classic t2&t3");

  FusionReport half = dsm_hybrid(sources_for(0.5, 0.5), shafer3);
  for (const char* expr : {"t3", "t1 | t2", "t1 | t3", "t2 | t3"})
    c.near(mass(half, expr), 0.25, kGolden, std::string("hybrid(1/2) ") + expr);

  for (double e : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    FusionReport ds = dempster(sources_for(e, e), shafer3);
    c.near(mass(ds, "t3"), 1.0, kGolden, "normalized t3 at eps=" + std::to_string(e));
  }
}

void criterion5(Checker& c) {
  auto m = police_model();
  const Frame& f = m->frame();
  std::vector<Bba> sources{
      make_bba(f, {{"t1", 0.1}, {"t2", 0.4}, {"t3", 0.2}, {"t1 | t2", 0.3}}),
      make_bba(f, {{"t1", 0.5}, {"t2", 0.1}, {"t3", 0.3}, {"t1 | t2", 0.1}})};

  c.near(conjunctive(sources, m).total_conflict, 0.65, kGolden, "k12");

  FusionReport ds = dempster(sources, m);
  c.near(mass(ds, "t1"), 0.600000, kGolden, "dempster t1");
  c.near(mass(ds, "t2"), 0.314286, kGolden, "dempster t2");
  c.near(mass(ds, "t1 | t2"), 0.085714, kGolden, "dempster t1|t2");

  FusionReport sm = smets(sources, m);
  auto empty_mass = sm.result.masses.find(Proposition::empty());
  c.expect(empty_mass != sm.result.masses.end(), "open-world mass present");
  if (empty_mass != sm.result.masses.end())
    c.near(empty_mass->second, 0.65, kGolden, "open-world empty mass");

  c.near(mass(yager(sources, m), "t1 | t2"), 0.68, kGolden, "yager t1|t2");

  FusionReport dp = dubois_prade(sources[0], sources[1], m);
  c.near(mass(dp, "t1"), 0.34, kGolden, "dubois-prade t1");
  c.near(mass(dp, "t2"), 0.25, kGolden, "dubois-prade t2");
  c.near(mass(dp, "t1 | t2"), 0.35, kGolden, "dubois-prade t1|t2");
  c.near(dp.mass_deficit, 0.06, kGolden, "dubois-prade deficit");

  c.near(mass(dsm_hybrid(sources, m), "t1 | t2"), 0.41, kGolden, "hybrid t1|t2");
}

void criterion6(Checker& c) {
  Frame f({"A", "B"});
  auto m = Model::make_shafer(f);

  struct Row {
    Bba m1, m2;
    double ds[3], h[3], pcr[3];
  };
  // Normalized-rule values are pinned as exact fractions of the conjunctive
  // masses; the printed three-decimal tables truncate them.
  std::vector<Row> rows{
      {make_bba(f, {{"A", 0.6}, {"A | B", 0.4}}),
       make_bba(f, {{"B", 0.3}, {"A | B", 0.7}}),
       {0.42 / 0.82, 0.12 / 0.82, 0.28 / 0.82},
       {0.420, 0.120, 0.460},
       {0.540, 0.180, 0.280}},
      {make_bba(f, {{"A", 0.6}, {"A | B", 0.4}}),
       make_bba(f, {{"A", 0.2}, {"B", 0.3}, {"A | B", 0.5}}),
       {0.50 / 0.82, 0.12 / 0.82, 0.20 / 0.82},
       {0.500, 0.120, 0.380},
       {0.620, 0.180, 0.200}},
      {make_bba(f, {{"A", 0.6}, {"B", 0.3}, {"A | B", 0.1}}),
       make_bba(f, {{"A", 0.2}, {"B", 0.3}, {"A | B", 0.5}}),
       {0.44 / 0.76, 0.27 / 0.76, 0.05 / 0.76},
       {0.440, 0.270, 0.290},
       {0.584, 0.366, 0.050}},
  };
  const char* cols[3] = {"A", "B", "A | B"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    FusionReport ds = dempster({row.m1, row.m2}, m);
    FusionReport h = dsm_hybrid({row.m1, row.m2}, m);
    FusionReport pcr = pcr5_two(row.m1, row.m2, m);
    for (int j = 0; j < 3; ++j) {
      std::string tag = "example " + std::to_string(i + 1) + " col " + cols[j];
      c.near(mass(ds, cols[j]), row.ds[j], kGolden, "dempster " + tag);
      c.near(mass(h, cols[j]), row.h[j], kGolden, "hybrid " + tag);
      c.near(mass(pcr, cols[j]), row.pcr[j], kGolden, "pcr " + tag);
    }
  }
}

void criterion7(Checker& c) {
  Frame f({"M", "C", "T"});
  auto m = Model::make_shafer(f);
  Bba m1 = make_bba(f, {{"M", 0.9}, {"T", 0.1}});
  Bba m2 = make_bba(f, {{"C", 0.9}, {"T", 0.1}});

  c.near(mass(dempster({m1, m2}, m), "T"), 1.0, kGolden, "dempster T");

  FusionReport y = yager({m1, m2}, m);
  c.near(mass(y, "M | C | T"), 0.99, kGolden, "yager ignorance");
  c.near(mass(y, "T"), 0.01, kGolden, "yager T");

  FusionReport h = dsm_hybrid({m1, m2}, m);
  c.near(mass(h, "M | C"), 0.81, kGolden, "hybrid M|C");
  c.near(mass(h, "T"), 0.01, kGolden, "hybrid T");
  c.near(mass(h, "M | T"), 0.09, kGolden, "hybrid M|T");
  c.near(mass(h, "C | T"), 0.09, kGolden, "hybrid C|T");

  FusionReport p = pcr5_two(m1, m2, m);
  c.near(mass(p, "M"), 0.486, kGolden, "pcr M");
  c.near(mass(p, "C"), 0.486, kGolden, "pcr C");
  c.near(mass(p, "T"), 0.028, kGolden, "pcr T");
}

void criterion8(Checker& c) {
  Frame f({"A", "B", "C"});
  auto m = Model::make_shafer(f);
  std::vector<Bba> sources{make_bba(f, {{"A", 0.4}, {"C", 0.6}}),
                           make_bba(f, {{"A", 0.7}, {"B", 0.3}}),
                           make_bba(f, {{"B", 0.8}, {"C", 0.2}}),
                           make_bba(f, {{"A", 0.5}, {"B", 0.3}, {"C", 0.2}})};

  c.near(mass(dempster({sources[0], sources[1]}, m), "A"), 1.0, kGolden, "step-2 dempster A");

  auto tbm = sequential(Rule::Smets, sources, m);
  auto empty0 = tbm[0].result.masses.find(Proposition::empty());
  c.expect(empty0 != tbm[0].result.masses.end(), "step-2 open-world mass present");
  if (empty0 != tbm[0].result.masses.end())
    c.near(empty0->second, 0.72, kGolden, "step-2 open-world empty mass");
  c.near(mass(tbm[0], "A"), 0.28, kGolden, "step-2 open-world A");
  c.near(tbm[1].result.masses.at(Proposition::empty()), 1.0, kGolden, "step-3 empty locks");
  c.near(tbm[2].result.masses.at(Proposition::empty()), 1.0, kGolden,
         "step-4 empty stays whatever arrives");

  auto h = sequential(Rule::DsmHybrid, sources, m);
  c.near(mass(h[0], "A"), 0.28, kGolden, "step-2 hybrid A");
  c.near(mass(h[0], "A | B"), 0.12, kGolden, "step-2 hybrid A|B");
  c.near(mass(h[0], "A | C"), 0.42, kGolden, "step-2 hybrid A|C");
  c.near(mass(h[0], "B | C"), 0.18, kGolden, "step-2 hybrid B|C");
  c.near(mass(h[1], "B"), 0.240, kGolden, "step-3 hybrid B");
  c.near(mass(h[1], "C"), 0.120, kGolden, "step-3 hybrid C");
  c.near(mass(h[1], "A | B"), 0.224, kGolden, "step-3 hybrid A|B");
  c.near(mass(h[1], "A | C"), 0.056, kGolden, "step-3 hybrid A|C");
  c.near(mass(h[1], "A | B | C"), 0.360, kGolden, "step-3 hybrid ignorance");

  auto p = sequential(Rule::Pcr5, sources, m);
  c.near(mass(p[0], "A"), 0.574725, kGolden, "step-2 pcr A");
  c.near(mass(p[0], "B"), 0.111429, kGolden, "step-2 pcr B");
  c.near(mass(p[0], "C"), 0.313846, kGolden, "step-2 pcr C");
  c.near(mass(p[1], "A"), 0.277490, kGolden, "step-3 pcr A");
  c.near(mass(p[1], "B"), 0.545010, kGolden, "step-3 pcr B");
  c.near(mass(p[1], "C"), 0.177500, kGolden, "step-3 pcr C");

  bool threw = false;
  try {
    sequential(Rule::Dempster, sources, m);
  } catch (const RuleUndefined&) {
    threw = true;
  }
  c.expect(threw, "step-3 normalization should be undefined");
}

void criterion9(Checker& c) {
  Frame f = frame(2);
  auto free2 = Model::make_free(f);
  auto set = [](std::vector<IntervalPiece> pieces) {
    return IntervalSet::from_pieces(std::move(pieces));
  };
  ImpreciseBba s1{free2,
                  {{parse("t1", f), set({{0.1, 0.2, true, true}, {0.3, 0.3, true, true}})},
                   {parse("t2", f), set({{0.4, 0.6, false, false}, {0.7, 0.8, true, true}})}}};
  ImpreciseBba s2{free2,
                  {{parse("t1", f), set({{0.4, 0.5, true, true}})},
                   {parse("t2", f), set({{0.0, 0.4, true, true},
                                         {0.5, 0.5, true, true},
                                         {0.6, 0.6, true, true}})}}};

  ImpreciseBba classic = imprecise_classic({s1, s2});
  c.expect(imprecise_mass(classic, parse("t1", f)) ==
               set({{0.1 * 0.4, 0.2 * 0.5, true, true}, {0.3 * 0.4, 0.3 * 0.5, true, true}}),
           "classic t1 pieces");
  c.expect(imprecise_mass(classic, parse("t2", f)) ==
               set({{0.0, 0.8 * 0.5, true, true}, {0.7 * 0.6, 0.8 * 0.6, true, true}}),
           "classic t2 pieces");
  c.expect(imprecise_mass(classic, parse("t1 & t2", f)) ==
               set({{0.4 * 0.4, 0.3 * 0.6 + 0.5 * 0.8, false, true}}),
           "classic t1&t2 piece with its open/closed flags");

  auto constrained = Model::make_hybrid(f, {parse("t1 & t2", f)});
  ImpreciseBba hybrid = imprecise_hybrid({s1, s2}, constrained);
  c.expect(imprecise_mass(hybrid, parse("t1 | t2", f)) ==
               set({{0.4 * 0.4, 0.3 * 0.6 + 0.5 * 0.8, false, true}}),
           "hybrid t1|t2 piece");
  c.expect(imprecise_mass(hybrid, parse("t1 & t2", f)) == IntervalSet::point(0.0),
           "hybrid empties the conflict key");
  c.expect(imprecise_mass(hybrid, parse("t1", f)) == imprecise_mass(classic, parse("t1", f)),
           "hybrid leaves t1 unchanged");
  c.expect(imprecise_mass(hybrid, parse("t2", f)) == imprecise_mass(classic, parse("t2", f)),
           "hybrid leaves t2 unchanged");

  Admissibility a1 = check_admissibility(s1);
  c.expect(a1.admissible, "source 1 admissible");
  if (a1.admissible) {
    c.expect(a1.witness.at(parse("t1", f)) == 0.3, "source 1 witness picks 0.3");
    c.near(a1.witness.at(parse("t2", f)), 0.7, kConservation, "source 1 witness picks 0.7");
  }
  Admissibility a2 = check_admissibility(s2);
  c.expect(a2.admissible, "source 2 admissible");
  if (a2.admissible) {
    c.expect(a2.witness.at(parse("t1", f)) == 0.4, "source 2 witness picks 0.4");
    c.near(a2.witness.at(parse("t2", f)), 0.6, kConservation, "source 2 witness picks 0.6");
  }

  double p1 = 0.3 * 0.4, p2 = 0.7 * 0.6, p12 = 0.3 * 0.6 + 0.4 * 0.7;
  c.expect(imprecise_mass(classic, parse("t1", f)).contains(p1, 1e-12),
           "precise selection t1 inside");
  c.expect(imprecise_mass(classic, parse("t2", f)).contains(p2, 1e-12),
           "precise selection t2 inside");
  c.expect(imprecise_mass(classic, parse("t1 & t2", f)).contains(p12, 1e-12),
           "precise selection t1&t2 inside");
  c.near(p1 + p2 + p12, 1.0, 1e-12, "precise selection sums to one");
}

void criterion10(Checker& c) {
  LabelScale scale{4};
  auto L = [](int k) { return Label{k}; };
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j) {
      c.expect(qadd(L(i), L(j), scale) == L(std::min(i + j, 5)),
               "addition cell L" + std::to_string(i) + "+L" + std::to_string(j));
      c.expect(qmul(L(i), L(j)) == L(std::min(i, j)),
               "multiplication cell L" + std::to_string(i) + "xL" + std::to_string(j));
    }

  Frame f = frame(2);
  auto m = Model::make_shafer(f);
  QBba q1{m, scale, {{parse("t1", f), L(1)}, {parse("t2", f), L(3)}, {parse("t1 | t2", f), L(1)}}};
  QBba q2{m, scale, {{parse("t1", f), L(2)}, {parse("t2", f), L(1)}, {parse("t1 | t2", f), L(2)}}};
  auto qm = [&](const QBba& b, const char* expr) {
    auto it = b.masses.find(parse(expr, f));
    return it == b.masses.end() ? Label{0} : it->second;
  };

  QFusionReport cr = qcr({q1, q2});
  c.expect(qm(cr.result, "t1") == L(3), "qcr t1");
  c.expect(qm(cr.result, "t2") == L(4), "qcr t2");
  c.expect(qm(cr.result, "t1 | t2") == L(1), "qcr t1|t2");
  c.expect(cr.conflict == L(3), "qcr conflict");

  QFusionReport dc = qdsmc({q1, q2});
  c.expect(qm(dc.result, "t1") == L(3), "qdsmc t1");
  c.expect(qm(dc.result, "t2") == L(4), "qdsmc t2");
  c.expect(qm(dc.result, "t1 & t2") == L(3), "qdsmc t1&t2");
  c.expect(qm(dc.result, "t1 | t2") == L(1), "qdsmc t1|t2");

  QFusionReport dh = qdsmh({q1, q2}, m);
  c.expect(qm(dh.result, "t1") == L(3), "qdsmh t1");
  c.expect(qm(dh.result, "t2") == L(4), "qdsmh t2");
  c.expect(qm(dh.result, "t1 | t2") == L(4), "qdsmh t1|t2");

  QFusionReport pc = qpcr5_two(q1, q2, m);
  c.expect(qm(pc.result, "t1") == L(4), "qpcr5 t1");
  c.expect(qm(pc.result, "t2") == L(5), "qpcr5 t2");
  c.expect(qm(pc.result, "t1 | t2") == L(1), "qpcr5 t1|t2");

  QBba dh_star = quasi_normalize(dh.result, L(1));
  c.expect(qm(dh_star, "t1") == L(2), "qdsmh* t1");
  c.expect(qm(dh_star, "t2") == L(3), "qdsmh* t2");
  c.expect(qm(dh_star, "t1 | t2") == L(3), "qdsmh* t1|t2");
  QBba pc_star = quasi_normalize(pc.result, L(1));
  c.expect(qm(pc_star, "t1") == L(3), "qpcr5* t1");
  c.expect(qm(pc_star, "t2") == L(4), "qpcr5* t2");
  c.expect(qm(pc_star, "t1 | t2") == L(0), "qpcr5* t1|t2");
}

void criterion11(Checker& c) {
  std::mt19937 rng(101);

  std::vector<std::shared_ptr<const Model>> models;
  for (std::size_t n = 2; n <= 3; ++n) {
    models.push_back(Model::make_free(frame(n)));
    models.push_back(Model::make_shafer(frame(n)));
  }
  Frame f3 = frame(3);
  models.push_back(Model::make_hybrid(f3, {parse("t1 & t3", f3), parse("t2 & t3", f3)}));

  std::map<const Model*, std::vector<Proposition>> elements;
  for (const auto& m : models) {
    auto alive = surviving_elements(*m);
    alive.erase(alive.begin());
    elements[m.get()] = std::move(alive);
  }

  // Conservation over 1000 random pairs spread across the models. The
  // conjunctive consensus reports (rather than redistributes) conflict, so
  // its ledger is result + conflict.
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& m = models[trial % models.size()];
    Bba b1 = random_bba(m, elements[m.get()], rng);
    Bba b2 = random_bba(m, elements[m.get()], rng);
    FusionReport conj = conjunctive({b1, b2}, m);
    bool ok = std::abs(sum_of(conj.result) + conj.total_conflict - 1.0) <= kConservation &&
              std::abs(sum_of(dsm_hybrid({b1, b2}, m).result) - 1.0) <= kConservation &&
              std::abs(sum_of(pcr5({b1, b2}, m).result) - 1.0) <= kConservation &&
              std::abs(sum_of(yager({b1, b2}, m).result) - 1.0) <= kConservation;
    if (!ok) c.failures.push_back("conservation failed at trial " + std::to_string(trial));
    ++c.checks;
  }

  // Vacuous neutrality for every rule.
  for (const auto& m : models) {
    Bba neutral = vacuous(m);
    for (int trial = 0; trial < 5; ++trial) {
      Bba b = random_bba(m, elements[m.get()], rng);
      for (Rule rule : {Rule::Conjunctive, Rule::DsmHybrid, Rule::Pcr5, Rule::Dempster,
                        Rule::Smets, Rule::Yager, Rule::DuboisPrade}) {
        FusionReport r = fuse(rule, {b, neutral}, m);
        bool ok = r.total_conflict == 0.0;
        double matched = 0.0;
        for (const auto& [p, v] : b.masses) {
          auto it = r.result.masses.find(p);
          double got = it == r.result.masses.end() ? 0.0 : it->second;
          ok = ok && std::abs(got - v) <= 1e-12;
          matched += got;
        }
        ok = ok && std::abs(matched - sum_of(r.result)) <= 1e-12;
        if (!ok)
          c.failures.push_back(std::string("vacuous neutrality failed for ") +
                               std::string(rule_name(rule)));
        ++c.checks;
      }
    }
  }

  // Normalized consensus against a power-set brute force.
  {
    auto m = Model::make_shafer(frame(3));
    auto alive = surviving_elements(*m);
    alive.erase(alive.begin());
    for (int trial = 0; trial < 50; ++trial) {
      Bba b1 = random_bba(m, alive, rng);
      Bba b2 = random_bba(m, alive, rng);
      if (1.0 - conjunctive({b1, b2}, m).total_conflict <= 1e-9) continue;  // undefined
      auto to_mask = [](const Proposition& p) {
        std::uint32_t mask = 0;
        for (Term t : p.terms()) mask |= t;
        return mask;
      };
      std::map<std::uint32_t, double> p1, p2, conj;
      for (const auto& [p, v] : b1.masses) p1[to_mask(p)] += v;
      for (const auto& [p, v] : b2.masses) p2[to_mask(p)] += v;
      double conflict = 0.0;
      for (const auto& [a, va] : p1)
        for (const auto& [b, vb] : p2) {
          if ((a & b) == 0)
            conflict += va * vb;
          else
            conj[a & b] += va * vb;
        }
      FusionReport got = dempster({b1, b2}, m);
      bool ok = true;
      for (const auto& [s, v] : conj) {
        std::vector<Term> singles;
        for (std::size_t i = 0; s >> i; ++i)
          if (s & (1u << i)) singles.push_back(Term{1} << i);
        Proposition prop = Proposition::from_terms(std::move(singles));
        auto it = got.result.masses.find(prop);
        double have = it == got.result.masses.end() ? 0.0 : it->second;
        ok = ok && std::abs(have - v / (1.0 - conflict)) <= 1e-9;
      }
      if (!ok) c.failures.push_back("brute-force oracle mismatch at trial " +
                                    std::to_string(trial));
      ++c.checks;
    }
  }

  // The two betting transforms coincide on all-exclusive models.
  {
    auto m = Model::make_shafer(frame(3));
    auto alive = surviving_elements(*m);
    alive.erase(alive.begin());
    for (int trial = 0; trial < 50; ++trial) {
      Bba b = random_bba(m, alive, rng);
      PignisticResult classic = classic_pignistic(b);
      PignisticResult general = generalized_pignistic(b);
      bool ok = classic.values.size() == general.values.size();
      for (const auto& [p, v] : classic.values)
        ok = ok && std::abs(general.values.at(p) - v) <= 1e-12;
      if (!ok) c.failures.push_back("transform agreement failed at trial " +
                                    std::to_string(trial));
      ++c.checks;
    }
  }

  // The generalized transform is additive and normalized on any model.
  for (const auto& m : models) {
    auto alive = surviving_elements(*m);
    for (int trial = 0; trial < 10; ++trial) {
      Bba b = random_bba(m, elements[m.get()], rng);
      PignisticResult r = generalized_pignistic(b);
      bool ok = std::abs(r.values.at(m->total_ignorance()) - 1.0) <= kConservation;
      for (const auto& a : alive) {
        if (a.is_empty()) continue;
        for (const auto& d : alive) {
          if (d.is_empty() || (m->regions(a) & m->regions(d)) != 0) continue;
          ok = ok && std::abs(r.values.at(m->reduce(join(a, d))) -
                              (r.values.at(a) + r.values.at(d))) <= kConservation;
        }
      }
      if (!ok) c.failures.push_back("betting measure property failed");
      ++c.checks;
    }
  }

  // The joint redistribution rule reduces to the two-source formula, and
  // at three sources it returns every conflict product to the survivors.
  for (const auto& m : models) {
    for (int trial = 0; trial < 20; ++trial) {
      Bba b1 = random_bba(m, elements[m.get()], rng);
      Bba b2 = random_bba(m, elements[m.get()], rng);
      Bba b3 = random_bba(m, elements[m.get()], rng);

      FusionReport general = pcr5({b1, b2}, m);
      FusionReport two = pcr5_two(b1, b2, m);
      bool ok = general.result.masses.size() == two.result.masses.size();
      for (const auto& [p, v] : two.result.masses) {
        auto it = general.result.masses.find(p);
        ok = ok && it != general.result.masses.end() && std::abs(it->second - v) <= 1e-14;
      }
      if (!ok) c.failures.push_back("two-source reduction failed");
      ++c.checks;

      FusionReport conj = conjunctive({b1, b2, b3}, m);
      FusionReport p3 = pcr5({b1, b2, b3}, m);
      double ledger = 0.0;
      for (const auto& [tuple, product] : p3.partial_conflicts) ledger += product;
      bool ok3 = std::abs(sum_of(p3.result) - 1.0) <= kConservation &&
                 std::abs(ledger - p3.total_conflict) <= kConservation &&
                 std::abs(p3.total_conflict - conj.total_conflict) <= 1e-12 &&
                 std::abs((sum_of(p3.result) - sum_of(conj.result)) - p3.total_conflict) <=
                     kConservation;
      if (!ok3) c.failures.push_back("three-source conflict ledger failed");
      ++c.checks;
    }
  }
}

}  // namespace

int main() {
  criterion(1, "lattice sizes 1,2,5,19,167,7580 and the 19-element enumeration", criterion1);
  criterion(2, "constrained-model cardinality table 0,1,1,2,2,3,3,3,4", criterion2);
  criterion(3, "four-hypothesis example: undefined normalization, consensus, hybrid",
            criterion3);
  criterion(4, "contradictory-sources family: formulas, even split, forced certainty",
            criterion4);
  criterion(5, "suspect example: conflict 0.65 and the five rule outcomes", criterion5);
  criterion(6, "two-source redistribution examples 1-3, all rule rows", criterion6);
  criterion(7, "high-conflict diagnosis example across four rules", criterion7);
  criterion(8, "temporal chaining: step values and absorbing states", criterion8);
  criterion(9, "set-valued fusion tables, admissibility witnesses, containment", criterion9);
  criterion(10, "label tables and the four qualitative fusion tables", criterion10);
  criterion(11, "property suites: conservation, neutrality, oracles, reductions",
            criterion11);

  if (g_failed_criteria == 0) {
    std::cout << "acceptance: all 11 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failed_criteria << " criteria FAILED\n";
  return 1;
}
