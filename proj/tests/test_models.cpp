#include <bit>
#include <set>

#include "doctest.h"
#include "dsmt/model.hpp"

using namespace dsmt;

namespace {

Frame frame(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("t" + std::to_string(i + 1));
  return Frame{names};
}

// The worked hybrid model over three hypotheses: every conjunction forced
// empty except t1 & t2.
std::shared_ptr<const Model> hybrid3() {
  Frame f = frame(3);
  return Model::make_hybrid(f, {parse("t1 & t3", f), parse("t2 & t3", f)});
}

}  // namespace

TEST_CASE("shafer model collapses the lattice to the power set") {
  auto m = Model::make_shafer(frame(2));
  const Frame& f = m->frame();
  CHECK(m->is_empty(parse("t1 & t2", f)));
  std::vector<Proposition> alive = surviving_elements(*m);
  REQUIRE(alive.size() == 4);
  CHECK(alive[0].is_empty());
  CHECK(alive[1] == parse("t1", f));
  CHECK(alive[2] == parse("t2", f));
  CHECK(alive[3] == parse("t1 | t2", f));
}

TEST_CASE("free model empties nothing but the empty proposition") {
  auto m = Model::make_free(frame(3));
  for (const auto& p : generate(m->frame())) CHECK(m->is_empty(p) == p.is_empty());
  CHECK(surviving_elements(*m).size() == 19);
}

TEST_CASE("hybrid example: surviving parts and regions") {
  auto m = hybrid3();
  const Frame& f = m->frame();
  CHECK(std::popcount(m->surviving_parts()) == 4);  // parts 1, 2, 12, 3

  CHECK(m->cardinality(parse("t1 & t2", f)) == 1);
  CHECK(m->regions(parse("∅", f)) == 0);
  CHECK(m->is_empty(parse("t1 & t3", f)));
  CHECK_FALSE(m->is_empty(parse("t1 & t2", f)));

  auto free3 = Model::make_free(frame(3));
  CHECK(free3->cardinality(parse("t1", f)) == 4);
  CHECK(free3->regions(parse("t1", f)) == 0b1010101);  // parts 1, 12, 13, 123
}

TEST_CASE("hybrid example: cardinality table") {
  auto m = hybrid3();
  const Frame& f = m->frame();
  std::vector<Proposition> alive = surviving_elements(*m);
  // The four surviving parts admit ten distinct region sets; (t1 & t2) | t3
  // covers parts {12, 3}, distinct from every union of singletons.
  REQUIRE(alive.size() == 10);

  std::vector<std::pair<const char*, std::size_t>> expected{
      {"∅", 0},           {"t1 & t2", 1}, {"t3", 1},
      {"t1", 2},               {"t2", 2},      {"(t1 & t2) | t3", 2},
      {"t1 | t2", 3},          {"t1 | t3", 3}, {"t2 | t3", 3},
      {"t1 | t2 | t3", 4},
  };
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(alive[i] == parse(expected[i].first, f));
    CHECK(m->cardinality(alive[i]) == expected[i].second);
  }
}

TEST_CASE("reduce: canonical representative modulo constraints") {
  Frame f = frame(3);
  auto murder = Model::make_hybrid(
      f, [&] {
        auto c = Model::make_shafer(f)->constraints();
        c.push_back(parse("t3", f));
        return c;
      }());
  CHECK(murder->reduce(parse("t1 | t2 | t3", f)) == parse("t1 | t2", f));
  CHECK(murder->reduce(parse("t3", f)).is_empty());

  auto free3 = Model::make_free(f);
  for (const auto& p : generate(f)) CHECK(free3->reduce(p) == p);

  CHECK(hybrid3()->reduce(parse("t1 & t3", f)).is_empty());
}

TEST_CASE("total ignorance reduces under non-existential constraints") {
  Frame f = frame(3);
  auto c = Model::make_shafer(f)->constraints();
  c.push_back(parse("t3", f));
  auto m = Model::make_hybrid(f, c);
  CHECK(m->total_ignorance() == parse("t1 | t2", f));
}

TEST_CASE("free-model cardinality of total ignorance is 2^n - 1") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto m = Model::make_free(frame(n));
    CHECK(m->cardinality(m->total_ignorance()) == (std::size_t{1} << n) - 1);
  }
}

TEST_CASE("subset and intersects") {
  Frame f2 = frame(2);
  auto free2 = Model::make_free(f2);
  auto shafer2 = Model::make_shafer(f2);
  CHECK(free2->subset(parse("t1 & t2", f2), parse("t1", f2)));
  CHECK_FALSE(shafer2->intersects(parse("t1", f2), parse("t2", f2)));
  CHECK(free2->intersects(parse("t1", f2), parse("t2", f2)));
}

TEST_CASE("degenerate models are rejected") {
  Frame f1 = frame(1);
  CHECK_THROWS_AS(Model::make_hybrid(f1, {parse("t1", f1)}), std::invalid_argument);
  Frame f2 = frame(2);
  auto c = Model::make_shafer(f2)->constraints();
  c.push_back(parse("t1", f2));
  c.push_back(parse("t2", f2));
  CHECK_THROWS_AS(Model::make_hybrid(f2, c), std::invalid_argument);
  CHECK_THROWS_AS(Model::make_free(Frame{}), std::invalid_argument);
}

TEST_CASE("regions is a lattice homomorphism") {
  for (std::size_t n = 2; n <= 3; ++n) {
    Frame f = frame(n);
    std::vector<std::shared_ptr<const Model>> models{Model::make_free(f),
                                                     Model::make_shafer(f)};
    if (n == 3) models.push_back(hybrid3());
    std::vector<Proposition> all = generate(f);
    for (const auto& m : models)
      for (const auto& a : all)
        for (const auto& b : all) {
          CHECK(m->regions(meet(a, b)) == (m->regions(a) & m->regions(b)));
          CHECK(m->regions(join(a, b)) == (m->regions(a) | m->regions(b)));
        }
  }
}

TEST_CASE("under an all-exclusive model, cardinality is the classical one") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto m = Model::make_shafer(frame(n));
    std::set<Proposition> distinct;
    for (const auto& p : generate(m->frame())) distinct.insert(m->reduce(p));
    CHECK(distinct.size() == (std::size_t{1} << n));  // power set plus empty
    for (const auto& p : distinct)
      CHECK(m->cardinality(p) == p.terms().size());  // unions of singletons
  }
}

TEST_CASE("cardinality is monotone and positive on survivors") {
  Frame f = frame(3);
  for (const auto& m :
       {Model::make_free(f), Model::make_shafer(f), hybrid3()}) {
    for (const auto& a : generate(f)) {
      if (!m->is_empty(a)) CHECK(m->cardinality(a) > 0);
      for (const auto& b : generate(f))
        if (m->subset(a, b)) CHECK(m->cardinality(a) <= m->cardinality(b));
    }
  }
}
