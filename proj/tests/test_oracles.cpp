#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <memory>
#include <sstream>

#include "dynsubmax/matroid.hpp"
#include "dynsubmax/oracle_spec.hpp"
#include "dynsubmax/submodular.hpp"
#include "test_util.hpp"

using namespace dynsubmax;
using namespace dynsubmax::testutil;

TEST_CASE("evaluate is normalized and counts one query per call") {
  SubmodularOracle f(overlap_coverage());
  CHECK(f.evaluate({}) == 0.0);
  CHECK(f.queries() == 1);
  CHECK(f.evaluate({1, 2}) == 3.0);  // covers {0,1} and {1,2}: three items
  CHECK(f.queries() == 2);
  CHECK(f.evaluate({1}) == 2.0);
  CHECK_THROWS_AS(f.evaluate({7}), std::out_of_range);
}

TEST_CASE("modular singleton evaluates to its value") {
  SubmodularOracle f(std::make_shared<ModularFunction>(
      std::map<ElementId, double>{{4, 5.0}}));
  CHECK(f.evaluate({4}) == 5.0);
}

TEST_CASE("marginal gain costs two queries, or one with a cached value") {
  SubmodularOracle f(overlap_coverage());
  CHECK(f.marginal_gain({}, 2) == 2.0);  // = f({2})
  CHECK(f.queries() == 2);
  CHECK(f.marginal_gain({1}, 2) == 1.0);  // only item 2 is new
  CHECK(f.queries() == 4);
  const double cached = f.evaluate({1});
  CHECK(f.marginal_gain_cached({1}, 2, cached) == 1.0);
  CHECK(f.queries() == 6);  // evaluate + one query inside the cached variant
  CHECK_THROWS_AS(f.marginal_gain({1}, 1), std::invalid_argument);
}

TEST_CASE("fresh handles share the function but not the counter") {
  SubmodularOracle f(overlap_coverage());
  f.evaluate({1});
  SubmodularOracle g = f.fresh_handle();
  CHECK(g.queries() == 0);
  g.evaluate({2});
  CHECK(f.queries() == 1);
  CHECK(g.queries() == 1);
}

TEST_CASE("query counters match an independent tally of oracle calls") {
  auto counting = std::make_shared<CountingFunction>(overlap_coverage());
  SubmodularOracle f(counting);
  f.evaluate({1});
  f.marginal_gain({}, 2);
  f.marginal_gain_cached({1}, 2, 2.0);
  CHECK(f.queries() == counting->calls);
  CHECK(f.queries() == 4);
}

TEST_CASE("coverage validation") {
  SUBCASE("empty covers give the constant-zero function") {
    CoverageFunction f(4, {{1, {}}, {2, {}}});
    CHECK(f.value({1, 2}) == 0.0);
  }
  SUBCASE("fully shared singleton universe") {
    CoverageFunction f(1, {{1, {0}}, {2, {0}}, {3, {0}}});
    CHECK(f.value({}) == 0.0);
    CHECK(f.value({2}) == 1.0);
    CHECK(f.value({1, 2, 3}) == 1.0);
  }
  SUBCASE("disjoint unit covers are modular") {
    CoverageFunction f(3, {{1, {0}}, {2, {1}}, {3, {2}}});
    CHECK(f.value({1, 3}) == 2.0);
    CHECK(f.value({1, 2, 3}) == 3.0);
  }
  SUBCASE("negative item weight is rejected") {
    CHECK_THROWS_AS(CoverageFunction(1, {{1, {0}}}, {-1.0}), std::invalid_argument);
  }
  SUBCASE("out-of-universe item is rejected") {
    CHECK_THROWS_AS(CoverageFunction(1, {{1, {3}}}), std::invalid_argument);
  }
}

TEST_CASE("independence tests for the concrete families") {
  SUBCASE("the empty set is independent in every family") {
    MatroidOracle u(std::make_shared<UniformMatroid>(2));
    MatroidOracle g(triangle_matroid());
    CHECK(u.is_independent({}));
    CHECK(g.is_independent({}));
    CHECK(u.queries() == 1);
  }
  SUBCASE("uniform rank 2 rejects three elements") {
    MatroidOracle u(std::make_shared<UniformMatroid>(2));
    CHECK(u.is_independent({1, 2}));
    CHECK_FALSE(u.is_independent({1, 2, 3}));
    CHECK(u.rank() == 2);
  }
  SUBCASE("the three triangle edges form a cycle") {
    MatroidOracle g(triangle_matroid());
    CHECK(g.is_independent({1, 2}));
    CHECK_FALSE(g.is_independent({1, 2, 3}));
    CHECK(g.rank() == 2);
  }
  SUBCASE("uniform(3) admits three, rejects four") {
    UniformMatroid m(3);
    CHECK(m.independent({1, 2, 3}));
    CHECK_FALSE(m.independent({1, 2, 3, 4}));
  }
  SUBCASE("partition capacity bounds a block") {
    // blocks {1,2 | 3}, capacities (1, 1)
    PartitionMatroid m({{1, 0}, {2, 0}, {3, 1}}, {1, 1});
    CHECK_FALSE(m.independent({1, 2}));
    CHECK(m.independent({1, 3}));
    CHECK(m.rank() == 2);
  }
  SUBCASE("any two path edges are independent") {
    // path a-b-c as edges 1=(0,1), 2=(1,2)
    GraphicMatroid m({{0, 1, 1}, {1, 2, 2}});
    CHECK(m.independent({1, 2}));
    CHECK(m.rank() == 2);
  }
  SUBCASE("unknown ids are rejected") {
    PartitionMatroid m({{1, 0}}, {1});
    CHECK_THROWS_AS(m.independent({9}), std::out_of_range);
    GraphicMatroid g({{0, 1, 1}});
    CHECK_THROWS_AS(g.independent({9}), std::out_of_range);
  }
}

namespace {

void check_submodular_axioms(const SubmodularFunction& f, const ElementSet& ground) {
  REQUIRE(ground.size() <= 6);
  CHECK(f.value({}) == 0.0);
  const auto subsets = all_subsets(ground);
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      if (!is_subset(a, b)) continue;
      CHECK(f.value(a) <= f.value(b));  // monotone
      for (ElementId e : ground) {
        if (b.contains(e)) continue;
        const double gain_a = f.value(a.plus(e)) - f.value(a);
        const double gain_b = f.value(b.plus(e)) - f.value(b);
        CHECK(gain_a >= gain_b);  // diminishing gains
      }
    }
  }
}

void check_matroid_axioms(const Matroid& m, const ElementSet& ground) {
  REQUIRE(ground.size() <= 6);
  CHECK(m.independent({}));
  const auto subsets = all_subsets(ground);
  for (const auto& b : subsets) {
    if (!m.independent(b)) continue;
    // downward closure
    for (const auto& a : subsets) {
      if (is_subset(a, b)) CHECK(m.independent(a));
    }
    // exchange axiom
    for (const auto& a : subsets) {
      if (!m.independent(a) || a.size() >= b.size()) continue;
      bool extendable = false;
      for (ElementId x : b) {
        if (!a.contains(x) && m.independent(a.plus(x))) {
          extendable = true;
          break;
        }
      }
      CHECK(extendable);
    }
  }
}

}  // namespace

TEST_CASE("submodular families satisfy the axioms exhaustively") {
  const ElementSet ground{1, 2, 3, 4, 5};
  check_submodular_axioms(
      CoverageFunction(6, {{1, {0, 1}}, {2, {1, 2}}, {3, {2, 3, 4}}, {4, {0}}, {5, {5, 1}}},
                       {1.0, 2.0, 1.0, 3.0, 1.0, 0.5}),
      ground);
  check_submodular_axioms(
      ModularFunction({{1, 2.0}, {2, 0.0}, {3, 5.5}, {4, 1.0}, {5, 3.0}}), ground);
}

TEST_CASE("matroid families satisfy the axioms exhaustively") {
  check_matroid_axioms(UniformMatroid(2), {1, 2, 3, 4});
  check_matroid_axioms(PartitionMatroid({{1, 0}, {2, 0}, {3, 1}, {4, 1}, {5, 2}}, {1, 2, 1}),
                       {1, 2, 3, 4, 5});
  // two triangles sharing vertex 2
  check_matroid_axioms(
      GraphicMatroid(
          {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}, {2, 3, 4}, {3, 4, 5}, {4, 2, 6}}),
      {1, 2, 3, 4, 5, 6});
}

TEST_CASE("oracle specs load from JSON") {
  SUBCASE("coverage with explicit weights") {
    const auto j = nlohmann::json::parse(
        R"({"type":"coverage","universe":3,"covers":{"1":[0,1],"2":[1,2]},"weights":[1,1,1]})");
    auto f = submodular_from_json(j);
    CHECK(f->value({1, 2}) == 3.0);
  }
  SUBCASE("modular") {
    auto f = submodular_from_json(
        nlohmann::json::parse(R"({"type":"modular","values":{"7":2.5}})"));
    CHECK(f->value({7}) == 2.5);
  }
  SUBCASE("matroids of every kind") {
    CHECK(matroid_from_json(nlohmann::json::parse(R"({"type":"uniform","k":4})"))->rank() == 4);
    auto p = matroid_from_json(nlohmann::json::parse(
        R"({"type":"partition","blocks":{"1":0,"2":0,"3":1},"capacities":[1,1]})"));
    CHECK_FALSE(p->independent({1, 2}));
    auto g = matroid_from_json(nlohmann::json::parse(
        R"({"type":"graphic","edges":[[0,1,1],[1,2,2],[2,0,3]]})"));
    CHECK_FALSE(g->independent({1, 2, 3}));
  }
  SUBCASE("composite document") {
    const auto j = nlohmann::json::parse(
        R"({"f":{"type":"modular","values":{"1":1.0}},"matroid":{"type":"uniform","k":1}})");
    const OracleSpec spec = oracle_spec_from_json(j);
    CHECK(spec.f->value({1}) == 1.0);
    CHECK(spec.matroid->rank() == 1);
  }
  SUBCASE("flat document with an inline matroid") {
    const auto j = nlohmann::json::parse(
        R"({"type":"modular","values":{"1":1.0},"matroid":{"type":"uniform","k":2}})");
    const OracleSpec spec = oracle_spec_from_json(j);
    CHECK(spec.matroid->rank() == 2);
  }
  SUBCASE("unknown types are rejected") {
    CHECK_THROWS_AS(submodular_from_json(nlohmann::json::parse(R"({"type":"cut"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(matroid_from_json(nlohmann::json::parse(R"({"type":"laminar"})")),
                    std::invalid_argument);
  }
}
