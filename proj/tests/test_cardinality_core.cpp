#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <memory>

#include "dynsubmax/cardinality_instance.hpp"
#include "dynsubmax/reference.hpp"
#include "dynsubmax/uniformity.hpp"
#include "test_util.hpp"

using namespace dynsubmax;
using namespace dynsubmax::testutil;

namespace {

SubmodularOracle modular_oracle(std::map<ElementId, double> values) {
  return SubmodularOracle(std::make_shared<ModularFunction>(std::move(values)));
}

}  // namespace

TEST_CASE("promote is inclusive at the threshold and capped at k") {
  auto f = modular_oracle({{1, 2.0}, {2, 5.0}, {3, 1.0}});
  // tau = 2.0
  SUBCASE("boundary gain is admitted") {
    const auto out = CardinalityInstance::promote(f, {}, 0.0, 1, /*k=*/2, /*tau=*/2.0);
    CHECK(out.admitted);
    CHECK(out.gain == 2.0);
  }
  SUBCASE("a full solution admits nothing, whatever the gain") {
    const auto out =
        CardinalityInstance::promote(f, {1, 3}, 3.0, 2, /*k=*/2, /*tau=*/2.0);
    CHECK_FALSE(out.admitted);
    CHECK(out.gain == 5.0);
  }
  SUBCASE("an element already in I is a precondition error") {
    CHECK_THROWS_AS(CardinalityInstance::promote(f, {1}, 2.0, 1, 2, 2.0),
                    std::invalid_argument);
  }
}

TEST_CASE("a fully covered element has zero gain and fails the gate") {
  auto cov = std::make_shared<CoverageFunction>(
      3, std::map<ElementId, std::vector<int>>{{1, {0, 1, 2}}, {2, {1}}});
  SubmodularOracle f(cov);
  const auto out = CardinalityInstance::promote(f, {1}, 3.0, 2, /*k=*/3, /*tau=*/1.0);
  CHECK_FALSE(out.admitted);
  CHECK(out.gain == 0.0);
}

TEST_CASE("init with every gain below tau keeps the structure empty") {
  auto f = modular_oracle({{1, 1.0}, {2, 1.0}});
  CardinalityInstance inst(f, /*k=*/2, /*opt_guess=*/100.0, 3);  // tau = 25
  inst.init({1, 2});
  CHECK(inst.level_count() == 0);
  CHECK(inst.solution().first.empty());
  CHECK(inst.check_level_invariants().ok());
}

TEST_CASE("a modular objective with k strong elements fills the solution") {
  auto f = modular_oracle({{1, 4.0}, {2, 5.0}, {3, 6.0}, {4, 0.5}});
  CardinalityInstance inst(f, /*k=*/3, /*opt_guess=*/12.0, 5);  // tau = 2
  inst.init({1, 2, 3, 4});
  CHECK(inst.level_count() == 3);
  const auto [set, value] = inst.solution();
  CHECK(set == ElementSet{1, 2, 3});
  CHECK(value == 15.0);
  CHECK(inst.check_level_invariants().ok());
}

TEST_CASE("the solution value is the sum of admitted gains, so at least T tau") {
  auto coverage = std::make_shared<CoverageFunction>(
      8, std::map<ElementId, std::vector<int>>{{1, {0, 1}},
                                               {2, {1, 2}},
                                               {3, {2, 3, 4}},
                                               {4, {0, 5}},
                                               {5, {5, 1}},
                                               {6, {6, 7}}});
  CardinalityInstance inst(SubmodularOracle(coverage), /*k=*/3, /*opt_guess=*/6.0, 11);
  inst.init(coverage->ground());
  Rng rng(4);
  for (int step = 0; step < 300; ++step) {
    const ElementId id = 1 + static_cast<int>(uniform_below(rng, 6));
    if (inst.alive(id)) {
      inst.erase(id);
    } else {
      inst.insert(id);
    }
    const auto report = inst.check_level_invariants();
    INFO("step ", step, ": ", report.first_failure());
    REQUIRE(report.ok());

    const int T = inst.level_count();
    CHECK(T <= inst.k());
    const auto [set, value] = inst.solution();
    CHECK(set.size() == static_cast<std::size_t>(T));
    CHECK(value >= T * inst.tau());
    if (T == inst.k()) CHECK(2.0 * value >= inst.opt_guess());
    if (T < inst.k()) {
      // terminator: no alive element may still clear tau against I_T
      SubmodularOracle probe(coverage);
      const double base = probe.evaluate(set);
      for (ElementId x : inst.levels()[0].pool.items()) {
        if (set.contains(x)) continue;
        CHECK(probe.marginal_gain_cached(set, x, base) < inst.tau());
      }
    }
  }
}

TEST_CASE("light deletes cost no oracle query") {
  auto f = modular_oracle({{1, 6.0}, {2, 6.0}, {3, 0.5}});
  CardinalityInstance inst(f, /*k=*/2, /*opt_guess=*/12.0, 13);  // tau = 3
  inst.init({1, 2, 3});
  CHECK_FALSE(inst.levels()[1].pool.contains(3));
  const std::uint64_t before = inst.update_queries();
  inst.erase(3);
  CHECK(inst.update_queries() == before);
  CHECK(inst.check_level_invariants().ok());
}

TEST_CASE("deleting the chosen element rebuilds and re-inserting stays valid") {
  auto f = modular_oracle({{1, 4.0}, {2, 5.0}, {3, 6.0}, {4, 3.0}});
  CardinalityInstance inst(f, /*k=*/2, /*opt_guess=*/10.0, 19);  // tau = 2.5
  inst.init({1, 2, 3, 4});
  REQUIRE(inst.level_count() >= 1);
  const ElementId victim = *inst.levels()[1].chosen;
  inst.erase(victim);
  CHECK(inst.check_level_invariants().ok());
  inst.insert(victim);
  CHECK(inst.check_level_invariants().ok());
}

TEST_CASE("the checker notices a damaged pool") {
  auto f = modular_oracle({{1, 4.0}, {2, 5.0}, {3, 6.0}});
  CardinalityInstance inst(f, /*k=*/2, /*opt_guess=*/10.0, 23);
  inst.init({1, 2, 3});
  REQUIRE(inst.levels()[1].pool.size() >= 2);
  ElementId removable = -1;
  for (ElementId x : inst.levels()[1].pool.items()) {
    if (inst.levels()[1].chosen != x) removable = x;
  }
  REQUIRE(removable >= 0);
  inst.corrupt_pool_for_testing(1, removable);
  CHECK_FALSE(inst.check_level_invariants().ok());
}

TEST_CASE("reporting the solution costs no extra query") {
  auto f = modular_oracle({{1, 4.0}, {2, 5.0}});
  CardinalityInstance inst(f, /*k=*/2, /*opt_guess=*/8.0, 29);
  inst.init({1, 2});
  const std::uint64_t before = inst.update_queries();
  const auto [set, value] = inst.solution();
  CHECK(value == 9.0);
  CHECK(inst.update_queries() == before);
  CHECK(inst.report_queries() == 0);
}

TEST_CASE("binary-search placements match a shadow linear scan") {
  auto coverage = std::make_shared<CoverageFunction>(
      9, std::map<ElementId, std::vector<int>>{{1, {0, 1}},
                                               {2, {1, 2}},
                                               {3, {2, 3, 4}},
                                               {4, {0, 5}},
                                               {5, {5, 1}},
                                               {6, {6, 7}},
                                               {7, {8, 0, 2}}});
  CardinalityInstance inst(SubmodularOracle(coverage), /*k=*/4, /*opt_guess=*/8.0, 31);
  inst.enable_shadow_placement_check(true);
  Rng rng(8);
  for (int step = 0; step < 400; ++step) {
    const ElementId id = 1 + static_cast<int>(uniform_below(rng, 7));
    if (inst.alive(id)) {
      inst.erase(id);
    } else {
      inst.insert(id);
    }
  }
  CHECK(inst.shadow_placements_checked() > 0);
}

TEST_CASE("a rebuilt level chooses uniformly (chi-square at 1e-3)") {
  const auto result = uniformity_rebuild_trial(Constraint::Cardinality, 2000, 7);
  CHECK(result.pool_size == 8);
  INFO("chi-square ", result.chi_square);
  CHECK(result.pass);
}
