#include "dynsubmax/uniformity.hpp"

#include <map>
#include <memory>
#include <stdexcept>

#include "dynsubmax/cardinality_instance.hpp"
#include "dynsubmax/matroid_instance.hpp"

namespace dynsubmax {
namespace {

constexpr int kElements = 9;
constexpr int kRank = 3;

std::shared_ptr<const SubmodularFunction> unit_modular() {
  std::map<ElementId, double> values;
  for (int id = 1; id <= kElements; ++id) values[id] = 1.0;
  return std::make_shared<ModularFunction>(std::move(values));
}

ElementSet full_ground() {
  ElementSet v;
  for (int id = 1; id <= kElements; ++id) v.insert(id);
  return v;
}

template <typename Instance>
UniformityResult run_trials(const Instance& base, ElementId victim, int trials,
                            std::uint64_t seed) {
  // Categories: the pool elements surviving the deletion, in id order.
  std::map<ElementId, int> counts;
  for (ElementId id : full_ground()) {
    if (id != victim) counts[id] = 0;
  }
  for (int trial = 0; trial < trials; ++trial) {
    Instance copy = base;
    copy.reseed(derive_seed(seed, trial + 1));
    copy.erase(victim);
    const auto& rebuilt = copy.levels()[1];
    if (!rebuilt.chosen) throw std::logic_error("uniformity: rebuild chose nothing");
    ++counts.at(*rebuilt.chosen);
  }

  UniformityResult result;
  result.pool_size = static_cast<int>(counts.size());
  result.trials = trials;
  result.degrees_of_freedom = result.pool_size - 1;
  result.critical_value = kChiSquareCritical1em3Df7;
  const double expected = static_cast<double>(trials) / result.pool_size;
  for (const auto& [id, observed] : counts) {
    result.counts.push_back(observed);
    const double diff = observed - expected;
    result.chi_square += diff * diff / expected;
  }
  result.pass = result.chi_square < result.critical_value;
  return result;
}

}  // namespace

UniformityResult uniformity_rebuild_trial(Constraint constraint, int trials,
                                          std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("uniformity: trials must be positive");
  const auto f = unit_modular();
  if (constraint == Constraint::Cardinality) {
    // opt_guess = 2k makes tau = 1, so every unit element is promoting.
    CardinalityInstance base(SubmodularOracle(f), kRank, 2.0 * kRank,
                             derive_seed(seed, 0));
    base.init(full_ground());
    const ElementId victim = *base.levels()[1].chosen;
    return run_trials(base, victim, trials, seed);
  }
  // MAX guess = 1 admits every unit element: threshold eps/(10k) <= 1 <= 1.
  auto matroid = std::make_shared<UniformMatroid>(kRank);
  MatroidInstance base(SubmodularOracle(f), MatroidOracle(matroid),
                       /*max_guess=*/1.0, /*epsilon=*/1.0, derive_seed(seed, 0));
  base.init(full_ground());
  const ElementId victim = *base.levels()[1].chosen;
  return run_trials(base, victim, trials, seed);
}

}  // namespace dynsubmax
