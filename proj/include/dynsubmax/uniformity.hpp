#pragma once

#include <cstdint>
#include <vector>

#include "dynsubmax/solver.hpp"

namespace dynsubmax {

// Chi-square critical value at significance 1e-3 for 7 degrees of freedom.
inline constexpr double kChiSquareCritical1em3Df7 = 24.3219;

struct UniformityResult {
  int pool_size = 0;
  int trials = 0;
  std::vector<int> counts;  // occurrences per surviving pool element
  double chi_square = 0.0;
  int degrees_of_freedom = 0;
  double critical_value = 0.0;
  bool pass = false;
};

// Statistical check of the uniform invariant on a fixed rebuild: builds a
// structure over nine equal-valued elements once, then repeatedly clones it,
// reseeds the clone, and deletes the chosen element of level 1, forcing a
// rebuild whose survivor pool has exactly 8 elements. The freshly chosen
// element must be uniform over that pool (chi-square, significance 1e-3).
UniformityResult uniformity_rebuild_trial(Constraint constraint, int trials,
                                          std::uint64_t seed);

}  // namespace dynsubmax
