#pragma once

#include <cstdint>

#include "dynsubmax/elements.hpp"
#include "dynsubmax/matroid.hpp"
#include "dynsubmax/submodular.hpp"

namespace dynsubmax {

struct BaselineResult {
  ElementSet set;
  double value = 0.0;
  std::uint64_t queries_used = 0;
};

// Exact maximizer by enumeration of feasible subsets. Guarded to |V| <= 20;
// this is the acceptance oracle, not a solver.
BaselineResult brute_force_opt_cardinality(const ElementSet& universe,
                                           const SubmodularOracle& f, int k);
BaselineResult brute_force_opt_matroid(const ElementSet& universe,
                                       const SubmodularOracle& f,
                                       const MatroidOracle& m);

// Offline greedy: k rounds of max-marginal selection, ties broken toward the
// smallest id. (1 - 1/e)-approximate on monotone submodular objectives.
BaselineResult greedy_cardinality(const ElementSet& universe,
                                  const SubmodularOracle& f, int k);

// Offline greedy under a matroid: repeatedly add the max-marginal element that
// keeps the set independent. 2-approximate.
BaselineResult greedy_matroid(const ElementSet& universe, const SubmodularOracle& f,
                              const MatroidOracle& m);

}  // namespace dynsubmax
