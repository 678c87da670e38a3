#include "dynsubmax/reference.hpp"

#include <stdexcept>
#include <string>

namespace dynsubmax {
namespace {

constexpr std::size_t kBruteForceLimit = 20;

void check_brute_force_size(const ElementSet& universe) {
  if (universe.size() > kBruteForceLimit) {
    throw std::invalid_argument(
        "brute force: ground set of size " + std::to_string(universe.size()) +
        " exceeds the limit of " + std::to_string(kBruteForceLimit) +
        "; use the greedy baseline instead");
  }
}

// Depth-first enumeration of feasible sets. Feasibility is downward closed
// (size bound or matroid independence), so pruning infeasible prefixes still
// visits every feasible subset.
template <typename Feasible>
void enumerate_best(const std::vector<ElementId>& ids, std::size_t start,
                    ElementSet& current, const SubmodularOracle& f,
                    const Feasible& feasible, BaselineResult& best) {
  const double v = f.evaluate(current);
  if (v > best.value) {
    best.value = v;
    best.set = current;
  }
  for (std::size_t i = start; i < ids.size(); ++i) {
    current.insert(ids[i]);
    if (feasible(current)) {
      enumerate_best(ids, i + 1, current, f, feasible, best);
    }
    current.erase(ids[i]);
  }
}

template <typename Feasible>
BaselineResult brute_force(const ElementSet& universe, const SubmodularOracle& f,
                           const Feasible& feasible) {
  check_brute_force_size(universe);
  SubmodularOracle fh = f.fresh_handle();
  BaselineResult best;
  ElementSet current;
  enumerate_best(universe.ids(), 0, current, fh, feasible, best);
  best.queries_used = fh.queries();
  return best;
}

}  // namespace

BaselineResult brute_force_opt_cardinality(const ElementSet& universe,
                                           const SubmodularOracle& f, int k) {
  return brute_force(universe, f, [k](const ElementSet& s) {
    return s.size() <= static_cast<std::size_t>(k);
  });
}

BaselineResult brute_force_opt_matroid(const ElementSet& universe,
                                       const SubmodularOracle& f,
                                       const MatroidOracle& m) {
  MatroidOracle mh = m.fresh_handle();
  BaselineResult result = brute_force(
      universe, f, [&mh](const ElementSet& s) { return mh.is_independent(s); });
  result.queries_used += mh.queries();
  return result;
}

BaselineResult greedy_cardinality(const ElementSet& universe,
                                  const SubmodularOracle& f, int k) {
  SubmodularOracle fh = f.fresh_handle();
  BaselineResult result;
  double current_value = 0.0;
  for (int round = 0; round < k; ++round) {
    ElementId best_e = -1;
    double best_gain = 0.0;
    for (ElementId e : universe) {
      if (result.set.contains(e)) continue;
      const double gain = fh.marginal_gain_cached(result.set, e, current_value);
      if (gain > best_gain) {
        best_gain = gain;
        best_e = e;
      }
    }
    if (best_e < 0) break;  // no positive-gain element left
    result.set.insert(best_e);
    current_value += best_gain;
  }
  result.value = current_value;
  result.queries_used = fh.queries();
  return result;
}

BaselineResult greedy_matroid(const ElementSet& universe, const SubmodularOracle& f,
                              const MatroidOracle& m) {
  SubmodularOracle fh = f.fresh_handle();
  MatroidOracle mh = m.fresh_handle();
  BaselineResult result;
  double current_value = 0.0;
  for (;;) {
    ElementId best_e = -1;
    double best_gain = 0.0;
    for (ElementId e : universe) {
      if (result.set.contains(e)) continue;
      if (!mh.is_independent(result.set.plus(e))) continue;
      const double gain = fh.marginal_gain_cached(result.set, e, current_value);
      if (gain > best_gain) {
        best_gain = gain;
        best_e = e;
      }
    }
    if (best_e < 0) break;
    result.set.insert(best_e);
    current_value += best_gain;
  }
  result.value = current_value;
  result.queries_used = fh.queries() + mh.queries();
  return result;
}

}  // namespace dynsubmax
