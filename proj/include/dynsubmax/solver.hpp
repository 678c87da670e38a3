#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynsubmax/cardinality_instance.hpp"
#include "dynsubmax/invariants.hpp"
#include "dynsubmax/matroid_instance.hpp"
#include "dynsubmax/matroid.hpp"
#include "dynsubmax/submodular.hpp"

namespace dynsubmax {

enum class Constraint { Cardinality, Matroid };

struct SolverConfig {
  Constraint constraint = Constraint::Cardinality;
  int k = 1;  // cardinality bound; for matroids the rank is taken from the oracle
  double epsilon = 1.0;
  std::uint64_t seed = 0;
  double float_tol = 0.0;
  // Optional clamp on guess indices, for adversarial value ranges.
  std::optional<int> min_index;
  std::optional<int> max_index;
};

struct SolverStats {
  std::uint64_t update_queries = 0;   // instance f/matroid queries + routing queries
  std::uint64_t routing_queries = 0;  // f({e}) evaluations at routing time
  std::uint64_t report_queries = 0;   // f(I_T) evaluations for reporting
  std::uint64_t audit_queries = 0;    // invariant checker + shadow scans
  int live_instances = 0;
  int last_touched = 0;               // instances updated by the latest event
  int max_level_count = 0;            // max T across live instances
  std::uint64_t clamped_updates = 0;  // events whose routing range hit the clamp
  std::vector<std::pair<int, int>> levels_per_instance;  // (guess index, T)
};

// Runs the logarithmic family of parallel fixed-guess instances that removes
// the known-OPT (cardinality; guesses (1+eps)^i) or known-MAX (matroid;
// guesses 2^i) assumption, and reports the best solution across instances.
// Elements are routed by their singleton value, evaluated once and memoized:
// an instance only sees elements its guess interval admits.
class DynamicSolver {
 public:
  DynamicSolver(SolverConfig config, std::shared_ptr<const SubmodularFunction> f,
                std::shared_ptr<const Matroid> matroid = nullptr);

  void insert(ElementId v);
  void erase(ElementId v);

  // Closed interval of guess indices whose interval admits an element of
  // singleton value `value`; empty (lo > hi) for value <= 0.
  std::pair<int, int> route(double value) const;
  double guess_value(int index) const;
  int routing_width_bound() const;

  struct Best {
    ElementSet set;
    double value = 0.0;
    std::optional<int> index;  // guess index of the winning instance
  };
  // Argmax of f(I_T) over live instances; cached instance values are reused.
  Best best_solution() const;

  SolverStats stats() const;

  // Per live instance, first-principles invariant recomputation against the
  // alive elements routed to it. Returns (guess index, report) pairs.
  std::vector<std::pair<int, InvariantReport>> check_invariants() const;

  void enable_shadow_placement_check(bool on);
  std::uint64_t shadow_placements_checked() const;

  std::size_t alive_count() const { return alive_.size(); }
  bool alive(ElementId v) const { return alive_.count(v) > 0; }

  // True iff v sits in some instance's survivor pool above R_0; deleting an
  // element for which this is false costs zero oracle queries.
  bool element_in_survivor_pools(ElementId v) const;
  Constraint constraint() const { return config_.constraint; }
  int k() const { return k_; }
  double epsilon() const { return config_.epsilon; }

 private:
  MatroidInstance& matroid_instance(int index);
  CardinalityInstance& cardinality_instance(int index);
  std::pair<int, int> route_unclamped(double value) const;
  double singleton_value(ElementId v);

  SolverConfig config_;
  std::shared_ptr<const SubmodularFunction> f_;
  std::shared_ptr<const Matroid> matroid_;
  SubmodularOracle routing_f_;
  int k_;
  bool shadow_check_ = false;
  std::uint64_t clamped_updates_ = 0;
  int last_touched_ = 0;
  std::unordered_map<ElementId, double> alive_;      // id -> singleton value
  std::unordered_map<ElementId, double> value_memo_;  // persists across deletes
  std::map<int, MatroidInstance> matroid_instances_;
  std::map<int, CardinalityInstance> cardinality_instances_;
};

}  // namespace dynsubmax
