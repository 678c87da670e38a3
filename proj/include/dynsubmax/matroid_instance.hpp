#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynsubmax/elements.hpp"
#include "dynsubmax/invariants.hpp"
#include "dynsubmax/matroid.hpp"
#include "dynsubmax/rng.hpp"
#include "dynsubmax/submodular.hpp"

namespace dynsubmax {

// Outcome of the per-level admission test. An element is admitted either
// freely (the solution stays independent) or by swapping out the cheapest
// replaceable member of the solution.
struct PromoteOutcome {
  enum class Kind { Fail, Free, Swap };
  Kind kind = Kind::Fail;
  ElementId swapped = -1;  // valid only for Swap; always a member of I
  double gain = 0.0;       // f(I' + e) - f(I'), computed for every outcome

  bool admitted() const { return kind != Kind::Fail; }
};

// One layer of the leveled structure: the survivor pool R_i, the partial
// solution I_i, the cumulative set I'_i = union of I_1..I_i, the sampled
// element e_i, and a cached f(I'_i).
struct MatroidLevel {
  RandomSet pool;
  ElementSet solution;
  ElementSet cumulative;
  std::optional<ElementId> chosen;
  double cumulative_value = 0.0;
};

// Returns the minimum-weight element whose removal from I + e restores
// independence, using a binary search over a weight-descending prefix order.
// Elements missing from `weights` (in particular the candidate e itself) sort
// first, as if infinitely heavy; equal weights sort by descending id so the
// result matches the brute-force argmin with smallest-id tie-breaking.
// Precondition: I independent, I + e dependent. Costs at most
// ceil(log2(|I|+1)) + 1 independence queries on `m`.
ElementId find_min_circuit_swap(const MatroidOracle& m, const ElementSet& I,
                                ElementId e,
                                const std::unordered_map<ElementId, double>& weights);

// Fully dynamic leveled structure for one fixed guess of MAX = max f(e) under
// a matroid constraint. Maintains a solution I_T with (4+eps) f(I_T) >= OPT
// for the guess bracketing the true MAX. Single writer per instance.
class MatroidInstance {
 public:
  MatroidInstance(SubmodularOracle f, MatroidOracle matroid, double max_guess,
                  double epsilon, std::uint64_t seed, double float_tol = 0.0);

  // The admission test for one level: the marginal gain w.r.t. I' must lie in
  // [eps/(10k) * max_guess, max_guess], and e must either keep I independent
  // or displace a solution member of at most half its gain.
  // Precondition: e not in I_prime; weights defined on all of I.
  static PromoteOutcome promote(const SubmodularOracle& f, const MatroidOracle& m,
                                const ElementSet& I, const ElementSet& I_prime,
                                double cached_f_I_prime, ElementId e,
                                const std::unordered_map<ElementId, double>& weights,
                                double threshold_lo, double threshold_hi,
                                double tol = 0.0);

  // Bulk build from a ground set; equivalent to inserting one by one.
  // Precondition: structure empty.
  void init(const ElementSet& universe);

  void insert(ElementId v);
  void erase(ElementId v);

  bool alive(ElementId v) const { return levels_[0].pool.contains(v); }
  std::size_t alive_count() const { return levels_[0].pool.size(); }

  // (I_T, f(I_T)). The evaluation is billed to the reporting counter and
  // cached until the structure changes.
  std::pair<ElementSet, double> solution() const;

  int level_count() const { return static_cast<int>(levels_.size()) - 2; }  // T
  const std::vector<MatroidLevel>& levels() const { return levels_; }
  const std::unordered_map<ElementId, double>& weights() const { return weights_; }

  double max_guess() const { return max_guess_; }
  double epsilon() const { return epsilon_; }
  int rank() const { return k_; }
  double admission_threshold() const;  // eps/(10k) * max_guess

  // Recomputes Starter/Survivor/Independent/Weight/Terminator from first
  // principles: re-runs the admission filter per level, re-derives each I'_i
  // as a union, and re-evaluates every weight and cached value. Billed to the
  // audit counters. The expected universe defaults to this instance's R_0.
  InvariantReport check_level_invariants() const;
  InvariantReport check_level_invariants(const ElementSet& expected_universe) const;

  std::uint64_t update_queries() const { return f_.queries() + matroid_.queries(); }
  std::uint64_t audit_queries() const { return audit_f_.queries() + audit_m_.queries(); }
  std::uint64_t report_queries() const { return report_f_.queries(); }

  void reseed(std::uint64_t seed) { rng_.seed(seed); }

  // When enabled, every binary-search placement is replayed as a linear scan
  // over the levels (on the audit counters) and the placements must agree.
  void enable_shadow_placement_check(bool on) { shadow_check_ = on; }
  std::uint64_t shadow_placements_checked() const { return shadow_placements_; }

  // Test hook: damages a survivor pool so fault-injection tests can watch the
  // checker fail.
  void corrupt_pool_for_testing(int level, ElementId e);

 private:
  PromoteOutcome promote_at(int level, ElementId e) const;
  PromoteOutcome promote_with(const SubmodularOracle& f, const MatroidOracle& m,
                              int level, ElementId e) const;
  // Rebuilds levels i..T from the pool R_i by drawing a fresh uniform
  // permutation. Requires levels 0..i-1 final and levels_[i].pool populated.
  void construct_level(int i);
  void choose(int level, ElementId e, const PromoteOutcome& out);
  void drop_levels_above(int level);
  int binary_search_fail_level(int lo, int hi, ElementId e) const;

  SubmodularOracle f_;
  MatroidOracle matroid_;
  SubmodularOracle audit_f_;
  MatroidOracle audit_m_;
  SubmodularOracle report_f_;
  double max_guess_;
  double epsilon_;
  int k_;
  double tol_;
  Rng rng_;
  std::vector<MatroidLevel> levels_;  // indices 0..T+1
  std::unordered_map<ElementId, double> weights_;  // fixed at promotion time
  bool shadow_check_ = false;
  std::uint64_t shadow_placements_ = 0;
  mutable std::optional<double> solution_value_;
};

}  // namespace dynsubmax
