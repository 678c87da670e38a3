#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dynsubmax/elements.hpp"
#include "dynsubmax/invariants.hpp"
#include "dynsubmax/rng.hpp"
#include "dynsubmax/submodular.hpp"

namespace dynsubmax {

// One layer of the cardinality-constrained structure: the survivor pool R_i,
// the solution prefix I_i with |I_i| = i, the sampled element e_i, and a
// cached f(I_i).
struct CardinalityLevel {
  RandomSet pool;
  ElementSet solution;
  std::optional<ElementId> chosen;
  double solution_value = 0.0;
};

struct CardPromoteOutcome {
  bool admitted = false;
  double gain = 0.0;  // f(I + e) - f(I)
};

// Fully dynamic leveled structure for one fixed guess of OPT under a
// cardinality constraint k, with threshold tau = opt_guess / (2k). Maintains
// a solution I_T with (2+eps) f(I_T) >= OPT for the guess bracketing the true
// OPT. Single writer per instance.
class CardinalityInstance {
 public:
  CardinalityInstance(SubmodularOracle f, int k, double opt_guess,
                      std::uint64_t seed, double float_tol = 0.0);

  // True iff f(I + e) - f(I) >= tau and |I| < k. Inclusive at exactly tau.
  static CardPromoteOutcome promote(const SubmodularOracle& f, const ElementSet& I,
                                    double cached_f_I, ElementId e, int k,
                                    double tau, double tol = 0.0);

  void init(const ElementSet& universe);
  void insert(ElementId v);
  void erase(ElementId v);

  bool alive(ElementId v) const { return levels_[0].pool.contains(v); }
  std::size_t alive_count() const { return levels_[0].pool.size(); }

  // (I_T, f(I_T)); the value is the level cache, so reporting costs no query.
  std::pair<ElementSet, double> solution() const;

  int level_count() const { return static_cast<int>(levels_.size()) - 2; }  // T
  const std::vector<CardinalityLevel>& levels() const { return levels_; }

  double tau() const { return tau_; }
  double opt_guess() const { return opt_guess_; }
  int k() const { return k_; }

  InvariantReport check_level_invariants() const;
  InvariantReport check_level_invariants(const ElementSet& expected_universe) const;

  std::uint64_t update_queries() const { return f_.queries(); }
  std::uint64_t audit_queries() const { return audit_f_.queries(); }
  std::uint64_t report_queries() const { return 0; }

  void reseed(std::uint64_t seed) { rng_.seed(seed); }

  void enable_shadow_placement_check(bool on) { shadow_check_ = on; }
  std::uint64_t shadow_placements_checked() const { return shadow_placements_; }

  void corrupt_pool_for_testing(int level, ElementId e);

 private:
  CardPromoteOutcome promote_at(int level, ElementId e) const;
  CardPromoteOutcome promote_at_audit(int level, ElementId e) const;
  void construct_level(int i);
  void choose(int level, ElementId e, double gain);
  void drop_levels_above(int level);
  int binary_search_fail_level(int lo, int hi, ElementId e) const;

  SubmodularOracle f_;
  SubmodularOracle audit_f_;
  int k_;
  double opt_guess_;
  double tau_;
  double tol_;
  Rng rng_;
  std::vector<CardinalityLevel> levels_;  // indices 0..T+1
  bool shadow_check_ = false;
  std::uint64_t shadow_placements_ = 0;
};

}  // namespace dynsubmax
