#include "dynsubmax/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dynsubmax {
namespace {

// Largest i with base^i <= x, robust to log() rounding at the boundaries.
int floor_log(double base, double x) {
  int i = static_cast<int>(std::floor(std::log(x) / std::log(base)));
  while (std::pow(base, i) > x) --i;
  while (std::pow(base, i + 1) <= x) ++i;
  return i;
}

// Smallest i with base^i >= x.
int ceil_log(double base, double x) {
  int i = static_cast<int>(std::ceil(std::log(x) / std::log(base)));
  while (std::pow(base, i) < x) ++i;
  while (i > std::numeric_limits<int>::min() && std::pow(base, i - 1) >= x) --i;
  return i;
}

}  // namespace

DynamicSolver::DynamicSolver(SolverConfig config,
                             std::shared_ptr<const SubmodularFunction> f,
                             std::shared_ptr<const Matroid> matroid)
    : config_(config),
      f_(std::move(f)),
      matroid_(std::move(matroid)),
      routing_f_(SubmodularOracle(f_)),
      k_(config.k) {
  if (!(config_.epsilon > 0.0 && config_.epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1]");
  }
  if (config_.constraint == Constraint::Matroid) {
    if (!matroid_) throw std::invalid_argument("matroid constraint needs a matroid");
    k_ = matroid_->rank();
  }
  if (k_ < 1) throw std::invalid_argument("constraint parameter k must be >= 1");
}

double DynamicSolver::guess_value(int index) const {
  const double base =
      config_.constraint == Constraint::Cardinality ? 1.0 + config_.epsilon : 2.0;
  return std::pow(base, index);
}

std::pair<int, int> DynamicSolver::route(double value) const {
  if (!(value > 0.0)) return {0, -1};  // zero-value elements are never promoting
  // Cardinality: admit i with guess/2k <= value <= guess, guesses (1+eps)^i.
  // Matroid: admit i with (eps/10k) * guess <= value <= guess, guesses 2^i.
  const bool card = config_.constraint == Constraint::Cardinality;
  const double base = card ? 1.0 + config_.epsilon : 2.0;
  const double spread = card ? 2.0 * k_ : 10.0 * k_ / config_.epsilon;
  int lo = ceil_log(base, value);
  int hi = floor_log(base, spread * value);
  if (config_.min_index) lo = std::max(lo, *config_.min_index);
  if (config_.max_index) hi = std::min(hi, *config_.max_index);
  return {lo, hi};
}

std::pair<int, int> DynamicSolver::route_unclamped(double value) const {
  if (!(value > 0.0)) return {0, -1};
  const bool card = config_.constraint == Constraint::Cardinality;
  const double base = card ? 1.0 + config_.epsilon : 2.0;
  const double spread = card ? 2.0 * k_ : 10.0 * k_ / config_.epsilon;
  return {ceil_log(base, value), floor_log(base, spread * value)};
}

int DynamicSolver::routing_width_bound() const {
  const bool card = config_.constraint == Constraint::Cardinality;
  const double base = card ? 1.0 + config_.epsilon : 2.0;
  const double spread = card ? 2.0 * k_ : 10.0 * k_ / config_.epsilon;
  return static_cast<int>(std::ceil(std::log(spread) / std::log(base))) + 1;
}

MatroidInstance& DynamicSolver::matroid_instance(int index) {
  auto it = matroid_instances_.find(index);
  if (it == matroid_instances_.end()) {
    it = matroid_instances_
             .emplace(index,
                      MatroidInstance(SubmodularOracle(f_), MatroidOracle(matroid_),
                                      guess_value(index), config_.epsilon,
                                      derive_seed(config_.seed, index),
                                      config_.float_tol))
             .first;
    it->second.enable_shadow_placement_check(shadow_check_);
  }
  return it->second;
}

CardinalityInstance& DynamicSolver::cardinality_instance(int index) {
  auto it = cardinality_instances_.find(index);
  if (it == cardinality_instances_.end()) {
    it = cardinality_instances_
             .emplace(index, CardinalityInstance(SubmodularOracle(f_), k_,
                                                 guess_value(index),
                                                 derive_seed(config_.seed, index),
                                                 config_.float_tol))
             .first;
    it->second.enable_shadow_placement_check(shadow_check_);
  }
  return it->second;
}

double DynamicSolver::singleton_value(ElementId v) {
  auto it = value_memo_.find(v);
  if (it != value_memo_.end()) return it->second;
  const double value = routing_f_.evaluate(ElementSet{v});
  value_memo_.emplace(v, value);
  return value;
}

void DynamicSolver::insert(ElementId v) {
  if (alive_.count(v)) throw std::invalid_argument("insert: element is already alive");
  const double value = singleton_value(v);
  alive_.emplace(v, value);
  const auto [lo, hi] = route(value);
  last_touched_ = hi < lo ? 0 : hi - lo + 1;
  if (hi >= lo && hi - lo + 1 > routing_width_bound()) {
    throw std::logic_error("routing interval exceeds its width bound");
  }
  if (route_unclamped(value) != std::pair<int, int>(lo, hi)) ++clamped_updates_;
  for (int i = lo; i <= hi; ++i) {
    if (config_.constraint == Constraint::Matroid) {
      matroid_instance(i).insert(v);
    } else {
      cardinality_instance(i).insert(v);
    }
  }
}

void DynamicSolver::erase(ElementId v) {
  auto it = alive_.find(v);
  if (it == alive_.end()) throw std::invalid_argument("delete: element is not alive");
  const double value = it->second;
  alive_.erase(it);
  const auto [lo, hi] = route(value);
  last_touched_ = hi < lo ? 0 : hi - lo + 1;
  for (int i = lo; i <= hi; ++i) {
    if (config_.constraint == Constraint::Matroid) {
      matroid_instance(i).erase(v);
    } else {
      cardinality_instance(i).erase(v);
    }
  }
}

bool DynamicSolver::element_in_survivor_pools(ElementId v) const {
  auto it = alive_.find(v);
  if (it == alive_.end()) return false;
  const auto [lo, hi] = route(it->second);
  for (int i = lo; i <= hi; ++i) {
    // Pools are nested, so membership in R_1 covers all higher pools.
    if (auto mit = matroid_instances_.find(i); mit != matroid_instances_.end()) {
      if (mit->second.levels()[1].pool.contains(v)) return true;
    }
    if (auto cit = cardinality_instances_.find(i); cit != cardinality_instances_.end()) {
      if (cit->second.levels()[1].pool.contains(v)) return true;
    }
  }
  return false;
}

DynamicSolver::Best DynamicSolver::best_solution() const {
  Best best;
  for (const auto& [index, inst] : matroid_instances_) {
    const auto [set, value] = inst.solution();
    if (!best.index || value > best.value) {
      best = Best{set, value, index};
    }
  }
  for (const auto& [index, inst] : cardinality_instances_) {
    const auto [set, value] = inst.solution();
    if (!best.index || value > best.value) {
      best = Best{set, value, index};
    }
  }
  return best;
}

SolverStats DynamicSolver::stats() const {
  SolverStats s;
  s.routing_queries = routing_f_.queries();
  s.update_queries = s.routing_queries;
  s.last_touched = last_touched_;
  s.clamped_updates = clamped_updates_;
  for (const auto& [index, inst] : matroid_instances_) {
    s.update_queries += inst.update_queries();
    s.report_queries += inst.report_queries();
    s.audit_queries += inst.audit_queries();
    s.max_level_count = std::max(s.max_level_count, inst.level_count());
    s.levels_per_instance.emplace_back(index, inst.level_count());
    ++s.live_instances;
  }
  for (const auto& [index, inst] : cardinality_instances_) {
    s.update_queries += inst.update_queries();
    s.report_queries += inst.report_queries();
    s.audit_queries += inst.audit_queries();
    s.max_level_count = std::max(s.max_level_count, inst.level_count());
    s.levels_per_instance.emplace_back(index, inst.level_count());
    ++s.live_instances;
  }
  return s;
}

std::vector<std::pair<int, InvariantReport>> DynamicSolver::check_invariants() const {
  // Expected universe of instance i: alive elements routed to an interval
  // containing i. Routing is a pure function of the memoized value.
  std::vector<std::pair<int, InvariantReport>> reports;
  auto expected_universe = [this](int index) {
    ElementSet universe;
    for (const auto& [id, value] : alive_) {
      const auto [lo, hi] = route(value);
      if (index >= lo && index <= hi) universe.insert(id);
    }
    return universe;
  };
  for (const auto& [index, inst] : matroid_instances_) {
    reports.emplace_back(index, inst.check_level_invariants(expected_universe(index)));
  }
  for (const auto& [index, inst] : cardinality_instances_) {
    reports.emplace_back(index, inst.check_level_invariants(expected_universe(index)));
  }
  return reports;
}

void DynamicSolver::enable_shadow_placement_check(bool on) {
  shadow_check_ = on;
  for (auto& [index, inst] : matroid_instances_) inst.enable_shadow_placement_check(on);
  for (auto& [index, inst] : cardinality_instances_) {
    inst.enable_shadow_placement_check(on);
  }
}

std::uint64_t DynamicSolver::shadow_placements_checked() const {
  std::uint64_t total = 0;
  for (const auto& [index, inst] : matroid_instances_) {
    total += inst.shadow_placements_checked();
  }
  for (const auto& [index, inst] : cardinality_instances_) {
    total += inst.shadow_placements_checked();
  }
  return total;
}

}  // namespace dynsubmax
