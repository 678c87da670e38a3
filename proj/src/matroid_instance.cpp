#include "dynsubmax/matroid_instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dynsubmax {
namespace {

double weight_or_infinity(const std::unordered_map<ElementId, double>& weights,
                          ElementId e) {
  auto it = weights.find(e);
  return it == weights.end() ? std::numeric_limits<double>::infinity() : it->second;
}

// Prefix order shared by the swap search and its brute-force test oracle:
// descending weight, missing weights first, equal weights by descending id so
// the element found last is the smallest-id argmin.
std::vector<ElementId> prefix_order(const ElementSet& I, ElementId e,
                                    const std::unordered_map<ElementId, double>& weights) {
  std::vector<ElementId> order;
  order.reserve(I.size() + 1);
  order.push_back(e);
  for (ElementId x : I) order.push_back(x);
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    const double wa = weight_or_infinity(weights, a);
    const double wb = weight_or_infinity(weights, b);
    if (wa != wb) return wa > wb;
    return a > b;
  });
  return order;
}

// Smallest dependent prefix of `order`, given that the full set is dependent.
// Dependence of prefixes is monotone, so binary search applies.
ElementId smallest_dependent_prefix_tail(const MatroidOracle& m,
                                         const std::vector<ElementId>& order) {
  std::size_t lo = 1, hi = order.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ElementSet prefix = ElementSet::from(
        std::vector<ElementId>(order.begin(), order.begin() + mid));
    if (m.is_independent(prefix)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return order[lo - 1];
}

}  // namespace

ElementId find_min_circuit_swap(const MatroidOracle& m, const ElementSet& I,
                                ElementId e,
                                const std::unordered_map<ElementId, double>& weights) {
  if (I.contains(e)) {
    throw std::invalid_argument("find_min_circuit_swap: candidate already in I");
  }
  if (m.is_independent(I.plus(e))) {
    throw std::invalid_argument("find_min_circuit_swap: I + e is independent");
  }
  return smallest_dependent_prefix_tail(m, prefix_order(I, e, weights));
}

PromoteOutcome MatroidInstance::promote(
    const SubmodularOracle& f, const MatroidOracle& m, const ElementSet& I,
    const ElementSet& I_prime, double cached_f_I_prime, ElementId e,
    const std::unordered_map<ElementId, double>& weights, double threshold_lo,
    double threshold_hi, double tol) {
  if (I_prime.contains(e)) {
    throw std::invalid_argument("promote: element already in I'");
  }
  for (ElementId x : I) {
    if (!weights.count(x)) {
      throw std::invalid_argument("promote: weight missing for solution member");
    }
  }
  PromoteOutcome out;
  out.gain = f.marginal_gain_cached(I_prime, e, cached_f_I_prime);
  if (!(out.gain >= threshold_lo - tol && out.gain <= threshold_hi + tol)) {
    return out;  // Fail: marginal gain outside the admission interval
  }
  if (m.is_independent(I.plus(e))) {
    out.kind = PromoteOutcome::Kind::Free;
    return out;
  }
  const ElementId swap = smallest_dependent_prefix_tail(m, prefix_order(I, e, weights));
  if (swap == e) {
    return out;  // {e} itself dependent; no solution member can restore independence
  }
  if (2.0 * weights.at(swap) <= out.gain + tol) {
    out.kind = PromoteOutcome::Kind::Swap;
    out.swapped = swap;
  }
  return out;
}

MatroidInstance::MatroidInstance(SubmodularOracle f, MatroidOracle matroid,
                                 double max_guess, double epsilon,
                                 std::uint64_t seed, double float_tol)
    : f_(std::move(f)),
      matroid_(std::move(matroid)),
      audit_f_(f_.fresh_handle()),
      audit_m_(matroid_.fresh_handle()),
      report_f_(f_.fresh_handle()),
      max_guess_(max_guess),
      epsilon_(epsilon),
      k_(matroid_.rank()),
      tol_(float_tol),
      rng_(seed) {
  if (!(max_guess_ > 0.0)) throw std::invalid_argument("max guess must be positive");
  if (!(epsilon_ > 0.0 && epsilon_ <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1]");
  }
  if (k_ < 1) throw std::invalid_argument("matroid rank must be at least 1");
  if (tol_ < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
  levels_.resize(2);  // empty structure: L_0 plus the empty terminator level
}

double MatroidInstance::admission_threshold() const {
  return epsilon_ / (10.0 * k_) * max_guess_;
}

PromoteOutcome MatroidInstance::promote_at(int level, ElementId e) const {
  const MatroidLevel& L = levels_[static_cast<std::size_t>(level)];
  return promote(f_, matroid_, L.solution, L.cumulative, L.cumulative_value, e,
                 weights_, admission_threshold(), max_guess_, tol_);
}

void MatroidInstance::init(const ElementSet& universe) {
  if (levels_.size() != 2 || !levels_[0].pool.empty() || !levels_[1].pool.empty()) {
    throw std::logic_error("init: structure is not empty");
  }
  for (ElementId v : universe) levels_[0].pool.insert(v);
  for (ElementId v : universe) {
    if (promote_at(0, v).admitted()) levels_[1].pool.insert(v);
  }
  construct_level(1);
}

void MatroidInstance::drop_levels_above(int level) {
  const auto first = static_cast<std::size_t>(level);
  for (std::size_t j = first; j < levels_.size(); ++j) {
    if (levels_[j].chosen) weights_.erase(*levels_[j].chosen);
    levels_[j].chosen.reset();
  }
  levels_.resize(first + 1);
  levels_[first].solution = {};
  levels_[first].cumulative = {};
  levels_[first].cumulative_value = 0.0;
}

void MatroidInstance::choose(int level, ElementId e, const PromoteOutcome& out) {
  levels_.emplace_back();  // opens the next pool, initially empty
  MatroidLevel& prev = levels_[static_cast<std::size_t>(level) - 1];
  MatroidLevel& cur = levels_[static_cast<std::size_t>(level)];
  weights_[e] = out.gain;
  cur.chosen = e;
  cur.solution = prev.solution.plus(e);
  if (out.kind == PromoteOutcome::Kind::Swap) cur.solution.erase(out.swapped);
  cur.cumulative = prev.cumulative.plus(e);
  cur.cumulative_value = prev.cumulative_value + out.gain;
}

int MatroidInstance::binary_search_fail_level(int lo, int hi, ElementId e) const {
  // promote_at(hi, e) is already known to fail; admission is monotone
  // non-increasing across levels, so the lowest failing level is well-defined.
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (promote_at(mid, e).admitted()) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

void MatroidInstance::construct_level(int i) {
  drop_levels_above(i);
  PermutationDraw draw(levels_[static_cast<std::size_t>(i)].pool.items());
  int ell = i;
  while (!draw.empty()) {
    const ElementId e = draw.pop(rng_);
    const PromoteOutcome out = promote_at(ell - 1, e);
    int z;
    if (out.admitted()) {
      z = ell;
      choose(ell, e, out);
      ++ell;
    } else {
      if (ell == i) {
        // Every pool element was admitted at level i-1 when it entered the
        // pool, and that check is a pure function of unchanged state.
        throw std::logic_error(
            "construct_level: pool element rejected at its entry level; "
            "the oracle is not monotone submodular");
      }
      z = binary_search_fail_level(i, ell - 1, e);
      if (shadow_check_) {
        int linear = i;
        while (linear < ell - 1 && promote_with(audit_f_, audit_m_, linear, e).admitted()) {
          ++linear;
        }
        ++shadow_placements_;
        if (linear != z) {
          std::ostringstream msg;
          msg << "placement mismatch for element " << e << ": binary search " << z
              << ", linear scan " << linear;
          throw std::logic_error(msg.str());
        }
      }
    }
    for (int r = i + 1; r <= z; ++r) {
      levels_[static_cast<std::size_t>(r)].pool.insert(e);
    }
  }
  solution_value_.reset();
}

PromoteOutcome MatroidInstance::promote_with(const SubmodularOracle& f,
                                             const MatroidOracle& m, int level,
                                             ElementId e) const {
  const MatroidLevel& L = levels_[static_cast<std::size_t>(level)];
  return promote(f, m, L.solution, L.cumulative, L.cumulative_value, e, weights_,
                 admission_threshold(), max_guess_, tol_);
}

void MatroidInstance::insert(ElementId v) {
  if (alive(v)) throw std::invalid_argument("insert: element is already alive");
  levels_[0].pool.insert(v);
  const int T = level_count();
  for (int i = 1; i <= T + 1; ++i) {
    const PromoteOutcome out = promote_at(i - 1, v);
    if (!out.admitted()) break;
    MatroidLevel& cur = levels_[static_cast<std::size_t>(i)];
    cur.pool.insert(v);
    if (!one_in(rng_, cur.pool.size())) continue;

    // v becomes e_i; rewrite level i and rebuild everything above it.
    if (cur.chosen) weights_.erase(*cur.chosen);
    weights_[v] = out.gain;
    const MatroidLevel& prev = levels_[static_cast<std::size_t>(i) - 1];
    cur.chosen = v;
    cur.solution = prev.solution.plus(v);
    if (out.kind == PromoteOutcome::Kind::Swap) cur.solution.erase(out.swapped);
    cur.cumulative = prev.cumulative.plus(v);
    cur.cumulative_value = prev.cumulative_value + out.gain;

    if (levels_.size() == static_cast<std::size_t>(i) + 1) levels_.emplace_back();
    drop_levels_above(i + 1);
    levels_[static_cast<std::size_t>(i) + 1].pool.clear();
    // Survivor filter: R_{i+1} from R_i minus the chosen element itself.
    for (ElementId x : levels_[static_cast<std::size_t>(i)].pool.items()) {
      if (x == v) continue;
      if (promote_at(i, x).admitted()) {
        levels_[static_cast<std::size_t>(i) + 1].pool.insert(x);
      }
    }
    construct_level(i + 1);
    return;
  }
}

void MatroidInstance::erase(ElementId v) {
  if (!alive(v)) throw std::invalid_argument("delete: element is not alive");
  levels_[0].pool.erase(v);
  const int T = level_count();
  for (int i = 1; i <= T; ++i) {
    MatroidLevel& cur = levels_[static_cast<std::size_t>(i)];
    if (!cur.pool.contains(v)) break;  // pools are nested; v appears nowhere above
    cur.pool.erase(v);
    if (cur.chosen == v) {
      construct_level(i);
      break;
    }
  }
}

std::pair<ElementSet, double> MatroidInstance::solution() const {
  const ElementSet& s = levels_[static_cast<std::size_t>(level_count())].solution;
  if (!solution_value_) {
    solution_value_ = s.empty() ? 0.0 : report_f_.evaluate(s);
  }
  return {s, *solution_value_};
}

void MatroidInstance::corrupt_pool_for_testing(int level, ElementId e) {
  levels_.at(static_cast<std::size_t>(level)).pool.erase(e);
}

InvariantReport MatroidInstance::check_level_invariants() const {
  return check_level_invariants(levels_[0].pool.to_element_set());
}

InvariantReport MatroidInstance::check_level_invariants(
    const ElementSet& expected_universe) const {
  const std::uint64_t audit_before = audit_queries();
  InvariantCheck starter{"starter"}, survivor{"survivor"},
      independent{"independent"}, weight{"weight"}, terminator{"terminator"},
      cache{"cache"};
  const int T = level_count();

  auto fail = [](InvariantCheck& c, const std::string& detail) {
    if (c.ok) {
      c.ok = false;
      c.detail = detail;
    }
  };
  auto close_enough = [this](double a, double b) { return std::abs(a - b) <= tol_; };
  auto level_tag = [](int i) { return "level " + std::to_string(i); };

  if (!(levels_[0].pool.to_element_set() == expected_universe)) {
    fail(starter, "R_0 differs from the alive set");
  }
  if (!levels_[0].solution.empty() || !levels_[0].cumulative.empty() ||
      levels_[0].chosen || levels_[0].cumulative_value != 0.0) {
    fail(starter, "level 0 must carry empty sets");
  }

  ElementSet I_prev, Ip_prev;  // recomputed I_{i-1}, I'_{i-1}
  double f_Ip_prev = 0.0;
  for (int i = 1; i <= T + 1; ++i) {
    const MatroidLevel& below = levels_[static_cast<std::size_t>(i) - 1];
    const MatroidLevel& cur = levels_[static_cast<std::size_t>(i)];

    // Survivor: R_i must equal the admission filter over R_{i-1} - e_{i-1},
    // re-evaluated from scratch.
    ElementSet expected_pool;
    for (ElementId x : below.pool.items()) {
      if (below.chosen && x == *below.chosen) continue;
      if (Ip_prev.contains(x)) {
        fail(survivor, level_tag(i) + ": pool retains already-chosen element " +
                           std::to_string(x));
        continue;
      }
      const PromoteOutcome out =
          promote(audit_f_, audit_m_, I_prev, Ip_prev, f_Ip_prev, x, weights_,
                  admission_threshold(), max_guess_, tol_);
      if (out.admitted()) expected_pool.insert(x);
    }
    if (!(expected_pool == cur.pool.to_element_set())) {
      fail(survivor, level_tag(i) + ": stored pool differs from recomputed filter");
    }

    if (i == T + 1) break;

    if (!cur.chosen) {
      fail(independent, level_tag(i) + ": missing chosen element");
      break;
    }
    const ElementId ei = *cur.chosen;
    if (!cur.pool.contains(ei)) {
      fail(weight, level_tag(i) + ": chosen element not in its pool");
    }
    if (Ip_prev.contains(ei)) {
      fail(independent, level_tag(i) + ": chosen element repeats an earlier one");
      break;
    }

    const double audited_w = audit_f_.marginal_gain_cached(Ip_prev, ei, f_Ip_prev);
    auto wit = weights_.find(ei);
    if (wit == weights_.end() || !close_enough(wit->second, audited_w)) {
      fail(weight, level_tag(i) + ": stored weight differs from re-derived gain");
    }

    const PromoteOutcome out =
        promote(audit_f_, audit_m_, I_prev, Ip_prev, f_Ip_prev, ei, weights_,
                admission_threshold(), max_guess_, tol_);
    if (!out.admitted()) {
      fail(independent, level_tag(i) + ": chosen element is not promoting");
    }
    ElementSet expected_solution = I_prev.plus(ei);
    if (out.kind == PromoteOutcome::Kind::Swap) expected_solution.erase(out.swapped);
    if (!(expected_solution == cur.solution)) {
      fail(independent, level_tag(i) + ": stored I differs from recomputed I");
    }
    if (!audit_m_.is_independent(cur.solution)) {
      fail(independent, level_tag(i) + ": stored I is dependent");
    }
    ElementSet expected_cumulative = Ip_prev;
    for (ElementId x : cur.solution) expected_cumulative.insert(x);
    if (!(expected_cumulative == cur.cumulative)) {
      fail(independent, level_tag(i) + ": stored I' differs from the union of I_j");
    }
    const double fresh = audit_f_.evaluate(cur.cumulative);
    if (!close_enough(fresh, cur.cumulative_value)) {
      fail(cache, level_tag(i) + ": cached f(I') is stale");
    }

    I_prev = cur.solution;
    Ip_prev = cur.cumulative;
    f_Ip_prev = fresh;
  }

  if (!levels_.back().pool.empty()) {
    fail(terminator, "R_{T+1} is not empty");
  }

  InvariantReport report;
  report.checks = {starter, survivor, independent, weight, terminator, cache};
  report.audit_queries = audit_queries() - audit_before;
  return report;
}

}  // namespace dynsubmax
