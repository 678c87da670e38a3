#include "dynsubmax/cardinality_instance.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dynsubmax {

CardPromoteOutcome CardinalityInstance::promote(const SubmodularOracle& f,
                                                const ElementSet& I,
                                                double cached_f_I, ElementId e,
                                                int k, double tau, double tol) {
  if (I.contains(e)) {
    throw std::invalid_argument("promote: element already in I");
  }
  CardPromoteOutcome out;
  out.gain = f.marginal_gain_cached(I, e, cached_f_I);
  out.admitted = out.gain >= tau - tol && I.size() < static_cast<std::size_t>(k);
  return out;
}

CardinalityInstance::CardinalityInstance(SubmodularOracle f, int k, double opt_guess,
                                         std::uint64_t seed, double float_tol)
    : f_(std::move(f)),
      audit_f_(f_.fresh_handle()),
      k_(k),
      opt_guess_(opt_guess),
      tau_(opt_guess / (2.0 * k)),
      tol_(float_tol),
      rng_(seed) {
  if (k_ < 1) throw std::invalid_argument("cardinality bound must be at least 1");
  if (!(opt_guess_ > 0.0)) throw std::invalid_argument("opt guess must be positive");
  if (tol_ < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
  levels_.resize(2);
}

CardPromoteOutcome CardinalityInstance::promote_at(int level, ElementId e) const {
  const CardinalityLevel& L = levels_[static_cast<std::size_t>(level)];
  return promote(f_, L.solution, L.solution_value, e, k_, tau_, tol_);
}

CardPromoteOutcome CardinalityInstance::promote_at_audit(int level, ElementId e) const {
  const CardinalityLevel& L = levels_[static_cast<std::size_t>(level)];
  return promote(audit_f_, L.solution, L.solution_value, e, k_, tau_, tol_);
}

void CardinalityInstance::init(const ElementSet& universe) {
  if (levels_.size() != 2 || !levels_[0].pool.empty() || !levels_[1].pool.empty()) {
    throw std::logic_error("init: structure is not empty");
  }
  for (ElementId v : universe) levels_[0].pool.insert(v);
  for (ElementId v : universe) {
    if (promote_at(0, v).admitted) levels_[1].pool.insert(v);
  }
  construct_level(1);
}

void CardinalityInstance::drop_levels_above(int level) {
  const auto first = static_cast<std::size_t>(level);
  for (std::size_t j = first; j < levels_.size(); ++j) levels_[j].chosen.reset();
  levels_.resize(first + 1);
  levels_[first].solution = {};
  levels_[first].solution_value = 0.0;
}

void CardinalityInstance::choose(int level, ElementId e, double gain) {
  levels_.emplace_back();
  const CardinalityLevel& prev = levels_[static_cast<std::size_t>(level) - 1];
  CardinalityLevel& cur = levels_[static_cast<std::size_t>(level)];
  cur.chosen = e;
  cur.solution = prev.solution.plus(e);
  cur.solution_value = prev.solution_value + gain;
}

int CardinalityInstance::binary_search_fail_level(int lo, int hi, ElementId e) const {
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (promote_at(mid, e).admitted) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

void CardinalityInstance::construct_level(int i) {
  drop_levels_above(i);
  PermutationDraw draw(levels_[static_cast<std::size_t>(i)].pool.items());
  int ell = i;
  while (!draw.empty()) {
    const ElementId e = draw.pop(rng_);
    const CardPromoteOutcome out = promote_at(ell - 1, e);
    int z;
    if (out.admitted) {
      z = ell;
      choose(ell, e, out.gain);
      ++ell;
    } else {
      if (ell == i) {
        throw std::logic_error(
            "construct_level: pool element rejected at its entry level; "
            "the oracle is not monotone submodular");
      }
      z = binary_search_fail_level(i, ell - 1, e);
      if (shadow_check_) {
        int linear = i;
        while (linear < ell - 1 && promote_at_audit(linear, e).admitted) ++linear;
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
}

void CardinalityInstance::insert(ElementId v) {
  if (alive(v)) throw std::invalid_argument("insert: element is already alive");
  levels_[0].pool.insert(v);
  const int T = level_count();
  for (int i = 1; i <= T + 1; ++i) {
    const CardPromoteOutcome out = promote_at(i - 1, v);
    if (!out.admitted) break;
    CardinalityLevel& cur = levels_[static_cast<std::size_t>(i)];
    cur.pool.insert(v);
    if (!one_in(rng_, cur.pool.size())) continue;

    cur.chosen = v;
    const CardinalityLevel& prev = levels_[static_cast<std::size_t>(i) - 1];
    cur.solution = prev.solution.plus(v);
    cur.solution_value = prev.solution_value + out.gain;

    if (levels_.size() == static_cast<std::size_t>(i) + 1) levels_.emplace_back();
    drop_levels_above(i + 1);
    levels_[static_cast<std::size_t>(i) + 1].pool.clear();
    for (ElementId x : levels_[static_cast<std::size_t>(i)].pool.items()) {
      if (x == v) continue;
      if (promote_at(i, x).admitted) {
        levels_[static_cast<std::size_t>(i) + 1].pool.insert(x);
      }
    }
    construct_level(i + 1);
    return;
  }
}

void CardinalityInstance::erase(ElementId v) {
  if (!alive(v)) throw std::invalid_argument("delete: element is not alive");
  levels_[0].pool.erase(v);
  const int T = level_count();
  for (int i = 1; i <= T; ++i) {
    CardinalityLevel& cur = levels_[static_cast<std::size_t>(i)];
    if (!cur.pool.contains(v)) break;
    cur.pool.erase(v);
    if (cur.chosen == v) {
      construct_level(i);
      break;
    }
  }
}

std::pair<ElementSet, double> CardinalityInstance::solution() const {
  const CardinalityLevel& top = levels_[static_cast<std::size_t>(level_count())];
  return {top.solution, top.solution_value};
}

void CardinalityInstance::corrupt_pool_for_testing(int level, ElementId e) {
  levels_.at(static_cast<std::size_t>(level)).pool.erase(e);
}

InvariantReport CardinalityInstance::check_level_invariants() const {
  return check_level_invariants(levels_[0].pool.to_element_set());
}

InvariantReport CardinalityInstance::check_level_invariants(
    const ElementSet& expected_universe) const {
  const std::uint64_t audit_before = audit_queries();
  InvariantCheck starter{"starter"}, survivor{"survivor"},
      cardinality{"cardinality"}, terminator{"terminator"}, cache{"cache"};
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
  if (!levels_[0].solution.empty() || levels_[0].chosen ||
      levels_[0].solution_value != 0.0) {
    fail(starter, "level 0 must carry an empty solution");
  }

  ElementSet I_prev;
  double f_I_prev = 0.0;
  for (int i = 1; i <= T + 1; ++i) {
    const CardinalityLevel& below = levels_[static_cast<std::size_t>(i) - 1];
    const CardinalityLevel& cur = levels_[static_cast<std::size_t>(i)];

    ElementSet expected_pool;
    for (ElementId x : below.pool.items()) {
      if (below.chosen && x == *below.chosen) continue;
      if (I_prev.contains(x)) {
        fail(survivor, level_tag(i) + ": pool retains already-chosen element " +
                           std::to_string(x));
        continue;
      }
      if (promote(audit_f_, I_prev, f_I_prev, x, k_, tau_, tol_).admitted) {
        expected_pool.insert(x);
      }
    }
    if (!(expected_pool == cur.pool.to_element_set())) {
      fail(survivor, level_tag(i) + ": stored pool differs from recomputed filter");
    }

    if (i == T + 1) break;

    if (!cur.chosen) {
      fail(cardinality, level_tag(i) + ": missing chosen element");
      break;
    }
    const ElementId ei = *cur.chosen;
    if (!cur.pool.contains(ei)) {
      fail(cardinality, level_tag(i) + ": chosen element not in its pool");
    }
    if (I_prev.contains(ei)) {
      fail(cardinality, level_tag(i) + ": chosen element repeats an earlier one");
      break;
    }
    if (!promote(audit_f_, I_prev, f_I_prev, ei, k_, tau_, tol_).admitted) {
      fail(cardinality, level_tag(i) + ": chosen element is not promoting");
    }
    if (!(I_prev.plus(ei) == cur.solution) ||
        cur.solution.size() != static_cast<std::size_t>(i)) {
      fail(cardinality, level_tag(i) + ": stored I differs from I_{i-1} + e_i");
    }
    const double fresh = audit_f_.evaluate(cur.solution);
    if (!close_enough(fresh, cur.solution_value)) {
      fail(cache, level_tag(i) + ": cached f(I) is stale");
    }

    I_prev = cur.solution;
    f_I_prev = fresh;
  }

  if (!levels_.back().pool.empty()) {
    fail(terminator, "R_{T+1} is not empty");
  }

  InvariantReport report;
  report.checks = {starter, survivor, cardinality, terminator, cache};
  report.audit_queries = audit_queries() - audit_before;
  return report;
}

}  // namespace dynsubmax
