#include "dynsubmax/runner.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "dynsubmax/reference.hpp"

namespace dynsubmax {

RunSummary run(const RunConfig& config) {
  if (!config.f) throw std::invalid_argument("run: missing submodular function");
  if (config.solver.constraint == Constraint::Matroid && !config.matroid) {
    throw std::invalid_argument("run: matroid constraint needs a matroid oracle");
  }
  if (config.baseline_every < 1) {
    throw std::invalid_argument("run: baseline_every must be >= 1");
  }

  DynamicSolver solver(config.solver, config.f, config.matroid);
  const SubmodularOracle baseline_f{config.f};
  const std::optional<MatroidOracle> baseline_m =
      config.matroid ? std::optional<MatroidOracle>(MatroidOracle(config.matroid))
                     : std::nullopt;

  RunSummary summary;
  summary.events = config.events.size();
  std::uint64_t prev_update = 0;
  std::uint64_t prev_audit = 0;

  ElementSet alive;
  std::size_t t = 0;
  for (const StreamEvent& event : config.events) {
    ++t;
    const bool is_insert = event.op == StreamEvent::Op::Insert;
    try {
      if (is_insert) {
        solver.insert(event.id);
        alive.insert(event.id);
      } else {
        solver.erase(event.id);
        alive.erase(event.id);
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("event " + std::to_string(t) + ": " + e.what());
    }

    std::string invariant_status = "skipped";
    if (config.check_invariants) {
      invariant_status = "ok";
      for (const auto& [index, report] : solver.check_invariants()) {
        if (!report.ok()) {
          ++summary.invariant_violations;
          invariant_status = "instance " + std::to_string(index) + ": " +
                             report.first_failure();
          break;
        }
      }
    }

    const auto best = solver.best_solution();
    const SolverStats stats = solver.stats();
    const std::uint64_t step_update = stats.update_queries - prev_update;
    const std::uint64_t step_audit = stats.audit_queries - prev_audit;
    prev_update = stats.update_queries;
    prev_audit = stats.audit_queries;

    summary.total_update_queries += step_update;
    summary.max_update_queries = std::max(summary.max_update_queries, step_update);
    summary.total_audit_queries += step_audit;
    summary.max_touched = std::max(summary.max_touched, stats.last_touched);
    summary.final_value = best.value;
    if (!is_insert && step_update == 0) ++summary.light_deletes;

    std::optional<double> ratio;
    if (config.baseline != BaselineKind::None && t % config.baseline_every == 0) {
      BaselineResult base;
      if (config.solver.constraint == Constraint::Matroid) {
        base = config.baseline == BaselineKind::Exact
                   ? brute_force_opt_matroid(alive, baseline_f, *baseline_m)
                   : greedy_matroid(alive, baseline_f, *baseline_m);
      } else {
        base = config.baseline == BaselineKind::Exact
                   ? brute_force_opt_cardinality(alive, baseline_f, solver.k())
                   : greedy_cardinality(alive, baseline_f, solver.k());
      }
      if (base.value > 0.0) {
        ratio = best.value / base.value;
        summary.worst_ratio = std::min(summary.worst_ratio, *ratio);
      }
    }

    if (config.out) {
      nlohmann::ordered_json record;
      record["t"] = t;
      record["op"] = is_insert ? "+" : "-";
      record["id"] = event.id;
      record["n"] = alive.size();
      record["value"] = best.value;
      if (best.index) record["instance"] = *best.index;
      nlohmann::ordered_json levels = nlohmann::ordered_json::object();
      for (const auto& [index, levels_count] : stats.levels_per_instance) {
        levels[std::to_string(index)] = levels_count;
      }
      record["levels"] = std::move(levels);
      record["touched"] = stats.last_touched;
      record["update_queries"] = step_update;
      record["audit_queries"] = step_audit;
      record["invariants"] = invariant_status;
      if (ratio) record["ratio"] = *ratio;
      *config.out << record.dump() << '\n';
    }
  }

  const SolverStats stats = solver.stats();
  summary.total_report_queries = stats.report_queries;
  if (summary.events > 0) {
    summary.mean_update_queries = static_cast<double>(summary.total_update_queries) /
                                  static_cast<double>(summary.events);
  }

  if (config.out) {
    nlohmann::ordered_json record;
    record["summary"] = true;
    record["events"] = summary.events;
    record["total_update_queries"] = summary.total_update_queries;
    record["mean_update_queries"] = summary.mean_update_queries;
    record["max_update_queries"] = summary.max_update_queries;
    record["total_audit_queries"] = summary.total_audit_queries;
    record["total_report_queries"] = summary.total_report_queries;
    record["routing_queries"] = stats.routing_queries;
    record["live_instances"] = stats.live_instances;
    record["light_deletes"] = summary.light_deletes;
    record["max_touched"] = summary.max_touched;
    record["invariant_violations"] = summary.invariant_violations;
    if (config.baseline != BaselineKind::None) {
      record["worst_ratio"] = summary.worst_ratio;
    }
    if (summary.final_value) record["final_value"] = *summary.final_value;
    *config.out << record.dump() << '\n';
  }
  return summary;
}

}  // namespace dynsubmax
