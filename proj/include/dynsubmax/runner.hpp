#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dynsubmax/matroid.hpp"
#include "dynsubmax/solver.hpp"
#include "dynsubmax/stream.hpp"
#include "dynsubmax/submodular.hpp"

namespace dynsubmax {

enum class BaselineKind { None, Greedy, Exact };

struct RunConfig {
  SolverConfig solver;
  std::shared_ptr<const SubmodularFunction> f;
  std::shared_ptr<const Matroid> matroid;  // required for the matroid constraint
  std::vector<StreamEvent> events;
  bool check_invariants = false;
  BaselineKind baseline = BaselineKind::None;
  int baseline_every = 1;
  std::ostream* out = nullptr;  // JSONL sink; may be null
};

struct RunSummary {
  std::size_t events = 0;
  std::uint64_t total_update_queries = 0;
  std::uint64_t max_update_queries = 0;
  double mean_update_queries = 0.0;
  std::uint64_t total_audit_queries = 0;
  std::uint64_t total_report_queries = 0;
  std::uint64_t invariant_violations = 0;
  std::size_t light_deletes = 0;        // deletes that cost zero update queries
  int max_touched = 0;
  double worst_ratio = 1.0;             // min over steps of value / baseline value
  std::optional<double> final_value;
  std::uint64_t zero_query_deletes_checked = 0;
};

// Applies every event through the solver facade, emitting one JSONL record
// per step plus a final summary record. The canonical record body carries no
// timestamps, so a rerun with the same seed reproduces the output exactly.
RunSummary run(const RunConfig& config);

}  // namespace dynsubmax
