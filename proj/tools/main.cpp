// Benchmark and verification driver: loads an oracle spec and an update
// stream, feeds the stream through the dynamic solver, and writes a JSONL
// report with per-step values, query counts, and invariant status.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynsubmax/oracle_spec.hpp"
#include "dynsubmax/runner.hpp"
#include "dynsubmax/uniformity.hpp"

using namespace dynsubmax;

int main(int argc, char** argv) {
  CLI::App app{"fully dynamic submodular maximization under matroid or cardinality constraints"};

  std::string constraint_name = "cardinality";
  int k = 1;
  double epsilon = 1.0;
  std::uint64_t seed = 0;
  double float_tol = 0.0;
  std::string oracle_path;
  std::string stream_path;
  std::string gen_spec;
  std::string emit_stream_path;
  bool check_invariants = false;
  std::string baseline_name = "none";
  int baseline_every = 1;
  std::string out_path;
  int uniformity_trials = 0;

  app.add_option("--constraint", constraint_name, "cardinality or matroid")
      ->check(CLI::IsMember({"cardinality", "matroid"}));
  app.add_option("--k", k, "cardinality bound (matroid runs use the oracle's rank)");
  app.add_option("--epsilon", epsilon, "approximation slack, in (0, 1]");
  app.add_option("--seed", seed, "master seed; instances derive their own streams");
  app.add_option("--oracle", oracle_path, "oracle spec JSON file");
  app.add_option("--stream", stream_path, "update stream file ('+ id' / '- id' lines)");
  app.add_option("--gen", gen_spec,
                 "generate the stream instead, e.g. random_mix:n=100,ops=500,p=0.3,seed=7");
  app.add_option("--emit-stream", emit_stream_path,
                 "write the generated stream to this file and exit");
  app.add_flag("--check-invariants", check_invariants,
               "recompute all level invariants after every event");
  app.add_option("--baseline", baseline_name, "none, greedy, or exact")
      ->check(CLI::IsMember({"none", "greedy", "exact"}));
  app.add_option("--baseline-every", baseline_every,
                 "recompute the baseline every N events");
  app.add_option("--out", out_path, "JSONL report path (default: stdout)");
  app.add_option("--float-tol", float_tol,
                 "absolute tolerance for threshold comparisons (default 0)");
  app.add_option("--uniformity-trials", uniformity_trials,
                 "run the dedicated uniform-invariant chi-square mode with this many trials");

  CLI11_PARSE(app, argc, argv);

  try {
    const Constraint constraint = constraint_name == "matroid"
                                      ? Constraint::Matroid
                                      : Constraint::Cardinality;

    if (uniformity_trials > 0) {
      const UniformityResult r =
          uniformity_rebuild_trial(constraint, uniformity_trials, seed);
      nlohmann::ordered_json j;
      j["mode"] = "uniformity";
      j["constraint"] = constraint_name;
      j["trials"] = r.trials;
      j["pool_size"] = r.pool_size;
      j["counts"] = r.counts;
      j["chi_square"] = r.chi_square;
      j["degrees_of_freedom"] = r.degrees_of_freedom;
      j["critical_value_p_0.001"] = r.critical_value;
      j["pass"] = r.pass;
      std::cout << j.dump() << '\n';
      return r.pass ? 0 : 1;
    }

    std::vector<StreamEvent> events;
    if (!stream_path.empty()) {
      events = parse_stream_file(stream_path);
    } else if (!gen_spec.empty()) {
      events = generate_stream(parse_stream_spec(gen_spec));
    } else {
      std::cerr << "error: need --stream or --gen (or --uniformity-trials)\n";
      return 2;
    }

    if (!emit_stream_path.empty()) {
      std::ofstream out(emit_stream_path);
      if (!out) {
        std::cerr << "error: cannot write " << emit_stream_path << '\n';
        return 2;
      }
      write_stream(out, events);
      return 0;
    }

    if (oracle_path.empty()) {
      std::cerr << "error: --oracle is required\n";
      return 2;
    }
    const OracleSpec oracle = load_oracle_spec(oracle_path);
    if (constraint == Constraint::Matroid && !oracle.matroid) {
      std::cerr << "error: the oracle spec carries no matroid\n";
      return 2;
    }

    RunConfig config;
    config.solver.constraint = constraint;
    config.solver.k = k;
    config.solver.epsilon = epsilon;
    config.solver.seed = seed;
    config.solver.float_tol = float_tol;
    config.f = oracle.f;
    config.matroid = oracle.matroid;
    config.events = std::move(events);
    config.check_invariants = check_invariants;
    config.baseline = baseline_name == "exact"    ? BaselineKind::Exact
                      : baseline_name == "greedy" ? BaselineKind::Greedy
                                                  : BaselineKind::None;
    config.baseline_every = baseline_every;

    std::ofstream out_file;
    if (!out_path.empty()) {
      out_file.open(out_path);
      if (!out_file) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return 2;
      }
      config.out = &out_file;
    } else {
      config.out = &std::cout;
    }

    const RunSummary summary = run(config);
    if (summary.invariant_violations > 0) {
      std::cerr << summary.invariant_violations << " invariant violation(s)\n";
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
