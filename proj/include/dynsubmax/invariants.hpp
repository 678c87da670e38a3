#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dynsubmax {

struct InvariantCheck {
  InvariantCheck() = default;
  explicit InvariantCheck(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool ok = true;
  std::string detail;  // first counterexample when !ok
};

// Result of recomputing a structure's invariants from first principles. The
// oracle calls the checker makes are billed to a separate audit counter, never
// to the update counters.
struct InvariantReport {
  std::vector<InvariantCheck> checks;
  std::uint64_t audit_queries = 0;

  bool ok() const {
    for (const auto& c : checks) {
      if (!c.ok) return false;
    }
    return true;
  }

  std::string first_failure() const {
    for (const auto& c : checks) {
      if (!c.ok) return c.name + ": " + c.detail;
    }
    return {};
  }
};

}  // namespace dynsubmax
