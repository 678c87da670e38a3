#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "dynsubmax/matroid.hpp"
#include "dynsubmax/submodular.hpp"

namespace dynsubmax {

// Parsed contents of an oracle spec file: a submodular function plus an
// optional matroid (required for matroid-constrained runs).
struct OracleSpec {
  std::shared_ptr<const SubmodularFunction> f;
  std::shared_ptr<const Matroid> matroid;  // may be null
};

// Typed objects:
//   {"type":"coverage","universe":N,"covers":{"<id>":[items...]},"weights":[...]}
//   {"type":"modular","values":{"<id>":v,...}}
std::shared_ptr<const SubmodularFunction> submodular_from_json(const nlohmann::json& j);

// Typed objects:
//   {"type":"uniform","k":K}
//   {"type":"partition","blocks":{"<id>":b,...},"capacities":[...]}
//   {"type":"graphic","edges":[[u,v,id],...]}
std::shared_ptr<const Matroid> matroid_from_json(const nlohmann::json& j);

// A spec document is either a single submodular object (optionally carrying a
// "matroid" key) or {"f": <submodular>, "matroid": <matroid>}.
OracleSpec oracle_spec_from_json(const nlohmann::json& j);
OracleSpec load_oracle_spec(const std::string& path);

}  // namespace dynsubmax
