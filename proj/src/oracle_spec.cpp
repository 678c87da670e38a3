#include "dynsubmax/oracle_spec.hpp"

#include <fstream>

namespace dynsubmax {
namespace {

ElementId parse_id(const std::string& key) {
  std::size_t pos = 0;
  int id = std::stoi(key, &pos);
  if (pos != key.size() || id < 0) {
    throw std::invalid_argument("oracle spec: bad element id key '" + key + "'");
  }
  return id;
}

std::string type_of(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw std::invalid_argument("oracle spec: expected object with a \"type\" field");
  }
  return j.at("type").get<std::string>();
}

}  // namespace

std::shared_ptr<const SubmodularFunction> submodular_from_json(const nlohmann::json& j) {
  const std::string type = type_of(j);
  if (type == "coverage") {
    const int universe = j.at("universe").get<int>();
    std::map<ElementId, std::vector<int>> covers;
    for (const auto& [key, items] : j.at("covers").items()) {
      covers[parse_id(key)] = items.get<std::vector<int>>();
    }
    std::vector<double> weights;
    if (j.contains("weights")) weights = j.at("weights").get<std::vector<double>>();
    return std::make_shared<CoverageFunction>(universe, std::move(covers),
                                              std::move(weights));
  }
  if (type == "modular") {
    std::map<ElementId, double> values;
    for (const auto& [key, v] : j.at("values").items()) {
      values[parse_id(key)] = v.get<double>();
    }
    return std::make_shared<ModularFunction>(std::move(values));
  }
  throw std::invalid_argument("oracle spec: unknown submodular type '" + type + "'");
}

std::shared_ptr<const Matroid> matroid_from_json(const nlohmann::json& j) {
  const std::string type = type_of(j);
  if (type == "uniform") {
    return std::make_shared<UniformMatroid>(j.at("k").get<int>());
  }
  if (type == "partition") {
    std::map<ElementId, int> blocks;
    for (const auto& [key, b] : j.at("blocks").items()) {
      blocks[parse_id(key)] = b.get<int>();
    }
    return std::make_shared<PartitionMatroid>(std::move(blocks),
                                              j.at("capacities").get<std::vector<int>>());
  }
  if (type == "graphic") {
    std::vector<std::tuple<int, int, ElementId>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) {
        throw std::invalid_argument("oracle spec: graphic edge must be [u, v, id]");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>(), e[2].get<ElementId>());
    }
    return std::make_shared<GraphicMatroid>(std::move(edges));
  }
  throw std::invalid_argument("oracle spec: unknown matroid type '" + type + "'");
}

OracleSpec oracle_spec_from_json(const nlohmann::json& j) {
  OracleSpec spec;
  if (j.is_object() && j.contains("f")) {
    spec.f = submodular_from_json(j.at("f"));
    if (j.contains("matroid")) spec.matroid = matroid_from_json(j.at("matroid"));
    return spec;
  }
  spec.f = submodular_from_json(j);
  if (j.contains("matroid")) spec.matroid = matroid_from_json(j.at("matroid"));
  return spec;
}

OracleSpec load_oracle_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("oracle spec: cannot open " + path);
  nlohmann::json j;
  in >> j;
  return oracle_spec_from_json(j);
}

}  // namespace dynsubmax
