// Bundled fixture quivers and instance sweeps.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quiver.hpp"

namespace klr {

/// Names in a fixed order; the JSON files under catalog/ carry the same documents.
inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"A1", "A1xA1", "A2", "A3", "K2"};
  return names;
}

inline nlohmann::json catalog_json(const std::string& name) {
  if (name == "A1") return nlohmann::json::parse(R"({"vertices": ["i"], "arrows": []})");
  if (name == "A1xA1") return nlohmann::json::parse(R"({"vertices": ["i", "j"], "arrows": []})");
  if (name == "A2") return nlohmann::json::parse(R"({"vertices": ["i", "j"], "arrows": [["i", "j", 1]]})");
  if (name == "A3")
    return nlohmann::json::parse(R"({"vertices": ["i", "j", "k"], "arrows": [["i", "j", 1], ["j", "k", 1]]})");
  if (name == "K2") return nlohmann::json::parse(R"({"vertices": ["i", "j"], "arrows": [["i", "j", 2]]})");
  throw std::invalid_argument("unknown catalog quiver '" + name + "'");
}

inline Quiver catalog_quiver(const std::string& name) { return Quiver::from_json(catalog_json(name)); }

/// "catalog:NAME" or a path to a JSON file.
inline Quiver load_quiver(const std::string& source) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return catalog_quiver(source.substr(prefix.size()));
  return Quiver::load(source);
}

/// Every nonzero dimension vector with |nu| <= max_total, grouped by total.
inline std::vector<DimVector> instances_up_to(const Quiver& q, int max_total) {
  std::vector<DimVector> out;
  for (int t = 1; t <= max_total; ++t)
    for (auto& nu : dim_vectors_of_total(q.num_vertices(), t)) out.push_back(std::move(nu));
  return out;
}

struct Instance {
  std::string quiver;
  Quiver q;
  DimVector nu;
};

/// All catalog instances with |nu| <= max_total.
inline std::vector<Instance> catalog_instances(int max_total) {
  std::vector<Instance> out;
  for (const auto& name : catalog_names()) {
    Quiver q = catalog_quiver(name);
    for (auto& nu : instances_up_to(q, max_total)) out.push_back({name, q, std::move(nu)});
  }
  return out;
}

}  // namespace klr
