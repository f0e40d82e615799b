// Pass/fail records shared by the verification routines.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace klr {

/// One line of a check report.
struct CheckRecord {
  std::string check;
  std::string instance;
  bool ok = true;
  std::string witness;

  nlohmann::json to_json() const {
    return {{"check", check}, {"instance", instance}, {"status", ok ? "pass" : "fail"}, {"witness", witness}};
  }
};

struct Report {
  std::vector<CheckRecord> records;
  bool ok() const {
    for (const auto& r : records)
      if (!r.ok) return false;
    return true;
  }
  size_t failures() const {
    size_t n = 0;
    for (const auto& r : records) n += !r.ok;
    return n;
  }
  std::string first_failure() const {
    for (const auto& r : records)
      if (!r.ok) return r.check + " " + r.instance + (r.witness.empty() ? "" : ": " + r.witness);
    return "";
  }
  void append(const Report& o) { records.insert(records.end(), o.records.begin(), o.records.end()); }
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(r.to_json());
    return arr;
  }
};

}  // namespace klr
