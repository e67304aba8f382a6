#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace affsym {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  void add(std::string name, bool ok, std::string detail = "") {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  bool pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  nlohmann::json to_json() const;
};

// Minimal structural JSON-schema check covering the subset used by the
// shipped schemas: type, properties, required, items, enum,
// additionalProperties.
bool json_matches_schema(const nlohmann::json& value, const nlohmann::json& schema,
                         std::string* error = nullptr);

}  // namespace affsym
