#include "affsym/report.hpp"

namespace affsym {

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (auto& c : checks) {
    nlohmann::json j{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks_json.push_back(j);
  }
  return nlohmann::json{{"suite", suite}, {"pass", pass()}, {"checks", checks_json}};
}

bool json_matches_schema(const nlohmann::json& value, const nlohmann::json& schema,
                         std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  if (schema.contains("enum")) {
    for (auto& v : schema["enum"])
      if (v == value) return true;
    return fail("value not in enum");
  }
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    if (t == "object" && !value.is_object()) return fail("expected object");
    if (t == "array" && !value.is_array()) return fail("expected array");
    if (t == "string" && !value.is_string()) return fail("expected string");
    if (t == "integer" && !value.is_number_integer()) return fail("expected integer");
    if (t == "number" && !value.is_number()) return fail("expected number");
    if (t == "boolean" && !value.is_boolean()) return fail("expected boolean");
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (auto& k : schema["required"])
        if (!value.contains(k.get<std::string>()))
          return fail("missing required key " + k.get<std::string>());
    if (schema.contains("properties")) {
      for (auto& [k, sub] : schema["properties"].items())
        if (value.contains(k) && !json_matches_schema(value.at(k), sub, error))
          return false;
      if (schema.value("additionalProperties", true) == false)
        for (auto& [k, v] : value.items())
          if (!schema["properties"].contains(k)) return fail("unexpected key " + k);
    }
  }
  if (value.is_array() && schema.contains("items"))
    for (auto& v : value)
      if (!json_matches_schema(v, schema["items"], error)) return false;
  return true;
}

}  // namespace affsym
