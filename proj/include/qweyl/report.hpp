#pragma once

// Run reports: per-check records with verdicts and witnesses, as text or JSON.

#include <string>
#include <vector>

#include "json.hpp"

namespace qweyl {

enum class Verdict { Pass, Fail, Skip };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Skip:
      return "skip";
  }
  return "?";
}

struct CheckRecord {
  std::string name;
  std::string anchor;  // stable identifier of what is being reproduced
  Verdict verdict = Verdict::Fail;
  std::string witness;
};

inline CheckRecord check(std::string name, std::string anchor, bool ok, std::string witness = "") {
  return {std::move(name), std::move(anchor), ok ? Verdict::Pass : Verdict::Fail, std::move(witness)};
}

struct RunReport {
  static constexpr const char* kSchema = "qweyl-report/1";

  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<CheckRecord> checks;
  nlohmann::json results = nlohmann::json::object();  // command-specific payload
  std::vector<std::string> findings;

  void add(CheckRecord r) { checks.push_back(std::move(r)); }
  void add(const std::vector<CheckRecord>& rs) { checks.insert(checks.end(), rs.begin(), rs.end()); }

  bool passed() const {
    for (const auto& c : checks)
      if (c.verdict == Verdict::Fail) return false;
    return true;
  }
  int exit_code() const { return passed() ? 0 : 1; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["parameters"] = parameters;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"name", c.name}, {"anchor", c.anchor}, {"verdict", verdict_name(c.verdict)}, {"witness", c.witness}});
    if (!results.empty()) j["results"] = results;
    if (!findings.empty()) j["findings"] = findings;
    j["passed"] = passed();
    return j;
  }

  std::string to_text() const {
    std::string s;
    for (const auto& c : checks) {
      s += std::string("[") + verdict_name(c.verdict) + "] " + c.name;
      if (!c.witness.empty()) s += ": " + c.witness;
      s += "\n";
    }
    for (const auto& f : findings) s += "finding: " + f + "\n";
    return s;
  }
};

}  // namespace qweyl
