#pragma once

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace a2twist {

using json = nlohmann::json;

/// Outcome of one verification suite. The first failure is kept verbatim;
/// later failures only bump the counter.
struct SuiteReport {
  std::string name;
  std::string anchor;
  bool pass = true;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_failure;
  std::vector<std::string> sample;
  json details = json::object();

  SuiteReport() = default;
  SuiteReport(std::string n, std::string a) : name(std::move(n)), anchor(std::move(a)) {}

  bool expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      pass = false;
      if (!first_failure) first_failure = what;
      if (sample.size() < 8) sample.push_back(what);
    }
    return ok;
  }

  void merge(const SuiteReport& other) {
    checks += other.checks;
    failures += other.failures;
    pass = pass && other.pass;
    if (!first_failure && other.first_failure) first_failure = other.first_failure;
  }

  json to_json() const {
    json d = details;
    d["anchor"] = anchor;
    d["checks"] = checks;
    d["failures"] = failures;
    if (first_failure) d["first_failure"] = *first_failure;
    if (sample.size() > 1) d["failure_sample"] = sample;
    return json{{"name", name}, {"pass", pass}, {"details", d}};
  }
};

}  // namespace a2twist
