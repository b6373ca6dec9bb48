#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace thoma2 {

enum class Status { Pass, Fail, NotDecided };

std::string to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  std::string detail;          // human-readable explanation
  nlohmann::json counterexample;  // payload located at the failing cell, if any

  bool ok() const { return status == Status::Pass; }
};

// Per-lemma verification report: one CheckResult per property checked.
struct Report {
  std::string lemma;
  nlohmann::json params;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  void pass(const std::string& name, const std::string& detail = "");
  void fail(const std::string& name, const std::string& detail,
            nlohmann::json counterexample = nullptr);
  void not_decided(const std::string& name, const std::string& detail);
  void merge(const Report& other, const std::string& prefix);

  bool ok() const;
  bool decided() const;  // no NotDecided entries
  nlohmann::json to_json() const;
  std::string summary() const;
};

}  // namespace thoma2
