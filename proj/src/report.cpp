#include "thoma2/report.hpp"

#include <cstdlib>
#include <sstream>

#include "thoma2/common.hpp"

namespace thoma2 {

std::int64_t Budget::default_limit() {
  if (const char* env = std::getenv("THOMA2_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 50000;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NotDecided: return "NOT-DECIDED";
  }
  return "?";
}

void Report::pass(const std::string& name, const std::string& detail) {
  checks.push_back({name, Status::Pass, detail, nullptr});
}

void Report::fail(const std::string& name, const std::string& detail,
                  nlohmann::json counterexample) {
  checks.push_back({name, Status::Fail, detail, std::move(counterexample)});
}

void Report::not_decided(const std::string& name, const std::string& detail) {
  checks.push_back({name, Status::NotDecided, detail, nullptr});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const CheckResult& c : other.checks) {
    CheckResult copy = c;
    copy.name = prefix + c.name;
    checks.push_back(std::move(copy));
  }
}

bool Report::ok() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

bool Report::decided() const {
  for (const auto& c : checks)
    if (c.status == Status::NotDecided) return false;
  return true;
}

nlohmann::json Report::to_json() const {
  // timing is deliberately left out: reports are deterministic given the
  // command and seed
  nlohmann::json j;
  j["schema"] = "thoma2-report/1";
  j["lemma"] = lemma;
  j["params"] = params;
  j["status"] = ok() ? (decided() ? "PASS" : "NOT-DECIDED") : "FAIL";
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (!c.counterexample.is_null()) e["counterexample"] = c.counterexample;
    arr.push_back(e);
  }
  j["checks"] = arr;
  return j;
}

std::string Report::summary() const {
  std::ostringstream os;
  os << lemma << ": " << (ok() ? (decided() ? "PASS" : "NOT-DECIDED") : "FAIL");
  int fails = 0;
  for (const auto& c : checks)
    if (c.status == Status::Fail) ++fails;
  os << " (" << checks.size() << " checks";
  if (fails) os << ", " << fails << " failing";
  os << ")";
  for (const auto& c : checks) {
    if (c.status != Status::Pass) {
      os << "\n  " << to_string(c.status) << " " << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
    }
  }
  return os.str();
}

}  // namespace thoma2
