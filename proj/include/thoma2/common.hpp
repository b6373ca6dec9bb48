#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace thoma2 {

using Token = std::string;

struct InvalidArgument : std::runtime_error {
  explicit InvalidArgument(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Shared cell/simplex budget. Constructions that enumerate (n2, ex,
// explicit_of_chain, pushout materialization) charge against one of these and
// throw BudgetExceeded instead of silently producing partial output.
class Budget {
 public:
  explicit Budget(std::int64_t limit) : limit_(limit) {}

  void charge(std::int64_t n, const char* site) {
    used_ += n;
    if (limit_ >= 0 && used_ > limit_)
      throw BudgetExceeded(std::string("cell budget exceeded in ") + site);
  }
  std::int64_t used() const { return used_; }
  std::int64_t limit() const { return limit_; }

  // Default limit, overridable through the THOMA2_BUDGET environment variable.
  static std::int64_t default_limit();

 private:
  std::int64_t limit_ = 50000;
  std::int64_t used_ = 0;
};

// Deterministic RNG for seeded sampling and perturbation suites.
using Rng = std::mt19937_64;

inline int rand_index(Rng& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace thoma2
