#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thoma2/poset.hpp"
#include "thoma2/report.hpp"

namespace thoma2 {

// Parameters for the named verifications; -1 caps select per-lemma defaults.
struct VerifyParams {
  int n = 2;
  int k = 1;
  int cap = -1;
  unsigned seed = 1;
  std::int64_t budget = Budget::default_limit();
  std::optional<Poset> poset;  // for eta-iso
};

const std::vector<std::string>& lemma_names();
Report verify_lemma(const std::string& lemma, const VerifyParams& params);

// Seeded perturbation suite: every injected corruption must be detected with
// a located counterexample.
Report negative_controls(unsigned seed, int count);

// The homology probes of the nerve image of the collapse pushout square.
Report homology_probes(int cap);

}  // namespace thoma2
