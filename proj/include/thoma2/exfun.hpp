#pragma once

#include <memory>

#include "thoma2/ideals.hpp"
#include "thoma2/nlax.hpp"
#include "thoma2/sset.hpp"

namespace thoma2 {

// Right adjoint of subdivision: Ex(K)_n = maps Sd(Delta[n]) -> K, with the
// operators acting by precomposition with Sd(delta^i) and Sd(sigma^i).
SimplicialSet ex(std::shared_ptr<const SimplicialSet> k, int cap, Budget* budget = nullptr);

// Ex with its level data retained, so Ex acts on maps by postcomposition.
struct ExResult {
  std::shared_ptr<SimplicialSet> object;
  std::vector<std::vector<SimplicialMap>> levels;  // all maps SdDelta[n] -> K
  std::vector<std::vector<EZ>> level_ez;           // their EZ classes in `object`
};

ExResult ex_full(std::shared_ptr<const SimplicialSet> k, int cap, Budget* budget = nullptr);
SimplicialMap ex_map(const SimplicialMap& f, const ExResult& src, const ExResult& tgt);

// (Ex^2 ∘ N2)(A) up to cap.
SimplicialSet ex2_n2(std::shared_ptr<const TwoCat> a, int cap, Budget* budget = nullptr);

enum class GeneratingKind { Boundary, Horn };

// The image of a generating (acyclic) cofibration under C2 Sd^2, as a
// chain-2-category inclusion presented by its base posets.
struct GeneratingSet {
  GeneratingKind kind;
  int n = 0;
  int k = -1;
  Poset sub;      // base of the source chain model (possibly empty)
  Poset ambient;  // base of the target chain model; sub tokens embed
  nlohmann::json to_json() const;
};

GeneratingSet generating_sets(GeneratingKind kind, int n, int k = -1);

// Builds the homotopy N2(W) x Delta[1] -> N2(W) encoded by the certificate's
// distortion and checks the strong-deformation-retract conditions: endpoints
// N2(J∘R) and id, constancy on N2(A), and the homotopy identities.
Report sdr_witness_check(const SkewImmersionCertificate& cert, int cap, Budget* budget = nullptr);

}  // namespace thoma2
