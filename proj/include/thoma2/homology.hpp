#pragma once

#include <vector>

#include "thoma2/report.hpp"
#include "thoma2/sset.hpp"

namespace thoma2 {

// Normalized integer chain complex of a simplicial set: bases are the
// non-degenerate simplices, boundaries have alternating signs with
// degenerate faces dropped.
struct HomologyGroup {
  long long betti = 0;
  std::vector<std::string> torsion;  // invariant factors > 1, as decimal strings
};

std::vector<HomologyGroup> homology(const SimplicialSet& k, int cap);

// d∘d = 0 sanity check for the constructed complex.
bool boundary_squares_to_zero(const SimplicialSet& k, int cap);

// Euler characteristic from the non-degenerate counts.
long long euler_characteristic(const SimplicialSet& k, int cap);

// Induced maps on integer homology in degrees <= cap: reports iso / non-iso
// per degree. Necessary-condition probe only; never a weak-equivalence
// decision.
Report homology_iso_probe(const SimplicialMap& f, int cap);

}  // namespace thoma2
