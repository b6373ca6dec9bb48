#include <doctest.h>

#include "thoma2/verify.hpp"

using namespace thoma2;

TEST_CASE("seeded perturbation suite achieves full detection") {
  Report rep = negative_controls(2026, 50);
  CHECK(rep.ok());
  CHECK(rep.params["detected"] == 50);
  CHECK(rep.params["injected"] == 50);
}

TEST_CASE("detection is deterministic given the seed") {
  Report a = negative_controls(7, 12);
  Report b = negative_controls(7, 12);
  CHECK(a.ok() == b.ok());
  CHECK(a.params["detected"] == b.params["detected"]);
}
