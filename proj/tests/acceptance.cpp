// Acceptance suite: runs every top-level verification at its pinned
// parameters and prints one line per criterion. Exit code is the number of
// failing criteria.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <vector>

#include "thoma2/colim.hpp"
#include "thoma2/exfun.hpp"
#include "thoma2/homology.hpp"
#include "thoma2/ideals.hpp"
#include "thoma2/nlax.hpp"
#include "thoma2/sset.hpp"
#include "thoma2/twocat.hpp"
#include "thoma2/verify.hpp"

using namespace thoma2;

namespace {

struct Line {
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string note;
};

std::vector<Line> lines;

template <typename Fn>
void criterion(const std::string& name, Fn&& fn) {
  Line line;
  line.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    std::string note;
    line.pass = fn(note);
    line.note = note;
  } catch (const std::exception& e) {
    line.pass = false;
    line.note = std::string("exception: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  line.seconds = std::chrono::duration<double>(t1 - t0).count();
  std::printf("%-46s %s  (%.1fs)%s%s\n", line.name.c_str(), line.pass ? "PASS" : "FAIL",
              line.seconds, line.note.empty() ? "" : "  ", line.note.c_str());
  std::fflush(stdout);
  lines.push_back(line);
}

}  // namespace

int main() {
  criterion("criterion-01 sd-horn calculus (n <= 3)", [](std::string& note) {
    bool ok = true;
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= n; ++k) {
        VerifyParams p;
        p.n = n;
        p.k = k;
        Report rep = verify_lemma("sd-horn", p);
        if (!rep.ok()) {
          ok = false;
          note = "fails at n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
      }
    return ok;
  });

  criterion("criterion-02 collar lemma (n <= 3)", [](std::string& note) {
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
      VerifyParams p;
      p.n = n;
      Report rep = verify_lemma("collar", p);
      if (!rep.ok()) {
        ok = false;
        note = "fails at n=" + std::to_string(n);
      }
    }
    return ok;
  });

  criterion("criterion-03 skew-immersion certificates", [](std::string& note) {
    bool ok = true;
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= n; ++k) {
        VerifyParams p;
        p.n = n;
        p.k = k;
        p.seed = 2026;
        Report rep = verify_lemma("skew-immersion", p);
        if (!rep.ok() || !rep.decided()) {
          ok = false;
          note = "fails at n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
      }
    if (ok) note = "exhaustive n<=2, sampled (>=500 triples) n=3";
    return ok;
  });

  criterion("criterion-04 eta bijective on the stated posets", [](std::string& note) {
    struct Case {
      std::string name;
      Poset p;
    };
    std::vector<Case> cases;
    cases.push_back({"[1]", Poset::ordinal(1)});
    cases.push_back({"[2]", Poset::ordinal(2)});
    cases.push_back({"f([1])", chain_poset(Poset::ordinal(1))});
    cases.push_back({"f(H_{1,2})", chain_poset(horn_poset(2, 1))});
    bool ok = true;
    for (auto& c : cases) {
      Budget budget(Budget::default_limit() * 8);
      Report rep = eta_check(c.p, 3, &budget);
      if (!rep.ok()) {
        ok = false;
        note += (note.empty() ? "" : "; ") + c.name + " not bijective";
      }
    }
    if (!ok)
      note += " — the formal-composite 1-cells of the 2-categorification are outside the "
              "unit's image for posets of height > 2 (see README, Known red)";
    return ok;
  });

  criterion("criterion-05 nerve pushout (vwb)", [](std::string& note) {
    bool ok = true;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}}) {
      VerifyParams p;
      p.n = n;
      p.k = k;
      p.cap = 2;
      Report rep = verify_lemma("vwb", p);
      if (!rep.ok()) {
        ok = false;
        note = "fails at (" + std::to_string(n) + "," + std::to_string(k) + ")";
      }
    }
    return ok;
  });

  criterion("criterion-06 pushout stability + quotient isos", [](std::string& note) {
    VerifyParams p;
    p.n = 2;
    p.k = 1;
    p.budget = Budget::default_limit() * 8;
    Report rep = verify_lemma("pushout-stability", p);
    if (!rep.ok()) note = rep.summary();
    return rep.ok();
  });

  criterion("criterion-07 SDR witnesses", [](std::string& note) {
    VerifyParams p10;
    p10.n = 1;
    p10.k = 0;
    p10.cap = 3;
    p10.budget = Budget::default_limit() * 8;
    Report r10 = verify_lemma("sdr", p10);
    VerifyParams p21;
    p21.n = 2;
    p21.k = 1;
    p21.cap = 2;
    p21.budget = Budget::default_limit() * 8;
    Report r21 = verify_lemma("sdr", p21);
    if (!r10.ok()) note = "(1,0) at cap 3 fails";
    if (!r21.ok()) note += std::string(note.empty() ? "" : "; ") + "(2,1) at cap 2 fails";
    return r10.ok() && r21.ok();
  });

  criterion("criterion-08 path object (cap 2)", [](std::string& note) {
    VerifyParams p;
    p.cap = 2;
    p.budget = Budget::default_limit() * 8;
    Report rep = verify_lemma("path-object", p);
    if (!rep.ok()) note = rep.summary();
    return rep.ok();
  });

  criterion("criterion-09 right homotopy over oriental(2)", [](std::string& note) {
    VerifyParams p;
    p.cap = 1;
    p.budget = Budget::default_limit() * 8;
    Report rep = verify_lemma("right-homotopy", p);
    if (!rep.ok()) note = rep.summary();
    return rep.ok();
  });

  criterion("criterion-10 homology probes", [](std::string& note) {
    Report rep = homology_probes(2);
    if (!rep.ok()) note = rep.summary();
    else note = "necessary-condition only";
    return rep.ok();
  });

  criterion("criterion-11 negative controls (50 seeded)", [](std::string& note) {
    Report rep = negative_controls(2026, 50);
    note = std::to_string(rep.params["detected"].get<int>()) + "/" +
           std::to_string(rep.params["injected"].get<int>()) + " detected";
    return rep.ok();
  });

  int failures = 0;
  for (const Line& l : lines)
    if (!l.pass) ++failures;
  std::printf("\n%zu criteria, %d failing\n", lines.size(), failures);
  if (failures) {
    std::printf("note: criterion-04 is expected to fail on [2]; the unit eta is not an\n"
                "isomorphism for posets of height > 2 (documented defect, left red).\n");
  }
  return failures;
}
