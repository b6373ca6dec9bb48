#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "thoma2/ideals.hpp"
#include "thoma2/nlax.hpp"
#include "thoma2/twocat.hpp"

namespace thoma2 {

// Horizontal composition words over the pushout generators: cells of A' and
// cells of B (cells of A embed through F). Empty words carry explicit
// endpoint annotations.
struct CellWord {
  enum class Tag { Aprime, Bcell };
  struct Entry {
    Tag tag;
    int cell;
  };
  std::vector<Entry> entries;  // composable left to right (first factor first)
  int dom_object = -1;         // used when entries is empty: B' object id
};

// Normal form: an optional A'-composite followed by an optional B-composite
// (a crossing cell followed by outer cells). A-cells are pushed through F
// into the A'-segment first.
struct NormalWord {
  std::optional<int> aprime;  // A' 1-cell
  std::optional<int> bpart;   // B 1-cell with dom in A (crossing) or fully outer
};

NormalWord normalize_word1(const TwoCat& aprime, const TwoCat& b,
                           const std::vector<int>& a_objects, const TwoFunctor& f,
                           const CellWord& w);

// The pushout A' +_A B of a left-ideal inclusion A >-> B along F : A -> A',
// materialized through the three-segment normal forms. Objects are A'_0
// followed by B_0 \ A_0.
class PushoutTwoCategory : public TwoCat {
 public:
  enum class Kind { Aprime, Outer, Bridge };

  PushoutTwoCategory(std::shared_ptr<const TwoCat> b, std::vector<int> a_objects,
                     std::shared_ptr<const TwoCat> aprime, TwoFunctor f, Budget* budget);

  const std::shared_ptr<const TwoCat>& ambient_b() const { return b_; }
  const std::shared_ptr<const TwoCat>& aprime() const { return ap_; }
  const std::vector<int>& a_objects() const { return aobj_; }

  // object translation
  int object_of_aprime(int x) const { return x; }
  int object_of_outer(int b_obj) const;  // B object not in A
  bool object_is_aprime(int x) const { return x < ap_->n_objects(); }
  int outer_object_of(int x) const { return outer_objs_[x - ap_->n_objects()]; }

  // cell translation
  int one_of_aprime(int f) const { return ap1_.at(f); }
  int one_of_outer(int b_cell) const { return out1_.at(b_cell); }
  int one_of_bridge(int aprime_cell, int b_crossing) const;  // class lookup
  int two_of_aprime(int a) const { return ap2_.at(a); }
  int two_of_outer(int b_cell) const { return out2_.at(b_cell); }
  int two_of_bridge(int aprime_cell, int b_crossing) const;
  Kind kind1(int f) const { return cells1_[f].kind; }
  Kind kind2(int a) const { return cells2_[a].kind; }
  std::pair<int, int> bridge1(int f) const { return {cells1_[f].a, cells1_[f].m}; }
  std::pair<int, int> bridge2(int a) const { return {cells2_[a].a, cells2_[a].m}; }
  int payload1(int f) const { return cells1_[f].a >= 0 ? cells1_[f].a : cells1_[f].m; }
  int payload2(int a) const { return cells2_[a].a >= 0 ? cells2_[a].a : cells2_[a].m; }

  // coprojections
  TwoFunctor coproj_aprime(std::shared_ptr<const PushoutTwoCategory> self) const;
  TwoFunctor coproj_b(std::shared_ptr<const PushoutTwoCategory> self) const;

  // 1-cell from a normalized word
  int one_of_normal(const NormalWord& w, int dom_object_hint = -1) const;

  int n_objects() const override;
  Token object_token(int x) const override;
  int dom0(int f) const override;
  int cod0(int f) const override;
  int id1(int x) const override;
  int compose1(int g, int f) const override;
  std::vector<int> hom1(int x, int y) const override;
  Token token1(int f) const override;
  int dom1(int a) const override;
  int cod1(int a) const override;
  int id2(int f) const override;
  int vcomp(int b, int a) const override;
  int whisker_pre(int a, int f) const override;
  int whisker_post(int g, int a) const override;
  std::vector<int> hom2(int f, int g) const override;
  Token token2(int a) const override;
  std::vector<int> all1(Budget* budget = nullptr) const override;
  std::vector<int> all2(Budget* budget = nullptr) const override;

 private:
  struct Cell {
    Kind kind;
    int a = -1;  // A' cell (for Aprime/Bridge kinds)
    int m = -1;  // B cell (for Outer/Bridge kinds); bridge reps are canonical
  };

  std::shared_ptr<const TwoCat> b_;
  std::shared_ptr<const TwoCat> ap_;
  std::vector<int> aobj_;  // sorted A objects in B
  TwoFunctor f_;
  std::vector<int> outer_objs_;          // B objects not in A
  std::vector<int> b_obj_to_local_;      // B object -> pushout object id
  std::vector<Cell> cells1_, cells2_;
  std::map<int, int> ap1_, out1_, ap2_, out2_;
  std::map<std::pair<int, int>, int> bridge1_, bridge2_;  // canonical rep -> id
  std::map<std::pair<int, int>, std::pair<int, int>> canon1_, canon2_;  // any pair -> rep

  bool in_a(int b_obj) const;
  std::pair<int, int> canonical1(int ap_cell, int m) const;
  std::pair<int, int> canonical2(int ap_cell, int m) const;
};

struct QuotientResult {
  std::shared_ptr<PushoutTwoCategory> object;  // B/A
  int basepoint;                               // the collapsed object
};

// B/A: the pushout of A >-> B along A -> 1. Requires A to be a left ideal
// (the decidable shape the word calculus supports); throws otherwise.
QuotientResult quotient(std::shared_ptr<const TwoCat> b, const std::vector<int>& a_objects,
                        Budget* budget = nullptr);

// The full locally full sub-2-category on B_0 \ A_0.
std::shared_ptr<SubTwoCat> setminus_2cat(std::shared_ptr<const TwoCat> b,
                                         const std::vector<int>& a_objects);

struct PushoutSkewResult {
  std::shared_ptr<PushoutTwoCategory> bprime;
  SkewImmersionCertificate jprime;  // over bprime
  Distortion xi;                    // = jprime.eps
  TwoFunctor kappa_b;               // B -> B'
};

// Pushes a verified skew immersion out along F : A -> A' and rebuilds the
// certificate on the other side, per the proof's case tables.
PushoutSkewResult pushout_skew(const SkewImmersionCertificate& cert, const TwoFunctor& f,
                               std::shared_ptr<const TwoCat> aprime, Budget* budget = nullptr);

// Degree-wise check that N2 of the (B\A, W, (B\A)∩W, B) pullback square is a
// pushout of simplicial sets, up to cap.
Report vwb_check(std::shared_ptr<const TwoCat> b, const std::vector<int>& a_objects,
                 const std::vector<int>& w_objects, int cap, Budget* budget = nullptr);

// B/A ≅ B'/A' and (B\A)∩W ≅ (B'\A')∩W' by explicit iso construction.
Report quotient_iso_checks(const SkewImmersionCertificate& cert, const TwoFunctor& f,
                           const PushoutSkewResult& po, Budget* budget = nullptr);

}  // namespace thoma2
