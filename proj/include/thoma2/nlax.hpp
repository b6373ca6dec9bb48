#pragma once

#include <functional>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "thoma2/sset.hpp"
#include "thoma2/twocat.hpp"

namespace thoma2 {

// An n-simplex of the 2-nerve: objects F(0..n), arrows F(p,q) for p < q and
// structural 2-cells gamma(p,q,r) : F(q,r) ∘ F(p,q) => F(p,r), subject to the
// cocycle and normality conditions.
struct NerveSimplex {
  int degree = -1;
  std::vector<int> obj;
  std::vector<int> arr;  // indexed by pair_index(p, q)
  std::vector<int> gam;  // indexed by triple_index(p, q, r)

  static int pair_index(int n, int p, int q);
  static int triple_index(int n, int p, int q, int r);
  int arrow(const TwoCat& a, int p, int q) const;     // normality for p == q
  int gamma(const TwoCat& a, int p, int q, int r) const;
  NerveSimplex reindex(const TwoCat& a, const std::vector<int>& map) const;
  NerveSimplex face(const TwoCat& a, int i) const;
  NerveSimplex degeneracy(const TwoCat& a, int i) const;
  bool operator==(const NerveSimplex& o) const {
    return degree == o.degree && obj == o.obj && arr == o.arr && gam == o.gam;
  }
  Token token(const TwoCat& a) const;
};

// The 2-nerve up to `cap`, with the enumerated simplices retained so other
// modules can translate between simplicial and 2-categorical data.
struct N2Result {
  std::shared_ptr<const TwoCat> cat;
  std::shared_ptr<SimplicialSet> sset;
  std::vector<std::vector<NerveSimplex>> cells;      // all simplices per degree
  std::vector<std::vector<int>> nondeg_cell;         // sset nondeg idx -> cells idx
  std::vector<std::unordered_map<Token, int>> index; // token -> cells idx

  EZ ez_of(const NerveSimplex& s) const;             // EZ normal form in sset
  const NerveSimplex& of_nondeg(int dim, int idx) const {
    return cells[dim][nondeg_cell[dim][idx]];
  }
  NerveSimplex of_ez(const EZ& x) const;             // total simplex from EZ
};

N2Result n2(std::shared_ptr<const TwoCat> a, int cap, Budget* budget = nullptr);

// Normal lax functor between 2-categories: locally a functor, preserves
// horizontal identities, with structural cells gamma(f,g) : F(g)∘F(f) => F(g∘f).
class NormalLaxFunctor {
 public:
  NormalLaxFunctor() = default;
  NormalLaxFunctor(std::shared_ptr<const TwoCat> src, std::shared_ptr<const TwoCat> tgt,
                   std::function<int(int)> on0, std::function<int(int)> on1,
                   std::function<int(int)> on2, std::function<int(int, int)> gamma);

  const TwoCat& source() const { return *src_; }
  const TwoCat& target() const { return *tgt_; }
  const std::shared_ptr<const TwoCat>& source_ptr() const { return src_; }
  const std::shared_ptr<const TwoCat>& target_ptr() const { return tgt_; }
  int on0(int x) const { return f0_(x); }
  int on1(int f) const { return f1_(f); }
  int on2(int a) const { return f2_(a); }
  int gamma(int f, int g) const { return gamma_(f, g); }

  NerveSimplex apply(const TwoCat& a, const NerveSimplex& s) const;  // postcompose

 private:
  std::shared_ptr<const TwoCat> src_, tgt_;
  std::function<int(int)> f0_, f1_, f2_;
  std::function<int(int, int)> gamma_;
};

NormalLaxFunctor strict_nlax(const TwoFunctor& f);
NormalLaxFunctor compose_nlax(const NormalLaxFunctor& g, const NormalLaxFunctor& f);

// Checks conditions i (locally a functor), ii (horizontal identities),
// iii(a) cocycle, iii(b) naturality, and normality of gamma on identity
// arguments.
Report validate_nlax(const NormalLaxFunctor& f, Budget* budget = nullptr);

// C2 of a poset nerve: the chain model.
std::shared_ptr<ChainTwoCategory> c2_poset(const Poset& p);

// The unit at a poset nerve: eta : N1(P) -> N2(C2 N1(P)) simplex by simplex;
// checks simpliciality and degree-wise bijectivity up to cap.
Report eta_check(const Poset& p, int cap, Budget* budget = nullptr);
NerveSimplex eta_simplex(const ChainTwoCategory& c, const std::vector<int>& tuple);

// N2 extended along a normal lax functor (postcomposition).
SimplicialMap n2_tilde(const NormalLaxFunctor& g, const N2Result& n2_src, const N2Result& n2_tgt);

}  // namespace thoma2
