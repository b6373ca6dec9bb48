#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "thoma2/nlax.hpp"
#include "thoma2/twocat.hpp"

namespace thoma2 {

enum class Side { Left, Right };
enum class IdealLevel { Category, TwoCategory };

struct IdealCheck {
  bool ok = false;
  Token counterexample;  // first violating cell, when not ok
  std::string detail;
};

// Is the full (locally full) sub-2-category on `a_objects` a left/right ideal
// in B? Checks the 2-cell condition and the (1-cell ideal + locally full)
// route independently and requires them to agree.
IdealCheck ideal_check(const TwoCat& b, const std::vector<int>& a_objects, Side side,
                       IdealLevel level = IdealLevel::TwoCategory, Budget* budget = nullptr);

// The characteristic morphism chi : B -> interval classifying the ideal.
TwoFunctor characteristic(std::shared_ptr<const TwoCat> b, const std::vector<int>& a_objects,
                          Side side, std::shared_ptr<const ExplicitTwoCategory> interval);

// Distortion F ⇝ G between 2-functors A -> B: components per 1-cell, per
// 2-cell and per composable pair, subject to lf1, lf2, n1, n2, c1, c2, c3.
class Distortion {
 public:
  Distortion() = default;
  Distortion(TwoFunctor f, TwoFunctor g, std::function<int(int)> eps1,
             std::function<int(int)> eps2, std::function<int(int, int)> eps_l,
             std::function<int(int, int)> eps_r);

  const TwoFunctor& f() const { return f_; }
  const TwoFunctor& g() const { return g_; }
  const TwoCat& source() const { return f_.source(); }
  const TwoCat& target() const { return f_.target(); }
  int eps1(int f) const { return e1_(f); }
  int eps2(int a) const { return e2_(a); }
  int eps_l(int f, int g) const { return el_(f, g); }
  int eps_r(int f, int g) const { return er_(f, g); }
  // derived accessors
  int eps_obj(int x) const { return e1_(source().id1(x)); }
  int eps_l_obj(int x, int u) const { return el_(source().id1(x), u); }
  int eps_r_obj(int u, int y) const { return er_(u, source().id1(y)); }

 private:
  TwoFunctor f_, g_;
  std::function<int(int)> e1_, e2_;
  std::function<int(int, int)> el_, er_;
};

Distortion identity_distortion(const TwoFunctor& f);

struct DistortionCheckOptions {
  bool exhaustive = true;
  unsigned seed = 1;
  int samples = 500;  // per axiom family, when sampling
  Budget* budget = nullptr;
};

// Checks the seven axiom families, the normality of the encoding on identity
// arguments, frame compatibility of all components, and the identity-argument
// specializations (n1', n2', c1', c2', c3').
Report validate_distortion(const Distortion& d, DistortionCheckOptions opts = {});

// Encode a distortion as a normal lax functor A x I -> B and back. The
// backwards direction checks that the restrictions along the two ends are the
// strict functors F and G (throws InvalidArgument otherwise).
NormalLaxFunctor distortion_to_nlax(const Distortion& d,
                                    std::shared_ptr<const IntervalProduct> prod);
Distortion nlax_to_distortion(const NormalLaxFunctor& enc,
                              std::shared_ptr<const IntervalProduct> prod);

// Whisker by a 2-functor: Side::Left precomposes (H : C -> A), Side::Right
// postcomposes (K : B -> D).
Distortion whisker_distortion(const Distortion& d, Side side, const TwoFunctor& h);

// (W, R_J, eps) witnessing that J : A -> B is a skew immersion.
struct SkewImmersionCertificate {
  std::shared_ptr<const TwoCat> b;
  std::vector<int> a_objects;
  std::vector<int> w_objects;
  std::shared_ptr<const SubTwoCat> a_sub;
  std::shared_ptr<const SubTwoCat> w_sub;
  TwoFunctor retraction;  // R_J : W -> A (on local object ids, parent cell ids)
  Distortion eps;         // J ∘ R_J ⇝ id_W, over W
  nlohmann::json meta;

  nlohmann::json to_json() const;
};

struct SkewVerifyOptions {
  bool exhaustive = true;
  unsigned seed = 1;
  int samples = 500;
  Budget* budget = nullptr;
};

Report verify_skew_immersion(const SkewImmersionCertificate& cert, SkewVerifyOptions opts = {});

// The certificate for C2 Sd^2 (horn inclusion): A = chain model of f(H_{k,n})
// inside B = chain model of f^2([n]), W the collar, R from the collar
// retraction, eps from the inequalities r(x) ⊆ x.
SkewImmersionCertificate horn_skew_immersion(int n, int k);

// Same construction over any (P, top, k) satisfying the collar hypotheses.
SkewImmersionCertificate collar_skew_immersion(const Poset& p, const Token& top_tok,
                                               const Token& k_tok, nlohmann::json meta);

}  // namespace thoma2
