#include <doctest.h>

#include "oracles.hpp"
#include "thoma2/ideals.hpp"

using namespace thoma2;

TEST_CASE("sieve conditions on chain models") {
  // down-closed {0} in [1]: left ideal
  auto c1 = chain_two_category(Poset::ordinal(1));
  CHECK(ideal_check(*c1, {0}, Side::Left).ok);
  CHECK(ideal_check(*c1, {1}, Side::Right).ok);
  CHECK(!ideal_check(*c1, {1}, Side::Left).ok);

  // {1} in [2]: neither side, with a counterexample arrow
  auto c2 = chain_two_category(Poset::ordinal(2));
  IdealCheck l = ideal_check(*c2, {1}, Side::Left);
  IdealCheck r = ideal_check(*c2, {1}, Side::Right);
  CHECK(!l.ok);
  CHECK(!r.ok);
  CHECK(!l.counterexample.empty());
}

TEST_CASE("characteristic morphism") {
  auto c1 = chain_two_category(Poset::ordinal(1));
  auto iv = interval_two_category();
  TwoFunctor chi = characteristic(c1, {0}, Side::Left, iv);
  CHECK(chi.validate().ok());
  CHECK(iv->object_token(chi.on0(0)) == "L");
  CHECK(iv->object_token(chi.on0(1)) == "R");
  int f01 = c1->hom1(0, 1)[0];
  CHECK(iv->token1(chi.on1(f01)) == "t");
  // chi^*(iota^nu) ≅ A: the nu-fibre is exactly A's objects
  for (int x = 0; x < c1->n_objects(); ++x)
    CHECK((iv->object_token(chi.on0(x)) == "L") == (x == 0));

  // A = B: constant at nu; A = empty: constant at nu-bar
  TwoFunctor all = characteristic(c1, {0, 1}, Side::Left, iv);
  CHECK(iv->object_token(all.on0(0)) == "L");
  CHECK(iv->object_token(all.on0(1)) == "L");
  TwoFunctor none = characteristic(c1, {}, Side::Left, iv);
  CHECK(iv->object_token(none.on0(0)) == "R");
  CHECK(iv->object_token(none.on0(1)) == "R");

  CHECK_THROWS_AS(characteristic(c2_poset(Poset::ordinal(2)), {1}, Side::Left, iv),
                  InvalidArgument);
}

TEST_CASE("identity distortion validates") {
  auto o2 = oriental(2);
  Distortion d = identity_distortion(TwoFunctor::identity(o2));
  CHECK(validate_distortion(d).ok());
}

TEST_CASE("horn skew immersion certificates") {
  SkewImmersionCertificate cert = horn_skew_immersion(1, 0);
  CHECK(cert.a_objects.size() == 1);
  CHECK(cert.w_objects.size() == 2);
  CHECK(cert.b->n_objects() == 5);
  CHECK(verify_skew_immersion(cert).ok());

  SkewImmersionCertificate c21 = horn_skew_immersion(2, 1);
  CHECK(c21.a_objects.size() == 9);
  CHECK(c21.w_objects.size() == 22);
  CHECK(c21.b->n_objects() == 25);
  CHECK(verify_skew_immersion(c21).ok());
}

TEST_CASE("symmetric horn counts for (2,0) and (2,2)") {
  for (int k : {0, 2}) {
    SkewImmersionCertificate cert = horn_skew_immersion(2, k);
    CHECK(cert.a_objects.size() == 9);
    CHECK(cert.w_objects.size() == 22);
    CHECK(cert.b->n_objects() == 25);
  }
}

TEST_CASE("negative controls for certificates") {
  // W not up-closed: drop a necessary element from W
  SkewImmersionCertificate cert = horn_skew_immersion(1, 0);
  SkewImmersionCertificate bad = cert;
  bad.w_objects.pop_back();
  bad.w_sub = std::make_shared<SubTwoCat>(bad.b, bad.w_objects);
  Report rep = verify_skew_immersion(bad);
  CHECK(!rep.ok());

  // eps not fixing A: use the collar construction with eps perturbed
  SkewImmersionCertificate bad2 = horn_skew_immersion(1, 0);
  auto b = bad2.b;
  auto old = bad2.eps;
  // replace eps1 by one that collapses A-cells to identities at the retraction image
  auto broken1 = [b, old](int f) {
    const TwoCat& B = *b;
    return B.id1(B.dom0(old.eps1(f)));
  };
  bad2.eps = Distortion(old.f(), old.g(), broken1, [b, broken1](int a) {
    return b->id2(broken1(b->dom1(a)));
  }, [old](int u, int v) { return old.eps_l(u, v); },
                        [old](int u, int v) { return old.eps_r(u, v); });
  CHECK(!verify_skew_immersion(bad2).ok());
}

TEST_CASE("distortion/nlax round trip") {
  SkewImmersionCertificate cert = horn_skew_immersion(2, 1);
  auto prod = std::make_shared<IntervalProduct>(cert.w_sub);
  NormalLaxFunctor enc = distortion_to_nlax(cert.eps, prod);
  Budget b(200000);
  CHECK(validate_nlax(enc, &b).ok());

  Distortion back = nlax_to_distortion(enc, prod);
  const SubTwoCat& W = *cert.w_sub;
  Budget b2(200000);
  for (int f : W.all1(&b2)) CHECK(back.eps1(f) == cert.eps.eps1(f));
  for (int al : W.all2(&b2)) CHECK(back.eps2(al) == cert.eps.eps2(al));
  std::vector<int> ones = W.all1(&b2);
  for (int f : ones)
    for (int g : ones)
      if (W.cod0(f) == W.dom0(g)) {
        CHECK(back.eps_l(f, g) == cert.eps.eps_l(f, g));
        CHECK(back.eps_r(f, g) == cert.eps.eps_r(f, g));
      }
}

TEST_CASE("identity distortion encodes to a strict-like functor and round trips") {
  auto o2 = oriental(2);
  Distortion d = identity_distortion(TwoFunctor::identity(o2));
  auto prod = std::make_shared<IntervalProduct>(o2);
  NormalLaxFunctor enc = distortion_to_nlax(d, prod);
  CHECK(validate_nlax(enc).ok());
  Distortion back = nlax_to_distortion(enc, prod);
  Budget b(100000);
  for (int f : o2->all1(&b)) CHECK(back.eps1(f) == d.eps1(f));
}

TEST_CASE("whiskering a distortion") {
  SkewImmersionCertificate cert = horn_skew_immersion(1, 0);
  // whisker by the identity changes nothing
  Distortion same = whisker_distortion(cert.eps, Side::Left, TwoFunctor::identity(cert.w_sub));
  Budget b(100000);
  for (int f : cert.w_sub->all1(&b)) CHECK(same.eps1(f) == cert.eps.eps1(f));
  CHECK(validate_distortion(same).ok());

  // postcompose with the inclusion W -> B
  auto wsub = cert.w_sub;
  auto bb = cert.b;
  TwoFunctor incl(wsub, bb, [wsub](int x) { return wsub->object_set()[x]; },
                  [](int f) { return f; }, [](int a) { return a; });
  Distortion post = whisker_distortion(cert.eps, Side::Right, incl);
  CHECK(validate_distortion(post).ok());
}

TEST_CASE("perturbed c3 fails with a located triple") {
  SkewImmersionCertificate cert = horn_skew_immersion(2, 1);
  auto b = cert.b;
  auto old = cert.eps;
  // break eps_r on non-identity pairs: swap in an identity 2-cell (ill-framed)
  auto badR = [b, old](int u, int v) {
    const TwoCat& B = *b;
    if (!B.is_id1(u) && !B.is_id1(v)) return B.id2(old.eps1(B.compose1(v, u)));
    return old.eps_r(u, v);
  };
  Distortion bad(old.f(), old.g(), [old](int f) { return old.eps1(f); },
                 [old](int a) { return old.eps2(a); },
                 [old](int u, int v) { return old.eps_l(u, v); }, badR);
  Report rep = validate_distortion(bad);
  CHECK(!rep.ok());
  bool located = false;
  for (const auto& c : rep.checks)
    if (!c.ok() && !c.counterexample.is_null()) located = true;
  CHECK(located);
}

TEST_CASE("sampled validation mode agrees on a valid certificate") {
  SkewImmersionCertificate cert = horn_skew_immersion(2, 1);
  SkewVerifyOptions opts;
  opts.exhaustive = false;
  opts.seed = 42;
  opts.samples = 200;
  Report rep = verify_skew_immersion(cert, opts);
  CHECK(rep.ok());
}

TEST_CASE("certificate json bundles the component tables") {
  SkewImmersionCertificate cert = horn_skew_immersion(1, 0);
  nlohmann::json j = cert.to_json();
  CHECK(j["a_objects"].size() == 1);
  CHECK(j["w_objects"].size() == 2);
  CHECK(j.contains("retraction"));
  CHECK(j.contains("eps1"));
  CHECK(j.contains("eps2"));
  CHECK(!j["epsL"].empty());
  CHECK(!j["epsR"].empty());
}
