#include "thoma2/ideals.hpp"

#include <algorithm>
#include <set>

namespace thoma2 {

namespace {

bool in_set(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

IdealCheck ideal_check(const TwoCat& b, const std::vector<int>& a_objects, Side side,
                       IdealLevel level, Budget* budget) {
  std::vector<int> a = a_objects;
  std::sort(a.begin(), a.end());
  IdealCheck out;
  out.ok = true;
  std::vector<int> ones = b.all1(budget);

  // 1-cell condition: for a left ideal, cod(f) in A forces dom(f) in A (then
  // f lies in the full subcategory); dually for right ideals.
  for (int f : ones) {
    int inward = side == Side::Left ? b.cod0(f) : b.dom0(f);
    int outward = side == Side::Left ? b.dom0(f) : b.cod0(f);
    if (in_set(a, inward) && !in_set(a, outward)) {
      out.ok = false;
      out.counterexample = b.token1(f);
      out.detail = "1-cell enters/leaves the subcategory against the ideal side";
      return out;
    }
  }
  if (level == IdealLevel::Category) return out;

  // 2-cell condition (i), which for the full locally full sub-2-category on
  // a_objects must agree with route (ii); both reduce to frame membership.
  std::vector<int> twos = b.all2(budget);
  for (int al : twos) {
    int frame = b.dom1(al);
    int inward = side == Side::Left ? b.cod0(frame) : b.dom0(frame);
    bool forced = in_set(a, inward);
    bool member = in_set(a, b.dom0(frame)) && in_set(a, b.cod0(frame));
    if (forced && !member) {
      out.ok = false;
      out.counterexample = b.token2(al);
      out.detail = "2-cell condition fails";
      return out;
    }
  }
  return out;
}

TwoFunctor characteristic(std::shared_ptr<const TwoCat> b, const std::vector<int>& a_objects,
                          Side side, std::shared_ptr<const ExplicitTwoCategory> interval) {
  IdealCheck chk = ideal_check(*b, a_objects, side);
  if (!chk.ok)
    throw InvalidArgument("characteristic: not an ideal (" + chk.counterexample + ")");
  std::vector<int> a = a_objects;
  std::sort(a.begin(), a.end());
  int nu = interval->object_index(side == Side::Left ? "L" : "R");
  int nubar = interval->object_index(side == Side::Left ? "R" : "L");
  int t = interval->find_one_cell("t");
  auto bp = b;
  auto on0 = [a, nu, nubar](int x) { return in_set(a, x) ? nu : nubar; };
  auto on1 = [a, bp, interval, nu, nubar, t](int f) {
    bool din = in_set(a, bp->dom0(f));
    bool cin = in_set(a, bp->cod0(f));
    if (din && cin) return interval->id1(nu);
    if (din != cin) return t;  // ideals admit crossings in one direction only
    return interval->id1(nubar);
  };
  auto on2 = [bp, interval, on1](int al) { return interval->id2(on1(bp->dom1(al))); };
  return TwoFunctor(std::move(bp), interval, on0, on1, on2);
}

// ---------------------------------------------------------------------------
// distortions

Distortion::Distortion(TwoFunctor f, TwoFunctor g, std::function<int(int)> eps1,
                       std::function<int(int)> eps2, std::function<int(int, int)> eps_l,
                       std::function<int(int, int)> eps_r)
    : f_(std::move(f)), g_(std::move(g)), e1_(std::move(eps1)), e2_(std::move(eps2)),
      el_(std::move(eps_l)), er_(std::move(eps_r)) {}

Distortion identity_distortion(const TwoFunctor& f) {
  auto tgt = f.target_ptr();
  TwoFunctor g = f;
  return Distortion(
      f, g, [f](int u) { return f.on1(u); }, [f](int a) { return f.on2(a); },
      [f, tgt](int u, int v) { return tgt->id2(f.on1(f.source().compose1(v, u))); },
      [f, tgt](int u, int v) { return tgt->id2(f.on1(f.source().compose1(v, u))); });
}

Report validate_distortion(const Distortion& d, DistortionCheckOptions opts) {
  Report rep;
  rep.lemma = "distortion";
  const TwoCat& A = d.source();
  const TwoCat& B = d.target();
  const TwoFunctor& F = d.f();
  const TwoFunctor& G = d.g();
  int fails = 0;
  auto fail = [&](const std::string& name, nlohmann::json ce, const std::string& why = "") {
    ++fails;
    if (fails <= 10) rep.fail(name, why, std::move(ce));
  };
  auto law = [&](const char* name, nlohmann::json ce, auto&& holds) {
    try {
      if (!holds()) fail(name, std::move(ce));
    } catch (const std::exception& e) {
      fail(name, std::move(ce), e.what());
    }
  };

  std::vector<int> ones = A.all1(opts.budget);
  std::vector<int> twos = A.all2(opts.budget);

  // frames
  for (int u : ones)
    law("frame-eps1", {{"f", A.token1(u)}}, [&] {
      int e = d.eps1(u);
      return B.dom0(e) == F.on0(A.dom0(u)) && B.cod0(e) == G.on0(A.cod0(u));
    });
  for (int al : twos)
    law("frame-eps2", {{"alpha", A.token2(al)}}, [&] {
      int e = d.eps2(al);
      return B.dom1(e) == d.eps1(A.dom1(al)) && B.cod1(e) == d.eps1(A.cod1(al));
    });

  // lf2 and normality of the encoding
  for (int u : ones) {
    law("lf2", {{"f", A.token1(u)}}, [&] { return d.eps2(A.id2(u)) == B.id2(d.eps1(u)); });
    law("normal-epsL", {{"g", A.token1(u)}}, [&] {
      return d.eps_l(A.id1(A.dom0(u)), u) == B.id2(d.eps1(u));
    });
    law("normal-epsR", {{"f", A.token1(u)}}, [&] {
      return d.eps_r(u, A.id1(A.cod0(u))) == B.id2(d.eps1(u));
    });
  }

  // adjacency for pair/triple enumeration
  int n0 = A.n_objects();
  std::vector<std::vector<int>> out_of(n0);
  for (int u : ones) out_of[A.dom0(u)].push_back(u);
  std::vector<std::vector<int>> twos_at_dom(n0);  // 2-cells by dom object of frames
  for (int al : twos) twos_at_dom[A.dom0(A.dom1(al))].push_back(al);

  struct Pair {
    int f, g;
  };
  std::vector<Pair> pairs;   // composable 1-cell pairs
  for (int u : ones)
    for (int v : out_of[A.cod0(u)]) pairs.push_back({u, v});

  auto check_pair_frames = [&](const Pair& p) {
    law("frame-epsL", {{"f", A.token1(p.f)}, {"g", A.token1(p.g)}}, [&] {
      int e = d.eps_l(p.f, p.g);
      return B.dom1(e) == B.compose1(d.eps1(p.g), F.on1(p.f)) &&
             B.cod1(e) == d.eps1(A.compose1(p.g, p.f));
    });
    law("frame-epsR", {{"f", A.token1(p.f)}, {"g", A.token1(p.g)}}, [&] {
      int e = d.eps_r(p.f, p.g);
      return B.dom1(e) == B.compose1(G.on1(p.g), d.eps1(p.f)) &&
             B.cod1(e) == d.eps1(A.compose1(p.g, p.f));
    });
  };

  auto check_lf1 = [&](int al, int be) {  // be vertically after al
    law("lf1", {{"alpha", A.token2(al)}, {"beta", A.token2(be)}},
        [&] { return d.eps2(A.vcomp(be, al)) == B.vcomp(d.eps2(be), d.eps2(al)); });
  };
  auto check_n1 = [&](int phi, int theta) {  // theta horizontally after phi
    law("n1", {{"phi", A.token2(phi)}, {"theta", A.token2(theta)}}, [&] {
      int u = A.dom1(phi), up = A.cod1(phi);
      int v = A.dom1(theta), vp = A.cod1(theta);
      int lhs = B.vcomp(d.eps_r(up, vp), B.hcomp2(G.on2(theta), d.eps2(phi)));
      int rhs = B.vcomp(d.eps2(A.hcomp2(theta, phi)), d.eps_r(u, v));
      return lhs == rhs;
    });
  };
  auto check_n2 = [&](int phi, int theta) {
    law("n2", {{"phi", A.token2(phi)}, {"theta", A.token2(theta)}}, [&] {
      int u = A.dom1(phi), up = A.cod1(phi);
      int v = A.dom1(theta), vp = A.cod1(theta);
      int lhs = B.vcomp(d.eps_l(up, vp), B.hcomp2(d.eps2(theta), F.on2(phi)));
      int rhs = B.vcomp(d.eps2(A.hcomp2(theta, phi)), d.eps_l(u, v));
      return lhs == rhs;
    });
  };
  auto check_triple = [&](int u, int v, int w) {  // u then v then w
    law("c1", {{"f", A.token1(u)}, {"g", A.token1(v)}, {"h", A.token1(w)}}, [&] {
      int lhs = B.vcomp(d.eps_r(A.compose1(v, u), w), B.whisker_post(G.on1(w), d.eps_r(u, v)));
      int rhs = d.eps_r(u, A.compose1(w, v));
      return lhs == rhs;
    });
    law("c2", {{"f", A.token1(u)}, {"g", A.token1(v)}, {"h", A.token1(w)}}, [&] {
      int lhs = B.vcomp(d.eps_l(u, A.compose1(w, v)), B.whisker_pre(d.eps_l(v, w), F.on1(u)));
      int rhs = d.eps_l(A.compose1(v, u), w);
      return lhs == rhs;
    });
    law("c3", {{"f", A.token1(u)}, {"g", A.token1(v)}, {"h", A.token1(w)}}, [&] {
      int lhs = B.vcomp(d.eps_r(A.compose1(v, u), w), B.whisker_post(G.on1(w), d.eps_l(u, v)));
      int rhs = B.vcomp(d.eps_l(u, A.compose1(w, v)), B.whisker_pre(d.eps_r(v, w), F.on1(u)));
      return lhs == rhs;
    });
  };

  // the convenient identity-argument forms of the remark
  auto check_remark_forms = [&](int theta) {  // theta : u => v, with x = dom
    int u = A.dom1(theta), v = A.cod1(theta);
    int x = A.dom0(u), y = A.cod0(u);
    int idx = A.id1(x), idy = A.id1(y);
    law("n1'", {{"theta", A.token2(theta)}}, [&] {
      int lhs = B.vcomp(d.eps_r(idx, v), B.hcomp2(G.on2(theta), d.eps2(A.id2(idx))));
      int rhs = B.vcomp(d.eps2(theta), d.eps_r(idx, u));
      return lhs == rhs;
    });
    law("n2'", {{"theta", A.token2(theta)}}, [&] {
      int lhs = B.vcomp(d.eps_l(idx, v), d.eps2(theta));
      int rhs = B.vcomp(d.eps2(theta), d.eps_l(idx, u));
      return lhs == rhs;
    });
    law("c1'", {{"u", A.token1(u)}}, [&] {
      return B.vcomp(d.eps_r(u, idy), d.eps_r(idx, u)) == d.eps_r(idx, u);
    });
    law("c2'", {{"u", A.token1(u)}}, [&] {
      return B.vcomp(d.eps_l_obj(x, u), d.eps_l(u, idy)) == d.eps_l(u, idy);
    });
    law("c3'", {{"u", A.token1(u)}}, [&] {
      return B.vcomp(d.eps_r(u, idy), d.eps_l(idx, u)) == B.vcomp(d.eps_l(idx, u), d.eps_r(u, idy));
    });
  };

  if (opts.exhaustive) {
    for (const Pair& p : pairs) check_pair_frames(p);
    for (int al : twos)
      for (int be : twos)
        if (A.cod1(al) == A.dom1(be)) check_lf1(al, be);
    for (int phi : twos)
      for (int theta : twos_at_dom[A.cod0(A.dom1(phi))]) {
        check_n1(phi, theta);
        check_n2(phi, theta);
      }
    for (const Pair& p : pairs)
      for (int w : out_of[A.cod0(p.g)]) check_triple(p.f, p.g, w);
    for (int theta : twos) check_remark_forms(theta);
  } else {
    Rng rng(opts.seed);
    int done = 0;
    for (int it = 0; it < opts.samples * 20 && done < opts.samples; ++it) {
      const Pair& p = pairs[rand_index(rng, static_cast<int>(pairs.size()))];
      const auto& cont = out_of[A.cod0(p.g)];
      if (cont.empty()) continue;
      int w = cont[rand_index(rng, static_cast<int>(cont.size()))];
      check_pair_frames(p);
      check_triple(p.f, p.g, w);
      ++done;
    }
    if (done < opts.samples)
      rep.not_decided("triple-sample",
                      "only " + std::to_string(done) + " composable triples sampled");
    else
      rep.pass("triple-sample", std::to_string(done) + " composable triples sampled");
    for (int it = 0; it < opts.samples; ++it) {
      int al = twos[rand_index(rng, static_cast<int>(twos.size()))];
      check_remark_forms(al);
      const auto& cands = twos_at_dom[A.cod0(A.dom1(al))];
      if (!cands.empty()) {
        int theta = cands[rand_index(rng, static_cast<int>(cands.size()))];
        check_n1(al, theta);
        check_n2(al, theta);
      }
      // vertical composability for lf1
      for (int be : twos)
        if (A.cod1(al) == A.dom1(be)) {
          check_lf1(al, be);
          break;
        }
    }
  }

  if (fails == 0) rep.pass("distortion-axioms", opts.exhaustive ? "exhaustive" : "sampled");
  return rep;
}

NormalLaxFunctor distortion_to_nlax(const Distortion& d,
                                    std::shared_ptr<const IntervalProduct> prod) {
  const TwoFunctor F = d.f();
  const TwoFunctor G = d.g();
  auto tgt = d.f().target_ptr();
  auto eps1 = [d](int c) { return d.eps1(c); };
  auto eps2 = [d](int c) { return d.eps2(c); };
  auto on0 = [prod, F, G](int x) {
    int bx = x / 2;
    return x % 2 ? G.on0(bx) : F.on0(bx);
  };
  auto on1 = [prod, F, G, eps1](int f) {
    auto [c, nu] = prod->decode1(f);
    if (nu == IntervalProduct::L) return F.on1(c);
    if (nu == IntervalProduct::R) return G.on1(c);
    return eps1(c);
  };
  auto on2 = [prod, F, G, eps2](int a) {
    auto [c, nu] = prod->decode2(a);
    if (nu == IntervalProduct::L) return F.on2(c);
    if (nu == IntervalProduct::R) return G.on2(c);
    return eps2(c);
  };
  auto gamma = [prod, F, G, d, tgt](int f, int g) {
    auto [cf, nf] = prod->decode1(f);
    auto [cg, ng] = prod->decode1(g);
    const TwoCat& B = *tgt;
    const TwoCat& A = F.source();
    if (nf == IntervalProduct::L && ng == IntervalProduct::L)
      return B.id2(F.on1(A.compose1(cg, cf)));
    if (nf == IntervalProduct::R && ng == IntervalProduct::R)
      return B.id2(G.on1(A.compose1(cg, cf)));
    if (nf == IntervalProduct::L && ng == IntervalProduct::T) return d.eps_l(cf, cg);
    if (nf == IntervalProduct::T && ng == IntervalProduct::R) return d.eps_r(cf, cg);
    throw InvalidArgument("interval product cells not composable");
  };
  return NormalLaxFunctor(prod, tgt, on0, on1, on2, gamma);
}

Distortion nlax_to_distortion(const NormalLaxFunctor& enc,
                              std::shared_ptr<const IntervalProduct> prod) {
  auto base = prod->base();
  auto tgt = enc.target_ptr();
  const TwoCat& B = *tgt;

  // restrictions along the two ends must be strict 2-functors
  auto ext0 = [prod, enc](int x, IntervalProduct::Layer nu) {
    return enc.on0(prod->object_of(x, nu));
  };
  TwoFunctor f(base, tgt, [ext0](int x) { return ext0(x, IntervalProduct::L); },
               [prod, enc](int c) { return enc.on1(prod->intern1(c, IntervalProduct::L)); },
               [prod, enc](int c) { return enc.on2(prod->intern2(c, IntervalProduct::L)); });
  TwoFunctor g(base, tgt, [ext0](int x) { return ext0(x, IntervalProduct::R); },
               [prod, enc](int c) { return enc.on1(prod->intern1(c, IntervalProduct::R)); },
               [prod, enc](int c) { return enc.on2(prod->intern2(c, IntervalProduct::R)); });
  // strictness of the two restrictions
  Budget probe(1 << 20);
  std::vector<int> ones = base->all1(&probe);
  for (int u : ones)
    for (int v : ones) {
      if (base->cod0(u) != base->dom0(v)) continue;
      for (auto nu : {IntervalProduct::L, IntervalProduct::R}) {
        int gm = enc.gamma(prod->intern1(u, nu), prod->intern1(v, nu));
        int expect = B.id2(enc.on1(prod->intern1(base->compose1(v, u), nu)));
        if (gm != expect)
          throw InvalidArgument("nlax_to_distortion: restriction along an end is not strict");
      }
    }

  return Distortion(
      f, g, [prod, enc](int c) { return enc.on1(prod->intern1(c, IntervalProduct::T)); },
      [prod, enc](int c) { return enc.on2(prod->intern2(c, IntervalProduct::T)); },
      [prod, enc](int u, int v) {
        return enc.gamma(prod->intern1(u, IntervalProduct::L),
                         prod->intern1(v, IntervalProduct::T));
      },
      [prod, enc](int u, int v) {
        return enc.gamma(prod->intern1(u, IntervalProduct::T),
                         prod->intern1(v, IntervalProduct::R));
      });
}

Distortion whisker_distortion(const Distortion& d, Side side, const TwoFunctor& h) {
  if (side == Side::Left) {
    // precompose along h : C -> A
    TwoFunctor f = d.f().compose_after(h);
    TwoFunctor g = d.g().compose_after(h);
    return Distortion(
        f, g, [d, h](int u) { return d.eps1(h.on1(u)); },
        [d, h](int a) { return d.eps2(h.on2(a)); },
        [d, h](int u, int v) { return d.eps_l(h.on1(u), h.on1(v)); },
        [d, h](int u, int v) { return d.eps_r(h.on1(u), h.on1(v)); });
  }
  // postcompose along h : B -> D
  TwoFunctor f = h.compose_after(d.f());
  TwoFunctor g = h.compose_after(d.g());
  return Distortion(
      f, g, [d, h](int u) { return h.on1(d.eps1(u)); },
      [d, h](int a) { return h.on2(d.eps2(a)); },
      [d, h](int u, int v) { return h.on2(d.eps_l(u, v)); },
      [d, h](int u, int v) { return h.on2(d.eps_r(u, v)); });
}

// ---------------------------------------------------------------------------
// skew immersions

nlohmann::json SkewImmersionCertificate::to_json() const {
  nlohmann::json j;
  j["meta"] = meta;
  nlohmann::json a = nlohmann::json::array(), w = nlohmann::json::array();
  for (int x : a_objects) a.push_back(b->object_token(x));
  for (int x : w_objects) w.push_back(b->object_token(x));
  j["a_objects"] = a;
  j["w_objects"] = w;
  nlohmann::json r = nlohmann::json::object();
  for (int i = 0; i < w_sub->n_objects(); ++i)
    r[w_sub->object_token(i)] = a_sub->object_token(retraction.on0(i));
  j["retraction"] = r;
  Budget probe(1 << 22);
  std::vector<int> ones = w_sub->all1(&probe);
  nlohmann::json e1 = nlohmann::json::object();
  for (int f : ones) e1[w_sub->token1(f)] = b->token1(eps.eps1(f));
  j["eps1"] = e1;
  nlohmann::json e2 = nlohmann::json::object();
  for (int al : w_sub->all2(&probe)) e2[w_sub->token2(al)] = b->token2(eps.eps2(al));
  j["eps2"] = e2;
  nlohmann::json el = nlohmann::json::array(), er = nlohmann::json::array();
  for (int f : ones)
    for (int g : ones) {
      if (w_sub->cod0(f) != w_sub->dom0(g)) continue;
      el.push_back({w_sub->token1(f), w_sub->token1(g), b->token2(eps.eps_l(f, g))});
      er.push_back({w_sub->token1(f), w_sub->token1(g), b->token2(eps.eps_r(f, g))});
    }
  j["epsL"] = el;
  j["epsR"] = er;
  return j;
}

Report verify_skew_immersion(const SkewImmersionCertificate& cert, SkewVerifyOptions opts) {
  Report rep;
  rep.lemma = "skew-immersion";
  rep.params = cert.meta;
  const TwoCat& B = *cert.b;

  IdealCheck left = ideal_check(B, cert.a_objects, Side::Left, IdealLevel::TwoCategory,
                                opts.budget);
  if (left.ok) rep.pass("A-left-ideal");
  else rep.fail("A-left-ideal", left.detail, {{"cell", left.counterexample}});

  IdealCheck right = ideal_check(B, cert.w_objects, Side::Right, IdealLevel::TwoCategory,
                                 opts.budget);
  if (right.ok) rep.pass("W-right-ideal");
  else rep.fail("W-right-ideal", right.detail, {{"cell", right.counterexample}});

  // R ∘ J = id_A, and eps restricted to A is the identity distortion
  const SubTwoCat& A = *cert.a_sub;
  const SubTwoCat& W = *cert.w_sub;
  bool retraction_ok = true, epsj_ok = true;
  std::vector<int> a_ones = A.all1(opts.budget);
  std::vector<int> a_twos = A.all2(opts.budget);
  for (int i = 0; i < A.n_objects() && retraction_ok; ++i) {
    int wq = W.from_parent_object(A.object_set()[i]);
    if (A.object_set()[cert.retraction.on0(wq)] != A.object_set()[i]) retraction_ok = false;
  }
  for (int f : a_ones) {
    if (cert.retraction.on1(f) != f) retraction_ok = false;
    if (cert.eps.eps1(f) != f) epsj_ok = false;
  }
  for (int al : a_twos) {
    if (cert.retraction.on2(al) != al) retraction_ok = false;
    if (cert.eps.eps2(al) != al) epsj_ok = false;
  }
  for (int f : a_ones)
    for (int g : a_ones) {
      if (A.cod0(f) != A.dom0(g)) continue;
      int comp = A.compose1(g, f);
      if (cert.eps.eps_l(f, g) != B.id2(comp)) epsj_ok = false;
      if (cert.eps.eps_r(f, g) != B.id2(comp)) epsj_ok = false;
    }
  if (retraction_ok) rep.pass("retraction", "R ∘ J = id");
  else rep.fail("retraction", "R ∘ J != id");
  if (epsj_ok) rep.pass("eps-fixes-A", "all eps components on A-cells are identities");
  else rep.fail("eps-fixes-A", "eps does not restrict to the identity on A");

  Report fr = cert.retraction.validate(opts.budget);
  rep.merge(fr, "R.");

  DistortionCheckOptions dopts;
  dopts.exhaustive = opts.exhaustive;
  dopts.seed = opts.seed;
  dopts.samples = opts.samples;
  dopts.budget = opts.budget;
  Report dr = validate_distortion(cert.eps, dopts);
  rep.merge(dr, "eps.");
  return rep;
}

SkewImmersionCertificate collar_skew_immersion(const Poset& p, const Token& top_tok,
                                               const Token& k_tok, nlohmann::json meta) {
  CollarData cd = collar(p, top_tok, k_tok);
  PosetMap r = collar_retraction(p, top_tok, k_tok);

  auto b = chain_two_category(*cd.fP);
  const Poset& fp = b->base();

  SkewImmersionCertificate cert;
  cert.b = b;
  cert.a_objects = cd.horn;
  cert.w_objects = cd.collar;
  cert.a_sub = std::make_shared<SubTwoCat>(b, cd.horn);
  cert.w_sub = std::make_shared<SubTwoCat>(b, cd.collar);
  cert.meta = std::move(meta);

  // retraction on fP indices: identity on H, collar retraction elsewhere
  std::vector<int> r_on_fp(fp.size(), -1);
  for (size_t ci = 0; ci < cd.collar.size(); ++ci) {
    int horn_local = r(static_cast<int>(ci));
    r_on_fp[cd.collar[ci]] = cd.fP->require(cd.horn_poset.token(horn_local));
  }
  std::vector<char> in_horn(fp.size(), 0);
  for (int h : cd.horn) in_horn[h] = 1;

  auto map_chain = [b, r_on_fp](int f) {
    const Chain& c = b->chain_of(f);
    std::vector<int> image;
    for (int m : c.members) image.push_back(r_on_fp[m]);
    return b->intern_chain(make_chain(b->base(), image));
  };
  auto asub = cert.a_sub;
  auto wsub = cert.w_sub;
  TwoFunctor retraction(
      wsub, asub,
      [asub, wsub, r_on_fp](int x) {
        return asub->from_parent_object(r_on_fp[wsub->object_set()[x]]);
      },
      map_chain,
      [b, map_chain](int a) {
        return b->intern_two(map_chain(b->dom1(a)), map_chain(b->cod1(a)));
      });
  cert.retraction = retraction;

  // F = J ∘ R_J and G = id over W
  TwoFunctor f_jr(
      wsub, wsub,
      [wsub, r_on_fp](int x) { return wsub->from_parent_object(r_on_fp[wsub->object_set()[x]]); },
      map_chain,
      [b, map_chain](int a) {
        return b->intern_two(map_chain(b->dom1(a)), map_chain(b->cod1(a)));
      });
  TwoFunctor g_id = TwoFunctor::identity(wsub);

  // eps_f: f itself when f lies in A; otherwise the A-prefix of f (or, when f
  // starts outside A, the single element r(dom f)) followed by cod f. Keeping
  // the whole A-prefix makes eps_{m∘g} = eps_m ∘ g for A-cells g, which the
  // pushout construction relies on.
  auto eps1 = [b, in_horn, r_on_fp](int f) {
    const Chain& c = b->chain_of(f);
    if (in_horn[c.back()]) return f;
    std::vector<int> members;
    if (in_horn[c.front()]) {
      for (int m : c.members)
        if (in_horn[m]) members.push_back(m);
    } else {
      members.push_back(r_on_fp[c.front()]);
    }
    members.push_back(c.back());
    return b->intern_chain(make_chain(b->base(), members));
  };
  auto eps2 = [b, eps1](int a) { return b->intern_two(eps1(b->dom1(a)), eps1(b->cod1(a))); };
  auto eps_l = [b, eps1, map_chain](int u, int v) {
    return b->intern_two(b->compose1(eps1(v), map_chain(u)), eps1(b->compose1(v, u)));
  };
  auto eps_r = [b, eps1](int u, int v) {
    return b->intern_two(b->compose1(v, eps1(u)), eps1(b->compose1(v, u)));
  };
  cert.eps = Distortion(f_jr, g_id, eps1, eps2, eps_l, eps_r);
  return cert;
}

SkewImmersionCertificate horn_skew_immersion(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw InvalidArgument("horn index out of range");
  Poset base = Poset::ordinal(n);
  Poset p = chain_poset(base);
  std::vector<int> full, missing;
  for (int i = 0; i <= n; ++i) {
    full.push_back(i);
    if (i != k) missing.push_back(i);
  }
  Token top = chain_token(base, Chain{full});
  Token kt = chain_token(base, Chain{missing});
  return collar_skew_immersion(p, top, kt, {{"n", n}, {"k", k}});
}

}  // namespace thoma2
