#include "thoma2/colim.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace thoma2 {

namespace {

bool in_sorted(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

NormalWord normalize_word1(const TwoCat& aprime, const TwoCat& b,
                           const std::vector<int>& a_objects, const TwoFunctor& f,
                           const CellWord& w) {
  std::vector<int> a = a_objects;
  std::sort(a.begin(), a.end());
  NormalWord out;
  for (const CellWord::Entry& e : w.entries) {
    if (e.tag == CellWord::Tag::Aprime) {
      if (out.bpart) throw InvalidArgument("word has an A'-factor after leaving A'");
      out.aprime = out.aprime ? aprime.compose1(e.cell, *out.aprime) : e.cell;
      continue;
    }
    // a B-cell: A-internal cells push through F into the A'-segment
    bool dom_in = in_sorted(a, b.dom0(e.cell));
    bool cod_in = in_sorted(a, b.cod0(e.cell));
    if (dom_in && cod_in) {
      if (out.bpart) throw InvalidArgument("word re-enters A against the ideal side");
      int img = f.on1(e.cell);
      out.aprime = out.aprime ? aprime.compose1(img, *out.aprime) : img;
      continue;
    }
    if (!dom_in && cod_in) throw InvalidArgument("word re-enters A against the ideal side");
    out.bpart = out.bpart ? b.compose1(e.cell, *out.bpart) : e.cell;
  }
  return out;
}

// ---------------------------------------------------------------------------
// PushoutTwoCategory

bool PushoutTwoCategory::in_a(int b_obj) const { return in_sorted(aobj_, b_obj); }

int PushoutTwoCategory::object_of_outer(int b_obj) const {
  int l = b_obj_to_local_[b_obj];
  if (l < 0) throw InvalidArgument("object lies in A");
  return l;
}

PushoutTwoCategory::PushoutTwoCategory(std::shared_ptr<const TwoCat> b, std::vector<int> a_objects,
                                       std::shared_ptr<const TwoCat> aprime, TwoFunctor f,
                                       Budget* budget)
    : b_(std::move(b)), ap_(std::move(aprime)), aobj_(std::move(a_objects)), f_(std::move(f)) {
  std::sort(aobj_.begin(), aobj_.end());
  const TwoCat& B = *b_;
  const TwoCat& AP = *ap_;
  b_obj_to_local_.assign(B.n_objects(), -1);
  for (int x = 0; x < B.n_objects(); ++x)
    if (!in_a(x)) {
      b_obj_to_local_[x] = AP.n_objects() + static_cast<int>(outer_objs_.size());
      outer_objs_.push_back(x);
    }

  auto a_local = [&](int b_obj) {
    return static_cast<int>(std::lower_bound(aobj_.begin(), aobj_.end(), b_obj) - aobj_.begin());
  };

  std::vector<int> b_ones = B.all1(budget);
  std::vector<int> b_twos = B.all2(budget);
  std::vector<int> ap_ones = AP.all1(budget);
  std::vector<int> ap_twos = AP.all2(budget);

  std::vector<int> crossings1, outers1;
  for (int m : b_ones) {
    bool din = in_a(B.dom0(m)), cin = in_a(B.cod0(m));
    if (din && !cin) crossings1.push_back(m);
    if (!din && !cin) outers1.push_back(m);
    if (!din && cin)
      throw InvalidArgument("pushout requires A to be a left ideal in B");
  }

  // bridge 1-cell classes: pairs (h in A'_1, m crossing) with matching frames,
  // identified by (h, m∘g) ~ (F(g)∘h, m)
  std::vector<std::pair<int, int>> pairs1;
  std::map<std::pair<int, int>, int> pair1_id;
  for (int h : ap_ones)
    for (int m : crossings1)
      if (AP.cod0(h) == f_.on0(a_local(B.dom0(m)))) {
        pair1_id[{h, m}] = static_cast<int>(pairs1.size());
        pairs1.push_back({h, m});
      }
  // the move (h, m∘g) ~ (F(g)∘h, m) ranges over A-cells g composable with a
  // crossing m and over all A'-cells h ending at F(dom g)
  std::vector<int> a_cells;
  for (int g : b_ones)
    if (in_a(B.dom0(g)) && in_a(B.cod0(g))) a_cells.push_back(g);
  UF uf1(static_cast<int>(pairs1.size()));
  for (int g : a_cells)
    for (int m : crossings1) {
      if (B.cod0(g) != B.dom0(m)) continue;
      int mg = B.compose1(m, g);
      for (int h : ap_ones) {
        if (AP.cod0(h) != f_.on0(a_local(B.dom0(g)))) continue;
        int fgh = AP.compose1(f_.on1(g), h);
        auto it = pair1_id.find({h, mg});
        auto it2 = pair1_id.find({fgh, m});
        if (it != pair1_id.end() && it2 != pair1_id.end()) uf1.unite(it->second, it2->second);
      }
    }
  std::map<int, std::pair<int, int>> rep1;  // class root -> min pair
  for (size_t i = 0; i < pairs1.size(); ++i) {
    int root = uf1.find(static_cast<int>(i));
    auto it = rep1.find(root);
    if (it == rep1.end() || pairs1[i] < it->second) rep1[root] = pairs1[i];
  }
  for (size_t i = 0; i < pairs1.size(); ++i)
    canon1_[pairs1[i]] = rep1[uf1.find(static_cast<int>(i))];

  // materialize 1-cells
  for (int h : ap_ones) {
    ap1_[h] = static_cast<int>(cells1_.size());
    cells1_.push_back({Kind::Aprime, h, -1});
  }
  for (int m : outers1) {
    out1_[m] = static_cast<int>(cells1_.size());
    cells1_.push_back({Kind::Outer, -1, m});
  }
  for (auto& [root, rp] : rep1) {
    bridge1_[rp] = static_cast<int>(cells1_.size());
    cells1_.push_back({Kind::Bridge, rp.first, rp.second});
  }

  // 2-cells
  std::vector<int> crossings2, outers2;
  for (int t : b_twos) {
    int fr = B.dom1(t);
    bool din = in_a(B.dom0(fr)), cin = in_a(B.cod0(fr));
    if (din && !cin) crossings2.push_back(t);
    if (!din && !cin) outers2.push_back(t);
  }
  std::vector<std::pair<int, int>> pairs2;
  std::map<std::pair<int, int>, int> pair2_id;
  for (int ph : ap_twos)
    for (int th : crossings2)
      if (AP.cod0(AP.dom1(ph)) == f_.on0(a_local(B.dom0(B.dom1(th))))) {
        pair2_id[{ph, th}] = static_cast<int>(pairs2.size());
        pairs2.push_back({ph, th});
      }
  std::vector<int> a_twos;
  for (int psi : b_twos) {
    int fr = B.dom1(psi);
    if (in_a(B.dom0(fr)) && in_a(B.cod0(fr))) a_twos.push_back(psi);
  }
  UF uf2(static_cast<int>(pairs2.size()));
  for (int psi : a_twos)
    for (int th : crossings2) {
      int fr = B.dom1(psi);
      if (B.cod0(fr) != B.dom0(B.dom1(th))) continue;
      int thpsi = B.hcomp2(th, psi);
      for (int ph : ap_twos) {
        if (AP.cod0(AP.dom1(ph)) != f_.on0(a_local(B.dom0(fr)))) continue;
        int fpsiph = AP.hcomp2(f_.on2(psi), ph);
        auto it = pair2_id.find({ph, thpsi});
        auto it2 = pair2_id.find({fpsiph, th});
        if (it != pair2_id.end() && it2 != pair2_id.end()) uf2.unite(it->second, it2->second);
      }
    }
  std::map<int, std::pair<int, int>> rep2;
  for (size_t i = 0; i < pairs2.size(); ++i) {
    int root = uf2.find(static_cast<int>(i));
    auto it = rep2.find(root);
    if (it == rep2.end() || pairs2[i] < it->second) rep2[root] = pairs2[i];
  }
  for (size_t i = 0; i < pairs2.size(); ++i)
    canon2_[pairs2[i]] = rep2[uf2.find(static_cast<int>(i))];

  for (int ph : ap_twos) {
    ap2_[ph] = static_cast<int>(cells2_.size());
    cells2_.push_back({Kind::Aprime, ph, -1});
  }
  for (int t : outers2) {
    out2_[t] = static_cast<int>(cells2_.size());
    cells2_.push_back({Kind::Outer, -1, t});
  }
  for (auto& [root, rp] : rep2) {
    bridge2_[rp] = static_cast<int>(cells2_.size());
    cells2_.push_back({Kind::Bridge, rp.first, rp.second});
  }
  if (budget)
    budget->charge(static_cast<std::int64_t>(cells1_.size() + cells2_.size()), "pushout");
}

std::pair<int, int> PushoutTwoCategory::canonical1(int ap_cell, int m) const {
  auto it = canon1_.find({ap_cell, m});
  if (it == canon1_.end()) throw InvalidArgument("unknown bridge 1-cell pair");
  return it->second;
}

std::pair<int, int> PushoutTwoCategory::canonical2(int ap_cell, int m) const {
  auto it = canon2_.find({ap_cell, m});
  if (it == canon2_.end()) throw InvalidArgument("unknown bridge 2-cell pair");
  return it->second;
}

int PushoutTwoCategory::one_of_bridge(int aprime_cell, int b_crossing) const {
  return bridge1_.at(canonical1(aprime_cell, b_crossing));
}

int PushoutTwoCategory::two_of_bridge(int aprime_cell, int b_crossing) const {
  return bridge2_.at(canonical2(aprime_cell, b_crossing));
}

int PushoutTwoCategory::one_of_normal(const NormalWord& w, int dom_object_hint) const {
  if (w.aprime && !w.bpart) return ap1_.at(*w.aprime);
  if (!w.aprime && w.bpart) {
    if (in_a(b_->dom0(*w.bpart))) {
      int lo = static_cast<int>(
          std::lower_bound(aobj_.begin(), aobj_.end(), b_->dom0(*w.bpart)) - aobj_.begin());
      return one_of_bridge(ap_->id1(f_.on0(lo)), *w.bpart);
    }
    return out1_.at(*w.bpart);
  }
  if (w.aprime && w.bpart) return one_of_bridge(*w.aprime, *w.bpart);
  if (dom_object_hint < 0) throw InvalidArgument("empty word without endpoint annotation");
  return id1(dom_object_hint);
}

int PushoutTwoCategory::n_objects() const {
  return ap_->n_objects() + static_cast<int>(outer_objs_.size());
}

Token PushoutTwoCategory::object_token(int x) const {
  if (object_is_aprime(x)) return "a:" + ap_->object_token(x);
  return "b:" + b_->object_token(outer_object_of(x));
}

int PushoutTwoCategory::dom0(int f) const {
  const Cell& c = cells1_[f];
  switch (c.kind) {
    case Kind::Aprime: return ap_->dom0(c.a);
    case Kind::Outer: return b_obj_to_local_[b_->dom0(c.m)];
    case Kind::Bridge: return ap_->dom0(c.a);
  }
  return -1;
}

int PushoutTwoCategory::cod0(int f) const {
  const Cell& c = cells1_[f];
  switch (c.kind) {
    case Kind::Aprime: return ap_->cod0(c.a);
    case Kind::Outer: return b_obj_to_local_[b_->cod0(c.m)];
    case Kind::Bridge: return b_obj_to_local_[b_->cod0(c.m)];
  }
  return -1;
}

int PushoutTwoCategory::id1(int x) const {
  if (object_is_aprime(x)) return ap1_.at(ap_->id1(x));
  return out1_.at(b_->id1(outer_object_of(x)));
}

int PushoutTwoCategory::compose1(int g, int f) const {
  const Cell& cf = cells1_[f];
  const Cell& cg = cells1_[g];
  if (cf.kind == Kind::Aprime && cg.kind == Kind::Aprime)
    return ap1_.at(ap_->compose1(cg.a, cf.a));
  if (cf.kind == Kind::Outer && cg.kind == Kind::Outer)
    return out1_.at(b_->compose1(cg.m, cf.m));
  if (cf.kind == Kind::Aprime && cg.kind == Kind::Bridge)
    return one_of_bridge(ap_->compose1(cg.a, cf.a), cg.m);
  if (cf.kind == Kind::Bridge && cg.kind == Kind::Outer)
    return one_of_bridge(cf.a, b_->compose1(cg.m, cf.m));
  throw InvalidArgument("pushout 1-cells not composable");
}

std::vector<int> PushoutTwoCategory::hom1(int x, int y) const {
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(cells1_.size()); ++f)
    if (dom0(f) == x && cod0(f) == y) out.push_back(f);
  return out;
}

Token PushoutTwoCategory::token1(int f) const {
  const Cell& c = cells1_[f];
  switch (c.kind) {
    case Kind::Aprime: return "a:" + ap_->token1(c.a);
    case Kind::Outer: return "b:" + b_->token1(c.m);
    case Kind::Bridge: return "<" + ap_->token1(c.a) + "|" + b_->token1(c.m) + ">";
  }
  return "?";
}

int PushoutTwoCategory::dom1(int a) const {
  const Cell& c = cells2_[a];
  switch (c.kind) {
    case Kind::Aprime: return ap1_.at(ap_->dom1(c.a));
    case Kind::Outer: return out1_.at(b_->dom1(c.m));
    case Kind::Bridge: return one_of_bridge(ap_->dom1(c.a), b_->dom1(c.m));
  }
  return -1;
}

int PushoutTwoCategory::cod1(int a) const {
  const Cell& c = cells2_[a];
  switch (c.kind) {
    case Kind::Aprime: return ap1_.at(ap_->cod1(c.a));
    case Kind::Outer: return out1_.at(b_->cod1(c.m));
    case Kind::Bridge: return one_of_bridge(ap_->cod1(c.a), b_->cod1(c.m));
  }
  return -1;
}

int PushoutTwoCategory::id2(int f) const {
  const Cell& c = cells1_[f];
  switch (c.kind) {
    case Kind::Aprime: return ap2_.at(ap_->id2(c.a));
    case Kind::Outer: return out2_.at(b_->id2(c.m));
    case Kind::Bridge: return two_of_bridge(ap_->id2(c.a), b_->id2(c.m));
  }
  return -1;
}

int PushoutTwoCategory::vcomp(int bb, int aa) const {
  const Cell& ca = cells2_[aa];
  const Cell& cb = cells2_[bb];
  if (ca.kind == Kind::Aprime && cb.kind == Kind::Aprime)
    return ap2_.at(ap_->vcomp(cb.a, ca.a));
  if (ca.kind == Kind::Outer && cb.kind == Kind::Outer)
    return out2_.at(b_->vcomp(cb.m, ca.m));
  if (ca.kind == Kind::Bridge && cb.kind == Kind::Bridge) {
    // align representatives so the middle frames agree on the nose
    std::vector<std::pair<int, int>> amem, bmem;
    for (const auto& [pr, rp] : canon2_) {
      if (rp == std::make_pair(ca.a, ca.m)) amem.push_back(pr);
      if (rp == std::make_pair(cb.a, cb.m)) bmem.push_back(pr);
    }
    for (const auto& [pa1, ma1] : amem)
      for (const auto& [pb1, mb1] : bmem)
        if (ap_->cod1(pa1) == ap_->dom1(pb1) && b_->cod1(ma1) == b_->dom1(mb1))
          return two_of_bridge(ap_->vcomp(pb1, pa1), b_->vcomp(mb1, ma1));
    throw InvalidArgument("bridge 2-cells not alignable for vertical composition");
  }
  throw InvalidArgument("pushout 2-cells not composable");
}

int PushoutTwoCategory::whisker_pre(int a, int f) const {
  const Cell& ca = cells2_[a];
  const Cell& cf = cells1_[f];
  if (ca.kind == Kind::Aprime && cf.kind == Kind::Aprime)
    return ap2_.at(ap_->whisker_pre(ca.a, cf.a));
  if (ca.kind == Kind::Outer && cf.kind == Kind::Outer)
    return out2_.at(b_->whisker_pre(ca.m, cf.m));
  if (ca.kind == Kind::Outer && cf.kind == Kind::Bridge)
    return two_of_bridge(ap_->id2(cf.a), b_->whisker_pre(ca.m, cf.m));
  if (ca.kind == Kind::Bridge && cf.kind == Kind::Aprime)
    return two_of_bridge(ap_->whisker_pre(ca.a, cf.a), ca.m);
  throw InvalidArgument("pushout whisker_pre not composable");
}

int PushoutTwoCategory::whisker_post(int g, int a) const {
  const Cell& ca = cells2_[a];
  const Cell& cg = cells1_[g];
  if (ca.kind == Kind::Aprime && cg.kind == Kind::Aprime)
    return ap2_.at(ap_->whisker_post(cg.a, ca.a));
  if (ca.kind == Kind::Outer && cg.kind == Kind::Outer)
    return out2_.at(b_->whisker_post(cg.m, ca.m));
  if (ca.kind == Kind::Bridge && cg.kind == Kind::Outer)
    return two_of_bridge(ca.a, b_->whisker_post(cg.m, ca.m));
  if (ca.kind == Kind::Aprime && cg.kind == Kind::Bridge)
    return two_of_bridge(ap_->whisker_post(cg.a, ca.a), b_->id2(cg.m));
  throw InvalidArgument("pushout whisker_post not composable");
}

std::vector<int> PushoutTwoCategory::hom2(int f, int g) const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(cells2_.size()); ++a)
    if (dom1(a) == f && cod1(a) == g) out.push_back(a);
  return out;
}

Token PushoutTwoCategory::token2(int a) const {
  const Cell& c = cells2_[a];
  switch (c.kind) {
    case Kind::Aprime: return "a:" + ap_->token2(c.a);
    case Kind::Outer: return "b:" + b_->token2(c.m);
    case Kind::Bridge: return "<" + ap_->token2(c.a) + "|" + b_->token2(c.m) + ">";
  }
  return "?";
}

std::vector<int> PushoutTwoCategory::all1(Budget* budget) const {
  if (budget) budget->charge(static_cast<std::int64_t>(cells1_.size()), "pushout.all1");
  std::vector<int> out(cells1_.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<int> PushoutTwoCategory::all2(Budget* budget) const {
  if (budget) budget->charge(static_cast<std::int64_t>(cells2_.size()), "pushout.all2");
  std::vector<int> out(cells2_.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

TwoFunctor PushoutTwoCategory::coproj_aprime(std::shared_ptr<const PushoutTwoCategory> self) const {
  return TwoFunctor(ap_, self, [](int x) { return x; },
                    [self](int f) { return self->ap1_.at(f); },
                    [self](int a) { return self->ap2_.at(a); });
}

TwoFunctor PushoutTwoCategory::coproj_b(std::shared_ptr<const PushoutTwoCategory> self) const {
  auto a_local = [self](int b_obj) {
    return static_cast<int>(std::lower_bound(self->aobj_.begin(), self->aobj_.end(), b_obj) -
                            self->aobj_.begin());
  };
  return TwoFunctor(
      b_, self,
      [self, a_local](int x) {
        return self->in_a(x) ? self->f_.on0(a_local(x)) : self->b_obj_to_local_[x];
      },
      [self, a_local](int m) {
        const TwoCat& B = *self->b_;
        bool din = self->in_a(B.dom0(m)), cin = self->in_a(B.cod0(m));
        if (din && cin) return self->ap1_.at(self->f_.on1(m));
        if (!din && !cin) return self->out1_.at(m);
        return self->one_of_bridge(self->ap_->id1(self->f_.on0(a_local(B.dom0(m)))), m);
      },
      [self, a_local](int t) {
        const TwoCat& B = *self->b_;
        int fr = B.dom1(t);
        bool din = self->in_a(B.dom0(fr)), cin = self->in_a(B.cod0(fr));
        if (din && cin) return self->ap2_.at(self->f_.on2(t));
        if (!din && !cin) return self->out2_.at(t);
        return self->two_of_bridge(
            self->ap_->id2(self->ap_->id1(self->f_.on0(a_local(B.dom0(fr))))), t);
      });
}

// ---------------------------------------------------------------------------
// quotient / setminus

QuotientResult quotient(std::shared_ptr<const TwoCat> b, const std::vector<int>& a_objects,
                        Budget* budget) {
  IdealCheck chk = ideal_check(*b, a_objects, Side::Left, IdealLevel::TwoCategory, budget);
  if (!chk.ok)
    throw InvalidArgument(
        "quotient supports full locally full inclusions that are left ideals; offending cell: " +
        chk.counterexample);
  auto asub = std::make_shared<SubTwoCat>(b, a_objects);
  auto term = terminal_two_category();
  TwoFunctor bang(asub, term, [](int) { return 0; }, [term](int) { return term->id1(0); },
                  [term](int) { return term->id2(term->id1(0)); });
  QuotientResult out;
  out.object = std::make_shared<PushoutTwoCategory>(b, a_objects, term, bang, budget);
  out.basepoint = 0;
  return out;
}

std::shared_ptr<SubTwoCat> setminus_2cat(std::shared_ptr<const TwoCat> b,
                                         const std::vector<int>& a_objects) {
  std::vector<int> a = a_objects;
  std::sort(a.begin(), a.end());
  std::vector<int> keep;
  for (int x = 0; x < b->n_objects(); ++x)
    if (!in_sorted(a, x)) keep.push_back(x);
  return std::make_shared<SubTwoCat>(std::move(b), keep);
}

// ---------------------------------------------------------------------------
// pushout of a skew immersion

PushoutSkewResult pushout_skew(const SkewImmersionCertificate& cert, const TwoFunctor& f,
                               std::shared_ptr<const TwoCat> aprime, Budget* budget) {
  auto bp = std::make_shared<PushoutTwoCategory>(cert.b, cert.a_objects, aprime, f, budget);
  PushoutSkewResult out;
  out.bprime = bp;
  out.kappa_b = bp->coproj_b(bp);

  // W' objects: all of A' plus the outer part of W
  std::vector<int> wprime;
  for (int x = 0; x < aprime->n_objects(); ++x) wprime.push_back(x);
  std::vector<int> asorted = cert.a_objects;
  std::sort(asorted.begin(), asorted.end());
  for (int w : cert.w_objects)
    if (!in_sorted(asorted, w)) wprime.push_back(bp->object_of_outer(w));
  std::vector<int> aprime_objects;
  for (int x = 0; x < aprime->n_objects(); ++x) aprime_objects.push_back(x);

  SkewImmersionCertificate jp;
  jp.b = bp;
  jp.a_objects = aprime_objects;
  jp.w_objects = wprime;
  jp.a_sub = std::make_shared<SubTwoCat>(bp, aprime_objects);
  jp.w_sub = std::make_shared<SubTwoCat>(bp, wprime);
  jp.meta = cert.meta;
  jp.meta["pushed_out"] = true;

  auto wsub_old = cert.w_sub;
  auto wsub = jp.w_sub;
  auto asub = jp.a_sub;
  const TwoFunctor r_old = cert.retraction;
  const Distortion eps_old = cert.eps;
  auto fp = f;

  // translate: W' local object -> retraction image in A' (local = parent here)
  auto r0 = [bp, wsub, wsub_old, r_old, fp](int x) {
    int p = wsub->object_set()[x];
    if (bp->object_is_aprime(p)) return p;
    int b_obj = bp->outer_object_of(p);
    int wl = wsub_old->from_parent_object(b_obj);
    return fp.on0(r_old.on0(wl));
  };
  auto r1 = [bp, r_old, fp](int c) {
    switch (bp->kind1(c)) {
      case PushoutTwoCategory::Kind::Aprime: return c;
      case PushoutTwoCategory::Kind::Outer:
        return bp->one_of_aprime(fp.on1(r_old.on1(bp->payload1(c))));
      case PushoutTwoCategory::Kind::Bridge: {
        auto [h, m] = bp->bridge1(c);
        return bp->one_of_aprime(bp->aprime()->compose1(fp.on1(r_old.on1(m)), h));
      }
    }
    return -1;
  };
  auto r2 = [bp, r_old, fp](int t) {
    switch (bp->kind2(t)) {
      case PushoutTwoCategory::Kind::Aprime: return t;
      case PushoutTwoCategory::Kind::Outer:
        return bp->two_of_aprime(fp.on2(r_old.on2(bp->payload2(t))));
      case PushoutTwoCategory::Kind::Bridge: {
        auto [ph, th] = bp->bridge2(t);
        return bp->two_of_aprime(bp->aprime()->hcomp2(fp.on2(r_old.on2(th)), ph));
      }
    }
    return -1;
  };
  jp.retraction = TwoFunctor(wsub, asub, r0, r1, r2);

  TwoFunctor f_jr(wsub, wsub, r0, r1, r2);  // J' ∘ R' lands inside W'
  TwoFunctor g_id = TwoFunctor::identity(wsub);

  auto xi1 = [bp, eps_old, fp](int c) {
    switch (bp->kind1(c)) {
      case PushoutTwoCategory::Kind::Aprime: return c;
      case PushoutTwoCategory::Kind::Outer: {
        int e = eps_old.eps1(bp->payload1(c));
        // e is a crossing cell of B (its dom is the retraction image in A)
        const TwoCat& B2 = *bp->ambient_b();
        int dom = B2.dom0(e);
        std::vector<int> a = bp->a_objects();
        int lo = static_cast<int>(std::lower_bound(a.begin(), a.end(), dom) - a.begin());
        return bp->one_of_bridge(bp->aprime()->id1(fp.on0(lo)), e);
      }
      case PushoutTwoCategory::Kind::Bridge: {
        auto [h, m] = bp->bridge1(c);
        return bp->one_of_bridge(h, eps_old.eps1(m));
      }
    }
    return -1;
  };
  auto xi2 = [bp, eps_old, fp](int t) {
    switch (bp->kind2(t)) {
      case PushoutTwoCategory::Kind::Aprime: return t;
      case PushoutTwoCategory::Kind::Outer: {
        int e = eps_old.eps2(bp->payload2(t));
        const TwoCat& B2 = *bp->ambient_b();
        int dom = B2.dom0(B2.dom1(e));
        std::vector<int> a = bp->a_objects();
        int lo = static_cast<int>(std::lower_bound(a.begin(), a.end(), dom) - a.begin());
        return bp->two_of_bridge(bp->aprime()->id2(bp->aprime()->id1(fp.on0(lo))), e);
      }
      case PushoutTwoCategory::Kind::Bridge: {
        auto [ph, th] = bp->bridge2(t);
        return bp->two_of_bridge(ph, eps_old.eps2(th));
      }
    }
    return -1;
  };
  // identity 2-cell of A' at the image of the B-object `dom` (a member of A)
  auto unit_at = [bp, fp](int dom) {
    std::vector<int> a = bp->a_objects();
    int lo = static_cast<int>(std::lower_bound(a.begin(), a.end(), dom) - a.begin());
    return bp->aprime()->id2(bp->aprime()->id1(fp.on0(lo)));
  };
  auto xi_l = [bp, eps_old, unit_at, xi1](int u, int v) {
    const TwoCat& B2 = *bp->ambient_b();
    auto ku = bp->kind1(u);
    auto kv = bp->kind1(v);
    using K = PushoutTwoCategory::Kind;
    // xi_{v∘u} equals xi_v ∘ u when u lies in A', so the component is the
    // identity there
    if (ku == K::Aprime && (kv == K::Aprime || kv == K::Bridge))
      return bp->id2(xi1(bp->compose1(v, u)));
    if (ku == K::Bridge && kv == K::Outer) {
      auto [h, m] = bp->bridge1(u);
      return bp->two_of_bridge(bp->aprime()->id2(h), eps_old.eps_l(m, bp->payload1(v)));
    }
    if (ku == K::Outer && kv == K::Outer) {
      int e = eps_old.eps_l(bp->payload1(u), bp->payload1(v));
      return bp->two_of_bridge(unit_at(B2.dom0(B2.dom1(e))), e);
    }
    throw InvalidArgument("xi_l: cells not composable");
  };
  auto xi_r = [bp, eps_old, unit_at](int u, int v) {
    const TwoCat& B2 = *bp->ambient_b();
    auto ku = bp->kind1(u);
    auto kv = bp->kind1(v);
    using K = PushoutTwoCategory::Kind;
    if (ku == K::Aprime && kv == K::Aprime) return bp->id2(bp->compose1(v, u));
    if (ku == K::Aprime && kv == K::Bridge) {
      auto [h, m] = bp->bridge1(v);
      int theta = eps_old.eps_r(B2.id1(B2.dom0(m)), m);  // m => eps_m
      int hu = bp->aprime()->compose1(h, bp->payload1(u));
      return bp->two_of_bridge(bp->aprime()->id2(hu), theta);
    }
    if (ku == K::Bridge && kv == K::Outer) {
      auto [h, m] = bp->bridge1(u);
      return bp->two_of_bridge(bp->aprime()->id2(h), eps_old.eps_r(m, bp->payload1(v)));
    }
    if (ku == K::Outer && kv == K::Outer) {
      int e = eps_old.eps_r(bp->payload1(u), bp->payload1(v));
      return bp->two_of_bridge(unit_at(B2.dom0(B2.dom1(e))), e);
    }
    throw InvalidArgument("xi_r: cells not composable");
  };

  jp.eps = Distortion(f_jr, g_id, xi1, xi2, xi_l, xi_r);
  out.jprime = jp;
  out.xi = jp.eps;
  return out;
}

// ---------------------------------------------------------------------------
// vwb

Report vwb_check(std::shared_ptr<const TwoCat> b, const std::vector<int>& a_objects,
                 const std::vector<int>& w_objects, int cap, Budget* budget) {
  Report rep;
  rep.lemma = "vwb";
  rep.params = {{"cap", cap}};

  IdealCheck left = ideal_check(*b, a_objects, Side::Left, IdealLevel::TwoCategory, budget);
  IdealCheck right = ideal_check(*b, w_objects, Side::Right, IdealLevel::TwoCategory, budget);
  if (left.ok) rep.pass("A-left-ideal");
  else rep.fail("A-left-ideal", left.detail, {{"cell", left.counterexample}});
  if (right.ok) rep.pass("W-right-ideal");
  else rep.fail("W-right-ideal", right.detail, {{"cell", right.counterexample}});
  if (!left.ok || !right.ok) return rep;

  std::vector<int> a = a_objects;
  std::sort(a.begin(), a.end());
  auto bma = setminus_2cat(b, a);
  auto w = std::make_shared<SubTwoCat>(b, w_objects);
  std::vector<int> inter_objs;
  for (int x : bma->object_set())
    if (std::find(w_objects.begin(), w_objects.end(), x) != w_objects.end())
      inter_objs.push_back(x);
  auto inter = std::make_shared<SubTwoCat>(b, inter_objs);

  N2Result n_b = n2(b, cap, budget);
  N2Result n_bma = n2(bma, cap, budget);
  N2Result n_w = n2(w, cap, budget);
  N2Result n_inter = n2(inter, cap, budget);

  auto incl = [&](std::shared_ptr<const SubTwoCat> small, std::shared_ptr<const TwoCat> big,
                  auto to_big_obj) {
    return TwoFunctor(small, big, to_big_obj, [](int c) { return c; }, [](int c) { return c; });
  };
  TwoFunctor i_bma = incl(inter, bma, [inter, bma](int x) {
    return bma->from_parent_object(inter->object_set()[x]);
  });
  TwoFunctor i_w =
      incl(inter, w, [inter, w](int x) { return w->from_parent_object(inter->object_set()[x]); });
  TwoFunctor j_bma = incl(bma, b, [bma](int x) { return bma->object_set()[x]; });
  TwoFunctor j_w = incl(w, b, [w](int x) { return w->object_set()[x]; });

  SimplicialMap m_bma = n2_tilde(strict_nlax(i_bma), n_inter, n_bma);
  SimplicialMap m_w = n2_tilde(strict_nlax(i_w), n_inter, n_w);
  PushoutSSet po = pushout_sset(m_bma, m_w);

  SimplicialMap leg_bma = n2_tilde(strict_nlax(j_bma), n_bma, n_b);
  SimplicialMap leg_w = n2_tilde(strict_nlax(j_w), n_w, n_b);
  SimplicialMap cmp = po.mediate(leg_bma, leg_w);
  if (cmp.validate().ok()) rep.pass("comparison-simplicial");
  else rep.fail("comparison-simplicial", "comparison map fails to commute with faces");

  for (int m = 0; m <= cap; ++m) {
    std::set<Token> image;
    for (const EZ& x : po.object->total(m)) image.insert(n_b.sset->token(cmp.apply(x)));
    long long src = po.object->total_count(m);
    long long tgt = n_b.sset->total_count(m);
    bool bij = static_cast<long long>(image.size()) == src && src == tgt;
    if (bij)
      rep.pass("bijective-degree-" + std::to_string(m), std::to_string(src) + " simplices");
    else
      rep.fail("bijective-degree-" + std::to_string(m), "comparison is not a bijection",
               {{"pushout", src}, {"n2B", tgt}, {"image", image.size()}});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// quotient invariance

namespace {

TwoFunctor quotient_projection(std::shared_ptr<const PushoutTwoCategory> q) {
  return q->coproj_b(q);
}

}  // namespace

Report quotient_iso_checks(const SkewImmersionCertificate& cert, const TwoFunctor& f,
                           const PushoutSkewResult& po, Budget* budget) {
  Report rep;
  rep.lemma = "quotient-iso";
  auto b = cert.b;
  auto bp = po.bprime;

  QuotientResult q1 = quotient(b, cert.a_objects, budget);
  QuotientResult q2 = quotient(bp, po.jprime.a_objects, budget);

  // iso on objects: star -> star, outer x -> outer image of x
  auto phi0 = [q1, q2, bp](int x) {
    if (x == q1.basepoint) return q2.basepoint;
    int b_obj = q1.object->outer_object_of(x);
    return q2.object->object_of_outer(bp->object_of_outer(b_obj));
  };
  TwoFunctor kb = po.kappa_b;
  auto phi1 = [q1, q2, bp, kb](int c) {
    using K = PushoutTwoCategory::Kind;
    switch (q1.object->kind1(c)) {
      case K::Aprime: return q2.object->id1(q2.basepoint);
      case K::Outer: return q2.object->one_of_outer(kb.on1(q1.object->payload1(c)));
      case K::Bridge: {
        auto [h, m] = q1.object->bridge1(c);
        (void)h;
        int mprime = kb.on1(m);  // a bridge cell of B'
        return q2.object->one_of_bridge(q2.object->aprime()->id1(0), mprime);
      }
    }
    return -1;
  };
  auto phi2 = [q1, q2, bp, kb](int t) {
    using K = PushoutTwoCategory::Kind;
    switch (q1.object->kind2(t)) {
      case K::Aprime: return q2.object->id2(q2.object->id1(q2.basepoint));
      case K::Outer: return q2.object->two_of_outer(kb.on2(q1.object->payload2(t)));
      case K::Bridge: {
        auto [ph, th] = q1.object->bridge2(t);
        (void)ph;
        int tprime = kb.on2(th);
        return q2.object->two_of_bridge(q2.object->aprime()->id2(q2.object->aprime()->id1(0)),
                                        tprime);
      }
    }
    return -1;
  };
  TwoFunctor iso(q1.object, q2.object, phi0, phi1, phi2);
  Report fr = iso.validate(budget);
  rep.merge(fr, "quotient-iso-functor.");

  // bijectivity on objects and cells
  {
    bool ok = q1.object->n_objects() == q2.object->n_objects();
    std::set<int> img1, img2;
    Budget probe(1 << 22);
    std::vector<int> q1_ones = q1.object->all1(&probe);
    std::vector<int> q2_ones = q2.object->all1(&probe);
    for (int c : q1_ones) img1.insert(iso.on1(c));
    ok = ok && img1.size() == q1_ones.size() && q1_ones.size() == q2_ones.size();
    std::vector<int> q1_twos = q1.object->all2(&probe);
    std::vector<int> q2_twos = q2.object->all2(&probe);
    for (int t : q1_twos) img2.insert(iso.on2(t));
    ok = ok && img2.size() == q1_twos.size() && q1_twos.size() == q2_twos.size();
    if (ok) rep.pass("quotient-iso-bijective", "B/A ≅ B'/A'");
    else
      rep.fail("quotient-iso-bijective", "cell counts differ",
               {{"q1_ones", q1_ones.size()}, {"q2_ones", q2_ones.size()},
                {"q1_twos", q1_twos.size()}, {"q2_twos", q2_twos.size()}});
  }

  // coprojection compatibility: proj2 ∘ kappa_b = iso ∘ proj1 on all B-cells
  {
    TwoFunctor p1 = quotient_projection(q1.object);
    TwoFunctor p2 = quotient_projection(q2.object);
    bool ok = true;
    Budget probe(1 << 22);
    for (int c : b->all1(&probe))
      if (p2.on1(kb.on1(c)) != iso.on1(p1.on1(c))) ok = false;
    for (int t : b->all2(&probe))
      if (p2.on2(kb.on2(t)) != iso.on2(p1.on2(t))) ok = false;
    if (ok) rep.pass("coprojection-equations");
    else rep.fail("coprojection-equations", "projections do not commute with kappa");
  }

  // (B\A) ∩ W ≅ (B'\A') ∩ W'
  {
    std::vector<int> a = cert.a_objects;
    std::sort(a.begin(), a.end());
    std::vector<int> inter1;
    for (int x : cert.w_objects)
      if (!std::binary_search(a.begin(), a.end(), x)) inter1.push_back(x);
    auto s1 = std::make_shared<SubTwoCat>(b, inter1);
    std::vector<int> inter2;
    for (int x : inter1) inter2.push_back(bp->object_of_outer(x));
    auto s2 = std::make_shared<SubTwoCat>(bp, inter2);
    TwoFunctor psi(
        s1, s2,
        [s1, s2, bp](int x) {
          return s2->from_parent_object(bp->object_of_outer(s1->object_set()[x]));
        },
        [bp](int c) { return bp->one_of_outer(c); }, [bp](int t) { return bp->two_of_outer(t); });
    Report pr = psi.validate(budget);
    rep.merge(pr, "intersection-iso-functor.");
    Budget probe(1 << 22);
    bool ok = s1->n_objects() == s2->n_objects() &&
              s1->all1(&probe).size() == s2->all1(&probe).size() &&
              s1->all2(&probe).size() == s2->all2(&probe).size();
    if (ok) rep.pass("intersection-iso-bijective", "(B\\A)∩W ≅ (B'\\A')∩W'");
    else rep.fail("intersection-iso-bijective", "cell counts differ");
  }
  (void)f;
  return rep;
}

}  // namespace thoma2
