#include "thoma2/cyl.hpp"

#include <algorithm>
#include <numeric>

namespace thoma2 {

CylTwoCat::CylTwoCat(std::shared_ptr<const TwoCat> base, Budget* budget)
    : base_(std::move(base)) {
  objs_ = base_->all1(budget);
  for (size_t i = 0; i < objs_.size(); ++i) obj_of_[objs_[i]] = static_cast<int>(i);
}

int CylTwoCat::intern_square(int from, int to, Square s) const {
  const TwoCat& A = *base_;
  int f = objs_[from], g = objs_[to];
  if (A.dom0(s.u0) != A.dom0(f) || A.cod0(s.u0) != A.dom0(g) || A.dom0(s.u1) != A.cod0(f) ||
      A.cod0(s.u1) != A.cod0(g))
    throw InvalidArgument("lax square legs ill-framed");
  if (A.dom1(s.alpha) != A.compose1(s.u1, f) || A.cod1(s.alpha) != A.compose1(g, s.u0))
    throw InvalidArgument("lax square 2-cell ill-framed");
  std::array<int, 5> key = {from, to, s.u0, s.u1, s.alpha};
  auto it = sq_ids_.find(key);
  if (it != sq_ids_.end()) return it->second;
  squares_.push_back(s);
  sq_frames_.push_back({from, to});
  int id = static_cast<int>(squares_.size()) - 1;
  sq_ids_[key] = id;
  return id;
}

int CylTwoCat::intern_cylinder(int sq_from, int sq_to, Cylinder c) const {
  const TwoCat& A = *base_;
  if (sq_frames_[sq_from] != sq_frames_[sq_to])
    throw InvalidArgument("cylinder frames are not parallel");
  const Square& s = squares_[sq_from];
  const Square& t = squares_[sq_to];
  if (A.dom1(c.theta0) != s.u0 || A.cod1(c.theta0) != t.u0 || A.dom1(c.theta1) != s.u1 ||
      A.cod1(c.theta1) != t.u1)
    throw InvalidArgument("cylinder components ill-framed");
  int f = objs_[sq_frames_[sq_from].first];
  int g = objs_[sq_frames_[sq_from].second];
  // exchange: (g ∘ theta0) • alpha = beta • (theta1 ∘ f)
  int lhs = A.vcomp(A.whisker_post(g, c.theta0), s.alpha);
  int rhs = A.vcomp(t.alpha, A.whisker_pre(c.theta1, f));
  if (lhs != rhs) throw InvalidArgument("cylinder exchange equation fails");
  std::array<int, 4> key = {sq_from, sq_to, c.theta0, c.theta1};
  auto it = cyl_ids_.find(key);
  if (it != cyl_ids_.end()) return it->second;
  cyls_.push_back(c);
  cyl_frames_.push_back({sq_from, sq_to});
  int id = static_cast<int>(cyls_.size()) - 1;
  cyl_ids_[key] = id;
  return id;
}

CylTwoCat::Square CylTwoCat::square(int f) const { return squares_[f]; }
std::pair<int, int> CylTwoCat::square_frames(int f) const { return sq_frames_[f]; }
CylTwoCat::Cylinder CylTwoCat::cylinder(int a) const { return cyls_[a]; }

int CylTwoCat::id1(int x) const {
  const TwoCat& A = *base_;
  int f = objs_[x];
  return intern_square(x, x, {A.id1(A.dom0(f)), A.id1(A.cod0(f)), A.id2(f)});
}

int CylTwoCat::compose1(int g, int f) const {
  const TwoCat& A = *base_;
  auto [a, b] = sq_frames_[f];
  auto [b2, c] = sq_frames_[g];
  if (b != b2) throw InvalidArgument("lax squares not composable");
  const Square& s = squares_[f];
  const Square& t = squares_[g];
  int alpha = A.vcomp(A.whisker_pre(t.alpha, s.u0), A.whisker_post(t.u1, s.alpha));
  return intern_square(a, c, {A.compose1(t.u0, s.u0), A.compose1(t.u1, s.u1), alpha});
}

std::vector<int> CylTwoCat::hom1(int x, int y) const {
  const TwoCat& A = *base_;
  int f = objs_[x], g = objs_[y];
  std::vector<int> out;
  for (int u0 : A.hom1(A.dom0(f), A.dom0(g)))
    for (int u1 : A.hom1(A.cod0(f), A.cod0(g)))
      for (int alpha : A.hom2(A.compose1(u1, f), A.compose1(g, u0)))
        out.push_back(intern_square(x, y, {u0, u1, alpha}));
  std::sort(out.begin(), out.end());
  return out;
}

Token CylTwoCat::token1(int f) const {
  const Square& s = squares_[f];
  return "(" + base_->token1(s.u0) + "," + base_->token1(s.u1) + "," + base_->token2(s.alpha) +
         ")";
}

int CylTwoCat::id2(int f) const {
  const TwoCat& A = *base_;
  const Square& s = squares_[f];
  return intern_cylinder(f, f, {A.id2(s.u0), A.id2(s.u1)});
}

int CylTwoCat::vcomp(int b, int a) const {
  const TwoCat& A = *base_;
  if (cyl_frames_[a].second != cyl_frames_[b].first)
    throw InvalidArgument("cylinders not composable");
  const Cylinder& ca = cyls_[a];
  const Cylinder& cb = cyls_[b];
  return intern_cylinder(cyl_frames_[a].first, cyl_frames_[b].second,
                         {A.vcomp(cb.theta0, ca.theta0), A.vcomp(cb.theta1, ca.theta1)});
}

int CylTwoCat::whisker_pre(int a, int f) const {
  const TwoCat& A = *base_;
  const Cylinder& c = cyls_[a];
  const Square& s = squares_[f];
  int from = compose1(cyl_frames_[a].first, f);
  int to = compose1(cyl_frames_[a].second, f);
  return intern_cylinder(from, to,
                         {A.whisker_pre(c.theta0, s.u0), A.whisker_pre(c.theta1, s.u1)});
}

int CylTwoCat::whisker_post(int g, int a) const {
  const TwoCat& A = *base_;
  const Cylinder& c = cyls_[a];
  const Square& s = squares_[g];
  int from = compose1(g, cyl_frames_[a].first);
  int to = compose1(g, cyl_frames_[a].second);
  return intern_cylinder(from, to,
                         {A.whisker_post(s.u0, c.theta0), A.whisker_post(s.u1, c.theta1)});
}

std::vector<int> CylTwoCat::hom2(int f, int g) const {
  const TwoCat& A = *base_;
  if (sq_frames_[f] != sq_frames_[g]) return {};
  const Square& s = squares_[f];
  const Square& t = squares_[g];
  int obf = objs_[sq_frames_[f].first];
  int obg = objs_[sq_frames_[f].second];
  std::vector<int> out;
  for (int t0 : A.hom2(s.u0, t.u0))
    for (int t1 : A.hom2(s.u1, t.u1)) {
      int lhs = A.vcomp(A.whisker_post(obg, t0), s.alpha);
      int rhs = A.vcomp(t.alpha, A.whisker_pre(t1, obf));
      if (lhs == rhs) out.push_back(intern_cylinder(f, g, {t0, t1}));
    }
  std::sort(out.begin(), out.end());
  return out;
}

Token CylTwoCat::token2(int a) const {
  const Cylinder& c = cyls_[a];
  return "[" + base_->token2(c.theta0) + "," + base_->token2(c.theta1) + "]@" +
         token1(cyl_frames_[a].first) + "->" + token1(cyl_frames_[a].second);
}

std::vector<int> CylTwoCat::all1(Budget* budget) const {
  std::vector<int> out;
  for (int x = 0; x < n_objects(); ++x)
    for (int y = 0; y < n_objects(); ++y)
      for (int f : hom1(x, y)) out.push_back(f);
  if (budget) budget->charge(static_cast<std::int64_t>(out.size()), "cyl.all1");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> CylTwoCat::all2(Budget* budget) const {
  std::vector<int> ones = all1(budget);
  std::vector<int> out;
  for (int f : ones)
    for (int g : ones) {
      if (sq_frames_[f] != sq_frames_[g]) continue;
      for (int a : hom2(f, g)) out.push_back(a);
    }
  if (budget) budget->charge(static_cast<std::int64_t>(out.size()), "cyl.all2");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CylResult cyl(std::shared_ptr<const TwoCat> a, Budget* budget) {
  CylResult out;
  out.view = std::make_shared<CylTwoCat>(std::move(a), budget);
  out.cat = explicit_of(*out.view, budget).cat;
  return out;
}

CylStructure cyl_structure(std::shared_ptr<const CylTwoCat> c) {
  auto base = c->base();
  CylStructure out;
  out.dom = TwoFunctor(
      c, base, [c](int x) { return c->base()->dom0(c->cell_of_object(x)); },
      [c](int f) { return c->square(f).u0; }, [c](int a) { return c->cylinder(a).theta0; });
  out.cod = TwoFunctor(
      c, base, [c](int x) { return c->base()->cod0(c->cell_of_object(x)); },
      [c](int f) { return c->square(f).u1; }, [c](int a) { return c->cylinder(a).theta1; });
  out.diag = TwoFunctor(
      base, c, [c](int x) { return c->object_of_cell(c->base()->id1(x)); },
      [c](int f) {
        const TwoCat& A = *c->base();
        int from = c->object_of_cell(A.id1(A.dom0(f)));
        int to = c->object_of_cell(A.id1(A.cod0(f)));
        return c->intern_square(from, to, {f, f, A.id2(f)});
      },
      [c](int al) {
        const TwoCat& A = *c->base();
        int f = A.dom1(al), g = A.cod1(al);
        int from = c->object_of_cell(A.id1(A.dom0(f)));
        int to = c->object_of_cell(A.id1(A.cod0(f)));
        int sf = c->intern_square(from, to, {f, f, A.id2(f)});
        int sg = c->intern_square(from, to, {g, g, A.id2(g)});
        return c->intern_cylinder(sf, sg, {al, al});
      });
  return out;
}

Report validate_lax_transformation(const LaxTransformation& t, Budget* budget) {
  Report rep;
  rep.lemma = "lax-transformation";
  const TwoCat& A = t.f.source();
  const TwoCat& B = t.f.target();
  int fails = 0;
  auto fail = [&](const std::string& name, nlohmann::json ce, const std::string& why = "") {
    ++fails;
    if (fails <= 8) rep.fail(name, why, std::move(ce));
  };
  auto law = [&](const char* name, nlohmann::json ce, auto&& holds) {
    try {
      if (!holds()) fail(name, std::move(ce));
    } catch (const std::exception& e) {
      fail(name, std::move(ce), e.what());
    }
  };

  std::vector<int> ones = A.all1(budget);
  std::vector<int> twos = A.all2(budget);
  for (int x = 0; x < A.n_objects(); ++x)
    law("component-frame", {{"object", A.object_token(x)}}, [&] {
      int ax = t.at_object(x);
      return B.dom0(ax) == t.f.on0(x) && B.cod0(ax) == t.g.on0(x);
    });
  for (int u : ones)
    law("component-2cell-frame", {{"f", A.token1(u)}}, [&] {
      int au = t.at_one(u);
      int x = A.dom0(u), y = A.cod0(u);
      return B.dom1(au) == B.compose1(t.g.on1(u), t.at_object(x)) &&
             B.cod1(au) == B.compose1(t.at_object(y), t.f.on1(u));
    });
  // (i): naturality against 2-cells
  for (int th : twos)
    law("condition-i", {{"theta", A.token2(th)}}, [&] {
      int u = A.dom1(th), v = A.cod1(th);
      int x = A.dom0(u), y = A.cod0(u);
      int lhs = B.vcomp(t.at_one(v), B.whisker_pre(t.g.on2(th), t.at_object(x)));
      int rhs = B.vcomp(B.whisker_post(t.at_object(y), t.f.on2(th)), t.at_one(u));
      return lhs == rhs;
    });
  // (ii): compatibility with composition
  for (int u : ones)
    for (int v : ones) {
      if (A.cod0(u) != A.dom0(v)) continue;
      law("condition-ii", {{"f", A.token1(u)}, {"g", A.token1(v)}}, [&] {
        int lhs = B.vcomp(B.whisker_pre(t.at_one(v), t.f.on1(u)),
                          B.whisker_post(t.g.on1(v), t.at_one(u)));
        return lhs == t.at_one(A.compose1(v, u));
      });
    }
  if (fails == 0) rep.pass("lax-transformation-conditions");
  return rep;
}

TwoFunctor classify_lax_transformation(const LaxTransformation& t,
                                       std::shared_ptr<const CylTwoCat> cyl_b) {
  Report chk = validate_lax_transformation(t);
  if (!chk.ok()) throw InvalidArgument("lax transformation conditions fail: " + chk.summary());
  auto f = t.f;
  auto g = t.g;
  auto at_obj = t.at_object;
  auto at_one = t.at_one;
  auto src = t.f.source_ptr();
  return TwoFunctor(
      src, cyl_b, [cyl_b, at_obj](int x) { return cyl_b->object_of_cell(at_obj(x)); },
      [cyl_b, f, g, at_obj, at_one](int u) {
        const TwoCat& A = f.source();
        int from = cyl_b->object_of_cell(at_obj(A.dom0(u)));
        int to = cyl_b->object_of_cell(at_obj(A.cod0(u)));
        return cyl_b->intern_square(from, to, {f.on1(u), g.on1(u), at_one(u)});
      },
      [cyl_b, f, g, at_obj, at_one](int th) {
        const TwoCat& A = f.source();
        int u = A.dom1(th), v = A.cod1(th);
        int from = cyl_b->object_of_cell(at_obj(A.dom0(u)));
        int to = cyl_b->object_of_cell(at_obj(A.cod0(u)));
        int su = cyl_b->intern_square(from, to, {f.on1(u), g.on1(u), at_one(u)});
        int sv = cyl_b->intern_square(from, to, {f.on1(v), g.on1(v), at_one(v)});
        return cyl_b->intern_cylinder(su, sv, {f.on2(th), g.on2(th)});
      });
}

LaxTransformation extract_lax_transformation(const TwoFunctor& cls,
                                             std::shared_ptr<const CylTwoCat> cyl_b) {
  CylStructure st = cyl_structure(cyl_b);
  LaxTransformation out;
  out.f = st.dom.compose_after(cls);
  out.g = st.cod.compose_after(cls);
  out.at_object = [cls, cyl_b](int x) { return cyl_b->cell_of_object(cls.on0(x)); };
  out.at_one = [cls, cyl_b](int u) { return cyl_b->square(cls.on1(u)).alpha; };
  return out;
}

SimplicialHomotopy homotopy_Hni(std::shared_ptr<const CylTwoCat> c, const N2Result& n2_cyl,
                                int cap) {
  const CylTwoCat& C = *c;
  const TwoCat& A = *c->base();
  CylStructure st = cyl_structure(c);
  TwoFunctor i_dom = st.diag.compose_after(st.dom);
  SimplicialMap f_end = n2_tilde(strict_nlax(i_dom), n2_cyl, n2_cyl);
  SimplicialMap g_end = SimplicialMap::identity(n2_cyl.sset);

  // decode helpers on a nerve simplex F of N2(Cyl(A))
  auto obj_minus = [&](const NerveSimplex& s, int p) {
    return A.dom0(C.cell_of_object(s.obj[p]));
  };
  auto sq = [&](const NerveSimplex& s, int p, int q) { return C.square(s.arrow(C, p, q)); };
  auto cylpm = [&](const NerveSimplex& s, int p, int q, int r) {
    return C.cylinder(s.gamma(C, p, q, r));
  };

  int levels = std::min(cap, n2_cyl.sset->dim_cap() - 1) + 1;
  std::vector<std::vector<std::vector<EZ>>> fam(levels);
  for (int n = 0; n < levels; ++n) {
    fam[n].resize(n2_cyl.sset->count(n));
    for (int idx = 0; idx < n2_cyl.sset->count(n); ++idx) {
      const NerveSimplex& F = n2_cyl.of_nondeg(n, idx);
      fam[n][idx].resize(n + 1);
      for (int i = 0; i <= n; ++i) {
        NerveSimplex H;
        H.degree = n + 1;
        for (int p = 0; p <= n + 1; ++p)
          H.obj.push_back(p <= i ? C.object_of_cell(A.id1(obj_minus(F, p)))
                                 : F.obj[p - 1]);
        for (int p = 0; p <= n + 1; ++p)
          for (int q = p + 1; q <= n + 1; ++q) {
            if (q <= i) {
              // dom_F(p,q) = (F(p,q)-, F(p,q)-, id)
              int u = sq(F, p, q).u0;
              H.arr.push_back(C.intern_square(H.obj[p], H.obj[q], {u, u, A.id2(u)}));
            } else if (p <= i) {
              // cart_F(p, q-1) = (F(p,q-1)-, F(q-1) ∘ F(p,q-1)-, id)
              int u = sq(F, p, q - 1).u0;
              int target = C.cell_of_object(F.obj[q - 1]);
              int u1 = A.compose1(target, u);
              H.arr.push_back(C.intern_square(H.obj[p], H.obj[q], {u, u1, A.id2(u1)}));
            } else {
              H.arr.push_back(F.arrow(C, p - 1, q - 1));
            }
          }
        for (int p = 0; p <= n + 1; ++p)
          for (int q = p + 1; q <= n + 1; ++q)
            for (int r = q + 1; r <= n + 1; ++r) {
              int hpq = H.arr[NerveSimplex::pair_index(n + 1, p, q)];
              int hqr = H.arr[NerveSimplex::pair_index(n + 1, q, r)];
              int hpr = H.arr[NerveSimplex::pair_index(n + 1, p, r)];
              int from = C.compose1(hqr, hpq);
              int theta0, theta1;
              if (r <= i) {
                theta0 = cylpm(F, p, q, r).theta0;
                theta1 = theta0;
              } else if (q <= i) {
                theta0 = cylpm(F, p, q, r - 1).theta0;
                theta1 = A.whisker_post(C.cell_of_object(F.obj[r - 1]), theta0);
              } else if (p <= i) {
                theta0 = cylpm(F, p, q - 1, r - 1).theta0;
                int target = C.cell_of_object(F.obj[r - 1]);
                int first = A.whisker_pre(sq(F, q - 1, r - 1).alpha, sq(F, p, q - 1).u0);
                int second = A.whisker_post(target, theta0);
                theta1 = A.vcomp(second, first);
              } else {
                const CylTwoCat::Cylinder& cc = cylpm(F, p - 1, q - 1, r - 1);
                theta0 = cc.theta0;
                theta1 = cc.theta1;
              }
              H.gam.push_back(C.intern_cylinder(from, hpr, {theta0, theta1}));
            }
        fam[n][idx][i] = n2_cyl.ez_of(H);
      }
    }
  }
  return SimplicialHomotopy(f_end, g_end, std::move(fam));
}

Report path_object_check(std::shared_ptr<const TwoCat> a, int cap, Budget* budget) {
  Report rep;
  rep.lemma = "path-object";
  rep.params = {{"cap", cap}};
  auto c = std::make_shared<CylTwoCat>(a, budget);
  CylStructure st = cyl_structure(c);

  // commuting triangle: <dom, cod> ∘ I = diagonal, i.e. dom∘I = cod∘I = id
  bool triangle = true;
  std::vector<int> ones = a->all1(budget);
  std::vector<int> twos = a->all2(budget);
  for (int x = 0; x < a->n_objects() && triangle; ++x)
    if (st.dom.on0(st.diag.on0(x)) != x || st.cod.on0(st.diag.on0(x)) != x) triangle = false;
  for (int f : ones)
    if (st.dom.on1(st.diag.on1(f)) != f || st.cod.on1(st.diag.on1(f)) != f) triangle = false;
  for (int al : twos)
    if (st.dom.on2(st.diag.on2(al)) != al || st.cod.on2(st.diag.on2(al)) != al) triangle = false;
  if (triangle) rep.pass("triangle", "dom∘I = cod∘I = id");
  else rep.fail("triangle", "dom/cod do not retract I");

  Report fr = st.diag.validate(budget);
  rep.merge(fr, "I.");
  Report dr = st.dom.validate(budget);
  rep.merge(dr, "dom.");

  N2Result n = n2(c, cap + 1, budget);
  Report sv = n.sset->validate();
  rep.merge(sv, "n2.");

  SimplicialHomotopy h = homotopy_Hni(c, n, cap);
  Report hr = homotopy_check(h);
  rep.merge(hr, "H.");
  return rep;
}

Report right_homotopy_witness(const LaxTransformation& t, int cap, Budget* budget) {
  Report rep;
  rep.lemma = "right-homotopy";
  Report lt = validate_lax_transformation(t, budget);
  rep.merge(lt, "alpha.");
  if (!lt.ok()) return rep;

  auto b = t.f.target_ptr();
  auto c = std::make_shared<CylTwoCat>(b, budget);
  TwoFunctor cls = classify_lax_transformation(t, c);
  Report fr = cls.validate(budget);
  rep.merge(fr, "classifier.");

  CylStructure st = cyl_structure(c);
  const TwoCat& A = t.f.source();
  bool factors = true;
  std::vector<int> ones = A.all1(budget);
  std::vector<int> twos = A.all2(budget);
  for (int x = 0; x < A.n_objects(); ++x)
    if (st.dom.on0(cls.on0(x)) != t.f.on0(x) || st.cod.on0(cls.on0(x)) != t.g.on0(x))
      factors = false;
  for (int u : ones)
    if (st.dom.on1(cls.on1(u)) != t.f.on1(u) || st.cod.on1(cls.on1(u)) != t.g.on1(u))
      factors = false;
  for (int al : twos)
    if (st.dom.on2(cls.on2(al)) != t.f.on2(al) || st.cod.on2(cls.on2(al)) != t.g.on2(al))
      factors = false;
  if (factors) rep.pass("factorization", "<F,G> = <dom,cod> ∘ classifier");
  else rep.fail("factorization", "classifier does not factor <F,G>");

  // round trip
  LaxTransformation back = extract_lax_transformation(cls, c);
  bool round = true;
  for (int x = 0; x < A.n_objects(); ++x)
    if (back.at_object(x) != t.at_object(x)) round = false;
  for (int u : ones)
    if (back.at_one(u) != t.at_one(u)) round = false;
  if (round) rep.pass("round-trip");
  else rep.fail("round-trip", "extraction does not recover the components");

  Report po = path_object_check(b, cap, budget);
  rep.merge(po, "path-object.");
  return rep;
}

}  // namespace thoma2
