#include "thoma2/nlax.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

namespace thoma2 {

namespace {

// Members of the strict chain underlying a non-degenerate simplex of
// nerve(P), as P indices sorted in P's order. Vertex i of nerve(P) is the
// singleton chain of element i.
std::vector<int> nerve_chain_members(const SimplicialSet& nv, const Poset& p, int dim, int idx) {
  std::set<int> vs;
  std::vector<EZ> stack = {EZ{dim, idx, {}}};
  while (!stack.empty()) {
    EZ cur = stack.back();
    stack.pop_back();
    if (cur.base_dim == 0) {
      vs.insert(cur.base_idx);
      continue;
    }
    for (int i = 0; i <= cur.base_dim; ++i)
      stack.push_back(nv.stored_face(cur.base_dim, cur.base_idx, i));
  }
  std::vector<int> members(vs.begin(), vs.end());
  std::sort(members.begin(), members.end(), [&](int a, int b) { return p.lt(a, b); });
  return members;
}

}  // namespace

int NerveSimplex::pair_index(int n, int p, int q) {
  // pairs (p, q), p < q <= n, ordered lexicographically
  int idx = 0;
  for (int a = 0; a < p; ++a) idx += n - a;
  return idx + (q - p - 1);
}

int NerveSimplex::triple_index(int n, int p, int q, int r) {
  int idx = 0;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        if (a == p && b == q && c == r) return idx;
        ++idx;
      }
  throw InvalidArgument("triple out of range");
}

int NerveSimplex::arrow(const TwoCat& a, int p, int q) const {
  if (p == q) return a.id1(obj[p]);
  return arr[pair_index(degree, p, q)];
}

int NerveSimplex::gamma(const TwoCat& a, int p, int q, int r) const {
  if (p == q || q == r) return a.id2(arrow(a, p, r));
  return gam[triple_index(degree, p, q, r)];
}

NerveSimplex NerveSimplex::reindex(const TwoCat& a, const std::vector<int>& map) const {
  NerveSimplex out;
  out.degree = static_cast<int>(map.size()) - 1;
  int m = out.degree;
  for (int p = 0; p <= m; ++p) out.obj.push_back(obj[map[p]]);
  for (int p = 0; p <= m; ++p)
    for (int q = p + 1; q <= m; ++q) out.arr.push_back(arrow(a, map[p], map[q]));
  for (int p = 0; p <= m; ++p)
    for (int q = p + 1; q <= m; ++q)
      for (int r = q + 1; r <= m; ++r) out.gam.push_back(gamma(a, map[p], map[q], map[r]));
  return out;
}

NerveSimplex NerveSimplex::face(const TwoCat& a, int i) const {
  std::vector<int> map;
  for (int p = 0; p <= degree; ++p)
    if (p != i) map.push_back(p);
  return reindex(a, map);
}

NerveSimplex NerveSimplex::degeneracy(const TwoCat& a, int i) const {
  std::vector<int> map;
  for (int p = 0; p <= degree + 1; ++p) map.push_back(p <= i ? p : p - 1);
  return reindex(a, map);
}

Token NerveSimplex::token(const TwoCat& a) const {
  std::vector<std::string> parts;
  for (int x : obj) parts.push_back(a.object_token(x));
  for (int f : arr) parts.push_back(a.token1(f));
  for (int g : gam) parts.push_back(a.token2(g));
  return "{" + join(parts, ";") + "}";
}

EZ N2Result::ez_of(const NerveSimplex& s) const {
  NerveSimplex cur = s;
  std::vector<int> word;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int i = 0; i < cur.degree; ++i) {
      NerveSimplex fi = cur.face(*cat, i);
      if (fi.degeneracy(*cat, i) == cur) {
        word.push_back(i);
        cur = fi;
        stripped = true;
        break;
      }
    }
  }
  auto it = index[cur.degree].find(cur.token(*cat));
  if (it == index[cur.degree].end()) throw InvalidArgument("nerve simplex not enumerated");
  int cell = it->second;
  // locate the nondeg index
  int nd = -1;
  for (size_t i = 0; i < nondeg_cell[cur.degree].size(); ++i)
    if (nondeg_cell[cur.degree][i] == cell) { nd = static_cast<int>(i); break; }
  if (nd < 0) throw InvalidArgument("stripped simplex is not non-degenerate");
  EZ out{cur.degree, nd, {}};
  for (size_t q = word.size(); q-- > 0;) out = sset->degeneracy(out, word[q]);
  return out;
}

NerveSimplex N2Result::of_ez(const EZ& x) const {
  NerveSimplex cur = of_nondeg(x.base_dim, x.base_idx);
  for (size_t q = x.word.size(); q-- > 0;) cur = cur.degeneracy(*cat, x.word[q]);
  return cur;
}

N2Result n2(std::shared_ptr<const TwoCat> a, int cap, Budget* budget) {
  const TwoCat& A = *a;
  N2Result out;
  out.cat = a;
  out.sset = std::make_shared<SimplicialSet>(cap);
  out.cells.resize(cap + 1);
  out.nondeg_cell.resize(cap + 1);
  out.index.resize(cap + 1);

  int n0 = A.n_objects();
  std::vector<std::vector<char>> has_arrow(n0, std::vector<char>(n0, 0));
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y) has_arrow[x][y] = !A.hom1(x, y).empty();

  for (int m = 0; m <= cap; ++m) {
    // enumerate objects, then arrows in (p,q) lex order, then gammas in
    // (p,q,r) lex order with cocycle pruning as soon as all four triples of a
    // quadruple are bound
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p <= m; ++p)
      for (int q = p + 1; q <= m; ++q) pairs.push_back({p, q});
    std::vector<std::array<int, 3>> triples;
    for (int p = 0; p <= m; ++p)
      for (int q = p + 1; q <= m; ++q)
        for (int r = q + 1; r <= m; ++r) triples.push_back({p, q, r});

    NerveSimplex s;
    s.degree = m;
    s.obj.assign(m + 1, -1);
    s.arr.assign(pairs.size(), -1);
    s.gam.assign(triples.size(), -1);

    std::function<void(size_t)> assign_gamma = [&](size_t t) {
      if (t == triples.size()) {
        if (budget) budget->charge(1, "n2");
        out.index[m][s.token(A)] = static_cast<int>(out.cells[m].size());
        out.cells[m].push_back(s);
        return;
      }
      auto [p, q, r] = triples[t];
      int comp = A.compose1(s.arrow(A, q, r), s.arrow(A, p, q));
      for (int g : A.hom2(comp, s.arrow(A, p, r))) {
        s.gam[t] = g;
        // cocycle checks for quadruples whose lex-largest triple is (p,q,r)
        bool ok = true;
        for (int i = 0; i < p && ok; ++i) {
          int g_ijk = s.gamma(A, i, p, q);
          int g_ikl = s.gamma(A, i, q, r);
          int g_ijl = s.gamma(A, i, p, r);
          int g_jkl = g;
          int lhs = A.vcomp(g_ikl, A.whisker_post(s.arrow(A, q, r), g_ijk));
          int rhs = A.vcomp(g_ijl, A.whisker_pre(g_jkl, s.arrow(A, i, p)));
          ok = lhs == rhs;
        }
        if (ok) assign_gamma(t + 1);
      }
      s.gam[t] = -1;
    };

    std::function<void(size_t)> assign_arrow = [&](size_t t) {
      if (t == pairs.size()) {
        assign_gamma(0);
        return;
      }
      auto [p, q] = pairs[t];
      for (int f : A.hom1(s.obj[p], s.obj[q])) {
        s.arr[t] = f;
        assign_arrow(t + 1);
      }
      s.arr[t] = -1;
    };

    std::function<void(int)> assign_obj = [&](int p) {
      if (p == m + 1) {
        assign_arrow(0);
        return;
      }
      for (int x = 0; x < n0; ++x) {
        bool ok = true;
        for (int pp = 0; pp < p && ok; ++pp) ok = has_arrow[s.obj[pp]][x];
        if (!ok) continue;
        s.obj[p] = x;
        assign_obj(p + 1);
      }
      s.obj[p] = -1;
    };
    assign_obj(0);

    // non-degenerate cells and the face table
    for (size_t ci = 0; ci < out.cells[m].size(); ++ci) {
      const NerveSimplex& cand = out.cells[m][ci];
      bool degenerate = false;
      for (int i = 0; i < m && !degenerate; ++i)
        if (cand.face(A, i).degeneracy(A, i) == cand) degenerate = true;
      if (degenerate) continue;
      std::vector<EZ> faces;
      if (m > 0)
        for (int i = 0; i <= m; ++i) faces.push_back(out.ez_of(cand.face(A, i)));
      out.sset->add_simplex(m, cand.token(A), std::move(faces));
      out.nondeg_cell[m].push_back(static_cast<int>(ci));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// NormalLaxFunctor

NormalLaxFunctor::NormalLaxFunctor(std::shared_ptr<const TwoCat> src,
                                   std::shared_ptr<const TwoCat> tgt,
                                   std::function<int(int)> on0, std::function<int(int)> on1,
                                   std::function<int(int)> on2,
                                   std::function<int(int, int)> gamma)
    : src_(std::move(src)), tgt_(std::move(tgt)), f0_(std::move(on0)), f1_(std::move(on1)),
      f2_(std::move(on2)), gamma_(std::move(gamma)) {}

NerveSimplex NormalLaxFunctor::apply(const TwoCat& a, const NerveSimplex& s) const {
  const TwoCat& B = *tgt_;
  NerveSimplex out;
  out.degree = s.degree;
  for (int x : s.obj) out.obj.push_back(f0_(x));
  for (int p = 0; p <= s.degree; ++p)
    for (int q = p + 1; q <= s.degree; ++q) out.arr.push_back(f1_(s.arrow(a, p, q)));
  for (int p = 0; p <= s.degree; ++p)
    for (int q = p + 1; q <= s.degree; ++q)
      for (int r = q + 1; r <= s.degree; ++r) {
        int gs = f2_(s.gamma(a, p, q, r));
        int gg = gamma_(s.arrow(a, p, q), s.arrow(a, q, r));
        out.gam.push_back(B.vcomp(gs, gg));
      }
  return out;
}

NormalLaxFunctor strict_nlax(const TwoFunctor& f) {
  auto tgt = f.target_ptr();
  auto on1 = [f](int x) { return f.on1(x); };
  return NormalLaxFunctor(
      f.source_ptr(), tgt, [f](int x) { return f.on0(x); }, on1,
      [f](int a) { return f.on2(a); },
      [f, tgt](int g1, int g2) {
        const TwoCat& B = *tgt;
        return B.id2(B.compose1(f.on1(g2), f.on1(g1)));
      });
}

NormalLaxFunctor compose_nlax(const NormalLaxFunctor& g, const NormalLaxFunctor& f) {
  auto tgt = g.target_ptr();
  return NormalLaxFunctor(
      f.source_ptr(), tgt, [g, f](int x) { return g.on0(f.on0(x)); },
      [g, f](int u) { return g.on1(f.on1(u)); }, [g, f](int a) { return g.on2(f.on2(a)); },
      [g, f, tgt](int u, int v) {
        // gamma^{G∘F}(u,v) = G(gamma^F(u,v)) • gamma^G(F(u), F(v))
        return tgt->vcomp(g.on2(f.gamma(u, v)), g.gamma(f.on1(u), f.on1(v)));
      });
}

Report validate_nlax(const NormalLaxFunctor& fn, Budget* budget) {
  Report rep;
  rep.lemma = "normal-lax-functor";
  const TwoCat& A = fn.source();
  const TwoCat& B = fn.target();
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

  // (ii) horizontal identities
  for (int x = 0; x < A.n_objects(); ++x)
    law("preserves-identities", {{"object", A.object_token(x)}},
        [&] { return fn.on1(A.id1(x)) == B.id1(fn.on0(x)); });

  // (i) locally a functor
  for (int f : ones)
    law("frames-1", {{"cell", A.token1(f)}}, [&] {
      return B.dom0(fn.on1(f)) == fn.on0(A.dom0(f)) && B.cod0(fn.on1(f)) == fn.on0(A.cod0(f));
    });
  for (int f : ones)
    law("local-identity", {{"cell", A.token1(f)}},
        [&] { return fn.on2(A.id2(f)) == B.id2(fn.on1(f)); });
  for (int a : twos)
    law("frames-2", {{"cell", A.token2(a)}}, [&] {
      return B.dom1(fn.on2(a)) == fn.on1(A.dom1(a)) && B.cod1(fn.on2(a)) == fn.on1(A.cod1(a));
    });
  for (int a : twos)
    for (int b : twos)
      if (A.cod1(a) == A.dom1(b))
        law("local-vcomp", {{"a", A.token2(a)}, {"b", A.token2(b)}},
            [&] { return fn.on2(A.vcomp(b, a)) == B.vcomp(fn.on2(b), fn.on2(a)); });

  // (iii) structural cells: frames and normality
  for (int f : ones)
    for (int g : ones) {
      if (A.cod0(f) != A.dom0(g)) continue;
      law("gamma-frame", {{"f", A.token1(f)}, {"g", A.token1(g)}}, [&] {
        int gm = fn.gamma(f, g);
        return B.dom1(gm) == B.compose1(fn.on1(g), fn.on1(f)) &&
               B.cod1(gm) == fn.on1(A.compose1(g, f));
      });
      if (A.is_id1(f))
        law("gamma-normal-left", {{"g", A.token1(g)}},
            [&] { return fn.gamma(f, g) == B.id2(fn.on1(g)); });
      if (A.is_id1(g))
        law("gamma-normal-right", {{"f", A.token1(f)}},
            [&] { return fn.gamma(f, g) == B.id2(fn.on1(f)); });
    }

  // (iii)(a) cocycle
  for (int f : ones)
    for (int g : ones) {
      if (A.cod0(f) != A.dom0(g)) continue;
      for (int h : ones) {
        if (A.cod0(g) != A.dom0(h)) continue;
        law("cocycle", {{"f", A.token1(f)}, {"g", A.token1(g)}, {"h", A.token1(h)}}, [&] {
          int lhs = B.vcomp(fn.gamma(A.compose1(g, f), h),
                            B.whisker_post(fn.on1(h), fn.gamma(f, g)));
          int rhs = B.vcomp(fn.gamma(f, A.compose1(h, g)),
                            B.whisker_pre(fn.gamma(g, h), fn.on1(f)));
          return lhs == rhs;
        });
      }
    }

  // (iii)(b) naturality
  for (int al : twos)
    for (int be : twos) {
      if (A.cod0(A.dom1(al)) != A.dom0(A.dom1(be))) continue;
      law("gamma-natural", {{"alpha", A.token2(al)}, {"beta", A.token2(be)}}, [&] {
        int f = A.dom1(al), fp = A.cod1(al);
        int g = A.dom1(be), gp = A.cod1(be);
        int lhs = B.vcomp(fn.gamma(fp, gp), B.hcomp2(fn.on2(be), fn.on2(al)));
        int rhs = B.vcomp(fn.on2(A.hcomp2(be, al)), fn.gamma(f, g));
        return lhs == rhs;
      });
    }

  if (fails == 0) rep.pass("normal-lax-conditions");
  return rep;
}

std::shared_ptr<ChainTwoCategory> c2_poset(const Poset& p) { return chain_two_category(p); }

NerveSimplex eta_simplex(const ChainTwoCategory& c, const std::vector<int>& tuple) {
  NerveSimplex s;
  s.degree = static_cast<int>(tuple.size()) - 1;
  s.obj = tuple;
  int m = s.degree;
  for (int p = 0; p <= m; ++p)
    for (int q = p + 1; q <= m; ++q) {
      std::vector<int> members = {tuple[p], tuple[q]};
      s.arr.push_back(c.intern_chain(make_chain(c.base(), members)));
    }
  for (int p = 0; p <= m; ++p)
    for (int q = p + 1; q <= m; ++q)
      for (int r = q + 1; r <= m; ++r) {
        int fpq = s.arrow(c, p, q);
        int fqr = s.arrow(c, q, r);
        int fpr = s.arrow(c, p, r);
        s.gam.push_back(c.intern_two(c.compose1(fqr, fpq), fpr));
      }
  return s;
}

Report eta_check(const Poset& p, int cap, Budget* budget) {
  Report rep;
  rep.lemma = "eta-iso";
  rep.params = {{"poset_size", p.size()}, {"cap", cap}};
  auto c = chain_two_category(p);
  N2Result n = n2(c, cap, budget);
  SimplicialSet nv = nerve(p, cap);

  for (int m = 0; m <= cap; ++m) {
    // build eta on all total m-simplices (weakly increasing tuples)
    std::vector<EZ> totals = nv.total(m);
    std::set<Token> images;
    bool all_present = true;
    Token missing;
    for (const EZ& x : totals) {
      std::vector<int> tuple = nerve_chain_members(nv, p, x.base_dim, x.base_idx);
      for (size_t q = x.word.size(); q-- > 0;) {
        int i = x.word[q];
        tuple.insert(tuple.begin() + i, tuple[i]);
      }
      NerveSimplex s = eta_simplex(*c, tuple);
      Token t = s.token(*c);
      if (!n.index[m].count(t)) { all_present = false; missing = t; }
      images.insert(t);
    }
    bool injective = images.size() == totals.size();
    bool surjective = images.size() == n.cells[m].size();
    if (all_present && injective && surjective)
      rep.pass("bijective-degree-" + std::to_string(m),
               std::to_string(totals.size()) + " simplices on both sides");
    else
      rep.fail("bijective-degree-" + std::to_string(m),
               std::string(all_present ? "" : "missing image; ") +
                   (injective ? "" : "not injective; ") + (surjective ? "" : "not surjective"),
               {{"nerve_count", totals.size()},
                {"n2_count", n.cells[m].size()},
                {"missing", missing}});
  }

  // simpliciality: the map commutes with faces on non-degenerate chains
  bool simplicial = true;
  for (int m = 1; m <= cap && simplicial; ++m)
    for (int idx = 0; idx < nv.count(m) && simplicial; ++idx) {
      std::vector<int> members = nerve_chain_members(nv, p, m, idx);
      NerveSimplex s = eta_simplex(*c, members);
      for (int i = 0; i <= m; ++i) {
        std::vector<int> sub = members;
        sub.erase(sub.begin() + i);
        if (!(s.face(*c, i) == eta_simplex(*c, sub))) simplicial = false;
      }
    }
  if (simplicial) rep.pass("simplicial", "eta commutes with faces");
  else rep.fail("simplicial", "eta fails to commute with a face");
  return rep;
}

SimplicialMap n2_tilde(const NormalLaxFunctor& g, const N2Result& n2_src, const N2Result& n2_tgt) {
  const SimplicialSet& src = *n2_src.sset;
  std::vector<std::vector<EZ>> assignment(src.dim_cap() + 1);
  for (int d = 0; d <= src.dim_cap(); ++d)
    for (int idx = 0; idx < src.count(d); ++idx) {
      const NerveSimplex& s = n2_src.of_nondeg(d, idx);
      assignment[d].push_back(n2_tgt.ez_of(g.apply(*n2_src.cat, s)));
    }
  return SimplicialMap(n2_src.sset, n2_tgt.sset, std::move(assignment));
}

}  // namespace thoma2
