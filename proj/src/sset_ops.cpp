#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "thoma2/sset.hpp"

namespace thoma2 {

namespace {

struct DimIdx {
  int dim, idx;
  bool operator<(const DimIdx& o) const { return std::tie(dim, idx) < std::tie(o.dim, o.idx); }
  bool operator==(const DimIdx& o) const { return dim == o.dim && idx == o.idx; }
};

// All non-degenerate simplices reachable from x through iterated faces
// (taking EZ bases along the way), including x itself.
std::vector<DimIdx> face_closure(const SimplicialSet& k, DimIdx x) {
  std::set<DimIdx> seen;
  std::vector<DimIdx> stack = {x};
  while (!stack.empty()) {
    DimIdx cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    for (int i = 0; cur.dim > 0 && i <= cur.dim; ++i) {
      const EZ& f = k.stored_face(cur.dim, cur.idx, i);
      stack.push_back({f.base_dim, f.base_idx});
    }
  }
  return std::vector<DimIdx>(seen.begin(), seen.end());
}

}  // namespace

std::vector<SimplicialMap> hom_enumerate(std::shared_ptr<const SimplicialSet> k,
                                         std::shared_ptr<const SimplicialSet> l,
                                         int cap, Budget* budget) {
  const SimplicialSet& K = *k;
  const SimplicialSet& L = *l;
  cap = std::min(cap, K.dim_cap());
  for (int d = cap + 1; d <= K.dim_cap(); ++d)
    if (K.count(d) > 0)
      throw InvalidArgument("hom_enumerate: source has simplices above the cap");

  // principal = not an iterated-face base of any other simplex
  std::set<DimIdx> derived;
  for (int d = 0; d <= cap; ++d)
    for (int idx = 0; idx < K.count(d); ++idx)
      for (DimIdx f : face_closure(K, {d, idx}))
        if (!(f == DimIdx{d, idx})) derived.insert(f);
  std::vector<DimIdx> principals;
  for (int d = cap; d >= 0; --d)
    for (int idx = 0; idx < K.count(d); ++idx)
      if (!derived.count({d, idx})) principals.push_back({d, idx});

  // Greedy re-order: maximize overlap of face closures with what is already
  // assigned, so candidate filtering bites early.
  {
    std::vector<DimIdx> ordered;
    std::set<DimIdx> covered;
    std::vector<bool> used(principals.size(), false);
    for (size_t step = 0; step < principals.size(); ++step) {
      int best = -1, best_overlap = -1;
      for (size_t i = 0; i < principals.size(); ++i) {
        if (used[i]) continue;
        int overlap = 0;
        for (DimIdx f : face_closure(K, principals[i]))
          if (covered.count(f)) ++overlap;
        if (overlap > best_overlap ||
            (overlap == best_overlap && best >= 0 && principals[i].dim > principals[best].dim)) {
          best = static_cast<int>(i);
          best_overlap = overlap;
        }
      }
      used[best] = true;
      ordered.push_back(principals[best]);
      for (DimIdx f : face_closure(K, principals[best])) covered.insert(f);
    }
    principals = std::move(ordered);
  }

  std::vector<std::vector<EZ>> totals(cap + 1);
  for (int d = 0; d <= cap; ++d) totals[d] = L.total(d);

  std::vector<std::vector<EZ>> assignment(K.dim_cap() + 1);
  std::vector<std::vector<bool>> assigned(K.dim_cap() + 1);
  for (int d = 0; d <= K.dim_cap(); ++d) {
    assignment[d].assign(K.count(d), EZ{});
    assigned[d].assign(K.count(d), false);
  }

  using Trail = std::vector<DimIdx>;

  // Setting f(x) determines f on every non-degenerate base reachable through
  // x's faces; returns false on conflict.
  auto propagate = [&](auto&& self, DimIdx x, const EZ& val, Trail& trail) -> bool {
    if (assigned[x.dim][x.idx]) return assignment[x.dim][x.idx] == val;
    assignment[x.dim][x.idx] = val;
    assigned[x.dim][x.idx] = true;
    trail.push_back(x);
    for (int i = 0; x.dim > 0 && i <= x.dim; ++i) {
      const EZ& f = K.stored_face(x.dim, x.idx, i);
      EZ v = L.face(val, i);
      // strip f.word from v to find the forced value on the base
      EZ forced = v;
      for (size_t p = 0; p < f.word.size(); ++p) forced = L.face(forced, f.word[p]);
      // consistency: re-applying the word must reproduce v
      EZ re = forced;
      for (size_t p = f.word.size(); p-- > 0;) re = L.degeneracy(re, f.word[p]);
      if (!(re == v)) return false;
      if (!self(self, DimIdx{f.base_dim, f.base_idx}, forced, trail)) return false;
    }
    return true;
  };

  std::vector<SimplicialMap> out;
  long long work = 0;
  auto rec = [&](auto&& self, size_t step) -> void {
    if (step == principals.size()) {
      for (int d = 0; d <= K.dim_cap(); ++d)
        for (int idx = 0; idx < K.count(d); ++idx)
          if (!assigned[d][idx]) throw InvalidArgument("hom_enumerate: unreached simplex");
      if (budget) budget->charge(1, "hom_enumerate");
      out.emplace_back(k, l, assignment);
      return;
    }
    DimIdx x = principals[step];
    for (const EZ& cand : totals[x.dim]) {
      if (++work > (1ll << 31)) throw BudgetExceeded("hom_enumerate search exceeded 2^31 steps");
      // quick check against already-assigned faces
      bool feasible = true;
      for (int i = 0; x.dim > 0 && i <= x.dim && feasible; ++i) {
        const EZ& f = K.stored_face(x.dim, x.idx, i);
        if (f.word.empty() && assigned[f.base_dim][f.base_idx])
          feasible = L.face(cand, i) == assignment[f.base_dim][f.base_idx];
      }
      if (!feasible) continue;
      Trail trail;
      if (propagate(propagate, x, cand, trail)) self(self, step + 1);
      for (DimIdx t : trail) assigned[t.dim][t.idx] = false;
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [&](const SimplicialMap& a, const SimplicialMap& b) {
    for (int d = 0; d <= K.dim_cap(); ++d)
      for (int idx = 0; idx < K.count(d); ++idx) {
        const EZ& x = a.on_nondeg(d, idx);
        const EZ& y = b.on_nondeg(d, idx);
        if (!(x == y)) return x < y;
      }
    return false;
  });
  return out;
}

// ---------------------------------------------------------------------------
// pushout

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PushoutSSet pushout_sset(const SimplicialMap& f, const SimplicialMap& g) {
  const SimplicialSet& A = f.source();
  const SimplicialSet& B = f.target();
  const SimplicialSet& C = g.target();
  if (!(g.source_ptr().get() == f.source_ptr().get()))
    throw InvalidArgument("pushout_sset: maps must share their source");
  int cap = std::min(B.dim_cap(), C.dim_cap());
  cap = std::min(cap, A.dim_cap());

  // per-degree class structure over B.total(n) ++ C.total(n)
  std::vector<std::vector<EZ>> btot(cap + 1), ctot(cap + 1);
  std::vector<std::map<EZ, int>> bidx(cap + 1), cidx(cap + 1);
  std::vector<UnionFind> uf;
  for (int n = 0; n <= cap; ++n) {
    btot[n] = B.total(n);
    ctot[n] = C.total(n);
    for (size_t i = 0; i < btot[n].size(); ++i) bidx[n][btot[n][i]] = static_cast<int>(i);
    for (size_t i = 0; i < ctot[n].size(); ++i) cidx[n][ctot[n][i]] = static_cast<int>(i);
    uf.emplace_back(static_cast<int>(btot[n].size() + ctot[n].size()));
    for (const EZ& a : A.total(n))
      uf[n].unite(bidx[n].at(f.apply(a)), static_cast<int>(btot[n].size()) + cidx[n].at(g.apply(a)));
  }

  auto id_of = [&](int n, bool in_c, const EZ& x) {
    return in_c ? static_cast<int>(btot[n].size()) + cidx[n].at(x) : bidx[n].at(x);
  };
  auto decode = [&](int n, int id) -> std::pair<bool, EZ> {
    int nb = static_cast<int>(btot[n].size());
    if (id < nb) return {false, btot[n][id]};
    return {true, ctot[n][id - nb]};
  };
  auto cls_face = [&](int n, int id, int i) {
    auto [in_c, x] = decode(n, id);
    EZ y = in_c ? C.face(x, i) : B.face(x, i);
    return uf[n - 1].find(id_of(n - 1, in_c, y));
  };
  auto cls_degen = [&](int n, int id, int i) {
    auto [in_c, x] = decode(n, id);
    EZ y = in_c ? C.degeneracy(x, i) : B.degeneracy(x, i);
    return uf[n + 1].find(id_of(n + 1, in_c, y));
  };

  // well-definedness of the induced operators over each class
  for (int n = 1; n <= cap; ++n) {
    std::map<int, std::vector<int>> classes;
    int tot = static_cast<int>(btot[n].size() + ctot[n].size());
    for (int id = 0; id < tot; ++id) classes[uf[n].find(id)].push_back(id);
    for (auto& [root, members] : classes)
      for (int i = 0; i <= n; ++i)
        for (int m : members)
          if (cls_face(n, m, i) != cls_face(n, root, i))
            throw InvalidArgument("pushout operators are not well-defined");
  }

  // degenerate classes
  std::vector<std::set<int>> degen(cap + 1);
  for (int n = 1; n <= cap; ++n) {
    int totp = static_cast<int>(btot[n - 1].size() + ctot[n - 1].size());
    for (int id = 0; id < totp; ++id)
      if (uf[n - 1].find(id) == id)
        for (int i = 0; i <= n - 1; ++i) degen[n].insert(cls_degen(n - 1, id, i));
  }

  auto object = std::make_shared<SimplicialSet>(cap);
  std::vector<std::map<int, int>> newidx(cap + 1);  // class root -> nondeg index
  std::vector<std::map<int, EZ>> norm(cap + 1);     // class root -> EZ in new sset

  for (int n = 0; n <= cap; ++n) {
    int tot = static_cast<int>(btot[n].size() + ctot[n].size());
    for (int id = 0; id < tot; ++id) {
      if (uf[n].find(id) != id) continue;
      if (degen[n].count(id)) continue;
      std::vector<EZ> faces;
      if (n > 0)
        for (int i = 0; i <= n; ++i) {
          int froot = cls_face(n, id, i);
          faces.push_back(norm[n - 1].at(froot));
        }
      auto [in_c, x] = decode(n, id);
      Token t = (in_c ? "c:" : "b:") + (in_c ? C.token(x) : B.token(x));
      int idx = object->add_simplex(n, t, std::move(faces));
      newidx[n][id] = idx;
      norm[n][id] = EZ{n, idx, {}};
    }
    // normalize degenerate classes: strip the smallest degeneracy
    bool progress = true;
    while (progress) {
      progress = false;
      for (int id = 0; id < tot; ++id) {
        if (uf[n].find(id) != id || norm[n].count(id)) continue;
        if (n == 0) throw InvalidArgument("degenerate class in degree 0");
        for (int i = 0; i < n; ++i) {
          int y = cls_face(n, id, i);
          if (cls_degen(n - 1, y, i) == id && norm[n - 1].count(y)) {
            const EZ& base = norm[n - 1].at(y);
            norm[n][id] = EZ{base.base_dim, base.base_idx, insert_degeneracy(base.word, i)};
            progress = true;
            break;
          }
        }
      }
      bool all = true;
      for (int id = 0; id < tot; ++id)
        if (uf[n].find(id) == id && !norm[n].count(id)) all = false;
      if (all) break;
      if (!progress) throw InvalidArgument("pushout: failed to normalize a degenerate class");
    }
  }

  auto coproj = [&](const SimplicialSet& src, bool in_c) {
    std::vector<std::vector<EZ>> a(src.dim_cap() + 1);
    for (int d = 0; d <= std::min(src.dim_cap(), cap); ++d)
      for (int idx = 0; idx < src.count(d); ++idx)
        a[d].push_back(norm[d].at(uf[d].find(id_of(d, in_c, EZ{d, idx, {}}))));
    return a;
  };

  PushoutSSet out;
  out.object = object;
  out.from_b = SimplicialMap(f.target_ptr(), object, coproj(B, false));
  out.from_c = SimplicialMap(g.target_ptr(), object, coproj(C, true));
  return out;
}

SimplicialMap PushoutSSet::mediate(const SimplicialMap& t_b, const SimplicialMap& t_c) const {
  const SimplicialSet& P = *object;
  std::vector<std::vector<EZ>> a(P.dim_cap() + 1);
  for (int d = 0; d <= P.dim_cap(); ++d)
    for (int idx = 0; idx < P.count(d); ++idx) {
      const Token& t = P.token(d, idx);
      bool in_c = t.rfind("c:", 0) == 0;
      Token orig = t.substr(2);
      const SimplicialMap& leg = in_c ? t_c : t_b;
      const SimplicialSet& src = leg.source();
      // orig may carry a degeneracy suffix; decode through token(EZ) format
      std::string base = orig;
      std::vector<int> word;
      auto bar = orig.rfind("|e");
      if (bar != std::string::npos) {
        base = orig.substr(0, bar);
        std::stringstream ss(orig.substr(bar + 2));
        std::string part;
        while (std::getline(ss, part, '.')) word.push_back(std::stoi(part));
      }
      int bd = -1, bi = -1;
      for (int dd = 0; dd <= src.dim_cap() && bi < 0; ++dd) {
        int j = src.index_of(dd, base);
        if (j >= 0) { bd = dd; bi = j; }
      }
      if (bi < 0) throw InvalidArgument("mediate: cannot decode representative " + t);
      a[d].push_back(leg.apply(EZ{bd, bi, word}));
    }
  return SimplicialMap(object, t_b.target_ptr(), std::move(a));
}

// ---------------------------------------------------------------------------
// isomorphism search

namespace {

// Joint color refinement over the face DAGs of both complexes.
struct ColorTables {
  std::vector<std::vector<long long>> k, l;  // [dim][idx]
};

ColorTables refine_colors(const SimplicialSet& K, const SimplicialSet& L) {
  int cap = std::max(K.dim_cap(), L.dim_cap());
  ColorTables ct;
  ct.k.resize(cap + 1);
  ct.l.resize(cap + 1);
  for (int d = 0; d <= cap; ++d) {
    ct.k[d].assign(K.count(d), d);
    ct.l[d].assign(L.count(d), d);
  }
  for (int round = 0; round < 6; ++round) {
    std::map<std::string, long long> palette;
    auto signature = [&](const SimplicialSet& S, const std::vector<std::vector<long long>>& col,
                         int d, int idx) {
      std::ostringstream os;
      os << d << ";";
      if (d > 0)
        for (int i = 0; i <= d; ++i) {
          const EZ& f = S.stored_face(d, idx, i);
          os << col[f.base_dim][f.base_idx] << ",";
          for (int w : f.word) os << w << ".";
          os << ";";
        }
      return os.str();
    };
    auto cofaces = [&](const SimplicialSet& S, const std::vector<std::vector<long long>>& col,
                       std::vector<std::vector<std::vector<long long>>>& out) {
      out.assign(S.dim_cap() + 1, {});
      for (int d = 0; d <= S.dim_cap(); ++d) out[d].assign(S.count(d), {});
      for (int d = 1; d <= S.dim_cap(); ++d)
        for (int idx = 0; idx < S.count(d); ++idx)
          for (int i = 0; i <= d; ++i) {
            const EZ& f = S.stored_face(d, idx, i);
            out[f.base_dim][f.base_idx].push_back(col[d][idx] * 131 + i);
          }
      for (auto& per_dim : out)
        for (auto& v : per_dim) std::sort(v.begin(), v.end());
    };
    std::vector<std::vector<std::vector<long long>>> cofk, cofl;
    cofaces(K, ct.k, cofk);
    cofaces(L, ct.l, cofl);
    auto recolor = [&](const SimplicialSet& S, std::vector<std::vector<long long>>& col,
                       std::vector<std::vector<std::vector<long long>>>& cof) {
      std::vector<std::vector<long long>> next(col.size());
      for (int d = 0; d <= S.dim_cap(); ++d) {
        next[d].assign(S.count(d), 0);
        for (int idx = 0; idx < S.count(d); ++idx) {
          std::ostringstream os;
          os << col[d][idx] << "#" << signature(S, col, d, idx) << "#";
          for (long long c : cof[d][idx]) os << c << ",";
          auto [it, fresh] = palette.emplace(os.str(), static_cast<long long>(palette.size()));
          next[d][idx] = it->second;
        }
      }
      col = next;
    };
    recolor(K, ct.k, cofk);
    recolor(L, ct.l, cofl);
  }
  return ct;
}

}  // namespace

namespace {

// Iso search specialized to ordered complexes: simplices are determined by
// their vertex sets, so it suffices to search a vertex bijection compatible
// with the pairwise co-occurrence profiles, then rebuild and validate.
struct ComplexData {
  std::vector<std::vector<std::vector<int>>> overts;  // [dim][idx] ordered vertices
  std::map<std::vector<int>, std::pair<int, int>> by_verts;
  int nv = 0;
};

std::optional<ComplexData> complex_data(const SimplicialSet& K) {
  ComplexData out;
  out.nv = K.count(0);
  out.overts.resize(K.dim_cap() + 1);
  for (int d = 0; d <= K.dim_cap(); ++d) {
    out.overts[d].resize(K.count(d));
    for (int idx = 0; idx < K.count(d); ++idx) {
      if (d == 0) {
        out.overts[d][idx] = {idx};
        continue;
      }
      const EZ& f0 = K.stored_face(d, idx, 0);
      const EZ& fd = K.stored_face(d, idx, d);
      if (f0.degenerate() || fd.degenerate()) return std::nullopt;
      // first vertex = the one deleted by the 0th face; recover via d-th face
      const std::vector<int>& tail = out.overts[d - 1][f0.base_idx];
      const std::vector<int>& init = out.overts[d - 1][fd.base_idx];
      out.overts[d][idx].push_back(init[0]);
      out.overts[d][idx].insert(out.overts[d][idx].end(), tail.begin(), tail.end());
      std::set<int> distinct(out.overts[d][idx].begin(), out.overts[d][idx].end());
      if (static_cast<int>(distinct.size()) != d + 1) return std::nullopt;
    }
  }
  for (int d = 0; d <= K.dim_cap(); ++d)
    for (int idx = 0; idx < K.count(d); ++idx) {
      std::vector<int> key = out.overts[d][idx];
      std::sort(key.begin(), key.end());
      if (!out.by_verts.emplace(key, std::make_pair(d, idx)).second) return std::nullopt;
    }
  return out;
}

std::optional<SimplicialMap> iso_complexes(std::shared_ptr<const SimplicialSet> k,
                                           std::shared_ptr<const SimplicialSet> l,
                                           const ComplexData& ck, const ComplexData& cl) {
  const SimplicialSet& K = *k;
  const SimplicialSet& L = *l;
  int nv = ck.nv;

  // pairwise profiles: multiset of (dim, pos_a, pos_b) over shared simplices
  using Profile = std::vector<std::array<int, 3>>;
  auto profiles = [&](const SimplicialSet& S, const ComplexData& cd) {
    std::vector<std::vector<Profile>> pr(cd.nv, std::vector<Profile>(cd.nv));
    for (int d = 1; d <= S.dim_cap(); ++d)
      for (int idx = 0; idx < S.count(d); ++idx) {
        const std::vector<int>& ov = cd.overts[d][idx];
        for (int a = 0; a < static_cast<int>(ov.size()); ++a)
          for (int b = 0; b < static_cast<int>(ov.size()); ++b)
            if (a != b) pr[ov[a]][ov[b]].push_back({d, a, b});
      }
    for (auto& row : pr)
      for (auto& p : row) std::sort(p.begin(), p.end());
    return pr;
  };
  auto prk = profiles(K, ck);
  auto prl = profiles(L, cl);

  // vertex colors: refine by own-profile shape plus neighbour colors
  std::vector<long long> colk(nv, 0), coll(nv, 0);
  for (int round = 0; round < 4; ++round) {
    std::map<std::string, long long> palette;
    auto recolor = [&](const std::vector<std::vector<Profile>>& pr, std::vector<long long>& col) {
      std::vector<long long> next(col.size());
      for (size_t v = 0; v < col.size(); ++v) {
        std::ostringstream os;
        os << col[v] << "#";
        std::vector<std::string> entries;
        for (size_t u = 0; u < col.size(); ++u) {
          if (pr[v][u].empty()) continue;
          std::ostringstream e;
          e << col[u] << ":";
          for (auto& t : pr[v][u]) e << t[0] << "." << t[1] << "." << t[2] << ",";
          entries.push_back(e.str());
        }
        std::sort(entries.begin(), entries.end());
        for (auto& e : entries) os << e << "|";
        auto [it, fresh] = palette.emplace(os.str(), static_cast<long long>(palette.size()));
        next[v] = it->second;
      }
      col = next;
    };
    recolor(prk, colk);
    recolor(prl, coll);
  }
  {
    std::map<long long, int> fk, fl;
    for (long long c : colk) ++fk[c];
    for (long long c : coll) ++fl[c];
    if (fk != fl) return std::nullopt;
  }

  // order: most-constrained vertices first (rarest color, then adjacency)
  std::vector<int> order;
  {
    std::map<long long, int> freq;
    for (long long c : colk) ++freq[c];
    std::vector<bool> placed(nv, false);
    for (int step = 0; step < nv; ++step) {
      int best = -1;
      long long best_key = 0;
      for (int v = 0; v < nv; ++v) {
        if (placed[v]) continue;
        int adj = 0;
        for (int u : order)
          if (!prk[v][u].empty()) ++adj;
        long long key = -(static_cast<long long>(adj) << 20) + freq[colk[v]];
        if (best < 0 || key < best_key) {
          best = v;
          best_key = key;
        }
      }
      placed[best] = true;
      order.push_back(best);
    }
  }

  std::vector<int> phi(nv, -1);
  std::vector<bool> used(nv, false);
  std::optional<SimplicialMap> found;

  auto finish = [&]() -> bool {
    std::vector<std::vector<EZ>> assignment(K.dim_cap() + 1);
    for (int d = 0; d <= K.dim_cap(); ++d)
      for (int idx = 0; idx < K.count(d); ++idx) {
        std::vector<int> key;
        for (int v : ck.overts[d][idx]) key.push_back(phi[v]);
        std::sort(key.begin(), key.end());
        auto it = cl.by_verts.find(key);
        if (it == cl.by_verts.end() || it->second.first != d) return false;
        assignment[d].push_back(EZ{d, it->second.second, {}});
      }
    SimplicialMap m(k, l, std::move(assignment));
    if (!m.validate().ok()) return false;
    // per-dim injectivity on non-degenerate simplices suffices for bijectivity
    for (int d = 0; d <= K.dim_cap(); ++d) {
      std::set<int> img;
      for (int idx = 0; idx < K.count(d); ++idx) img.insert(m.on_nondeg(d, idx).base_idx);
      if (static_cast<int>(img.size()) != L.count(d)) return false;
    }
    found = m;
    return true;
  };

  auto rec = [&](auto&& self, size_t step) -> bool {
    if (step == order.size()) return finish();
    int x = order[step];
    for (int c = 0; c < nv; ++c) {
      if (used[c] || coll[c] != colk[x]) continue;
      bool ok = true;
      for (size_t s = 0; s < step && ok; ++s) {
        int u = order[s];
        if (prk[x][u] != prl[c][phi[u]]) ok = false;
      }
      if (!ok) continue;
      phi[x] = c;
      used[c] = true;
      if (self(self, step + 1)) return true;
      phi[x] = -1;
      used[c] = false;
    }
    return false;
  };
  if (nv == 0) return finish() ? found : std::nullopt;
  if (!rec(rec, 0)) return std::nullopt;
  return found;
}

}  // namespace

std::optional<SimplicialMap> iso_check(std::shared_ptr<const SimplicialSet> k,
                                       std::shared_ptr<const SimplicialSet> l) {
  const SimplicialSet& K = *k;
  const SimplicialSet& L = *l;
  int cap = std::max(K.dim_cap(), L.dim_cap());
  for (int d = 0; d <= cap; ++d)
    if (K.count(d) != L.count(d)) return std::nullopt;

  // fast path: ordered complexes reduce to a vertex-map search
  {
    auto ck = complex_data(K);
    auto cl = complex_data(L);
    if (ck && cl) return iso_complexes(k, l, *ck, *cl);
    if (ck.has_value() != cl.has_value()) return std::nullopt;
  }

  ColorTables ct = refine_colors(K, L);
  // color class sizes must agree
  for (int d = 0; d <= K.dim_cap(); ++d) {
    std::map<long long, int> ck, cl;
    for (int idx = 0; idx < K.count(d); ++idx) ++ck[ct.k[d][idx]];
    for (int idx = 0; idx < L.count(d); ++idx) ++cl[ct.l[d][idx]];
    if (ck != cl) return std::nullopt;
  }

  // order: dims ascending, rarest colors first
  std::vector<DimIdx> order;
  for (int d = 0; d <= K.dim_cap(); ++d) {
    std::map<long long, int> freq;
    for (int idx = 0; idx < K.count(d); ++idx) ++freq[ct.k[d][idx]];
    std::vector<int> idxs(K.count(d));
    std::iota(idxs.begin(), idxs.end(), 0);
    std::sort(idxs.begin(), idxs.end(), [&](int a, int b) {
      int fa = freq[ct.k[d][a]], fb = freq[ct.k[d][b]];
      if (fa != fb) return fa < fb;
      return a < b;
    });
    for (int idx : idxs) order.push_back({d, idx});
  }

  std::vector<std::vector<int>> phi(K.dim_cap() + 1);
  std::vector<std::vector<bool>> used(L.dim_cap() + 1);
  for (int d = 0; d <= K.dim_cap(); ++d) {
    phi[d].assign(K.count(d), -1);
    used[d].assign(L.count(d), false);
  }

  auto rec = [&](auto&& self, size_t step) -> bool {
    if (step == order.size()) return true;
    auto [d, idx] = order[step];
    for (int cand = 0; cand < L.count(d); ++cand) {
      if (used[d][cand] || ct.l[d][cand] != ct.k[d][idx]) continue;
      bool ok = true;
      if (d > 0)
        for (int i = 0; i <= d && ok; ++i) {
          const EZ& fx = K.stored_face(d, idx, i);
          const EZ& fy = L.stored_face(d, cand, i);
          if (fx.word != fy.word || fx.base_dim != fy.base_dim) { ok = false; break; }
          int mapped = phi[fx.base_dim][fx.base_idx];
          if (mapped >= 0 && mapped != fy.base_idx) ok = false;
          if (mapped < 0) ok = false;  // faces are always assigned before (dims ascending)
        }
      if (!ok) continue;
      phi[d][idx] = cand;
      used[d][cand] = true;
      if (self(self, step + 1)) return true;
      phi[d][idx] = -1;
      used[d][cand] = false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;

  std::vector<std::vector<EZ>> assignment(K.dim_cap() + 1);
  for (int d = 0; d <= K.dim_cap(); ++d)
    for (int idx = 0; idx < K.count(d); ++idx)
      assignment[d].push_back(EZ{d, phi[d][idx], {}});
  SimplicialMap iso(k, l, std::move(assignment));
  if (!iso.validate().ok()) return std::nullopt;
  return iso;
}

// ---------------------------------------------------------------------------
// products

namespace {

// d_i applied to an EZ whose word contains the letter i: cancels inside the
// word without touching the base.
EZ strip_letter(const EZ& z, int i) {
  std::vector<int> out;
  int carry = i;
  for (size_t pos = 0; pos < z.word.size(); ++pos) {
    int j = z.word[pos];
    if (carry < j) {
      out.push_back(j - 1);
    } else if (carry == j || carry == j + 1) {
      for (size_t q = pos + 1; q < z.word.size(); ++q) out.push_back(z.word[q]);
      return EZ{z.base_dim, z.base_idx, out};
    } else {
      out.push_back(j);
      --carry;
    }
  }
  throw InvalidArgument("degeneracy letter not present");
}

}  // namespace

EZ ProductSSet::pair(const EZ& x, const EZ& y) const {
  if (x.total_dim() != y.total_dim()) throw InvalidArgument("product pair dimension mismatch");
  // peel joint degeneracies: a simplex lies in the image of e_i exactly when
  // i is a letter of its normal word
  EZ a = x, b = y;
  std::vector<int> word;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int i : a.word) {
      if (std::find(b.word.begin(), b.word.end(), i) != b.word.end()) {
        word.push_back(i);
        a = strip_letter(a, i);
        b = strip_letter(b, i);
        stripped = true;
        break;
      }
    }
  }
  int d = a.total_dim();
  for (size_t idx = 0; idx < components[d].size(); ++idx)
    if (components[d][idx].first == a && components[d][idx].second == b) {
      EZ out{d, static_cast<int>(idx), {}};
      for (size_t q = word.size(); q-- > 0;) out = object->degeneracy(out, word[q]);
      return out;
    }
  throw InvalidArgument("product pair not found");
}

std::pair<EZ, EZ> ProductSSet::project(const EZ& xy) const {
  auto [a, b] = components[xy.base_dim][xy.base_idx];
  EZ pa = a, pb = b;
  for (size_t q = xy.word.size(); q-- > 0;) {
    pa = EZ{pa.base_dim, pa.base_idx, insert_degeneracy(pa.word, xy.word[q])};
    pb = EZ{pb.base_dim, pb.base_idx, insert_degeneracy(pb.word, xy.word[q])};
  }
  return {pa, pb};
}

ProductSSet product_sset(std::shared_ptr<const SimplicialSet> k,
                         std::shared_ptr<const SimplicialSet> l, int dim_cap) {
  const SimplicialSet& K = *k;
  const SimplicialSet& L = *l;
  int cap = std::min({dim_cap, K.dim_cap(), L.dim_cap()});
  ProductSSet out;
  out.object = std::make_shared<SimplicialSet>(cap);
  out.components.resize(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    for (const EZ& x : K.total(n))
      for (const EZ& y : L.total(n)) {
        bool joint = false;
        for (int i : x.word)
          if (std::find(y.word.begin(), y.word.end(), i) != y.word.end()) joint = true;
        if (joint) continue;
        std::vector<EZ> faces;
        if (n > 0)
          for (int i = 0; i <= n; ++i) faces.push_back(out.pair(K.face(x, i), L.face(y, i)));
        Token t = "<" + K.token(x) + "," + L.token(y) + ">";
        out.object->add_simplex(n, t, std::move(faces));
        out.components[n].push_back({x, y});
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// homotopies

SimplicialHomotopy::SimplicialHomotopy(SimplicialMap f, SimplicialMap g,
                                       std::vector<std::vector<std::vector<EZ>>> family)
    : f_(std::move(f)), g_(std::move(g)), family_(std::move(family)) {}

EZ SimplicialHomotopy::eval(int n, int i, const EZ& x) const {
  if (x.word.empty()) return family_[n][x.base_idx][i];
  int j = x.word.front();
  EZ y{x.base_dim, x.base_idx, std::vector<int>(x.word.begin() + 1, x.word.end())};
  const SimplicialSet& L = f_.target();
  if (j < i) return L.degeneracy(eval(n - 1, i - 1, y), j);
  return L.degeneracy(eval(n - 1, i, y), j + 1);
}

EZ SimplicialHomotopy::product_value(const EZ& x, const std::vector<int>& tuple) const {
  int n = x.total_dim();
  if (static_cast<int>(tuple.size()) != n + 1)
    throw InvalidArgument("product_value tuple length mismatch");
  int j = -1;
  for (int p = 0; p <= n; ++p)
    if (tuple[p] == 0) j = p;
  if (j == n) return f_.apply(x);
  if (j == -1) return g_.apply(x);
  return f_.target().face(eval(n, j, x), j + 1);
}

SimplicialHomotopy SimplicialHomotopy::from_product_map(const SimplicialMap& p,
                                                        const ProductSSet& prod,
                                                        const SimplicialSet& delta1,
                                                        SimplicialMap f, SimplicialMap g) {
  const SimplicialSet& k = f.source();
  int levels = std::min(k.dim_cap(), p.source().dim_cap() - 1) + 1;
  std::vector<std::vector<std::vector<EZ>>> fam(levels);
  for (int n = 0; n < levels; ++n) {
    fam[n].resize(k.count(n));
    for (int idx = 0; idx < k.count(n); ++idx) {
      fam[n][idx].resize(n + 1);
      for (int i = 0; i <= n; ++i) {
        EZ ex = k.degeneracy(EZ{n, idx, {}}, i);
        // tau_i at degree n+1: value 0 up to position i, then 1
        std::vector<int> tuple(n + 2, 1);
        for (int q = 0; q <= i; ++q) tuple[q] = 0;
        EZ t = nerve_simplex(delta1, Poset::ordinal(1), tuple);
        fam[n][idx][i] = p.apply(prod.pair(ex, t));
      }
    }
  }
  return SimplicialHomotopy(std::move(f), std::move(g), std::move(fam));
}

SimplicialHomotopy constant_homotopy(const SimplicialMap& f) {
  const SimplicialSet& K = f.source();
  const SimplicialSet& L = f.target();
  int levels = std::min(K.dim_cap(), L.dim_cap() - 1) + 1;
  std::vector<std::vector<std::vector<EZ>>> fam(levels);
  for (int n = 0; n < levels; ++n) {
    fam[n].resize(K.count(n));
    for (int idx = 0; idx < K.count(n); ++idx) {
      fam[n][idx].resize(n + 1);
      for (int i = 0; i <= n; ++i) fam[n][idx][i] = L.degeneracy(f.apply(EZ{n, idx, {}}), i);
    }
  }
  return SimplicialHomotopy(f, f, std::move(fam));
}

Report homotopy_check(const SimplicialHomotopy& h) {
  Report rep;
  rep.lemma = "simplicial-homotopy";
  const SimplicialMap& f = h.f();
  const SimplicialMap& g = h.g();
  const SimplicialSet& K = f.source();
  const SimplicialSet& L = f.target();
  int levels = h.levels();
  int fails = 0;
  auto record = [&](const std::string& name, int n, int j, const Token& tok) {
    ++fails;
    if (fails <= 16) rep.fail(name, "identity fails", {{"degree", n}, {"index", j}, {"simplex", tok}});
  };
  for (int n = 0; n < levels; ++n) {
    for (const EZ& x : K.total(n)) {
      Token tok = K.token(x);
      // endpoints
      if (!(L.face(h.eval(n, n, x), n + 1) == f.apply(x))) record("endpoint-f", n, n, tok);
      if (!(L.face(h.eval(n, 0, x), 0) == g.apply(x))) record("endpoint-g", n, 0, tok);
      for (int j = 0; j <= n; ++j) {
        EZ hx = h.eval(n, j, x);
        // face identities
        for (int i = 0; i <= n + 1; ++i) {
          if (i < j) {
            if (!(L.face(hx, i) == h.eval(n - 1, j - 1, K.face(x, i)))) record("face-below", n, j, tok);
          } else if (i > j + 1) {
            if (!(L.face(hx, i) == h.eval(n - 1, j, K.face(x, i - 1)))) record("face-above", n, j, tok);
          }
        }
        if (j + 1 <= n) {
          if (!(L.face(h.eval(n, j + 1, x), j + 1) == L.face(hx, j + 1)))
            record("face-middle", n, j, tok);
        }
        // degeneracy identities (stay within stored levels)
        if (n + 1 < levels) {
          for (int i = 0; i <= n; ++i) {
            if (i <= j) {
              if (!(L.degeneracy(hx, i) == h.eval(n + 1, j + 1, K.degeneracy(x, i))))
                record("degeneracy-below", n, j, tok);
            } else {
              if (!(L.degeneracy(hx, i) == h.eval(n + 1, j, K.degeneracy(x, i - 1))))
                record("degeneracy-above", n, j, tok);
            }
          }
        }
      }
    }
  }
  if (fails == 0) rep.pass("homotopy-identities", "all identities hold up to the computed levels");
  return rep;
}

}  // namespace thoma2
