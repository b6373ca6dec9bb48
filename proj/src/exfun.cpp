#include "thoma2/exfun.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace thoma2 {

namespace {

// Nerve functoriality: the simplicial map induced by a monotone map.
SimplicialMap nerve_map(const PosetMap& f, std::shared_ptr<const SimplicialSet> src,
                        std::shared_ptr<const SimplicialSet> tgt) {
  const Poset& p = f.source();
  const Poset& q = f.target();
  std::vector<std::vector<EZ>> assignment(src->dim_cap() + 1);
  std::vector<Chain> chains = all_chains(p);
  for (int d = 0; d <= src->dim_cap(); ++d)
    for (int idx = 0; idx < src->count(d); ++idx) {
      // recover the chain by token position: nerve() adds chains of size d+1
      // in all_chains order
      int seen = -1;
      const Chain* found = nullptr;
      for (const Chain& c : chains) {
        if (static_cast<int>(c.members.size()) != d + 1) continue;
        ++seen;
        if (seen == idx) {
          found = &c;
          break;
        }
      }
      if (!found) throw InvalidArgument("nerve_map: chain decode failed");
      // image tuple, weakly increasing; duplicates handled by nerve_simplex
      std::vector<int> weak;
      for (int m : found->members) weak.push_back(f(m));
      std::sort(weak.begin(), weak.end(), [&](int a, int b) { return q.lt(a, b); });
      assignment[d].push_back(nerve_simplex(*tgt, q, weak));
    }
  return SimplicialMap(src, tgt, std::move(assignment));
}

struct ExLevels {
  std::vector<std::shared_ptr<const SimplicialSet>> sd_delta;  // Sd(Delta[n])
  std::vector<std::vector<SimplicialMap>> sd_face;   // Sd(delta^i_n): SdD[n-1] -> SdD[n]
  std::vector<std::vector<SimplicialMap>> sd_degen;  // Sd(sigma^i_n): SdD[n+1] -> SdD[n]
};

ExLevels build_ex_levels(int cap) {
  ExLevels out;
  std::vector<std::shared_ptr<const SimplicialSet>> deltas;
  for (int n = 0; n <= cap + 1; ++n) {
    deltas.push_back(std::make_shared<SimplicialSet>(basic_complex(ComplexKind::Standard, n)));
    out.sd_delta.push_back(std::make_shared<SimplicialSet>(sd(*deltas[n])));
  }
  out.sd_face.resize(cap + 2);
  out.sd_degen.resize(cap + 2);
  for (int n = 1; n <= cap + 1; ++n)
    for (int i = 0; i <= n; ++i) {
      // delta^i : [n-1] -> [n]
      auto pn1 = std::make_shared<Poset>(Poset::ordinal(n - 1));
      auto pn = std::make_shared<Poset>(Poset::ordinal(n));
      std::vector<int> a;
      for (int v = 0; v < n; ++v) a.push_back(v < i ? v : v + 1);
      PosetMap dmap(pn1, pn, a);
      SimplicialMap nmap = nerve_map(dmap, deltas[n - 1], deltas[n]);
      out.sd_face[n].push_back(sd_map(nmap, out.sd_delta[n - 1], out.sd_delta[n]));
    }
  for (int n = 0; n <= cap; ++n)
    for (int i = 0; i <= n; ++i) {
      // sigma^i : [n+1] -> [n]
      auto pn1 = std::make_shared<Poset>(Poset::ordinal(n + 1));
      auto pn = std::make_shared<Poset>(Poset::ordinal(n));
      std::vector<int> a;
      for (int v = 0; v <= n + 1; ++v) a.push_back(v <= i ? std::min(v, i) : v - 1);
      PosetMap smap(pn1, pn, a);
      SimplicialMap nmap = nerve_map(smap, deltas[n + 1], deltas[n]);
      out.sd_degen[n].push_back(sd_map(nmap, out.sd_delta[n + 1], out.sd_delta[n]));
    }
  return out;
}

Token map_token(const SimplicialMap& m) {
  std::string t = "m";
  const SimplicialSet& src = m.source();
  for (int d = 0; d <= src.dim_cap(); ++d)
    for (int idx = 0; idx < src.count(d); ++idx) t += "|" + m.target().token(m.on_nondeg(d, idx));
  return t;
}

}  // namespace

ExResult ex_full(std::shared_ptr<const SimplicialSet> k, int cap, Budget* budget) {
  cap = std::min(cap, k->dim_cap());
  ExLevels lv = build_ex_levels(cap);

  ExResult out;
  out.levels.resize(cap + 1);
  std::vector<std::map<Token, int>> index(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    out.levels[n] = hom_enumerate(lv.sd_delta[n], k, n, budget);
    for (size_t i = 0; i < out.levels[n].size(); ++i)
      index[n][map_token(out.levels[n][i])] = static_cast<int>(i);
    if (budget) budget->charge(static_cast<std::int64_t>(out.levels[n].size()), "ex");
  }

  auto face_of = [&](int n, int idx, int i) {
    SimplicialMap composed = out.levels[n][idx].compose_after(lv.sd_face[n][i]);
    return index[n - 1].at(map_token(composed));
  };
  auto degen_of = [&](int n, int idx, int i) {
    SimplicialMap composed = out.levels[n][idx].compose_after(lv.sd_degen[n][i]);
    return index[n + 1].at(map_token(composed));
  };

  // extract the EZ presentation
  out.object = std::make_shared<SimplicialSet>(cap);
  out.level_ez.resize(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    out.level_ez[n].resize(out.levels[n].size());
    for (size_t idx = 0; idx < out.levels[n].size(); ++idx) {
      // degenerate iff it factors through some Sd(sigma^i)
      int strip = -1;
      for (int i = 0; i < n && strip < 0; ++i) {
        int down = face_of(n, static_cast<int>(idx), i);
        if (degen_of(n - 1, down, i) == static_cast<int>(idx)) strip = i;
      }
      if (strip >= 0) {
        int down = face_of(n, static_cast<int>(idx), strip);
        const EZ& base = out.level_ez[n - 1][down];
        out.level_ez[n][idx] =
            EZ{base.base_dim, base.base_idx, insert_degeneracy(base.word, strip)};
        continue;
      }
      std::vector<EZ> faces;
      if (n > 0)
        for (int i = 0; i <= n; ++i)
          faces.push_back(out.level_ez[n - 1][face_of(n, static_cast<int>(idx), i)]);
      int ni = out.object->add_simplex(n, "x" + std::to_string(n) + "." + std::to_string(idx),
                                       std::move(faces));
      out.level_ez[n][idx] = EZ{n, ni, {}};
    }
  }
  return out;
}

SimplicialSet ex(std::shared_ptr<const SimplicialSet> k, int cap, Budget* budget) {
  return *ex_full(std::move(k), cap, budget).object;
}

SimplicialMap ex_map(const SimplicialMap& f, const ExResult& src, const ExResult& tgt) {
  const SimplicialSet& S = *src.object;
  std::vector<std::map<Token, int>> tgt_index(tgt.levels.size());
  for (size_t n = 0; n < tgt.levels.size(); ++n)
    for (size_t i = 0; i < tgt.levels[n].size(); ++i)
      tgt_index[n][map_token(tgt.levels[n][i])] = static_cast<int>(i);

  std::vector<std::vector<EZ>> assignment(S.dim_cap() + 1);
  for (int d = 0; d <= S.dim_cap(); ++d)
    for (int idx = 0; idx < S.count(d); ++idx) {
      // locate the level element realizing this non-degenerate simplex
      int li = -1;
      for (size_t i = 0; i < src.level_ez[d].size(); ++i)
        if (src.level_ez[d][i] == EZ{d, idx, {}}) li = static_cast<int>(i);
      if (li < 0) throw InvalidArgument("ex_map: level element not found");
      SimplicialMap composed = f.compose_after(src.levels[d][li]);
      assignment[d].push_back(tgt.level_ez[d][tgt_index[d].at(map_token(composed))]);
    }
  return SimplicialMap(src.object, tgt.object, std::move(assignment));
}

SimplicialSet ex2_n2(std::shared_ptr<const TwoCat> a, int cap, Budget* budget) {
  N2Result n = n2(a, cap, budget);
  auto once = std::make_shared<SimplicialSet>(ex(n.sset, cap, budget));
  return ex(once, cap, budget);
}

nlohmann::json GeneratingSet::to_json() const {
  nlohmann::json j;
  j["kind"] = kind == GeneratingKind::Boundary ? "boundary" : "horn";
  j["n"] = n;
  if (kind == GeneratingKind::Horn) j["k"] = k;
  j["sub"] = sub.to_json();
  j["ambient"] = ambient.to_json();
  nlohmann::json inc = nlohmann::json::array();
  for (const Token& t : sub.elements()) inc.push_back(t);
  j["inclusion"] = inc;
  return j;
}

GeneratingSet generating_sets(GeneratingKind kind, int n, int k) {
  if (n < 0) throw InvalidArgument("degree must be >= 0");
  GeneratingSet out;
  out.kind = kind;
  out.n = n;
  out.k = k;
  Poset base = Poset::ordinal(n);
  Poset fp = chain_poset(base);
  out.ambient = chain_poset(fp);
  if (kind == GeneratingKind::Boundary) {
    // Sd^2 of the boundary: chains of f([n]) avoiding the top chain
    std::vector<int> full;
    for (int i = 0; i <= n; ++i) full.push_back(i);
    Token top = chain_token(base, Chain{full});
    std::vector<int> keep;
    for (int i = 0; i < fp.size(); ++i)
      if (fp.token(i) != top) keep.push_back(i);
    out.sub = chain_poset(fp.restrict(keep));
  } else {
    if (n < 1 || k < 0 || k > n) throw InvalidArgument("horn index out of range");
    out.sub = chain_poset(horn_poset(n, k));
  }
  // the sub-poset's elements must appear verbatim in the ambient poset
  for (const Token& t : out.sub.elements())
    if (out.ambient.index_of(t) < 0)
      throw InvalidArgument("generating set inclusion broke: " + t);
  return out;
}

Report sdr_witness_check(const SkewImmersionCertificate& cert, int cap, Budget* budget) {
  Report rep;
  rep.lemma = "sdr";
  rep.params = cert.meta;
  rep.params["cap"] = cap;

  auto wsub = cert.w_sub;
  auto prod = std::make_shared<IntervalProduct>(wsub);
  NormalLaxFunctor enc = distortion_to_nlax(cert.eps, prod);

  N2Result n_w = n2(wsub, cap, budget);
  auto d1 = std::make_shared<SimplicialSet>(basic_complex(ComplexKind::Standard, 1, -1, cap));
  ProductSSet pk = product_sset(n_w.sset, d1, cap);
  Poset ord1 = Poset::ordinal(1);

  // H : N2(W) x Delta[1] -> N2(W), (S, t) -> enc ∘ (S x t)
  auto apply_h = [&](const EZ& xy) {
    auto [sx, ty] = pk.project(xy);
    NerveSimplex s = n_w.of_ez(sx);
    // decode the Delta[1] tuple
    std::vector<int> tuple;
    {
      // vertex indices of nerve(ordinal(1)) are the elements themselves
      std::vector<int> base_members;
      std::set<int> vs;
      std::vector<EZ> stack = {EZ{ty.base_dim, ty.base_idx, {}}};
      while (!stack.empty()) {
        EZ cur = stack.back();
        stack.pop_back();
        if (cur.base_dim == 0) {
          vs.insert(cur.base_idx);
          continue;
        }
        for (int i = 0; i <= cur.base_dim; ++i)
          stack.push_back(d1->stored_face(cur.base_dim, cur.base_idx, i));
      }
      base_members.assign(vs.begin(), vs.end());
      std::sort(base_members.begin(), base_members.end());
      tuple = base_members;
      for (size_t q = ty.word.size(); q-- > 0;) {
        int i = ty.word[q];
        tuple.insert(tuple.begin() + i, tuple[i]);
      }
    }
    // the product nerve simplex over W x I
    NerveSimplex sp;
    sp.degree = s.degree;
    for (int p = 0; p <= s.degree; ++p)
      sp.obj.push_back(prod->object_of(s.obj[p], tuple[p] ? IntervalProduct::R
                                                          : IntervalProduct::L));
    for (int p = 0; p <= s.degree; ++p)
      for (int q = p + 1; q <= s.degree; ++q) {
        IntervalProduct::Layer nu =
            tuple[p] == tuple[q]
                ? (tuple[p] ? IntervalProduct::R : IntervalProduct::L)
                : IntervalProduct::T;
        sp.arr.push_back(prod->intern1(s.arrow(*wsub, p, q), nu));
      }
    for (int p = 0; p <= s.degree; ++p)
      for (int q = p + 1; q <= s.degree; ++q)
        for (int r = q + 1; r <= s.degree; ++r) {
          IntervalProduct::Layer nu =
              tuple[p] == tuple[r]
                  ? (tuple[p] ? IntervalProduct::R : IntervalProduct::L)
                  : IntervalProduct::T;
          sp.gam.push_back(prod->intern2(s.gamma(*wsub, p, q, r), nu));
        }
    NerveSimplex image = enc.apply(*prod, sp);
    return n_w.ez_of(image);
  };

  std::vector<std::vector<EZ>> assignment(pk.object->dim_cap() + 1);
  for (int d = 0; d <= pk.object->dim_cap(); ++d)
    for (int idx = 0; idx < pk.object->count(d); ++idx)
      assignment[d].push_back(apply_h(EZ{d, idx, {}}));
  SimplicialMap h(pk.object, n_w.sset, std::move(assignment));
  Report hv = h.validate();
  rep.merge(hv, "map.");

  // endpoints: at vertex 0 the map is N2(J∘R); at vertex 1 the identity
  SimplicialMap n2_jr = n2_tilde(strict_nlax(cert.eps.f()), n_w, n_w);
  bool end0 = true, end1 = true, constant = true;
  for (int d = 0; d <= pk.object->dim_cap(); ++d)
    for (int idx = 0; idx < n_w.sset->count(d); ++idx) {
      if (d > pk.object->dim_cap()) continue;
      EZ sx{d, idx, {}};
      std::vector<int> zeros(d + 1, 0), ones_t(d + 1, 1);
      EZ t0 = nerve_simplex(*d1, ord1, zeros);
      EZ t1 = nerve_simplex(*d1, ord1, ones_t);
      if (!(h.apply(pk.pair(sx, t0)) == n2_jr.apply(sx))) end0 = false;
      if (!(h.apply(pk.pair(sx, t1)) == sx)) end1 = false;
      // constancy on N2(A): simplices supported in A are fixed at every time
      const NerveSimplex& s = n_w.of_nondeg(d, idx);
      bool in_a = true;
      std::vector<int> asorted = cert.a_objects;
      std::sort(asorted.begin(), asorted.end());
      for (int x : s.obj)
        if (!std::binary_search(asorted.begin(), asorted.end(), wsub->object_set()[x]))
          in_a = false;
      if (in_a) {
        for (int j = 0; j <= d; ++j) {
          std::vector<int> tuple(d + 1, 1);
          for (int q2 = 0; q2 <= j; ++q2) tuple[q2] = 0;
          EZ tj = nerve_simplex(*d1, ord1, tuple);
          if (!(h.apply(pk.pair(sx, tj)) == sx)) constant = false;
        }
      }
    }
  if (end0) rep.pass("endpoint-JR", "restriction at 0 is N2(J∘R)");
  else rep.fail("endpoint-JR", "restriction at 0 differs from N2(J∘R)");
  if (end1) rep.pass("endpoint-id", "restriction at 1 is the identity");
  else rep.fail("endpoint-id", "restriction at 1 is not the identity");
  if (constant) rep.pass("constant-on-A", "homotopy fixes N2(A) pointwise");
  else rep.fail("constant-on-A", "homotopy moves a simplex of N2(A)");

  // family form and the full identity suite
  SimplicialMap idm = SimplicialMap::identity(n_w.sset);
  SimplicialHomotopy fam = SimplicialHomotopy::from_product_map(h, pk, *d1, n2_jr, idm);
  Report hr = homotopy_check(fam);
  rep.merge(hr, "H.");
  return rep;
}

}  // namespace thoma2
