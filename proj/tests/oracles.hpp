#pragma once

// Brute-force oracles kept independent of the library implementations they
// check: subset enumeration for chain counts, direct assignment enumeration
// for monotone maps, degree-wise set pushouts. Test-only code.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "thoma2/poset.hpp"

namespace oracle {

// Count of non-empty totally ordered subsets, by bitmask enumeration.
inline long long chain_count(const thoma2::Poset& p) {
  int n = p.size();
  if (n > 20) throw std::runtime_error("oracle too large");
  long long count = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool chain = true;
    for (int a = 0; a < n && chain; ++a)
      if (mask & (1u << a))
        for (int b = a + 1; b < n && chain; ++b)
          if (mask & (1u << b))
            if (!p.leq(a, b) && !p.leq(b, a)) chain = false;
    if (chain) ++count;
  }
  return count;
}

// Number of chains with exactly k members.
inline long long chain_count_of_size(const thoma2::Poset& p, int k) {
  int n = p.size();
  if (n > 20) throw std::runtime_error("oracle too large");
  long long count = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    bool chain = true;
    for (int a = 0; a < n && chain; ++a)
      if (mask & (1u << a))
        for (int b = a + 1; b < n && chain; ++b)
          if (mask & (1u << b))
            if (!p.leq(a, b) && !p.leq(b, a)) chain = false;
    if (chain) ++count;
  }
  return count;
}

// Monotone maps P -> Q by direct assignment enumeration.
inline long long monotone_map_count(const thoma2::Poset& p, const thoma2::Poset& q) {
  long long count = 0;
  std::vector<int> assign(p.size(), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == p.size()) {
      ++count;
      return;
    }
    for (int v = 0; v < q.size(); ++v) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (p.leq(j, i) && !q.leq(assign[j], v)) ok = false;
        if (p.leq(i, j) && !q.leq(v, assign[j])) ok = false;
      }
      if (ok) {
        assign[i] = v;
        self(self, i + 1);
      }
    }
  };
  rec(rec, 0);
  return count;
}

// Weakly increasing (m+1)-tuples in P: total m-simplices of the nerve.
inline long long weak_tuple_count(const thoma2::Poset& p, int m) {
  long long count = 0;
  std::vector<int> t(m + 1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m + 1) {
      ++count;
      return;
    }
    for (int v = 0; v < p.size(); ++v) {
      if (i > 0 && !p.leq(t[i - 1], v)) continue;
      t[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return count;
}

// Seeded random poset on n elements: random DAG edges, transitively closed.
inline thoma2::Poset random_poset(thoma2::Rng& rng, int n, double edge_prob = 0.4) {
  std::vector<thoma2::Token> toks;
  for (int i = 0; i < n; ++i) toks.push_back("v" + std::to_string(i));
  std::vector<std::pair<thoma2::Token, thoma2::Token>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if ((rng() % 1000) < edge_prob * 1000) pairs.emplace_back(toks[a], toks[b]);
  return thoma2::Poset(toks, pairs);
}

// A random monotone map out of p into q, built seed-forward (may fail for a
// while; retries internally).
inline std::vector<int> random_monotone(thoma2::Rng& rng, const thoma2::Poset& p,
                                        const thoma2::Poset& q) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> assign(p.size(), -1);
    bool ok = true;
    for (int i = 0; i < p.size() && ok; ++i) {
      std::vector<int> cands;
      for (int v = 0; v < q.size(); ++v) {
        bool fits = true;
        for (int j = 0; j < i && fits; ++j) {
          if (assign[j] < 0) continue;
          if (p.leq(j, i) && !q.leq(assign[j], v)) fits = false;
          if (p.leq(i, j) && !q.leq(v, assign[j])) fits = false;
        }
        if (fits) cands.push_back(v);
      }
      if (cands.empty()) ok = false;
      else assign[i] = cands[rng() % cands.size()];
    }
    if (ok) return assign;
  }
  throw std::runtime_error("no monotone map found");
}

}  // namespace oracle
