#include "thoma2/sset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace thoma2 {

std::string ez_debug(const EZ& x) {
  std::ostringstream os;
  os << "(" << x.base_dim << "," << x.base_idx << ")";
  if (!x.word.empty()) {
    os << "|e";
    for (size_t i = 0; i < x.word.size(); ++i) os << (i ? "." : "") << x.word[i];
  }
  return os.str();
}

std::vector<int> insert_degeneracy(const std::vector<int>& word, int i) {
  // Normal form of e_i composed outside e_{word}: uses e_i e_j = e_{j+1} e_i
  // for i <= j.
  std::vector<int> out;
  size_t pos = 0;
  int carry = i;
  for (; pos < word.size(); ++pos) {
    if (carry > word[pos]) break;
    out.push_back(word[pos] + 1);
  }
  out.push_back(carry);
  for (; pos < word.size(); ++pos) out.push_back(word[pos]);
  return out;
}

std::vector<int> compose_degeneracy_words(const std::vector<int>& outer,
                                          const std::vector<int>& inner) {
  std::vector<int> out = inner;
  for (size_t i = outer.size(); i-- > 0;) out = insert_degeneracy(out, outer[i]);
  return out;
}

bool valid_degeneracy_word(const std::vector<int>& word, int base_dim) {
  int len = static_cast<int>(word.size());
  for (int m = 0; m < len; ++m) {
    if (word[m] < 0 || word[m] > base_dim + (len - 1 - m)) return false;
    if (m + 1 < len && word[m] <= word[m + 1]) return false;
  }
  return true;
}

Token SimplicialSet::token(const EZ& x) const {
  Token t = tokens_[x.base_dim][x.base_idx];
  if (!x.word.empty()) {
    t += "|e";
    for (size_t i = 0; i < x.word.size(); ++i) t += (i ? "." : "") + std::to_string(x.word[i]);
  }
  return t;
}

int SimplicialSet::index_of(int dim, const Token& t) const {
  if (dim < 0 || dim > dim_cap_) return -1;
  auto it = index_[dim].find(t);
  return it == index_[dim].end() ? -1 : it->second;
}

int SimplicialSet::add_simplex(int dim, const Token& token, std::vector<EZ> faces) {
  if (dim < 0 || dim > dim_cap_) throw InvalidArgument("simplex dimension out of cap");
  if (index_.size() != tokens_.size()) index_.resize(tokens_.size());
  if (index_[dim].count(token)) throw InvalidArgument("duplicate simplex token " + token);
  if (dim > 0 && static_cast<int>(faces.size()) != dim + 1)
    throw InvalidArgument("simplex of dimension " + std::to_string(dim) + " needs " +
                          std::to_string(dim + 1) + " faces");
  for (const EZ& f : faces) {
    if (f.total_dim() != dim - 1) throw InvalidArgument("face has wrong dimension");
    if (f.base_dim < 0 || f.base_dim > dim_cap_ ||
        f.base_idx >= static_cast<int>(tokens_[f.base_dim].size()))
      throw InvalidArgument("face refers to unknown simplex");
    if (!valid_degeneracy_word(f.word, f.base_dim))
      throw InvalidArgument("face has invalid degeneracy word");
  }
  tokens_[dim].push_back(token);
  if (dim > 0) faces_[dim].push_back(std::move(faces));
  else faces_[dim].emplace_back();
  index_[dim][token] = static_cast<int>(tokens_[dim].size()) - 1;
  return static_cast<int>(tokens_[dim].size()) - 1;
}

EZ SimplicialSet::face(const EZ& x, int i) const {
  int n = x.total_dim();
  if (n < 1 || i < 0 || i > n) throw InvalidArgument("face index out of range");
  std::vector<int> out;
  int carry = i;
  for (size_t pos = 0; pos < x.word.size(); ++pos) {
    int j = x.word[pos];
    if (carry < j) {
      out.push_back(j - 1);
    } else if (carry == j || carry == j + 1) {
      std::vector<int> rest(x.word.begin() + pos + 1, x.word.end());
      return EZ{x.base_dim, x.base_idx, compose_degeneracy_words(out, rest)};
    } else {
      out.push_back(j);
      --carry;
    }
  }
  const EZ& v = faces_[x.base_dim][x.base_idx][carry];
  return EZ{v.base_dim, v.base_idx, compose_degeneracy_words(out, v.word)};
}

EZ SimplicialSet::degeneracy(const EZ& x, int i) const {
  int n = x.total_dim();
  if (i < 0 || i > n) throw InvalidArgument("degeneracy index out of range");
  return EZ{x.base_dim, x.base_idx, insert_degeneracy(x.word, i)};
}

std::vector<EZ> SimplicialSet::total(int n) const {
  std::vector<EZ> out;
  for (int e = std::min(n, dim_cap_); e >= 0; --e) {
    int len = n - e;
    for (int idx = 0; idx < count(e); ++idx) {
      // enumerate strictly decreasing valid words of length len over base dim e
      std::vector<int> word(len);
      auto dfs = [&](auto&& self, int pos) -> void {
        if (pos == len) {
          out.push_back(EZ{e, idx, word});
          return;
        }
        int hi = e + (len - 1 - pos);
        int lo = (pos + 1 < len) ? (len - 1 - pos) : 0;  // must fit remaining decreasing tail
        for (int v = hi; v >= lo; --v) {
          if (pos > 0 && v >= word[pos - 1]) continue;
          word[pos] = v;
          self(self, pos + 1);
        }
      };
      dfs(dfs, 0);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long SimplicialSet::total_count(int n) const {
  // number of monotone surjections [n] ->> [e] is C(n, e)
  auto binom = [](int a, int b) {
    long long r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  long long sum = 0;
  for (int e = 0; e <= std::min(n, dim_cap_); ++e) sum += binom(n, e) * count(e);
  return sum;
}

Report SimplicialSet::validate() const {
  Report rep;
  rep.lemma = "simplicial-identities";
  bool ok = true;
  for (int d = 2; d <= dim_cap_; ++d) {
    for (int idx = 0; idx < count(d); ++idx) {
      EZ x{d, idx, {}};
      for (int j = 1; j <= d && ok; ++j)
        for (int i = 0; i < j && ok; ++i) {
          EZ lhs = face(face(x, j), i);
          EZ rhs = face(face(x, i), j - 1);
          if (!(lhs == rhs)) {
            ok = false;
            rep.fail("face-face", "d_i d_j != d_(j-1) d_i", {{"simplex", token(d, idx)},
                                                             {"i", i},
                                                             {"j", j}});
          }
        }
    }
  }
  if (ok) rep.pass("face-face", "all stored simplices satisfy the face identities");
  return rep;
}

nlohmann::json SimplicialSet::to_json() const {
  nlohmann::json j;
  j["dimCap"] = dim_cap_;
  nlohmann::json dims = nlohmann::json::array();
  for (int d = 0; d <= dim_cap_; ++d) dims.push_back(tokens_[d]);
  j["simplices"] = dims;
  nlohmann::json faces = nlohmann::json::object();
  for (int d = 1; d <= dim_cap_; ++d)
    for (int idx = 0; idx < count(d); ++idx) {
      nlohmann::json fl = nlohmann::json::array();
      for (int i = 0; i <= d; ++i) {
        const EZ& f = faces_[d][idx][i];
        fl.push_back({{"base", tokens_[f.base_dim][f.base_idx]},
                      {"dim", f.base_dim},
                      {"word", f.word}});
      }
      faces[tokens_[d][idx]] = fl;
    }
  j["faces"] = faces;
  return j;
}

SimplicialSet SimplicialSet::from_json(const nlohmann::json& j) {
  int cap = j.at("dimCap").get<int>();
  SimplicialSet k(cap);
  const auto& dims = j.at("simplices");
  for (int d = 0; d < static_cast<int>(dims.size()) && d <= cap; ++d) {
    for (const auto& t : dims[d]) {
      Token tok = t.get<Token>();
      std::vector<EZ> faces;
      if (d > 0) {
        const auto& fl = j.at("faces").at(tok);
        for (const auto& fe : fl) {
          EZ f;
          f.base_dim = fe.at("dim").get<int>();
          f.base_idx = k.index_of(f.base_dim, fe.at("base").get<Token>());
          if (f.base_idx < 0) throw InvalidArgument("face base not yet defined: json order");
          f.word = fe.at("word").get<std::vector<int>>();
          faces.push_back(std::move(f));
        }
      }
      k.add_simplex(d, tok, std::move(faces));
    }
  }
  return k;
}

SimplicialMap::SimplicialMap(std::shared_ptr<const SimplicialSet> source,
                             std::shared_ptr<const SimplicialSet> target,
                             std::vector<std::vector<EZ>> assignment)
    : src_(std::move(source)), tgt_(std::move(target)), assignment_(std::move(assignment)) {
  if (static_cast<int>(assignment_.size()) != src_->dim_cap() + 1)
    throw InvalidArgument("map assignment must cover all dimensions");
  for (int d = 0; d <= src_->dim_cap(); ++d) {
    if (static_cast<int>(assignment_[d].size()) != src_->count(d))
      throw InvalidArgument("map assignment must be total");
    for (const EZ& v : assignment_[d])
      if (v.total_dim() != d) throw InvalidArgument("map must preserve dimension");
  }
}

EZ SimplicialMap::apply(const EZ& x) const {
  EZ v = assignment_[x.base_dim][x.base_idx];
  for (size_t i = x.word.size(); i-- > 0;) v = tgt_->degeneracy(v, x.word[i]);
  return v;
}

SimplicialMap SimplicialMap::identity(std::shared_ptr<const SimplicialSet> k) {
  std::vector<std::vector<EZ>> a(k->dim_cap() + 1);
  for (int d = 0; d <= k->dim_cap(); ++d)
    for (int idx = 0; idx < k->count(d); ++idx) a[d].push_back(EZ{d, idx, {}});
  auto k2 = k;
  return SimplicialMap(std::move(k), std::move(k2), std::move(a));
}

SimplicialMap SimplicialMap::compose_after(const SimplicialMap& first) const {
  std::vector<std::vector<EZ>> a(first.src_->dim_cap() + 1);
  for (int d = 0; d <= first.src_->dim_cap(); ++d)
    for (int idx = 0; idx < first.src_->count(d); ++idx)
      a[d].push_back(apply(first.assignment_[d][idx]));
  return SimplicialMap(first.src_, tgt_, std::move(a));
}

Report SimplicialMap::validate() const {
  Report rep;
  rep.lemma = "simplicial-map";
  bool ok = true;
  for (int d = 1; d <= src_->dim_cap() && ok; ++d)
    for (int idx = 0; idx < src_->count(d) && ok; ++idx)
      for (int i = 0; i <= d; ++i) {
        EZ lhs = tgt_->face(assignment_[d][idx], i);
        EZ rhs = apply(src_->stored_face(d, idx, i));
        if (!(lhs == rhs)) {
          ok = false;
          rep.fail("commutes-with-faces", "map fails to commute with d_" + std::to_string(i),
                   {{"simplex", src_->token(d, idx)}, {"i", i}});
          break;
        }
      }
  if (ok) rep.pass("commutes-with-faces");
  return rep;
}

namespace {

// Keeps only the simplices passing `keep`; the kept set must be face-closed.
SimplicialSet subcomplex(const SimplicialSet& k, int dim_cap,
                         const std::function<bool(int, int)>& keep) {
  SimplicialSet out(dim_cap);
  std::vector<std::vector<int>> remap(k.dim_cap() + 1);
  for (int d = 0; d <= k.dim_cap(); ++d) remap[d].assign(k.count(d), -1);
  for (int d = 0; d <= dim_cap; ++d)
    for (int idx = 0; idx < k.count(d); ++idx) {
      if (!keep(d, idx)) continue;
      std::vector<EZ> faces;
      if (d > 0)
        for (int i = 0; i <= d; ++i) {
          EZ f = k.stored_face(d, idx, i);
          if (remap[f.base_dim][f.base_idx] < 0)
            throw InvalidArgument("subcomplex selection is not face-closed at " + k.token(d, idx));
          faces.push_back(EZ{f.base_dim, remap[f.base_dim][f.base_idx], f.word});
        }
      remap[d][idx] = out.add_simplex(d, k.token(d, idx), std::move(faces));
    }
  return out;
}

}  // namespace

SimplicialSet nerve(const Poset& p, int dim_cap) {
  SimplicialSet out(dim_cap);
  std::vector<Chain> chains = all_chains(p);
  for (int d = 0; d <= dim_cap; ++d) {
    for (const Chain& c : chains) {
      if (static_cast<int>(c.members.size()) != d + 1) continue;
      std::vector<EZ> faces;
      if (d > 0)
        for (int i = 0; i <= d; ++i) {
          std::vector<int> sub = c.members;
          sub.erase(sub.begin() + i);
          Token ft = chain_token(p, Chain{sub});
          int fidx = out.index_of(d - 1, ft);
          if (fidx < 0) throw InvalidArgument("nerve face missing: " + ft);
          faces.push_back(EZ{d - 1, fidx, {}});
        }
      out.add_simplex(d, chain_token(p, c), std::move(faces));
    }
  }
  return out;
}

EZ nerve_simplex(const SimplicialSet& nerve_of_p, const Poset& p, const std::vector<int>& tuple) {
  for (size_t i = 0; i + 1 < tuple.size(); ++i)
    if (!p.leq(tuple[i], tuple[i + 1])) throw InvalidArgument("tuple is not weakly increasing");
  std::vector<int> base;
  std::vector<int> word;
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i + 1 < tuple.size() && tuple[i] == tuple[i + 1])
      word.push_back(static_cast<int>(i));
    if (base.empty() || base.back() != tuple[i]) base.push_back(tuple[i]);
  }
  std::reverse(word.begin(), word.end());
  Token t = chain_token(p, Chain{base});
  int d = static_cast<int>(base.size()) - 1;
  int idx = nerve_of_p.index_of(d, t);
  if (idx < 0) throw InvalidArgument("chain not present in nerve: " + t);
  return EZ{d, idx, word};
}

SimplicialSet basic_complex(ComplexKind kind, int n, int k, int dim_cap) {
  if (n < 0) throw InvalidArgument("degree must be >= 0");
  if (kind == ComplexKind::Horn) {
    if (n < 1 || k < 0 || k > n) throw InvalidArgument("horn index out of range");
  }
  int cap = dim_cap < 0 ? std::max(n, 0) : dim_cap;
  SimplicialSet delta = nerve(Poset::ordinal(n), cap);
  if (kind == ComplexKind::Standard) return delta;

  Poset base = Poset::ordinal(n);
  std::vector<int> full;
  for (int i = 0; i <= n; ++i) full.push_back(i);
  Token top = chain_token(base, Chain{full});
  Token kth;
  if (kind == ComplexKind::Horn) {
    std::vector<int> missing;
    for (int i = 0; i <= n; ++i)
      if (i != k) missing.push_back(i);
    kth = chain_token(base, Chain{missing});
  }
  return subcomplex(delta, cap, [&](int d, int idx) {
    const Token& t = delta.token(d, idx);
    if (t == top) return false;
    if (kind == ComplexKind::Horn && t == kth) return false;
    return true;
  });
}

Poset face_poset(const SimplicialSet& k) {
  // Ordered-complex preconditions: all faces non-degenerate, vertex sets of
  // size d+1, and simplices determined by their vertex sets.
  std::vector<std::vector<std::vector<int>>> verts(k.dim_cap() + 1);
  for (int d = 0; d <= k.dim_cap(); ++d) {
    verts[d].resize(k.count(d));
    for (int idx = 0; idx < k.count(d); ++idx) {
      if (d == 0) {
        verts[d][idx] = {idx};
        continue;
      }
      std::set<int> vs;
      for (int i = 0; i <= d; ++i) {
        EZ f = k.stored_face(d, idx, i);
        if (f.degenerate())
          throw NotAComplex("simplex " + k.token(d, idx) + " has a degenerate face");
        for (int v : verts[d - 1][f.base_idx]) vs.insert(v);
      }
      if (static_cast<int>(vs.size()) != d + 1)
        throw NotAComplex("simplex " + k.token(d, idx) + " has repeated vertices");
      verts[d][idx].assign(vs.begin(), vs.end());
    }
  }
  std::map<std::vector<int>, std::pair<int, int>> by_verts;
  for (int d = 0; d <= k.dim_cap(); ++d)
    for (int idx = 0; idx < k.count(d); ++idx)
      if (!by_verts.emplace(verts[d][idx], std::make_pair(d, idx)).second)
        throw NotAComplex("two simplices share the vertex set of " + k.token(d, idx));

  // Unique element tokens (dimension prefix only on collision).
  std::set<Token> used;
  bool collision = false;
  for (int d = 0; d <= k.dim_cap() && !collision; ++d)
    for (int idx = 0; idx < k.count(d); ++idx)
      if (!used.insert(k.token(d, idx)).second) collision = true;

  std::vector<Token> toks;
  std::vector<std::pair<int, int>> order;  // (dim, idx) per element
  for (int d = 0; d <= k.dim_cap(); ++d)
    for (int idx = 0; idx < k.count(d); ++idx) {
      Token t = k.token(d, idx);
      if (collision) t = "d" + std::to_string(d) + ":" + t;
      toks.push_back(t);
      order.emplace_back(d, idx);
    }
  std::vector<std::pair<Token, Token>> pairs;
  for (size_t a = 0; a < order.size(); ++a)
    for (size_t b = 0; b < order.size(); ++b) {
      if (a == b) continue;
      auto [da, ia] = order[a];
      auto [db, ib] = order[b];
      if (da < db && std::includes(verts[db][ib].begin(), verts[db][ib].end(),
                                   verts[da][ia].begin(), verts[da][ia].end()))
        pairs.emplace_back(toks[a], toks[b]);
    }
  return Poset(std::move(toks), pairs);
}

SimplicialSet sd(const SimplicialSet& k) {
  Poset fp = face_poset(k);
  return nerve(fp, k.dim_cap());
}

SimplicialMap sd_map(const SimplicialMap& f, std::shared_ptr<const SimplicialSet> sd_src,
                     std::shared_ptr<const SimplicialSet> sd_tgt) {
  const SimplicialSet& K = f.source();
  const SimplicialSet& L = f.target();
  Poset fpk = face_poset(K);
  Poset fpl = face_poset(L);
  // fpk elements are ordered (dim, idx) as in face_poset; the induced map
  // sends a non-degenerate simplex to the non-degenerate base of its image.
  std::vector<int> img;  // fpk element -> fpl element
  for (int d = 0; d <= K.dim_cap(); ++d)
    for (int idx = 0; idx < K.count(d); ++idx) {
      EZ v = f.on_nondeg(d, idx);
      Token t = L.token(v.base_dim, v.base_idx);
      int j = fpl.index_of(t);
      if (j < 0) j = fpl.require("d" + std::to_string(v.base_dim) + ":" + t);
      img.push_back(j);
    }
  std::vector<std::vector<EZ>> assignment(sd_src->dim_cap() + 1);
  for (int d = 0; d <= sd_src->dim_cap(); ++d)
    for (int idx = 0; idx < sd_src->count(d); ++idx) {
      // the nondeg simplex is a chain of fpk; recover its members by token
      // lookup through the nerve convention: chains of d+1 members.
      // nerve() stores chain tokens; decode by splitting is fragile, so we
      // instead use vertex structure: iterated 0-faces give the members.
      std::vector<int> members;
      std::set<int> vs;
      std::vector<EZ> stack = {EZ{d, idx, {}}};
      while (!stack.empty()) {
        EZ cur = stack.back();
        stack.pop_back();
        if (cur.base_dim == 0) {
          vs.insert(cur.base_idx);
          continue;
        }
        for (int i = 0; i <= cur.base_dim; ++i) stack.push_back(sd_src->stored_face(cur.base_dim, cur.base_idx, i));
      }
      for (int v : vs) members.push_back(v);
      // members are fpk element indices (vertices of sd(K) are fpk elements,
      // in the same order); map and sort by fpl order
      std::vector<int> tuple;
      for (int m : members) tuple.push_back(img[m]);
      std::sort(tuple.begin(), tuple.end(), [&](int a, int b) { return fpl.lt(a, b); });
      assignment[d].push_back(nerve_simplex(*sd_tgt, fpl, tuple));
    }
  return SimplicialMap(std::move(sd_src), std::move(sd_tgt), std::move(assignment));
}

}  // namespace thoma2
