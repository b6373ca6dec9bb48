#include "thoma2/poset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace thoma2 {

Poset::Poset(std::vector<Token> elements, const std::vector<std::pair<Token, Token>>& pairs)
    : tokens_(std::move(elements)) {
  std::set<Token> seen;
  for (const auto& t : tokens_)
    if (!seen.insert(t).second) throw InvalidArgument("duplicate poset element token: " + t);
  int n = size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq_[i][i] = true;
  for (const auto& [a, b] : pairs) leq_[require(a)][require(b)] = true;
  close_and_check();
}

void Poset::close_and_check() {
  int n = size();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq_[i][k])
        for (int j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq_[i][j] && leq_[j][i])
        throw InvalidArgument("antisymmetry violated between " + tokens_[i] + " and " + tokens_[j]);
}

Poset Poset::ordinal(int n) {
  if (n < 0) throw InvalidArgument("ordinal degree must be >= 0");
  std::vector<Token> toks;
  std::vector<std::pair<Token, Token>> pairs;
  for (int i = 0; i <= n; ++i) toks.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) pairs.emplace_back(std::to_string(i), std::to_string(i + 1));
  return Poset(std::move(toks), pairs);
}

Poset Poset::discrete(const std::vector<Token>& elements) {
  return Poset(elements, {});
}

int Poset::index_of(const Token& t) const {
  for (int i = 0; i < size(); ++i)
    if (tokens_[i] == t) return i;
  return -1;
}

int Poset::require(const Token& t) const {
  int i = index_of(t);
  if (i < 0) throw InvalidArgument("unknown poset element: " + t);
  return i;
}

std::vector<int> Poset::up_set(int a) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (leq_[a][i]) out.push_back(i);
  return out;
}

std::vector<int> Poset::down_set(int a) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (leq_[i][a]) out.push_back(i);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool maximal = true;
    for (int j = 0; j < size(); ++j)
      if (j != i && leq_[i][j]) { maximal = false; break; }
    if (maximal) out.push_back(i);
  }
  return out;
}

std::optional<int> Poset::greatest() const {
  for (int i = 0; i < size(); ++i) {
    bool top = true;
    for (int j = 0; j < size(); ++j)
      if (!leq_[j][i]) { top = false; break; }
    if (top) return i;
  }
  return std::nullopt;
}

bool Poset::connected() const {
  if (size() == 0) return false;
  std::vector<bool> vis(size(), false);
  std::vector<int> stack = {0};
  vis[0] = true;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < size(); ++b)
      if (!vis[b] && (leq_[a][b] || leq_[b][a])) { vis[b] = true; stack.push_back(b); }
  }
  return std::all_of(vis.begin(), vis.end(), [](bool v) { return v; });
}

Poset Poset::restrict(std::vector<int> keep) const {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  Poset out;
  for (int i : keep) out.tokens_.push_back(tokens_[i]);
  int m = static_cast<int>(keep.size());
  out.leq_.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.leq_[i][j] = leq_[keep[i]][keep[j]];
  return out;
}

nlohmann::json Poset::to_json() const {
  nlohmann::json j;
  j["elements"] = tokens_;
  nlohmann::json rel = nlohmann::json::array();
  for (int i = 0; i < size(); ++i)
    for (int k = 0; k < size(); ++k)
      if (i != k && leq_[i][k]) rel.push_back({tokens_[i], tokens_[k]});
  j["leq"] = rel;
  return j;
}

Poset Poset::from_json(const nlohmann::json& j) {
  std::vector<Token> toks = j.at("elements").get<std::vector<Token>>();
  std::vector<std::pair<Token, Token>> pairs;
  if (j.contains("leq"))
    for (const auto& e : j.at("leq")) pairs.emplace_back(e.at(0).get<Token>(), e.at(1).get<Token>());
  return Poset(std::move(toks), pairs);
}

bool Poset::same_elements_and_order(const Poset& other) const {
  return tokens_ == other.tokens_ && leq_ == other.leq_;
}

bool Chain::subset_of(const Chain& o) const {
  for (int m : members)
    if (std::find(o.members.begin(), o.members.end(), m) == o.members.end()) return false;
  return true;
}

Chain make_chain(const Poset& p, std::vector<int> members) {
  if (members.empty()) throw InvalidArgument("chain must be non-empty");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      if (!p.comparable(members[i], members[j]))
        throw InvalidArgument("chain members are not totally ordered");
  std::sort(members.begin(), members.end(), [&](int a, int b) { return p.lt(a, b); });
  return Chain{std::move(members)};
}

Token chain_token(const Poset& p, const Chain& c) {
  std::vector<std::string> parts;
  for (int m : c.members) parts.push_back(p.token(m));
  return "(" + join(parts, ".") + ")";
}

PosetMap::PosetMap(std::shared_ptr<const Poset> source, std::shared_ptr<const Poset> target,
                   std::vector<int> assignment)
    : src_(std::move(source)), tgt_(std::move(target)), assignment_(std::move(assignment)) {
  if (static_cast<int>(assignment_.size()) != src_->size())
    throw InvalidArgument("poset map must be total on its source");
  for (int a = 0; a < src_->size(); ++a)
    for (int b = 0; b < src_->size(); ++b)
      if (src_->leq(a, b) && !tgt_->leq(assignment_[a], assignment_[b]))
        throw InvalidArgument("poset map is not monotone at " + src_->token(a) + " <= " + src_->token(b));
}

PosetMap PosetMap::identity(std::shared_ptr<const Poset> p) {
  std::vector<int> a(p->size());
  for (int i = 0; i < p->size(); ++i) a[i] = i;
  auto q = p;
  return PosetMap(std::move(p), std::move(q), std::move(a));
}

PosetMap PosetMap::compose_after(const PosetMap& first) const {
  if (!first.tgt_->same_elements_and_order(*src_))
    throw InvalidArgument("poset maps not composable");
  std::vector<int> a(first.src_->size());
  for (int i = 0; i < first.src_->size(); ++i) a[i] = assignment_[first.assignment_[i]];
  return PosetMap(first.src_, tgt_, std::move(a));
}

std::vector<Chain> all_chains(const Poset& p) {
  // Enumerate non-empty totally ordered subsets; members are collected in
  // index order and make_chain sorts them by the poset order. The final sort
  // makes chain_poset tokens reproducible.
  std::vector<Chain> out;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int start) -> void {
    for (int v = start; v < p.size(); ++v) {
      bool ok = true;
      for (int m : cur)
        if (!p.comparable(m, v)) { ok = false; break; }
      if (!ok) continue;
      cur.push_back(v);
      out.push_back(make_chain(p, cur));
      self(self, v + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Chain> chains_between(const Poset& p, int from, int to) {
  std::vector<Chain> out;
  if (!p.leq(from, to)) return out;
  if (from == to) {
    out.push_back(Chain{{from}});
    return out;
  }
  std::vector<int> middle;
  for (int v = 0; v < p.size(); ++v)
    if (p.lt(from, v) && p.lt(v, to)) middle.push_back(v);
  // subsets of pairwise-comparable middle elements
  std::vector<int> cur;
  auto dfs = [&](auto&& self, size_t start) -> void {
    std::vector<int> members = {from};
    members.insert(members.end(), cur.begin(), cur.end());
    members.push_back(to);
    out.push_back(make_chain(p, members));
    for (size_t i = start; i < middle.size(); ++i) {
      int v = middle[i];
      bool ok = true;
      for (int m : cur)
        if (!p.comparable(m, v)) { ok = false; break; }
      if (!ok) continue;
      cur.push_back(v);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(),
            [](const Chain& a, const Chain& b) { return a.members < b.members; });
  return out;
}

Poset chain_poset(const Poset& p) {
  std::vector<Chain> chains = all_chains(p);
  std::vector<Token> toks;
  toks.reserve(chains.size());
  for (const Chain& c : chains) toks.push_back(chain_token(p, c));
  std::vector<std::pair<Token, Token>> pairs;
  for (size_t i = 0; i < chains.size(); ++i)
    for (size_t j = 0; j < chains.size(); ++j)
      if (i != j && chains[i].subset_of(chains[j])) pairs.emplace_back(toks[i], toks[j]);
  return Poset(std::move(toks), pairs);
}

Poset horn_poset(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw InvalidArgument("horn index out of range");
  auto base = Poset::ordinal(n);
  Poset fp = chain_poset(base);
  std::vector<int> all_members, missing_k;
  for (int i = 0; i <= n; ++i) {
    all_members.push_back(i);
    if (i != k) missing_k.push_back(i);
  }
  Token top = chain_token(base, Chain{all_members});
  Token codim = chain_token(base, Chain{missing_k});
  std::vector<int> keep;
  for (int i = 0; i < fp.size(); ++i)
    if (fp.token(i) != top && fp.token(i) != codim) keep.push_back(i);
  return fp.restrict(keep);
}

PosetMap chain_poset_map(const PosetMap& f) {
  auto src = std::make_shared<Poset>(chain_poset(f.source()));
  auto tgt = std::make_shared<Poset>(chain_poset(f.target()));
  std::vector<Chain> chains = all_chains(f.source());
  std::vector<int> assignment(chains.size());
  for (size_t i = 0; i < chains.size(); ++i) {
    std::vector<int> image;
    for (int m : chains[i].members) image.push_back(f(m));
    Chain c = make_chain(f.target(), image);
    assignment[i] = tgt->require(chain_token(f.target(), c));
    if (src->token(static_cast<int>(i)) != chain_token(f.source(), chains[i]))
      throw InvalidArgument("chain enumeration order mismatch");
  }
  return PosetMap(std::move(src), std::move(tgt), std::move(assignment));
}

std::vector<int> closure(const Poset& p, const std::vector<int>& seed, ClosureSide side) {
  std::vector<bool> in(p.size(), false);
  for (int s : seed) in[s] = true;
  for (int a = 0; a < p.size(); ++a)
    for (int s : seed) {
      if (side == ClosureSide::Up && p.leq(s, a)) in[a] = true;
      if (side == ClosureSide::Down && p.leq(a, s)) in[a] = true;
    }
  std::vector<int> out;
  for (int a = 0; a < p.size(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

namespace {

struct CollarTokens {
  Token top, k, k_top;
  std::vector<int> removed;  // P indices {k, top}
};

CollarTokens collar_setup(const Poset& p, const Token& top_tok, const Token& k_tok) {
  int top = p.require(top_tok);
  int k = p.require(k_tok);
  auto g = p.greatest();
  if (!g || *g != top) throw InvalidArgument(top_tok + " is not the greatest element");
  if (!p.connected()) throw InvalidArgument("poset must be connected");
  // k must be maximal in P minus top
  if (k == top) throw InvalidArgument("k must differ from the top element");
  for (int j = 0; j < p.size(); ++j)
    if (j != top && j != k && p.lt(k, j))
      throw InvalidArgument(k_tok + " is not maximal below the top");
  CollarTokens out;
  out.top = chain_token(p, Chain{{top}});
  out.k = chain_token(p, Chain{{k}});
  out.k_top = chain_token(p, Chain{{k, top}});
  out.removed = {k, top};
  return out;
}

}  // namespace

CollarData collar(const Poset& p, const Token& top_tok, const Token& k_tok) {
  CollarTokens ct = collar_setup(p, top_tok, k_tok);
  auto fp = std::make_shared<Poset>(chain_poset(p));

  std::vector<int> keep_base;
  for (int i = 0; i < p.size(); ++i)
    if (i != ct.removed[0] && i != ct.removed[1]) keep_base.push_back(i);
  if (keep_base.empty())
    throw InvalidArgument("collar horn would be empty: P has no elements besides k and top");

  CollarData out;
  out.fP = fp;
  // H = f(P \ {k, top}): the fP elements all of whose members avoid k and top.
  std::vector<Chain> chains = all_chains(p);
  for (size_t i = 0; i < chains.size(); ++i) {
    bool in_horn = true;
    for (int m : chains[i].members)
      if (m == ct.removed[0] || m == ct.removed[1]) { in_horn = false; break; }
    if (in_horn) out.horn.push_back(static_cast<int>(i));
  }
  for (int i = 0; i < fp->size(); ++i) {
    const Token& t = fp->token(i);
    if (t != ct.top && t != ct.k && t != ct.k_top) out.collar.push_back(i);
  }
  out.horn_poset = fp->restrict(out.horn);
  out.collar_poset = fp->restrict(out.collar);
  return out;
}

PosetMap collar_retraction(const Poset& p, const Token& top_tok, const Token& k_tok) {
  CollarData cd = collar(p, top_tok, k_tok);
  const Poset& fp = *cd.fP;
  std::vector<bool> in_horn(fp.size(), false);
  for (int h : cd.horn) in_horn[h] = true;

  auto horn_ptr = std::make_shared<Poset>(cd.horn_poset);
  auto collar_ptr = std::make_shared<Poset>(cd.collar_poset);
  std::vector<int> assignment(cd.collar.size(), -1);

  for (size_t ci = 0; ci < cd.collar.size(); ++ci) {
    int x = cd.collar[ci];
    // (down x) ∩ H inside fP
    std::vector<int> meet;
    for (int h : cd.horn)
      if (fp.leq(h, x)) meet.push_back(h);
    if (meet.empty())
      throw GreatestElementMissing("(down " + fp.token(x) + ") ∩ H is empty");
    int best = -1;
    for (int m : meet) {
      bool greatest = true;
      for (int m2 : meet)
        if (!fp.leq(m2, m)) { greatest = false; break; }
      if (greatest) { best = m; break; }
    }
    if (best < 0)
      throw GreatestElementMissing("(down " + fp.token(x) + ") ∩ H has no greatest element");
    assignment[ci] = horn_ptr->require(fp.token(best));
  }
  return PosetMap(collar_ptr, horn_ptr, std::move(assignment));
}

}  // namespace thoma2
