#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "thoma2/common.hpp"

namespace thoma2 {

// Finite poset. Elements are identified by index; tokens are kept for I/O and
// for building derived tokens (chains of chains). The relation is stored as a
// dense boolean matrix after reflexive-transitive closure.
class Poset {
 public:
  Poset() = default;
  // `pairs` lists (a, b) meaning a <= b; reflexive pairs may be omitted and
  // the transitive closure is applied. Throws on antisymmetry violations.
  Poset(std::vector<Token> elements, const std::vector<std::pair<Token, Token>>& pairs);

  static Poset ordinal(int n);                  // {0 < 1 < ... < n}
  static Poset discrete(const std::vector<Token>& elements);

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::vector<Token>& elements() const { return tokens_; }
  const Token& token(int i) const { return tokens_[i]; }
  int index_of(const Token& t) const;           // -1 if absent
  int require(const Token& t) const;            // throws if absent

  bool leq(int a, int b) const { return leq_[a][b]; }
  bool lt(int a, int b) const { return a != b && leq_[a][b]; }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  std::vector<int> up_set(int a) const;
  std::vector<int> down_set(int a) const;
  std::vector<int> maximal_elements() const;
  std::optional<int> greatest() const;
  bool connected() const;

  // Induced subposet on `keep` (tokens preserved, order of `keep` kept after
  // sorting by original index).
  Poset restrict(std::vector<int> keep) const;

  nlohmann::json to_json() const;
  static Poset from_json(const nlohmann::json& j);

  bool same_elements_and_order(const Poset& other) const;

 private:
  std::vector<Token> tokens_;
  std::vector<std::vector<bool>> leq_;
  void close_and_check();
};

// A chain of P: strictly increasing list of element indices. The members are
// required to be pairwise comparable and sorted ascending in P's order.
struct Chain {
  std::vector<int> members;

  bool operator==(const Chain& o) const { return members == o.members; }
  bool operator<(const Chain& o) const { return members < o.members; }
  bool subset_of(const Chain& o) const;
  int front() const { return members.front(); }
  int back() const { return members.back(); }
};

Chain make_chain(const Poset& p, std::vector<int> members);  // validates
Token chain_token(const Poset& p, const Chain& c);

// Monotone map of posets.
class PosetMap {
 public:
  PosetMap() = default;
  PosetMap(std::shared_ptr<const Poset> source, std::shared_ptr<const Poset> target,
           std::vector<int> assignment);

  const Poset& source() const { return *src_; }
  const Poset& target() const { return *tgt_; }
  const std::shared_ptr<const Poset>& source_ptr() const { return src_; }
  const std::shared_ptr<const Poset>& target_ptr() const { return tgt_; }
  int operator()(int a) const { return assignment_[a]; }
  const std::vector<int>& assignment() const { return assignment_; }

  static PosetMap identity(std::shared_ptr<const Poset> p);
  PosetMap compose_after(const PosetMap& first) const;  // this ∘ first

 private:
  std::shared_ptr<const Poset> src_, tgt_;
  std::vector<int> assignment_;
};

// All non-empty chains of P, ordered by inclusion of member sets. Tokens of the
// result are parenthesised dot-joined member tokens, so iterating f is stable.
Poset chain_poset(const Poset& p);

// Enumerates the chains in the same order as chain_poset lists its elements.
std::vector<Chain> all_chains(const Poset& p);
std::vector<Chain> chains_between(const Poset& p, int from, int to);

// The horn poset H_{k,n}: f([n]) minus the top chain (0..n) and the chain
// missing k.
Poset horn_poset(int n, int k);

// f applied to a monotone map: direct image of chains (deduplicated).
PosetMap chain_poset_map(const PosetMap& f);

enum class ClosureSide { Up, Down };
std::vector<int> closure(const Poset& p, const std::vector<int>& seed, ClosureSide side);

// Collar data for a poset P with greatest element `top` and a maximal
// k below it. All index sets refer to fP = chain_poset(P).
struct CollarData {
  std::shared_ptr<const Poset> fP;
  std::vector<int> horn;    // elements of H_{P,k} = f(P \ {k, top}), as fP indices
  std::vector<int> collar;  // elements of C_{P,k} = f(P) minus three chains
  Poset horn_poset;         // induced subposets of fP
  Poset collar_poset;
};

CollarData collar(const Poset& p, const Token& top_tok, const Token& k_tok);

// The retraction r : C -> H, r(x) = greatest element of (down x) ∩ H. Verifies
// the unique-greatest-element hypothesis and r(x) ⊆ x; throws
// GreatestElementMissing if the hypothesis fails.
struct GreatestElementMissing : std::runtime_error {
  explicit GreatestElementMissing(const std::string& what) : std::runtime_error(what) {}
};

PosetMap collar_retraction(const Poset& p, const Token& top_tok, const Token& k_tok);

}  // namespace thoma2
