#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "thoma2/common.hpp"
#include "thoma2/poset.hpp"
#include "thoma2/report.hpp"

namespace thoma2 {

// A (possibly degenerate) simplex in Eilenberg-Zilber normal form: a
// non-degenerate base, addressed as (dim, index), under a strictly decreasing
// word of degeneracy operators. word[0] is the outermost operator.
struct EZ {
  int base_dim = 0;
  int base_idx = 0;
  std::vector<int> word;

  int total_dim() const { return base_dim + static_cast<int>(word.size()); }
  bool degenerate() const { return !word.empty(); }
  bool operator==(const EZ& o) const {
    return base_dim == o.base_dim && base_idx == o.base_idx && word == o.word;
  }
  bool operator!=(const EZ& o) const { return !(*this == o); }
  bool operator<(const EZ& o) const {
    if (base_dim != o.base_dim) return base_dim < o.base_dim;
    if (base_idx != o.base_idx) return base_idx < o.base_idx;
    return word < o.word;
  }
};

std::string ez_debug(const EZ& x);

// Finite simplicial set, dimension-capped. Only non-degenerate simplices are
// stored; the total face/degeneracy action is derived from the face table by
// pushing operators through EZ words with the simplicial identities.
class SimplicialSet {
 public:
  SimplicialSet() = default;
  explicit SimplicialSet(int dim_cap) : dim_cap_(dim_cap), tokens_(dim_cap + 1), faces_(dim_cap + 1) {}

  int dim_cap() const { return dim_cap_; }
  int count(int dim) const {
    return (dim >= 0 && dim <= dim_cap_) ? static_cast<int>(tokens_[dim].size()) : 0;
  }
  const std::vector<Token>& tokens(int dim) const { return tokens_[dim]; }
  const Token& token(int dim, int idx) const { return tokens_[dim][idx]; }
  Token token(const EZ& x) const;  // base token plus the degeneracy word
  int index_of(int dim, const Token& t) const;  // -1 if absent

  // Construction: add a non-degenerate simplex; faces must refer to already
  // present simplices. Returns the new index within its dimension.
  int add_simplex(int dim, const Token& token, std::vector<EZ> faces);

  EZ nondeg(int dim, int idx) const { return EZ{dim, idx, {}}; }
  const EZ& stored_face(int dim, int idx, int i) const { return faces_[dim][idx][i]; }

  // Total simplicial operators (defined up to dim_cap).
  EZ face(const EZ& x, int i) const;
  EZ degeneracy(const EZ& x, int i) const;

  // All simplices of total dimension n (EZ forms over all valid words).
  std::vector<EZ> total(int n) const;
  long long total_count(int n) const;

  // Checks the simplicial identities di dj = d(j-1) di (i<j) on every stored
  // simplex, plus face-table well-formedness.
  Report validate() const;

  nlohmann::json to_json() const;
  static SimplicialSet from_json(const nlohmann::json& j);

 private:
  int dim_cap_ = -1;
  std::vector<std::vector<Token>> tokens_;
  std::vector<std::vector<std::vector<EZ>>> faces_;  // faces_[d][idx][i], d >= 1
  std::vector<std::unordered_map<Token, int>> index_;
};

// Degeneracy-word helpers shared by the total action and by quotient/
// enumeration code that needs to renormalize words.
std::vector<int> compose_degeneracy_words(const std::vector<int>& outer, const std::vector<int>& inner);
std::vector<int> insert_degeneracy(const std::vector<int>& word, int i);
bool valid_degeneracy_word(const std::vector<int>& word, int base_dim);

// Simplicial map: determined by its values on non-degenerate simplices.
class SimplicialMap {
 public:
  SimplicialMap() = default;
  SimplicialMap(std::shared_ptr<const SimplicialSet> source,
                std::shared_ptr<const SimplicialSet> target,
                std::vector<std::vector<EZ>> assignment);

  const SimplicialSet& source() const { return *src_; }
  const SimplicialSet& target() const { return *tgt_; }
  const std::shared_ptr<const SimplicialSet>& source_ptr() const { return src_; }
  const std::shared_ptr<const SimplicialSet>& target_ptr() const { return tgt_; }

  EZ apply(const EZ& x) const;
  const EZ& on_nondeg(int dim, int idx) const { return assignment_[dim][idx]; }

  static SimplicialMap identity(std::shared_ptr<const SimplicialSet> k);
  SimplicialMap compose_after(const SimplicialMap& first) const;  // this ∘ first
  Report validate() const;  // commutation with faces
  bool operator==(const SimplicialMap& o) const { return assignment_ == o.assignment_; }

 private:
  std::shared_ptr<const SimplicialSet> src_, tgt_;
  std::vector<std::vector<EZ>> assignment_;  // [dim][idx]
};

enum class ComplexKind { Standard, Boundary, Horn };

SimplicialSet basic_complex(ComplexKind kind, int n, int k = -1, int dim_cap = -1);

// Nerve of a poset: non-degenerate m-simplices are the (m+1)-chains.
SimplicialSet nerve(const Poset& p, int dim_cap);

// Simplex of nerve(P) named by a weakly increasing tuple of element indices.
EZ nerve_simplex(const SimplicialSet& nerve_of_p, const Poset& p, const std::vector<int>& tuple);

struct NotAComplex : std::runtime_error {
  explicit NotAComplex(const std::string& what) : std::runtime_error(what) {}
};

// Barycentric subdivision of an ordered simplicial complex: the nerve of its
// poset of non-degenerate simplices. Also exposes that face poset.
SimplicialSet sd(const SimplicialSet& k);
Poset face_poset(const SimplicialSet& k);  // throws NotAComplex

// Induced map Sd(f) between subdivisions of ordered complexes.
SimplicialMap sd_map(const SimplicialMap& f, std::shared_ptr<const SimplicialSet> sd_src,
                     std::shared_ptr<const SimplicialSet> sd_tgt);

// All simplicial maps K -> L determined in dimensions <= cap, canonically
// ordered. K must have no non-degenerate simplices above cap.
std::vector<SimplicialMap> hom_enumerate(std::shared_ptr<const SimplicialSet> k,
                                         std::shared_ptr<const SimplicialSet> l,
                                         int cap, Budget* budget = nullptr);

struct PushoutSSet {
  std::shared_ptr<SimplicialSet> object;
  SimplicialMap from_b;  // coprojection B -> P
  SimplicialMap from_c;  // coprojection C -> P
  // Mediating map to a cocone (t_b ∘ f = t_c ∘ g required of the caller).
  SimplicialMap mediate(const SimplicialMap& t_b, const SimplicialMap& t_c) const;
};

PushoutSSet pushout_sset(const SimplicialMap& f, const SimplicialMap& g);

// Degree-wise bijection commuting with the operators, if one exists.
std::optional<SimplicialMap> iso_check(std::shared_ptr<const SimplicialSet> k,
                                       std::shared_ptr<const SimplicialSet> l);

// Binary product, capped. Non-degenerate n-simplices are jointly
// non-degenerate pairs of total n-simplices.
struct ProductSSet {
  std::shared_ptr<SimplicialSet> object;
  std::vector<std::vector<std::pair<EZ, EZ>>> components;  // [dim][idx]

  // The product simplex with the given total components (any joint
  // degeneracy is normalized away).
  EZ pair(const EZ& x, const EZ& y) const;
  std::pair<EZ, EZ> project(const EZ& xy) const;  // total components
};

ProductSSet product_sset(std::shared_ptr<const SimplicialSet> k,
                         std::shared_ptr<const SimplicialSet> l, int dim_cap);

// Simplicial homotopy between parallel maps, as a degree-raising family
// H[n][i] : K_n -> L_{n+1} for 0 <= i <= n. The identity convention:
//   d0 H0 = g,  d(n+1) Hn = f,
//   di Hj = H(j-1) di        (i < j)
//   di Hj = Hj d(i-1)        (i > j+1)
//   d(j+1) H(j+1) = d(j+1) Hj
//   ei Hj = H(j+1) ei        (i <= j)
//   ei Hj = Hj e(i-1)        (i > j)
class SimplicialHomotopy {
 public:
  SimplicialHomotopy() = default;
  SimplicialHomotopy(SimplicialMap f, SimplicialMap g,
                     std::vector<std::vector<std::vector<EZ>>> family);

  const SimplicialMap& f() const { return f_; }
  const SimplicialMap& g() const { return g_; }
  int levels() const { return static_cast<int>(family_.size()); }

  // H^n_i applied to any simplex of total dimension n, extending the stored
  // values on non-degenerate simplices through the degeneracy identities.
  EZ eval(int n, int i, const EZ& x) const;

  // Build from a map P : K x Delta[1] -> L. `prod` must be the product the
  // map is defined on, with Delta[1] = nerve(ordinal(1)) as second factor.
  static SimplicialHomotopy from_product_map(const SimplicialMap& p, const ProductSSet& prod,
                                             const SimplicialSet& delta1,
                                             SimplicialMap f, SimplicialMap g);
  // Evaluate the product form P(x, t) from the family.
  EZ product_value(const EZ& x, const std::vector<int>& delta1_tuple) const;

 private:
  SimplicialMap f_, g_;
  std::vector<std::vector<std::vector<EZ>>> family_;  // [n][idx within K_n nondeg][i]
};

// Checks every endpoint and face/degeneracy identity of the pinned convention
// on all total simplices up to the family's levels.
Report homotopy_check(const SimplicialHomotopy& h);

// Constant homotopy on f.
SimplicialHomotopy constant_homotopy(const SimplicialMap& f);

}  // namespace thoma2
