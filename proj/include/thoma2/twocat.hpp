#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thoma2/common.hpp"
#include "thoma2/poset.hpp"
#include "thoma2/report.hpp"

namespace thoma2 {

// Two-level globular data underlying an explicit 2-category.
struct TwoGraph {
  std::vector<Token> cells0;
  std::vector<Token> cells1;
  std::vector<Token> cells2;
  std::vector<int> dom0, cod0;  // on cells1
  std::vector<int> dom1, cod1;  // on cells2
  Report validate() const;      // globularity
};

// Uniform 2-category interface. Objects are dense ids; 1- and 2-cells are
// per-instance interned ids (lazy backends assign them on first use).
class TwoCat {
 public:
  virtual ~TwoCat() = default;

  virtual int n_objects() const = 0;
  virtual Token object_token(int x) const = 0;

  virtual int dom0(int f) const = 0;
  virtual int cod0(int f) const = 0;
  virtual int id1(int x) const = 0;
  virtual int compose1(int g, int f) const = 0;  // g after f
  virtual std::vector<int> hom1(int x, int y) const = 0;
  virtual Token token1(int f) const = 0;

  virtual int dom1(int a) const = 0;
  virtual int cod1(int a) const = 0;
  virtual int id2(int f) const = 0;
  virtual int vcomp(int b, int a) const = 0;          // b after a
  virtual int whisker_pre(int a, int f) const = 0;    // a ∘ f
  virtual int whisker_post(int g, int a) const = 0;   // g ∘ a
  virtual std::vector<int> hom2(int f, int g) const = 0;
  virtual Token token2(int a) const = 0;

  // Full enumeration; lazy backends intern everything. Charged to `budget`.
  virtual std::vector<int> all1(Budget* budget = nullptr) const = 0;
  virtual std::vector<int> all2(Budget* budget = nullptr) const = 0;

  bool is_id1(int f) const { return f == id1(dom0(f)); }
  bool is_id2(int a) const { return a == id2(dom1(a)); }
  int hcomp2(int beta, int alpha) const;  // horizontal composite (beta ∘ alpha)
  int object_index(const Token& t) const;
  int find1(const Token& t) const;  // linear scan over all1 done by callers; -1 here
};

// Table-backed finite 2-category.
class ExplicitTwoCategory : public TwoCat {
 public:
  int add_object(const Token& t);
  int add_one_cell(const Token& t, int dom, int cod, bool is_identity = false);
  int add_two_cell(const Token& t, int dom1_cell, int cod1_cell, bool is_identity = false);
  void set_compose1(int g, int f, int gf);
  void set_vcomp(int b, int a, int ba);
  void set_whisker_pre(int a, int f, int out);
  void set_whisker_post(int g, int a, int out);

  int n_objects() const override { return static_cast<int>(graph_.cells0.size()); }
  Token object_token(int x) const override { return graph_.cells0[x]; }
  int dom0(int f) const override { return graph_.dom0[f]; }
  int cod0(int f) const override { return graph_.cod0[f]; }
  int id1(int x) const override;
  int compose1(int g, int f) const override;
  std::vector<int> hom1(int x, int y) const override;
  Token token1(int f) const override { return graph_.cells1[f]; }
  int dom1(int a) const override { return graph_.dom1[a]; }
  int cod1(int a) const override { return graph_.cod1[a]; }
  int id2(int f) const override;
  int vcomp(int b, int a) const override;
  int whisker_pre(int a, int f) const override;
  int whisker_post(int g, int a) const override;
  std::vector<int> hom2(int f, int g) const override;
  Token token2(int a) const override { return graph_.cells2[a]; }
  std::vector<int> all1(Budget* budget = nullptr) const override;
  std::vector<int> all2(Budget* budget = nullptr) const override;

  int n1() const { return static_cast<int>(graph_.cells1.size()); }
  int n2() const { return static_cast<int>(graph_.cells2.size()); }
  const TwoGraph& graph() const { return graph_; }
  int find_one_cell(const Token& t) const;
  int find_two_cell(const Token& t) const;

  // mutation hooks for the perturbation suite (tests only)
  std::map<std::pair<int, int>, int>& mutable_compose1() { return comp1_; }
  std::map<std::pair<int, int>, int>& mutable_vcomp() { return vcomp_; }
  std::map<std::pair<int, int>, int>& mutable_whisker_pre() { return wpre_; }
  std::map<std::pair<int, int>, int>& mutable_whisker_post() { return wpost_; }

  nlohmann::json to_json() const;

 private:
  TwoGraph graph_;
  std::vector<int> id1_;  // per object
  std::vector<int> id2_;  // per 1-cell
  std::map<std::pair<int, int>, int> comp1_, vcomp_, wpre_, wpost_;
};

// Chain-presented locally ordered 2-category over a poset: objects are the
// elements, 1-cells x -> y the chains from x to y, and there is a unique
// 2-cell c => d exactly when c, d share endpoints and d ⊆ c.
class ChainTwoCategory : public TwoCat {
 public:
  explicit ChainTwoCategory(Poset base) : base_(std::move(base)) {}
  const Poset& base() const { return base_; }

  int n_objects() const override { return base_.size(); }
  Token object_token(int x) const override { return base_.token(x); }
  int dom0(int f) const override { return cells1_[f].front(); }
  int cod0(int f) const override { return cells1_[f].back(); }
  int id1(int x) const override;
  int compose1(int g, int f) const override;
  std::vector<int> hom1(int x, int y) const override;
  Token token1(int f) const override;
  int dom1(int a) const override { return cells2_[a].first; }
  int cod1(int a) const override { return cells2_[a].second; }
  int id2(int f) const override;
  int vcomp(int b, int a) const override;
  int whisker_pre(int a, int f) const override;
  int whisker_post(int g, int a) const override;
  std::vector<int> hom2(int f, int g) const override;
  Token token2(int a) const override;
  std::vector<int> all1(Budget* budget = nullptr) const override;
  std::vector<int> all2(Budget* budget = nullptr) const override;

  int intern_chain(const Chain& c) const;
  const Chain& chain_of(int f) const { return cells1_[f]; }
  int intern_two(int f, int g) const;  // requires the subchain condition

 private:
  Poset base_;
  mutable std::vector<Chain> cells1_;
  mutable std::map<std::vector<int>, int> chain_ids_;
  mutable std::vector<std::pair<int, int>> cells2_;
  mutable std::map<std::pair<int, int>, int> two_ids_;
};

// Full, locally full sub-2-category on an object subset, as a view.
class SubTwoCat : public TwoCat {
 public:
  SubTwoCat(std::shared_ptr<const TwoCat> parent, std::vector<int> objects);

  const std::shared_ptr<const TwoCat>& parent() const { return parent_; }
  const std::vector<int>& object_set() const { return objects_; }
  bool contains_object(int parent_obj) const;
  int from_parent_object(int parent_obj) const;
  int to_parent1(int f) const { return f; }
  int to_parent2(int a) const { return a; }

  int n_objects() const override { return static_cast<int>(objects_.size()); }
  Token object_token(int x) const override { return parent_->object_token(objects_[x]); }
  int dom0(int f) const override { return from_parent_object(parent_->dom0(f)); }
  int cod0(int f) const override { return from_parent_object(parent_->cod0(f)); }
  int id1(int x) const override { return parent_->id1(objects_[x]); }
  int compose1(int g, int f) const override { return parent_->compose1(g, f); }
  std::vector<int> hom1(int x, int y) const override {
    return parent_->hom1(objects_[x], objects_[y]);
  }
  Token token1(int f) const override { return parent_->token1(f); }
  int dom1(int a) const override { return parent_->dom1(a); }
  int cod1(int a) const override { return parent_->cod1(a); }
  int id2(int f) const override { return parent_->id2(f); }
  int vcomp(int b, int a) const override { return parent_->vcomp(b, a); }
  int whisker_pre(int a, int f) const override { return parent_->whisker_pre(a, f); }
  int whisker_post(int g, int a) const override { return parent_->whisker_post(g, a); }
  std::vector<int> hom2(int f, int g) const override { return parent_->hom2(f, g); }
  Token token2(int a) const override { return parent_->token2(a); }
  std::vector<int> all1(Budget* budget = nullptr) const override;
  std::vector<int> all2(Budget* budget = nullptr) const override;

 private:
  std::shared_ptr<const TwoCat> parent_;
  std::vector<int> objects_;          // parent object ids, ascending
  std::vector<int> parent_to_local_;  // -1 when absent
};

// A x I for the interval 2-category I (objects L, R; generator t; trivial
// 2-cells), as a lazy view. Object x of A yields objects (x,L) = 2x and
// (x,R) = 2x+1.
class IntervalProduct : public TwoCat {
 public:
  explicit IntervalProduct(std::shared_ptr<const TwoCat> base) : base_(std::move(base)) {}
  enum Layer { L = 0, R = 1, T = 2 };  // T: crossing cells (f, t)

  const std::shared_ptr<const TwoCat>& base() const { return base_; }
  int object_of(int base_obj, Layer nu) const { return 2 * base_obj + (nu == R ? 1 : 0); }
  int intern1(int base_cell, Layer nu) const;
  int intern2(int base_cell, Layer nu) const;
  std::pair<int, Layer> decode1(int f) const { return cells1_[f]; }
  std::pair<int, Layer> decode2(int a) const { return cells2_[a]; }

  int n_objects() const override { return 2 * base_->n_objects(); }
  Token object_token(int x) const override;
  int dom0(int f) const override;
  int cod0(int f) const override;
  int id1(int x) const override;
  int compose1(int g, int f) const override;
  std::vector<int> hom1(int x, int y) const override;
  Token token1(int f) const override;
  int dom1(int a) const override;
  int cod1(int a) const override;
  int id2(int f) const override;
  int vcomp(int b, int a) const override;
  int whisker_pre(int a, int f) const override;
  int whisker_post(int g, int a) const override;
  std::vector<int> hom2(int f, int g) const override;
  Token token2(int a) const override;
  std::vector<int> all1(Budget* budget = nullptr) const override;
  std::vector<int> all2(Budget* budget = nullptr) const override;

 private:
  std::shared_ptr<const TwoCat> base_;
  mutable std::vector<std::pair<int, Layer>> cells1_;
  mutable std::map<std::pair<int, int>, int> ids1_;
  mutable std::vector<std::pair<int, Layer>> cells2_;
  mutable std::map<std::pair<int, int>, int> ids2_;
};

// 2-cell-reversed copy (the co-dual), used for the oplax variants.
class CoTwoCat : public TwoCat {
 public:
  explicit CoTwoCat(std::shared_ptr<const TwoCat> base) : base_(std::move(base)) {}
  const std::shared_ptr<const TwoCat>& base() const { return base_; }

  int n_objects() const override { return base_->n_objects(); }
  Token object_token(int x) const override { return base_->object_token(x); }
  int dom0(int f) const override { return base_->dom0(f); }
  int cod0(int f) const override { return base_->cod0(f); }
  int id1(int x) const override { return base_->id1(x); }
  int compose1(int g, int f) const override { return base_->compose1(g, f); }
  std::vector<int> hom1(int x, int y) const override { return base_->hom1(x, y); }
  Token token1(int f) const override { return base_->token1(f); }
  int dom1(int a) const override { return base_->cod1(a); }
  int cod1(int a) const override { return base_->dom1(a); }
  int id2(int f) const override { return base_->id2(f); }
  int vcomp(int b, int a) const override { return base_->vcomp(a, b); }
  int whisker_pre(int a, int f) const override { return base_->whisker_pre(a, f); }
  int whisker_post(int g, int a) const override { return base_->whisker_post(g, a); }
  std::vector<int> hom2(int f, int g) const override { return base_->hom2(g, f); }
  Token token2(int a) const override { return base_->token2(a); }
  std::vector<int> all1(Budget* budget = nullptr) const override { return base_->all1(budget); }
  std::vector<int> all2(Budget* budget = nullptr) const override { return base_->all2(budget); }

 private:
  std::shared_ptr<const TwoCat> base_;
};

// 2-functor between any two backends, given by per-level assignments.
class TwoFunctor {
 public:
  TwoFunctor() = default;
  TwoFunctor(std::shared_ptr<const TwoCat> src, std::shared_ptr<const TwoCat> tgt,
             std::function<int(int)> on0, std::function<int(int)> on1,
             std::function<int(int)> on2);

  const TwoCat& source() const { return *src_; }
  const TwoCat& target() const { return *tgt_; }
  const std::shared_ptr<const TwoCat>& source_ptr() const { return src_; }
  const std::shared_ptr<const TwoCat>& target_ptr() const { return tgt_; }
  int on0(int x) const { return f0_(x); }
  int on1(int f) const { return f1_(f); }
  int on2(int a) const { return f2_(a); }

  static TwoFunctor identity(std::shared_ptr<const TwoCat> c);
  TwoFunctor compose_after(const TwoFunctor& first) const;  // this ∘ first
  Report validate(Budget* budget = nullptr) const;          // functoriality

 private:
  std::shared_ptr<const TwoCat> src_, tgt_;
  std::function<int(int)> f0_, f1_, f2_;
};

// Exhaustive law checking: category laws, local categories, whiskering
// axioms, interchange. Works on any enumerable backend.
Report validate_two_category(const TwoCat& c, Budget* budget = nullptr);

// Constructions.
std::shared_ptr<ChainTwoCategory> chain_two_category(Poset p);
std::shared_ptr<ChainTwoCategory> oriental(int n);
std::shared_ptr<ExplicitTwoCategory> walking_2cell();
std::shared_ptr<ExplicitTwoCategory> interval_two_category();
std::shared_ptr<ExplicitTwoCategory> terminal_two_category();

struct Materialized {
  std::shared_ptr<ExplicitTwoCategory> cat;
  std::vector<int> obj_to_view;          // explicit object -> view object (identity here)
  std::vector<int> one_to_view, two_to_view;
  std::map<int, int> view_to_one, view_to_two;
  TwoFunctor iso_from_view(std::shared_ptr<const TwoCat> view) const;
  TwoFunctor iso_to_view(std::shared_ptr<const TwoCat> view) const;
};

// Materializes any enumerable backend into tables.
Materialized explicit_of(const TwoCat& view, Budget* budget = nullptr);
std::shared_ptr<ExplicitTwoCategory> explicit_of_chain(const ChainTwoCategory& c,
                                                       Budget* budget = nullptr);
std::shared_ptr<ExplicitTwoCategory> product_with_interval(std::shared_ptr<const TwoCat> c,
                                                           Budget* budget = nullptr);

}  // namespace thoma2
