#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "thoma2/nlax.hpp"
#include "thoma2/sset.hpp"
#include "thoma2/twocat.hpp"

namespace thoma2 {

// The 2-category of cylinders over A: objects are 1-cells of A, morphisms are
// lax squares (u0, u1, alpha) with alpha : u1∘f => g∘u0, 2-cells are
// cylinders (theta0, theta1) subject to the exchange equation.
class CylTwoCat : public TwoCat {
 public:
  explicit CylTwoCat(std::shared_ptr<const TwoCat> base, Budget* budget = nullptr);

  const std::shared_ptr<const TwoCat>& base() const { return base_; }
  int object_of_cell(int a_one_cell) const { return obj_of_.at(a_one_cell); }
  int cell_of_object(int x) const { return objs_[x]; }

  struct Square {
    int u0, u1, alpha;  // alpha : u1 ∘ f => g ∘ u0
  };
  struct Cylinder {
    int theta0, theta1;
  };

  int intern_square(int from, int to, Square s) const;  // validates frames
  int intern_cylinder(int sq_from, int sq_to, Cylinder c) const;  // checks exchange
  Square square(int f) const;
  std::pair<int, int> square_frames(int f) const;  // (from-object, to-object)
  Cylinder cylinder(int a) const;

  int n_objects() const override { return static_cast<int>(objs_.size()); }
  Token object_token(int x) const override { return base_->token1(objs_[x]); }
  int dom0(int f) const override { return sq_frames_[f].first; }
  int cod0(int f) const override { return sq_frames_[f].second; }
  int id1(int x) const override;
  int compose1(int g, int f) const override;  // pasting
  std::vector<int> hom1(int x, int y) const override;
  Token token1(int f) const override;
  int dom1(int a) const override { return cyl_frames_[a].first; }
  int cod1(int a) const override { return cyl_frames_[a].second; }
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
  std::vector<int> objs_;
  std::map<int, int> obj_of_;
  mutable std::vector<Square> squares_;
  mutable std::vector<std::pair<int, int>> sq_frames_;
  mutable std::map<std::array<int, 5>, int> sq_ids_;
  mutable std::vector<Cylinder> cyls_;
  mutable std::vector<std::pair<int, int>> cyl_frames_;
  mutable std::map<std::array<int, 4>, int> cyl_ids_;
};

struct CylResult {
  std::shared_ptr<CylTwoCat> view;
  std::shared_ptr<ExplicitTwoCategory> cat;  // materialized tables
};

CylResult cyl(std::shared_ptr<const TwoCat> a, Budget* budget = nullptr);

struct CylStructure {
  TwoFunctor dom, cod, diag;  // dom, cod : Cyl(A) -> A and I : A -> Cyl(A)
};

CylStructure cyl_structure(std::shared_ptr<const CylTwoCat> c);

// Lax transformation data between parallel 2-functors.
struct LaxTransformation {
  TwoFunctor f, g;
  std::function<int(int)> at_object;  // alpha_X : F(X) -> G(X)
  std::function<int(int)> at_one;     // alpha_f : G(f)∘alpha_X => alpha_Y∘F(f)
};

// Checks conditions (i) and (ii) of a lax transformation; failures are
// located at the offending cell or composable pair.
Report validate_lax_transformation(const LaxTransformation& t, Budget* budget = nullptr);

// The classifying 2-functor A -> Cyl(B) with dom∘cls = F and cod∘cls = G.
TwoFunctor classify_lax_transformation(const LaxTransformation& t,
                                       std::shared_ptr<const CylTwoCat> cyl_b);
LaxTransformation extract_lax_transformation(const TwoFunctor& cls,
                                             std::shared_ptr<const CylTwoCat> cyl_b);

// The homotopy family H^n_i on N2(Cyl(A)) witnessing N2(I∘dom) ≃ id.
SimplicialHomotopy homotopy_Hni(std::shared_ptr<const CylTwoCat> c, const N2Result& n2_cyl,
                                int cap);

// Path-object conditions: the commuting triangle dom∘I = cod∘I = id and the
// homotopy witness.
Report path_object_check(std::shared_ptr<const TwoCat> a, int cap, Budget* budget = nullptr);

// Factorization of <F, G> through the cylinder via a classified lax
// transformation, with the path-object conditions re-checked at cap.
Report right_homotopy_witness(const LaxTransformation& t, int cap, Budget* budget = nullptr);

}  // namespace thoma2
