#include "thoma2/twocat.hpp"

#include <algorithm>

namespace thoma2 {

Report TwoGraph::validate() const {
  Report rep;
  rep.lemma = "2-graph";
  bool ok = true;
  for (size_t a = 0; a < cells2.size(); ++a) {
    int d = dom1[a], c = cod1[a];
    if (dom0[d] != dom0[c] || cod0[d] != cod0[c]) {
      ok = false;
      rep.fail("globularity", "2-cell frames are not parallel", {{"cell", cells2[a]}});
    }
  }
  if (ok) rep.pass("globularity");
  return rep;
}

int TwoCat::hcomp2(int beta, int alpha) const {
  // (beta ∘ alpha) for alpha in (x,y), beta in (y,z): either interchange
  // route; this one whiskers alpha first.
  int g = cod1(alpha);
  int fp = dom1(beta);
  return vcomp(whisker_pre(beta, g), whisker_post(fp, alpha));
}

int TwoCat::object_index(const Token& t) const {
  for (int i = 0; i < n_objects(); ++i)
    if (object_token(i) == t) return i;
  return -1;
}

int TwoCat::find1(const Token&) const { return -1; }

// ---------------------------------------------------------------------------
// ExplicitTwoCategory

int ExplicitTwoCategory::add_object(const Token& t) {
  graph_.cells0.push_back(t);
  id1_.push_back(-1);
  return static_cast<int>(graph_.cells0.size()) - 1;
}

int ExplicitTwoCategory::add_one_cell(const Token& t, int dom, int cod, bool is_identity) {
  graph_.cells1.push_back(t);
  graph_.dom0.push_back(dom);
  graph_.cod0.push_back(cod);
  id2_.push_back(-1);
  int f = static_cast<int>(graph_.cells1.size()) - 1;
  if (is_identity) {
    if (dom != cod) throw InvalidArgument("identity 1-cell must be an endocell");
    id1_[dom] = f;
  }
  return f;
}

int ExplicitTwoCategory::add_two_cell(const Token& t, int dom1_cell, int cod1_cell,
                                      bool is_identity) {
  if (graph_.dom0[dom1_cell] != graph_.dom0[cod1_cell] ||
      graph_.cod0[dom1_cell] != graph_.cod0[cod1_cell])
    throw InvalidArgument("2-cell frames must be parallel: " + t);
  graph_.cells2.push_back(t);
  graph_.dom1.push_back(dom1_cell);
  graph_.cod1.push_back(cod1_cell);
  int a = static_cast<int>(graph_.cells2.size()) - 1;
  if (is_identity) {
    if (dom1_cell != cod1_cell) throw InvalidArgument("identity 2-cell must be an endocell");
    id2_[dom1_cell] = a;
  }
  return a;
}

void ExplicitTwoCategory::set_compose1(int g, int f, int gf) { comp1_[{g, f}] = gf; }
void ExplicitTwoCategory::set_vcomp(int b, int a, int ba) { vcomp_[{b, a}] = ba; }
void ExplicitTwoCategory::set_whisker_pre(int a, int f, int out) { wpre_[{a, f}] = out; }
void ExplicitTwoCategory::set_whisker_post(int g, int a, int out) { wpost_[{g, a}] = out; }

int ExplicitTwoCategory::id1(int x) const {
  if (id1_[x] < 0) throw InvalidArgument("missing identity 1-cell at " + graph_.cells0[x]);
  return id1_[x];
}

int ExplicitTwoCategory::id2(int f) const {
  if (id2_[f] < 0) throw InvalidArgument("missing identity 2-cell at " + graph_.cells1[f]);
  return id2_[f];
}

int ExplicitTwoCategory::compose1(int g, int f) const {
  auto it = comp1_.find({g, f});
  if (it == comp1_.end())
    throw InvalidArgument("missing composite " + graph_.cells1[g] + " after " + graph_.cells1[f]);
  return it->second;
}

int ExplicitTwoCategory::vcomp(int b, int a) const {
  auto it = vcomp_.find({b, a});
  if (it == vcomp_.end())
    throw InvalidArgument("missing vertical composite " + graph_.cells2[b] + " after " +
                          graph_.cells2[a]);
  return it->second;
}

int ExplicitTwoCategory::whisker_pre(int a, int f) const {
  auto it = wpre_.find({a, f});
  if (it == wpre_.end())
    throw InvalidArgument("missing whisker " + graph_.cells2[a] + " ∘ " + graph_.cells1[f]);
  return it->second;
}

int ExplicitTwoCategory::whisker_post(int g, int a) const {
  auto it = wpost_.find({g, a});
  if (it == wpost_.end())
    throw InvalidArgument("missing whisker " + graph_.cells1[g] + " ∘ " + graph_.cells2[a]);
  return it->second;
}

std::vector<int> ExplicitTwoCategory::hom1(int x, int y) const {
  std::vector<int> out;
  for (int f = 0; f < n1(); ++f)
    if (graph_.dom0[f] == x && graph_.cod0[f] == y) out.push_back(f);
  return out;
}

std::vector<int> ExplicitTwoCategory::hom2(int f, int g) const {
  std::vector<int> out;
  for (int a = 0; a < n2(); ++a)
    if (graph_.dom1[a] == f && graph_.cod1[a] == g) out.push_back(a);
  return out;
}

std::vector<int> ExplicitTwoCategory::all1(Budget* budget) const {
  if (budget) budget->charge(n1(), "explicit.all1");
  std::vector<int> out(n1());
  for (int i = 0; i < n1(); ++i) out[i] = i;
  return out;
}

std::vector<int> ExplicitTwoCategory::all2(Budget* budget) const {
  if (budget) budget->charge(n2(), "explicit.all2");
  std::vector<int> out(n2());
  for (int i = 0; i < n2(); ++i) out[i] = i;
  return out;
}

int ExplicitTwoCategory::find_one_cell(const Token& t) const {
  for (int f = 0; f < n1(); ++f)
    if (graph_.cells1[f] == t) return f;
  return -1;
}

int ExplicitTwoCategory::find_two_cell(const Token& t) const {
  for (int a = 0; a < n2(); ++a)
    if (graph_.cells2[a] == t) return a;
  return -1;
}

nlohmann::json ExplicitTwoCategory::to_json() const {
  nlohmann::json j;
  j["objects"] = graph_.cells0;
  nlohmann::json ones = nlohmann::json::array();
  for (int f = 0; f < n1(); ++f)
    ones.push_back({{"token", graph_.cells1[f]},
                    {"dom", graph_.cells0[graph_.dom0[f]]},
                    {"cod", graph_.cells0[graph_.cod0[f]]},
                    {"identity", id1_[graph_.dom0[f]] == f}});
  j["one_cells"] = ones;
  nlohmann::json twos = nlohmann::json::array();
  for (int a = 0; a < n2(); ++a)
    twos.push_back({{"token", graph_.cells2[a]},
                    {"dom", graph_.cells1[graph_.dom1[a]]},
                    {"cod", graph_.cells1[graph_.cod1[a]]},
                    {"identity", id2_[graph_.dom1[a]] == a}});
  j["two_cells"] = twos;
  nlohmann::json hc = nlohmann::json::array();
  for (const auto& [key, val] : comp1_)
    hc.push_back({graph_.cells1[key.first], graph_.cells1[key.second], graph_.cells1[val]});
  j["hcomp"] = hc;
  nlohmann::json vc = nlohmann::json::array();
  for (const auto& [key, val] : vcomp_)
    vc.push_back({graph_.cells2[key.first], graph_.cells2[key.second], graph_.cells2[val]});
  j["vcomp"] = vc;
  nlohmann::json wl = nlohmann::json::array();
  for (const auto& [key, val] : wpre_)
    wl.push_back({graph_.cells2[key.first], graph_.cells1[key.second], graph_.cells2[val]});
  j["whisker_pre"] = wl;
  nlohmann::json wr = nlohmann::json::array();
  for (const auto& [key, val] : wpost_)
    wr.push_back({graph_.cells1[key.first], graph_.cells2[key.second], graph_.cells2[val]});
  j["whisker_post"] = wr;
  return j;
}

// ---------------------------------------------------------------------------
// ChainTwoCategory

int ChainTwoCategory::intern_chain(const Chain& c) const {
  auto it = chain_ids_.find(c.members);
  if (it != chain_ids_.end()) return it->second;
  cells1_.push_back(c);
  int id = static_cast<int>(cells1_.size()) - 1;
  chain_ids_[c.members] = id;
  return id;
}

int ChainTwoCategory::intern_two(int f, int g) const {
  if (dom0(f) != dom0(g) || cod0(f) != cod0(g))
    throw InvalidArgument("2-cell endpoints differ");
  if (!cells1_[g].subset_of(cells1_[f]))
    throw InvalidArgument("no 2-cell: " + token1(g) + " is not a subchain of " + token1(f));
  auto it = two_ids_.find({f, g});
  if (it != two_ids_.end()) return it->second;
  cells2_.push_back({f, g});
  int id = static_cast<int>(cells2_.size()) - 1;
  two_ids_[{f, g}] = id;
  return id;
}

int ChainTwoCategory::id1(int x) const { return intern_chain(Chain{{x}}); }

int ChainTwoCategory::compose1(int g, int f) const {
  const Chain& cf = cells1_[f];
  const Chain& cg = cells1_[g];
  if (cf.back() != cg.front()) throw InvalidArgument("1-cells not composable");
  std::vector<int> members = cf.members;
  members.insert(members.end(), cg.members.begin() + 1, cg.members.end());
  return intern_chain(Chain{members});
}

std::vector<int> ChainTwoCategory::hom1(int x, int y) const {
  std::vector<int> out;
  for (const Chain& c : chains_between(base_, x, y)) out.push_back(intern_chain(c));
  std::sort(out.begin(), out.end());
  return out;
}

Token ChainTwoCategory::token1(int f) const { return chain_token(base_, cells1_[f]); }

int ChainTwoCategory::id2(int f) const { return intern_two(f, f); }

int ChainTwoCategory::vcomp(int b, int a) const {
  if (cells2_[a].second != cells2_[b].first) throw InvalidArgument("2-cells not composable");
  return intern_two(cells2_[a].first, cells2_[b].second);
}

int ChainTwoCategory::whisker_pre(int a, int f) const {
  return intern_two(compose1(cells2_[a].first, f), compose1(cells2_[a].second, f));
}

int ChainTwoCategory::whisker_post(int g, int a) const {
  return intern_two(compose1(g, cells2_[a].first), compose1(g, cells2_[a].second));
}

std::vector<int> ChainTwoCategory::hom2(int f, int g) const {
  if (dom0(f) == dom0(g) && cod0(f) == cod0(g) && cells1_[g].subset_of(cells1_[f]))
    return {intern_two(f, g)};
  return {};
}

Token ChainTwoCategory::token2(int a) const {
  return "[" + token1(cells2_[a].first) + "=>" + token1(cells2_[a].second) + "]";
}

std::vector<int> ChainTwoCategory::all1(Budget* budget) const {
  std::vector<Chain> chains = all_chains(base_);
  if (budget) budget->charge(static_cast<std::int64_t>(chains.size()), "chain.all1");
  std::vector<int> out;
  out.reserve(chains.size());
  for (const Chain& c : chains) out.push_back(intern_chain(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ChainTwoCategory::all2(Budget* budget) const {
  std::vector<int> ones = all1(budget);
  std::vector<int> out;
  for (int f : ones) {
    const Chain c = cells1_[f];
    int interior = static_cast<int>(c.members.size()) - 2;
    if (interior < 0) {
      out.push_back(id2(f));
      continue;
    }
    if (budget) budget->charge(1LL << interior, "chain.all2");
    for (unsigned mask = 0; mask < (1u << interior); ++mask) {
      std::vector<int> members = {c.front()};
      for (int i = 0; i < interior; ++i)
        if (mask & (1u << i)) members.push_back(c.members[i + 1]);
      members.push_back(c.back());
      out.push_back(intern_two(f, intern_chain(Chain{members})));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// SubTwoCat

SubTwoCat::SubTwoCat(std::shared_ptr<const TwoCat> parent, std::vector<int> objects)
    : parent_(std::move(parent)), objects_(std::move(objects)) {
  std::sort(objects_.begin(), objects_.end());
  objects_.erase(std::unique(objects_.begin(), objects_.end()), objects_.end());
  parent_to_local_.assign(parent_->n_objects(), -1);
  for (size_t i = 0; i < objects_.size(); ++i) parent_to_local_[objects_[i]] = static_cast<int>(i);
}

bool SubTwoCat::contains_object(int parent_obj) const {
  return parent_obj >= 0 && parent_obj < static_cast<int>(parent_to_local_.size()) &&
         parent_to_local_[parent_obj] >= 0;
}

int SubTwoCat::from_parent_object(int parent_obj) const {
  int l = parent_to_local_[parent_obj];
  if (l < 0) throw InvalidArgument("object not in sub-2-category");
  return l;
}

std::vector<int> SubTwoCat::all1(Budget* budget) const {
  std::vector<int> out;
  for (int x : objects_)
    for (int y : objects_)
      for (int f : parent_->hom1(x, y)) out.push_back(f);
  if (budget) budget->charge(static_cast<std::int64_t>(out.size()), "sub.all1");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> SubTwoCat::all2(Budget* budget) const {
  std::vector<int> ones = all1(budget);
  std::vector<int> out;
  for (int f : ones)
    for (int g : ones) {
      if (parent_->dom0(f) != parent_->dom0(g) || parent_->cod0(f) != parent_->cod0(g)) continue;
      for (int a : parent_->hom2(f, g)) out.push_back(a);
    }
  if (budget) budget->charge(static_cast<std::int64_t>(out.size()), "sub.all2");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// IntervalProduct

int IntervalProduct::intern1(int base_cell, Layer nu) const {
  auto it = ids1_.find({base_cell, static_cast<int>(nu)});
  if (it != ids1_.end()) return it->second;
  cells1_.push_back({base_cell, nu});
  int id = static_cast<int>(cells1_.size()) - 1;
  ids1_[{base_cell, static_cast<int>(nu)}] = id;
  return id;
}

int IntervalProduct::intern2(int base_cell, Layer nu) const {
  auto it = ids2_.find({base_cell, static_cast<int>(nu)});
  if (it != ids2_.end()) return it->second;
  cells2_.push_back({base_cell, nu});
  int id = static_cast<int>(cells2_.size()) - 1;
  ids2_[{base_cell, static_cast<int>(nu)}] = id;
  return id;
}

Token IntervalProduct::object_token(int x) const {
  return "(" + base_->object_token(x / 2) + "," + (x % 2 ? "R" : "L") + ")";
}

int IntervalProduct::dom0(int f) const {
  auto [c, nu] = cells1_[f];
  return object_of(base_->dom0(c), nu == R ? R : L);
}

int IntervalProduct::cod0(int f) const {
  auto [c, nu] = cells1_[f];
  return object_of(base_->cod0(c), nu == L ? L : R);
}

int IntervalProduct::id1(int x) const {
  return intern1(base_->id1(x / 2), x % 2 ? R : L);
}

int IntervalProduct::compose1(int g, int f) const {
  auto [cf, nf] = cells1_[f];
  auto [cg, ng] = cells1_[g];
  int comp = base_->compose1(cg, cf);
  Layer nu;
  if (nf == L && ng == L) nu = L;
  else if (nf == R && ng == R) nu = R;
  else if (nf == L && ng == T) nu = T;
  else if (nf == T && ng == R) nu = T;
  else throw InvalidArgument("interval components not composable");
  return intern1(comp, nu);
}

std::vector<int> IntervalProduct::hom1(int x, int y) const {
  int bx = x / 2, by = y / 2;
  bool rx = x % 2, ry = y % 2;
  std::vector<int> out;
  if (rx && !ry) return out;
  Layer nu = (!rx && !ry) ? L : (rx && ry) ? R : T;
  for (int c : base_->hom1(bx, by)) out.push_back(intern1(c, nu));
  return out;
}

Token IntervalProduct::token1(int f) const {
  auto [c, nu] = cells1_[f];
  return "(" + base_->token1(c) + "," + (nu == L ? "idL" : nu == R ? "idR" : "t") + ")";
}

int IntervalProduct::dom1(int a) const {
  auto [c, nu] = cells2_[a];
  return intern1(base_->dom1(c), nu);
}

int IntervalProduct::cod1(int a) const {
  auto [c, nu] = cells2_[a];
  return intern1(base_->cod1(c), nu);
}

int IntervalProduct::id2(int f) const {
  auto [c, nu] = cells1_[f];
  return intern2(base_->id2(c), nu);
}

int IntervalProduct::vcomp(int b, int a) const {
  auto [ca, na] = cells2_[a];
  auto [cb, nb] = cells2_[b];
  if (na != nb) throw InvalidArgument("interval 2-cells not composable");
  return intern2(base_->vcomp(cb, ca), na);
}

int IntervalProduct::whisker_pre(int a, int f) const {
  auto [ca, na] = cells2_[a];
  auto [cf, nf] = cells1_[f];
  Layer nu;
  if (nf == L && na == L) nu = L;
  else if (nf == R && na == R) nu = R;
  else if (nf == L && na == T) nu = T;
  else if (nf == T && na == R) nu = T;
  else throw InvalidArgument("whisker not composable in interval product");
  return intern2(base_->whisker_pre(ca, cf), nu);
}

int IntervalProduct::whisker_post(int g, int a) const {
  auto [ca, na] = cells2_[a];
  auto [cg, ng] = cells1_[g];
  Layer nu;
  if (na == L && ng == L) nu = L;
  else if (na == R && ng == R) nu = R;
  else if (na == L && ng == T) nu = T;
  else if (na == T && ng == R) nu = T;
  else throw InvalidArgument("whisker not composable in interval product");
  return intern2(base_->whisker_post(cg, ca), nu);
}

std::vector<int> IntervalProduct::hom2(int f, int g) const {
  auto [cf, nf] = cells1_[f];
  auto [cg, ng] = cells1_[g];
  std::vector<int> out;
  if (nf != ng) return out;
  for (int a : base_->hom2(cf, cg)) out.push_back(intern2(a, nf));
  return out;
}

Token IntervalProduct::token2(int a) const {
  auto [c, nu] = cells2_[a];
  return "(" + base_->token2(c) + "," + (nu == L ? "idL" : nu == R ? "idR" : "t") + ")";
}

std::vector<int> IntervalProduct::all1(Budget* budget) const {
  std::vector<int> out;
  for (int c : base_->all1(budget)) {
    out.push_back(intern1(c, L));
    out.push_back(intern1(c, R));
    out.push_back(intern1(c, T));
  }
  if (budget) budget->charge(static_cast<std::int64_t>(out.size()), "interval.all1");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> IntervalProduct::all2(Budget* budget) const {
  std::vector<int> out;
  for (int c : base_->all2(budget)) {
    out.push_back(intern2(c, L));
    out.push_back(intern2(c, R));
    out.push_back(intern2(c, T));
  }
  if (budget) budget->charge(static_cast<std::int64_t>(out.size()), "interval.all2");
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// TwoFunctor

TwoFunctor::TwoFunctor(std::shared_ptr<const TwoCat> src, std::shared_ptr<const TwoCat> tgt,
                       std::function<int(int)> on0, std::function<int(int)> on1,
                       std::function<int(int)> on2)
    : src_(std::move(src)), tgt_(std::move(tgt)), f0_(std::move(on0)), f1_(std::move(on1)),
      f2_(std::move(on2)) {}

TwoFunctor TwoFunctor::identity(std::shared_ptr<const TwoCat> c) {
  auto idf = [](int x) { return x; };
  auto c2 = c;
  return TwoFunctor(std::move(c), std::move(c2), idf, idf, idf);
}

TwoFunctor TwoFunctor::compose_after(const TwoFunctor& first) const {
  auto g0 = f0_, g1 = f1_, g2 = f2_;
  auto h0 = first.f0_, h1 = first.f1_, h2 = first.f2_;
  return TwoFunctor(first.src_, tgt_, [g0, h0](int x) { return g0(h0(x)); },
                    [g1, h1](int f) { return g1(h1(f)); },
                    [g2, h2](int a) { return g2(h2(a)); });
}

Report TwoFunctor::validate(Budget* budget) const {
  Report rep;
  rep.lemma = "2-functor";
  const TwoCat& A = *src_;
  const TwoCat& B = *tgt_;
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
  for (int x = 0; x < A.n_objects(); ++x)
    law("identity-1", {{"object", A.object_token(x)}},
        [&] { return f1_(A.id1(x)) == B.id1(f0_(x)); });
  for (int f : ones)
    law("frames-1", {{"cell", A.token1(f)}}, [&] {
      return B.dom0(f1_(f)) == f0_(A.dom0(f)) && B.cod0(f1_(f)) == f0_(A.cod0(f));
    });
  for (int f : ones)
    for (int g : ones)
      if (A.cod0(f) == A.dom0(g))
        law("compose-1", {{"f", A.token1(f)}, {"g", A.token1(g)}},
            [&] { return f1_(A.compose1(g, f)) == B.compose1(f1_(g), f1_(f)); });
  for (int f : ones)
    law("identity-2", {{"cell", A.token1(f)}}, [&] { return f2_(A.id2(f)) == B.id2(f1_(f)); });
  for (int a : twos)
    law("frames-2", {{"cell", A.token2(a)}}, [&] {
      return B.dom1(f2_(a)) == f1_(A.dom1(a)) && B.cod1(f2_(a)) == f1_(A.cod1(a));
    });
  for (int a : twos)
    for (int b : twos)
      if (A.cod1(a) == A.dom1(b))
        law("vcomp", {{"a", A.token2(a)}, {"b", A.token2(b)}},
            [&] { return f2_(A.vcomp(b, a)) == B.vcomp(f2_(b), f2_(a)); });
  for (int a : twos)
    for (int f : ones) {
      if (A.cod0(f) == A.dom0(A.dom1(a)))
        law("whisker-pre", {{"a", A.token2(a)}, {"f", A.token1(f)}},
            [&] { return f2_(A.whisker_pre(a, f)) == B.whisker_pre(f2_(a), f1_(f)); });
      if (A.dom0(f) == A.cod0(A.dom1(a)))
        law("whisker-post", {{"a", A.token2(a)}, {"f", A.token1(f)}},
            [&] { return f2_(A.whisker_post(f, a)) == B.whisker_post(f1_(f), f2_(a)); });
    }
  if (fails == 0) rep.pass("functoriality");
  return rep;
}

// ---------------------------------------------------------------------------
// validation

Report validate_two_category(const TwoCat& c, Budget* budget) {
  Report rep;
  rep.lemma = "2-category-laws";
  int fails = 0;
  auto fail = [&](const std::string& name, nlohmann::json ce, const std::string& why = "") {
    ++fails;
    if (fails <= 12) rep.fail(name, why, std::move(ce));
  };
  // A law that throws (missing or ill-framed table entry) counts as a located
  // failure, not a crash.
  auto law = [&](const char* name, nlohmann::json ce, auto&& holds) {
    try {
      if (!holds()) fail(name, std::move(ce));
    } catch (const std::exception& e) {
      fail(name, std::move(ce), e.what());
    }
  };

  std::vector<int> ones = c.all1(budget);
  std::vector<int> twos = c.all2(budget);
  int n0 = c.n_objects();

  for (int x = 0; x < n0; ++x)
    law("id1-frame", {{"object", c.object_token(x)}},
        [&] { int i = c.id1(x); return c.dom0(i) == x && c.cod0(i) == x; });

  std::vector<std::vector<int>> out_of(n0), into(n0);
  for (int f : ones) {
    out_of[c.dom0(f)].push_back(f);
    into[c.cod0(f)].push_back(f);
  }

  for (int f : ones) {
    law("unit-right", {{"f", c.token1(f)}}, [&] { return c.compose1(f, c.id1(c.dom0(f))) == f; });
    law("unit-left", {{"f", c.token1(f)}}, [&] { return c.compose1(c.id1(c.cod0(f)), f) == f; });
  }
  for (int f : ones)
    for (int g : out_of[c.cod0(f)])
      for (int h : out_of[c.cod0(g)])
        law("assoc-1", {{"f", c.token1(f)}, {"g", c.token1(g)}, {"h", c.token1(h)}}, [&] {
          return c.compose1(h, c.compose1(g, f)) == c.compose1(c.compose1(h, g), f);
        });

  std::map<int, std::vector<int>> twos_from;  // dom1 -> 2-cells
  for (int a : twos) twos_from[c.dom1(a)].push_back(a);
  auto from = [&](int f) -> const std::vector<int>& {
    static const std::vector<int> empty;
    auto it = twos_from.find(f);
    return it == twos_from.end() ? empty : it->second;
  };
  for (int a : twos) {
    law("vunit-right", {{"a", c.token2(a)}}, [&] { return c.vcomp(a, c.id2(c.dom1(a))) == a; });
    law("vunit-left", {{"a", c.token2(a)}}, [&] { return c.vcomp(c.id2(c.cod1(a)), a) == a; });
  }
  for (int a : twos)
    for (int b : from(c.cod1(a)))
      for (int d : from(c.cod1(b)))
        law("vassoc", {{"a", c.token2(a)}, {"b", c.token2(b)}, {"d", c.token2(d)}},
            [&] { return c.vcomp(d, c.vcomp(b, a)) == c.vcomp(c.vcomp(d, b), a); });

  for (int a : twos) {
    int x = c.dom0(c.dom1(a));
    int y = c.cod0(c.dom1(a));
    law("whisker-unit-pre", {{"a", c.token2(a)}}, [&] { return c.whisker_pre(a, c.id1(x)) == a; });
    law("whisker-unit-post", {{"a", c.token2(a)}},
        [&] { return c.whisker_post(c.id1(y), a) == a; });
    for (int f : into[x])
      for (int fp : into[c.dom0(f)])
        law("whisker-pre-assoc", {{"a", c.token2(a)}, {"f", c.token1(f)}, {"f'", c.token1(fp)}},
            [&] {
              return c.whisker_pre(a, c.compose1(f, fp)) == c.whisker_pre(c.whisker_pre(a, f), fp);
            });
    for (int g : out_of[y])
      for (int gp : out_of[c.cod0(g)])
        law("whisker-post-assoc", {{"a", c.token2(a)}, {"g", c.token1(g)}, {"g'", c.token1(gp)}},
            [&] {
              return c.whisker_post(c.compose1(gp, g), a) ==
                     c.whisker_post(gp, c.whisker_post(g, a));
            });
    for (int f : into[x])
      for (int g : out_of[y])
        law("whisker-mixed-assoc", {{"a", c.token2(a)}, {"f", c.token1(f)}, {"g", c.token1(g)}},
            [&] {
              return c.whisker_post(g, c.whisker_pre(a, f)) ==
                     c.whisker_pre(c.whisker_post(g, a), f);
            });
  }
  for (int u : ones) {
    for (int f : into[c.dom0(u)])
      law("whisker-id-pre", {{"u", c.token1(u)}, {"f", c.token1(f)}},
          [&] { return c.whisker_pre(c.id2(u), f) == c.id2(c.compose1(u, f)); });
    for (int g : out_of[c.cod0(u)])
      law("whisker-id-post", {{"u", c.token1(u)}, {"g", c.token1(g)}},
          [&] { return c.whisker_post(g, c.id2(u)) == c.id2(c.compose1(g, u)); });
  }
  for (int a : twos)
    for (int b : from(c.cod1(a))) {
      int x = c.dom0(c.dom1(a));
      int y = c.cod0(c.dom1(a));
      for (int f : into[x])
        law("whisker-pre-distrib", {{"a", c.token2(a)}, {"b", c.token2(b)}, {"f", c.token1(f)}},
            [&] {
              return c.whisker_pre(c.vcomp(b, a), f) ==
                     c.vcomp(c.whisker_pre(b, f), c.whisker_pre(a, f));
            });
      for (int g : out_of[y])
        law("whisker-post-distrib", {{"a", c.token2(a)}, {"b", c.token2(b)}, {"g", c.token1(g)}},
            [&] {
              return c.whisker_post(g, c.vcomp(b, a)) ==
                     c.vcomp(c.whisker_post(g, b), c.whisker_post(g, a));
            });
    }

  // interchange on all compatible pairs
  for (int a : twos) {
    int y = c.cod0(c.dom1(a));
    for (int b : twos) {
      if (c.dom0(c.dom1(b)) != y) continue;
      law("interchange", {{"a", c.token2(a)}, {"b", c.token2(b)}}, [&] {
        int f = c.dom1(a), g = c.cod1(a);
        int fp = c.dom1(b), gp = c.cod1(b);
        int lhs = c.vcomp(c.whisker_pre(b, g), c.whisker_post(fp, a));
        int rhs = c.vcomp(c.whisker_post(gp, a), c.whisker_pre(b, f));
        return lhs == rhs;
      });
    }
  }

  if (fails == 0) rep.pass("laws", "category, sesquicategory and interchange laws hold");
  return rep;
}

// ---------------------------------------------------------------------------
// constructions

std::shared_ptr<ChainTwoCategory> chain_two_category(Poset p) {
  return std::make_shared<ChainTwoCategory>(std::move(p));
}

std::shared_ptr<ChainTwoCategory> oriental(int n) {
  return chain_two_category(Poset::ordinal(n));
}

std::shared_ptr<ExplicitTwoCategory> walking_2cell() {
  auto c = std::make_shared<ExplicitTwoCategory>();
  int x = c->add_object("x");
  int y = c->add_object("y");
  int ix = c->add_one_cell("id_x", x, x, true);
  int iy = c->add_one_cell("id_y", y, y, true);
  int f = c->add_one_cell("f", x, y);
  int g = c->add_one_cell("g", x, y);
  int idix = c->add_two_cell("id_id_x", ix, ix, true);
  int idiy = c->add_two_cell("id_id_y", iy, iy, true);
  int idf = c->add_two_cell("id_f", f, f, true);
  int idg = c->add_two_cell("id_g", g, g, true);
  int al = c->add_two_cell("alpha", f, g);
  c->set_compose1(ix, ix, ix);
  c->set_compose1(iy, iy, iy);
  c->set_compose1(f, ix, f);
  c->set_compose1(iy, f, f);
  c->set_compose1(g, ix, g);
  c->set_compose1(iy, g, g);
  for (int a : {idix, idiy, idf, idg, al}) {
    c->set_vcomp(a, c->id2(c->dom1(a)), a);
    c->set_vcomp(c->id2(c->cod1(a)), a, a);
  }
  // whiskering by identities
  for (int a : {idf, idg, al}) {
    c->set_whisker_pre(a, ix, a);
    c->set_whisker_post(iy, a, a);
  }
  c->set_whisker_pre(idix, ix, idix);
  c->set_whisker_post(ix, idix, idix);
  c->set_whisker_pre(idiy, iy, idiy);
  c->set_whisker_post(iy, idiy, idiy);
  // id 2-cells on f,g whiskered into endpoints
  c->set_whisker_pre(idf, ix, idf);
  c->set_whisker_post(iy, idf, idf);
  c->set_whisker_pre(idg, ix, idg);
  c->set_whisker_post(iy, idg, idg);
  // whiskering the endpoint identities by f/g
  c->set_whisker_post(f, idix, idf);
  c->set_whisker_post(g, idix, idg);
  c->set_whisker_pre(idiy, f, idf);
  c->set_whisker_pre(idiy, g, idg);
  return c;
}

std::shared_ptr<ExplicitTwoCategory> interval_two_category() {
  auto c = std::make_shared<ExplicitTwoCategory>();
  int l = c->add_object("L");
  int r = c->add_object("R");
  int il = c->add_one_cell("id_L", l, l, true);
  int ir = c->add_one_cell("id_R", r, r, true);
  int t = c->add_one_cell("t", l, r);
  int idil = c->add_two_cell("id_id_L", il, il, true);
  int idir = c->add_two_cell("id_id_R", ir, ir, true);
  int idt = c->add_two_cell("id_t", t, t, true);
  c->set_compose1(il, il, il);
  c->set_compose1(ir, ir, ir);
  c->set_compose1(t, il, t);
  c->set_compose1(ir, t, t);
  for (int a : {idil, idir, idt}) {
    c->set_vcomp(a, a, a);
  }
  c->set_whisker_pre(idil, il, idil);
  c->set_whisker_post(il, idil, idil);
  c->set_whisker_pre(idir, ir, idir);
  c->set_whisker_post(ir, idir, idir);
  c->set_whisker_pre(idt, il, idt);
  c->set_whisker_post(ir, idt, idt);
  c->set_whisker_pre(idir, t, idt);
  c->set_whisker_post(t, idil, idt);
  return c;
}

std::shared_ptr<ExplicitTwoCategory> terminal_two_category() {
  auto c = std::make_shared<ExplicitTwoCategory>();
  int s = c->add_object("*");
  int i = c->add_one_cell("id_*", s, s, true);
  int ii = c->add_two_cell("id_id_*", i, i, true);
  c->set_compose1(i, i, i);
  c->set_vcomp(ii, ii, ii);
  c->set_whisker_pre(ii, i, ii);
  c->set_whisker_post(i, ii, ii);
  return c;
}

Materialized explicit_of(const TwoCat& view, Budget* budget) {
  Materialized out;
  out.cat = std::make_shared<ExplicitTwoCategory>();
  std::vector<int> ones = view.all1(budget);
  std::vector<int> twos = view.all2(budget);
  if (budget)
    budget->charge(static_cast<std::int64_t>(ones.size() + twos.size()), "explicit_of");
  for (int x = 0; x < view.n_objects(); ++x) {
    out.cat->add_object(view.object_token(x));
    out.obj_to_view.push_back(x);
  }
  for (int f : ones) {
    bool is_id = view.is_id1(f);
    int nf = out.cat->add_one_cell(view.token1(f), view.dom0(f), view.cod0(f), is_id);
    out.one_to_view.push_back(f);
    out.view_to_one[f] = nf;
  }
  for (int a : twos) {
    bool is_id = view.is_id2(a);
    int na = out.cat->add_two_cell(view.token2(a), out.view_to_one.at(view.dom1(a)),
                                   out.view_to_one.at(view.cod1(a)), is_id);
    out.two_to_view.push_back(a);
    out.view_to_two[a] = na;
  }
  for (int f : ones)
    for (int g : ones)
      if (view.cod0(f) == view.dom0(g))
        out.cat->set_compose1(out.view_to_one[g], out.view_to_one[f],
                              out.view_to_one.at(view.compose1(g, f)));
  for (int a : twos)
    for (int b : twos)
      if (view.cod1(a) == view.dom1(b))
        out.cat->set_vcomp(out.view_to_two[b], out.view_to_two[a],
                           out.view_to_two.at(view.vcomp(b, a)));
  for (int a : twos)
    for (int f : ones) {
      if (view.cod0(f) == view.dom0(view.dom1(a)))
        out.cat->set_whisker_pre(out.view_to_two[a], out.view_to_one[f],
                                 out.view_to_two.at(view.whisker_pre(a, f)));
      if (view.dom0(f) == view.cod0(view.dom1(a)))
        out.cat->set_whisker_post(out.view_to_one[f], out.view_to_two[a],
                                  out.view_to_two.at(view.whisker_post(f, a)));
    }
  return out;
}

TwoFunctor Materialized::iso_from_view(std::shared_ptr<const TwoCat> view) const {
  auto v2one = view_to_one;
  auto v2two = view_to_two;
  return TwoFunctor(std::move(view), cat, [](int x) { return x; },
                    [v2one](int f) { return v2one.at(f); },
                    [v2two](int a) { return v2two.at(a); });
}

TwoFunctor Materialized::iso_to_view(std::shared_ptr<const TwoCat> view) const {
  auto o2v = one_to_view;
  auto t2v = two_to_view;
  return TwoFunctor(cat, std::move(view), [](int x) { return x; },
                    [o2v](int f) { return o2v[f]; }, [t2v](int a) { return t2v[a]; });
}

std::shared_ptr<ExplicitTwoCategory> explicit_of_chain(const ChainTwoCategory& c, Budget* budget) {
  return explicit_of(c, budget).cat;
}

std::shared_ptr<ExplicitTwoCategory> product_with_interval(std::shared_ptr<const TwoCat> c,
                                                           Budget* budget) {
  IntervalProduct prod(std::move(c));
  return explicit_of(prod, budget).cat;
}

}  // namespace thoma2
