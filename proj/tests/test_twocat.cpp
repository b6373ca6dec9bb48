#include <doctest.h>

#include "oracles.hpp"
#include "thoma2/twocat.hpp"

using namespace thoma2;

TEST_CASE("walking 2-cell validates") {
  auto w = walking_2cell();
  CHECK(w->n_objects() == 2);
  CHECK(w->n1() == 4);
  CHECK(w->n2() == 5);
  CHECK(w->graph().validate().ok());
  CHECK(validate_two_category(*w).ok());
  // hom(x,y) has two 1-cells and one non-identity arrow between them
  int x = w->object_index("x"), y = w->object_index("y");
  CHECK(w->hom1(x, y).size() == 2);
  int f = w->find_one_cell("f"), g = w->find_one_cell("g");
  CHECK(w->hom2(f, g).size() == 1);
  CHECK(w->hom2(g, f).empty());
}

TEST_CASE("corrupting a whisker entry is detected with a located quadruple") {
  auto w = walking_2cell();
  // divert a whisker: id_iy ∘ f should be id_f; point it at alpha's codomain id instead
  int idiy = w->find_two_cell("id_id_y");
  int f = w->find_one_cell("f");
  int idg = w->find_two_cell("id_g");
  w->mutable_whisker_pre()[{idiy, f}] = idg;
  Report rep = validate_two_category(*w);
  CHECK(!rep.ok());
  bool located = false;
  for (const auto& c : rep.checks)
    if (!c.ok() && !c.counterexample.is_null()) located = true;
  CHECK(located);
}

TEST_CASE("chain model of [2]") {
  auto c = oriental(2);
  int h02 = -1, h012 = -1;
  std::vector<int> hom = c->hom1(0, 2);
  CHECK(hom.size() == 2);
  for (int f : hom) {
    if (c->token1(f) == "(0.2)") h02 = f;
    if (c->token1(f) == "(0.1.2)") h012 = f;
  }
  REQUIRE(h02 >= 0);
  REQUIRE(h012 >= 0);
  // one non-identity 2-cell: <01;12> => <02>
  CHECK(c->hom2(h012, h02).size() == 1);
  CHECK(c->hom2(h02, h012).empty());
  // composition is concatenation with endpoint dedup
  int f01 = c->hom1(0, 1)[0];
  int f12 = c->hom1(1, 2)[0];
  CHECK(c->compose1(f12, f01) == h012);
  // strict units
  CHECK(c->compose1(f01, c->id1(0)) == f01);
  CHECK(c->compose1(c->id1(1), f01) == f01);
}

TEST_CASE("oriental counts") {
  auto o2 = oriental(2);
  Budget b(100000);
  std::vector<int> ones = o2->all1(&b);
  std::vector<int> twos = o2->all2(&b);
  CHECK(ones.size() == 7);
  CHECK(twos.size() == 8);
  int nonid = 0;
  for (int a : twos)
    if (!o2->is_id2(a)) ++nonid;
  CHECK(nonid == 1);

  auto o1 = oriental(1);
  Budget b1(1000);
  CHECK(o1->all1(&b1).size() == 3);
  for (int a : o1->all2(&b1)) CHECK(o1->is_id2(a));

  // oriental(3): hom(0,3) has 4 one-cells; its local order is the face
  // lattice of a square
  auto o3 = oriental(3);
  std::vector<int> h03 = o3->hom1(0, 3);
  CHECK(h03.size() == 4);
  int top = -1, bot = -1;
  for (int f : h03) {
    if (o3->token1(f) == "(0.1.2.3)") top = f;
    if (o3->token1(f) == "(0.3)") bot = f;
  }
  REQUIRE(top >= 0);
  REQUIRE(bot >= 0);
  for (int f : h03) {
    CHECK(o3->hom2(top, f).size() == 1);
    CHECK(o3->hom2(f, bot).size() == 1);
  }
  int strict = 0;
  for (int f : h03)
    for (int g : h03)
      if (f != g && !o3->hom2(f, g).empty()) ++strict;
  CHECK(strict == 5);  // top>m1, top>m2, m1>bot, m2>bot, top>bot: a square's face lattice
}

TEST_CASE("2-cell relation is a partial order on hom-sets") {
  Rng rng(5);
  for (int t = 0; t < 8; ++t) {
    Poset p = oracle::random_poset(rng, 2 + static_cast<int>(rng() % 5));
    auto c = chain_two_category(p);
    Budget b(100000);
    std::vector<int> ones = c->all1(&b);
    for (int f : ones)
      for (int g : ones) {
        if (c->dom0(f) != c->dom0(g) || c->cod0(f) != c->cod0(g)) continue;
        bool fg = !c->hom2(f, g).empty();
        bool gf = !c->hom2(g, f).empty();
        CHECK(!c->hom2(f, f).empty());           // reflexive
        if (f != g) CHECK(!(fg && gf));          // antisymmetric
        if (fg)
          for (int h : ones) {
            if (c->dom0(h) != c->dom0(f) || c->cod0(h) != c->cod0(f)) continue;
            if (!c->hom2(g, h).empty()) CHECK(!c->hom2(f, h).empty());  // transitive
          }
      }
  }
}

TEST_CASE("explicit_of_chain validates") {
  auto o2 = oriental(2);
  Budget b(100000);
  auto mat = explicit_of_chain(*o2, &b);
  CHECK(mat->n_objects() == 3);
  CHECK(mat->n1() == 7);
  CHECK(mat->n2() == 8);
  CHECK(validate_two_category(*mat).ok());

  auto f1 = chain_two_category(chain_poset(Poset::ordinal(1)));
  auto m1 = explicit_of_chain(*f1, &b);
  CHECK(m1->n_objects() == 3);
  CHECK(m1->n1() == 5);
  CHECK(validate_two_category(*m1).ok());

  auto c1 = chain_two_category(Poset::ordinal(1));
  auto mc1 = explicit_of_chain(*c1, &b);
  CHECK(mc1->n_objects() == 2);
  CHECK(mc1->n1() == 3);
}

TEST_CASE("interval 2-category and products") {
  auto iv = interval_two_category();
  CHECK(iv->n1() == 3);
  CHECK(validate_two_category(*iv).ok());

  Budget b(100000);
  auto o1m = explicit_of_chain(*oriental(1), &b);
  auto prod = product_with_interval(o1m, &b);
  CHECK(prod->n_objects() == 2 * o1m->n_objects());
  // 1-cells: (f, idL), (f, idR), (f, t)
  CHECK(prod->n1() == 3 * o1m->n1());
  CHECK(validate_two_category(*prod).ok());

  auto o2m = explicit_of_chain(*oriental(2), &b);
  auto prod2 = product_with_interval(o2m, &b);
  CHECK(validate_two_category(*prod2).ok());
}

TEST_CASE("sub-2-category views") {
  auto o2 = oriental(2);
  auto sub = SubTwoCat(o2, {0, 1});
  CHECK(sub.n_objects() == 2);
  Budget b(1000);
  CHECK(sub.all1(&b).size() == 3);  // (0),(1),(0.1)
  CHECK(validate_two_category(sub).ok());
}

TEST_CASE("functor validation catches breakage") {
  auto o2 = oriental(2);
  auto t = terminal_two_category();
  TwoFunctor bang(o2, t, [](int) { return 0; }, [&](int) { return 0; }, [&](int) { return 0; });
  CHECK(bang.validate().ok());

  // a non-functorial assignment on 1-cells
  auto o1 = oriental(1);
  auto w = walking_2cell();
  int wx = w->object_index("x");
  int wf = w->find_one_cell("f");
  TwoFunctor broken(
      o1, w, [&](int) { return wx; },
      [&](int f) { return o1->is_id1(f) ? w->id1(wx) : wf; },  // f: x -> x is ill-framed
      [&](int) { return w->id2(w->id1(wx)); });
  CHECK(!broken.validate().ok());
}

TEST_CASE("co-dual reverses 2-cells") {
  auto o2 = oriental(2);
  auto co = std::make_shared<CoTwoCat>(o2);
  int h02 = -1, h012 = -1;
  for (int f : o2->hom1(0, 2)) {
    if (o2->token1(f) == "(0.2)") h02 = f;
    else h012 = f;
  }
  CHECK(co->hom2(h02, h012).size() == 1);
  CHECK(co->hom2(h012, h02).empty());
  CHECK(validate_two_category(*co).ok());
}
