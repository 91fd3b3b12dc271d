#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace schemoid;
using namespace schemoid::testing;

namespace {

ColoredCategory singleton_colored(const FiniteCategory& c) {
  std::vector<int> colors(c.morphism_count());
  for (int f = 0; f < c.morphism_count(); ++f) colors[f] = f;
  return ColoredCategory(c, colors, c.morphism_count());
}

} // namespace

TEST_CASE("colored category construction validates the coloring") {
  auto c = arrow_category();
  CHECK_THROWS_AS(ColoredCategory(c, {0, 1}, 2), PreconditionError);        // size mismatch
  CHECK_THROWS_AS(ColoredCategory(c, {0, 1, 3}, 3), PreconditionError);     // out of range
  CHECK_THROWS_AS(ColoredCategory(c, {0, 0, 2}, 3), PreconditionError);     // empty color
  CHECK_NOTHROW(ColoredCategory(c, {0, 1, 2}, 3));
}

TEST_CASE("object classes from shared colors") {
  // four objects; one color holds id_0 and id_2, so 0 ~ 2
  auto c = discrete_category(4);
  ColoredCategory x(c, {0, 1, 0, 2}, 3);
  auto p = object_classes(x);
  CHECK(p.class_count == 3);
  CHECK(p.same(0, 2));
  CHECK(!p.same(0, 1));
  // classes are ordered by minimum representative
  CHECK(p.class_of[0] == 0);
  CHECK(p.class_of[1] == 1);
  CHECK(p.class_of[3] == 2);
}

TEST_CASE("structure constants match the scheme intersection numbers") {
  // the pair category of a scheme: p(sigma,tau,mu) here composes tau then
  // sigma, so it must equal the scheme's p(tau,sigma,mu)
  for (const auto& s : {hamming_scheme(2, 2), hamming_scheme(1, 3), johnson_scheme(3, 1),
                        group_scheme(FiniteGroup::symmetric(3))}) {
    auto x = scheme_schemoid(s);
    auto table = structure_constants(x);
    auto c = scheme_constants(s);
    REQUIRE(table.schemoid);
    for (int i = 0; i < s.relation_count; ++i)
      for (int j = 0; j < s.relation_count; ++j)
        for (int k = 0; k < s.relation_count; ++k) CHECK(table.at(i, j, k) == c.at(j, i, k));
  }
}

TEST_CASE("fiber count identity") {
  // summing p(sigma,tau,mu)*|mu| over mu recovers the number of composable
  // pairs in sigma x tau
  auto s = hamming_scheme(2, 2);
  auto x = scheme_schemoid(s);
  auto table = structure_constants(x);
  REQUIRE(table.schemoid);
  auto fibers = x.fibers();
  for (int sigma = 0; sigma < x.color_count; ++sigma)
    for (int tau = 0; tau < x.color_count; ++tau) {
      long long direct = 0;
      for (int l : fibers[sigma])
        for (int k : fibers[tau])
          if (x.base.composable(l, k)) ++direct;
      long long via_p = 0;
      for (int mu = 0; mu < x.color_count; ++mu)
        via_p += table.at(sigma, tau, mu) * static_cast<long long>(fibers[mu].size());
      CHECK(direct == via_p);
    }
}

TEST_CASE("non-schemoid coloring yields a witness") {
  // arrow category with id_x and f sharing a color: composing with {id_y}
  // reaches f but not id_x, so the fiber count is not constant
  auto c = arrow_category();
  ColoredCategory x(c, {0, 1, 0}, 2);
  auto table = structure_constants(x);
  CHECK(!table.schemoid);
  REQUIRE(table.witness.has_value());
  CHECK(table.witness->mu == 0);
}

TEST_CASE("natural coloring detection") {
  auto c = arrow_category();
  SUBCASE("singleton colors are natural") {
    auto x = singleton_colored(c);
    CHECK(is_naturally_colored(x).natural);
  }
  SUBCASE("a color mixing endpoint identity colors is not") {
    ColoredCategory x(c, {0, 1, 0}, 2); // {id_x, f}, {id_y}
    auto r = is_naturally_colored(x);
    CHECK(!r.natural);
    REQUIRE(r.witness.has_value());
    auto [f, g] = *r.witness;
    CHECK(x.color(f) == x.color(g));
  }
}

TEST_CASE("color quiver") {
  auto s = hamming_scheme(2, 2);
  auto x = scheme_schemoid(s);
  auto q = color_quiver(x);
  CHECK(q.object_colors == std::vector<int>{0});
  for (int col = 0; col < x.color_count; ++col) {
    CHECK(q.sbar[col] == 0);
    CHECK(q.tbar[col] == 0);
  }

  auto c = arrow_category();
  ColoredCategory bad(c, {0, 1, 0}, 2);
  CHECK_THROWS_AS(color_quiver(bad), PreconditionError);

  auto y = singleton_colored(c);
  auto qy = color_quiver(y);
  CHECK(qy.object_colors == std::vector<int>{0, 1});
  CHECK(qy.sbar[2] == 0);
  CHECK(qy.tbar[2] == 1);
}

TEST_CASE("tameness") {
  SUBCASE("group schemes are tame") {
    for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
      auto x = scheme_schemoid(group_scheme(g));
      auto r = tameness(x);
      CHECK(r.applicable);
      CHECK(r.unital);
      CHECK(r.tii);
      CHECK(r.tiii);
      CHECK(r.tame);
    }
  }
  SUBCASE("binary Hamming schemes beyond one bit are not tame") {
    auto x = scheme_schemoid(hamming_scheme(2, 2));
    auto r = tameness(x);
    CHECK(r.applicable);
    CHECK(r.unital);
    CHECK(!r.tiii); // distance 1 then 1 reaches both 0 and 2
    CHECK(!r.tame);
  }
  SUBCASE("a color mixing an identity with another morphism is not unital") {
    auto c = arrow_category();
    ColoredCategory x(c, {0, 1, 0}, 2); // color 0 = {id_x, f}
    auto r = tameness(x);
    CHECK(!r.unital);
    CHECK(!r.tame);
  }
  SUBCASE("identities sharing a color is a schemoid but fails composability") {
    auto c = arrow_category();
    ColoredCategory x(c, {0, 0, 1}, 2); // both identities share a color
    auto r = tameness(x);
    CHECK(r.applicable);
    CHECK(r.unital);
    CHECK(!r.tiii); // {f} x {f} is a path in the class diagram with no composite
    CHECK(!r.tame);
  }
}

TEST_CASE("colored morphisms") {
  auto s1 = hamming_scheme(1, 2);
  auto s2 = hamming_scheme(2, 2);
  auto x1 = scheme_schemoid(s1);
  auto x2 = scheme_schemoid(s2);

  // embed the 1-bit pairs into the 2-bit pairs by doubling the bit:
  // 0 -> 00 (point 0), 1 -> 11 (point 3); distances double
  CatFunctor u;
  u.object_map = {0, 3};
  u.morphism_map.resize(x1.base.morphism_count());
  for (int f = 0; f < x1.base.morphism_count(); ++f) {
    int sx = u.object_map[x1.base.src(f)], tx = u.object_map[x1.base.tgt(f)];
    u.morphism_map[f] = sx * s2.point_count + tx;
  }
  REQUIRE(check_cat_functor(x1.base, x2.base, u).ok());
  auto r = check_colored_morphism(u, x1, x2);
  CHECK(r.valid);
  CHECK(r.color_map == std::vector<int>{0, 2});

  // a functor splitting a color across target colors is rejected
  CatFunctor v;
  v.object_map = {0, 1}; // 00 and 01: distance 1
  v.morphism_map.resize(x1.base.morphism_count());
  for (int f = 0; f < x1.base.morphism_count(); ++f) {
    int sx = v.object_map[x1.base.src(f)], tx = v.object_map[x1.base.tgt(f)];
    v.morphism_map[f] = sx * s2.point_count + tx;
  }
  auto r2 = check_colored_morphism(v, x1, x2);
  CHECK(r2.valid); // distances are 0 and 1 consistently, so still a colored morphism
  CHECK(r2.color_map == std::vector<int>{0, 1});
}

TEST_CASE("odd-distance criterion hypotheses") {
  auto s = hamming_scheme(1, 2);
  auto x = scheme_schemoid(s);
  CatFunctor id;
  id.object_map = {0, 1};
  id.morphism_map = {0, 1, 2, 3};
  CHECK(prop_app_hypotheses(id, x, x, 1));  // distance 1 is odd, flips are mutually inverse
  CHECK(!prop_app_hypotheses(id, x, x, 0)); // distance 0 is even
}
