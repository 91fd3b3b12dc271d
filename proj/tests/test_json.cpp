#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "schemoid/builders.hpp"
#include "schemoid/json_io.hpp"

using namespace schemoid;
using namespace schemoid::testing;
using nlohmann::json;

TEST_CASE("category round trip") {
  for (const auto& c : {FiniteCategory::terminal(), arrow_category(), discrete_category(3),
                        prop_app_example().x.base}) {
    auto j = category_to_json(c);
    auto back = category_from_json(j);
    CHECK(back.object_count == c.object_count);
    CHECK(back.identity_of == c.identity_of);
    CHECK(back.compose_table == c.compose_table);
    // byte stability
    CHECK(canonical_dump(j) == canonical_dump(category_to_json(back)));
  }
}

TEST_CASE("category parse errors") {
  auto j = category_to_json(arrow_category());
  SUBCASE("missing field") {
    j.erase("identity");
    CHECK_THROWS_WITH_AS(category_from_json(j), "missing field: identity", PreconditionError);
  }
  SUBCASE("endpoint out of range") {
    j["morphisms"][2]["tgt"] = 9;
    CHECK_THROWS_AS(category_from_json(j), PreconditionError);
  }
  SUBCASE("non-composable compose entry") {
    j["compose"].push_back({2, 2, 2});
    CHECK_THROWS_AS(category_from_json(j), PreconditionError);
  }
  SUBCASE("wrong identity length") {
    j["identity"] = {0};
    CHECK_THROWS_AS(category_from_json(j), PreconditionError);
  }
}

TEST_CASE("colored category round trip") {
  for (const auto& x : {group_schemoid(FiniteGroup::cyclic(3)), pullback_counterexample().x,
                        scheme_schemoid(hamming_scheme(2, 2))}) {
    auto j = colored_to_json(x);
    auto back = colored_from_json(j);
    CHECK(back.color_of == x.color_of);
    CHECK(back.color_count == x.color_count);
    CHECK(canonical_dump(j) == canonical_dump(colored_to_json(back)));
  }

  // a color index gap breaks the partition property
  auto j = colored_to_json(pullback_counterexample().x);
  j["colors"] = {0, 2, 0};
  CHECK_THROWS_AS(colored_from_json(j), PreconditionError);
}

TEST_CASE("scheme round trip") {
  for (const auto& s : {hamming_scheme(2, 2), johnson_scheme(4, 2),
                        group_scheme(FiniteGroup::symmetric(3))}) {
    auto j = scheme_to_json(s);
    auto back = scheme_from_json(j);
    CHECK(back.relation_of == s.relation_of);
    CHECK(back.relation_count == s.relation_count);
    CHECK(canonical_dump(j) == canonical_dump(scheme_to_json(back)));
  }

  auto j = scheme_to_json(hamming_scheme(1, 2));
  SUBCASE("relation axioms are enforced on parse") {
    j["relations"][0][1] = 0; // breaks the diagonal property
    CHECK_THROWS_AS(scheme_from_json(j), PreconditionError);
  }
  SUBCASE("stale adjoint is rejected") {
    j["adjoint"] = {1, 0};
    CHECK_THROWS_WITH_AS(scheme_from_json(j), "adjoint: inconsistent with relations",
                         PreconditionError);
  }
}

TEST_CASE("functor round trip") {
  auto fx = pullback_counterexample();
  auto j = functor_to_json(fx.F);
  auto back = functor_from_json(j);
  CHECK(back.object_sets == fx.F.object_sets);
  CHECK(back.morphism_maps == fx.F.morphism_maps);
  CHECK(canonical_dump(j) == canonical_dump(functor_to_json(back)));
  CHECK(check_functor(fx.x.base, back).ok());

  CHECK_THROWS_AS(functor_from_json(json{{"object_sets", json::array()}}), PreconditionError);
}
