#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

#include <numeric>

using namespace schemoid;

TEST_CASE("scheme families validate") {
  CHECK(validate_scheme(hamming_scheme(1, 2)).ok());
  CHECK(validate_scheme(hamming_scheme(3, 2)).ok());
  CHECK(validate_scheme(hamming_scheme(2, 3)).ok());
  CHECK(validate_scheme(johnson_scheme(4, 2)).ok());
  CHECK(validate_scheme(johnson_scheme(5, 2)).ok());
  CHECK(validate_scheme(group_scheme(FiniteGroup::symmetric(3))).ok());
  CHECK(validate_scheme(group_scheme(FiniteGroup::product(FiniteGroup::cyclic(2),
                                                          FiniteGroup::cyclic(2)))).ok());
}

TEST_CASE("validation rejects a perturbed scheme") {
  auto s = hamming_scheme(2, 2);
  s.relation_of[1] = 2; // (00,01) moved to distance 2, transpose breaks
  CHECK(!validate_scheme(s).ok());
}

TEST_CASE("Hamming parameters") {
  auto s = hamming_scheme(2, 3);
  CHECK(s.point_count == 9);
  CHECK(s.relation_count == 3);
  auto c = scheme_constants(s);
  // valency of distance k is C(n,k)(q-1)^k
  CHECK(c.valency == std::vector<long long>{1, 4, 4});
  CHECK(c.at(1, 1, 0) == 4);
  // schemes here are symmetric: every relation is self-adjoint
  for (int i = 0; i < s.relation_count; ++i) CHECK(c.adjoint[i] == i);
}

TEST_CASE("Johnson parameters") {
  auto s = johnson_scheme(4, 2);
  CHECK(s.point_count == 6);
  CHECK(s.relation_count == 3);
  auto c = scheme_constants(s);
  // valency of distance k is C(d,k)C(v-d,k)
  CHECK(c.valency == std::vector<long long>{1, 4, 1});
  CHECK(c.at(1, 1, 0) == 4);
}

TEST_CASE("group scheme is thin and recovers the group") {
  auto g = FiniteGroup::symmetric(3);
  auto s = group_scheme(g);
  CHECK(is_thin(s));
  auto h = thin_scheme_group(s);
  auto iso = group_isomorphism(g, h);
  CHECK(iso.has_value());
}

TEST_CASE("group utilities") {
  auto z4 = FiniteGroup::cyclic(4);
  auto v4 = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(z4.element_order(1) == 4);
  CHECK(v4.element_order(1) == 2);
  CHECK(!group_isomorphism(z4, v4).has_value());

  auto z6 = FiniteGroup::cyclic(6);
  auto z2z3 = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
  CHECK(group_isomorphism(z6, z2z3).has_value());

  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order == 6);
  CHECK(!group_isomorphism(z6, s3).has_value());
  for (int a = 0; a < s3.order; ++a) CHECK(s3.times(a, s3.inverse(a)) == 0);
}

TEST_CASE("standard representation identity") {
  CHECK(standard_representation_check(hamming_scheme(2, 6))); // 36 points
  CHECK(standard_representation_check(hamming_scheme(3, 2)));
  CHECK(standard_representation_check(johnson_scheme(5, 2)));
  CHECK(standard_representation_check(group_scheme(FiniteGroup::symmetric(3))));

  auto s = hamming_scheme(2, 2);
  s.relation_of[1] = 2;
  std::string detail;
  CHECK(!standard_representation_check(s, &detail));
  CHECK(!detail.empty());
}

TEST_CASE("thin schemes have trivial thin residue") {
  // every product s·s* is the identity relation when all valencies are one
  for (const auto& g : {FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)}) {
    auto t = thin_residue(group_scheme(g));
    CHECK(std::accumulate(t.begin(), t.end(), 0) == 1);
  }
}

TEST_CASE("thin residue of binary Hamming schemes is the even-distance set") {
  for (int n : {1, 2, 3}) {
    auto s = hamming_scheme(n, 2);
    auto t = thin_residue(s);
    for (int d = 0; d <= n; ++d) CHECK(static_cast<bool>(t[d]) == (d % 2 == 0));
  }
  // over larger alphabets the residue is everything
  for (auto [n, q] : {std::pair{1, 3}, {2, 3}, {1, 4}}) {
    auto t = thin_residue(hamming_scheme(n, q));
    CHECK(std::accumulate(t.begin(), t.end(), 0) == n + 1);
  }
}

TEST_CASE("factor schemes") {
  auto g = FiniteGroup::symmetric(3);
  auto s = group_scheme(g);
  // the alternating subgroup as a closed subset of relations
  std::vector<char> alt(s.relation_count, 0);
  int a_cycle = -1;
  for (int e = 0; e < g.order; ++e)
    if (e == 0 || g.element_order(e) == 3) {
      alt[e] = 1;
      if (e != 0) a_cycle = e;
    }
  REQUIRE(is_closed_subset(s, alt));
  auto f = factor_scheme(s, alt);
  CHECK(validate_scheme(f.scheme).ok());
  CHECK(f.scheme.point_count == 2);
  CHECK(is_thin(f.scheme));
  auto q = thin_scheme_group(f.scheme);
  CHECK(group_isomorphism(q, FiniteGroup::cyclic(2)).has_value());

  // a single three-cycle with the identity misses its inverse: not closed
  std::vector<char> bad(s.relation_count, 0);
  bad[0] = 1;
  bad[a_cycle] = 1;
  CHECK(!is_closed_subset(s, bad));
  CHECK_THROWS_AS(factor_scheme(s, bad), PreconditionError);

  // factoring the binary Hamming scheme by its residue leaves two blocks
  auto h = hamming_scheme(3, 2);
  auto fh = factor_scheme(h, thin_residue(h));
  CHECK(fh.scheme.point_count == 2);
  CHECK(is_thin(fh.scheme));
}

TEST_CASE("pair schemoid of a scheme") {
  auto s = johnson_scheme(3, 1);
  auto x = scheme_schemoid(s);
  CHECK(validate_category(x.base).ok());
  CHECK(x.base.object_count == 3);
  CHECK(x.base.morphism_count() == 9);
  CHECK(structure_constants(x).schemoid);
}

TEST_CASE("quotient group matches the thin-residue factor group") {
  SUBCASE("Hamming schemes") {
    for (auto [n, q] : {std::pair{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}, {1, 4}}) {
      auto r = thin_residue_crosscheck(hamming_scheme(n, q));
      CHECK(r.holds);
    }
  }
  SUBCASE("Johnson schemes") {
    for (auto [v, d] : {std::pair{2, 1}, {3, 1}, {4, 2}}) {
      auto r = thin_residue_crosscheck(johnson_scheme(v, d));
      CHECK(r.holds);
    }
  }
  SUBCASE("group schemes") {
    auto z2 = FiniteGroup::cyclic(2);
    for (const auto& g : {z2, FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
                          FiniteGroup::product(z2, z2), FiniteGroup::symmetric(3)}) {
      auto r = thin_residue_crosscheck(group_scheme(g));
      CHECK(r.holds);
      CHECK(r.group_order == g.order);
    }
  }
}

TEST_CASE("quotient of a group pair schemoid recovers the group") {
  auto z2 = FiniteGroup::cyclic(2);
  for (const auto& g : {z2, FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
                        FiniteGroup::product(z2, z2), FiniteGroup::symmetric(3)}) {
    auto x = scheme_schemoid(group_scheme(g));
    auto q = quotient_category(x);
    REQUIRE(q.status == QuotientResult::Status::Finite);
    auto h = group_from_quotient(q);
    CHECK(group_isomorphism(g, h).has_value());
  }
}
