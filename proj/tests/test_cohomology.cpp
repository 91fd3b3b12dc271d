#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schemoid/cohomology.hpp"
#include "schemoid/scheme.hpp"

#include <numeric>
#include <random>

using namespace schemoid;

namespace {

IntMatrix make(int rows, int cols, std::vector<long> entries) {
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = entries[static_cast<size_t>(i) * cols + j];
  return m;
}

CohomologyGroup z_group(long long rank) { return {rank, {}}; }
CohomologyGroup torsion_group(std::vector<long long> t) {
  CohomologyGroup g;
  for (long long v : t) g.torsion.emplace_back(static_cast<long>(v));
  return g;
}

mpz_class det2(const IntMatrix& m) {
  return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

FiniteMonoid cyclic_monoid(int n) {
  FiniteMonoid m;
  m.element_count = n;
  m.is_group = true;
  m.mult.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.mult[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return m;
}

MonoidModule cyclic_module(int n, const IntMatrix& t) {
  MonoidModule mod;
  mod.rank = t.rows;
  mod.action.resize(n);
  mod.action[0] = IntMatrix::identity(t.rows);
  for (int k = 1; k < n; ++k) mod.action[k] = mod.action[k - 1].times(t);
  return mod;
}

} // namespace

TEST_CASE("smith normal form on documented matrices") {
  SUBCASE("diag(2,3) normalizes to diag(1,6)") {
    auto r = smith_normal_form(make(2, 2, {2, 0, 0, 3}));
    CHECK(r.invariant_factors == std::vector<mpz_class>{1, 6});
  }
  SUBCASE("zero matrix") {
    auto r = smith_normal_form(make(2, 3, {0, 0, 0, 0, 0, 0}));
    CHECK(r.invariant_factors.empty());
    CHECK(r.d.is_zero());
    CHECK(r.u.a == IntMatrix::identity(2).a);
    CHECK(r.v.a == IntMatrix::identity(3).a);
  }
  SUBCASE("[[1,2],[3,4]] has factors 1,2") {
    auto m = make(2, 2, {1, 2, 3, 4});
    auto r = smith_normal_form(m);
    CHECK(r.invariant_factors == std::vector<mpz_class>{1, 2});
    CHECK(r.u.times(m).times(r.v).a == r.d.a);
    CHECK(abs(det2(r.u)) == 1);
    CHECK(abs(det2(r.v)) == 1);
  }
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4);
    int cols = 1 + static_cast<int>(rng() % 4);
    IntMatrix m(rows, cols);
    for (auto& v : m.a) v = entry(rng);

    auto r = smith_normal_form(m);
    // transforms certify the diagonalization
    CHECK(r.u.times(m).times(r.v).a == r.d.a);
    // divisibility chain
    for (size_t i = 0; i + 1 < r.invariant_factors.size(); ++i)
      CHECK(r.invariant_factors[i + 1] % r.invariant_factors[i] == 0);
    // fast path agrees with the transform-tracking engine
    CHECK(invariant_factors(m) == r.invariant_factors);
    // mod-p rank counts the factors not killed by p
    for (long p : {2L, 3L, 5L}) {
      int expect = 0;
      for (const auto& f : r.invariant_factors)
        if (f % p != 0) ++expect;
      CHECK(mod_p_rank(m, p) == expect);
    }
  }
}

TEST_CASE("invariant factors match the gcd-of-minors oracle on 2xN matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 80; ++trial) {
    int cols = 2 + static_cast<int>(rng() % 3);
    IntMatrix m(2, cols);
    for (auto& v : m.a) v = entry(rng);
    auto f = invariant_factors(m);

    mpz_class g1 = 0, g2 = 0;
    for (const auto& v : m.a) g1 = gcd(g1, v);
    for (int i = 0; i < cols; ++i)
      for (int j = i + 1; j < cols; ++j) {
        mpz_class minor = m.at(0, i) * m.at(1, j) - m.at(0, j) * m.at(1, i);
        g2 = gcd(g2, minor);
      }
    if (g1 == 0) {
      CHECK(f.empty());
    } else if (g2 == 0) {
      REQUIRE(f.size() == 1);
      CHECK(f[0] == g1);
    } else {
      REQUIRE(f.size() == 2);
      CHECK(f[0] == g1);
      CHECK(f[0] * f[1] == g2);
    }
  }
}

TEST_CASE("cochain cohomology on tiny complexes") {
  SUBCASE("single Z") {
    CochainComplex c;
    c.dims = {1};
    CHECK(cochain_cohomology(c) == std::vector<CohomologyGroup>{z_group(1)});
  }
  SUBCASE("multiplication by two") {
    CochainComplex c;
    c.dims = {1, 1};
    c.d.push_back(make(1, 1, {2}));
    auto h = cochain_cohomology(c);
    CHECK(h[0] == z_group(0));
    CHECK(h[1] == torsion_group({2}));
  }
  SUBCASE("periodic complex for order two") {
    CochainComplex c;
    c.dims = {1, 1, 1, 1, 1};
    for (int k = 0; k < 4; ++k) c.d.push_back(make(1, 1, {k % 2 == 0 ? 0 : 2}));
    auto h = cochain_cohomology(c);
    CHECK(h[0] == z_group(1));
    CHECK(h[1] == z_group(0));
    CHECK(h[2] == torsion_group({2}));
    CHECK(h[3] == z_group(0));
    CHECK(h[4] == torsion_group({2}));
  }
  SUBCASE("non-complexes are rejected") {
    CochainComplex c;
    c.dims = {1, 1, 1};
    c.d.push_back(make(1, 1, {1}));
    c.d.push_back(make(1, 1, {1}));
    CHECK_THROWS_AS(cochain_cohomology(c), PreconditionError);
  }
}

TEST_CASE("bar complex of small groups") {
  SUBCASE("trivial monoid") {
    auto m = cyclic_monoid(1);
    auto c = bar_cochain_complex(m, MonoidModule::trivial(m), 4);
    auto h = cochain_cohomology(c, true);
    CHECK(h[0] == z_group(1));
    for (int k = 1; k <= 4; ++k) CHECK(h[k].trivial());
  }
  SUBCASE("order two, integer coefficients") {
    auto m = cyclic_monoid(2);
    auto c = bar_cochain_complex(m, MonoidModule::trivial(m), 5);
    auto h = cochain_cohomology(c, true);
    CHECK(h[0] == z_group(1));
    CHECK(h[1].trivial());
    CHECK(h[2] == torsion_group({2}));
    CHECK(h[3].trivial());
    CHECK(h[4] == torsion_group({2}));
    CHECK(h[5].trivial());
    // mod 2 the dimensions are one in every degree
    auto dims = mod_p_cohomology(c, 2);
    for (int k = 0; k <= 5; ++k) CHECK(dims[k] == 1);
  }
  SUBCASE("order three, degrees up to two") {
    auto m = cyclic_monoid(3);
    auto c = bar_cochain_complex(m, MonoidModule::trivial(m), 2);
    auto h = cochain_cohomology(c, true);
    CHECK(h[0] == z_group(1));
    CHECK(h[1].trivial());
    CHECK(h[2] == torsion_group({3}));
  }
  SUBCASE("module validation") {
    auto m = cyclic_monoid(2);
    CHECK(validate_module(m, MonoidModule::trivial(m)).ok());
    CHECK(validate_module(m, cyclic_module(2, make(1, 1, {-1}))).ok());
    MonoidModule bad = MonoidModule::trivial(m);
    bad.action[1] = make(1, 1, {2}); // 2*2 != identity action
    CHECK(!validate_module(m, bad).ok());
  }
}

TEST_CASE("cyclic and bar resolutions agree") {
  struct Case {
    int n;
    IntMatrix t;
  };
  std::vector<Case> cases;
  for (int n : {2, 3, 4}) cases.push_back({n, IntMatrix::identity(1)});
  cases.push_back({2, make(1, 1, {-1})});
  cases.push_back({4, make(1, 1, {-1})});            // sign through the order-4 generator
  cases.push_back({2, make(2, 2, {0, 1, 1, 0})});    // swap module
  cases.push_back({3, make(2, 2, {0, -1, 1, -1})});  // planar rotation of order 3
  cases.push_back({4, make(2, 2, {0, -1, 1, 0})});   // planar rotation of order 4

  for (const auto& cs : cases) {
    CAPTURE(cs.n);
    auto viaCyclic = cyclic_cohomology(cs.n, cs.t, 5);
    auto m = cyclic_monoid(cs.n);
    auto mod = cyclic_module(cs.n, cs.t);
    REQUIRE(validate_module(m, mod).ok());
    auto viaBar = cochain_cohomology(bar_cochain_complex(m, mod, 5), true);
    viaBar.resize(6);
    for (int k = 0; k <= 5; ++k) CHECK(viaCyclic[k] == viaBar[k]);
  }

  // documented values for order two
  auto trivialZ = cyclic_cohomology(2, IntMatrix::identity(1), 2);
  CHECK(trivialZ[0] == z_group(1));
  CHECK(trivialZ[1].trivial());
  CHECK(trivialZ[2] == torsion_group({2}));
  auto sign = cyclic_cohomology(2, make(1, 1, {-1}), 2);
  CHECK(sign[0] == z_group(0));
  CHECK(sign[1] == torsion_group({2}));

  // an action whose n-th power is not the identity is rejected
  CHECK_THROWS_AS(cyclic_cohomology(2, make(1, 1, {2}), 2), PreconditionError);
}

TEST_CASE("Koszul two-term Ext") {
  SUBCASE("zero action, augmentation zero") {
    auto r = koszul_ext(make(1, 1, {0}), 0);
    CHECK(r.ext0 == z_group(1));
    CHECK(r.ext1 == z_group(1));
    CHECK(r.higher_vanish);
  }
  SUBCASE("identity action, augmentation one") {
    auto r = koszul_ext(make(1, 1, {1}), 1);
    CHECK(r.ext0 == z_group(1));
    CHECK(r.ext1 == z_group(1));
  }
  SUBCASE("action by two, augmentation one") {
    auto r = koszul_ext(make(1, 1, {2}), 1);
    CHECK(r.ext0.trivial());
    CHECK(r.ext1.trivial());
  }
  SUBCASE("a torsion cokernel") {
    auto r = koszul_ext(make(1, 1, {3}), 1); // delta = 2
    CHECK(r.ext0.trivial());
    CHECK(r.ext1 == torsion_group({2}));
  }
}

TEST_CASE("schemoid cohomology through the quotient") {
  SUBCASE("binary Hamming pair schemoids mod two") {
    for (int n : {1, 2}) {
      auto x = scheme_schemoid(hamming_scheme(n, 2));
      auto h = schemoid_cohomology(x, 5, Coefficient::mod(2));
      REQUIRE(h.size() == 6);
      for (int k = 0; k <= 5; ++k) CHECK(h[k] == torsion_group({2}));
    }
  }
  SUBCASE("cyclic group of order three, integer coefficients") {
    auto x = scheme_schemoid(group_scheme(FiniteGroup::cyclic(3)));
    auto h = schemoid_cohomology(x, 2);
    CHECK(h[0] == z_group(1));
    CHECK(h[1].trivial());
    CHECK(h[2] == torsion_group({3}));
  }
  SUBCASE("one-object trivial category") {
    FiniteCategory t = FiniteCategory::terminal();
    ColoredCategory x(t, {0}, 1);
    auto h = schemoid_cohomology(x, 3);
    CHECK(h[0] == z_group(1));
    for (int k = 1; k <= 3; ++k) CHECK(h[k].trivial());
  }
  SUBCASE("multi-object quotients are unsupported") {
    FiniteCategory d;
    d.object_count = 2;
    d.morphisms = {{0, 0}, {1, 1}};
    d.identity_of = {0, 1};
    d.init_compose_table();
    d.set_compose(0, 0, 0);
    d.set_compose(1, 1, 1);
    ColoredCategory x(d, {0, 1}, 2);
    CHECK_THROWS_AS(schemoid_cohomology(x, 2), UnsupportedError);
  }
}

TEST_CASE("cohomology is invariant under monoid relabeling") {
  // conjugate the order-four table by a permutation fixing the identity
  auto m = cyclic_monoid(4);
  std::vector<int> perm = {0, 3, 2, 1};
  FiniteMonoid relabeled;
  relabeled.element_count = 4;
  relabeled.is_group = true;
  relabeled.mult.resize(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      relabeled.mult[static_cast<size_t>(perm[a]) * 4 + perm[b]] = perm[m.times(a, b)];
  REQUIRE(relabeled.validate().ok());

  auto h1 = cochain_cohomology(bar_cochain_complex(m, MonoidModule::trivial(m), 3), true);
  auto h2 =
      cochain_cohomology(bar_cochain_complex(relabeled, MonoidModule::trivial(relabeled), 3), true);
  for (int k = 0; k <= 3; ++k) CHECK(h1[k] == h2[k]);
}

TEST_CASE("monoid validation") {
  auto m = cyclic_monoid(3);
  CHECK(m.validate().ok());
  auto bad = m;
  bad.mult[4] = 0; // 1*1 = 0 breaks associativity with itself
  CHECK(!bad.validate().ok());
  auto flag = m;
  flag.is_group = false;
  CHECK(!flag.validate().ok());
}
