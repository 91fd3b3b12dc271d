#pragma once

#include "schemoid/quotient.hpp"

#include <gmpxx.h>

namespace schemoid {

/// Dense integer matrix with exact arbitrary-precision entries.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<mpz_class> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  mpz_class& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const mpz_class& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMatrix identity(int n);
  IntMatrix times(const IntMatrix& other) const;
  bool is_zero() const;
};

struct SmithResult {
  IntMatrix d, u, v; // u * input * v == d
  std::vector<mpz_class> invariant_factors; // nonzero diagonal of d, divisibility order
  int rank() const { return static_cast<int>(invariant_factors.size()); }
};

/// Diagonalizes by unimodular row/column operations; d_i | d_{i+1}.
SmithResult smith_normal_form(const IntMatrix& m);

/// Invariant factors only (no transform tracking); tries 64-bit arithmetic
/// with overflow detection before falling back to big integers.
std::vector<mpz_class> invariant_factors(const IntMatrix& m);

/// Rank of the reduction mod a prime p, by Gaussian elimination over F_p.
/// Independent of the Smith normal form engine.
int mod_p_rank(const IntMatrix& m, long long p);

/// A cochain complex of free abelian groups: C^0 -> C^1 -> ... with
/// d[k] : C^k -> C^{k+1} as a dims[k+1] x dims[k] matrix.
struct CochainComplex {
  std::vector<int> dims;
  std::vector<IntMatrix> d;

  int max_degree() const { return static_cast<int>(dims.size()) - 1; }
};

/// Verifies d^{k+1} d^k = 0 for all k; throws PreconditionError naming the
/// failing degree. Exploits column sparsity.
void check_complex(const CochainComplex& c);

struct CohomologyGroup {
  long long free_rank = 0;
  std::vector<mpz_class> torsion; // each >= 2, in divisibility order

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;
};

bool operator==(const CohomologyGroup& a, const CohomologyGroup& b);

/// Integral cohomology H^k = ker d^k / im d^{k-1} for every degree of the
/// complex; differentials past the end are taken to be zero (the complex
/// terminates). With certify_last the final differential contributes only
/// its rank, obtained from a mod-p rank certified against the bound
/// dims[k] - rank d^{k-1}; the top returned degree is then meaningless and
/// must be discarded by the caller.
std::vector<CohomologyGroup> cochain_cohomology(const CochainComplex& c,
                                                bool certify_last = false);

/// Dimensions of H^k(C (x) F_p); equals the cohomology of the mod-p
/// reduction because tensoring a complex of free modules is exact degreewise.
std::vector<long long> mod_p_cohomology(const CochainComplex& c, long long p);

/// A finite monoid with a dense multiplication table; identity at index 0.
struct FiniteMonoid {
  int element_count = 0;
  std::vector<int> mult; // a * element_count + b
  bool is_group = false;

  int times(int a, int b) const { return mult[static_cast<size_t>(a) * element_count + b]; }

  ValidationReport validate() const;
};

/// The composition monoid of a finite one-object quotient.
FiniteMonoid monoid_from_quotient(const QuotientResult& q);

/// A left module over a finite monoid: a free abelian group Z^rank with a
/// multiplicative action matrix per element.
struct MonoidModule {
  int rank = 0;
  std::vector<IntMatrix> action; // per monoid element

  static MonoidModule trivial(const FiniteMonoid& m, int rank = 1);
};

/// Checks the action respects the multiplication table and the identity.
ValidationReport validate_module(const FiniteMonoid& m, const MonoidModule& mod);

/// The inhomogeneous bar cochain complex: C^k = maps M^k -> module, with
/// (df)(m_1..m_{k+1}) = m_1 f(m_2..) + sum (-1)^i f(..m_i m_{i+1}..)
/// + (-1)^{k+1} f(m_1..m_k). Degrees 0..max_degree+1 so that H^{max_degree}
/// is computable.
CochainComplex bar_cochain_complex(const FiniteMonoid& m, const MonoidModule& mod, int max_degree);

/// Module over a cyclic group given by the action of the generator t.
/// The 2-periodic complex M -(t-1)-> M -(1+t+..+t^{n-1})-> M -(t-1)-> ...
std::vector<CohomologyGroup> cyclic_cohomology(int n, const IntMatrix& t_action, int max_degree);
std::vector<long long> cyclic_cohomology_mod_p(int n, const IntMatrix& t_action, int max_degree,
                                               long long p);

struct KoszulExt {
  CohomologyGroup ext0, ext1;
  bool higher_vanish = true; // structural: the resolution has no degree <= -2
};

/// Two-term complex Hom(exterior algebra on one generator, module) with
/// differential action(sigma) - aug * identity. The augmentation (0 or 1)
/// selects which quotient of Z[sigma] plays the role of Z; see the header
/// note in nat_len_symbol().
KoszulExt koszul_ext(const IntMatrix& sigma_action, int aug);

struct Coefficient {
  bool mod_p = false;
  long long p = 0;

  static Coefficient integers() { return {}; }
  static Coefficient mod(long long p) { return {true, p}; }
};

/// Cohomology of a colored category with constant-sheaf coefficients
/// (rank-1 trivial module), through the finite one-object quotient.
/// Throws UnsupportedError for undecided or multi-object quotients.
std::vector<CohomologyGroup> schemoid_cohomology(const ColoredCategory& x, int max_degree,
                                                 Coefficient coeff = Coefficient::integers(),
                                                 CompletionCaps caps = {});

} // namespace schemoid
