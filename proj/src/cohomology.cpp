#include "schemoid/cohomology.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

namespace schemoid {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::times(const IntMatrix& other) const {
  if (cols != other.rows) throw PreconditionError("matrix product: dimension mismatch");
  IntMatrix out(rows, other.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const mpz_class& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < other.cols; ++j) out.at(i, j) += v * other.at(k, j);
    }
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

namespace {

struct OverflowSignal {};

inline long long chk_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}
inline long long chk_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}
inline long long chk_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}

inline long long chk_or_plain_add(long long a, long long b) { return chk_add(a, b); }
inline mpz_class chk_or_plain_add(const mpz_class& a, const mpz_class& b) { return a + b; }

// Diagonalization by row/column operations; returns the diagonal in
// divisibility order. T is long long (overflow-checked) or mpz_class.
template <class T, class Sub, class Mul>
std::vector<T> snf_diagonal(int rows, int cols, std::vector<T> m, Sub sub, Mul mul) {
  auto at = [&](int i, int j) -> T& { return m[static_cast<size_t>(i) * cols + j]; };
  auto abs_of = [](const T& v) { return v < 0 ? T(-v) : v; };
  auto swap_rows = [&](int a, int b) {
    for (int j = 0; j < cols; ++j) std::swap(at(a, j), at(b, j));
  };
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < rows; ++i) std::swap(at(i, a), at(i, b));
  };

  std::vector<T> diag;
  int t = 0;
  while (t < rows && t < cols) {
    // minimal nonzero entry of the submatrix as pivot; a unit is optimal
    int pi = -1, pj = -1;
    for (int i = t; i < rows && !(pi >= 0 && abs_of(at(pi, pj)) == 1); ++i)
      for (int j = t; j < cols; ++j)
        if (at(i, j) != 0 && (pi < 0 || abs_of(at(i, j)) < abs_of(at(pi, pj)))) {
          pi = i;
          pj = j;
          if (abs_of(at(i, j)) == 1) break;
        }
    if (pi < 0) break;
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (at(i, t) == 0) continue;
        T q = at(i, t) / at(t, t);
        if (q != 0)
          for (int j = t; j < cols; ++j) at(i, j) = sub(at(i, j), mul(q, at(t, j)));
        if (at(i, t) != 0) { // remainder is a strictly smaller pivot
          swap_rows(i, t);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (int j = t + 1; j < cols; ++j) {
        if (at(t, j) == 0) continue;
        T q = at(t, j) / at(t, t);
        if (q != 0)
          for (int i = t; i < rows; ++i) at(i, j) = sub(at(i, j), mul(q, at(i, t)));
        if (at(t, j) != 0) {
          swap_cols(j, t);
          dirty = true;
        }
      }
      if (dirty) continue;
      // the pivot must divide the remaining submatrix for the factor chain
      for (int i = t + 1; i < rows && !dirty; ++i)
        for (int j = t + 1; j < cols && !dirty; ++j)
          if (at(i, j) % at(t, t) != 0) {
            for (int jj = t; jj < cols; ++jj) at(t, jj) = chk_or_plain_add(at(t, jj), at(i, jj));
            dirty = true;
          }
    }
    diag.push_back(abs_of(at(t, t)));
    ++t;
  }
  return diag;
}

} // namespace

std::vector<mpz_class> invariant_factors(const IntMatrix& m) {
  // 64-bit fast path with overflow detection, exact big-integer fallback
  bool fits = true;
  std::vector<long long> small(m.a.size());
  for (size_t i = 0; i < m.a.size() && fits; ++i) {
    if (!m.a[i].fits_slong_p() || m.a[i].get_si() == std::numeric_limits<long>::min())
      fits = false;
    else
      small[i] = m.a[i].get_si();
  }
  if (fits) {
    try {
      auto diag = snf_diagonal<long long>(m.rows, m.cols, std::move(small), chk_sub, chk_mul);
      std::vector<mpz_class> out;
      for (long long v : diag)
        if (v != 0) out.emplace_back(static_cast<long>(v));
      return out;
    } catch (const OverflowSignal&) {
      // fall through to exact arithmetic
    }
  }
  auto diag = snf_diagonal<mpz_class>(
      m.rows, m.cols, m.a, [](const mpz_class& a, const mpz_class& b) { return mpz_class(a - b); },
      [](const mpz_class& a, const mpz_class& b) { return mpz_class(a * b); });
  std::vector<mpz_class> out;
  for (auto& v : diag)
    if (v != 0) out.push_back(v);
  return out;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult r;
  r.d = m;
  r.u = IntMatrix::identity(m.rows);
  r.v = IntMatrix::identity(m.cols);
  IntMatrix& d = r.d;

  auto swap_rows = [&](int a, int b) {
    for (int j = 0; j < d.cols; ++j) std::swap(d.at(a, j), d.at(b, j));
    for (int j = 0; j < r.u.cols; ++j) std::swap(r.u.at(a, j), r.u.at(b, j));
  };
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (int i = 0; i < r.v.rows; ++i) std::swap(r.v.at(i, a), r.v.at(i, b));
  };
  auto row_sub = [&](int i, const mpz_class& q, int t) { // row_i -= q * row_t
    for (int j = 0; j < d.cols; ++j) d.at(i, j) -= q * d.at(t, j);
    for (int j = 0; j < r.u.cols; ++j) r.u.at(i, j) -= q * r.u.at(t, j);
  };
  auto col_sub = [&](int j, const mpz_class& q, int t) {
    for (int i = 0; i < d.rows; ++i) d.at(i, j) -= q * d.at(i, t);
    for (int i = 0; i < r.v.rows; ++i) r.v.at(i, j) -= q * r.v.at(i, t);
  };

  int t = 0;
  while (t < d.rows && t < d.cols) {
    int pi = -1, pj = -1;
    for (int i = t; i < d.rows && !(pi >= 0 && cmp(abs(d.at(pi, pj)), 1) == 0); ++i)
      for (int j = t; j < d.cols; ++j)
        if (d.at(i, j) != 0 &&
            (pi < 0 || mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
          if (cmp(abs(d.at(i, j)), 1) == 0) break;
        }
    if (pi < 0) break;
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        mpz_class q = d.at(i, t) / d.at(t, t);
        if (q != 0) row_sub(i, q, t);
        if (d.at(i, t) != 0) {
          swap_rows(i, t);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (int j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        mpz_class q = d.at(t, j) / d.at(t, t);
        if (q != 0) col_sub(j, q, t);
        if (d.at(t, j) != 0) {
          swap_cols(j, t);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (int i = t + 1; i < d.rows && !dirty; ++i)
        for (int j = t + 1; j < d.cols && !dirty; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            for (int jj = 0; jj < d.cols; ++jj) d.at(t, jj) += d.at(i, jj);
            for (int jj = 0; jj < r.u.cols; ++jj) r.u.at(t, jj) += r.u.at(i, jj);
            dirty = true;
          }
    }
    if (d.at(t, t) < 0) {
      for (int j = 0; j < d.cols; ++j) d.at(t, j) = -d.at(t, j);
      for (int j = 0; j < r.u.cols; ++j) r.u.at(t, j) = -r.u.at(t, j);
    }
    r.invariant_factors.push_back(d.at(t, t));
    ++t;
  }
  return r;
}

int mod_p_rank(const IntMatrix& m, long long p) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (p == 2) {
    // bit-packed elimination
    const int words = (m.cols + 63) / 64;
    std::vector<std::vector<uint64_t>> rows(m.rows, std::vector<uint64_t>(words, 0));
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j)
        if (mpz_odd_p(m.at(i, j).get_mpz_t())) rows[i][j / 64] |= uint64_t(1) << (j % 64);
    int rank = 0;
    for (int j = 0; j < m.cols && rank < m.rows; ++j) {
      int piv = -1;
      for (int i = rank; i < m.rows; ++i)
        if (rows[i][j / 64] >> (j % 64) & 1) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows[piv], rows[rank]);
      for (int i = rank + 1; i < m.rows; ++i)
        if (rows[i][j / 64] >> (j % 64) & 1)
          for (int w = j / 64; w < words; ++w) rows[i][w] ^= rows[rank][w];
      ++rank;
    }
    return rank;
  }
  std::vector<std::vector<uint32_t>> rows(m.rows, std::vector<uint32_t>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      rows[i][j] = static_cast<uint32_t>(mpz_fdiv_ui(m.at(i, j).get_mpz_t(), p));
  int rank = 0;
  for (int j = 0; j < m.cols && rank < m.rows; ++j) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (rows[i][j] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    // scale the pivot row to 1 via the inverse mod p
    uint64_t inv = 1, base = rows[rank][j], e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int jj = j; jj < m.cols; ++jj)
      rows[rank][jj] = static_cast<uint32_t>(rows[rank][jj] * inv % p);
    for (int i = rank + 1; i < m.rows; ++i) {
      uint64_t f = rows[i][j];
      if (f == 0) continue;
      uint64_t neg = p - f;
      for (int jj = j; jj < m.cols; ++jj)
        rows[i][jj] = static_cast<uint32_t>((rows[i][jj] + neg * rows[rank][jj]) % p);
    }
    ++rank;
  }
  return rank;
}

void check_complex(const CochainComplex& c) {
  for (size_t k = 0; k + 1 < c.d.size(); ++k) {
    const IntMatrix& a = c.d[k];     // C^k -> C^{k+1}
    const IntMatrix& b = c.d[k + 1]; // C^{k+1} -> C^{k+2}
    for (int col = 0; col < a.cols; ++col) {
      std::vector<mpz_class> out(b.rows, 0);
      for (int r0 = 0; r0 < a.rows; ++r0) {
        const mpz_class& v = a.at(r0, col);
        if (v == 0) continue;
        for (int i = 0; i < b.rows; ++i)
          if (b.at(i, r0) != 0) out[i] += v * b.at(i, r0);
      }
      for (const auto& v : out)
        if (v != 0)
          throw PreconditionError("not a complex: d^" + std::to_string(k + 1) + " d^" +
                                  std::to_string(k) + " != 0");
    }
  }
}

std::string CohomologyGroup::str() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

bool operator==(const CohomologyGroup& a, const CohomologyGroup& b) {
  return a.free_rank == b.free_rank && a.torsion == b.torsion;
}

std::vector<CohomologyGroup> cochain_cohomology(const CochainComplex& c, bool certify_last) {
  check_complex(c);
  const int degrees = static_cast<int>(c.dims.size());
  const int nd = static_cast<int>(c.d.size());
  std::vector<std::vector<mpz_class>> factors(nd);
  std::vector<int> ranks(nd, 0);
  for (int k = 0; k < nd; ++k) {
    if (c.d[k].rows != (k + 1 < degrees ? c.dims[k + 1] : 0) || c.d[k].cols != c.dims[k])
      throw PreconditionError("complex: differential shape mismatch at degree " +
                              std::to_string(k));
    if (certify_last && k == nd - 1 && k > 0) {
      // only the rank of the final differential matters; certify a mod-p
      // rank against the bound forced by im d^{k-1} <= ker d^k
      int bound = c.dims[k] - ranks[k - 1];
      int certified = -1;
      for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        if (mod_p_rank(c.d[k], p) == bound) {
          certified = bound;
          break;
        }
      }
      if (certified >= 0) {
        ranks[k] = certified;
        continue;
      }
    }
    factors[k] = invariant_factors(c.d[k]);
    ranks[k] = static_cast<int>(factors[k].size());
  }

  std::vector<CohomologyGroup> h(degrees);
  for (int k = 0; k < degrees; ++k) {
    long long rank_out = k < nd ? ranks[k] : 0;
    long long rank_in = k > 0 && k - 1 < nd ? ranks[k - 1] : 0;
    h[k].free_rank = c.dims[k] - rank_out - rank_in;
    if (k > 0 && k - 1 < nd)
      for (const auto& f : factors[k - 1])
        if (f > 1) h[k].torsion.push_back(f);
  }
  return h;
}

std::vector<long long> mod_p_cohomology(const CochainComplex& c, long long p) {
  check_complex(c);
  const int degrees = static_cast<int>(c.dims.size());
  const int nd = static_cast<int>(c.d.size());
  std::vector<int> ranks(nd, 0);
  for (int k = 0; k < nd; ++k) ranks[k] = mod_p_rank(c.d[k], p);
  std::vector<long long> h(degrees);
  for (int k = 0; k < degrees; ++k) {
    long long rank_out = k < nd ? ranks[k] : 0;
    long long rank_in = k > 0 ? ranks[k - 1] : 0;
    h[k] = c.dims[k] - rank_out - rank_in;
  }
  return h;
}

ValidationReport FiniteMonoid::validate() const {
  ValidationReport report;
  const int n = element_count;
  if (static_cast<int>(mult.size()) != n * n || n <= 0) {
    report.add("structure", {}, "multiplication table size mismatch");
    return report;
  }
  for (int v : mult)
    if (v < 0 || v >= n) {
      report.add("range", {v});
      return report;
    }
  for (int a = 0; a < n; ++a)
    if (times(0, a) != a || times(a, 0) != a) report.add("identity", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        if (times(times(a, b), cc) != times(a, times(b, cc))) {
          report.add("associativity", {a, b, cc});
          return report;
        }
  bool all_inv = true;
  for (int a = 0; a < n && all_inv; ++a) {
    bool inv = false;
    for (int b = 0; b < n; ++b)
      if (times(a, b) == 0 && times(b, a) == 0) inv = true;
    all_inv = inv;
  }
  if (all_inv != is_group) report.add("is-group-flag", {});
  return report;
}

FiniteMonoid monoid_from_quotient(const QuotientResult& q) {
  if (q.status != QuotientResult::Status::Finite)
    throw UnsupportedError("monoid_from_quotient: quotient undecided");
  if (q.category.object_count != 1)
    throw UnsupportedError("monoid_from_quotient: quotient has several objects");
  const auto& c = q.category;
  const int n = c.morphism_count();
  std::vector<int> elems;
  elems.push_back(c.identity_of[0]);
  for (int f = 0; f < n; ++f)
    if (f != c.identity_of[0]) elems.push_back(f);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[elems[i]] = i;

  FiniteMonoid m;
  m.element_count = n;
  m.mult.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m.mult[static_cast<size_t>(a) * n + b] = pos[c.compose(elems[a], elems[b])];
  m.is_group = q.kind == QuotientResult::Kind::Group;
  return m;
}

MonoidModule MonoidModule::trivial(const FiniteMonoid& m, int rank) {
  MonoidModule mod;
  mod.rank = rank;
  mod.action.assign(m.element_count, IntMatrix::identity(rank));
  return mod;
}

ValidationReport validate_module(const FiniteMonoid& m, const MonoidModule& mod) {
  ValidationReport report;
  if (static_cast<int>(mod.action.size()) != m.element_count) {
    report.add("structure", {}, "one action matrix per element required");
    return report;
  }
  for (const auto& a : mod.action)
    if (a.rows != mod.rank || a.cols != mod.rank) {
      report.add("structure", {}, "action matrix shape mismatch");
      return report;
    }
  IntMatrix id = IntMatrix::identity(mod.rank);
  if (!(mod.action[0].a == id.a)) report.add("identity-action", {});
  for (int a = 0; a < m.element_count; ++a)
    for (int b = 0; b < m.element_count; ++b) {
      auto prod = mod.action[a].times(mod.action[b]);
      if (!(prod.a == mod.action[m.times(a, b)].a)) report.add("action-homomorphism", {a, b});
    }
  return report;
}

CochainComplex bar_cochain_complex(const FiniteMonoid& m, const MonoidModule& mod,
                                   int max_degree) {
  if (max_degree < 0) throw PreconditionError("bar complex: negative degree bound");
  const int n = m.element_count;
  const int r = mod.rank;
  CochainComplex c;
  // one degree beyond the bound so H^{max_degree} sees its outgoing map
  long long size = 1;
  for (int k = 0; k <= max_degree + 1; ++k) {
    c.dims.push_back(static_cast<int>(size * r));
    if (size > (1 << 22) / std::max(r, 1))
      throw PreconditionError("bar complex: degree bound too large for this monoid");
    if (k <= max_degree) size *= n;
  }
  for (int k = 0; k <= max_degree; ++k) {
    IntMatrix d(c.dims[k + 1], c.dims[k]);
    // iterate over basis tuples of the target degree k+1
    long long target_tuples = 1;
    for (int i = 0; i < k + 1; ++i) target_tuples *= n;
    std::vector<int> tup(k + 1);
    for (long long ti = 0; ti < target_tuples; ++ti) {
      long long rem = ti;
      for (int i = k; i >= 0; --i) {
        tup[i] = static_cast<int>(rem % n);
        rem /= n;
      }
      auto add_block = [&](long long col_tuple, int sign, const IntMatrix* block) {
        for (int ii = 0; ii < r; ++ii)
          for (int jj = 0; jj < r; ++jj) {
            mpz_class v = block ? block->at(ii, jj) : mpz_class(ii == jj ? 1 : 0);
            if (v == 0) continue;
            d.at(static_cast<int>(ti * r + ii), static_cast<int>(col_tuple * r + jj)) +=
                sign * v;
          }
      };
      // leading term: the first entry acts on f(rest)
      long long rest = 0;
      for (int i = 1; i <= k; ++i) rest = rest * n + tup[i];
      add_block(rest, +1, &mod.action[tup[0]]);
      // inner face maps merge adjacent entries
      for (int i = 1; i <= k; ++i) {
        long long merged = 0;
        for (int j = 0; j <= k; ++j) {
          if (j == i) continue;
          int e = (j == i - 1) ? m.times(tup[i - 1], tup[i]) : tup[j];
          merged = merged * n + e;
        }
        add_block(merged, i % 2 == 0 ? +1 : -1, nullptr);
      }
      // trailing term drops the last entry
      long long head = 0;
      for (int i = 0; i < k; ++i) head = head * n + tup[i];
      add_block(head, (k + 1) % 2 == 0 ? +1 : -1, nullptr);
    }
    c.d.push_back(std::move(d));
  }
  return c;
}

namespace {

CochainComplex periodic_complex(int n, const IntMatrix& t_action, int max_degree) {
  if (n < 2) throw PreconditionError("cyclic complex: need n >= 2");
  const int r = t_action.rows;
  if (t_action.cols != r) throw PreconditionError("cyclic complex: action must be square");
  // t^n must be the identity for the action to define a Z/n-module
  IntMatrix power = IntMatrix::identity(r);
  for (int i = 0; i < n; ++i) power = power.times(t_action);
  if (!(power.a == IntMatrix::identity(r).a))
    throw PreconditionError("cyclic complex: t^n is not the identity");

  IntMatrix tm1(r, r), norm(r, r);
  IntMatrix acc = IntMatrix::identity(r);
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < r; ++x)
      for (int y = 0; y < r; ++y) norm.at(x, y) += acc.at(x, y);
    acc = acc.times(t_action);
  }
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y) tm1.at(x, y) = t_action.at(x, y) - (x == y ? 1 : 0);

  CochainComplex c;
  for (int k = 0; k <= max_degree + 1; ++k) c.dims.push_back(r);
  for (int k = 0; k <= max_degree; ++k) c.d.push_back(k % 2 == 0 ? tm1 : norm);
  return c;
}

} // namespace

std::vector<CohomologyGroup> cyclic_cohomology(int n, const IntMatrix& t_action, int max_degree) {
  auto c = periodic_complex(n, t_action, max_degree);
  auto h = cochain_cohomology(c);
  h.resize(max_degree + 1);
  return h;
}

std::vector<long long> cyclic_cohomology_mod_p(int n, const IntMatrix& t_action, int max_degree,
                                               long long p) {
  auto c = periodic_complex(n, t_action, max_degree);
  auto h = mod_p_cohomology(c, p);
  h.resize(max_degree + 1);
  return h;
}

KoszulExt koszul_ext(const IntMatrix& sigma_action, int aug) {
  if (sigma_action.rows != sigma_action.cols)
    throw PreconditionError("koszul_ext: action must be square");
  if (aug != 0 && aug != 1) throw PreconditionError("koszul_ext: augmentation must be 0 or 1");
  const int r = sigma_action.rows;
  CochainComplex c;
  c.dims = {r, r};
  IntMatrix delta = sigma_action;
  for (int i = 0; i < r; ++i) delta.at(i, i) -= aug;
  c.d.push_back(std::move(delta));
  auto h = cochain_cohomology(c);
  KoszulExt out;
  out.ext0 = h[0];
  out.ext1 = h[1];
  out.higher_vanish = true;
  return out;
}

std::vector<CohomologyGroup> schemoid_cohomology(const ColoredCategory& x, int max_degree,
                                                 Coefficient coeff, CompletionCaps caps) {
  auto q = quotient_category(x, caps);
  auto monoid = monoid_from_quotient(q); // throws for undecided / multi-object
  auto mod = MonoidModule::trivial(monoid);
  auto complex = bar_cochain_complex(monoid, mod, max_degree);
  if (!coeff.mod_p) {
    // the degree-(max_degree+1) slot is discarded, so the last differential
    // only contributes its rank and may use the certified mod-p shortcut
    auto h = cochain_cohomology(complex, true);
    h.resize(max_degree + 1);
    return h;
  }
  if (coeff.p < 2) throw PreconditionError("schemoid_cohomology: modulus must be >= 2");
  auto dims = mod_p_cohomology(complex, coeff.p);
  dims.resize(max_degree + 1);
  std::vector<CohomologyGroup> h(dims.size());
  for (size_t k = 0; k < dims.size(); ++k)
    h[k].torsion.assign(dims[k], mpz_class(static_cast<long>(coeff.p))); // (Z/p)^dim
  return h;
}

} // namespace schemoid
