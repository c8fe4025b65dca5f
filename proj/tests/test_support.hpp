#ifndef SEMIORTHO_TESTS_TEST_SUPPORT_HPP
#define SEMIORTHO_TESTS_TEST_SUPPORT_HPP

// Independent oracles shared by the test programs. None of these reuse the
// library's elimination or series code.

#include <semiortho/semiortho.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace semiortho::testing {

/// Leibniz expansion over all permutations; fine up to 7x7.
template <class T>
T leibniz_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total(0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(1);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += inversions % 2 == 0 ? term : T(-term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Binomial coefficient by the multiplicative formula in exact rationals,
/// valid for negative upper arguments.
inline Rational binom_oracle(long top, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) r = r * Rational(top - i) / Rational(i + 1);
  return r;
}

/// Truncated product of plain coefficient vectors.
inline std::vector<Rational> mul_trunc(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t n) {
  std::vector<Rational> c(n + 1, Rational(0));
  for (std::size_t i = 0; i <= n && i < a.size(); ++i)
    for (std::size_t j = 0; i + j <= n && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// Pairing oracle on K0(P^n): rewrite A(-D)B(D) in powers of nabla = 1 - e^{-D}
/// by solving D = sum_{m>=1} nabla^m / m order by order, then use
/// (nabla^m gamma_n)(0) = gamma_{n-m}(0) = 1.
inline Rational pairing_via_nabla(std::size_t n, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> ar = a;
  for (std::size_t k = 1; k < ar.size(); k += 2) ar[k] = -ar[k];
  auto prod = mul_trunc(ar, b, n);
  // D as a polynomial in nabla.
  std::vector<Rational> d(n + 1, Rational(0));
  for (std::size_t m = 1; m <= n; ++m) d[m] = Rational(1) / Rational(static_cast<long>(m));
  std::vector<Rational> in_nabla(n + 1, Rational(0));
  std::vector<Rational> power(n + 1, Rational(0));
  power[0] = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t j = 0; j <= n; ++j) in_nabla[j] += prod[k] * power[j];
    power = mul_trunc(power, d, n);
  }
  Rational s = 0;
  for (const auto& x : in_nabla) s += x;
  return s;
}

/// Gram matrix [[1, a], [0, 1]] style helper for integer literals.
inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> rs;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (long x : r) row.push_back(Integer(x));
    rs.push_back(row);
  }
  return IntMatrix::from_rows(rs);
}

inline RatMatrix rat_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  return to_rational(int_matrix(rows));
}

inline Rational q(long num, long den = 1) { return Rational(num) / Rational(den); }

}  // namespace semiortho::testing

#endif  // SEMIORTHO_TESTS_TEST_SUPPORT_HPP
