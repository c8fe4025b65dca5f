#ifndef SEMIORTHO_EXACT_LINALG_HPP
#define SEMIORTHO_EXACT_LINALG_HPP

#include "matrix.hpp"
#include "number.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace semiortho {

class UnimodularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

template <class T>
std::vector<std::vector<T>> rows_of(const Matrix<T>& m) {
  return m.to_rows();
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant. Every intermediate division is exact.
template <class T>
T det(const Matrix<T>& m) {
  m.require_square("det");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  auto a = detail::rows_of(m);
  T prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return T(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        if constexpr (std::is_same_v<T, Integer>) {
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
          a[i][j] = v;
        } else {
          a[i][j] = v / prev;
        }
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : T(-a[n - 1][n - 1]);
}

/// Row echelon data over Q: pivot columns of the reduced row echelon form.
struct EchelonForm {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

inline EchelonForm reduced_row_echelon(const RatMatrix& m) {
  auto a = m.to_rows();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {RatMatrix::from_rows(a.empty() ? std::vector<std::vector<Rational>>{} : a), pivots};
}

inline std::size_t rank_over_q(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return reduced_row_echelon(m).pivots.size();
}

inline std::size_t rank_over_q(const IntMatrix& m) { return rank_over_q(to_rational(m)); }

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
inline std::vector<RatVector> nullspace(const RatMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<RatVector> basis;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < cols; ++j) basis.push_back(unit_vector<Rational>(cols, j));
    return basis;
  }
  auto ech = reduced_row_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact inverse over Q (Gauss-Jordan).
inline RatMatrix inverse(const RatMatrix& m) {
  m.require_square("inverse");
  const std::size_t n = m.rows();
  auto a = m.to_rows();
  auto inv = RatMatrix::identity(n).to_rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw SingularMatrixError("matrix is singular over Q");
    std::swap(a[c], a[p]);
    std::swap(inv[c], inv[p]);
    Rational s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return n == 0 ? RatMatrix::zero(0, 0) : RatMatrix::from_rows(inv);
}

/// Integer inverse of a matrix with determinant +1 or -1.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  m.require_square("inverse_unimodular");
  Integer d = det(m);
  if (d != 1 && d != -1) {
    throw UnimodularityError("determinant " + d.get_str() + " is not +1 or -1");
  }
  return to_integer(inverse(to_rational(m)));
}

/// Overload set used by templated code that needs an exact inverse.
inline IntMatrix exact_inverse(const IntMatrix& m) { return inverse_unimodular(m); }
inline RatMatrix exact_inverse(const RatMatrix& m) { return inverse(m); }

/// Monic characteristic polynomial det(xI - m) by Faddeev-LeVerrier. The
/// divisions by k are exact for integer input.
template <class T>
Polynomial<T> char_poly(const Matrix<T>& m) {
  m.require_square("char_poly");
  const std::size_t n = m.rows();
  std::vector<T> c(n + 1, T(0));
  c[n] = 1;
  auto id = Matrix<T>::identity(n);
  auto mk = Matrix<T>::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    T t = (m * mk).trace();
    if constexpr (std::is_same_v<T, Integer>) {
      Integer q;
      mpz_divexact_ui(q.get_mpz_t(), t.get_mpz_t(), k);
      c[n - k] = -q;
    } else {
      c[n - k] = -t / T(static_cast<unsigned long>(k));
    }
  }
  return Polynomial<T>(std::move(c));
}

/// Smallest k with m^k = 0, or nullopt when m is not nilpotent.
inline std::optional<std::size_t> nilpotency_index(const RatMatrix& m) {
  m.require_square("nilpotency_index");
  const std::size_t n = m.rows();
  if (n == 0) return 0;
  if (char_poly(m) != RatPolynomial::monomial(n)) return std::nullopt;
  auto p = m;
  for (std::size_t k = 1; k <= n; ++k) {
    if (p.is_zero()) return k;
    p = p * m;
  }
  throw std::logic_error("nilpotent matrix failed to vanish by its dimension");
}

inline std::optional<std::size_t> nilpotency_index(const IntMatrix& m) {
  return nilpotency_index(to_rational(m));
}

/// dim ker(m^k) for k = 0, 1, ... until the sequence stabilizes.
inline std::vector<std::size_t> kernel_dimension_sequence(const RatMatrix& m) {
  m.require_square("kernel_dimension_sequence");
  const std::size_t n = m.rows();
  std::vector<std::size_t> dims{0};
  auto p = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    p = p * m;
    std::size_t d = n - rank_over_q(p);
    if (d == dims.back()) break;
    dims.push_back(d);
  }
  return dims;
}

/// Jordan chain lengths (descending) of a nilpotent operator, read off the
/// differences of the kernel dimension sequence.
inline std::vector<std::size_t> jordan_partition(const RatMatrix& nilpotent) {
  auto dims = kernel_dimension_sequence(nilpotent);
  if (dims.back() != nilpotent.rows()) throw std::invalid_argument("jordan_partition: operator is not nilpotent");
  // at_least[k] = number of chains of length >= k
  std::vector<std::size_t> at_least(dims.size() + 1, 0);
  for (std::size_t k = 1; k < dims.size(); ++k) at_least[k] = dims[k] - dims[k - 1];
  std::vector<std::size_t> parts;
  for (std::size_t k = dims.size() - 1; k >= 1; --k) {
    std::size_t exactly = at_least[k] - at_least[k + 1];
    for (std::size_t i = 0; i < exactly; ++i) parts.push_back(k);
  }
  return parts;
}

}  // namespace semiortho

#endif  // SEMIORTHO_EXACT_LINALG_HPP
