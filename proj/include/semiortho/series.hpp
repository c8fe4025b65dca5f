#ifndef SEMIORTHO_SERIES_HPP
#define SEMIORTHO_SERIES_HPP

#include "matrix.hpp"
#include "number.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semiortho {

/// Element of Q[x]/x^{n+1}. The tag names the generator (D, nabla, zeta) so
/// that series in different variables cannot be mixed by accident.
template <class Tag>
class Series {
 public:
  Series() : Series(0) {}

  explicit Series(std::size_t n) : n_(n), c_(n + 1, Rational(0)) {}

  /// Coefficients beyond degree n are dropped; missing ones are zero.
  Series(std::size_t n, std::vector<Rational> coeffs) : n_(n), c_(std::move(coeffs)) { c_.resize(n + 1, Rational(0)); }

  static Series constant(std::size_t n, const Rational& a) {
    Series s(n);
    s.c_[0] = a;
    return s;
  }

  static Series one(std::size_t n) { return constant(n, Rational(1)); }

  /// c * x^k (zero when k > n).
  static Series monomial(std::size_t n, std::size_t k, const Rational& c = Rational(1)) {
    Series s(n);
    if (k <= n) s.c_[k] = c;
    return s;
  }

  /// e^{a x} truncated, from the recurrence c_k = c_{k-1} * a / k.
  static Series exp_linear(std::size_t n, const Rational& a) {
    Series s(n);
    s.c_[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) s.c_[k] = s.c_[k - 1] * a / Rational(static_cast<unsigned long>(k));
    return s;
  }

  /// tanh(a x) = (e^{2ax} - 1) / (e^{2ax} + 1).
  static Series tanh_linear(std::size_t n, const Rational& a) {
    auto e = exp_linear(n, 2 * a);
    return (e - one(n)) * (e + one(n)).inverse();
  }

  /// -log(1 - x) = sum_{k>=1} x^k / k.
  static Series minus_log_one_minus(std::size_t n) {
    Series s(n);
    for (std::size_t k = 1; k <= n; ++k) s.c_[k] = Rational(1) / Rational(static_cast<unsigned long>(k));
    return s;
  }

  std::size_t order() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& operator[](std::size_t k) const { return c_.at(k); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  bool is_integral() const {
    for (const auto& x : c_)
      if (!semiortho::is_integral(x)) return false;
    return true;
  }

  /// Smallest k with x^k-coefficient non-zero, or n+1 for the zero series.
  std::size_t valuation() const {
    for (std::size_t k = 0; k <= n_; ++k)
      if (c_[k] != 0) return k;
    return n_ + 1;
  }

  /// f(-x).
  Series reflect() const {
    Series s = *this;
    for (std::size_t k = 1; k <= n_; k += 2) s.c_[k] = -s.c_[k];
    return s;
  }

  Series odd_part() const {
    Series s(n_);
    for (std::size_t k = 1; k <= n_; k += 2) s.c_[k] = c_[k];
    return s;
  }

  Series even_part() const {
    Series s(n_);
    for (std::size_t k = 0; k <= n_; k += 2) s.c_[k] = c_[k];
    return s;
  }

  /// Multiplicative inverse; requires a non-zero constant term.
  Series inverse() const {
    if (c_[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
    Series r(n_);
    r.c_[0] = 1 / c_[0];
    for (std::size_t k = 1; k <= n_; ++k) {
      Rational acc = 0;
      for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -acc / c_[0];
    }
    return r;
  }

  Series pow(std::size_t e) const {
    Series r = one(n_);
    for (std::size_t i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// f(g) for a series g with zero constant term, possibly in another variable.
  template <class OtherTag>
  Series<OtherTag> compose(const Series<OtherTag>& g) const {
    if (g.order() != n_) throw DimensionError("composition of series of different orders");
    if (g[0] != 0) throw std::domain_error("composition requires an inner series without constant term");
    auto acc = Series<OtherTag>(n_);
    for (std::size_t k = n_ + 1; k-- > 0;) acc = acc * g + Series<OtherTag>::constant(n_, c_[k]);
    return acc;
  }

  /// f(M) = sum c_k M^k.
  RatMatrix evaluate(const RatMatrix& m) const {
    m.require_square("series evaluation");
    auto acc = RatMatrix::zero(m.rows(), m.cols());
    auto id = RatMatrix::identity(m.rows());
    for (std::size_t k = n_ + 1; k-- > 0;) acc = acc * m + c_[k] * id;
    return acc;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  friend Series operator+(const Series& a, const Series& b) {
    a.require_same_order(b);
    Series s(a.n_);
    for (std::size_t k = 0; k <= a.n_; ++k) s.c_[k] = a.c_[k] + b.c_[k];
    return s;
  }

  friend Series operator-(const Series& a, const Series& b) {
    a.require_same_order(b);
    Series s(a.n_);
    for (std::size_t k = 0; k <= a.n_; ++k) s.c_[k] = a.c_[k] - b.c_[k];
    return s;
  }

  friend Series operator-(const Series& a) {
    Series s(a.n_);
    for (std::size_t k = 0; k <= a.n_; ++k) s.c_[k] = -a.c_[k];
    return s;
  }

  friend Series operator*(const Rational& q, const Series& a) {
    Series s(a.n_);
    for (std::size_t k = 0; k <= a.n_; ++k) s.c_[k] = q * a.c_[k];
    return s;
  }

  friend Series operator*(const Series& a, const Series& b) {
    a.require_same_order(b);
    Series s(a.n_);
    for (std::size_t i = 0; i <= a.n_; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= a.n_; ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return s;
  }

  std::string to_string(const char* var) const {
    std::string out;
    for (std::size_t k = 0; k <= n_; ++k) {
      if (c_[k] == 0) continue;
      std::string term = semiortho::to_string(c_[k]);
      if (k >= 1) term += std::string("*") + var;
      if (k >= 2) term += "^" + std::to_string(k);
      out += out.empty() ? term : " + " + term;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void require_same_order(const Series& b) const {
    if (n_ != b.n_) {
      throw DimensionError("series truncation orders differ: " + std::to_string(n_) + " vs " + std::to_string(b.n_));
    }
  }

  std::size_t n_;
  std::vector<Rational> c_;
};

struct DTag {};
struct NablaTag {};
struct ZetaTag {};

/// Element of Q[D]/D^{n+1}, D = d/dt.
using DSeries = Series<DTag>;
/// Element of Q[nabla]/nabla^{n+1}, nabla = 1 - e^{-D}.
using NablaSeries = Series<NablaTag>;
/// Element of Q[zeta]/zeta^{n+1}.
using ZetaSeries = Series<ZetaTag>;

}  // namespace semiortho

#endif  // SEMIORTHO_SERIES_HPP
