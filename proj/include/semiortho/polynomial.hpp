#ifndef SEMIORTHO_POLYNOMIAL_HPP
#define SEMIORTHO_POLYNOMIAL_HPP

#include "matrix.hpp"
#include "number.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace semiortho {

/// Univariate polynomial, coefficients lowest degree first. The leading
/// coefficient is non-zero unless the polynomial is zero (empty list).
template <class T>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }

  static Polynomial monomial(std::size_t degree, const T& c = T(1)) {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  /// x - r
  static Polynomial linear_root(const T& r) { return Polynomial(std::vector<T>{T(-r), T(1)}); }

  const std::vector<T>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  T coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(M) by Horner's rule.
  Matrix<T> evaluate(const Matrix<T>& m) const {
    m.require_square("polynomial evaluation");
    auto acc = Matrix<T>::zero(m.rows(), m.cols());
    auto id = Matrix<T>::identity(m.rows());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + (*it) * id;
    return acc;
  }

  template <class U>
  Polynomial<U> cast() const {
    std::vector<U> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(U(c));
    return Polynomial<U>(std::move(v));
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = T(static_cast<unsigned long>(k)) * coeffs_[k];
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }

  Polynomial pow(std::size_t k) const {
    Polynomial r = constant(T(1));
    for (std::size_t i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Synthetic division by (x - r): returns quotient, remainder.
  std::pair<Polynomial, T> divide_linear(const T& r) const {
    if (coeffs_.empty()) return {Polynomial{}, T(0)};
    std::vector<T> q(coeffs_.size() - 1, T(0));
    T carry(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      carry = carry * r + coeffs_[k];
      if (k > 0) q[k - 1] = carry;
    }
    return {Polynomial(std::move(q)), carry};
  }

  std::string to_string(const char* var = "x") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const T& c = coeffs_[k];
      if (c == 0) continue;
      T mag = c < 0 ? T(-c) : c;
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool show_coeff = k == 0 || mag != 1;
      if (show_coeff) os << semiortho::to_string(mag);
      if (k >= 1) os << var;
      if (k >= 2) os << '^' << k;
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

struct RationalRoot {
  Rational value;
  std::size_t multiplicity;

  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// Rational roots with multiplicities plus the cofactor free of rational roots.
struct RationalRootSplit {
  std::vector<RationalRoot> roots;
  RatPolynomial residual;
};

namespace detail {

/// Positive divisors of |n| (n != 0), ascending. Trial division; inputs here
/// are constant/leading terms of characteristic polynomials of small forms.
inline std::vector<Integer> positive_divisors(const Integer& n) {
  Integer m = abs(n);
  if (m == 0) throw std::invalid_argument("divisors of zero");
  std::vector<std::pair<Integer, unsigned>> factors;
  Integer p = 2;
  constexpr unsigned long kTrialLimit = 2'000'000;
  unsigned long steps = 0;
  while (p * p <= m) {
    if (++steps > kTrialLimit) {
      if (mpz_probab_prime_p(m.get_mpz_t(), 30) == 0) {
        throw std::runtime_error("integer " + m.get_str() + " too large to factor for rational root search");
      }
      break;
    }
    if (m % p == 0) {
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (m > 1) factors.emplace_back(m, 1);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [prime, e] : factors) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace detail

/// Extracts every rational root (with multiplicity) by the rational root
/// theorem applied to the primitive integer multiple of p.
inline RationalRootSplit rational_roots(const RatPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
  RationalRootSplit out;
  RatPolynomial rest = p;

  std::size_t zero_mult = 0;
  while (rest.degree() > 0 && rest.coefficient(0) == 0) {
    rest = rest.divide_linear(Rational(0)).first;
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.push_back({Rational(0), zero_mult});
  if (rest.degree() <= 0) {
    out.residual = rest;
    return out;
  }

  Integer den_lcm = 1;
  for (const auto& c : rest.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Integer a0 = to_integer(rest.coefficient(0) * den_lcm);
  Integer an = to_integer(rest.leading() * den_lcm);
  auto num_divs = detail::positive_divisors(a0);
  auto den_divs = detail::positive_divisors(an);

  std::vector<Rational> candidates;
  for (const auto& q : den_divs)
    for (const auto& d : num_divs) {
      candidates.push_back(make_rational(d, q));
      candidates.push_back(make_rational(Integer(-d), q));
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& r : candidates) {
    std::size_t mult = 0;
    while (rest.degree() > 0) {
      auto [quot, rem] = rest.divide_linear(r);
      if (rem != 0) break;
      rest = quot;
      ++mult;
    }
    if (mult > 0) out.roots.push_back({r, mult});
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  out.residual = rest;
  return out;
}

inline RatPolynomial to_rational(const IntPolynomial& p) { return p.cast<Rational>(); }

}  // namespace semiortho

#endif  // SEMIORTHO_POLYNOMIAL_HPP
