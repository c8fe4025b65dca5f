#ifndef SEMIORTHO_K0_PN_HPP
#define SEMIORTHO_K0_PN_HPP

#include "matrix.hpp"
#include "number.hpp"
#include "series.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiortho {

// K_0(P^n) as numerical polynomials in t. Three coordinate systems:
//   gamma:  f = sum_nu coords[nu] * gamma_{n-nu},  gamma_k(t) = binom(t+k, k);
//   nabla:  operators sum x_nu nabla^nu, nabla = 1 - e^{-D};
//   D:      operators sum c_k D^k (Adams coordinates a_k = k! c_k).
// The Chern isomorphism sends f to the operator A with f = A gamma_n, so
// gamma coordinates and nabla coordinates coincide.

/// Numerical polynomial of degree <= n in the binomial basis.
struct NumPoly {
  std::size_t n = 0;
  IntVector coords;  ///< coords[nu] multiplies gamma_{n-nu}

  NumPoly() : coords(1, Integer(0)) {}
  NumPoly(std::size_t dim, IntVector c) : n(dim), coords(std::move(c)) {
    if (coords.size() != n + 1) {
      throw DimensionError("numerical polynomial on P^" + std::to_string(n) + " needs " + std::to_string(n + 1) +
                           " coordinates");
    }
  }

  Integer evaluate(const Integer& t) const {
    Integer s = 0;
    for (std::size_t nu = 0; nu <= n; ++nu) {
      if (coords[nu] == 0) continue;
      const unsigned long k = n - nu;
      s += coords[nu] * binomial(Integer(t + k), k);
    }
    return s;
  }

  friend bool operator==(const NumPoly&, const NumPoly&) = default;
};

/// gamma_0, ..., gamma_n (element k is gamma_k).
inline std::vector<NumPoly> gamma_basis(std::size_t n) {
  std::vector<NumPoly> out;
  for (std::size_t k = 0; k <= n; ++k) {
    IntVector c(n + 1, 0);
    c[n - k] = 1;
    out.emplace_back(n, std::move(c));
  }
  return out;
}

/// Hilbert polynomial of O(k): gamma_n(t + k) = T^k gamma_n with
/// T^k = (1 - nabla)^{-k} = sum_nu binom(k + nu - 1, nu) nabla^nu.
inline NumPoly twist_class(std::size_t n, long k) {
  IntVector c(n + 1);
  for (std::size_t nu = 0; nu <= n; ++nu) {
    c[nu] = binomial(Integer(k) + static_cast<long>(nu) - 1, static_cast<unsigned long>(nu));
  }
  return NumPoly(n, std::move(c));
}

/// f(t) - f(t-1).
inline NumPoly nabla(const NumPoly& f) {
  IntVector c(f.n + 1, 0);
  for (std::size_t nu = 1; nu <= f.n; ++nu) c[nu] = f.coords[nu - 1];
  return NumPoly(f.n, std::move(c));
}

inline NablaSeries chern(const NumPoly& f) {
  std::vector<Rational> c(f.coords.begin(), f.coords.end());
  return NablaSeries(f.n, std::move(c));
}

inline NumPoly chern_inverse(const NablaSeries& a) {
  if (!a.is_integral()) throw std::domain_error("operator does not preserve integer-valued polynomials");
  IntVector c;
  for (const auto& x : a.coefficients()) c.push_back(to_integer(x));
  return NumPoly(a.order(), std::move(c));
}

/// gamma_{n-nu} (x) gamma_{n-mu} = gamma_{n-nu-mu}.
inline NumPoly tensor(const NumPoly& f, const NumPoly& g) {
  if (f.n != g.n) throw DimensionError("tensor product of classes on different projective spaces");
  return chern_inverse(chern(f) * chern(g));
}

/// Action of an operator of the canonical algebra on a class.
inline NumPoly apply_operator(const NablaSeries& a, const NumPoly& f) { return chern_inverse(a * chern(f)); }

/// Exact change-of-coordinates matrices between D and nabla, built once per n.
/// Column k of d_to_nabla holds the nabla coordinates of D^k.
struct ConversionTables {
  RatMatrix d_to_nabla;
  RatMatrix nabla_to_d;

  static std::shared_ptr<const ConversionTables> get(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::shared_ptr<const ConversionTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto t = std::make_shared<ConversionTables>();
    // D = -log(1 - nabla), nabla = 1 - e^{-D}
    auto d_in_nabla = NablaSeries::minus_log_one_minus(n);
    auto nabla_in_d = DSeries::one(n) - DSeries::exp_linear(n, Rational(-1));
    std::vector<RatVector> to_nabla_cols;
    std::vector<RatVector> to_d_cols;
    auto pn = NablaSeries::one(n);
    auto pd = DSeries::one(n);
    for (std::size_t k = 0; k <= n; ++k) {
      to_nabla_cols.push_back(pn.coefficients());
      to_d_cols.push_back(pd.coefficients());
      pn = pn * d_in_nabla;
      pd = pd * nabla_in_d;
    }
    t->d_to_nabla = RatMatrix::from_columns(n + 1, to_nabla_cols);
    t->nabla_to_d = RatMatrix::from_columns(n + 1, to_d_cols);
    cache.emplace(n, t);
    return t;
  }
};

inline NablaSeries to_nabla(const DSeries& a) {
  auto t = ConversionTables::get(a.order());
  return NablaSeries(a.order(), t->d_to_nabla * a.coefficients());
}

inline DSeries to_d(const NablaSeries& a) {
  auto t = ConversionTables::get(a.order());
  return DSeries(a.order(), t->nabla_to_d * a.coefficients());
}

/// Adams coordinates a_k = k! c_k of A = sum c_k D^k = sum a_k Psi_k.
inline std::vector<Rational> adams_coordinates(const DSeries& a) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k <= a.order(); ++k) out.push_back(a[k] * Rational(factorial(k)));
  return out;
}

inline DSeries from_adams(std::size_t n, const std::vector<Rational>& adams) {
  if (adams.size() != n + 1) throw DimensionError("expected " + std::to_string(n + 1) + " Adams coordinates");
  std::vector<Rational> c;
  for (std::size_t k = 0; k <= n; ++k) c.push_back(adams[k] / Rational(factorial(k)));
  return DSeries(n, std::move(c));
}

/// Psi_k = D^k / k!.
inline DSeries adams_operator(std::size_t n, std::size_t k) {
  return DSeries::monomial(n, k, Rational(1) / Rational(factorial(k)));
}

/// Elementary symmetric polynomial sigma_k(1, 2, ..., m).
inline Integer elementary_symmetric(std::size_t m, std::size_t k) {
  std::vector<Integer> e(k + 1, 0);
  e[0] = 1;
  for (std::size_t x = 1; x <= m; ++x) {
    for (std::size_t j = std::min(k, x); j >= 1; --j) e[j] += Integer(static_cast<unsigned long>(x)) * e[j - 1];
  }
  return e[k];
}

/// alpha_k(A, B) = sum_nu (-1)^nu binom(k, nu) a_nu b_{k-nu} on Adams coordinates.
inline Rational alpha_form(std::size_t k, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (k >= a.size() || k >= b.size()) throw DimensionError("alpha_form index exceeds the number of coordinates");
  Rational s = 0;
  for (std::size_t nu = 0; nu <= k; ++nu) {
    s += Rational(sign_power(nu)) * Rational(binomial(Integer(static_cast<unsigned long>(k)), nu)) * a[nu] * b[k - nu];
  }
  return s;
}

namespace detail {

inline void require_same_space(std::size_t n, const DSeries& a, const DSeries& b) {
  if (a.order() != n || b.order() != n) {
    throw DimensionError("pairing on P^" + std::to_string(n) + " needs operators truncated at D^" +
                         std::to_string(n + 1));
  }
}

}  // namespace detail

/// <A, B> = (A(-D) B(D) gamma_n)(0), using (D^k gamma_n)(0) = k! [t^k] gamma_n
/// and gamma_n(t) = (t+1)...(t+n) / n!.
inline Rational hilbert_pairing(std::size_t n, const DSeries& a, const DSeries& b) {
  detail::require_same_space(n, a, b);
  std::vector<Rational> gamma{Rational(1)};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Rational> next(gamma.size() + 1, Rational(0));
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      next[j] += gamma[j] * Rational(static_cast<unsigned long>(i));
      next[j + 1] += gamma[j];
    }
    gamma = std::move(next);
  }
  auto prod = a.reflect() * b;
  Rational s = 0;
  for (std::size_t k = 0; k <= n; ++k) s += prod[k] * Rational(factorial(k)) * gamma[k];
  return s / Rational(factorial(n));
}

/// The same pairing as (1/n!) sum_k sigma_{n-k}(1..n) alpha_k(A, B).
inline Rational hilbert_pairing_sigma(std::size_t n, const DSeries& a, const DSeries& b) {
  detail::require_same_space(n, a, b);
  auto aa = adams_coordinates(a);
  auto bb = adams_coordinates(b);
  Rational s = 0;
  for (std::size_t k = 0; k <= n; ++k) s += Rational(elementary_symmetric(n, n - k)) * alpha_form(k, aa, bb);
  return s / Rational(factorial(n));
}

inline Rational hilbert_pairing(std::size_t n, const NumPoly& f, const NumPoly& g) {
  return hilbert_pairing(n, to_d(chern(f)), to_d(chern(g)));
}

enum class K0Basis { Binomial, Adams, Twists, StandardXi };

inline const char* to_string(K0Basis b) {
  switch (b) {
    case K0Basis::Binomial: return "binomial";
    case K0Basis::Adams: return "adams";
    case K0Basis::Twists: return "twists";
    case K0Basis::StandardXi: return "xi";
  }
  return "?";
}

inline K0Basis parse_k0_basis(const std::string& s) {
  if (s == "binomial") return K0Basis::Binomial;
  if (s == "adams") return K0Basis::Adams;
  if (s == "twists") return K0Basis::Twists;
  if (s == "xi" || s == "standard_xi") return K0Basis::StandardXi;
  throw std::invalid_argument("unknown basis '" + s + "'; expected adams, binomial, twists or xi");
}

/// The basis as operators in D.
///   binomial: nabla^0, ..., nabla^n   (the classes gamma_n, ..., gamma_0)
///   adams:    Psi_0, ..., Psi_n
///   twists:   e^{kD}, k = 0..n        (O, O(1), ..., O(n))
///   xi:       n = 2 only, (3/2) D^2, -D, 2/3 - D^2/3
inline std::vector<DSeries> k0_basis(std::size_t n, K0Basis basis) {
  std::vector<DSeries> out;
  switch (basis) {
    case K0Basis::Binomial: {
      auto nab = DSeries::one(n) - DSeries::exp_linear(n, Rational(-1));
      for (std::size_t k = 0; k <= n; ++k) out.push_back(nab.pow(k));
      break;
    }
    case K0Basis::Adams:
      for (std::size_t k = 0; k <= n; ++k) out.push_back(adams_operator(n, k));
      break;
    case K0Basis::Twists:
      for (std::size_t k = 0; k <= n; ++k) out.push_back(DSeries::exp_linear(n, Rational(static_cast<unsigned long>(k))));
      break;
    case K0Basis::StandardXi:
      if (n % 2 == 1) {
        throw std::invalid_argument("standard xi basis for odd n needs the quadratic extension Q(sqrt((n+1)/2)); "
                                    "not supported");
      }
      if (n != 2) throw std::invalid_argument("standard xi basis is only available for n = 2");
      out.push_back(DSeries::monomial(2, 2, Rational(3) / Rational(2)));
      out.push_back(DSeries::monomial(2, 1, Rational(-1)));
      out.push_back(DSeries(2, {Rational(2) / Rational(3), Rational(0), Rational(-1) / Rational(3)}));
      break;
  }
  return out;
}

/// Gram matrix (i, j) = <b_i, b_j>. The Adams path evaluates the sigma
/// formula and cross-checks every entry against the direct pairing.
inline RatMatrix gram_matrix(std::size_t n, K0Basis basis) {
  auto b = k0_basis(n, basis);
  return RatMatrix::generate(n + 1, n + 1, [&](std::size_t i, std::size_t j) {
    if (basis != K0Basis::Adams) return hilbert_pairing(n, b[i], b[j]);
    Rational s = hilbert_pairing_sigma(n, b[i], b[j]);
    if (s != hilbert_pairing(n, b[i], b[j])) throw std::logic_error("sigma formula disagrees with direct pairing");
    return s;
  });
}

/// kappa = (-1)^n e^{-(n+1)D}, i.e. f(t) -> (-1)^n f(t - n - 1).
inline DSeries kappa_pn(std::size_t n) {
  return Rational(sign_power(n)) * DSeries::exp_linear(n, Rational(-static_cast<long>(n + 1)));
}

/// eta = kappa - (-1)^n.
inline DSeries eta_pn(std::size_t n) { return kappa_pn(n) - DSeries::constant(n, Rational(sign_power(n))); }

/// zeta = -tanh((n+1) D / 2).
inline DSeries zeta_pn(std::size_t n) {
  return DSeries::tanh_linear(n, Rational(-static_cast<long>(n + 1)) / Rational(2));
}

/// rk(sum x_nu nabla^nu) = x_0.
inline Rational rank(const NablaSeries& a) { return a[0]; }
inline Rational rank(const DSeries& a) { return to_nabla(a)[0]; }

/// True iff every nabla coordinate of A is an integer, i.e. A preserves M_n.
inline bool integrality_test(const DSeries& a) { return to_nabla(a).is_integral(); }

}  // namespace semiortho

#endif  // SEMIORTHO_K0_PN_HPP
