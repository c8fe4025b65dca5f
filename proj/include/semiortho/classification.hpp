#ifndef SEMIORTHO_CLASSIFICATION_HPP
#define SEMIORTHO_CLASSIFICATION_HPP

#include "bilinear_form.hpp"
#include "exact_linalg.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "series.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semiortho {

/// Raised when the characteristic polynomial of kappa has non-rational roots,
/// so the root-space decomposition cannot be carried out over Q.
class IrrationalSpectrumError : public std::domain_error {
 public:
  IrrationalSpectrumError(const std::string& what, RationalRootSplit split)
      : std::domain_error(what), split_(std::move(split)) {}
  const RationalRootSplit& split() const { return split_; }

 private:
  RationalRootSplit split_;
};

/// One biorthogonal summand of the root decomposition of kappa. For mu = +-1
/// it is the root space V_mu; otherwise V_mu + V_{1/mu} with |mu| > 1, the
/// first `plus_dimension` basis columns spanning V_mu.
struct RootSummand {
  Rational mu;
  bool paired = false;
  RatMatrix basis;  ///< columns in ambient coordinates
  RatMatrix gram;   ///< restricted form
  std::size_t plus_dimension = 0;
};

namespace detail {

inline RatMatrix root_space_basis(const RatMatrix& kappa, const Rational& mu, std::size_t multiplicity) {
  auto shifted = kappa - mu * RatMatrix::identity(kappa.rows());
  auto vs = nullspace(shifted.power(multiplicity));
  if (vs.size() != multiplicity) throw std::logic_error("root space dimension differs from multiplicity");
  return RatMatrix::from_columns(kappa.rows(), vs);
}

inline RatMatrix hconcat(const RatMatrix& a, const RatMatrix& b) {
  return RatMatrix::generate(a.rows(), a.cols() + b.cols(), [&](std::size_t i, std::size_t j) {
    return j < a.cols() ? a(i, j) : b(i, j - a.cols());
  });
}

}  // namespace detail

/// Splits a nondegenerate rational form into the biorthogonal root summands of
/// its canonical operator, checking that root spaces with lambda * mu != 1
/// pair to zero in both orders.
inline std::vector<RootSummand> biorthogonal_split(const RatMatrix& gram) {
  gram.require_square("biorthogonal_split");
  if (gram.rows() == 0) return {};
  auto kappa = canonical_operator(gram);
  auto split = rational_roots(char_poly(kappa));
  if (split.residual.degree() > 0) {
    throw IrrationalSpectrumError("characteristic polynomial of kappa has the irrational factor " +
                                      split.residual.to_string(),
                                  split);
  }

  std::map<Rational, RatMatrix> spaces;
  for (const auto& r : split.roots) spaces.emplace(r.value, detail::root_space_basis(kappa, r.value, r.multiplicity));

  for (const auto& [lambda, bl] : spaces) {
    for (const auto& [mu, bm] : spaces) {
      if (lambda * mu == 1) continue;
      if (!(bl.transpose() * gram * bm).is_zero()) {
        throw std::logic_error("root spaces " + to_string(lambda) + " and " + to_string(mu) + " are not biorthogonal");
      }
    }
  }

  std::vector<RootSummand> out;
  for (int eps : {-1, 1}) {
    auto it = spaces.find(Rational(eps));
    if (it == spaces.end()) continue;
    out.push_back({Rational(eps), false, it->second, it->second.transpose() * gram * it->second, it->second.cols()});
  }
  for (const auto& [mu, plus] : spaces) {
    if (abs(mu) <= 1) continue;
    auto inv = spaces.find(Rational(1 / mu));
    if (inv == spaces.end() || inv->second.cols() != plus.cols()) {
      throw std::logic_error("eigenvalue " + to_string(mu) + " is not matched by its inverse");
    }
    auto basis = detail::hconcat(plus, inv->second);
    out.push_back({mu, true, basis, basis.transpose() * gram * basis, plus.cols()});
  }
  return out;
}

inline std::vector<RootSummand> biorthogonal_split(const BilinearLattice& lattice) {
  return biorthogonal_split(to_rational(lattice.gram()));
}

enum class FormVerdict { Type1, Type2, DecomposableRational, IrrationalSpectrum };

inline const char* to_string(FormVerdict v) {
  switch (v) {
    case FormVerdict::Type1: return "Type1";
    case FormVerdict::Type2: return "Type2";
    case FormVerdict::DecomposableRational: return "DecomposableRational";
    case FormVerdict::IrrationalSpectrum: return "IrrationalSpectrum";
  }
  return "?";
}

struct FormTypeReport {
  std::size_t dimension = 0;
  RatPolynomial char_poly_of_kappa;
  std::vector<RationalRoot> rational_eigenvalues;
  FormVerdict verdict = FormVerdict::DecomposableRational;
  // Type1: kappa = epsilon * I + eta, eta^{n+1} = 0 != eta^n, epsilon = (-1)^n.
  std::size_t n = 0;
  int epsilon = 0;
  /// Type1 only: <v, eta^n v> for the first standard basis vector outside
  /// ker(eta^n). Not reduced modulo squares. Absent for summands that were
  /// identified from Jordan data alone.
  std::optional<Rational> rho;
  // Type2: dimension 2k, eigenvalues mu and 1/mu with |mu| >= 1.
  std::size_t k = 0;
  Rational mu = 0;
  std::vector<FormTypeReport> summands;
  RatPolynomial irrational_factor;

  friend bool operator==(const FormTypeReport&, const FormTypeReport&) = default;
};

namespace detail {

inline FormTypeReport type1_piece(std::size_t chain_length, int eps) {
  FormTypeReport r;
  r.dimension = chain_length;
  r.verdict = FormVerdict::Type1;
  r.n = chain_length - 1;
  r.epsilon = eps;
  r.char_poly_of_kappa = RatPolynomial::linear_root(Rational(eps)).pow(chain_length);
  r.rational_eigenvalues = {{Rational(eps), chain_length}};
  return r;
}

inline FormTypeReport type2_piece(std::size_t chain_length, const Rational& mu) {
  FormTypeReport r;
  r.dimension = 2 * chain_length;
  r.verdict = FormVerdict::Type2;
  r.k = chain_length;
  r.mu = mu;
  if (abs(mu) == 1) {
    r.char_poly_of_kappa = RatPolynomial::linear_root(mu).pow(2 * chain_length);
    r.rational_eigenvalues = {{mu, 2 * chain_length}};
  } else {
    Rational inv = 1 / mu;
    r.char_poly_of_kappa =
        RatPolynomial::linear_root(mu).pow(chain_length) * RatPolynomial::linear_root(inv).pow(chain_length);
    r.rational_eigenvalues = {{std::min(mu, inv), chain_length}, {std::max(mu, inv), chain_length}};
  }
  return r;
}

/// Indecomposable pieces of one root summand, read from its Jordan partition.
inline std::vector<FormTypeReport> pieces_of(const RootSummand& s) {
  auto kappa = canonical_operator(s.gram);
  std::vector<FormTypeReport> pieces;
  if (!s.paired) {
    int eps = s.mu == 1 ? 1 : -1;
    auto eta = kappa - s.mu * RatMatrix::identity(kappa.rows());
    std::map<std::size_t, std::size_t> twin_chains;  // length -> count, chains that pair up
    for (std::size_t len : jordan_partition(eta)) {
      if (sign_power(len - 1) == eps) {
        pieces.push_back(type1_piece(len, eps));
      } else {
        ++twin_chains[len];
      }
    }
    for (auto it = twin_chains.rbegin(); it != twin_chains.rend(); ++it) {
      if (it->second % 2 != 0) {
        throw std::logic_error("unpaired Jordan chain of length " + std::to_string(it->first) + " for eigenvalue " +
                               std::to_string(eps));
      }
      for (std::size_t i = 0; i < it->second / 2; ++i) pieces.push_back(type2_piece(it->first, s.mu));
    }
  } else {
    auto eta_plus = kappa.block(0, 0, s.plus_dimension, s.plus_dimension) -
                    s.mu * RatMatrix::identity(s.plus_dimension);
    for (std::size_t len : jordan_partition(eta_plus)) pieces.push_back(type2_piece(len, s.mu));
  }
  return pieces;
}

inline Rational type1_rho(const RatMatrix& gram, const RatMatrix& eta, std::size_t n) {
  auto top = eta.power(n);
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    auto v = unit_vector<Rational>(gram.rows(), i);
    auto w = top * v;
    bool nonzero = std::any_of(w.begin(), w.end(), [](const Rational& q) { return q != 0; });
    if (nonzero) return dot(v, gram * w);
  }
  throw std::logic_error("eta^n vanishes on a type-1 form");
}

}  // namespace detail

/// Classifies a nondegenerate rational form through the Jordan structure of
/// its canonical operator.
inline FormTypeReport detect_type(const RatMatrix& gram) {
  gram.require_square("detect_type");
  FormTypeReport report;
  report.dimension = gram.rows();
  if (gram.rows() == 0) {
    report.char_poly_of_kappa = RatPolynomial::constant(Rational(1));
    return report;
  }
  auto kappa = canonical_operator(gram);
  report.char_poly_of_kappa = char_poly(kappa);
  auto roots = rational_roots(report.char_poly_of_kappa);
  report.rational_eigenvalues = roots.roots;
  if (roots.residual.degree() > 0) {
    report.verdict = FormVerdict::IrrationalSpectrum;
    report.irrational_factor = roots.residual;
    return report;
  }

  auto summands = biorthogonal_split(gram);
  std::vector<std::vector<FormTypeReport>> pieces;
  std::size_t total = 0;
  for (const auto& s : summands) {
    pieces.push_back(detail::pieces_of(s));
    total += pieces.back().size();
  }

  if (total == 1) {
    const auto& only = pieces.front().front();
    report.verdict = only.verdict;
    report.n = only.n;
    report.epsilon = only.epsilon;
    report.k = only.k;
    report.mu = only.mu;
    if (only.verdict == FormVerdict::Type1) {
      auto eta = kappa - Rational(only.epsilon) * RatMatrix::identity(gram.rows());
      if (nilpotency_index(eta) != report.n + 1) throw std::logic_error("type-1 nilpotency index mismatch");
      report.rho = detail::type1_rho(gram, eta, report.n);
    }
    return report;
  }

  report.verdict = FormVerdict::DecomposableRational;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (pieces[i].size() == 1) {
      report.summands.push_back(detect_type(summands[i].gram));
    } else {
      for (auto& p : pieces[i]) report.summands.push_back(std::move(p));
    }
  }
  return report;
}

inline FormTypeReport detect_type(const BilinearLattice& lattice) { return detect_type(to_rational(lattice.gram())); }

/// 2k x 2k Gram matrix with two Jordan chains of length k for kappa, with
/// eigenvalues mu and 1/mu: the upper-right block has mu on its antidiagonal
/// and 1 just right of it, the lower-left block has 1 on its antidiagonal.
inline RatMatrix standard_type2_gram(std::size_t k, const Rational& mu) {
  if (k == 0) throw std::invalid_argument("type-2 chain length must be positive");
  if (mu == 0) throw std::invalid_argument("type-2 eigenvalue must be non-zero");
  if (mu == sign_power(k + 1)) {
    throw std::invalid_argument("type-2 forms require mu != (-1)^(k+1); got mu = " + to_string(mu));
  }
  return RatMatrix::generate(2 * k, 2 * k, [&](std::size_t i, std::size_t j) -> Rational {
    if (i < k && j >= k) {
      std::size_t c = j - k;
      if (c + i == k - 1) return mu;
      if (i >= 1 && c + i == k) return 1;
      return 0;
    }
    if (i >= k && j < k) return (i - k) + j == k - 1 ? 1 : 0;
    return 0;
  });
}

/// (n+1) x (n+1) Gram matrix of the standard Jordan basis of a type-1 form:
/// g(i, n-i) = (-1)^i, g(i, n-i+1) = (-1)^(i-1), zero elsewhere.
inline RatMatrix standard_type1_gram(std::size_t n) {
  return RatMatrix::generate(n + 1, n + 1, [&](std::size_t i, std::size_t j) -> Rational {
    if (i + j == n) return sign_power(i);
    if (i >= 1 && i + j == n + 1) return sign_power(i - 1);
    return 0;
  });
}

/// zeta = (eps kappa - 1)(eps kappa + 1)^{-1} with eps = (-1)^n.
inline RatMatrix zeta_from_kappa(const RatMatrix& kappa, std::size_t n) {
  kappa.require_square("zeta_from_kappa");
  const Rational eps = sign_power(n);
  auto id = RatMatrix::identity(kappa.rows());
  if (!nilpotency_index(kappa - eps * id)) {
    throw std::invalid_argument("kappa - (-1)^n is not nilpotent; input is not of type 1");
  }
  auto ek = eps * kappa;
  RatMatrix denom_inv;
  try {
    denom_inv = inverse(ek + id);
  } catch (const SingularMatrixError&) {
    throw std::invalid_argument("eps*kappa + 1 is singular; input is not of type 1");
  }
  return (ek - id) * denom_inv;
}

/// kappa = eps (1 + zeta)(1 - zeta)^{-1}.
inline RatMatrix kappa_from_zeta(const RatMatrix& zeta, std::size_t n) {
  const Rational eps = sign_power(n);
  auto id = RatMatrix::identity(zeta.rows());
  return eps * ((id + zeta) * inverse(id - zeta));
}

/// The isometry f(zeta) of a type-1 form with f(0) = sign and prescribed odd
/// coefficients a_1, a_3, ...; the even coefficients are the unique solution
/// of f(-zeta) f(zeta) = 1 mod zeta^{n+1}.
inline ZetaSeries type1_isometry_from_odd(const std::vector<Rational>& odd, int sign, std::size_t n) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("isometry sign must be +1 or -1");
  const std::size_t odd_count = (n + 1) / 2;
  if (odd.size() != odd_count) {
    throw std::invalid_argument("expected " + std::to_string(odd_count) + " odd coefficients for n = " +
                                std::to_string(n) + ", got " + std::to_string(odd.size()));
  }
  std::vector<Rational> a(n + 1, Rational(0));
  a[0] = sign;
  for (std::size_t j = 0; j < odd_count; ++j) a[2 * j + 1] = odd[j];
  // zeta^{2m}-coefficient of f(-zeta) f(zeta): 2 a_0 a_{2m} + sum_{i=1}^{2m-1} (-1)^i a_i a_{2m-i} = 0.
  for (std::size_t m2 = 2; m2 <= n; m2 += 2) {
    Rational s = 0;
    for (std::size_t i = 1; i < m2; ++i) s += Rational(sign_power(i)) * a[i] * a[m2 - i];
    a[m2] = -s / (2 * a[0]);
  }
  return ZetaSeries(n, std::move(a));
}

/// A^* A with A^* the right dual; two invertible elements of the canonical
/// algebra lie in one isometry orbit iff these invariants agree.
inline RatMatrix isometry_orbit_invariant(const RatMatrix& gram, const RatMatrix& a) {
  if (!is_reflexive(gram, a)) throw std::invalid_argument("operator does not commute with kappa");
  return right_dual(gram, a) * a;
}

inline RatMatrix isometry_orbit_invariant(const BilinearLattice& lattice, const RatMatrix& a) {
  return isometry_orbit_invariant(to_rational(lattice.gram()), a);
}

}  // namespace semiortho

#endif  // SEMIORTHO_CLASSIFICATION_HPP
