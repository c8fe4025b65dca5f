#ifndef SEMIORTHO_RANDOM_FORMS_HPP
#define SEMIORTHO_RANDOM_FORMS_HPP

// Seeded generators of random unimodular forms and semiorthonormal
// collections, used by the property suites.

#include "bilinear_form.hpp"
#include "exact_linalg.hpp"
#include "matrix.hpp"
#include "mutations.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace semiortho {

using Rng = std::mt19937_64;

inline long random_long(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Integer random_integer(Rng& rng, long lo, long hi) { return Integer(random_long(rng, lo, hi)); }

inline IntVector random_int_vector(Rng& rng, std::size_t n, long bound) {
  IntVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_integer(rng, -bound, bound));
  return v;
}

inline IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  return IntMatrix::generate(rows, cols, [&](std::size_t, std::size_t) { return random_integer(rng, -bound, bound); });
}

/// Unit upper-triangular matrix with entries in [-bound, bound] above the diagonal.
inline IntMatrix random_unit_upper(Rng& rng, std::size_t n, long bound) {
  return IntMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    if (i == j) return Integer(1);
    if (j < i) return Integer(0);
    return random_integer(rng, -bound, bound);
  });
}

/// Product of `shears` random elementary shears with small coefficients and a
/// random diagonal sign matrix; determinant +-1.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t shears, long bound = 2) {
  auto m = IntMatrix::diagonal([&] {
    IntVector d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(random_long(rng, 0, 1) ? Integer(1) : Integer(-1));
    return d;
  }());
  if (n < 2) return m;
  for (std::size_t s = 0; s < shears; ++s) {
    std::size_t i = static_cast<std::size_t>(random_long(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(random_long(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    Integer c = random_integer(rng, -bound, bound);
    auto e = IntMatrix::generate(n, n, [&](std::size_t r, std::size_t k) {
      if (r == k) return Integer(1);
      return (r == i && k == j) ? c : Integer(0);
    });
    m = e * m;
  }
  return m;
}

/// Unimodular form P^t U P with U unit upper triangular and P unimodular.
inline BilinearLattice random_unimodular_form(Rng& rng, std::size_t n, long bound = 2) {
  auto u = random_unit_upper(rng, n, bound);
  auto p = random_unimodular(rng, n, 2 * n, 1);
  return BilinearLattice(p.transpose() * u * p);
}

/// Semiorthonormal collection of length `rank` inside a random unimodular
/// ambient form of rank rank + extra. The collection spans the first
/// summand of a semiorthogonal sum whose first summand carries the form
/// P^t U P, the vectors being the columns of P^{-1}.
inline SonCollection random_son_collection(Rng& rng, std::size_t rank, std::size_t extra, long bound = 2) {
  auto u = random_unit_upper(rng, rank, bound);
  auto p = random_unimodular(rng, rank, 2 * rank, 1);
  BilinearLattice first(p.transpose() * u * p);
  auto pinv = inverse_unimodular(p);
  BilinearLattice ambient = first;
  if (extra > 0) {
    auto second = random_unimodular_form(rng, extra, bound);
    ambient = semiorthogonal_sum(first, second, random_int_matrix(rng, rank, extra, bound));
  }
  std::vector<IntVector> vs;
  for (std::size_t j = 0; j < rank; ++j) {
    IntVector v = pinv.column(j);
    v.resize(ambient.rank(), Integer(0));
    vs.push_back(std::move(v));
  }
  return SonCollection(ambient, std::move(vs));
}

}  // namespace semiortho

#endif  // SEMIORTHO_RANDOM_FORMS_HPP
