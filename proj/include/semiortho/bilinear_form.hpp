#ifndef SEMIORTHO_BILINEAR_FORM_HPP
#define SEMIORTHO_BILINEAR_FORM_HPP

#include "exact_linalg.hpp"
#include "matrix.hpp"
#include "number.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace semiortho {

// Conventions used throughout:
//   <v, w> = v^t * gram * w, gram(i, j) = <e_i, e_j>;
//   operators act on coordinate columns;
//   U^perp = { w : <u, w> = 0 for all u in U } (right orthogonal),
//   perpU  = { w : <w, u> = 0 for all u in U } (left orthogonal).

/// Free lattice of finite rank with a unimodular integer Gram matrix.
class BilinearLattice {
 public:
  BilinearLattice() : gram_(IntMatrix::zero(0, 0)) {}

  explicit BilinearLattice(IntMatrix gram) : gram_(std::move(gram)) {
    gram_.require_square("BilinearLattice");
    Integer d = det(gram_);
    if (d != 1 && d != -1) {
      throw UnimodularityError("Gram matrix has determinant " + d.get_str() + ", expected +1 or -1");
    }
  }

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }

  Integer pair(const IntVector& v, const IntVector& w) const {
    if (v.size() != rank() || w.size() != rank()) {
      throw DimensionError("pairing vectors must have length " + std::to_string(rank()));
    }
    return dot(v, gram_ * w);
  }

  friend bool operator==(const BilinearLattice& a, const BilinearLattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
};

/// Gram matrix of an arbitrary family of vectors under a fixed Gram matrix.
template <class T>
Matrix<T> gram_of(const Matrix<T>& gram, const std::vector<Vector<T>>& vectors) {
  auto b = Matrix<T>::from_columns(gram.rows(), vectors);
  return b.transpose() * gram * b;
}

inline IntMatrix gram_of(const BilinearLattice& lattice, const std::vector<IntVector>& vectors) {
  return gram_of(lattice.gram(), vectors);
}

/// kappa = gram^{-1} gram^t, the unique operator with <v, w> = <w, kappa v>.
template <class T>
Matrix<T> canonical_operator(const Matrix<T>& gram) {
  gram.require_square("canonical_operator");
  return exact_inverse(gram) * gram.transpose();
}

inline IntMatrix canonical_operator(const BilinearLattice& lattice) {
  return canonical_operator(lattice.gram());
}

namespace detail {

template <class T>
void require_operator_shape(const Matrix<T>& gram, const Matrix<T>& phi) {
  if (!phi.is_square() || phi.rows() != gram.rows()) {
    throw DimensionError("operator " + phi.shape() + " does not act on a lattice of rank " +
                         std::to_string(gram.rows()));
  }
}

template <class T>
Matrix<T> gram_as(const BilinearLattice& lattice) {
  if constexpr (std::is_same_v<T, Integer>) {
    return lattice.gram();
  } else {
    return to_rational(lattice.gram());
  }
}

}  // namespace detail

/// Left dual: <(left_dual phi) v, w> = <v, phi w>; matrix (g^{-1})^t phi^t g^t.
template <class T>
Matrix<T> left_dual(const Matrix<T>& gram, const Matrix<T>& phi) {
  detail::require_operator_shape(gram, phi);
  return exact_inverse(gram).transpose() * phi.transpose() * gram.transpose();
}

/// Right dual: <v, (right_dual phi) w> = <phi v, w>; matrix g^{-1} phi^t g.
template <class T>
Matrix<T> right_dual(const Matrix<T>& gram, const Matrix<T>& phi) {
  detail::require_operator_shape(gram, phi);
  return exact_inverse(gram) * phi.transpose() * gram;
}

template <class T>
Matrix<T> left_dual(const BilinearLattice& lattice, const Matrix<T>& phi) {
  return left_dual(detail::gram_as<T>(lattice), phi);
}

template <class T>
Matrix<T> right_dual(const BilinearLattice& lattice, const Matrix<T>& phi) {
  return right_dual(detail::gram_as<T>(lattice), phi);
}

/// Reflexive means commuting with the canonical operator.
template <class T>
bool is_reflexive(const Matrix<T>& gram, const Matrix<T>& phi) {
  detail::require_operator_shape(gram, phi);
  auto kappa = canonical_operator(gram);
  return phi * kappa == kappa * phi;
}

template <class T>
bool is_selfdual(const Matrix<T>& gram, const Matrix<T>& phi) {
  return left_dual(gram, phi) == phi && right_dual(gram, phi) == phi;
}

template <class T>
bool is_antiselfdual(const Matrix<T>& gram, const Matrix<T>& phi) {
  auto minus = -phi;
  return left_dual(gram, phi) == minus && right_dual(gram, phi) == minus;
}

/// phi^t g phi = g. Unimodularity of g forces det(phi) = +-1, so phi is invertible.
template <class T>
bool is_isometry(const Matrix<T>& gram, const Matrix<T>& phi) {
  detail::require_operator_shape(gram, phi);
  return phi.transpose() * gram * phi == gram;
}

template <class T>
bool is_reflexive(const BilinearLattice& lattice, const Matrix<T>& phi) {
  return is_reflexive(detail::gram_as<T>(lattice), phi);
}
template <class T>
bool is_selfdual(const BilinearLattice& lattice, const Matrix<T>& phi) {
  return is_selfdual(detail::gram_as<T>(lattice), phi);
}
template <class T>
bool is_antiselfdual(const BilinearLattice& lattice, const Matrix<T>& phi) {
  return is_antiselfdual(detail::gram_as<T>(lattice), phi);
}
template <class T>
bool is_isometry(const BilinearLattice& lattice, const Matrix<T>& phi) {
  return is_isometry(detail::gram_as<T>(lattice), phi);
}

/// M = M1 + M2 with <M2, M1> = 0; coupling(i, j) = <u_i, v_j> for u_i in M1, v_j in M2.
inline BilinearLattice semiorthogonal_sum(const BilinearLattice& first, const BilinearLattice& second,
                                          const IntMatrix& coupling) {
  if (coupling.rows() != first.rank() || coupling.cols() != second.rank()) {
    throw DimensionError("coupling must be " + std::to_string(first.rank()) + "x" +
                         std::to_string(second.rank()) + ", got " + coupling.shape());
  }
  auto lower = IntMatrix::zero(second.rank(), first.rank());
  return BilinearLattice(block_matrix(first.gram(), coupling, lower, second.gram()));
}

/// Projection matrices of a semiorthogonal sum: `to_second` maps M1 -> M2 with
/// <u1, v2> = <to_second u1, v2>_2, `to_first` maps M2 -> M1 with
/// <u1, v2> = <u1, to_first v2>_1.
struct SumProjections {
  IntMatrix to_second;
  IntMatrix to_first;
};

inline SumProjections sum_projections(const BilinearLattice& first, const BilinearLattice& second,
                                      const IntMatrix& coupling) {
  // coupling = to_second^t * g2  and  coupling = g1 * to_first
  auto to_second = (coupling * inverse_unimodular(second.gram())).transpose();
  auto to_first = inverse_unimodular(first.gram()) * coupling;
  return {to_second, to_first};
}

/// Canonical operator of the sum assembled blockwise from the summands:
/// [[k1 - P k2 L, -P k2], [k2 L, k2]] with L = to_second, P = to_first.
inline IntMatrix canonical_operator_from_blocks(const BilinearLattice& first, const BilinearLattice& second,
                                                const IntMatrix& coupling) {
  auto k1 = canonical_operator(first);
  auto k2 = canonical_operator(second);
  auto [lam, rho] = sum_projections(first, second, coupling);
  return block_matrix(IntMatrix(k1 - rho * k2 * lam), IntMatrix(-(rho * k2)), IntMatrix(k2 * lam), k2);
}

/// True iff the blockwise formula reproduces the canonical operator of the sum.
inline bool verify_canmatr(const BilinearLattice& first, const BilinearLattice& second,
                           const IntMatrix& coupling) {
  auto sum = semiorthogonal_sum(first, second, coupling);
  return canonical_operator(sum) == canonical_operator_from_blocks(first, second, coupling);
}

struct ExtensionTrace {
  Integer trace;          ///< tr(kappa_M)
  Integer kappa_e_e;      ///< <kappa_M e, e>
  BilinearLattice extended;
};

/// Builds M = Ze + W with W = perp(e), <e, e> = 1 and e projecting to `ell`
/// in W, then checks tr(kappa_M) = tr(kappa_W) + 1 - <ell, ell> and
/// <kappa_M e, e> = 1 - <ell, ell>. Throws std::logic_error on mismatch.
inline ExtensionTrace extension_trace_check(const BilinearLattice& w, const IntVector& ell) {
  if (ell.size() != w.rank()) throw DimensionError("ell must lie in W");
  // <e, w_j> = <ell, w_j>_W, i.e. the first row is ell^t g_W.
  IntMatrix row(1, w.rank(), ell);
  auto coupling = row * w.gram();
  auto m = semiorthogonal_sum(BilinearLattice(IntMatrix{{1}}), w, coupling);
  auto kappa = canonical_operator(m);
  auto e = unit_vector<Integer>(m.rank(), 0);
  Integer tr = kappa.trace();
  Integer kee = m.pair(kappa * e, e);
  Integer ell_sq = w.pair(ell, ell);
  Integer tr_w = canonical_operator(w).trace();
  if (tr != tr_w + 1 - ell_sq) {
    throw std::logic_error("trace formula violated: tr(kappa_M) = " + tr.get_str());
  }
  if (kee != 1 - ell_sq) {
    throw std::logic_error("<kappa e, e> formula violated: got " + kee.get_str());
  }
  return {tr, kee, m};
}

}  // namespace semiortho

#endif  // SEMIORTHO_BILINEAR_FORM_HPP
