#ifndef SEMIORTHO_MUTATIONS_HPP
#define SEMIORTHO_MUTATIONS_HPP

#include "bilinear_form.hpp"
#include "exact_linalg.hpp"
#include "matrix.hpp"

#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semiortho {

class MutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered list of lattice vectors in a fixed ambient lattice. Semiorthonormality
/// (unit upper-triangular Gram matrix) is checked by is_semiorthonormal and
/// required by the mutation operations, not by construction.
struct SonCollection {
  BilinearLattice ambient;
  std::vector<IntVector> vectors;

  SonCollection() = default;
  SonCollection(BilinearLattice lattice, std::vector<IntVector> vs)
      : ambient(std::move(lattice)), vectors(std::move(vs)) {
    for (const auto& v : vectors) {
      if (v.size() != ambient.rank()) {
        throw DimensionError("collection vector has length " + std::to_string(v.size()) +
                             ", ambient rank is " + std::to_string(ambient.rank()));
      }
    }
  }

  /// The standard basis of `lattice`.
  static SonCollection standard_basis(const BilinearLattice& lattice) {
    std::vector<IntVector> vs;
    for (std::size_t i = 0; i < lattice.rank(); ++i) vs.push_back(unit_vector<Integer>(lattice.rank(), i));
    return SonCollection(lattice, std::move(vs));
  }

  std::size_t size() const { return vectors.size(); }
  IntMatrix gram() const { return gram_of(ambient, vectors); }

  friend bool operator==(const SonCollection& a, const SonCollection& b) {
    return a.ambient == b.ambient && a.vectors == b.vectors;
  }
};

inline bool is_unit_upper_triangular(const IntMatrix& g) {
  if (!g.is_square()) return false;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (g(i, i) != 1) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (g(i, j) != 0) return false;
  }
  return true;
}

inline bool is_semiorthonormal(const SonCollection& c) { return is_unit_upper_triangular(c.gram()); }

enum class Direction { Left, Right };

struct BraidLetter {
  std::size_t index;  ///< nu >= 1: acts on the pair (e_{nu-1}, e_nu)
  Direction direction;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;

  std::string to_string() const { return (direction == Direction::Left ? "L" : "R") + std::to_string(index); }
};

struct BraidWord {
  std::vector<BraidLetter> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  /// Parses whitespace separated letters such as "L1 L2 R1". Empty text is the empty word.
  static BraidWord parse(std::string_view text) {
    BraidWord w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'R' && tok[0] != 'l' && tok[0] != 'r')) {
        throw MutationError("bad braid letter '" + tok + "', expected L<n> or R<n>");
      }
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) throw MutationError("bad braid letter '" + tok + "'");
      }
      std::size_t idx = std::stoul(tok.substr(1));
      if (idx == 0) throw MutationError("braid letter index must be >= 1: '" + tok + "'");
      w.letters.push_back({idx, (tok[0] == 'L' || tok[0] == 'l') ? Direction::Left : Direction::Right});
    }
    return w;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& l : letters) {
      if (!s.empty()) s += ' ';
      s += l.to_string();
    }
    return s;
  }
};

/// L(a, b) = (b - <a,b> a, a) and R(a, b) = (b, a - <a,b> b) applied to the
/// pair (e_{nu-1}, e_nu).
inline SonCollection mutate_pair(const SonCollection& c, std::size_t nu, Direction dir) {
  if (nu < 1 || nu >= c.size()) {
    throw MutationError("mutation index " + std::to_string(nu) + " out of range for a collection of length " +
                        std::to_string(c.size()));
  }
  if (!is_semiorthonormal(c)) throw MutationError("mutations are defined only on semiorthonormal collections");
  const IntVector& a = c.vectors[nu - 1];
  const IntVector& b = c.vectors[nu];
  Integer ab = c.ambient.pair(a, b);
  auto vs = c.vectors;
  if (dir == Direction::Left) {
    vs[nu - 1] = b - ab * a;
    vs[nu] = a;
  } else {
    vs[nu - 1] = b;
    vs[nu] = a - ab * b;
  }
  return SonCollection(c.ambient, std::move(vs));
}

inline SonCollection apply_braid(const SonCollection& c, const BraidWord& w) {
  SonCollection out = c;
  for (const auto& letter : w.letters) out = mutate_pair(out, letter.index, letter.direction);
  return out;
}

/// Effect of a mutation on the Gram matrix of a semiorthonormal collection,
/// computed from the Gram matrix alone.
inline IntMatrix mutate_gram(const IntMatrix& g, std::size_t nu, Direction dir) {
  const std::size_t k = g.rows();
  if (nu < 1 || nu >= k) throw MutationError("mutation index out of range");
  const std::size_t i = nu - 1;
  const std::size_t j = nu;
  const Integer& ab = g(i, j);
  // New vectors as integer combinations of the old ones: x_new = sum coef * e_old.
  auto combo = IntMatrix::identity(k).to_rows();  // combo[p] = coordinates of new vector p
  if (dir == Direction::Left) {
    combo[i] = IntVector(k, 0);
    combo[i][j] = 1;
    combo[i][i] = -ab;
    combo[j] = IntVector(k, 0);
    combo[j][i] = 1;
  } else {
    combo[i] = IntVector(k, 0);
    combo[i][j] = 1;
    combo[j] = IntVector(k, 0);
    combo[j][i] = 1;
    combo[j][j] = -ab;
  }
  auto b = IntMatrix::from_rows(combo).transpose();
  return b.transpose() * g * b;
}

/// Flips the sign of vector i: row and column i change sign, the diagonal stays.
inline IntMatrix flip_sign_gram(const IntMatrix& g, std::size_t i) {
  return IntMatrix::generate(g.rows(), g.cols(), [&](std::size_t r, std::size_t c) {
    bool flip = (r == i) != (c == i);
    return flip ? Integer(-g(r, c)) : g(r, c);
  });
}

inline SonCollection flip_sign(const SonCollection& c, std::size_t i) {
  if (i >= c.size()) throw MutationError("sign flip index out of range");
  auto vs = c.vectors;
  for (auto& x : vs[i]) x = -x;
  return SonCollection(c.ambient, std::move(vs));
}

/// Submodule spanned by `basis` whose restricted form is unimodular.
class AdmissibleSubmodule {
 public:
  AdmissibleSubmodule(BilinearLattice ambient, std::vector<IntVector> basis)
      : ambient_(std::move(ambient)), basis_(std::move(basis)) {
    for (const auto& v : basis_) {
      if (v.size() != ambient_.rank()) throw DimensionError("basis vector length does not match ambient rank");
    }
    restricted_ = gram_of(ambient_, basis_);
    Integer d = det(restricted_);
    if (d != 1 && d != -1) {
      throw UnimodularityError("restricted form has determinant " + d.get_str() + "; submodule is not admissible");
    }
    restricted_inverse_ = inverse_unimodular(restricted_);
  }

  const BilinearLattice& ambient() const { return ambient_; }
  const std::vector<IntVector>& basis() const { return basis_; }
  const IntMatrix& gram_restricted() const { return restricted_; }

  /// lambda_U v in U with <v, u> = <lambda_U v, u>_U for all u in U.
  IntVector left_projection(const IntVector& v) const {
    IntVector pairings;
    for (const auto& u : basis_) pairings.push_back(ambient_.pair(v, u));
    return combine(restricted_inverse_.transpose() * pairings);
  }

  /// rho_U v in U with <u, v> = <u, rho_U v>_U for all u in U.
  IntVector right_projection(const IntVector& v) const {
    IntVector pairings;
    for (const auto& u : basis_) pairings.push_back(ambient_.pair(u, v));
    return combine(restricted_inverse_ * pairings);
  }

  bool in_left_orthogonal(const IntVector& v) const {
    for (const auto& u : basis_)
      if (ambient_.pair(v, u) != 0) return false;
    return true;
  }

  bool in_right_orthogonal(const IntVector& v) const {
    for (const auto& u : basis_)
      if (ambient_.pair(u, v) != 0) return false;
    return true;
  }

 private:
  IntVector combine(const IntVector& coords) const {
    IntVector out(ambient_.rank(), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) out = out + coords[i] * basis_[i];
    return out;
  }

  BilinearLattice ambient_;
  std::vector<IntVector> basis_;
  IntMatrix restricted_;
  IntMatrix restricted_inverse_;
};

inline bool is_admissible(const BilinearLattice& ambient, const std::vector<IntVector>& basis) {
  Integer d = det(gram_of(ambient, basis));
  return d == 1 || d == -1;
}

/// LM_U : perpU -> U^perp, v -> v - rho_U v;  RM_U : U^perp -> perpU, v -> v - lambda_U v.
inline IntVector mutation_through_submodule(const AdmissibleSubmodule& u, const IntVector& v, Direction dir) {
  if (dir == Direction::Left) {
    if (!u.in_left_orthogonal(v)) throw MutationError("left mutation requires v in the left orthogonal of U");
    return v - u.right_projection(v);
  }
  if (!u.in_right_orthogonal(v)) throw MutationError("right mutation requires v in the right orthogonal of U");
  return v - u.left_projection(v);
}

}  // namespace semiortho

#endif  // SEMIORTHO_MUTATIONS_HPP
