#ifndef SEMIORTHO_MARKOV_HPP
#define SEMIORTHO_MARKOV_HPP

#include "bilinear_form.hpp"
#include "matrix.hpp"
#include "mutations.hpp"
#include "number.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiortho {

/// Entries of the rank-3 Gram matrix [[1, a, b], [0, 1, c], [0, 0, 1]].
struct MarkovTriple {
  Integer a = 0;
  Integer b = 0;
  Integer c = 0;

  IntMatrix gram() const { return IntMatrix{{1, a, b}, {0, 1, c}, {0, 0, 1}}; }

  static MarkovTriple from_gram(const IntMatrix& g) {
    if (g.rows() != 3 || !is_unit_upper_triangular(g)) {
      throw std::invalid_argument("expected a 3x3 unit upper-triangular Gram matrix");
    }
    return {g(0, 1), g(0, 2), g(1, 2)};
  }

  const Integer& at(std::size_t pos) const {
    switch (pos) {
      case 1: return a;
      case 2: return b;
      case 3: return c;
    }
    throw std::out_of_range("triple position must be 1, 2 or 3");
  }

  Integer max_abs() const {
    Integer m = abs(a);
    if (abs(b) > m) m = abs(b);
    if (abs(c) > m) m = abs(c);
    return m;
  }

  std::string to_string() const { return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")"; }

  friend bool operator==(const MarkovTriple&, const MarkovTriple&) = default;
};

class NotMarkovError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (0,0,0) solves the equation but is the identity form, not of type 1.
class ZeroTripleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// tr(kappa) = 3 - a^2 - b^2 - c^2 + abc.
inline Integer trace_kappa_rank3(const MarkovTriple& t) {
  return 3 - t.a * t.a - t.b * t.b - t.c * t.c + t.a * t.b * t.c;
}

inline bool is_markov(const MarkovTriple& t) { return t.a * t.a + t.b * t.b + t.c * t.c == t.a * t.b * t.c; }

/// a -> bc - a, b -> ac - b or c -> ab - c.
inline MarkovTriple vieta(const MarkovTriple& t, std::size_t pos) {
  switch (pos) {
    case 1: return {t.b * t.c - t.a, t.b, t.c};
    case 2: return {t.a, t.a * t.c - t.b, t.c};
    case 3: return {t.a, t.b, t.a * t.b - t.c};
  }
  throw std::out_of_range("Vieta position must be 1, 2 or 3");
}

/// One step of a reduction. A sign flip negates basis vector `vector_index`
/// (e_0 flips a and b, e_1 flips a and c, e_2 flips b and c). A Vieta step
/// replaces the entry at `position` and is realized by the mutation `word`
/// (R2, L2, L1 for positions 1, 2, 3), which also permutes and re-signs
/// entries; `after` is the Gram triple of the mutated basis.
struct ReductionMove {
  enum class Kind { SignFlip, Vieta };
  Kind kind = Kind::SignFlip;
  std::size_t vector_index = 0;
  std::size_t position = 0;
  BraidWord word;
  MarkovTriple after;

  friend bool operator==(const ReductionMove&, const ReductionMove&) = default;
};

struct ReductionTrace {
  MarkovTriple start;
  std::vector<ReductionMove> moves;
  MarkovTriple end;

  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

/// Gram rewrite of a sign flip of basis vector i.
inline MarkovTriple flip_triple(const MarkovTriple& t, std::size_t vector_index) {
  switch (vector_index) {
    case 0: return {-t.a, -t.b, t.c};
    case 1: return {-t.a, t.b, -t.c};
    case 2: return {t.a, -t.b, -t.c};
  }
  throw std::out_of_range("basis vector index must be 0, 1 or 2");
}

/// Gram rewrites of the mutations used in the descent:
///   L1: (a, b, c) -> (-a, c - ab, b)
///   L2: (a, b, c) -> (b - ac, a, -c)
///   R2: (a, b, c) -> (b, a - bc, -c)
inline MarkovTriple mutate_triple(const MarkovTriple& t, const BraidLetter& letter) {
  if (letter.index == 1 && letter.direction == Direction::Left) return {-t.a, t.c - t.a * t.b, t.b};
  if (letter.index == 2 && letter.direction == Direction::Left) return {t.b - t.a * t.c, t.a, -t.c};
  if (letter.index == 2 && letter.direction == Direction::Right) return {t.b, t.a - t.b * t.c, -t.c};
  if (letter.index == 1 && letter.direction == Direction::Right) return {-t.a, t.c, t.b - t.a * t.c};
  throw std::out_of_range("rank-3 mutations have index 1 or 2");
}

/// The mutation realizing the Vieta move at `position`.
inline BraidLetter vieta_letter(std::size_t position) {
  switch (position) {
    case 1: return {2, Direction::Right};
    case 2: return {2, Direction::Left};
    case 3: return {1, Direction::Left};
  }
  throw std::out_of_range("Vieta position must be 1, 2 or 3");
}

namespace detail {

/// Flips pairs of signs until no entry is negative. A non-zero Markov triple
/// has no zero entry and an even number of negative entries.
inline void normalize_signs(MarkovTriple& t, std::vector<ReductionMove>& moves) {
  const bool na = t.a < 0;
  const bool nb = t.b < 0;
  const bool nc = t.c < 0;
  const int count = int(na) + int(nb) + int(nc);
  if (count == 0) return;
  if (count % 2 != 0) throw std::logic_error("odd number of negative entries in a Markov triple " + t.to_string());
  std::size_t vector_index;
  if (count == 2) {
    vector_index = !nc ? 0 : (!nb ? 1 : 2);
  } else {
    throw std::logic_error("three negative entries cannot occur in a Markov triple");
  }
  t = flip_triple(t, vector_index);
  ReductionMove m;
  m.kind = ReductionMove::Kind::SignFlip;
  m.vector_index = vector_index;
  m.after = t;
  moves.push_back(m);
}

}  // namespace detail

/// Reduces a non-zero solution of a^2 + b^2 + c^2 = abc to (3,3,3): signs are
/// made non-negative by pair flips, then the Vieta move giving the smallest
/// new maximum (lowest position on ties) is applied while it strictly
/// decreases the maximum, renormalizing signs after every step.
inline ReductionTrace reduce_to_canonical(const MarkovTriple& start) {
  if (!is_markov(start)) throw NotMarkovError("triple " + start.to_string() + " does not satisfy a^2+b^2+c^2 = abc");
  if (start == MarkovTriple{}) throw ZeroTripleError("the zero triple gives the identity form and is not reduced");

  ReductionTrace trace;
  trace.start = start;
  MarkovTriple t = start;
  detail::normalize_signs(t, trace.moves);
  const MarkovTriple target{3, 3, 3};
  while (!(t == target)) {
    const Integer current = t.max_abs();
    std::size_t best = 0;
    Integer best_max = current;
    for (std::size_t pos = 1; pos <= 3; ++pos) {
      Integer m = vieta(t, pos).max_abs();
      if (m < best_max) {
        best_max = m;
        best = pos;
      }
    }
    if (best == 0) throw std::logic_error("descent stalled at " + t.to_string());
    ReductionMove m;
    m.kind = ReductionMove::Kind::Vieta;
    m.position = best;
    m.word.letters.push_back(vieta_letter(best));
    t = mutate_triple(t, m.word.letters.front());
    m.after = t;
    trace.moves.push_back(m);
    detail::normalize_signs(t, trace.moves);
  }
  trace.end = t;
  return trace;
}

/// Replays a trace on the standard basis of the start form as vector
/// operations and returns the final collection. Throws std::logic_error if
/// a step leaves the collection non-semiorthonormal or its Gram matrix
/// disagrees with the recorded triple.
inline SonCollection replay_trace(const ReductionTrace& trace) {
  BilinearLattice lattice(trace.start.gram());
  SonCollection c = SonCollection::standard_basis(lattice);
  for (const auto& m : trace.moves) {
    c = m.kind == ReductionMove::Kind::SignFlip ? flip_sign(c, m.vector_index) : apply_braid(c, m.word);
    if (!is_semiorthonormal(c)) throw std::logic_error("replayed collection is not semiorthonormal");
    if (!(MarkovTriple::from_gram(c.gram()) == m.after)) {
      throw std::logic_error("replayed Gram matrix differs from the recorded triple " + m.after.to_string());
    }
  }
  if (!(MarkovTriple::from_gram(c.gram()) == trace.end)) throw std::logic_error("replay does not reach the end");
  return c;
}

enum class Rank3Kind { Unipotent, MinusCase, Split };

inline const char* to_string(Rank3Kind k) {
  switch (k) {
    case Rank3Kind::Unipotent: return "Unipotent";
    case Rank3Kind::MinusCase: return "MinusCase";
    case Rank3Kind::Split: return "Split";
  }
  return "?";
}

struct Rank3Verdict {
  Rank3Kind kind;
  Integer trace;  ///< tr(kappa); for Split it equals 1 + lambda + 1/lambda
};

/// Sorts a rank-3 form with a semiorthonormal basis by tr(kappa): 3 for a
/// unipotent kappa, -1 for eigenvalues (1, -1, -1), anything else for
/// eigenvalues (1, lambda, 1/lambda).
inline Rank3Verdict classify_rank3(const IntMatrix& gram) {
  if (gram.rows() != 3 || gram.cols() != 3) throw DimensionError("classify_rank3 needs a rank-3 form");
  auto t = MarkovTriple::from_gram(gram);
  Integer tr = canonical_operator(gram).trace();
  if (tr != trace_kappa_rank3(t)) throw std::logic_error("rank-3 trace formula violated");
  if (tr == 3) return {Rank3Kind::Unipotent, tr};
  if (tr == -1) return {Rank3Kind::MinusCase, tr};
  return {Rank3Kind::Split, tr};
}

inline Rank3Verdict classify_rank3(const BilinearLattice& lattice) { return classify_rank3(lattice.gram()); }

}  // namespace semiortho

#endif  // SEMIORTHO_MARKOV_HPP
