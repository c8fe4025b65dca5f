#ifndef SEMIORTHO_JSON_IO_HPP
#define SEMIORTHO_JSON_IO_HPP

// JSON encoding shared by the command-line tool and its readers. Matrices are
// arrays of rows; integers are JSON numbers below 2^53 in absolute value and
// decimal strings otherwise; rationals are always "p/q" strings.

#include "classification.hpp"
#include "markov.hpp"
#include "matrix.hpp"
#include "mutations.hpp"
#include "number.hpp"
#include "orbit.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiortho {

using Json = nlohmann::json;

/// Malformed or inconsistent JSON input.
class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw JsonFormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw JsonFormatError(std::string("missing field '") + key + "'");
  return *it;
}

inline const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw JsonFormatError(std::string(what) + " must be an array");
  return j;
}

inline std::size_t read_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw JsonFormatError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace detail

inline Json integer_to_json(const Integer& z) {
  static const Integer limit = Integer(1) << 53;
  if (abs(z) < limit) return Json(z.get_si());
  return Json(z.get_str());
}

inline Integer integer_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_string()) return parse_integer(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(e.what());
  }
  throw JsonFormatError("expected an integer, got " + j.dump());
}

inline Json rational_to_json(const Rational& q) { return Json(to_fraction_string(q)); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw JsonFormatError(e.what());
    }
  }
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j));
  throw JsonFormatError("expected a rational \"p/q\", got " + j.dump());
}

inline Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

inline IntVector int_vector_from_json(const Json& j) {
  detail::require_array(j, "vector");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

inline Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& r : m.to_rows()) out.push_back(vector_to_json(r));
  return out;
}

inline Json matrix_to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (const auto& r : m.to_rows()) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(rational_to_json(x));
    out.push_back(row);
  }
  return out;
}

namespace detail {

template <class T, class Read>
Matrix<T> matrix_from_json(const Json& j, Read read) {
  require_array(j, "matrix");
  std::vector<std::vector<T>> rows;
  for (const auto& r : j) {
    require_array(r, "matrix row");
    std::vector<T> row;
    for (const auto& x : r) row.push_back(read(x));
    rows.push_back(std::move(row));
  }
  if (!rows.empty() && rows.front().empty()) throw JsonFormatError("matrix rows must be non-empty");
  try {
    return Matrix<T>::from_rows(rows);
  } catch (const DimensionError& e) {
    throw JsonFormatError(e.what());
  }
}

}  // namespace detail

inline IntMatrix int_matrix_from_json(const Json& j) {
  return detail::matrix_from_json<Integer>(j, [](const Json& x) { return integer_from_json(x); });
}

inline RatMatrix rat_matrix_from_json(const Json& j) {
  return detail::matrix_from_json<Rational>(j, [](const Json& x) { return rational_from_json(x); });
}

inline Json lattice_to_json(const BilinearLattice& l) {
  return Json{{"rank", l.rank()}, {"gram", matrix_to_json(l.gram())}};
}

inline BilinearLattice lattice_from_json(const Json& j) {
  auto gram = int_matrix_from_json(detail::require(j, "gram"));
  if (j.contains("rank") && detail::read_size(j.at("rank"), "rank") != gram.rows()) {
    throw JsonFormatError("rank does not match the Gram matrix size");
  }
  if (!gram.is_square()) throw JsonFormatError("Gram matrix must be square");
  return BilinearLattice(gram);
}

inline Json operator_to_json(const IntMatrix& phi) { return Json{{"basis", "lattice"}, {"matrix", matrix_to_json(phi)}}; }

inline IntMatrix operator_from_json(const Json& j) {
  const auto& basis = detail::require(j, "basis");
  if (basis != "lattice") throw JsonFormatError("operators must be given in the lattice basis");
  return int_matrix_from_json(detail::require(j, "matrix"));
}

inline Json collection_to_json(const SonCollection& c) {
  Json vs = Json::array();
  for (const auto& v : c.vectors) vs.push_back(vector_to_json(v));
  return Json{{"ambient", lattice_to_json(c.ambient)}, {"vectors", vs}, {"gram", matrix_to_json(c.gram())}};
}

/// Unknown keys (including the informational "gram") are ignored.
inline SonCollection collection_from_json(const Json& j) {
  auto lattice = lattice_from_json(detail::require(j, "ambient"));
  std::vector<IntVector> vs;
  for (const auto& v : detail::require_array(detail::require(j, "vectors"), "vectors")) {
    vs.push_back(int_vector_from_json(v));
  }
  try {
    return SonCollection(lattice, std::move(vs));
  } catch (const DimensionError& e) {
    throw JsonFormatError(e.what());
  }
}

inline Json polynomial_to_json(const RatPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(rational_to_json(c));
  return out;
}

inline RatPolynomial polynomial_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : detail::require_array(j, "polynomial")) c.push_back(rational_from_json(x));
  return RatPolynomial(c);
}

inline FormVerdict verdict_from_string(const std::string& s) {
  for (auto v : {FormVerdict::Type1, FormVerdict::Type2, FormVerdict::DecomposableRational,
                 FormVerdict::IrrationalSpectrum}) {
    if (s == to_string(v)) return v;
  }
  throw JsonFormatError("unknown verdict '" + s + "'");
}

inline Json report_to_json(const FormTypeReport& r) {
  Json eig = Json::array();
  for (const auto& e : r.rational_eigenvalues) {
    eig.push_back(Json{{"value", rational_to_json(e.value)}, {"multiplicity", e.multiplicity}});
  }
  Json j{{"verdict", to_string(r.verdict)},
         {"dimension", r.dimension},
         {"char_poly_of_kappa", polynomial_to_json(r.char_poly_of_kappa)},
         {"rational_eigenvalues", eig}};
  switch (r.verdict) {
    case FormVerdict::Type1:
      j["n"] = r.n;
      j["epsilon"] = r.epsilon;
      if (r.rho) j["rho"] = rational_to_json(*r.rho);
      break;
    case FormVerdict::Type2:
      j["k"] = r.k;
      j["mu"] = rational_to_json(r.mu);
      break;
    case FormVerdict::DecomposableRational: {
      Json s = Json::array();
      for (const auto& x : r.summands) s.push_back(report_to_json(x));
      j["summands"] = s;
      break;
    }
    case FormVerdict::IrrationalSpectrum:
      j["irrational_factor"] = polynomial_to_json(r.irrational_factor);
      break;
  }
  return j;
}

inline FormTypeReport report_from_json(const Json& j) {
  FormTypeReport r;
  const auto& verdict = detail::require(j, "verdict");
  if (!verdict.is_string()) throw JsonFormatError("verdict must be a string");
  r.verdict = verdict_from_string(verdict.get<std::string>());
  r.dimension = detail::read_size(detail::require(j, "dimension"), "dimension");
  r.char_poly_of_kappa = polynomial_from_json(detail::require(j, "char_poly_of_kappa"));
  for (const auto& e : detail::require_array(detail::require(j, "rational_eigenvalues"), "rational_eigenvalues")) {
    r.rational_eigenvalues.push_back(
        {rational_from_json(detail::require(e, "value")), detail::read_size(detail::require(e, "multiplicity"), "multiplicity")});
  }
  switch (r.verdict) {
    case FormVerdict::Type1: {
      r.n = detail::read_size(detail::require(j, "n"), "n");
      const auto& eps = detail::require(j, "epsilon");
      if (!eps.is_number_integer() || (eps.get<int>() != 1 && eps.get<int>() != -1)) {
        throw JsonFormatError("epsilon must be 1 or -1");
      }
      r.epsilon = eps.get<int>();
      if (j.contains("rho")) r.rho = rational_from_json(j.at("rho"));
      break;
    }
    case FormVerdict::Type2:
      r.k = detail::read_size(detail::require(j, "k"), "k");
      r.mu = rational_from_json(detail::require(j, "mu"));
      break;
    case FormVerdict::DecomposableRational:
      for (const auto& s : detail::require_array(detail::require(j, "summands"), "summands")) {
        r.summands.push_back(report_from_json(s));
      }
      break;
    case FormVerdict::IrrationalSpectrum:
      r.irrational_factor = polynomial_from_json(detail::require(j, "irrational_factor"));
      break;
  }
  return r;
}

inline Json triple_to_json(const MarkovTriple& t) {
  return Json::array({integer_to_json(t.a), integer_to_json(t.b), integer_to_json(t.c)});
}

inline MarkovTriple triple_from_json(const Json& j) {
  detail::require_array(j, "triple");
  if (j.size() != 3) throw JsonFormatError("a triple has three entries");
  return {integer_from_json(j[0]), integer_from_json(j[1]), integer_from_json(j[2])};
}

inline Json trace_to_json(const ReductionTrace& t) {
  Json moves = Json::array();
  for (const auto& m : t.moves) {
    if (m.kind == ReductionMove::Kind::SignFlip) {
      moves.push_back(Json{{"kind", "sign_flip"}, {"vector", m.vector_index}, {"after", triple_to_json(m.after)}});
    } else {
      moves.push_back(Json{{"kind", "vieta"},
                           {"position", m.position},
                           {"word", m.word.to_string()},
                           {"after", triple_to_json(m.after)}});
    }
  }
  return Json{{"start", triple_to_json(t.start)}, {"moves", moves}, {"end", triple_to_json(t.end)}};
}

inline ReductionTrace trace_from_json(const Json& j) {
  ReductionTrace t;
  t.start = triple_from_json(detail::require(j, "start"));
  t.end = triple_from_json(detail::require(j, "end"));
  for (const auto& mj : detail::require_array(detail::require(j, "moves"), "moves")) {
    ReductionMove m;
    const auto& kind = detail::require(mj, "kind");
    m.after = triple_from_json(detail::require(mj, "after"));
    if (kind == "sign_flip") {
      m.kind = ReductionMove::Kind::SignFlip;
      m.vector_index = detail::read_size(detail::require(mj, "vector"), "vector");
      if (m.vector_index > 2) throw JsonFormatError("sign flip vector index must be 0, 1 or 2");
    } else if (kind == "vieta") {
      m.kind = ReductionMove::Kind::Vieta;
      m.position = detail::read_size(detail::require(mj, "position"), "position");
      const auto& word = detail::require(mj, "word");
      if (!word.is_string()) throw JsonFormatError("word must be a string");
      try {
        m.word = BraidWord::parse(word.get<std::string>());
      } catch (const MutationError& e) {
        throw JsonFormatError(e.what());
      }
    } else {
      throw JsonFormatError("unknown move kind " + kind.dump());
    }
    t.moves.push_back(std::move(m));
  }
  return t;
}

inline Json orbit_report_to_json(const OrbitReport& r) {
  return Json{{"orbit_size", r.orbit_size},
              {"truncated", r.truncated},
              {"depth", r.depth},
              {"canonical_gram", matrix_to_json(r.canonical_gram)},
              {"generators_used", r.generators_used},
              {"reached_reference_forms", r.reached_reference_forms}};
}

inline OrbitReport orbit_report_from_json(const Json& j) {
  OrbitReport r;
  r.orbit_size = detail::read_size(detail::require(j, "orbit_size"), "orbit_size");
  const auto& tr = detail::require(j, "truncated");
  if (!tr.is_boolean()) throw JsonFormatError("truncated must be a boolean");
  r.truncated = tr.get<bool>();
  if (j.contains("depth")) r.depth = detail::read_size(j.at("depth"), "depth");
  r.canonical_gram = int_matrix_from_json(detail::require(j, "canonical_gram"));
  r.generators_used = detail::require(j, "generators_used").get<std::vector<std::string>>();
  if (j.contains("reached_reference_forms")) {
    r.reached_reference_forms = j.at("reached_reference_forms").get<std::vector<std::string>>();
  }
  return r;
}

}  // namespace semiortho

#endif  // SEMIORTHO_JSON_IO_HPP
