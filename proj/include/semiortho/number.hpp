#ifndef SEMIORTHO_NUMBER_HPP
#define SEMIORTHO_NUMBER_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semiortho {

/// Arbitrary-precision integer. Mutation orbits grow entries without bound,
/// so no fixed-width type is ever used for lattice data.
using Integer = mpz_class;

/// Exact rational, kept canonical (reduced, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer to_integer(const Rational& q) {
  if (!is_integral(q)) throw std::domain_error("rational " + q.get_str() + " is not an integer");
  return q.get_num();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Always "p/q", also for integral values ("3/1", "0/1").
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// "p" for integral values, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return q.get_num().get_str();
  return to_fraction_string(q);
}

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

/// Accepts "p" or "p/q".
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  return make_rational(num, den);
}

inline Integer abs(const Integer& z) { return z < 0 ? Integer(-z) : z; }
inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

/// binom(top, k) for any integer top and k >= 0 (generalized binomial).
inline Integer binomial(const Integer& top, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
  return r;
}

inline int sign_power(std::size_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace semiortho

#endif  // SEMIORTHO_NUMBER_HPP
