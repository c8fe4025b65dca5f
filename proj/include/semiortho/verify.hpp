#ifndef SEMIORTHO_VERIFY_HPP
#define SEMIORTHO_VERIFY_HPP

// Randomized invariant suites over all modules. Each suite is deterministic
// for a given seed and reports how many checks ran and which failed.

#include "bilinear_form.hpp"
#include "classification.hpp"
#include "exact_linalg.hpp"
#include "k0_pn.hpp"
#include "markov.hpp"
#include "mutations.hpp"
#include "random_forms.hpp"

#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semiortho {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  ///< first few failure descriptions

  bool passed() const { return failures == 0; }

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (messages.size() < 20) messages.push_back(what);
  }

  /// Runs `body`, counting an escaped exception as one failure.
  void guarded(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, what + ": " + e.what());
    }
  }
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  std::size_t braid_collections = 500;
  std::size_t canonical_sums = 200;
  std::size_t extensions = 200;
  std::size_t sigma_pairs = 100;
  std::size_t trace_triples = 1000;
  std::size_t markov_depth = 10;
  std::size_t isometry_samples = 50;
  std::size_t linalg_samples = 100;
};

/// R_nu L_nu = L_nu R_nu = id, L_nu L_{nu+1} L_nu = L_{nu+1} L_nu L_{nu+1},
/// and L_nu L_mu = L_mu L_nu for |nu - mu| >= 2, on random collections of
/// ranks 3-6 in random ambient forms.
inline SuiteResult verify_braid(const SuiteOptions& opt) {
  SuiteResult r{"braid", 0, 0, {}};
  Rng rng(opt.seed);
  auto word = [](std::initializer_list<BraidLetter> ls) { return BraidWord{std::vector<BraidLetter>(ls)}; };
  for (std::size_t s = 0; s < opt.braid_collections; ++s) {
    const std::size_t k = 3 + s % 4;
    const std::size_t extra = static_cast<std::size_t>(random_long(rng, 0, 2));
    r.guarded("collection " + std::to_string(s), [&] {
      auto c = random_son_collection(rng, k, extra);
      r.check(is_semiorthonormal(c), "generated collection is not semiorthonormal");
      for (std::size_t nu = 1; nu < k; ++nu) {
        BraidLetter l{nu, Direction::Left};
        BraidLetter rr{nu, Direction::Right};
        r.check(apply_braid(c, word({l, rr})) == c, "R" + std::to_string(nu) + " L" + std::to_string(nu) + " != id");
        r.check(apply_braid(c, word({rr, l})) == c, "L" + std::to_string(nu) + " R" + std::to_string(nu) + " != id");
        r.check(is_semiorthonormal(mutate_pair(c, nu, Direction::Left)), "L mutation broke semiorthonormality");
        r.check(is_semiorthonormal(mutate_pair(c, nu, Direction::Right)), "R mutation broke semiorthonormality");
        if (nu + 1 < k) {
          BraidLetter l2{nu + 1, Direction::Left};
          BraidLetter r2{nu + 1, Direction::Right};
          r.check(apply_braid(c, word({l, l2, l})) == apply_braid(c, word({l2, l, l2})),
                  "braid identity fails for L" + std::to_string(nu));
          r.check(apply_braid(c, word({rr, r2, rr})) == apply_braid(c, word({r2, rr, r2})),
                  "braid identity fails for R" + std::to_string(nu));
        }
        for (std::size_t mu = nu + 2; mu < k; ++mu) {
          BraidLetter lm{mu, Direction::Left};
          BraidLetter rm{mu, Direction::Right};
          r.check(apply_braid(c, word({l, lm})) == apply_braid(c, word({lm, l})), "far commutation fails (L, L)");
          r.check(apply_braid(c, word({l, rm})) == apply_braid(c, word({rm, l})), "far commutation fails (L, R)");
        }
      }
    });
  }
  return r;
}

/// <v, w> = <w, kappa v>, kappa^t g kappa = g and the blockwise kappa formula
/// on random semiorthogonal sums; the trace formula on random extensions.
inline SuiteResult verify_canonical(const SuiteOptions& opt) {
  SuiteResult r{"canonical", 0, 0, {}};
  Rng rng(opt.seed + 1);
  for (std::size_t s = 0; s < opt.canonical_sums; ++s) {
    r.guarded("sum " + std::to_string(s), [&] {
      auto n1 = static_cast<std::size_t>(random_long(rng, 1, 4));
      auto n2 = static_cast<std::size_t>(random_long(rng, 1, 4));
      auto first = random_unimodular_form(rng, n1);
      auto second = random_unimodular_form(rng, n2);
      auto coupling = random_int_matrix(rng, n1, n2, 3);
      auto sum = semiorthogonal_sum(first, second, coupling);
      auto kappa = canonical_operator(sum);
      r.check(verify_canmatr(first, second, coupling), "blockwise canonical operator differs");
      r.check(kappa.transpose() * sum.gram() * kappa == sum.gram(), "kappa is not an isometry");
      for (int t = 0; t < 3; ++t) {
        auto v = random_int_vector(rng, sum.rank(), 4);
        auto w = random_int_vector(rng, sum.rank(), 4);
        r.check(sum.pair(v, w) == sum.pair(w, kappa * v), "<v,w> != <w, kappa v>");
      }
    });
  }
  for (std::size_t s = 0; s < opt.extensions; ++s) {
    r.guarded("extension " + std::to_string(s), [&] {
      auto n = static_cast<std::size_t>(random_long(rng, 1, 4));
      auto w = random_unimodular_form(rng, n);
      auto ell = random_int_vector(rng, n, 3);
      auto res = extension_trace_check(w, ell);
      r.check(res.trace == canonical_operator(w).trace() + 1 - w.pair(ell, ell), "trace formula");
    });
  }
  return r;
}

/// Sigma formula against the direct pairing, the kappa identity of the
/// pairing, and the twist Gram matrix against binomial coefficients.
inline SuiteResult verify_k0(const SuiteOptions& opt) {
  SuiteResult r{"k0", 0, 0, {}};
  Rng rng(opt.seed + 2);
  for (std::size_t n = 0; n <= 5; ++n) {
    r.guarded("P^" + std::to_string(n), [&] {
      auto kappa = kappa_pn(n);
      for (std::size_t s = 0; s < opt.sigma_pairs; ++s) {
        std::vector<Rational> a;
        std::vector<Rational> b;
        for (std::size_t k = 0; k <= n; ++k) {
          a.push_back(Rational(random_integer(rng, -9, 9)) / Rational(random_integer(rng, 1, 4)));
          b.push_back(Rational(random_integer(rng, -9, 9)) / Rational(random_integer(rng, 1, 4)));
        }
        auto da = from_adams(n, a);
        auto db = from_adams(n, b);
        Rational direct = hilbert_pairing(n, da, db);
        r.check(hilbert_pairing_sigma(n, da, db) == direct, "sigma formula differs from direct pairing");
        r.check(hilbert_pairing(n, db, kappa * da) == direct, "<A,B> != <B, kappa A>");
      }
      auto g = gram_matrix(n, K0Basis::Twists);
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
          r.check(g(i, j) == Rational(binomial(Integer(static_cast<unsigned long>(n + j - i)), n)),
                  "twist Gram entry differs from binom(n+j-i, n)");
        }
      }
    });
  }
  return r;
}

/// Trace formula on random triples, tr = 3 iff Markov, and reduction of the
/// Markov tree to (3,3,3) replayed on vectors.
inline SuiteResult verify_markov(const SuiteOptions& opt) {
  SuiteResult r{"markov", 0, 0, {}};
  Rng rng(opt.seed + 3);
  for (std::size_t s = 0; s < opt.trace_triples; ++s) {
    MarkovTriple t{random_integer(rng, -100, 100), random_integer(rng, -100, 100), random_integer(rng, -100, 100)};
    Integer tr = canonical_operator(t.gram()).trace();
    r.check(tr == trace_kappa_rank3(t), "trace formula fails at " + t.to_string());
    r.check((tr == 3) == is_markov(t), "tr = 3 iff Markov fails at " + t.to_string());
  }
  std::set<std::vector<Integer>> seen;
  std::vector<MarkovTriple> frontier{{3, 3, 3}};
  seen.insert({3, 3, 3});
  for (std::size_t depth = 0; depth <= opt.markov_depth && !frontier.empty(); ++depth) {
    std::vector<MarkovTriple> next;
    for (const auto& t : frontier) {
      r.guarded("reduction of " + t.to_string(), [&] {
        auto trace = reduce_to_canonical(t);
        r.check(trace.end == MarkovTriple{3, 3, 3}, "reduction of " + t.to_string() + " ends elsewhere");
        replay_trace(trace);
        auto flipped = flip_triple(t, depth % 3);
        r.check(reduce_to_canonical(flipped).end == MarkovTriple{3, 3, 3}, "signed reduction fails");
      });
      for (std::size_t pos = 1; pos <= 3; ++pos) {
        auto u = vieta(t, pos);
        r.check(is_markov(u), "Vieta move left the Markov surface");
        if (seen.insert({u.a, u.b, u.c}).second) next.push_back(u);
      }
    }
    frontier = std::move(next);
  }
  return r;
}

/// For n <= 6: f(-zeta) f(zeta) = 1, the odd coefficients recover f, products
/// of isometries are again produced from their odd parts, and f(zeta) is an
/// isometry of the twist-basis form of P^n.
inline SuiteResult verify_isometry(const SuiteOptions& opt) {
  SuiteResult r{"isometry", 0, 0, {}};
  Rng rng(opt.seed + 4);
  for (std::size_t n = 0; n <= 6; ++n) {
    r.guarded("n = " + std::to_string(n), [&] {
      const std::size_t m = (n + 1) / 2;
      auto random_odd = [&] {
        std::vector<Rational> odd;
        for (std::size_t i = 0; i < m; ++i) {
          odd.push_back(Rational(random_integer(rng, -5, 5)) / Rational(random_integer(rng, 1, 3)));
        }
        return odd;
      };
      auto odd_of = [&](const ZetaSeries& f) {
        std::vector<Rational> odd;
        for (std::size_t i = 0; i < m; ++i) odd.push_back(f[2 * i + 1]);
        return odd;
      };
      auto gram = gram_matrix(n, K0Basis::Twists);
      auto zeta = zeta_from_kappa(canonical_operator(gram), n);
      for (std::size_t s = 0; s < opt.isometry_samples; ++s) {
        int sign1 = random_long(rng, 0, 1) ? 1 : -1;
        int sign2 = random_long(rng, 0, 1) ? 1 : -1;
        auto f = type1_isometry_from_odd(random_odd(), sign1, n);
        auto g = type1_isometry_from_odd(random_odd(), sign2, n);
        r.check(f.reflect() * f == ZetaSeries::one(n), "f(-zeta) f(zeta) != 1");
        r.check(type1_isometry_from_odd(odd_of(f), sign1, n) == f, "odd coefficients do not determine f");
        auto h = f * g;
        r.check(type1_isometry_from_odd(odd_of(h), sign1 * sign2, n) == h, "product is not an isometry output");
        auto fm = f.evaluate(zeta);
        r.check(fm.transpose() * gram * fm == gram, "f(zeta) is not an isometry of the form");
      }
    });
  }
  return r;
}

/// det(AB) = det(A) det(B), A A^{-1} = 1, Cayley-Hamilton, and rank-nullity.
inline SuiteResult verify_linalg(const SuiteOptions& opt) {
  SuiteResult r{"linalg", 0, 0, {}};
  Rng rng(opt.seed + 5);
  for (std::size_t s = 0; s < opt.linalg_samples; ++s) {
    r.guarded("sample " + std::to_string(s), [&] {
      auto n = static_cast<std::size_t>(random_long(rng, 1, 6));
      auto a = random_int_matrix(rng, n, n, 5);
      auto b = random_int_matrix(rng, n, n, 5);
      r.check(det(a * b) == det(a) * det(b), "det is not multiplicative");
      auto ra = to_rational(a);
      r.check(char_poly(ra).evaluate(ra).is_zero(), "Cayley-Hamilton fails");
      r.check(rank_over_q(ra) + nullspace(ra).size() == n, "rank-nullity fails");
      if (det(a) != 0) r.check(ra * inverse(ra) == RatMatrix::identity(n), "inverse is wrong");
      auto u = random_unimodular(rng, n, 3 * n);
      r.check(u * inverse_unimodular(u) == IntMatrix::identity(n), "unimodular inverse is wrong");
    });
  }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"braid", "canonical", "k0", "markov", "isometry", "linalg"};
  return names;
}

/// Runs one suite by name, or every suite for "all".
inline std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& opt = {}) {
  std::vector<SuiteResult> out;
  auto want = [&](const char* s) { return name == "all" || name == s; };
  if (want("braid")) out.push_back(verify_braid(opt));
  if (want("canonical")) out.push_back(verify_canonical(opt));
  if (want("k0")) out.push_back(verify_k0(opt));
  if (want("markov")) out.push_back(verify_markov(opt));
  if (want("isometry")) out.push_back(verify_isometry(opt));
  if (want("linalg")) out.push_back(verify_linalg(opt));
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

}  // namespace semiortho

#endif  // SEMIORTHO_VERIFY_HPP
