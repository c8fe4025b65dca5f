#ifndef SEMIORTHO_ORBIT_HPP
#define SEMIORTHO_ORBIT_HPP

#include "matrix.hpp"
#include "mutations.hpp"

#include <algorithm>
#include <cstddef>
#include <future>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiortho {

struct OrbitBounds {
  Integer height_bound = 100;
  std::size_t max_nodes = 10'000;
  unsigned threads = 1;
};

struct OrbitReport {
  std::size_t orbit_size = 0;
  bool truncated = false;
  IntMatrix canonical_gram;
  std::vector<std::string> generators_used;
  /// Named reference Gram matrices whose sign class was visited.
  std::vector<std::string> reached_reference_forms;
  std::size_t depth = 0;

  friend bool operator==(const OrbitReport&, const OrbitReport&) = default;
};

/// max |entry| of the Gram matrix.
inline Integer collection_height(const IntMatrix& g) {
  Integer h = 0;
  for (const auto& x : g.entries()) {
    Integer a = abs(x);
    if (a > h) h = a;
  }
  return h;
}

inline bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(),
                                      b.entries().end());
}

/// Lexicographically least Gram matrix over all sign changes of the
/// collection's vectors. The global sign is irrelevant, so e_0 stays fixed.
inline IntMatrix sign_canonical_gram(const IntMatrix& g) {
  const std::size_t k = g.rows();
  if (k <= 1) return g;
  if (k > 20) throw std::invalid_argument("sign canonicalization supports collections of length <= 20");
  IntMatrix best = g;
  const unsigned long combos = 1UL << (k - 1);
  for (unsigned long mask = 1; mask < combos; ++mask) {
    auto candidate = IntMatrix::generate(k, k, [&](std::size_t r, std::size_t c) {
      bool sr = r > 0 && ((mask >> (r - 1)) & 1UL);
      bool sc = c > 0 && ((mask >> (c - 1)) & 1UL);
      return sr != sc ? Integer(-g(r, c)) : g(r, c);
    });
    if (lex_less(candidate, best)) best = candidate;
  }
  return best;
}

namespace detail {

struct GramLess {
  bool operator()(const IntMatrix& a, const IntMatrix& b) const { return lex_less(a, b); }
};

inline IntMatrix markov_reference_gram() { return IntMatrix{{1, 3, 3}, {0, 1, 3}, {0, 0, 1}}; }

/// Gram matrix of O, O(1), ..., O(k-1) on P^{k-1}: binom(k-1 + j - i, k-1) above the diagonal.
inline IntMatrix twist_reference_gram(std::size_t k) {
  return IntMatrix::generate(k, k, [&](std::size_t i, std::size_t j) {
    if (j < i) return Integer(0);
    return binomial(Integer(static_cast<unsigned long>(k - 1 + j - i)), static_cast<unsigned long>(k - 1));
  });
}

}  // namespace detail

/// Breadth-first search over the sign classes of Gram matrices reachable by
/// the mutations L_nu, R_nu. Classes whose height exceeds the bound are not
/// expanded, and the search stops after max_nodes classes; either event marks
/// the report as truncated. The frontier may be expanded on several threads;
/// results are merged in frontier order so the report does not depend on the
/// thread count.
inline OrbitReport orbit_search(const SonCollection& start, const OrbitBounds& bounds) {
  if (bounds.height_bound < 0) throw std::invalid_argument("height bound must be non-negative");
  if (bounds.max_nodes == 0) throw std::invalid_argument("max_nodes must be positive");
  if (!is_semiorthonormal(start)) throw MutationError("orbit search requires a semiorthonormal collection");

  const std::size_t k = start.size();
  OrbitReport report;
  for (std::size_t nu = 1; nu < k; ++nu) report.generators_used.push_back("L" + std::to_string(nu));
  for (std::size_t nu = 1; nu < k; ++nu) report.generators_used.push_back("R" + std::to_string(nu));
  if (k > 0) report.generators_used.push_back("sign");

  std::set<IntMatrix, detail::GramLess> visited;
  IntMatrix root = sign_canonical_gram(start.gram());
  visited.insert(root);
  if (collection_height(root) > bounds.height_bound) report.truncated = true;

  std::vector<IntMatrix> frontier;
  if (!report.truncated) frontier.push_back(root);

  auto expand = [k](const IntMatrix& g) {
    std::vector<IntMatrix> out;
    for (std::size_t nu = 1; nu < k; ++nu) {
      out.push_back(sign_canonical_gram(mutate_gram(g, nu, Direction::Left)));
      out.push_back(sign_canonical_gram(mutate_gram(g, nu, Direction::Right)));
    }
    return out;
  };

  const unsigned threads = std::max(1U, bounds.threads);
  bool stop = false;
  while (!frontier.empty() && !stop) {
    std::vector<std::vector<IntMatrix>> expanded(frontier.size());
    if (threads == 1 || frontier.size() < 2) {
      for (std::size_t i = 0; i < frontier.size(); ++i) expanded[i] = expand(frontier[i]);
    } else {
      std::vector<std::future<void>> jobs;
      const std::size_t chunk = (frontier.size() + threads - 1) / threads;
      for (std::size_t begin = 0; begin < frontier.size(); begin += chunk) {
        std::size_t end = std::min(frontier.size(), begin + chunk);
        jobs.push_back(std::async(std::launch::async, [&, begin, end] {
          for (std::size_t i = begin; i < end; ++i) expanded[i] = expand(frontier[i]);
        }));
      }
      for (auto& j : jobs) j.get();
    }

    std::vector<IntMatrix> next;
    for (const auto& neighbours : expanded) {
      for (const auto& g : neighbours) {
        if (visited.count(g)) continue;
        if (collection_height(g) > bounds.height_bound) {
          report.truncated = true;
          continue;
        }
        if (visited.size() >= bounds.max_nodes) {
          report.truncated = true;
          stop = true;
          break;
        }
        visited.insert(g);
        next.push_back(g);
      }
      if (stop) break;
    }
    if (!next.empty()) ++report.depth;
    frontier = std::move(next);
  }

  report.orbit_size = visited.size();
  report.canonical_gram = *visited.begin();

  if (k == 3 && visited.count(sign_canonical_gram(detail::markov_reference_gram()))) {
    report.reached_reference_forms.push_back("markov_333");
  }
  if (k >= 1 && visited.count(sign_canonical_gram(detail::twist_reference_gram(k)))) {
    report.reached_reference_forms.push_back("twist_basis");
  }
  return report;
}

}  // namespace semiortho

#endif  // SEMIORTHO_ORBIT_HPP
