// Walks the Markov tree from (3,3,3) for a few levels and prints the descent
// of every triple found, replayed as mutations of an actual basis.

#include <semiortho/semiortho.hpp>

#include <iostream>
#include <vector>

using namespace semiortho;

int main() {
  std::vector<MarkovTriple> level{{3, 3, 3}};
  for (int depth = 0; depth < 4; ++depth) {
    std::vector<MarkovTriple> next;
    for (const auto& t : level) {
      auto trace = reduce_to_canonical(t);
      auto basis = replay_trace(trace);
      std::cout << t.to_string() << ": " << trace.moves.size() << " moves, final Gram " << basis.gram() << '\n';
      for (std::size_t pos = 1; pos <= 3; ++pos) {
        auto u = vieta(t, pos);
        if (u.max_abs() > t.max_abs()) next.push_back(u);
      }
    }
    level = std::move(next);
  }
}
