// Prints the Gram matrices of K0(P^n) in the Adams, binomial and twist bases
// and the verdict of the classifier for each n given on the command line.

#include <semiortho/semiortho.hpp>

#include <cstdlib>
#include <iostream>

using namespace semiortho;

int main(int argc, char** argv) {
  std::size_t top = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
  for (std::size_t n = 1; n <= top; ++n) {
    std::cout << "P^" << n << '\n';
    for (auto basis : {K0Basis::Adams, K0Basis::Binomial, K0Basis::Twists}) {
      std::cout << "  " << to_string(basis) << ": " << gram_matrix(n, basis) << '\n';
    }
    auto report = detect_type(gram_matrix(n, K0Basis::Twists));
    std::cout << "  verdict: " << to_string(report.verdict) << " n=" << report.n << " epsilon=" << report.epsilon
              << '\n';
  }
}
