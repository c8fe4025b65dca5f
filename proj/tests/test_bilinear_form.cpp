#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace semiortho;
using semiortho::testing::binom_oracle;
using semiortho::testing::int_matrix;

namespace {

BilinearLattice markov_form() { return BilinearLattice(int_matrix({{1, 3, 3}, {0, 1, 3}, {0, 0, 1}})); }

/// Twist-basis Gram matrix of P^n from the Euler characteristic binom(n + d, n).
IntMatrix euler_twist_gram(long n) {
  return IntMatrix::generate(n + 1, n + 1, [&](std::size_t i, std::size_t j) {
    if (j < i) return Integer(0);
    return to_integer(binom_oracle(n + static_cast<long>(j - i), n));
  });
}

}  // namespace

TEST(Lattice, RejectsNonUnimodular) {
  EXPECT_THROW(BilinearLattice(int_matrix({{2, 0}, {0, 1}})), UnimodularityError);
  EXPECT_THROW(BilinearLattice(int_matrix({{1, 2}})), DimensionError);
  EXPECT_NO_THROW(BilinearLattice(int_matrix({{0, 1}, {1, 0}})));
  BilinearLattice empty;
  EXPECT_EQ(empty.rank(), 0u);
  EXPECT_EQ(canonical_operator(empty).rows(), 0u);
}

TEST(Pair, Examples) {
  BilinearLattice id(IntMatrix::identity(2));
  EXPECT_EQ(id.pair({1, 0}, {1, 0}), 1);
  BilinearLattice l(int_matrix({{1, 3}, {0, 1}}));
  EXPECT_EQ(l.pair({1, 0}, {0, 1}), 3);
  EXPECT_EQ(l.pair({0, 1}, {1, 0}), 0);
  BilinearLattice p2(euler_twist_gram(2));
  EXPECT_EQ(p2.pair({1, 0, 0}, {0, 1, 0}), 3);
  EXPECT_THROW(l.pair({1}, {0, 1}), DimensionError);
}

TEST(CanonicalOperator, Examples) {
  EXPECT_EQ(canonical_operator(BilinearLattice(int_matrix({{2, 1}, {1, 1}}))), IntMatrix::identity(2));
  EXPECT_EQ(canonical_operator(markov_form()).trace(), 3);
  for (long a = -5; a <= 5; ++a) {
    auto kappa = canonical_operator(BilinearLattice(int_matrix({{1, a}, {0, 1}})));
    EXPECT_EQ(kappa, int_matrix({{1 - a * a, -a}, {a, 1}}));
  }
}

TEST(CanonicalOperator, DefiningPropertyOnRandomForms) {
  Rng rng(21);
  for (int s = 0; s < 150; ++s) {
    auto n = static_cast<std::size_t>(random_long(rng, 1, 6));
    auto l = random_unimodular_form(rng, n);
    auto kappa = canonical_operator(l);
    ASSERT_EQ(kappa.transpose() * l.gram() * kappa, l.gram());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto v = unit_vector<Integer>(n, i);
        auto w = unit_vector<Integer>(n, j);
        ASSERT_EQ(l.pair(v, w), l.pair(w, kappa * v));
      }
    }
  }
}

TEST(Duals, Examples) {
  auto l = markov_form();
  auto id = IntMatrix::identity(3);
  EXPECT_EQ(left_dual(l, id), id);
  EXPECT_EQ(right_dual(l, id), id);
  auto kappa = canonical_operator(l);
  auto kappa_inv = inverse_unimodular(kappa);
  EXPECT_EQ(left_dual(l, kappa), kappa_inv);
  EXPECT_EQ(right_dual(l, kappa), kappa_inv);
  // Symmetric form: both duals are the adjoint g^{-1} phi^t g.
  BilinearLattice sym(int_matrix({{2, 1}, {1, 1}}));
  auto phi = int_matrix({{1, 2}, {3, 4}});
  auto adj = inverse_unimodular(sym.gram()) * phi.transpose() * sym.gram();
  EXPECT_EQ(left_dual(sym, phi), adj);
  EXPECT_EQ(right_dual(sym, phi), adj);
  EXPECT_THROW(left_dual(l, IntMatrix::identity(2)), DimensionError);
}

TEST(Duals, DefiningIdentitiesAndInverses) {
  Rng rng(22);
  for (int s = 0; s < 100; ++s) {
    auto n = static_cast<std::size_t>(random_long(rng, 1, 5));
    auto l = random_unimodular_form(rng, n);
    auto phi = random_int_matrix(rng, n, n, 3);
    auto ld = left_dual(l, phi);
    auto rd = right_dual(l, phi);
    auto v = random_int_vector(rng, n, 4);
    auto w = random_int_vector(rng, n, 4);
    ASSERT_EQ(l.pair(ld * v, w), l.pair(v, phi * w));
    ASSERT_EQ(l.pair(v, rd * w), l.pair(phi * v, w));
    ASSERT_EQ(left_dual(l, rd), phi);
    ASSERT_EQ(right_dual(l, ld), phi);
  }
}

TEST(Reflexive, ConditionsAgree) {
  Rng rng(23);
  for (int s = 0; s < 100; ++s) {
    auto n = static_cast<std::size_t>(random_long(rng, 1, 4));
    auto l = random_unimodular_form(rng, n);
    auto kappa = canonical_operator(l);
    // Polynomials in kappa are reflexive; random matrices usually are not.
    auto poly_in_kappa = Integer(2) * kappa * kappa - kappa + IntMatrix::identity(n);
    auto random = random_int_matrix(rng, n, n, 2);
    for (const auto& phi : {poly_in_kappa, random}) {
      bool commutes = phi * kappa == kappa * phi;
      ASSERT_EQ(is_reflexive(l, phi), commutes);
      ASSERT_EQ(left_dual(l, phi) == right_dual(l, phi), commutes);
    }
    ASSERT_TRUE(is_reflexive(l, poly_in_kappa));
  }
}

TEST(Reflexive, Examples) {
  auto l = markov_form();
  auto id = IntMatrix::identity(3);
  EXPECT_TRUE(is_reflexive(l, id));
  EXPECT_TRUE(is_selfdual(l, id));
  EXPECT_FALSE(is_antiselfdual(l, id));
  EXPECT_TRUE(is_isometry(l, id));
  auto kappa = canonical_operator(l);
  EXPECT_TRUE(is_reflexive(l, kappa));
  EXPECT_TRUE(is_isometry(l, kappa));
  BilinearLattice empty;
  EXPECT_TRUE(is_antiselfdual(empty, IntMatrix::zero(0, 0)));
}

TEST(Reflexive, EtaAndZetaOnProjectiveSpaces) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto g = gram_matrix(n, K0Basis::Twists);
    auto kappa = canonical_operator(g);
    auto eps = Rational(sign_power(n));
    auto eta = kappa - eps * RatMatrix::identity(n + 1);
    EXPECT_TRUE(is_reflexive(g, eta));
    EXPECT_FALSE(is_selfdual(g, eta));
    // eta^* = kappa^{-1} - eps equals -eta exactly when eta^2 = 0, i.e. on P^1.
    EXPECT_EQ(is_antiselfdual(g, eta), n == 1) << "n = " << n;
    auto zeta = zeta_from_kappa(kappa, n);
    EXPECT_TRUE(is_antiselfdual(g, zeta)) << "n = " << n;
  }
}

TEST(SemiorthogonalSum, Examples) {
  BilinearLattice unit(IntMatrix{{1}});
  auto sum = semiorthogonal_sum(unit, unit, IntMatrix{{3}});
  EXPECT_EQ(sum.gram(), int_matrix({{1, 3}, {0, 1}}));
  auto l1 = markov_form();
  BilinearLattice l2(int_matrix({{1, 2}, {0, 1}}));
  auto direct = semiorthogonal_sum(l1, l2, IntMatrix::zero(3, 2));
  auto expected = block_matrix(canonical_operator(l1), IntMatrix::zero(3, 2), IntMatrix::zero(2, 3),
                               canonical_operator(l2));
  EXPECT_EQ(canonical_operator(direct), expected);
  EXPECT_TRUE(verify_canmatr(l1, l2, IntMatrix::zero(3, 2)));
  EXPECT_THROW(semiorthogonal_sum(l1, l2, IntMatrix::zero(2, 2)), DimensionError);
}

TEST(SemiorthogonalSum, RankOneBlocksSymbolic) {
  BilinearLattice unit(IntMatrix{{1}});
  for (long a = -6; a <= 6; ++a) {
    EXPECT_TRUE(verify_canmatr(unit, unit, IntMatrix{{Integer(a)}}));
    EXPECT_EQ(canonical_operator_from_blocks(unit, unit, IntMatrix{{Integer(a)}}),
              int_matrix({{1 - a * a, -a}, {a, 1}}));
  }
}

TEST(SemiorthogonalSum, RandomBlockFormula) {
  Rng rng(24);
  for (int s = 0; s < 100; ++s) {
    auto n1 = static_cast<std::size_t>(random_long(rng, 1, 4));
    auto n2 = static_cast<std::size_t>(random_long(rng, 1, 4));
    auto l1 = random_unimodular_form(rng, n1);
    auto l2 = random_unimodular_form(rng, n2);
    auto coupling = random_int_matrix(rng, n1, n2, 4);
    auto sum = semiorthogonal_sum(l1, l2, coupling);
    Integer d = det(sum.gram());
    ASSERT_TRUE(d == 1 || d == -1);
    ASSERT_EQ(d, det(l1.gram()) * det(l2.gram()));
    ASSERT_TRUE(verify_canmatr(l1, l2, coupling));
  }
}

TEST(ExtensionTrace, Examples) {
  BilinearLattice unit(IntMatrix{{1}});
  auto zero = extension_trace_check(unit, {0});
  EXPECT_EQ(zero.trace, 2);
  auto three = extension_trace_check(unit, {3});
  EXPECT_EQ(three.trace, -7);
  EXPECT_EQ(three.kappa_e_e, -8);
  // Dropping e_0 from the (3,3,3) form leaves W = [[1,3],[0,1]]; e_0 pairs
  // with W as (3, 3), so ell = g_W^{-1}-solution of ell^t g_W = (3, 3).
  BilinearLattice w(int_matrix({{1, 3}, {0, 1}}));
  auto res = extension_trace_check(w, {3, -6});
  EXPECT_EQ(res.trace, 3);
  EXPECT_EQ(res.extended.gram(), markov_form().gram());
}

TEST(ExtensionTrace, RandomExtensions) {
  Rng rng(25);
  for (int s = 0; s < 100; ++s) {
    auto n = static_cast<std::size_t>(random_long(rng, 1, 5));
    auto w = random_unimodular_form(rng, n);
    auto ell = random_int_vector(rng, n, 4);
    auto res = extension_trace_check(w, ell);
    ASSERT_EQ(res.trace, canonical_operator(res.extended).trace());
  }
}
