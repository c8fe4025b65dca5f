#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace semiortho;
using semiortho::testing::binom_oracle;
using semiortho::testing::int_matrix;

namespace {

SonCollection twist_collection(long n) {
  auto g = IntMatrix::generate(n + 1, n + 1, [&](std::size_t i, std::size_t j) {
    if (j < i) return Integer(0);
    return to_integer(binom_oracle(n + static_cast<long>(j - i), n));
  });
  return SonCollection::standard_basis(BilinearLattice(g));
}

SonCollection markov_collection() {
  return SonCollection::standard_basis(BilinearLattice(int_matrix({{1, 3, 3}, {0, 1, 3}, {0, 0, 1}})));
}

BraidWord w(const char* s) { return BraidWord::parse(s); }

}  // namespace

TEST(Semiorthonormal, Examples) {
  EXPECT_TRUE(is_semiorthonormal(SonCollection::standard_basis(BilinearLattice(IntMatrix::identity(3)))));
  auto twists = twist_collection(2);
  EXPECT_TRUE(is_semiorthonormal(twists));
  EXPECT_EQ(twists.gram(), int_matrix({{1, 3, 6}, {0, 1, 3}, {0, 0, 1}}));
  SonCollection reversed(twists.ambient, {twists.vectors[2], twists.vectors[1], twists.vectors[0]});
  EXPECT_FALSE(is_semiorthonormal(reversed));
}

TEST(Admissible, Examples) {
  BilinearLattice l(int_matrix({{1, 3, 3}, {0, 1, 3}, {0, 0, 1}}));
  EXPECT_TRUE(is_admissible(l, {{1, 0, 0}}));
  BilinearLattice hyper(int_matrix({{0, 1}, {1, 0}}));
  EXPECT_FALSE(is_admissible(hyper, {{1, 0}}));
  EXPECT_THROW(AdmissibleSubmodule(hyper, {{1, 0}}), UnimodularityError);
  EXPECT_TRUE(is_admissible(l, {{1, 0, 0}, {0, 1, 0}}));
}

TEST(Projections, Examples) {
  BilinearLattice l(int_matrix({{1, 3, 3}, {0, 1, 3}, {0, 0, 1}}));
  AdmissibleSubmodule u(l, {{1, 0, 0}});
  IntVector v{0, 1, 0};  // <e0, v> = 3
  EXPECT_EQ(u.right_projection(v), (IntVector{3, 0, 0}));
  EXPECT_EQ(u.left_projection(v), (IntVector{0, 0, 0}));  // <v, e0> = 0
  IntVector in_u{2, 0, 0};
  EXPECT_EQ(u.right_projection(in_u), in_u);
  EXPECT_EQ(u.left_projection(in_u), in_u);
  IntVector right_orth{-3, 1, 0};  // <e0, w> = 0
  EXPECT_TRUE(u.in_right_orthogonal(right_orth));
  EXPECT_EQ(u.right_projection(right_orth), (IntVector{0, 0, 0}));
}

TEST(Projections, DefiningIdentitiesOnRandomSubmodules) {
  Rng rng(31);
  for (int s = 0; s < 100; ++s) {
    auto k = static_cast<std::size_t>(random_long(rng, 1, 3));
    auto c = random_son_collection(rng, k + 2, static_cast<std::size_t>(random_long(rng, 0, 2)));
    std::vector<IntVector> basis(c.vectors.begin(), c.vectors.begin() + static_cast<long>(k));
    AdmissibleSubmodule u(c.ambient, basis);
    auto v = random_int_vector(rng, c.ambient.rank(), 5);
    auto rho = u.right_projection(v);
    auto lam = u.left_projection(v);
    for (const auto& b : basis) {
      ASSERT_EQ(c.ambient.pair(b, v), c.ambient.pair(b, rho));
      ASSERT_EQ(c.ambient.pair(v, b), c.ambient.pair(lam, b));
    }
    // M = U + U^perp and M = perpU + U.
    ASSERT_TRUE(u.in_right_orthogonal(v - rho));
    ASSERT_TRUE(u.in_left_orthogonal(v - lam));
  }
}

TEST(MutatePair, Examples) {
  BilinearLattice id(IntMatrix::identity(2));
  auto c = SonCollection::standard_basis(id);
  auto l = mutate_pair(c, 1, Direction::Left);
  EXPECT_EQ(l.vectors[0], (IntVector{0, 1}));
  EXPECT_EQ(l.vectors[1], (IntVector{1, 0}));
  auto m = mutate_pair(markov_collection(), 1, Direction::Left);
  EXPECT_EQ(m.vectors[0], (IntVector{-3, 1, 0}));
  EXPECT_EQ(m.gram(), int_matrix({{1, -3, -6}, {0, 1, 3}, {0, 0, 1}}));
  EXPECT_EQ(apply_braid(markov_collection(), w("R1 L1")), markov_collection());
  EXPECT_EQ(apply_braid(markov_collection(), w("L1 R1")), markov_collection());
}

TEST(MutatePair, Errors) {
  auto c = markov_collection();
  EXPECT_THROW(mutate_pair(c, 0, Direction::Left), MutationError);
  EXPECT_THROW(mutate_pair(c, 3, Direction::Left), MutationError);
  SonCollection bad(c.ambient, {c.vectors[2], c.vectors[1], c.vectors[0]});
  EXPECT_THROW(mutate_pair(bad, 1, Direction::Left), MutationError);
  EXPECT_THROW(w("X1"), MutationError);
  EXPECT_THROW(w("L0"), MutationError);
  EXPECT_THROW(w("L1x"), MutationError);
}

TEST(BraidWord, ParseAndPrint) {
  EXPECT_TRUE(w("").letters.empty());
  EXPECT_EQ(w("  L1   r2 ").to_string(), "L1 R2");
  EXPECT_EQ(apply_braid(markov_collection(), w("")), markov_collection());
}

TEST(MutatePair, GramMatchesVectorLevel) {
  Rng rng(32);
  for (int s = 0; s < 100; ++s) {
    auto k = static_cast<std::size_t>(random_long(rng, 2, 6));
    auto c = random_son_collection(rng, k, 1);
    for (std::size_t nu = 1; nu < k; ++nu) {
      for (auto dir : {Direction::Left, Direction::Right}) {
        auto m = mutate_pair(c, nu, dir);
        ASSERT_TRUE(is_semiorthonormal(m));
        ASSERT_EQ(m.gram(), mutate_gram(c.gram(), nu, dir));
        // The trace of kappa of the collection's Gram matrix is a base-change invariant.
        ASSERT_EQ(canonical_operator(m.gram()).trace(), canonical_operator(c.gram()).trace());
      }
    }
  }
}

TEST(Braid, IdentitiesOnRandomCollections) {
  Rng rng(33);
  for (int s = 0; s < 100; ++s) {
    auto k = static_cast<std::size_t>(3 + s % 4);
    auto c = random_son_collection(rng, k, static_cast<std::size_t>(random_long(rng, 0, 2)));
    for (std::size_t nu = 1; nu + 1 < k; ++nu) {
      BraidWord a{{{nu, Direction::Left}, {nu + 1, Direction::Left}, {nu, Direction::Left}}};
      BraidWord b{{{nu + 1, Direction::Left}, {nu, Direction::Left}, {nu + 1, Direction::Left}}};
      ASSERT_EQ(apply_braid(c, a), apply_braid(c, b));
    }
    if (k >= 4) {
      ASSERT_EQ(apply_braid(c, w("L1 L3")), apply_braid(c, w("L3 L1")));
    }
  }
}

TEST(SubmoduleMutation, RankOneFormula) {
  BilinearLattice l(int_matrix({{1, 3, 3}, {0, 1, 3}, {0, 0, 1}}));
  AdmissibleSubmodule e(l, {{1, 0, 0}});
  IntVector v{0, 1, 0};  // in perp(e0)
  EXPECT_EQ(mutation_through_submodule(e, v, Direction::Left), (IntVector{-3, 1, 0}));
  EXPECT_THROW(mutation_through_submodule(e, IntVector{1, 0, 0}, Direction::Left), MutationError);
}

TEST(SubmoduleMutation, IsometriesInverseToEachOther) {
  Rng rng(34);
  for (int s = 0; s < 80; ++s) {
    auto c = random_son_collection(rng, 4, static_cast<std::size_t>(random_long(rng, 0, 1)));
    AdmissibleSubmodule u(c.ambient, {c.vectors[0], c.vectors[1]});
    // Vectors after the submodule in the collection lie in perpU.
    auto v = c.vectors[2];
    auto x = c.vectors[3];
    ASSERT_TRUE(u.in_left_orthogonal(v));
    auto lv = mutation_through_submodule(u, v, Direction::Left);
    auto lx = mutation_through_submodule(u, x, Direction::Left);
    ASSERT_TRUE(u.in_right_orthogonal(lv));
    ASSERT_EQ(c.ambient.pair(lv, lx), c.ambient.pair(v, x));
    ASSERT_EQ(c.ambient.pair(lx, lv), c.ambient.pair(x, v));
    ASSERT_EQ(mutation_through_submodule(u, lv, Direction::Right), v);
    // Composite U = <e0, e1>: LM_U = LM_{e0} o LM_{e1}.
    AdmissibleSubmodule u0(c.ambient, {c.vectors[0]});
    AdmissibleSubmodule u1(c.ambient, {c.vectors[1]});
    auto step = mutation_through_submodule(u1, v, Direction::Left);
    ASSERT_EQ(mutation_through_submodule(u0, step, Direction::Left), lv);
  }
}

TEST(SubmoduleMutation, TriangleEquation) {
  Rng rng(35);
  for (int s = 0; s < 80; ++s) {
    auto col = random_son_collection(rng, 3, static_cast<std::size_t>(random_long(rng, 0, 2)));
    const auto& amb = col.ambient;
    const auto& a = col.vectors[0];
    const auto& b = col.vectors[1];
    const auto& c = col.vectors[2];
    AdmissibleSubmodule ua(amb, {a});
    AdmissibleSubmodule ub(amb, {b});
    auto lhs = mutation_through_submodule(ua, mutation_through_submodule(ub, c, Direction::Left), Direction::Left);
    AdmissibleSubmodule ulab(amb, {mutation_through_submodule(ua, b, Direction::Left)});
    auto rhs = mutation_through_submodule(ulab, mutation_through_submodule(ua, c, Direction::Left), Direction::Left);
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(SubmoduleMutation, TrivialSubmoduleIsIdentity) {
  BilinearLattice l(int_matrix({{1, 3}, {0, 1}}));
  AdmissibleSubmodule zero(l, {});
  EXPECT_EQ(mutation_through_submodule(zero, IntVector{4, -2}, Direction::Left), (IntVector{4, -2}));
  EXPECT_EQ(mutation_through_submodule(zero, IntVector{4, -2}, Direction::Right), (IntVector{4, -2}));
}
