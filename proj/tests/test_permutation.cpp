#include <gtest/gtest.h>

#include <random>

#include "koszul/errors.hpp"
#include "koszul/graded_sequence.hpp"
#include "koszul/permutation.hpp"
#include "test_helpers.hpp"

using namespace koszul;
using test::perm;

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation(std::vector<std::size_t>{0, 0, 1}), DomainError);
  EXPECT_THROW(Permutation(std::vector<std::size_t>{0, 3, 1}), DomainError);
  EXPECT_THROW(perm({0, 1}), DomainError);
}

TEST(Permutation, CompositionAppliesRightFactorFirst) {
  const auto s1 = Permutation::adjacent(3, 1);
  const auto s2 = Permutation::adjacent(3, 2);
  EXPECT_EQ(s2 * s1, perm({3, 1, 2}));
  EXPECT_EQ(s1 * s2, perm({2, 3, 1}));
}

TEST(Permutation, InverseComposesToIdentity) {
  for (const auto& p : all_permutations(5)) {
    EXPECT_TRUE((p * p.inverse()).is_identity());
    EXPECT_TRUE((p.inverse() * p).is_identity());
  }
}

TEST(Permutation, InversionsOfExampleRho) {
  const auto rho = perm({2, 5, 3, 1, 4});
  const std::vector<std::pair<std::size_t, std::size_t>> expected{
      {0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 3}};
  EXPECT_EQ(rho.inversions(), expected);
  EXPECT_EQ(rho.inversion_count(), 5U);
  EXPECT_EQ(rho.signature(), Sign::minus());
}

TEST(Permutation, LexRankMatchesEnumerationOrder) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = all_permutations(n);
    ASSERT_EQ(all.size(), factorial(n));
    for (std::size_t r = 0; r < all.size(); ++r) {
      EXPECT_EQ(all[r].lex_rank(), r);
      EXPECT_EQ(Permutation::from_lex_rank(n, r), all[r]);
    }
  }
}

TEST(Permutation, CyclesStartAtSmallestPoint) {
  const auto rho = perm({2, 5, 3, 1, 4});
  const std::vector<std::vector<std::size_t>> expected{{0, 1, 4, 3}};
  EXPECT_EQ(rho.cycles(), expected);
  EXPECT_TRUE(Permutation(4).cycles().empty());
}

TEST(Permutation, AdjacentOutOfRange) {
  EXPECT_THROW(Permutation::adjacent(3, 0), DomainError);
  EXPECT_THROW(Permutation::adjacent(3, 3), DomainError);
}

TEST(Permutation, SizeMismatchOnCompose) {
  EXPECT_THROW(Permutation(3) * Permutation(4), DimensionError);
}

TEST(GradedSequence, DefaultLabelsAndValidation) {
  const GradedSequence f(test::degrees({1, 2, 3}));
  EXPECT_EQ(f.labels(), (std::vector<std::string>{"f1", "f2", "f3"}));
  EXPECT_THROW(GradedSequence(test::degrees({1})), DomainError);
  EXPECT_THROW(GradedSequence({"a", "a"}, test::degrees({1, 2})), DomainError);
  EXPECT_THROW(GradedSequence({"a"}, test::degrees({1, 2})), DimensionError);
}

TEST(Action, AdjacentTranspositionSwapsNeighbours) {
  const GradedSequence f(test::degrees({1, 2, 3}));
  const auto g = act(Permutation::adjacent(3, 1), f);
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"f2", "f1", "f3"}));
  EXPECT_EQ(g.degrees(), test::degrees({2, 1, 3}));
}

TEST(Action, IdentityFixesSequence) {
  const GradedSequence f(test::degrees({4, -1, 0, 7}));
  EXPECT_EQ(act(Permutation(4), f), f);
}

TEST(Action, ReadsImagesThroughInverse) {
  const GradedSequence f(test::degrees({0, 0, 0}));
  EXPECT_EQ(act(perm({3, 1, 2}), f).labels(), (std::vector<std::string>{"f2", "f3", "f1"}));
}

TEST(Action, ExampleRhoGivesExpectedSequence) {
  const GradedSequence f(test::degrees({0, 0, 0, 0, 0}));
  EXPECT_EQ(act(perm({2, 5, 3, 1, 4}), f).labels(),
            (std::vector<std::string>{"f4", "f1", "f3", "f5", "f2"}));
}

TEST(Action, IsALeftAction) {
  const GradedSequence f({"a", "b", "c", "d"}, test::degrees({1, 2, 3, 4}));
  const auto all = all_permutations(4);
  for (const auto& s : all) {
    for (const auto& t : all) {
      ASSERT_EQ(act(s * t, f), act(s, act(t, f)));
    }
  }
}

TEST(Action, LengthMismatch) {
  const GradedSequence f(test::degrees({1, 2, 3}));
  EXPECT_THROW(act(Permutation(4), f), DimensionError);
}
