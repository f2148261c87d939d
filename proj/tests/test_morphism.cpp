#include <gtest/gtest.h>

#include "koszul/errors.hpp"
#include "koszul/kappa.hpp"
#include "koszul/morphism.hpp"
#include "test_helpers.hpp"

using namespace koszul;
using test::degrees;

TEST(IsMorphism, Examples) {
  EXPECT_TRUE(is_morphism(degrees({0, 2, 4})));
  EXPECT_TRUE(is_morphism(degrees({1, 0, 0, 0})));
  EXPECT_FALSE(is_morphism(degrees({1, 1, 0})));
  EXPECT_TRUE(is_morphism(degrees({-1, 3, 5})));
}

TEST(IsMorphism, AlwaysForTwoSymbols) {
  for (unsigned mask = 0; mask < 4; ++mask) {
    EXPECT_TRUE(is_morphism(test::pattern(mask, 2)));
    EXPECT_TRUE(morphism_bruteforce(test::pattern(mask, 2)));
  }
}

TEST(IsMorphism, RejectsShortInput) {
  EXPECT_THROW(is_morphism(degrees({1})), DomainError);
  EXPECT_THROW(is_constant_one(degrees({})), DomainError);
  EXPECT_THROW(morphism_bruteforce(degrees({1})), DomainError);
}

TEST(IsConstantOne, Examples) {
  EXPECT_TRUE(is_constant_one(degrees({0, 2, 4})));
  EXPECT_TRUE(is_constant_one(degrees({1, 2, 4})));
  EXPECT_FALSE(is_constant_one(degrees({1, 1, 1})));
}

TEST(MorphismBruteforce, Examples) {
  EXPECT_TRUE(morphism_bruteforce(degrees({0, 2, 4})));
  EXPECT_FALSE(morphism_bruteforce(degrees({1, 1, 0})));
  EXPECT_TRUE(morphism_bruteforce(degrees({1, 1})));
}

TEST(MorphismBruteforce, BoundIsEnforced) {
  EXPECT_THROW(morphism_bruteforce(degrees({0, 0, 0, 0, 0, 0, 0})), ResourceError);
  EXPECT_THROW(morphism_bruteforce(degrees({0, 0, 0, 0}), 3), ResourceError);
}

TEST(MorphismBruteforce, AgreesWithCriterionOnEveryParityPattern) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      const auto d = test::pattern(mask, n);
      ASSERT_EQ(morphism_bruteforce(d), is_morphism(d)) << "n " << n << " mask " << mask;
    }
  }
}

TEST(IsConstantOne, AgreesWithExhaustiveEvaluation) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto all = all_permutations(n);
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      const auto d = test::pattern(mask, n);
      bool constant = true;
      for (const auto& s : all) {
        constant = constant && kappa(s, d) == Sign::plus();
      }
      ASSERT_EQ(constant, is_constant_one(d)) << "n " << n << " mask " << mask;
    }
  }
}

TEST(Morphism, ForbiddenTripletAtDiagonalIsMultiplicative) {
  // kappa(s2 s1, f) = (-1)^{|f1|(|f2|+|f3|)} = -1 and kappa(s2, f) kappa(s1, f) = (+1)(-1)
  const auto d = degrees({1, 1, 0});
  const auto s1 = Permutation::adjacent(3, 1);
  const auto s2 = Permutation::adjacent(3, 2);
  EXPECT_EQ(kappa(s2 * s1, d), Sign::minus());
  EXPECT_EQ(kappa(s2, d) * kappa(s1, d), Sign::minus());
}

TEST(Morphism, ForbiddenTripletRearrangedBreaksMultiplicativity) {
  const auto d = degrees({1, 0, 1});
  const auto s1 = Permutation::adjacent(3, 1);
  const auto s2 = Permutation::adjacent(3, 2);
  EXPECT_EQ(kappa(s2 * s1, d), Sign::minus());
  EXPECT_EQ(kappa(s2, d) * kappa(s1, d), Sign::plus());
}

TEST(Morphism, WhenMorphismAllBasePointsAgree) {
  for (unsigned mask = 0; mask < 16; ++mask) {
    const auto d = test::pattern(mask, 4);
    if (!is_morphism(d)) {
      continue;
    }
    for (const auto& pi : all_permutations(4)) {
      for (const auto& s : all_permutations(4)) {
        ASSERT_EQ(kappa(s, act(pi, d)), kappa(s, d));
      }
    }
  }
}
