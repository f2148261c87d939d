#include <gtest/gtest.h>

#include <random>

#include "koszul/cohomology.hpp"
#include "koszul/errors.hpp"
#include "koszul/kappa.hpp"
#include "koszul/morphism.hpp"
#include "test_helpers.hpp"

using namespace koszul;
using test::degrees;
using Rank = SymmetricGroup::Rank;

namespace {

const ModuleStructure kStructures[] = {ModuleStructure::trivial(), ModuleStructure::signature()};

} // namespace

TEST(ModuleStructure, IsAMorphism) {
  const auto group = SymmetricGroup::get(5);
  for (const auto u : kStructures) {
    for (const auto& s : group->elements()) {
      for (const auto& t : group->elements()) {
        ASSERT_EQ(u(s * t), u(s) * u(t));
      }
    }
  }
  EXPECT_EQ(ModuleStructure::signature()(test::perm({2, 1, 3})), Sign::minus());
  EXPECT_EQ(ModuleStructure::trivial()(test::perm({2, 1, 3})), Sign::plus());
}

TEST(ModuleFromDegrees, Examples) {
  EXPECT_EQ(module_from_degrees(degrees({1, 1, 1})), ModuleStructure::signature());
  EXPECT_EQ(module_from_degrees(degrees({0, 2, 4})), ModuleStructure::trivial());
  EXPECT_EQ(module_from_degrees(degrees({1, 1, 0})), std::nullopt);
  // Not an admissible parity pattern, yet the u_i happen to agree.
  EXPECT_EQ(module_from_degrees(degrees({1, 0, 1})), ModuleStructure::trivial());
  EXPECT_THROW(module_from_degrees(degrees({1})), DomainError);
}

TEST(BuildCf, IdentityRowIsOne) {
  const TwoCochain c = build_cf(GradedSequence(degrees({1, 1, 0, 3})));
  const auto& group = c.group();
  for (Rank t = 0; t < group.order(); ++t) {
    EXPECT_EQ(c.at(group.identity(), t), Sign::plus());
  }
}

TEST(BuildCf, GeneratorAtIdentity) {
  const auto d = degrees({1, 1, 0, 3});
  const TwoCochain c = build_cf(GradedSequence(d));
  const Permutation e(4);
  for (std::size_t i = 1; i < 4; ++i) {
    EXPECT_EQ(c(Permutation::adjacent(4, i), e),
              Sign::from_parity(product_parity(d[i - 1], d[i])));
  }
}

TEST(BuildCf, GeneratorRow) {
  const auto d = degrees({1, 0, 1, 1});
  const TwoCochain c = build_cf(GradedSequence(d));
  for (const auto& rho : c.group().elements()) {
    const auto inv = rho.inverse();
    for (std::size_t i = 1; i < 4; ++i) {
      EXPECT_EQ(c(Permutation::adjacent(4, i), rho),
                Sign::from_parity(product_parity(d[inv[i - 1]], d[inv[i]])));
    }
  }
}

TEST(BuildCf, AllEvenIsConstantOne) {
  EXPECT_EQ(build_cf(GradedSequence(degrees({0, 2, -4, 6}))), TwoCochain::constant(4, Sign::plus()));
}

TEST(BuildCf, DenseAndLazyAgree) {
  const GradedSequence f(degrees({1, 1, 0, 1}));
  EXPECT_EQ(build_cf(f), build_cf(f, CochainMode::lazy));
}

TEST(BuildCf, DenseBound) {
  const GradedSequence f(std::vector<Degree>(7, Degree{1}));
  EXPECT_THROW(build_cf(f), ResourceError);
  const TwoCochain lazy = build_cf(f, CochainMode::lazy);
  const Permutation e(7);
  EXPECT_EQ(lazy(Permutation::adjacent(7, 3), e), Sign::minus());
  EXPECT_FALSE(lazy.is_dense());
}

TEST(BuildCf, NonSymmetric) {
  const TwoCochain c = build_cf(GradedSequence(degrees({1, 1, 0})));
  const Permutation e(3);
  const auto s1 = Permutation::adjacent(3, 1);
  EXPECT_EQ(c(e, s1), Sign::plus());
  EXPECT_EQ(c(s1, e), Sign::minus());
}

TEST(BuildCf, CharacterizingRecursion) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      const TwoCochain c = build_cf(GradedSequence(test::pattern(mask, n)));
      const auto& group = c.group();
      const auto order = static_cast<Rank>(group.order());
      for (Rank s = 0; s < order; ++s) {
        for (Rank t = 0; t < order; ++t) {
          for (Rank r = 0; r < order; ++r) {
            ASSERT_EQ(c.at(group.product(s, t), r), c.at(s, group.product(t, r)) * c.at(t, r));
          }
        }
      }
    }
  }
}

TEST(Coboundary2, ConstantCochainTrivialModule) {
  const TwoCochain one = TwoCochain::constant(3, Sign::plus());
  const ThreeCochain delta = coboundary2(one, ModuleStructure::trivial());
  const auto group = SymmetricGroup::get(3);
  for (const auto& s : group->elements()) {
    for (const auto& t : group->elements()) {
      for (const auto& r : group->elements()) {
        EXPECT_EQ(delta(s, t, r), Sign::plus());
      }
    }
  }
}

TEST(Coboundary2, IdentityForCf) {
  // delta(c_f)(s, t, r) = u(s) c_f(s, t)^{-1}, independent of r.
  for (std::size_t n = 2; n <= 4; ++n) {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      const TwoCochain c = build_cf(GradedSequence(test::pattern(mask, n)));
      const auto& group = c.group();
      const auto order = static_cast<Rank>(group.order());
      for (const auto u : kStructures) {
        const ThreeCochain delta = coboundary2(c, u);
        for (Rank s = 0; s < order; ++s) {
          for (Rank t = 0; t < order; ++t) {
            const Sign expected = u(group.element(s)) * c.at(s, t).inverse();
            for (Rank r = 0; r < order; ++r) {
              ASSERT_EQ(delta.at(s, t, r), expected);
            }
          }
        }
      }
    }
  }
}

TEST(Coboundary2, RankAndPermutationPathsAgree) {
  const TwoCochain c = build_cf(GradedSequence(degrees({1, 1, 0})));
  const auto& group = c.group();
  const ThreeCochain delta = coboundary2(c, ModuleStructure::signature());
  for (Rank s = 0; s < group.order(); ++s) {
    for (Rank t = 0; t < group.order(); ++t) {
      for (Rank r = 0; r < group.order(); ++r) {
        ASSERT_EQ(delta.at(s, t, r), delta(group.element(s), group.element(t), group.element(r)));
      }
    }
  }
}

TEST(Coboundary2, AllOddWithSignatureIsTrivial) {
  const TwoCochain c = build_cf(GradedSequence(degrees({1, 3, -5, 7})));
  const ThreeCochain delta = coboundary2(c, ModuleStructure::signature());
  const auto& group = c.group();
  for (Rank s = 0; s < group.order(); ++s) {
    for (Rank t = 0; t < group.order(); ++t) {
      for (Rank r = 0; r < group.order(); ++r) {
        ASSERT_EQ(delta.at(s, t, r), Sign::plus());
      }
    }
  }
}

TEST(Coboundary1, ConstantOneIsTrivial) {
  const OneCochain v = OneCochain::from_function(4, [](const Permutation&) { return Sign::plus(); });
  EXPECT_EQ(coboundary1(v, ModuleStructure::trivial()), TwoCochain::constant(4, Sign::plus()));
}

TEST(Coboundary1, SignatureGivesCfForAllOdd) {
  const TwoCochain c = build_cf(GradedSequence(degrees({1, 1, 1, 1})));
  const OneCochain u = OneCochain::from_function(4, [](const Permutation& p) { return p.signature(); });
  EXPECT_EQ(restrict_to_identity(c), u);
  EXPECT_EQ(coboundary1(u, ModuleStructure::signature()), c);
}

TEST(Coboundary1, AllEvenGivesConstantOne) {
  const TwoCochain c = build_cf(GradedSequence(degrees({0, 2, 4})));
  EXPECT_EQ(coboundary1(restrict_to_identity(c), ModuleStructure::trivial()), c);
  EXPECT_EQ(c, TwoCochain::constant(3, Sign::plus()));
}

TEST(TwoCochain, EqualityRequiresSameN) {
  EXPECT_FALSE(TwoCochain::constant(3, Sign::plus()) == TwoCochain::constant(4, Sign::plus()));
}

TEST(IsCocycle, Examples) {
  EXPECT_TRUE(is_cocycle(GradedSequence(degrees({1, 1, 1})), ModuleStructure::signature()));
  EXPECT_FALSE(is_cocycle(GradedSequence(degrees({1, 1, 1})), ModuleStructure::trivial()));
  EXPECT_TRUE(is_cocycle(GradedSequence(degrees({0, 2, 4})), ModuleStructure::trivial()));
  for (const auto u : kStructures) {
    EXPECT_FALSE(is_cocycle(GradedSequence(degrees({1, 1, 0})), u));
  }
}

TEST(IsCocycle, ConvenienceOverload) {
  const auto none = is_cocycle(GradedSequence(degrees({1, 1, 0})));
  EXPECT_FALSE(none.module.has_value());
  EXPECT_FALSE(none.cocycle);

  const auto odd = is_cocycle(GradedSequence(degrees({1, 1, 1, 1})));
  ASSERT_TRUE(odd.module.has_value());
  EXPECT_EQ(*odd.module, ModuleStructure::signature());
  EXPECT_TRUE(odd.cocycle);
}

TEST(IsCocycle, BoundIsEnforced) {
  EXPECT_THROW(is_cocycle(GradedSequence(std::vector<Degree>(7, Degree{0})),
                          ModuleStructure::trivial()),
               ResourceError);
}

TEST(IsCocycle, MatchesParityCriterionOnEveryPattern) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      const auto d = test::pattern(mask, n);
      const GradedSequence f(d);
      const auto derived = module_from_degrees(d);
      for (const auto u : kStructures) {
        const bool expected = is_morphism(d) && derived == u;
        ASSERT_EQ(is_cocycle(f, u), expected) << "n " << n << " mask " << mask;
      }
      if (derived) {
        ASSERT_EQ(is_cocycle(f, *derived), is_morphism(d));
      }
      if (is_morphism(d)) {
        ASSERT_TRUE(derived.has_value());
        const TwoCochain c = build_cf(f);
        ASSERT_EQ(coboundary1(restrict_to_identity(c), *derived), c);
      }
    }
  }
}
