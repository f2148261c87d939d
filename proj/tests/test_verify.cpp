#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "koszul/errors.hpp"
#include "koszul/kappa.hpp"
#include "koszul/verify.hpp"
#include "test_helpers.hpp"

using namespace koszul;

TEST(MinWord, Examples) {
  EXPECT_EQ(kappa_bruteforce_minword(Permutation(3), GradedSequence(test::degrees({1, 1, 1}))),
            Sign::plus());
  EXPECT_EQ(kappa_bruteforce_minword(Permutation::adjacent(2, 1),
                                     GradedSequence(test::degrees({1, 1}))),
            Sign::minus());
}

TEST(MinWord, ShortestLengthIsInversionCount) {
  for (const auto& p : all_permutations(5)) {
    const Word w = shortest_word(p);
    ASSERT_EQ(project(w), p);
    ASSERT_EQ(w.length(), p.inversion_count());
  }
}

TEST(MinWord, AgreesWithKappaOnS4) {
  const GradedSequence g(test::degrees({1, 0, 1, 1}));
  for (const auto& p : all_permutations(4)) {
    EXPECT_EQ(kappa_bruteforce_minword(p, g), kappa(p, g));
    EXPECT_EQ(kappa_bruteforce_minword(p, g), Sign::from_parity(kappa_exponent(p, g)));
  }
}

TEST(MinWord, Bound) {
  const GradedSequence g(std::vector<Degree>(6, Degree{1}));
  EXPECT_THROW(kappa_bruteforce_minword(Permutation(6), g), ResourceError);
}

TEST(RunSuite, SmallNPasses) {
  const SuiteReport report = run_suite(3, 10, 7);
  EXPECT_TRUE(report.ok()) << report.to_text();
  bool saw_forbidden = false;
  for (const auto& c : report.checks) {
    EXPECT_GT(c.passed, 0U) << c.name;
    saw_forbidden = saw_forbidden || c.name == "morphism.forbidden_triplet";
  }
  EXPECT_TRUE(saw_forbidden);
}

TEST(RunSuite, NTwoCoversEveryPattern) {
  const SuiteReport report = run_suite(2, 5, 1);
  EXPECT_TRUE(report.ok()) << report.to_text();
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& c) { return c.name == "morphism.parity_criterion"; });
  ASSERT_NE(it, report.checks.end());
  EXPECT_EQ(it->passed, 4U);
}

TEST(RunSuite, IncludesExampleAtFive) {
  const SuiteReport report = run_suite(5, 20, 3);
  EXPECT_TRUE(report.ok()) << report.to_text();
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& c) { return c.name == "example.rho_25314"; });
  ASSERT_NE(it, report.checks.end());
  EXPECT_EQ(it->passed, 20U + 32U);
}

TEST(RunSuite, SixUsesSampling) {
  const SuiteReport report = run_suite(6, 10, 5);
  EXPECT_TRUE(report.ok()) << report.to_text();
}

TEST(RunSuite, DeterministicForSeed) {
  EXPECT_EQ(run_suite(4, 10, 99).to_json(), run_suite(4, 10, 99).to_json());
}

TEST(RunSuite, Bounds) {
  EXPECT_THROW(run_suite(7, 1, 1), ResourceError);
  EXPECT_THROW(run_suite(1, 1, 1), DomainError);
}

TEST(SuiteReport, JsonShape) {
  const auto doc = nlohmann::json::parse(run_suite(2, 2, 4).to_json());
  EXPECT_EQ(doc["seed"], 4);
  EXPECT_EQ(doc["n_range"], nlohmann::json::array({2, 2}));
  EXPECT_TRUE(doc["ok"].get<bool>());
  ASSERT_FALSE(doc["checks"].empty());
  EXPECT_TRUE(doc["checks"][0].contains("first_counterexample"));
}

TEST(SuiteReport, FailureRendering) {
  SuiteReport report;
  report.checks.push_back({"x", "pop", 3, 1, std::string("sigma [2,1] = (1 2), degrees 1,1")});
  EXPECT_FALSE(report.ok());
  EXPECT_NE(report.to_text().find("FAIL x"), std::string::npos);
  EXPECT_NE(report.to_text().find("sigma [2,1] = (1 2)"), std::string::npos);
}
