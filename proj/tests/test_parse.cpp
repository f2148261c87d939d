#include <gtest/gtest.h>

#include <random>

#include "koszul/errors.hpp"
#include "koszul/parse.hpp"
#include "test_helpers.hpp"

using namespace koszul;
using test::perm;

TEST(ParseDegrees, Literals) {
  EXPECT_EQ(parse_degrees("1,2,1,1,2"), test::degrees({1, 2, 1, 1, 2}));
  EXPECT_EQ(parse_degrees("-3,0"), test::degrees({-3, 0}));
  EXPECT_EQ(parse_degrees(" +4 , -5 "), test::degrees({4, -5}));
}

TEST(ParseDegrees, Errors) {
  EXPECT_THROW(parse_degrees("1,"), ParseError);
  EXPECT_THROW(parse_degrees(""), ParseError);
  EXPECT_THROW(parse_degrees("7"), ParseError);
  EXPECT_THROW(parse_degrees("1,x"), ParseError);
  EXPECT_THROW(parse_degrees("1;2"), ParseError);
  EXPECT_THROW(parse_degrees("1,99999999999999999999"), ParseError);
}

TEST(ParseDegrees, ErrorCarriesPosition) {
  try {
    parse_degrees("1,2,x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
  try {
    parse_degrees("1,");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2U);
  }
}

TEST(ParsePerm, OneLine) {
  EXPECT_EQ(parse_perm("[2,5,3,1,4]", 5), perm({2, 5, 3, 1, 4}));
  EXPECT_EQ(parse_perm(" [ 2, 1 ] ", 0), perm({2, 1}));
}

TEST(ParsePerm, Cycles) {
  EXPECT_EQ(parse_perm("(1 2)", 3), perm({2, 1, 3}));
  EXPECT_EQ(parse_perm("(2 3)(1 2)", 3), perm({3, 1, 2}));
  EXPECT_EQ(parse_perm("(1,2,5,4)", 5), perm({2, 5, 3, 1, 4}));
  EXPECT_EQ(parse_perm("()", 4), Permutation(4));
}

TEST(ParsePerm, Errors) {
  EXPECT_THROW(parse_perm("[1,1,2]", 3), ParseError);
  EXPECT_THROW(parse_perm("[1,2,4]", 3), ParseError);
  EXPECT_THROW(parse_perm("[1,2]", 3), ParseError);
  EXPECT_THROW(parse_perm("[1,2,3", 3), ParseError);
  EXPECT_THROW(parse_perm("(1 4)", 3), ParseError);
  EXPECT_THROW(parse_perm("(1 2 1)", 3), ParseError);
  EXPECT_THROW(parse_perm("(1 2", 3), ParseError);
  EXPECT_THROW(parse_perm("1 2", 3), ParseError);
  EXPECT_THROW(parse_perm("(1 2)", 0), ParseError);
  EXPECT_THROW(parse_perm("[2,1] x", 2), ParseError);
  EXPECT_THROW(parse_perm("", 2), ParseError);
}

TEST(ParseWord, Grammar) {
  EXPECT_EQ(parse_word("s2 s1", 3), Word(3, {{2, 1}, {1, 1}}));
  EXPECT_EQ(parse_word("s1 s2^-1 s1", 3), Word(3, {{1, 1}, {2, -1}, {1, 1}}));
  EXPECT_EQ(parse_word("s1'  s2", 3), Word(3, {{1, -1}, {2, 1}}));
  EXPECT_EQ(parse_word("e", 3), Word(3));
  EXPECT_EQ(parse_word("", 3), Word(3));
}

TEST(ParseWord, Errors) {
  EXPECT_THROW(parse_word("s3", 3), ParseError);
  EXPECT_THROW(parse_word("s0", 3), ParseError);
  EXPECT_THROW(parse_word("s1s2", 3), ParseError);
  EXPECT_THROW(parse_word("s1^2", 3), ParseError);
  EXPECT_THROW(parse_word("t1", 3), ParseError);
  EXPECT_THROW(parse_word("e s1", 3), ParseError);
}

TEST(Format, KnownForms) {
  const auto rho = perm({2, 5, 3, 1, 4});
  EXPECT_EQ(format_one_line(rho), "[2,5,3,1,4]");
  EXPECT_EQ(format_cycles(rho), "(1 2 5 4)");
  EXPECT_EQ(format_cycles(Permutation(3)), "()");
  EXPECT_EQ(format_word(Word(3, {{1, 1}, {2, -1}})), "s1 s2^-1");
  EXPECT_EQ(format_word(Word(3)), "e");
  EXPECT_EQ(format_degrees(test::degrees({-3, 0, 12})), "-3,0,12");
}

// Round trips over random values.

TEST(RoundTrip, Permutations) {
  std::mt19937_64 rng(41);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : all_permutations(n)) {
      ASSERT_EQ(parse_perm(format_one_line(p), n), p);
      ASSERT_EQ(parse_perm(format_one_line(p), 0), p);
      ASSERT_EQ(parse_perm(format_cycles(p), n), p);
    }
  }
}

TEST(RoundTrip, WordsAndDegrees) {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 6);
    const Word w = random_word(n, 20, rng);
    ASSERT_EQ(parse_word(format_word(w), n), w);
    const auto d = test::random_degrees(n, rng, 1000000);
    ASSERT_EQ(parse_degrees(format_degrees(d)), d);
  }
}
