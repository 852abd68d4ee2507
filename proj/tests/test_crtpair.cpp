#include "carryless/crtpair.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

namespace carryless {
namespace {

DigitNum N(const char* s) { return DigitNum::parse(s); }
GfPoly P2(const char* s) { return GfPoly::parse(2, s); }
GfPoly P5(const char* s) { return GfPoly::parse(5, s); }

TEST(CrtDigits, Table) {
  EXPECT_EQ(digit_to_pair(7), (DigitResidues{1, 2}));
  EXPECT_EQ(digit_to_pair(0), (DigitResidues{0, 0}));
  EXPECT_EQ(digit_to_pair(6), (DigitResidues{0, 1}));
  EXPECT_EQ(pair_to_digit(1, 0), 5);
  EXPECT_EQ(pair_to_digit(0, 0), 0);
  EXPECT_EQ(pair_to_digit(1, 4), 9);
  for (unsigned d = 0; d < 10; ++d) {
    auto r = digit_to_pair(d);
    EXPECT_EQ(r.r2, d % 2);
    EXPECT_EQ(r.r5, d % 5);
    EXPECT_EQ(pair_to_digit(r.r2, r.r5), d);
  }
  EXPECT_THROW(digit_to_pair(10), usage_error);
  EXPECT_THROW(pair_to_digit(2, 0), usage_error);
}

TEST(CrtPairMap, ToPairExamples) {
  EXPECT_EQ(to_pair(N("21")), CrtPair(P2("1"), P5("2X+1")));
  EXPECT_EQ(to_pair(N("56")), CrtPair(P2("X"), P5("1")));
  EXPECT_TRUE(to_pair(N("0")).is_zero());
  EXPECT_EQ(to_pair(N("785")).to_string(), "[X^2+1; 2X^2+3X]");
}

TEST(CrtPairMap, FromPairExamples) {
  EXPECT_EQ(from_pair(to_pair(N("10"))), N("10"));
  EXPECT_EQ(from_pair({P2("X"), P5("X")}), N("10"));
  EXPECT_EQ(from_pair({P2("1"), P5("X+4")}), N("69"));
  EXPECT_EQ(to_pair(N("69")), CrtPair(P2("1"), P5("X+4")));
  EXPECT_EQ(from_pair({}), N("0"));
  // shorter component padded with zeros
  EXPECT_EQ(from_pair({P2("X^3"), P5("1")}), N("5006"));
}

TEST(CrtPairMap, UnitsMap) {
  EXPECT_EQ(to_pair(N("1")), unit_pair(1));
  EXPECT_EQ(to_pair(N("7")), unit_pair(2));
  EXPECT_EQ(to_pair(N("3")), unit_pair(3));
  EXPECT_EQ(to_pair(N("9")), unit_pair(4));
}

TEST(CrtPairMap, RoundTripExhaustiveSixDigits) {
  for (std::uint64_t n = 0; n < 1000000; ++n) {
    DigitNum d = DigitNum::from_uint(n);
    ASSERT_EQ(from_pair(to_pair(d)), d);
  }
}

TEST(CrtPairMap, RoundTripRandomLong) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    DigitNum d = DigitNum::parse(oracle::random_digits(rng, 60));
    ASSERT_EQ(from_pair(to_pair(d)), d);
    CrtPair p = to_pair(d);
    ASSERT_EQ(to_pair(from_pair(p)), p);
  }
}

TEST(CrtPairMap, PairToNumberRoundTripExhaustive) {
  for (std::uint64_t i = 0; i < 64; ++i) {
    for (std::uint64_t j = 0; j < 15625; j += 7) {
      CrtPair p{GfPoly::from_index(2, i), GfPoly::from_index(5, j)};
      ASSERT_EQ(to_pair(from_pair(p)), p);
    }
  }
}

TEST(CrtPairHomomorphism, ExhaustiveThreeDigits) {
  std::vector<CrtPair> pairs;
  std::vector<DigitNum> nums;
  for (std::uint64_t n = 0; n < 1000; ++n) {
    nums.push_back(DigitNum::from_uint(n));
    pairs.push_back(to_pair(nums.back()));
  }
  for (std::size_t a = 0; a < 1000; ++a) {
    for (std::size_t b = a; b < 1000; ++b) {
      ASSERT_EQ(to_pair(add(nums[a], nums[b])), pair_add(pairs[a], pairs[b]));
      ASSERT_EQ(to_pair(mul(nums[a], nums[b])), pair_mul(pairs[a], pairs[b]));
    }
  }
}

TEST(CrtPairHomomorphism, RandomizedLong) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10000; ++i) {
    DigitNum a = DigitNum::parse(oracle::random_digits(rng, 25));
    DigitNum b = DigitNum::parse(oracle::random_digits(rng, 25));
    ASSERT_EQ(to_pair(add(a, b)), pair_add(to_pair(a), to_pair(b)));
    ASSERT_EQ(to_pair(mul(a, b)), pair_mul(to_pair(a), to_pair(b)));
  }
}

TEST(CrtPairLength, OnePlusMaxDegree) {
  for (std::uint64_t n = 1; n < 100000; ++n) {
    DigitNum d = DigitNum::from_uint(n);
    CrtPair p = to_pair(d);
    std::size_t m = 0;
    if (p.f2.degree()) m = std::max(m, *p.f2.degree());
    if (p.f5.degree()) m = std::max(m, *p.f5.degree());
    ASSERT_EQ(d.length(), 1 + m) << n;
  }
}

TEST(CrtPairRender, Diagnostic) {
  EXPECT_EQ(to_pair(N("644")).to_string(), "[0; X^2+4X+4]");
  EXPECT_EQ(to_pair(N("0")).to_string(), "[0; 0]");
}

TEST(CrtPairType, RejectsWrongModuli) { EXPECT_THROW(CrtPair(P5("X"), P5("X")), usage_error); }

}  // namespace
}  // namespace carryless
