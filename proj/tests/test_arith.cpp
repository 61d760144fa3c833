#include <gtest/gtest.h>

#include <stdexcept>

#include "resonance/arith.hpp"

namespace resonance {
namespace {

TEST(SplitFourthPower, Examples) {
  EXPECT_EQ(split_fourth_power(1), (NormSplit{1, 1}));
  EXPECT_EQ(split_fourth_power(16), (NormSplit{2, 1}));
  EXPECT_EQ(split_fourth_power(50), (NormSplit{1, 50}));
  EXPECT_EQ(split_fourth_power(28561), (NormSplit{13, 1}));
  EXPECT_EQ(split_fourth_power(16 * 81 * 7), (NormSplit{6, 7}));
  EXPECT_EQ(split_fourth_power(8), (NormSplit{1, 8}));
}

TEST(SplitFourthPower, RejectsNonPositive) {
  EXPECT_THROW(split_fourth_power(0), std::invalid_argument);
  EXPECT_THROW(split_fourth_power(-5), std::invalid_argument);
}

// gamma^4 q == s, and no p^4 with p <= s^(1/4) divides q.
TEST(SplitFourthPower, RoundTripsUpToOneMillion) {
  for (std::int64_t s = 1; s <= 1'000'000; ++s) {
    const auto sp = split_fourth_power(s);
    ASSERT_EQ(sp.gamma * sp.gamma * sp.gamma * sp.gamma * sp.q, s) << s;
    for (std::int64_t p = 2; p * p * p * p <= sp.q; ++p) {
      ASSERT_NE(sp.q % (p * p * p * p), 0) << "s=" << s << " p=" << p;
    }
  }
}

TEST(Isqrt, ExactNearSquares) {
  EXPECT_EQ(isqrt(0), 0);
  EXPECT_EQ(isqrt(1), 1);
  EXPECT_EQ(isqrt(24), 4);
  EXPECT_EQ(isqrt(25), 5);
  const std::int64_t big = 3037000499;  // floor(sqrt(2^63 - 1))
  EXPECT_EQ(isqrt(big * big), big);
  EXPECT_EQ(isqrt(big * big - 1), big - 1);
}

TEST(TwoSquares, Representability) {
  EXPECT_TRUE(is_two_square_representable(50));
  EXPECT_FALSE(is_two_square_representable(3));
  EXPECT_FALSE(is_two_square_representable(12));
  EXPECT_TRUE(is_two_square_representable(0));
  EXPECT_TRUE(is_two_square_representable(9));
  EXPECT_FALSE(is_two_square_representable(21));
}

TEST(TwoSquares, RepresentabilityAgreesWithScan) {
  for (std::int64_t n = 1; n <= 5000; ++n) {
    EXPECT_EQ(is_two_square_representable(n), !unsigned_decompositions(n).empty()) << n;
  }
}

TEST(TwoSquares, UnsignedDecompositions) {
  EXPECT_EQ(unsigned_decompositions(50),
            (std::vector<UnsignedDecomposition>{{1, 7}, {5, 5}}));
  EXPECT_EQ(unsigned_decompositions(1), (std::vector<UnsignedDecomposition>{{0, 1}}));
  EXPECT_EQ(unsigned_decompositions(25),
            (std::vector<UnsignedDecomposition>{{0, 5}, {3, 4}}));
  EXPECT_TRUE(unsigned_decompositions(3).empty());
  EXPECT_EQ(unsigned_decompositions(5525).size(), 6u);
}

TEST(TwoSquares, SignedRepresentations) {
  EXPECT_EQ(signed_representations(1),
            (std::vector<WaveVector>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}));
  EXPECT_TRUE(signed_representations(3).empty());

  const auto fifty = signed_representations(50);
  ASSERT_EQ(fifty.size(), 12u);
  for (const auto& k : fifty) EXPECT_EQ(k.norm(), 50);
  EXPECT_TRUE(std::is_sorted(fifty.begin(), fifty.end()));
  for (const WaveVector k : {WaveVector{-1, 7}, {7, -1}, {-5, -5}, {5, 5}}) {
    EXPECT_TRUE(std::binary_search(fifty.begin(), fifty.end(), k)) << k;
  }
}

}  // namespace
}  // namespace resonance
