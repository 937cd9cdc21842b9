#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "pigeon/error.hpp"
#include "pigeon/weight_codec.hpp"

using namespace pigeon;

namespace {

BitString B(const char* s) { return BitString::from_string(s); }

// Weight-k strings of length n in lexicographic order, by filtering all 2^n.
std::vector<BitString> listed(std::size_t n, std::size_t k) {
  std::vector<BitString> out;
  for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
    BitString s = BitString::from_uint(v, n);
    if (s.weight() == k) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(unrank(4, 0, 0), B("0000"));
  EXPECT_EQ(unrank(4, 2, 0), B("0011"));
  EXPECT_EQ(unrank(4, 2, 5), B("1100"));
  EXPECT_EQ(rank(4, 2, B("0110")), 2);
  EXPECT_EQ(unrank(4, 2, 99), B("1100"));
  EXPECT_THROW(rank(4, 1, B("0110")), Error);
}

TEST(Rank, MatchesListingExhaustively) {
  for (std::size_t n = 0; n <= 16; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      auto all = listed(n, k);
      ASSERT_EQ(BigInt(all.size()), binomial(n, k));
      for (std::size_t i = 0; i < all.size(); ++i) {
        ASSERT_EQ(unrank(n, k, i), all[i]) << n << ' ' << k << ' ' << i;
        ASSERT_EQ(rank(n, k, all[i]), i);
        if (i + 1 < all.size()) {
          ASSERT_LT(unrank(n, k, i), unrank(n, k, i + 1));
        }
      }
    }
  }
}

TEST(Rank, LargeLengthsRoundTrip) {
  for (std::size_t n : {100, 513, 2048}) {
    BitString s(n);
    for (std::size_t p = 0; p < n; p += 7) s.set(p, true);
    EXPECT_EQ(unrank(n, s.weight(), rank(n, s.weight(), s)), s);
  }
}

TEST(SparseCode, WidthAndRoundTrip) {
  SparseCode code(16, Rational(1, 4));
  EXPECT_EQ(code.width(), 19u);
  EXPECT_EQ(code.max_weight(), 4u);
  BitString s = B("0000000000000011");
  EXPECT_EQ(code.decode(code.encode(s)), s);
  EXPECT_EQ(code.decode(code.encode(BitString(16))), BitString(16));
  EXPECT_THROW(code.encode(B("0000000000011111")), Error);
}

TEST(SparseCode, EveryAdmissibleStringRoundTrips) {
  SparseCode code(16, Rational(1, 4));
  for (std::uint64_t v = 0; v < (1ULL << 16); ++v) {
    BitString s = BitString::from_uint(v, 16);
    if (s.weight() <= code.max_weight()) {
      ASSERT_EQ(code.decode(code.encode(s)), s);
    }
  }
}

TEST(SparseCode, DecodeIsTotal) {
  SparseCode code(16, Rational(1, 4));
  for (std::uint64_t v = 0; v < (1ULL << 19); v += 97) {
    BitString s = code.decode(BitString::from_uint(v, 19));
    EXPECT_EQ(s.size(), 16u);
    EXPECT_LE(s.weight(), code.max_weight());
  }
  EXPECT_EQ(code.decode(BitString(19, true)).weight(), 4u);
}

TEST(SparseCode, RefusesWhenTheBoundFails) {
  // The constructor must accept exactly the lengths where the bound holds.
  for (std::size_t n = 1; n <= 40; ++n) {
    Rational eps(1, 4);
    bool ok = chernoff_width_check(n, eps);
    if (ok) {
      EXPECT_NO_THROW(SparseCode(n, eps));
    } else {
      EXPECT_THROW(SparseCode(n, eps), Error);
    }
  }
}

TEST(Chernoff, ExactValues) {
  EXPECT_TRUE(chernoff_width_check(64, Rational(1, 4)));
  EXPECT_LE(binomial(64, 16), pow2(60));
  // n = 4, eps = 1/4: weight bound floor(2 - 1) = 1, savings ceil(1/4) = 1.
  std::size_t count = 0;
  for (std::uint64_t v = 0; v < 16; ++v) count += __builtin_popcountll(v) == 1;
  EXPECT_EQ(chernoff_width_check(4, Rational(1, 4)), count <= 8);
  for (std::size_t n : {64, 128, 256, 512, 1024})
    for (auto eps : {Rational(1, 4), Rational(1, 8)}) EXPECT_TRUE(chernoff_width_check(n, eps)) << n;
}

TEST(Chernoff, WeightZeroRowAlwaysFits) {
  // Once eps*n >= n/2 the admissible weight is 0 and binom(n, 0) = 1.
  for (std::size_t n = 1; n <= 30; ++n) EXPECT_TRUE(binomial(n, 0) <= pow2(n - sparse_savings(n, Rational(49, 100))));
}
