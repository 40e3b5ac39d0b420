#include <gtest/gtest.h>

#include "capdp/smawk.hpp"
#include "oracles.hpp"

using namespace capdp;

TEST(Smawk, SingleEntry) {
  const MatrixOracle m{1, 1, [](std::size_t, std::size_t) { return ExtValue(5); }};
  const auto r = smawk_row_maxima(m);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].col, 0u);
  EXPECT_EQ(r[0].value, ExtValue(5));
}

TEST(Smawk, NegatedSquaredDistanceHasDiagonalMaxima) {
  const MatrixOracle m{4, 4, [](std::size_t i, std::size_t j) {
                         const std::int64_t d = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
                         return ExtValue(-d * d);
                       }};
  const auto r = smawk_row_maxima(m);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(r[i].col, i);
    EXPECT_EQ(r[i].value, ExtValue(0));
  }
}

TEST(Smawk, SmallRandomMatchesBruteForce) {
  SplitMix64 rng(8);
  const auto dense = oracle::random_inverse_monge(8, 8, rng);
  const auto m = oracle::dense_oracle(dense);
  ASSERT_TRUE(is_monge(m));
  const auto fast = smawk_row_maxima(m);
  const auto slow = brute_row_maxima(m);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(fast[i].col, slow[i].col);
    EXPECT_EQ(fast[i].value, slow[i].value);
  }
}

TEST(Smawk, RandomMatricesLeftmostArgmaxAndMonotone) {
  SplitMix64 rng(21);
  for (int it = 0; it < 300; ++it) {
    const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 60));
    const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 60));
    const auto dense = oracle::random_inverse_monge(rows, cols, rng);
    const auto m = oracle::dense_oracle(dense);
    const auto fast = smawk_row_maxima(m);
    const auto slow = brute_row_maxima(m);
    ASSERT_EQ(fast.size(), rows);
    for (std::size_t i = 0; i < rows; ++i) {
      ASSERT_EQ(fast[i].col, slow[i].col) << "row " << i;
      ASSERT_EQ(fast[i].value, slow[i].value);
      if (i > 0) ASSERT_GE(fast[i].col, fast[i - 1].col);
    }
  }
}

TEST(Smawk, OracleCallsLinear) {
  SplitMix64 rng(3);
  for (std::size_t n : {50u, 200u, 400u}) {
    const auto dense = oracle::random_inverse_monge(n, n, rng);
    std::size_t calls = 0;
    const MatrixOracle m{n, n, [&](std::size_t i, std::size_t j) {
                           ++calls;
                           return ExtValue(dense[i][j]);
                         }};
    smawk_row_maxima(m);
    EXPECT_LE(calls, 8 * (n + n)) << "n=" << n;
  }
}

TEST(IsMonge, Examples) {
  auto sq = [](std::size_t i, std::size_t j) {
    const std::int64_t d = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
    return ExtValue(d * d);
  };
  // (i-j)^2 satisfies the reversed inequality; its negation is Monge.
  EXPECT_FALSE(is_monge({5, 5, sq}));
  EXPECT_TRUE(is_monge({5, 5, [&](std::size_t i, std::size_t j) { return -sq(i, j); }}));
  EXPECT_TRUE(is_monge({6, 4, [](std::size_t i, std::size_t j) {
    return ExtValue(static_cast<std::int64_t>(i * j));
  }}));
  EXPECT_FALSE(is_monge({3, 3, [](std::size_t i, std::size_t j) { return ExtValue(i == j ? 1 : 0); }}));
}
