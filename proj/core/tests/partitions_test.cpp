#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "qconnect/partitions.hpp"

namespace qconnect {
namespace {

// Counts multiplicity vectors with sum k n_k = n by direct search over all bounded vectors.
long brute_force_partition_count(int n) {
  std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
  long count = 0;
  std::function<void(int, int)> search = [&](int k, int remaining) {
    if (k > n) {
      count += remaining == 0 ? 1 : 0;
      return;
    }
    for (int m = 0; m * k <= remaining; ++m) search(k + 1, remaining - m * k);
  };
  search(1, n);
  return count;
}

TEST(Partitions, SmallCases) {
  const auto zero = partitions_of(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].parts.empty());
  EXPECT_EQ(partitions_of(5).size(), 7u);
  EXPECT_EQ(partitions_of(10).size(), 42u);
}

TEST(Partitions, CountsMatchBruteForce) {
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(static_cast<long>(partitions_of(n).size()), brute_force_partition_count(n)) << n;
}

TEST(Partitions, EverySolutionSatisfiesConstraintOnce) {
  for (int n = 0; n <= 12; ++n) {
    std::set<std::vector<int>> seen;
    for (const auto& p : partitions_of(n)) {
      int total = 0;
      for (const auto& [k, m] : p.parts) {
        EXPECT_GE(m, 1);
        total += k * m;
      }
      EXPECT_EQ(total, n);
      EXPECT_EQ(p.target, n);
      EXPECT_TRUE(seen.insert(p.descending_parts()).second);
    }
  }
}

TEST(Partitions, DeterministicOrder) {
  const auto p = partitions_of(5);
  std::vector<std::vector<int>> parts;
  for (const auto& s : p) parts.push_back(s.descending_parts());
  const std::vector<std::vector<int>> expected = {{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
  EXPECT_EQ(parts, expected);
  EXPECT_EQ(p[3].part_count(), 3);
}

long brute_force_laguerre_count(int n, int k) {
  // sum_j j (k_j + l_j) + l = k with 0 <= l <= n: bicolored partitions of k - l.
  long total = 0;
  for (int l = 0; l <= std::min(n, k); ++l) {
    const int m = k - l;
    std::vector<long> ways(static_cast<std::size_t>(m) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= m; ++part)
      for (int color = 0; color < 2; ++color)
        for (int s = part; s <= m; ++s) ways[s] += ways[s - part];
    total += ways[m];
  }
  return total;
}

TEST(LaguerrePartitions, Examples) {
  EXPECT_EQ(laguerre_partitions(3, 3).size(), 18u);
  const auto zero = laguerre_partitions(4, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].ell, 0);
  EXPECT_TRUE(zero[0].kparts.empty() && zero[0].ellparts.empty());
  for (const auto& s : laguerre_partitions(0, 2)) EXPECT_EQ(s.ell, 0);
  EXPECT_EQ(laguerre_partitions(0, 2).size(), 5u);
}

TEST(LaguerrePartitions, CountsAndConstraint) {
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= 6; ++k) {
      const auto solutions = laguerre_partitions(n, k);
      EXPECT_EQ(static_cast<long>(solutions.size()), brute_force_laguerre_count(n, k)) << n << "," << k;
      for (const auto& s : solutions) {
        int total = s.ell;
        for (const auto& [j, kj] : s.kparts) total += j * kj;
        for (const auto& [j, lj] : s.ellparts) total += j * lj;
        EXPECT_EQ(total, k);
        EXPECT_LE(s.ell, n);
      }
    }
  }
}

}  // namespace
}  // namespace qconnect
