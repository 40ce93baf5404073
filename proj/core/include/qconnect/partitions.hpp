#pragma once

#include <map>
#include <vector>

namespace qconnect {

/// One solution {n_k} of sum_k k n_k = target; only nonzero multiplicities stored.
struct PartitionSolution {
  int target = 0;
  std::map<int, int> parts;  // k -> n_k

  /// sum_k n_k.
  int part_count() const;
  std::vector<int> descending_parts() const;
  friend bool operator==(const PartitionSolution&, const PartitionSolution&) = default;
};

/// One solution of sum_j j (k_j + l_j) + l = target.
struct LaguerrePartitionSolution {
  int target = 0;
  int ell = 0;
  std::map<int, int> kparts;    // j -> k_j
  std::map<int, int> ellparts;  // j -> l_j
  friend bool operator==(const LaguerrePartitionSolution&, const LaguerrePartitionSolution&) = default;
};

/// All partitions of n, largest part descending: [5], [4,1], [3,2], [3,1,1], ...
std::vector<PartitionSolution> partitions_of(int n);

/// All solutions for target k with 0 <= l <= n, ordered by l, then by colored parts
/// (j, k-color before l-color) descending.
std::vector<LaguerrePartitionSolution> laguerre_partitions(int n, int k);

}  // namespace qconnect
