#include "qconnect/partitions.hpp"

#include <algorithm>
#include <functional>

#include "qconnect/error.hpp"

namespace qconnect {

int PartitionSolution::part_count() const {
  int c = 0;
  for (const auto& [k, m] : parts) c += m;
  return c;
}

std::vector<int> PartitionSolution::descending_parts() const {
  std::vector<int> out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it)
    for (int i = 0; i < it->second; ++i) out.push_back(it->first);
  return out;
}

std::vector<PartitionSolution> partitions_of(int n) {
  if (n < 0) throw IndexOutOfRange("partitions_of needs n >= 0");
  std::vector<PartitionSolution> out;
  PartitionSolution current{n, {}};
  std::function<void(int, int)> descend = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      ++current.parts[p];
      descend(remaining - p, p);
      if (--current.parts[p] == 0) current.parts.erase(p);
    }
  };
  descend(n, n);
  return out;
}

std::vector<LaguerrePartitionSolution> laguerre_partitions(int n, int k) {
  if (n < 0 || k < 0) throw IndexOutOfRange("laguerre_partitions needs n, k >= 0");
  std::vector<LaguerrePartitionSolution> out;
  for (int ell = 0; ell <= std::min(n, k); ++ell) {
    LaguerrePartitionSolution current{k, ell, {}, {}};
    // Colored part key 2j + 1 is a k-part of size j, key 2j an l-part; keys taken non-increasing.
    std::function<void(int, int)> descend = [&](int remaining, int max_key) {
      if (remaining == 0) {
        out.push_back(current);
        return;
      }
      for (int key = max_key; key >= 2; --key) {
        const int size = key / 2;
        if (size > remaining) continue;
        auto& slot = key % 2 == 1 ? current.kparts : current.ellparts;
        ++slot[size];
        descend(remaining - size, key);
        if (--slot[size] == 0) slot.erase(size);
      }
    };
    descend(k - ell, 2 * (k - ell) + 1);
  }
  return out;
}

}  // namespace qconnect
