#pragma once

// Brute-force reference implementations used by the unit and acceptance
// suites. Deliberately independent of the library's algorithms: matching by
// exhaustive recursion, k-means by assignment enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "sym_matrix.hpp"

namespace rcd_oracles {

// Maximum number of disjoint pairs (i, j) of inliers with different true
// labels but equal estimated labels. Exhaustive bitmask recursion, usable up
// to ~16 inliers. Outliers carry truth label r+1 and are skipped.
inline int max_disjoint_pairs_bruteforce(const std::vector<int>& truth,
                                         const std::vector<int>& est, int r) {
  std::vector<int> nodes;
  for (size_t i = 0; i < truth.size(); ++i)
    if (truth[i] <= r) nodes.push_back(static_cast<int>(i));
  const int n = static_cast<int>(nodes.size());

  std::vector<int> memo(static_cast<size_t>(1) << n, -1);
  auto eligible = [&](int a, int b) {
    return truth[nodes[a]] != truth[nodes[b]] && est[nodes[a]] == est[nodes[b]];
  };
  // best(mask) = max pairs among the nodes still present in mask
  std::function<int(unsigned)> best = [&](unsigned mask) -> int {
    if (mask == 0) return 0;
    int& m = memo[mask];
    if (m >= 0) return m;
    int u = 0;
    while (!(mask & (1u << u))) ++u;
    int r0 = best(mask & ~(1u << u));  // leave u unpaired
    for (int v = u + 1; v < n; ++v) {
      if (!(mask & (1u << v)) || !eligible(u, v)) continue;
      r0 = std::max(r0, 1 + best(mask & ~(1u << u) & ~(1u << v)));
    }
    return m = r0;
  };
  return best((1u << n) - 1);
}

struct KmeansOpt {
  double objective;
  std::vector<int> labels;  // 0-based, may leave clusters empty
};

// Exhaustive k-means optimum: try every assignment of n points to k
// clusters (k^n), objective = within-cluster sum of squared distances to
// the cluster means.
inline KmeansOpt kmeans_bruteforce(const std::vector<rcd::Vector>& points, int k) {
  const int n = static_cast<int>(points.size());
  const auto dim = points[0].size();
  std::vector<int> assign(n, 0);
  KmeansOpt best{std::numeric_limits<double>::infinity(), {}};
  while (true) {
    std::vector<rcd::Vector> sums(k, rcd::Vector::Zero(dim));
    std::vector<int> counts(k, 0);
    for (int i = 0; i < n; ++i) {
      sums[assign[i]] += points[i];
      ++counts[assign[i]];
    }
    double obj = 0.0;
    for (int i = 0; i < n; ++i) {
      const rcd::Vector mean = sums[assign[i]] / counts[assign[i]];
      obj += (points[i] - mean).squaredNorm();
    }
    if (obj < best.objective) best = {obj, assign};

    int pos = n - 1;
    while (pos >= 0 && assign[pos] == k - 1) assign[pos--] = 0;
    if (pos < 0) break;
    ++assign[pos];
  }
  return best;
}

}  // namespace rcd_oracles
