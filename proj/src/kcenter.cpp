#include "kcsim/kcenter.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kcsim/errors.hpp"

namespace kcsim {

namespace {

// C(n,k) capped at limit+1 to avoid overflow.
std::uint64_t binomial_capped(int n, int k, std::uint64_t limit) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace

CenterSolution opt_k_bruteforce(const Graph& g, int k,
                                std::uint64_t max_candidates) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!g.connected()) throw GraphError("graph is disconnected");
  const int n = g.n();
  const int size = std::min(k, n);
  if (binomial_capped(n, size, max_candidates) > max_candidates)
    throw WorkLimitError("opt_k_bruteforce: C(" + std::to_string(n) + "," +
                         std::to_string(size) + ") exceeds the work limit");

  const auto table = apsp(g);
  std::vector<NodeId> pick(size);
  std::iota(pick.begin(), pick.end(), 1);
  std::vector<NodeId> best;
  Dist best_radius = std::numeric_limits<Dist>::max();

  for (;;) {
    // radius of the current candidate, pruned against the best so far
    Dist radius = 0;
    for (NodeId v = 1; v <= n && radius < best_radius; ++v) {
      Dist nearest = std::numeric_limits<Dist>::max();
      for (NodeId c : pick) nearest = std::min(nearest, table[c][v]);
      radius = std::max(radius, nearest);
    }
    // lexicographic enumeration + strict improvement keeps the smallest set
    if (radius < best_radius) {
      best_radius = radius;
      best = pick;
    }
    // next combination
    int i = size - 1;
    while (i >= 0 && pick[i] == n - (size - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return CenterSolution{best, best_radius};
}

CenterSolution greedy_gonzalez(const Graph& g, const DistanceSource& ds, int k,
                               NodeId seed) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  g.check_node(seed);
  const int n = g.n();
  const int target = std::min(k, n);

  std::vector<NodeId> centers{seed};
  std::vector<Dist> to_set(static_cast<std::size_t>(n) + 1);
  for (NodeId v = 1; v <= n; ++v) to_set[v] = ds.query(seed, v);

  while (static_cast<int>(centers.size()) < target) {
    NodeId farthest = 0;
    Dist far_dist = -1;
    for (NodeId v = 1; v <= n; ++v) {
      if (std::find(centers.begin(), centers.end(), v) != centers.end())
        continue;
      if (to_set[v] > far_dist) {  // strict: ties go to the smaller id
        far_dist = to_set[v];
        farthest = v;
      }
    }
    centers.push_back(farthest);
    for (NodeId v = 1; v <= n; ++v)
      to_set[v] = std::min(to_set[v], ds.query(farthest, v));
  }
  std::sort(centers.begin(), centers.end());
  return CenterSolution{centers, coverage_radius(g, centers)};
}

Dist opt_k_cycle(int n, int k) {
  if (n < 3 || k < 1) throw std::invalid_argument("need n >= 3, k >= 1");
  if (k >= n) return 0;
  return (static_cast<Dist>(n) - k + 2 * k - 1) / (2 * k);
}

}  // namespace kcsim
