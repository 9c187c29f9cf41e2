#pragma once

#include <cstdint>
#include <vector>

#include "kcsim/distances.hpp"
#include "kcsim/graph.hpp"

namespace kcsim {

struct CenterSolution {
  std::vector<NodeId> centers;  // ascending
  Dist radius = 0;
  bool operator==(const CenterSolution&) const = default;
};

// Exhaustive optimum over all min(k,n)-subsets. Ties are broken toward the
// lexicographically smallest id set, so results are deterministic. Aborts
// with WorkLimitError when the number of candidate sets exceeds
// max_candidates.
CenterSolution opt_k_bruteforce(const Graph& g, int k,
                                std::uint64_t max_candidates = 100000000ULL);

// Farthest-first traversal from seed. Selection distances come from ds;
// the reported radius is always the true coverage radius of the chosen
// set under the exact metric.
CenterSolution greedy_gonzalez(const Graph& g, const DistanceSource& ds, int k,
                               NodeId seed);

// Exact optimum for the n-cycle, in closed form.
Dist opt_k_cycle(int n, int k);

}  // namespace kcsim
