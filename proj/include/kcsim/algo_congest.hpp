#pragma once

#include "kcsim/kcenter.hpp"
#include "kcsim/sim.hpp"

namespace kcsim {

struct CongestRunResult {
  CenterSolution solution;  // radius recomputed under the exact metric
  SimStats stats;
  std::vector<Dist> dist_to_set;  // per node, as learned in the last phase
};

// Simulated 2-approximation under CONGEST: min-id election by competing
// BFS floods with leaf-to-root termination reports, then k-1 iterations
// of multi-source BFS plus a farthest-node/min-id convergecast. The
// center set matches greedy_gonzalez(g, exact, k, seed=v_min) exactly.
// Requires an unweighted connected graph.
CongestRunResult congest_kcenter(const Graph& g, int k,
                                 const TraceSink& trace = nullptr,
                                 int bandwidth_words = 8);

}  // namespace kcsim
