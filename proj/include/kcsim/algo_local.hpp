#pragma once

#include <functional>
#include <string>

#include "kcsim/kcenter.hpp"
#include "kcsim/sim.hpp"
#include "kcsim/util.hpp"

namespace kcsim {

struct LocalRunResult {
  CenterSolution solution;
  SimStats stats;
  bool aggregated = false;   // BFS reached every node within the budget
  long long bfs_depth = 0;   // ceil(t * k) with t = 2 + 4/eps
};

// LOCAL-model k-center: depth-bounded BFS from node 1, a completeness
// convergecast, then either whole-graph aggregation at node 1 (solved
// there with the greedy) or node 1 as the sole center.
LocalRunResult local_kcenter(const Graph& g, int k, const Rational& eps);

// A t-round LOCAL algorithm presented as a pure function of the
// distance-t view; decide returns whether the viewing node is a center.
struct ViewAlgorithm {
  std::string name;
  int t = 1;
  double beta = 1.0;  // declared bound: at most beta*k centers
  std::function<bool(const LabeledView&, int k, int n)> decide;
};

// Registered test algorithms: "spread" (about k evenly spaced centers),
// "spread-double" (about 2k, beta = 2), "prefix" (ids 1..k).
ViewAlgorithm view_algorithm_by_name(const std::string& name, int t);
std::vector<std::string> view_algorithm_names();

struct RearrangementReport {
  int n = 0, k = 0, t = 0;
  double beta = 1.0;
  std::string alg;
  int k_prime = 0;
  int i_star = 0;  // 1-based
  std::vector<std::pair<long long, long long>> segments;  // raw [b,e], may wrap
  std::vector<NodeId> rearranged;                         // C' clockwise
  std::vector<NodeId> centers_original, centers_rearranged;
  bool views_identical = false;
  int max_segment_len = 0;
  Dist radius_rearranged = 0;
  Dist opt = 0;
  bool opt_exact = false;  // true: brute force, false: cycle closed form
  double ratio = 0.0;
  double lower_bound = 0.0;
  Dist farthest_leftover = -1;  // -1 when no leftover nodes exist
  int leftover_count = 0;
};

// The cycle re-labeling adversary: runs alg on the canonical n-cycle,
// concatenates the (2t+1)-node segments around its centers into a new
// cycle C', re-runs alg there and reports the achieved ratio against
// k - (k^2 + k(beta*k - 1)(2t+1)) / (n+k). Requires n > 2*beta*k*t.
RearrangementReport build_rearranged_cycle(const ViewAlgorithm& alg, int n,
                                           int k);

}  // namespace kcsim
