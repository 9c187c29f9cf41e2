#pragma once

#include <optional>

#include "kcsim/distances.hpp"
#include "kcsim/kcenter.hpp"
#include "kcsim/sim.hpp"

namespace kcsim {

// Distance phase of the CLIQUE algorithm: either an in-model all-to-all
// exchange of the edge list (every node then solves shortest paths
// locally), or an injected distance source standing in for an external
// APSP routine.
struct CliquePhase1 {
  enum class Kind { ExactBroadcast, Injected };
  Kind kind = Kind::ExactBroadcast;
  std::optional<DistanceSource> source;

  static CliquePhase1 exact() { return {}; }
  static CliquePhase1 injected(DistanceSource ds) {
    CliquePhase1 p;
    p.kind = Kind::Injected;
    p.source = std::move(ds);
    return p;
  }
};

struct CliqueRunResult {
  CenterSolution solution;  // radius recomputed under the exact metric
  SimStats stats;
  int phase1_rounds = 0;  // message rounds of the distance phase
  int phase2_rounds = 0;  // message rounds of the greedy phase, = min(k,n)-1
  bool elected = false;   // an id-broadcast election round was run
};

// Greedy k-center under CLIQUE. With the exact phase 1 the center set
// matches greedy_gonzalez(g, exact, k, seed=v_min); with an injected
// alpha-oracle it matches the same greedy run on that oracle. Weighted
// graphs are allowed.
CliqueRunResult clique_kcenter(const Graph& g, int k, const CliquePhase1& phase1,
                               bool broadcast_election = false,
                               const TraceSink& trace = nullptr,
                               int bandwidth_words = 8);

}  // namespace kcsim
