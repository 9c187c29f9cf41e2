#pragma once

#include <cstdint>

#include "kcsim/graph.hpp"

namespace kcsim {

Graph gen_cycle(int n);
Graph gen_path(int n);
// Hub is node n so that node 1 is a leaf; this keeps min-id-seeded greedy
// runs on stars at the tight end of the 2-approximation.
Graph gen_star(int n);

// Connected G(n,p); retries with derived seeds and fails after the retry
// budget is exhausted.
Graph gen_gnp(int n, double p, std::uint64_t seed, int max_attempts = 64);
Graph gen_weighted_gnp(int n, double p, Dist wmin, Dist wmax,
                       std::uint64_t seed, int max_attempts = 64);

}  // namespace kcsim
