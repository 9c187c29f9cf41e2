#pragma once

#include <vector>

#include "kcsim/gen.hpp"
#include "kcsim/graph.hpp"

namespace kcsim::testing {

// Random connected graphs with 3 <= n <= max_n, deterministic in seed.
inline std::vector<Graph> random_corpus(int count, int max_n,
                                        std::uint64_t seed = 7) {
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    int n = 3 + i % (max_n - 2);
    double p = 0.25 + 0.15 * (i % 4);
    out.push_back(gen_gnp(n, p, seed + static_cast<std::uint64_t>(i) * 131));
  }
  return out;
}

// Cycles, paths and stars across a size range.
inline std::vector<Graph> structured_corpus(int max_n = 16) {
  std::vector<Graph> out;
  for (int n = 3; n <= max_n; ++n) out.push_back(gen_cycle(n));
  for (int n = 2; n <= max_n; ++n) out.push_back(gen_path(n));
  for (int n = 3; n <= max_n; ++n) out.push_back(gen_star(n));
  return out;
}

}  // namespace kcsim::testing
