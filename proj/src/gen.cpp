#include "kcsim/gen.hpp"

#include <random>
#include <string>

#include "kcsim/errors.hpp"
#include "kcsim/util.hpp"

namespace kcsim {

namespace {

// Unbiased draw from [0, bound) via rejection; mt19937_64 output is fully
// specified by the standard, so results are reproducible everywhere.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

Graph gnp_attempt(int n, double p, bool weighted, Dist wmin, Dist wmax,
                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n, weighted);
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = u + 1; v <= n; ++v) {
      if (detail::unit_interval(rng()) < p) {
        Dist w = weighted
                     ? wmin + static_cast<Dist>(rand_below(
                                  rng, static_cast<std::uint64_t>(wmax - wmin) + 1))
                     : 1;
        g.add_edge(u, v, w);
      }
    }
  }
  return g;
}

Graph gen_gnp_impl(int n, double p, bool weighted, Dist wmin, Dist wmax,
                   std::uint64_t seed, int max_attempts) {
  if (n < 1) throw GraphError("n must be >= 1");
  if (p < 0.0 || p > 1.0) throw GraphError("p must be in [0,1]");
  if (weighted && (wmin < 1 || wmax < wmin))
    throw GraphError("need 1 <= wmin <= wmax");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::uint64_t s = detail::mix64(seed * 0x100000001b3ULL +
                                    static_cast<std::uint64_t>(attempt));
    Graph g = gnp_attempt(n, p, weighted, wmin, wmax, s);
    if (g.connected()) return g;
  }
  throw GraphError("gnp(n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                   "): no connected sample in " + std::to_string(max_attempts) +
                   " attempts");
}

}  // namespace

Graph gen_cycle(int n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  Graph g(n, false);
  for (NodeId v = 1; v < n; ++v) g.add_edge(v, v + 1);
  g.add_edge(n, 1);
  return g;
}

Graph gen_path(int n) {
  Graph g(n, false);
  for (NodeId v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph gen_star(int n) {
  if (n < 2) throw GraphError("star needs n >= 2");
  Graph g(n, false);
  for (NodeId v = 1; v < n; ++v) g.add_edge(v, n);
  return g;
}

Graph gen_gnp(int n, double p, std::uint64_t seed, int max_attempts) {
  return gen_gnp_impl(n, p, false, 1, 1, seed, max_attempts);
}

Graph gen_weighted_gnp(int n, double p, Dist wmin, Dist wmax,
                       std::uint64_t seed, int max_attempts) {
  return gen_gnp_impl(n, p, true, wmin, wmax, seed, max_attempts);
}

}  // namespace kcsim
