#include "kcsim/distances.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <stdexcept>

#include "kcsim/errors.hpp"
#include "kcsim/util.hpp"

namespace kcsim {

namespace {

constexpr Dist kUnreached = -1;

// Multi-source shortest paths; sources start at distance 0.
std::vector<Dist> shortest_from(const Graph& g,
                                const std::vector<NodeId>& sources) {
  std::vector<Dist> dist(static_cast<std::size_t>(g.n()) + 1, kUnreached);
  if (!g.weighted()) {
    std::deque<NodeId> queue;
    for (NodeId s : sources) {
      g.check_node(s);
      if (dist[s] == kUnreached) {
        dist[s] = 0;
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      for (const auto& [u, w] : g.neighbors(v)) {
        (void)w;
        if (dist[u] == kUnreached) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
  } else {
    using Item = std::pair<Dist, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (NodeId s : sources) {
      g.check_node(s);
      dist[s] = 0;
      heap.push({0, s});
    }
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (dist[v] != d) continue;
      for (const auto& [u, w] : g.neighbors(v)) {
        Dist nd = d + w;
        if (dist[u] == kUnreached || nd < dist[u]) {
          dist[u] = nd;
          heap.push({nd, u});
        }
      }
    }
  }
  for (NodeId v = 1; v <= g.n(); ++v)
    if (dist[v] == kUnreached) throw GraphError("graph is disconnected");
  return dist;
}

}  // namespace

std::vector<Dist> sssp(const Graph& g, NodeId src) {
  g.check_node(src);
  return shortest_from(g, {src});
}

std::vector<std::vector<Dist>> apsp(const Graph& g) {
  std::vector<std::vector<Dist>> table(static_cast<std::size_t>(g.n()) + 1);
  for (NodeId v = 1; v <= g.n(); ++v) table[v] = sssp(g, v);
  return table;
}

Dist eccentricity(const Graph& g, NodeId v) {
  auto dist = sssp(g, v);
  return *std::max_element(dist.begin() + 1, dist.end());
}

Dist diameter(const Graph& g) {
  Dist d = 0;
  for (NodeId v = 1; v <= g.n(); ++v) d = std::max(d, eccentricity(g, v));
  return d;
}

Dist coverage_radius(const Graph& g, const std::vector<NodeId>& centers) {
  if (centers.empty()) throw std::invalid_argument("empty center set");
  auto dist = shortest_from(g, centers);
  return *std::max_element(dist.begin() + 1, dist.end());
}

DistanceSource DistanceSource::exact(const Graph& g) {
  DistanceSource ds;
  ds.dist_ = std::make_shared<const std::vector<std::vector<Dist>>>(apsp(g));
  return ds;
}

DistanceSource DistanceSource::stretched(const Graph& g, double alpha,
                                         std::uint64_t seed) {
  if (alpha < 1.0) throw std::invalid_argument("stretch must be >= 1");
  DistanceSource ds = exact(g);
  ds.alpha_ = alpha;
  ds.seed_ = seed;
  return ds;
}

Dist DistanceSource::query(NodeId u, NodeId v) const {
  const Dist d = (*dist_)[u][v];
  if (u == v || alpha_ == 1.0) return d;
  NodeId lo = std::min(u, v), hi = std::max(u, v);
  std::uint64_t h = detail::mix64(
      seed_ ^ detail::mix64(static_cast<std::uint64_t>(lo) << 32 |
                            static_cast<std::uint64_t>(hi)));
  double f = 1.0 + (alpha_ - 1.0) * detail::unit_interval(h);
  return static_cast<Dist>(std::floor(static_cast<double>(d) * f));
}

DistanceSource make_stretch_oracle(const Graph& g, double alpha,
                                   std::uint64_t rng_seed) {
  return DistanceSource::stretched(g, alpha, rng_seed);
}

}  // namespace kcsim
