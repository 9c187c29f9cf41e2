#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "kcsim/graph.hpp"

namespace kcsim {

// Exact single-source shortest paths: BFS when unweighted, Dijkstra when
// weighted. Result is indexed 1..n; throws GraphError when some node is
// unreachable.
std::vector<Dist> sssp(const Graph& g, NodeId src);

// All-pairs table indexed [1..n][1..n].
std::vector<std::vector<Dist>> apsp(const Graph& g);

Dist eccentricity(const Graph& g, NodeId v);
Dist diameter(const Graph& g);

// max over nodes of the distance to the nearest member of centers.
Dist coverage_radius(const Graph& g, const std::vector<NodeId>& centers);

// Pairwise distance source: either the exact metric or a one-sided
// multiplicative stretch of it. Queries satisfy
//   d(u,v) <= query(u,v) <= alpha * d(u,v)
// with query(u,u) = 0 and query symmetric. Stretched values are
// floor(d * f(u,v)) for a deterministic per-pair factor f in [1, alpha],
// which keeps all lengths integral.
class DistanceSource {
 public:
  static DistanceSource exact(const Graph& g);
  static DistanceSource stretched(const Graph& g, double alpha,
                                  std::uint64_t seed);

  Dist query(NodeId u, NodeId v) const;
  double stretch() const { return alpha_; }
  bool is_exact() const { return alpha_ == 1.0; }

 private:
  std::shared_ptr<const std::vector<std::vector<Dist>>> dist_;
  double alpha_ = 1.0;
  std::uint64_t seed_ = 0;
};

DistanceSource make_stretch_oracle(const Graph& g, double alpha,
                                   std::uint64_t rng_seed);

}  // namespace kcsim
