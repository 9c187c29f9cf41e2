#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace kcsim {

using NodeId = int;  // 1-based, ids are exactly {1, ..., n}
using Dist = std::int64_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Dist w = 1;
  bool operator==(const Edge&) const = default;
};

// Undirected graph on nodes 1..n. Self-loops, duplicate edges and
// non-positive weights are rejected at construction.
class Graph {
 public:
  Graph() = default;
  Graph(int n, bool weighted);

  static Graph from_edges(int n, const std::vector<Edge>& edges, bool weighted);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  bool weighted() const { return weighted_; }

  // Edges normalized to u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  // Neighbors of v with weights, ascending by id.
  const std::vector<std::pair<NodeId, Dist>>& neighbors(NodeId v) const;

  bool has_edge(NodeId u, NodeId v) const;
  Dist max_weight() const;  // 1 for an empty edge set
  bool connected() const;

  void add_edge(NodeId u, NodeId v, Dist w = 1);
  void check_node(NodeId v) const;

 private:
  int n_ = 0;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<NodeId, Dist>>> adj_;  // index 0 unused
};

}  // namespace kcsim
