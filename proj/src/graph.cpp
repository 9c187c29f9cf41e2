#include "kcsim/graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "kcsim/errors.hpp"

namespace kcsim {

Graph::Graph(int n, bool weighted) : n_(n), weighted_(weighted) {
  if (n < 1) throw GraphError("node count must be at least 1");
  adj_.resize(static_cast<std::size_t>(n) + 1);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges, bool weighted) {
  Graph g(n, weighted);
  for (const Edge& e : edges) g.add_edge(e.u, e.v, e.w);
  return g;
}

void Graph::check_node(NodeId v) const {
  if (v < 1 || v > n_)
    throw GraphError("unknown node id " + std::to_string(v) + " (n=" +
                     std::to_string(n_) + ")");
}

void Graph::add_edge(NodeId u, NodeId v, Dist w) {
  check_node(u);
  check_node(v);
  if (u == v) throw GraphError("self-loop at node " + std::to_string(u));
  if (w < 1) throw GraphError("edge weight must be >= 1");
  if (!weighted_ && w != 1)
    throw GraphError("weight on an unweighted graph edge");
  if (has_edge(u, v))
    throw GraphError("duplicate edge " + std::to_string(u) + " " +
                     std::to_string(v));
  if (u > v) std::swap(u, v);
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                              [](const Edge& e, const std::pair<int, int>& p) {
                                return std::pair{e.u, e.v} < p;
                              });
  edges_.insert(pos, Edge{u, v, w});
  auto& au = adj_[u];
  au.insert(std::lower_bound(au.begin(), au.end(), std::pair{v, Dist{0}},
                             [](const auto& a, const auto& b) {
                               return a.first < b.first;
                             }),
            {v, w});
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), std::pair{u, Dist{0}},
                             [](const auto& a, const auto& b) {
                               return a.first < b.first;
                             }),
            {u, w});
}

const std::vector<std::pair<NodeId, Dist>>& Graph::neighbors(NodeId v) const {
  check_node(v);
  return adj_[v];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  const auto& a = adj_[u];
  return std::any_of(a.begin(), a.end(),
                     [v](const auto& p) { return p.first == v; });
}

Dist Graph::max_weight() const {
  Dist w = 1;
  for (const Edge& e : edges_) w = std::max(w, e.w);
  return w;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  std::vector<NodeId> stack{1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (const auto& [u, w] : adj_[v]) {
      (void)w;
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n_;
}

}  // namespace kcsim
