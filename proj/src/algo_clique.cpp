#include "kcsim/algo_clique.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kcsim {

namespace {

// Wire formats:
//   elect   [id self]
//   count   [counter owned_edges]
//   record  [id u][id v][dist w]
//   dist    [dist d][id self]
//
// Exact phase 1 re-distributes the edge list: the lower endpoint owns an
// edge, owners announce their counts, edge slots are assigned round-robin
// to relay nodes (one record per ordered pair per round, so a single
// round suffices), and each relay re-broadcasts one record per round.
// That takes 2 + ceil(m/n) message rounds.

struct CliqueState : NodeState {
  LocalView view;
  int k_eff = 1;
  long long round = 0;

  NodeId vmin = 1;
  std::vector<Edge> owned;          // incident edges with self as low end
  std::vector<long long> counts;    // owned count per node
  long long maxload = 0;
  long long p1_send_end = 0;        // last phase-1 message round
  std::vector<Edge> relay_records;  // records this node re-broadcasts
  std::set<std::tuple<NodeId, NodeId, Dist>> known;

  std::vector<Dist> row;  // own distance row, 1..n
  bool in_set = false;
  Dist dist_to_set = -1;
  bool finished = false;
};

class CliqueProgram : public NodeProgram {
 public:
  CliqueProgram(int k, CliquePhase1 phase1, bool elect)
      : k_(k), phase1_(std::move(phase1)), elect_(elect) {}

  std::unique_ptr<NodeState> init(const LocalView& view) const override {
    auto s = std::make_unique<CliqueState>();
    s->view = view;
    s->k_eff = std::min(k_, view.n);
    for (const auto& [nbr, w] : view.incident) {
      if (view.id < nbr) s->owned.push_back({view.id, nbr, w});
      s->known.insert({std::min(view.id, nbr), std::max(view.id, nbr), w});
    }
    if (injected()) {
      s->row.resize(static_cast<std::size_t>(view.n) + 1);
      for (NodeId u = 1; u <= view.n; ++u)
        s->row[u] = phase1_.source->query(view.id, u);
    }
    return s;
  }

  bool on_round(NodeState& state, const std::vector<InMessage>& inbox,
                Outbox& out) const override {
    auto& s = static_cast<CliqueState&>(state);
    s.round += 1;
    const long long base = elect_ ? 1 : 0;

    // ---- ingest ----
    std::vector<std::pair<Dist, NodeId>> dists;
    for (const InMessage& in : inbox) {
      const Message& m = in.payload;
      if (m.size() == 1 && m.kind(0) == FieldKind::NodeId) {
        s.vmin = std::min(s.vmin,
                          static_cast<NodeId>(m.at(0, FieldKind::NodeId)));
      } else if (m.size() == 1 && m.kind(0) == FieldKind::Counter) {
        if (s.counts.empty())
          s.counts.assign(static_cast<std::size_t>(s.view.n) + 1, 0);
        s.counts[in.from] = m.at(0, FieldKind::Counter);
      } else if (m.size() == 3) {
        Edge e{static_cast<NodeId>(m.at(0, FieldKind::NodeId)),
               static_cast<NodeId>(m.at(1, FieldKind::NodeId)),
               m.at(2, FieldKind::Distance)};
        s.known.insert({e.u, e.v, e.w});
        if (s.round == base + 3) s.relay_records.push_back(e);
      } else if (m.size() == 2 && m.kind(0) == FieldKind::Distance) {
        dists.emplace_back(m.at(0, FieldKind::Distance),
                           static_cast<NodeId>(m.at(1, FieldKind::NodeId)));
      }
    }

    // ---- schedule ----
    if (elect_ && s.round == 1) {
      Message m;
      m.add_id(s.view.id);
      broadcast(s, m, out);
      return false;
    }

    if (!injected()) {
      if (s.round == base + 1) {
        Message m;
        m.add_counter(static_cast<std::int64_t>(s.owned.size()));
        broadcast(s, m, out);
        return false;
      }
      if (s.round == base + 2) {
        distribute_owned(s, out);
        return false;
      }
      if (s.round == base + 3) {
        std::sort(s.relay_records.begin(), s.relay_records.end(),
                  [](const Edge& a, const Edge& b) {
                    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
                  });
      }
      if (s.round <= s.p1_send_end) {
        long long j = s.round - (base + 2);  // 1-based record index
        if (j >= 1 && j <= static_cast<long long>(s.relay_records.size())) {
          const Edge& e = s.relay_records[static_cast<std::size_t>(j - 1)];
          Message m;
          m.add_id(e.u).add_id(e.v).add_dist(e.w);
          broadcast(s, m, out);
        }
        return false;
      }
    }

    // ---- greedy phase ----
    const long long start = injected() ? base : s.p1_send_end;
    if (s.round == start + 1 && !injected()) solve_distances(s);
    if (s.round == start + 1) {
      s.in_set = s.view.id == s.vmin;
      s.dist_to_set = s.row[s.vmin];
    } else {
      // resolve the previous iteration: v* = farthest, min id on ties
      std::pair<Dist, NodeId> best{s.dist_to_set, s.view.id};
      for (const auto& [d, who] : dists)
        if (d > best.first || (d == best.first && who < best.second))
          best = {d, who};
      if (best.second == s.view.id) s.in_set = true;
      s.dist_to_set = std::min(s.dist_to_set, s.row[best.second]);
    }
    if (s.round == start + s.k_eff) {  // last v* resolved, nothing to send
      s.finished = true;
      return true;
    }
    Message m;
    m.add_dist(s.dist_to_set).add_id(s.view.id);
    broadcast(s, m, out);
    return false;
  }

  NodeOutput output(const NodeState& state) const override {
    const auto& s = static_cast<const CliqueState&>(state);
    NodeOutput o;
    o.is_center = s.in_set;
    o.learned_distance = s.in_set ? 0 : s.dist_to_set;
    return o;
  }

 private:
  bool injected() const { return phase1_.kind == CliquePhase1::Kind::Injected; }

  static void broadcast(const CliqueState& s, const Message& m, Outbox& out) {
    for (NodeId v = 1; v <= s.view.n; ++v)
      if (v != s.view.id) out.send(v, m);
  }

  // Round-robin slot assignment; every node derives the same table from
  // the announced counts.
  void distribute_owned(CliqueState& s, Outbox& out) const {
    const long long base = elect_ ? 1 : 0;
    if (s.counts.empty())
      s.counts.assign(static_cast<std::size_t>(s.view.n) + 1, 0);
    s.counts[s.view.id] = static_cast<long long>(s.owned.size());
    long long total = 0;
    for (NodeId v = 1; v <= s.view.n; ++v) total += s.counts[v];
    long long slot_base = 0;
    for (NodeId v = 1; v < s.view.id; ++v) slot_base += s.counts[v];
    s.maxload = (total + s.view.n - 1) / s.view.n;
    s.p1_send_end = base + 2 + s.maxload;

    std::sort(s.owned.begin(), s.owned.end(),
              [](const Edge& a, const Edge& b) { return a.v < b.v; });
    for (std::size_t j = 0; j < s.owned.size(); ++j) {
      NodeId relay = static_cast<NodeId>(
          (slot_base + static_cast<long long>(j)) % s.view.n + 1);
      if (relay == s.view.id) {
        s.relay_records.push_back(s.owned[j]);
      } else {
        Message m;
        m.add_id(s.owned[j].u).add_id(s.owned[j].v).add_dist(s.owned[j].w);
        out.send(relay, m);
      }
    }
  }

  void solve_distances(CliqueState& s) const {
    Graph g(s.view.n, s.view.weighted);
    for (const auto& [u, v, w] : s.known) g.add_edge(u, v, w);
    s.row = sssp(g, s.view.id);
  }

  int k_;
  CliquePhase1 phase1_;
  bool elect_;
};

}  // namespace

CliqueRunResult clique_kcenter(const Graph& g, int k, const CliquePhase1& phase1,
                               bool broadcast_election, const TraceSink& trace,
                               int bandwidth_words) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!g.connected()) throw GraphError("graph is disconnected");

  CliqueProgram prog(k, phase1, broadcast_election);
  ModelConfig cfg;
  cfg.model = Model::Clique;
  cfg.bandwidth_words = bandwidth_words;
  if (phase1.kind == CliquePhase1::Kind::Injected)
    cfg.dist_cap_override =
        EncodingContext::for_graph(g, phase1.source->stretch()).dist_cap;
  const int k_eff = std::min(k, g.n());
  const int maxload = (g.m() + g.n() - 1) / g.n();
  const int cap = (broadcast_election ? 1 : 0) +
                  (phase1.kind == CliquePhase1::Kind::Injected ? 0 : 2 + maxload) +
                  k_eff + 5;
  RunResult rr = run_sync(g, prog, cfg, cap, trace);

  CliqueRunResult result;
  result.stats = rr.stats;
  result.elected = broadcast_election;
  result.phase1_rounds =
      phase1.kind == CliquePhase1::Kind::Injected ? 0 : 2 + maxload;
  result.phase2_rounds = k_eff - 1;
  for (NodeId v = 1; v <= g.n(); ++v)
    if (rr.outputs[v].is_center) result.solution.centers.push_back(v);
  if (static_cast<int>(result.solution.centers.size()) != k_eff)
    throw SimError("clique run produced an inconsistent center set");
  result.solution.radius = coverage_radius(g, result.solution.centers);
  return result;
}

}  // namespace kcsim
