#include "kcsim/algo_congest.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "kcsim/distances.hpp"

namespace kcsim {

namespace {

// Wire formats (no explicit type tag; the field signature plus the phase
// schedule identifies each kind):
//   announce  [id src][dist d][id parent]   adoption of a flood
//   done      [id src][dist subtree_depth]  pre-schedule only
//   schedule  [dist Dprime][counter T0]
//   wave      [id src][dist d]              multi-source BFS, post-T0
//   best      [dist d][id holder]           farthest-node aggregation

struct CongestState : NodeState {
  LocalView view;
  int k_eff = 1;
  long long round = 0;

  // election
  NodeId best_src = 0;
  Dist best_dist = 0;
  NodeId best_parent = 0;  // 0 = none
  std::map<NodeId, std::pair<NodeId, NodeId>> nbr_ann;  // nbr -> (src, parent)
  std::map<NodeId, Dist> done_from;                     // child -> depth
  bool done_sent = false;

  bool have_schedule = false;
  Dist dprime = 0;
  long long t0 = 0;

  // greedy iterations
  bool in_set = false;
  Dist dist_to_set = -1;
  Dist agg_dist = -1;
  NodeId agg_id = 0;

  bool finished = false;
};

class CongestProgram : public NodeProgram {
 public:
  explicit CongestProgram(int k) : k_(k) {}

  std::unique_ptr<NodeState> init(const LocalView& view) const override {
    auto s = std::make_unique<CongestState>();
    s->view = view;
    s->k_eff = std::min(k_, view.n);
    return s;
  }

  bool on_round(NodeState& state, const std::vector<InMessage>& inbox,
                Outbox& out) const override {
    auto& s = static_cast<CongestState&>(state);
    s.round += 1;

    bool adopted = false;
    if (s.round == 1) {  // start a flood from every node
      s.best_src = s.view.id;
      s.best_dist = 0;
      s.best_parent = 0;
      adopted = true;
    }

    // ---- ingest ----
    std::vector<std::pair<Dist, NodeId>> waves;  // (sender dist, src)
    for (const InMessage& in : inbox) {
      const Message& m = in.payload;
      if (m.size() == 3 && m.kind(0) == FieldKind::NodeId) {
        // announce
        NodeId src = static_cast<NodeId>(m.at(0, FieldKind::NodeId));
        Dist d = m.at(1, FieldKind::Distance);
        NodeId parent = static_cast<NodeId>(m.at(2, FieldKind::NodeId));
        s.nbr_ann[in.from] = {src, parent};
        // Smallest source wins. The inbox is sender-ordered, so among
        // equal same-round announcements the smallest sender becomes the
        // parent.
        if (src < s.best_src) {
          s.best_src = src;
          s.best_dist = d + 1;
          s.best_parent = in.from;
          s.done_sent = false;
          s.done_from.clear();
          adopted = true;
        }
      } else if (m.size() == 2 && m.kind(0) == FieldKind::NodeId) {
        if (!s.have_schedule || s.round <= s.t0) {
          // done report from a believed child
          NodeId src = static_cast<NodeId>(m.at(0, FieldKind::NodeId));
          Dist depth = m.at(1, FieldKind::Distance);
          if (src == s.best_src) s.done_from[in.from] = depth;
        } else {
          waves.emplace_back(m.at(1, FieldKind::Distance),
                             static_cast<NodeId>(m.at(0, FieldKind::NodeId)));
        }
      } else if (m.size() == 2 && m.kind(0) == FieldKind::Distance &&
                 m.kind(1) == FieldKind::Counter) {
        s.dprime = m.at(0, FieldKind::Distance);
        s.t0 = m.at(1, FieldKind::Counter);
        s.have_schedule = true;
        // forward down the tree
        for (NodeId child : children(s)) {
          Message fwd;
          fwd.add_dist(s.dprime).add_counter(s.t0);
          out.send(child, fwd);
        }
      } else if (m.size() == 2 && m.kind(0) == FieldKind::Distance &&
                 m.kind(1) == FieldKind::NodeId) {
        Dist d = m.at(0, FieldKind::Distance);
        NodeId who = static_cast<NodeId>(m.at(1, FieldKind::NodeId));
        if (d > s.agg_dist || (d == s.agg_dist && who < s.agg_id)) {
          s.agg_dist = d;
          s.agg_id = who;
        }
      }
    }

    // ---- election actions ----
    if (adopted) {
      Message ann;
      ann.add_id(s.best_src).add_dist(s.best_dist).add_id(s.best_parent);
      for (const auto& [nbr, w] : s.view.incident) {
        (void)w;
        out.send(nbr, ann);
      }
    }
    if (!s.have_schedule && !s.done_sent) maybe_complete(s, out);

    // ---- greedy iterations ----
    if (s.have_schedule && s.round >= s.t0) {
      const long long iter_len = 4 * static_cast<long long>(s.dprime) + 1;
      const long long off =
          s.k_eff == 1 ? 0 : (s.round - s.t0) % iter_len;
      const long long q = s.k_eff == 1 ? 0 : (s.round - s.t0) / iter_len;

      if (off == 0) {
        if (q > 0 && s.agg_id == s.view.id) s.in_set = true;
        if (q == k_iterations(s)) {
          // all centers chosen
          if (s.k_eff == 1) s.dist_to_set = s.in_set ? 0 : s.best_dist;
          s.finished = true;
          return true;
        }
        start_bfs(s, out);
      } else if (off <= 2 * s.dprime) {
        if (s.dist_to_set < 0 && !waves.empty()) {
          std::sort(waves.begin(), waves.end(),
                    [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first < b.first
                                                : a.second < b.second;
                    });
          s.dist_to_set = waves.front().first + 1;
          NodeId joined_src = waves.front().second;
          if (off < 2 * s.dprime) {
            Message wave;
            wave.add_id(joined_src).add_dist(s.dist_to_set);
            for (const auto& [nbr, w] : s.view.incident) {
              (void)w;
              out.send(nbr, wave);
            }
          }
        }
      } else {  // aggregation window
        if (off == 2 * s.dprime + 1) {
          s.agg_dist = s.dist_to_set;
          s.agg_id = s.view.id;
        }
        Message bst;
        bst.add_dist(s.agg_dist).add_id(s.agg_id);
        for (const auto& [nbr, w] : s.view.incident) {
          (void)w;
          out.send(nbr, bst);
        }
      }
    }
    return false;
  }

  NodeOutput output(const NodeState& state) const override {
    const auto& s = static_cast<const CongestState&>(state);
    NodeOutput o;
    o.is_center = s.in_set;
    o.learned_distance = s.in_set ? 0 : s.dist_to_set;
    return o;
  }

 private:
  static int k_iterations(const CongestState& s) { return s.k_eff - 1; }

  static std::vector<NodeId> children(const CongestState& s) {
    std::vector<NodeId> out;
    for (const auto& [nbr, ann] : s.nbr_ann)
      if (ann.first == s.best_src && ann.second == s.view.id)
        out.push_back(nbr);
    return out;
  }

  // Leaf-to-root termination report; the root of the surviving flood
  // learns it is v_min and fixes the phase schedule.
  void maybe_complete(CongestState& s, Outbox& out) const {
    for (const auto& [nbr, w] : s.view.incident) {
      (void)w;
      auto it = s.nbr_ann.find(nbr);
      if (it == s.nbr_ann.end() || it->second.first != s.best_src) return;
    }
    Dist depth = s.best_dist;
    for (NodeId child : children(s)) {
      auto it = s.done_from.find(child);
      if (it == s.done_from.end()) return;
      depth = std::max(depth, it->second);
    }
    if (s.best_src == s.view.id) {
      s.dprime = depth;
      s.t0 = s.round + depth + 1;
      s.have_schedule = true;
      s.in_set = true;
      Message sched;
      sched.add_dist(s.dprime).add_counter(s.t0);
      for (NodeId child : children(s)) out.send(child, sched);
    } else {
      Message done;
      done.add_id(s.best_src).add_dist(depth);
      out.send(s.best_parent, done);
      s.done_sent = true;
    }
  }

  void start_bfs(CongestState& s, Outbox& out) const {
    s.dist_to_set = s.in_set ? 0 : -1;
    s.agg_dist = -1;
    s.agg_id = 0;
    if (s.in_set) {
      Message wave;
      wave.add_id(s.view.id).add_dist(0);
      for (const auto& [nbr, w] : s.view.incident) {
        (void)w;
        out.send(nbr, wave);
      }
    }
  }

  int k_;
};

}  // namespace

CongestRunResult congest_kcenter(const Graph& g, int k, const TraceSink& trace,
                                 int bandwidth_words) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (g.weighted())
    throw std::invalid_argument("congest_kcenter expects an unweighted graph");
  if (!g.connected()) throw GraphError("graph is disconnected");

  CongestProgram prog(k);
  ModelConfig cfg;
  cfg.model = Model::Congest;
  cfg.bandwidth_words = bandwidth_words;
  const int cap = 10 * k * g.n() + 50;
  RunResult rr = run_sync(g, prog, cfg, cap, trace);

  CongestRunResult result;
  result.stats = rr.stats;
  result.dist_to_set.assign(static_cast<std::size_t>(g.n()) + 1, -1);
  for (NodeId v = 1; v <= g.n(); ++v) {
    if (rr.outputs[v].is_center) result.solution.centers.push_back(v);
    result.dist_to_set[v] = rr.outputs[v].learned_distance;
  }
  if (static_cast<int>(result.solution.centers.size()) != std::min(k, g.n()))
    throw SimError("congest run produced an inconsistent center set");
  result.solution.radius = coverage_radius(g, result.solution.centers);
  return result;
}

}  // namespace kcsim
