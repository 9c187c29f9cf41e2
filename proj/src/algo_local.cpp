#include "kcsim/algo_local.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "kcsim/gen.hpp"

namespace kcsim {

namespace {

// Wire formats (LOCAL, so sizes are unbounded but still accounted):
//   token   [dist depth][id parent]           BFS join announcement
//   report  [flag covered]                    child -> parent
//   edges   [counter count]([id][id][dist])*  subtree aggregation, -> parent
//   result  [flag 1][counter count][id]*      centers, parent -> children
//   result  [flag 0]                          sole-center branch

struct LocalState : NodeState {
  LocalView view;
  int k = 1;
  long long depth_budget = 0;  // L = ceil(t*k)
  long long round = 0;

  bool joined = false;
  Dist depth = -1;
  NodeId parent = 0;
  std::map<NodeId, NodeId> nbr_parent;  // joined neighbor -> its parent
  std::map<NodeId, bool> reports;       // child -> covered
  bool report_sent = false;

  std::set<std::tuple<NodeId, NodeId, Dist>> known_edges;

  bool have_result = false;
  bool aggregate_branch = false;
  std::vector<NodeId> centers;

  bool is_center = false;
};

class LocalKCenterProgram : public NodeProgram {
 public:
  LocalKCenterProgram(int k, long long depth_budget)
      : k_(k), depth_budget_(depth_budget) {}

  std::unique_ptr<NodeState> init(const LocalView& view) const override {
    auto s = std::make_unique<LocalState>();
    s->view = view;
    s->k = k_;
    s->depth_budget = depth_budget_;
    for (const auto& [nbr, w] : view.incident)
      s->known_edges.insert(
          {std::min(view.id, nbr), std::max(view.id, nbr), w});
    return s;
  }

  bool on_round(NodeState& state, const std::vector<InMessage>& inbox,
                Outbox& out) const override {
    auto& s = static_cast<LocalState&>(state);
    s.round += 1;
    const long long L = s.depth_budget;

    // ---- ingest ----
    bool joined_now = false;
    for (const InMessage& in : inbox) {
      const Message& m = in.payload;
      if (m.size() == 2 && m.kind(0) == FieldKind::Distance) {
        Dist d = m.at(0, FieldKind::Distance);
        s.nbr_parent[in.from] =
            static_cast<NodeId>(m.at(1, FieldKind::NodeId));
        if (!s.joined && d < L) {
          // inbox is sender-ordered; same-round tokens carry equal depth
          s.joined = true;
          joined_now = true;
          s.depth = d + 1;
          s.parent = in.from;
        }
      } else if (m.kind(0) == FieldKind::Flag && m.size() == 1) {
        if (in.from == s.parent) {
          apply_result(s, false, {}, out);  // sole-center branch
          return true;
        }
        s.reports[in.from] = m.at(0, FieldKind::Flag) != 0;
      } else if (m.kind(0) == FieldKind::Flag) {
        std::vector<NodeId> centers;
        auto count = m.at(1, FieldKind::Counter);
        for (std::int64_t i = 0; i < count; ++i)
          centers.push_back(
              static_cast<NodeId>(m.at(2 + static_cast<std::size_t>(i),
                                       FieldKind::NodeId)));
        apply_result(s, true, centers, out);
        return true;
      } else if (m.kind(0) == FieldKind::Counter) {
        auto count = m.at(0, FieldKind::Counter);
        for (std::int64_t i = 0; i < count; ++i) {
          std::size_t base = 1 + 3 * static_cast<std::size_t>(i);
          s.known_edges.insert({static_cast<NodeId>(m.at(base, FieldKind::NodeId)),
                                static_cast<NodeId>(m.at(base + 1, FieldKind::NodeId)),
                                m.at(base + 2, FieldKind::Distance)});
        }
      }
    }

    // ---- flood ----
    if (s.round == 1 && s.view.id == 1) {
      s.joined = true;
      joined_now = true;
      s.depth = 0;
      s.parent = 0;
    }
    if (joined_now) {
      Message token;
      token.add_dist(s.depth).add_id(s.parent);
      for (const auto& [nbr, w] : s.view.incident) {
        (void)w;
        out.send(nbr, token);
      }
    }

    // nodes the BFS never reached learn the branch from that fact alone
    if (s.round == L + 2 && !s.joined) return true;

    if (s.joined && s.round >= L + 2) {
      // completeness report, once all children reported
      if (!s.report_sent && s.view.id != 1) {
        bool ready = true, covered = all_neighbors_joined(s);
        for (NodeId child : children(s)) {
          auto it = s.reports.find(child);
          if (it == s.reports.end()) ready = false;
          else covered = covered && it->second;
        }
        if (ready) {
          Message rep;
          rep.add_flag(covered);
          out.send(s.parent, rep);
          s.report_sent = true;
        }
      }
      // aggregation toward the root (idempotent resend of everything known)
      if (s.view.id != 1 && s.round <= 2 * L + 1) {
        Message up;
        up.add_counter(static_cast<std::int64_t>(s.known_edges.size()));
        for (const auto& [u, v, w] : s.known_edges)
          up.add_id(u).add_id(v).add_dist(w);
        out.send(s.parent, up);
      }
    }

    // root decision round
    if (s.view.id == 1 && s.round == 2 * L + 2) {
      bool covered = s.joined && all_neighbors_joined(s);
      for (NodeId child : children(s)) {
        auto it = s.reports.find(child);
        covered = covered && it != s.reports.end() && it->second;
      }
      if (covered) {
        Graph agg(s.view.n, s.view.weighted);
        for (const auto& [u, v, w] : s.known_edges) agg.add_edge(u, v, w);
        CenterSolution sol =
            greedy_gonzalez(agg, DistanceSource::exact(agg), s.k, 1);
        apply_result(s, true, sol.centers, out);
      } else {
        apply_result(s, false, {}, out);
      }
      return true;
    }
    return false;
  }

  NodeOutput output(const NodeState& state) const override {
    const auto& s = static_cast<const LocalState&>(state);
    return {s.is_center, s.depth};
  }

 private:
  static bool all_neighbors_joined(const LocalState& s) {
    for (const auto& [nbr, w] : s.view.incident) {
      (void)w;
      if (!s.nbr_parent.count(nbr)) return false;
    }
    return true;
  }

  static std::vector<NodeId> children(const LocalState& s) {
    std::vector<NodeId> out;
    for (const auto& [nbr, parent] : s.nbr_parent)
      if (parent == s.view.id) out.push_back(nbr);
    return out;
  }

  void apply_result(LocalState& s, bool aggregate,
                    const std::vector<NodeId>& centers, Outbox& out) const {
    s.have_result = true;
    s.aggregate_branch = aggregate;
    s.centers = centers;
    if (aggregate) {
      s.is_center =
          std::find(centers.begin(), centers.end(), s.view.id) != centers.end();
      Message res;
      res.add_flag(true).add_counter(static_cast<std::int64_t>(centers.size()));
      for (NodeId c : centers) res.add_id(c);
      for (NodeId child : children(s)) out.send(child, res);
    } else {
      s.is_center = s.view.id == 1;
      Message res;
      res.add_flag(false);
      for (NodeId child : children(s)) out.send(child, res);
    }
  }

  int k_;
  long long depth_budget_;
};

}  // namespace

LocalRunResult local_kcenter(const Graph& g, int k, const Rational& eps) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (!g.connected()) throw GraphError("graph is disconnected");

  const Rational t = Rational(2) + Rational(4) / eps;
  const long long depth = ceil_to_int(t * k);

  LocalKCenterProgram prog(k, depth);
  ModelConfig cfg;
  cfg.model = Model::Local;
  const int cap = static_cast<int>(4 * depth + 12);
  RunResult rr = run_sync(g, prog, cfg, cap);

  LocalRunResult result;
  result.stats = rr.stats;
  result.bfs_depth = depth;
  result.aggregated = eccentricity(g, 1) <= depth;
  for (NodeId v = 1; v <= g.n(); ++v)
    if (rr.outputs[v].is_center) result.solution.centers.push_back(v);
  if (!result.aggregated && result.solution.centers != std::vector<NodeId>{1})
    throw SimError("sole-center branch produced an unexpected center set");
  if (result.solution.centers.empty())
    throw SimError("local run produced no centers");
  result.solution.radius = coverage_radius(g, result.solution.centers);
  return result;
}

ViewAlgorithm view_algorithm_by_name(const std::string& name, int t) {
  ViewAlgorithm alg;
  alg.name = name;
  alg.t = t;
  if (name == "spread") {
    alg.beta = 1.0;
    alg.decide = [](const LabeledView& view, int k, int n) {
      int step = (n + k - 1) / k;
      return (view.center - 1) % step == 0;
    };
  } else if (name == "spread-double") {
    alg.beta = 2.0;
    alg.decide = [](const LabeledView& view, int k, int n) {
      int step = std::max(1, (n + 2 * k - 1) / (2 * k));
      return (view.center - 1) % step == 0;
    };
  } else if (name == "prefix") {
    alg.beta = 1.0;
    alg.decide = [](const LabeledView& view, int k, int n) {
      (void)n;
      return view.center <= k;
    };
  } else {
    throw std::invalid_argument("unknown view algorithm: " + name);
  }
  return alg;
}

std::vector<std::string> view_algorithm_names() {
  return {"spread", "spread-double", "prefix"};
}

RearrangementReport build_rearranged_cycle(const ViewAlgorithm& alg, int n,
                                           int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (alg.t < 1) throw std::invalid_argument("t must be >= 1");
  if (alg.beta < 1.0) throw std::invalid_argument("beta must be >= 1");
  const long long t = alg.t;
  if (static_cast<double>(n) <= 2.0 * alg.beta * k * alg.t)
    throw std::invalid_argument("need n > 2*beta*k*t");

  RearrangementReport rep;
  rep.n = n;
  rep.k = k;
  rep.t = alg.t;
  rep.beta = alg.beta;
  rep.alg = alg.name;

  const Graph cycle = gen_cycle(n);
  const auto views = local_views(cycle, t);
  std::vector<NodeId> centers;
  for (NodeId v = 1; v <= n; ++v)
    if (alg.decide(views[v], k, n)) centers.push_back(v);
  if (centers.empty())
    throw std::runtime_error("view algorithm selected no centers");
  if (static_cast<double>(centers.size()) > alg.beta * k)
    throw std::runtime_error("view algorithm exceeded its declared beta*k");
  rep.centers_original = centers;
  const int kp = static_cast<int>(centers.size());
  rep.k_prime = kp;

  // clockwise gap from c_i to its successor
  auto gap = [&](int i) {
    return i + 1 < kp ? static_cast<long long>(centers[i + 1]) - centers[i]
                      : static_cast<long long>(n) + centers[0] - centers[i];
  };
  int istar = -1;
  for (int i = 0; i < kp; ++i)
    if (gap(i) > 2 * t) {
      istar = i;
      break;
    }
  if (istar < 0) throw std::runtime_error("no center gap exceeds 2t");
  rep.i_star = istar + 1;

  // segment bounds, wrap-around handled by raw positions
  std::vector<long long> b(kp), e(kp);
  for (int i = 0; i < kp; ++i) {
    long long c = centers[i];
    e[i] = i + 1 < kp ? std::min(c + t, static_cast<long long>(centers[i + 1]) - 1)
                      : std::min(c + t, static_cast<long long>(n) + centers[0] - 1);
  }
  for (int i = 0; i < kp; ++i) {
    long long c = centers[i];
    b[i] = i == 0 ? std::max(c - t, e[kp - 1] + 1 - n) : std::max(c - t, e[i - 1] + 1);
  }
  auto wrap = [n](long long pos) {
    return static_cast<NodeId>(((pos - 1) % n + n) % n + 1);
  };

  std::vector<char> in_segment(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<NodeId>> seg_nodes(kp);
  for (int i = 0; i < kp; ++i) {
    rep.segments.emplace_back(b[i], e[i]);
    for (long long pos = b[i]; pos <= e[i]; ++pos) {
      NodeId v = wrap(pos);
      seg_nodes[i].push_back(v);
      in_segment[v] = 1;
    }
    rep.max_segment_len =
        std::max(rep.max_segment_len, static_cast<int>(seg_nodes[i].size()));
  }

  // C' = S_{i*+1} ... S_{k'}, S_1 ... S_{i*}, then the leftovers clockwise
  std::vector<NodeId> order;
  for (int step = 1; step <= kp; ++step)
    for (NodeId v : seg_nodes[(istar + step) % kp]) order.push_back(v);
  for (long long off = 1; off <= n; ++off) {
    NodeId v = wrap(e[istar] + off);
    if (!in_segment[v]) order.push_back(v);
  }
  if (static_cast<int>(order.size()) != n)
    throw std::runtime_error("segment overlap while rearranging");
  rep.rearranged = order;
  rep.leftover_count = n;
  for (int i = 0; i < kp; ++i)
    rep.leftover_count -= static_cast<int>(seg_nodes[i].size());

  Graph cprime(n, false);
  for (int i = 0; i + 1 < n; ++i) cprime.add_edge(order[i], order[i + 1]);
  cprime.add_edge(order[n - 1], order[0]);

  const auto views2 = local_views(cprime, t);
  for (NodeId v = 1; v <= n; ++v)
    if (alg.decide(views2[v], k, n)) rep.centers_rearranged.push_back(v);
  if (rep.centers_rearranged.empty())
    throw std::runtime_error("view algorithm selected no centers on C'");

  rep.views_identical = true;
  for (NodeId c : centers)
    if (!(views[c] == views2[c])) rep.views_identical = false;

  rep.radius_rearranged = coverage_radius(cprime, rep.centers_rearranged);
  if (n <= 24) {
    rep.opt = opt_k_bruteforce(cprime, k).radius;
    rep.opt_exact = true;
  } else {
    rep.opt = opt_k_cycle(n, k);
    rep.opt_exact = false;
  }
  rep.ratio = static_cast<double>(rep.radius_rearranged) /
              static_cast<double>(rep.opt);
  rep.lower_bound =
      k - (static_cast<double>(k) * k +
           k * (alg.beta * k - 1) * (2.0 * t + 1)) /
              (static_cast<double>(n) + k);

  if (rep.leftover_count > 0) {
    std::vector<std::vector<Dist>> from_centers;
    for (NodeId c : rep.centers_rearranged)
      from_centers.push_back(sssp(cprime, c));
    rep.farthest_leftover = 0;
    for (NodeId v = 1; v <= n; ++v) {
      if (in_segment[v]) continue;
      Dist nearest = std::numeric_limits<Dist>::max();
      for (const auto& row : from_centers) nearest = std::min(nearest, row[v]);
      rep.farthest_leftover = std::max(rep.farthest_leftover, nearest);
    }
  }
  return rep;
}

}  // namespace kcsim
