#include "kcsim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace kcsim {

const char* model_name(Model m) {
  switch (m) {
    case Model::Local: return "LOCAL";
    case Model::Congest: return "CONGEST";
    case Model::Clique: return "CLIQUE";
  }
  return "?";
}

namespace {

int bits_for(std::int64_t max_value) {
  int bits = 0;
  std::uint64_t v = static_cast<std::uint64_t>(max_value);
  while (v > 0) {
    ++bits;
    v >>= 1;
  }
  return std::max(bits, 1);
}

}  // namespace

int EncodingContext::id_bits() const { return bits_for(n); }
int EncodingContext::dist_bits() const { return bits_for(dist_cap); }

EncodingContext EncodingContext::for_graph(const Graph& g, double stretch) {
  EncodingContext ctx;
  ctx.n = g.n();
  Dist w = g.max_weight();
  if (stretch > 1.0)
    w = static_cast<Dist>(std::ceil(stretch * static_cast<double>(w)));
  ctx.dist_cap = static_cast<Dist>(g.n()) * w;
  return ctx;
}

Message& Message::add_id(std::int64_t v) {
  fields.push_back({FieldKind::NodeId, v});
  return *this;
}
Message& Message::add_dist(std::int64_t v) {
  fields.push_back({FieldKind::Distance, v});
  return *this;
}
Message& Message::add_counter(std::int64_t v) {
  fields.push_back({FieldKind::Counter, v});
  return *this;
}
Message& Message::add_flag(bool v) {
  fields.push_back({FieldKind::Flag, v ? 1 : 0});
  return *this;
}

std::int64_t Message::at(std::size_t i, FieldKind expect) const {
  const Field& f = fields.at(i);
  if (f.kind != expect) throw EncodingError("unexpected field kind");
  return f.value;
}

int message_bits(const Message& msg, const EncodingContext& ctx) {
  constexpr int kTagBits = 2;
  int bits = 0;
  for (const Field& f : msg.fields) {
    std::int64_t cap;
    int payload;
    switch (f.kind) {
      case FieldKind::NodeId:
        cap = ctx.n;
        payload = ctx.id_bits();
        break;
      case FieldKind::Distance:
        cap = ctx.dist_cap;
        payload = ctx.dist_bits();
        break;
      case FieldKind::Counter:
        cap = (std::int64_t{1} << ctx.counter_bits()) - 1;
        payload = ctx.counter_bits();
        break;
      case FieldKind::Flag:
        cap = 1;
        payload = 1;
        break;
      default:
        throw EncodingError("unknown field kind");
    }
    if (f.value < 0 || f.value > cap)
      throw EncodingError("field value " + std::to_string(f.value) +
                          " out of range [0," + std::to_string(cap) + "]");
    bits += kTagBits + payload;
  }
  return bits;
}

RunResult run_sync(const Graph& g, const NodeProgram& prog,
                   const ModelConfig& cfg, int max_rounds,
                   const TraceSink& trace) {
  const int n = g.n();
  EncodingContext ctx = EncodingContext::for_graph(g);
  if (cfg.dist_cap_override > 0) ctx.dist_cap = cfg.dist_cap_override;
  const int budget = cfg.budget_bits(ctx);
  const bool enforce = cfg.model != Model::Local;

  std::vector<std::unique_ptr<NodeState>> states(static_cast<std::size_t>(n) + 1);
  for (NodeId v = 1; v <= n; ++v) {
    LocalView view;
    view.id = v;
    view.n = n;
    view.weighted = g.weighted();
    view.incident = g.neighbors(v);
    view.enc = ctx;
    states[v] = prog.init(view);
  }

  std::vector<std::vector<InMessage>> inbox(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<InMessage>> next(static_cast<std::size_t>(n) + 1);
  std::vector<char> halted(static_cast<std::size_t>(n) + 1, 0);
  int live = n;

  SimStats stats;
  Outbox out;

  for (int round = 1; live > 0; ++round) {
    if (round > max_rounds) throw NonTermination(max_rounds);
    RoundTrace rt;
    rt.round = round;
    RoundBits rb;

    for (NodeId v = 1; v <= n; ++v) {
      if (halted[v]) continue;
      out.clear();
      bool halt_now = prog.on_round(*states[v], inbox[v], out);
      for (const auto& [to, msg] : out.sent()) {
        bool legal = to >= 1 && to <= n && to != v;
        if (legal && cfg.model != Model::Clique) legal = g.has_edge(v, to);
        if (!legal) throw IllegalRecipient(round, v, to);
        int bits = message_bits(msg, ctx);
        if (enforce && bits > budget)
          throw BandwidthViolation(round, v, to, bits, budget);
        stats.total_messages += 1;
        stats.max_message_bits = std::max(stats.max_message_bits, bits);
        rb.messages += 1;
        rb.bits += bits;
        if (trace) rt.messages.push_back({v, to, bits});
        next[to].push_back({v, msg});
      }
      if (halt_now) {
        halted[v] = 1;
        --live;
        if (trace) rt.halted.push_back(v);
      }
    }

    for (NodeId v = 1; v <= n; ++v) {
      inbox[v] = std::move(next[v]);
      next[v].clear();
      if (halted[v]) inbox[v].clear();  // delivered, then discarded
    }
    stats.rounds = round;
    stats.per_round.push_back(rb);
    if (trace) trace(rt);
  }

  RunResult result;
  result.outputs.resize(static_cast<std::size_t>(n) + 1);
  for (NodeId v = 1; v <= n; ++v) result.outputs[v] = prog.output(*states[v]);
  result.stats = std::move(stats);
  return result;
}

std::vector<LabeledView> local_views(const Graph& g, Dist t) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  const int n = g.n();
  std::vector<LabeledView> views(static_cast<std::size_t>(n) + 1);
  for (NodeId v = 1; v <= n; ++v) {
    // bounded Dijkstra/BFS; does not require connectivity
    std::vector<Dist> dist(static_cast<std::size_t>(n) + 1, -1);
    using Item = std::pair<Dist, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[v] = 0;
    heap.push({0, v});
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (dist[u] != d) continue;
      for (const auto& [w_node, w_len] : g.neighbors(u)) {
        Dist nd = d + (g.weighted() ? w_len : 1);
        if (nd <= t && (dist[w_node] == -1 || nd < dist[w_node])) {
          dist[w_node] = nd;
          heap.push({nd, w_node});
        }
      }
    }
    LabeledView view;
    view.center = v;
    for (NodeId u = 1; u <= n; ++u)
      if (dist[u] >= 0) view.nodes.push_back(u);
    for (NodeId u : view.nodes)
      for (const auto& [w_node, w_len] : g.neighbors(u))
        if (w_node > u && dist[w_node] >= 0)
          view.edges.emplace_back(u, w_node, w_len);
    std::sort(view.edges.begin(), view.edges.end());
    views[v] = std::move(view);
  }
  return views;
}

}  // namespace kcsim
