#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <tuple>
#include <vector>

#include "kcsim/errors.hpp"
#include "kcsim/graph.hpp"

namespace kcsim {

enum class Model { Local, Congest, Clique };

const char* model_name(Model m);

// Field widths of the canonical message encoding on a given instance.
// Every field is a 2-bit kind tag followed by a fixed-width payload:
//   NodeId   ceil(log2(n+1)) bits, values 0..n (0 is the null id)
//   Distance ceil(log2(dist_cap+1)) bits
//   Counter  2 * id bits (round numbers, sizes)
//   Flag     1 bit
struct EncodingContext {
  int n = 0;
  Dist dist_cap = 1;

  int id_bits() const;
  int dist_bits() const;
  int counter_bits() const { return 2 * id_bits(); }

  // dist_cap defaults to n * max edge weight; stretch widens it so that
  // approximate distances from an alpha-oracle stay encodable.
  static EncodingContext for_graph(const Graph& g, double stretch = 1.0);
};

enum class FieldKind : std::uint8_t { NodeId, Distance, Counter, Flag };

struct Field {
  FieldKind kind;
  std::int64_t value;
  bool operator==(const Field&) const = default;
};

struct Message {
  std::vector<Field> fields;

  Message& add_id(std::int64_t v);
  Message& add_dist(std::int64_t v);
  Message& add_counter(std::int64_t v);
  Message& add_flag(bool v);

  std::int64_t at(std::size_t i, FieldKind expect) const;
  std::size_t size() const { return fields.size(); }
  FieldKind kind(std::size_t i) const { return fields.at(i).kind; }
};

// Exact serialized size in bits; throws EncodingError on out-of-range
// values. An empty message is 0 bits.
int message_bits(const Message& msg, const EncodingContext& ctx);

struct ModelConfig {
  Model model = Model::Congest;
  // Bandwidth words per recipient per round (the constant inside the
  // O(log n) budget). Ignored under LOCAL.
  int bandwidth_words = 8;
  // 0 means: derive from the graph.
  Dist dist_cap_override = 0;

  int budget_bits(const EncodingContext& ctx) const {
    return bandwidth_words * ctx.id_bits();
  }
};

// What a node knows at startup: its id, its incident edges with weights,
// and the instance-level constants n and the encoding widths.
struct LocalView {
  NodeId id = 0;
  int n = 0;
  bool weighted = false;
  std::vector<std::pair<NodeId, Dist>> incident;  // ascending by neighbor
  EncodingContext enc;
};

struct NodeOutput {
  bool is_center = false;
  Dist learned_distance = -1;
  bool operator==(const NodeOutput&) const = default;
};

class NodeState {
 public:
  virtual ~NodeState() = default;
};

struct InMessage {
  NodeId from;
  Message payload;
};

class Outbox {
 public:
  void send(NodeId to, Message msg) { sent_.emplace_back(to, std::move(msg)); }
  const std::vector<std::pair<NodeId, Message>>& sent() const { return sent_; }
  void clear() { sent_.clear(); }

 private:
  std::vector<std::pair<NodeId, Message>> sent_;
};

// A deterministic per-node state machine. The engine instantiates one
// state per node, then steps all nodes once per synchronous round; a
// message sent in round r is in the recipient's inbox in round r+1.
class NodeProgram {
 public:
  virtual ~NodeProgram() = default;
  virtual std::unique_ptr<NodeState> init(const LocalView& view) const = 0;
  // Returns true when the node halts after this round. Halted nodes are
  // no longer stepped; late messages to them are delivered and discarded.
  virtual bool on_round(NodeState& state, const std::vector<InMessage>& inbox,
                        Outbox& out) const = 0;
  virtual NodeOutput output(const NodeState& state) const = 0;
};

struct RoundBits {
  int messages = 0;
  std::int64_t bits = 0;
  bool operator==(const RoundBits&) const = default;
};

struct SimStats {
  int rounds = 0;
  std::int64_t total_messages = 0;
  int max_message_bits = 0;
  std::vector<RoundBits> per_round;
  bool operator==(const SimStats&) const = default;
};

struct TraceMessage {
  NodeId from = 0, to = 0;
  int bits = 0;
};
struct RoundTrace {
  int round = 0;
  std::vector<TraceMessage> messages;
  std::vector<NodeId> halted;  // nodes that halted during this round
};
using TraceSink = std::function<void(const RoundTrace&)>;

struct RunResult {
  std::vector<NodeOutput> outputs;  // indexed 1..n
  SimStats stats;
};

// Runs prog until all nodes halt; throws NonTermination at max_rounds,
// BandwidthViolation / IllegalRecipient on model violations. Delivery is
// strictly next-round; nodes are stepped in id order, so runs are
// bit-reproducible.
RunResult run_sync(const Graph& g, const NodeProgram& prog,
                   const ModelConfig& cfg, int max_rounds,
                   const TraceSink& trace = nullptr);

// The induced labeled subgraph on the distance-t ball around a node,
// with original ids. Equality is exact (same ids, same edges).
struct LabeledView {
  NodeId center = 0;
  std::vector<NodeId> nodes;                            // ascending
  std::vector<std::tuple<NodeId, NodeId, Dist>> edges;  // u < v, ascending
  bool operator==(const LabeledView&) const = default;
};

// Views for every node, indexed 1..n.
std::vector<LabeledView> local_views(const Graph& g, Dist t);

}  // namespace kcsim
