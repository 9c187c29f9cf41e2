#pragma once

#include <stdexcept>
#include <string>

namespace kcsim {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse or validation failure in the graph text format, tagged with the
// 1-based input line.
struct FormatError : GraphError {
  FormatError(int line_no, const std::string& what)
      : GraphError("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  int line;
};

struct WorkLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EncodingError : SimError {
  using SimError::SimError;
};

struct BandwidthViolation : SimError {
  BandwidthViolation(int round_no, int from_id, int to_id, int bits_used,
                     int budget_bits)
      : SimError("bandwidth violation in round " + std::to_string(round_no) +
                 ": " + std::to_string(from_id) + " -> " +
                 std::to_string(to_id) + " is " + std::to_string(bits_used) +
                 " bits, budget " + std::to_string(budget_bits)),
        round(round_no),
        from(from_id),
        to(to_id),
        bits(bits_used),
        budget(budget_bits) {}
  int round, from, to, bits, budget;
};

struct IllegalRecipient : SimError {
  IllegalRecipient(int round_no, int from_id, int to_id)
      : SimError("illegal recipient in round " + std::to_string(round_no) +
                 ": " + std::to_string(from_id) + " -> " +
                 std::to_string(to_id)),
        round(round_no),
        from(from_id),
        to(to_id) {}
  int round, from, to;
};

struct NonTermination : SimError {
  explicit NonTermination(int max_rounds_hit)
      : SimError("simulation did not terminate within " +
                 std::to_string(max_rounds_hit) + " rounds"),
        max_rounds(max_rounds_hit) {}
  int max_rounds;
};

}  // namespace kcsim
