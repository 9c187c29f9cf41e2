#pragma once

#include <iosfwd>
#include <string>

#include "kcsim/graph.hpp"

namespace kcsim {

// Text format: header line "n m W" (W=0 unweighted, W=1 weighted), then
// m lines "u v" or "u v w" with 1-based ids. Violations raise FormatError
// with the offending line number; disconnected graphs raise GraphError
// unless require_connected is false.
Graph load_graph(std::istream& in, bool require_connected = true);
Graph load_graph_file(const std::string& path, bool require_connected = true);

void save_graph(std::ostream& out, const Graph& g);
void save_graph_file(const std::string& path, const Graph& g);

}  // namespace kcsim
