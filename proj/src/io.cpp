#include "kcsim/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "kcsim/errors.hpp"

namespace kcsim {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& tok, int line_no) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw FormatError(line_no, "expected integer, got '" + tok + "'");
  }
}

}  // namespace

Graph load_graph(std::istream& in, bool require_connected) {
  std::string line;
  int line_no = 0;

  // header
  if (!std::getline(in, line)) throw FormatError(1, "missing header");
  ++line_no;
  auto head = tokens_of(line);
  if (head.size() != 3) throw FormatError(line_no, "header must be 'n m W'");
  long long n = parse_int(head[0], line_no);
  long long m = parse_int(head[1], line_no);
  long long w_flag = parse_int(head[2], line_no);
  if (n < 1) throw FormatError(line_no, "n must be >= 1");
  if (m < 0) throw FormatError(line_no, "m must be >= 0");
  if (w_flag != 0 && w_flag != 1)
    throw FormatError(line_no, "W must be 0 or 1");
  bool weighted = w_flag == 1;

  Graph g(static_cast<int>(n), weighted);
  long long read = 0;
  while (read < m) {
    if (!std::getline(in, line))
      throw FormatError(line_no + 1, "unexpected end of file, expected " +
                                         std::to_string(m) + " edges");
    ++line_no;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;  // blank lines between edges are tolerated
    std::size_t want = weighted ? 3 : 2;
    if (toks.size() != want)
      throw FormatError(line_no, weighted ? "expected 'u v w'"
                                          : "expected 'u v'");
    long long u = parse_int(toks[0], line_no);
    long long v = parse_int(toks[1], line_no);
    long long w = weighted ? parse_int(toks[2], line_no) : 1;
    try {
      g.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v), w);
    } catch (const GraphError& e) {
      throw FormatError(line_no, e.what());
    }
    ++read;
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!tokens_of(line).empty())
      throw FormatError(line_no, "trailing content after last edge");
  }
  if (require_connected && !g.connected())
    throw GraphError("graph is disconnected");
  return g;
}

Graph load_graph_file(const std::string& path, bool require_connected) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return load_graph(in, require_connected);
}

void save_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << ' ' << (g.weighted() ? 1 : 0) << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (g.weighted()) out << ' ' << e.w;
    out << '\n';
  }
}

void save_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot open " + path + " for writing");
  save_graph(out, g);
}

}  // namespace kcsim
