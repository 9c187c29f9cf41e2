#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kcsim/graph.hpp"

namespace kcsim {

struct BenchRun {
  std::string file;      // graph file; empty when generated
  std::string gen_kind;  // cycle | path | star | gnp | weighted-gnp
  int n = 0;
  double p = 0.3;
  Dist wmin = 1, wmax = 8;

  int k = 1;
  std::string algo;  // greedy | congest | clique | local

  double alpha = 1.0;  // stretch for greedy / clique inject
  std::uint64_t oracle_seed = 1;
  std::string eps = "1";         // local
  std::string phase1 = "exact";  // clique: exact | inject
};

struct BenchConfig {
  std::uint64_t seed = 1;
  std::vector<BenchRun> runs;
};

BenchConfig parse_bench_config(const std::string& json_text);
BenchConfig load_bench_config(const std::string& path);

struct BenchRow {
  int index = 0;
  std::string instance, algo, model, error;
  int n = 0, m = 0, k = 0;
  Dist radius = -1, opt = -1;
  double ratio = -1.0, bound = -1.0;
  bool bound_checked = false, bound_ok = true;
  long long rounds = -1;
  int max_message_bits = -1;
  double wallclock_ms = 0.0;  // volatile column, excluded from comparisons
};

struct BenchReport {
  std::string format_version = "1";
  std::vector<BenchRow> rows;
  std::vector<std::pair<std::string, double>> max_ratio_per_algo;
  bool any_violation = false;
  bool any_error = false;
};

// Rows run independently (jobs > 1 runs them on a small pool); output
// order always follows the config. deterministic zeroes the wallclock
// column so reports compare byte-for-byte.
BenchReport run_bench(const BenchConfig& cfg, int jobs = 1,
                      bool deterministic = false);

std::string bench_csv(const BenchReport& report);
std::string bench_json(const BenchReport& report);

}  // namespace kcsim
