#include "kcsim/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "kcsim/algo_clique.hpp"
#include "kcsim/algo_congest.hpp"
#include "kcsim/algo_local.hpp"
#include "kcsim/errors.hpp"
#include "kcsim/gen.hpp"
#include "kcsim/io.hpp"
#include "kcsim/kcenter.hpp"
#include "kcsim/util.hpp"

namespace kcsim {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// Oracle feasibility: keep brute force in the sub-second range per row.
bool opt_feasible(int n, int k) {
  if (n > 64) return false;
  unsigned long long c = 1;
  int kk = std::min(k, n);
  kk = std::min(kk, n - kk);
  for (int i = 1; i <= kk; ++i) {
    c = c * static_cast<unsigned long long>(n - kk + i) /
        static_cast<unsigned long long>(i);
    if (c > 200000ULL) return false;
  }
  return true;
}

Graph materialize(const BenchRun& run, std::uint64_t row_seed,
                  std::string& instance) {
  if (!run.file.empty()) {
    instance = run.file;
    return load_graph_file(run.file);
  }
  std::ostringstream name;
  if (run.gen_kind == "cycle") {
    name << "cycle(n=" << run.n << ")";
    instance = name.str();
    return gen_cycle(run.n);
  }
  if (run.gen_kind == "path") {
    name << "path(n=" << run.n << ")";
    instance = name.str();
    return gen_path(run.n);
  }
  if (run.gen_kind == "star") {
    name << "star(n=" << run.n << ")";
    instance = name.str();
    return gen_star(run.n);
  }
  if (run.gen_kind == "gnp") {
    name << "gnp(n=" << run.n << ",p=" << fmt_double(run.p)
         << ",seed=" << row_seed << ")";
    instance = name.str();
    return gen_gnp(run.n, run.p, row_seed);
  }
  if (run.gen_kind == "weighted-gnp") {
    name << "weighted-gnp(n=" << run.n << ",p=" << fmt_double(run.p)
         << ",w=" << run.wmin << ".." << run.wmax << ",seed=" << row_seed
         << ")";
    instance = name.str();
    return gen_weighted_gnp(run.n, run.p, run.wmin, run.wmax, row_seed);
  }
  throw GraphError("unknown generator: " + run.gen_kind);
}

BenchRow run_row(const BenchConfig& cfg, int index) {
  const BenchRun& run = cfg.runs[static_cast<std::size_t>(index)];
  BenchRow row;
  row.index = index;
  row.algo = run.algo;
  row.k = run.k;
  auto started = std::chrono::steady_clock::now();
  try {
    std::uint64_t row_seed =
        detail::mix64(cfg.seed ^ (0x5151ULL + static_cast<std::uint64_t>(index)));
    Graph g = materialize(run, row_seed, row.instance);
    row.n = g.n();
    row.m = g.m();

    CenterSolution sol;
    if (run.algo == "greedy") {
      row.model = "centralized";
      DistanceSource ds = run.alpha > 1.0
                              ? make_stretch_oracle(g, run.alpha, run.oracle_seed)
                              : DistanceSource::exact(g);
      sol = greedy_gonzalez(g, ds, run.k, 1);
      row.bound = 2.0 * std::max(run.alpha, 1.0);
    } else if (run.algo == "congest") {
      row.model = "CONGEST";
      auto result = congest_kcenter(g, run.k);
      sol = result.solution;
      row.rounds = result.stats.rounds;
      row.max_message_bits = result.stats.max_message_bits;
      row.bound = 2.0;
    } else if (run.algo == "clique") {
      row.model = "CLIQUE";
      CliquePhase1 p1 = run.phase1 == "inject"
                            ? CliquePhase1::injected(make_stretch_oracle(
                                  g, run.alpha, run.oracle_seed))
                            : CliquePhase1::exact();
      auto result = clique_kcenter(g, run.k, p1);
      sol = result.solution;
      row.rounds = result.stats.rounds;
      row.max_message_bits = result.stats.max_message_bits;
      row.bound = run.phase1 == "inject" ? 2.0 * run.alpha : 2.0;
    } else if (run.algo == "local") {
      row.model = "LOCAL";
      Rational eps = parse_rational(run.eps);
      auto result = local_kcenter(g, run.k, eps);
      sol = result.solution;
      row.rounds = result.stats.rounds;
      row.max_message_bits = result.stats.max_message_bits;
      row.bound =
          (2.0 + boost::rational_cast<double>(eps)) * static_cast<double>(run.k);
    } else {
      throw std::invalid_argument("unknown algo: " + run.algo);
    }
    row.radius = sol.radius;

    if (opt_feasible(g.n(), run.k)) {
      row.opt = opt_k_bruteforce(g, run.k).radius;
      if (row.opt > 0) {
        row.ratio = static_cast<double>(row.radius) /
                    static_cast<double>(row.opt);
      } else {
        row.ratio = row.radius == 0 ? 1.0 : -1.0;
      }
      if (row.ratio >= 0) {
        row.bound_checked = true;
        row.bound_ok = row.ratio <= row.bound + 1e-12;
      }
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  auto elapsed = std::chrono::steady_clock::now() - started;
  row.wallclock_ms =
      std::chrono::duration<double, std::milli>(elapsed).count();
  return row;
}

}  // namespace

BenchConfig parse_bench_config(const std::string& json_text) {
  json j = json::parse(json_text);
  BenchConfig cfg;
  cfg.seed = j.value("seed", 1ULL);
  for (const auto& jr : j.at("runs")) {
    BenchRun run;
    if (jr.contains("file")) run.file = jr.at("file").get<std::string>();
    if (jr.contains("gen")) {
      const auto& g = jr.at("gen");
      run.gen_kind = g.at("kind").get<std::string>();
      run.n = g.value("n", 0);
      run.p = g.value("p", 0.3);
      run.wmin = g.value("wmin", 1);
      run.wmax = g.value("wmax", 8);
    }
    if (run.file.empty() == run.gen_kind.empty())
      throw std::invalid_argument("each run needs exactly one of file/gen");
    run.k = jr.value("k", 1);
    run.algo = jr.at("algo").get<std::string>();
    run.alpha = jr.value("alpha", 1.0);
    run.oracle_seed = jr.value("oracle_seed", 1ULL);
    run.eps = jr.value("eps", std::string("1"));
    run.phase1 = jr.value("phase1", std::string("exact"));
    cfg.runs.push_back(std::move(run));
  }
  return cfg;
}

BenchConfig load_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_bench_config(buf.str());
}

BenchReport run_bench(const BenchConfig& cfg, int jobs, bool deterministic) {
  BenchReport report;
  report.rows.resize(cfg.runs.size());
  const int total = static_cast<int>(cfg.runs.size());

  if (jobs <= 1) {
    for (int i = 0; i < total; ++i)
      report.rows[static_cast<std::size_t>(i)] = run_row(cfg, i);
  } else {
    std::atomic<int> cursor{0};
    auto worker = [&] {
      for (;;) {
        int i = cursor.fetch_add(1);
        if (i >= total) return;
        report.rows[static_cast<std::size_t>(i)] = run_row(cfg, i);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(jobs, total); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (BenchRow& row : report.rows) {
    if (deterministic) row.wallclock_ms = 0.0;
    if (!row.error.empty()) report.any_error = true;
    if (row.bound_checked && !row.bound_ok) report.any_violation = true;
    if (row.ratio >= 0) {
      auto it = std::find_if(report.max_ratio_per_algo.begin(),
                             report.max_ratio_per_algo.end(),
                             [&](const auto& p) { return p.first == row.algo; });
      if (it == report.max_ratio_per_algo.end())
        report.max_ratio_per_algo.emplace_back(row.algo, row.ratio);
      else
        it->second = std::max(it->second, row.ratio);
    }
  }
  std::sort(report.max_ratio_per_algo.begin(), report.max_ratio_per_algo.end());
  return report;
}

std::string bench_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "# kcsim-bench-csv-v" << report.format_version << "\n";
  out << "index,instance,algo,model,n,m,k,radius,opt,ratio,bound,bound_ok,"
         "rounds,max_message_bits,error,wallclock_ms\n";
  for (const BenchRow& r : report.rows) {
    out << r.index << ',' << r.instance << ',' << r.algo << ',' << r.model
        << ',' << r.n << ',' << r.m << ',' << r.k << ',';
    if (r.radius >= 0) out << r.radius;
    out << ',';
    if (r.opt >= 0) out << r.opt;
    out << ',';
    if (r.ratio >= 0) out << fmt_double(r.ratio);
    out << ',';
    if (r.bound >= 0) out << fmt_double(r.bound);
    out << ',' << (r.bound_checked ? (r.bound_ok ? "yes" : "VIOLATION") : "")
        << ',';
    if (r.rounds >= 0) out << r.rounds;
    out << ',';
    if (r.max_message_bits >= 0) out << r.max_message_bits;
    out << ',' << r.error << ',' << fmt_double(r.wallclock_ms) << "\n";
  }
  return out.str();
}

std::string bench_json(const BenchReport& report) {
  json j;
  j["format_version"] = report.format_version;
  j["any_violation"] = report.any_violation;
  j["any_error"] = report.any_error;
  json rows = json::array();
  for (const BenchRow& r : report.rows) {
    json row;
    row["index"] = r.index;
    row["instance"] = r.instance;
    row["algo"] = r.algo;
    row["model"] = r.model;
    row["n"] = r.n;
    row["m"] = r.m;
    row["k"] = r.k;
    row["radius"] = r.radius;
    row["opt"] = r.opt;
    if (r.ratio >= 0) row["ratio"] = fmt_double(r.ratio);
    if (r.bound >= 0) row["bound"] = fmt_double(r.bound);
    row["bound_checked"] = r.bound_checked;
    row["bound_ok"] = r.bound_ok;
    row["rounds"] = r.rounds;
    row["max_message_bits"] = r.max_message_bits;
    row["error"] = r.error;
    row["wallclock_ms"] = r.wallclock_ms;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  json agg = json::object();
  for (const auto& [algo, ratio] : report.max_ratio_per_algo)
    agg[algo] = fmt_double(ratio);
  j["max_ratio_per_algo"] = std::move(agg);
  return j.dump(2) + "\n";
}

}  // namespace kcsim
