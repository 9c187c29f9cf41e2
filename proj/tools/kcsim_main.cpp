#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "kcsim/algo_clique.hpp"
#include "kcsim/algo_congest.hpp"
#include "kcsim/algo_local.hpp"
#include "kcsim/bench.hpp"
#include "kcsim/errors.hpp"
#include "kcsim/gadgets.hpp"
#include "kcsim/gen.hpp"
#include "kcsim/io.hpp"
#include "kcsim/kcenter.hpp"
#include "kcsim/util.hpp"

namespace {

using nlohmann::json;
using namespace kcsim;

constexpr const char* kToolVersion = "1.0.0";
constexpr const char* kGraphFormat = "graph-v1";
constexpr const char* kBenchCsvFormat = "kcsim-bench-csv-v1";
constexpr const char* kTraceFormat = "trace-v1";

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

void attach_oracle(json& out, const Graph& g, int k, Dist radius) {
  if (!opt_feasible(g.n(), k)) return;
  Dist opt = opt_k_bruteforce(g, k).radius;
  out["opt"] = opt;
  if (opt > 0)
    out["ratio"] = static_cast<double>(radius) / static_cast<double>(opt);
  else if (radius == 0)
    out["ratio"] = 1.0;
}

// JSON-lines trace: {round, messages:[{from,to,bits}], halted:[ids]}
TraceSink make_trace_sink(std::ofstream& stream) {
  return [&stream](const RoundTrace& rt) {
    json rec;
    rec["round"] = rt.round;
    json msgs = json::array();
    for (const auto& m : rt.messages)
      msgs.push_back({{"from", m.from}, {"to", m.to}, {"bits", m.bits}});
    rec["messages"] = std::move(msgs);
    rec["halted"] = rt.halted;
    stream << rec.dump() << "\n";
  };
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << std::endl;
  } else {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
  }
}

json stats_json(const SimStats& stats) {
  json j;
  j["rounds"] = stats.rounds;
  j["total_messages"] = stats.total_messages;
  j["max_message_bits"] = stats.max_message_bits;
  return j;
}

int cmd_gen(const std::string& kind, int n, double p, Dist wmin, Dist wmax,
            std::uint64_t seed, const std::string& out_path) {
  Graph g = [&] {
    if (kind == "cycle") return gen_cycle(n);
    if (kind == "path") return gen_path(n);
    if (kind == "star") return gen_star(n);
    if (kind == "gnp") return gen_gnp(n, p, seed);
    if (kind == "weighted-gnp") return gen_weighted_gnp(n, p, wmin, wmax, seed);
    throw GraphError("unknown kind: " + kind);
  }();
  if (out_path.empty() || out_path == "-")
    save_graph(std::cout, g);
  else
    save_graph_file(out_path, g);
  return 0;
}

Graph load_or_cycle(const std::string& graph_path, int n) {
  if (!graph_path.empty()) return load_graph_file(graph_path);
  if (n > 0) return gen_cycle(n);
  throw GraphError("need --graph or --n");
}

int cmd_local_run(const std::string& graph_path, int n, int k,
                  const std::string& eps_text, const std::string& json_path) {
  Graph g = load_or_cycle(graph_path, n);
  Rational eps = parse_rational(eps_text);
  LocalRunResult result = local_kcenter(g, k, eps);
  json out;
  out["n"] = g.n();
  out["k"] = k;
  out["eps"] = eps_text;
  out["bfs_depth"] = result.bfs_depth;
  out["branch"] = result.aggregated ? "aggregate" : "sole-center";
  out["centers"] = result.solution.centers;
  out["radius"] = result.solution.radius;
  out["stats"] = stats_json(result.stats);
  out["bound"] =
      (2.0 + boost::rational_cast<double>(eps)) * static_cast<double>(k);
  attach_oracle(out, g, k, result.solution.radius);
  emit(out, json_path);
  return 0;
}

int cmd_local_adversary(int n, int k, int t, double beta,
                        const std::string& alg_name,
                        const std::string& json_path) {
  ViewAlgorithm alg = view_algorithm_by_name(alg_name, t);
  if (beta > 0) alg.beta = beta;
  RearrangementReport rep = build_rearranged_cycle(alg, n, k);
  json out;
  out["n"] = rep.n;
  out["k"] = rep.k;
  out["t"] = rep.t;
  out["beta"] = rep.beta;
  out["alg"] = rep.alg;
  out["k_prime"] = rep.k_prime;
  out["i_star"] = rep.i_star;
  json segs = json::array();
  for (const auto& [b, e] : rep.segments) segs.push_back({{"b", b}, {"e", e}});
  out["segments"] = std::move(segs);
  out["max_segment_len"] = rep.max_segment_len;
  out["rearranged_cycle"] = rep.rearranged;
  out["centers_original"] = rep.centers_original;
  out["centers_rearranged"] = rep.centers_rearranged;
  out["views_identical"] = rep.views_identical;
  out["radius_rearranged"] = rep.radius_rearranged;
  out["opt"] = rep.opt;
  out["opt_source"] = rep.opt_exact ? "bruteforce" : "cycle-formula";
  out["ratio"] = rep.ratio;
  out["lower_bound"] = rep.lower_bound;
  out["leftover_count"] = rep.leftover_count;
  out["farthest_leftover"] = rep.farthest_leftover;
  emit(out, json_path);
  return rep.ratio + 1e-9 >= rep.lower_bound && rep.views_identical ? 0 : 1;
}

int cmd_congest_run(const std::string& graph_path, int k,
                    const std::string& trace_path,
                    const std::string& json_path) {
  Graph g = load_graph_file(graph_path);
  std::ofstream trace_stream;
  TraceSink sink;
  if (!trace_path.empty()) {
    trace_stream.open(trace_path);
    sink = make_trace_sink(trace_stream);
  }
  CongestRunResult result = congest_kcenter(g, k, sink);
  json out;
  out["n"] = g.n();
  out["k"] = k;
  out["centers"] = result.solution.centers;
  out["radius"] = result.solution.radius;
  out["stats"] = stats_json(result.stats);
  Dist d = diameter(g);
  out["diameter"] = d;
  out["kD_bound"] = 10 * k * std::max<Dist>(d, 1);
  out["kD_bound_ok"] = result.stats.rounds <= 10 * k * std::max<Dist>(d, 1);
  attach_oracle(out, g, k, result.solution.radius);
  emit(out, json_path);
  return 0;
}

int cmd_clique_run(const std::string& graph_path, int k,
                   const std::string& phase1_text, bool elect,
                   const std::string& trace_path,
                   const std::string& json_path) {
  Graph g = load_graph_file(graph_path);
  CliquePhase1 phase1 = CliquePhase1::exact();
  double alpha = 1.0;
  if (phase1_text != "exact") {
    if (phase1_text.rfind("inject:", 0) != 0)
      throw std::invalid_argument("--phase1 must be exact or inject:ALPHA:SEED");
    auto rest = phase1_text.substr(7);
    auto colon = rest.find(':');
    alpha = std::stod(rest.substr(0, colon));
    std::uint64_t seed =
        colon == std::string::npos ? 1 : std::stoull(rest.substr(colon + 1));
    phase1 = CliquePhase1::injected(make_stretch_oracle(g, alpha, seed));
  }
  std::ofstream trace_stream;
  TraceSink sink;
  if (!trace_path.empty()) {
    trace_stream.open(trace_path);
    sink = make_trace_sink(trace_stream);
  }
  CliqueRunResult result = clique_kcenter(g, k, phase1, elect, sink);
  json out;
  out["n"] = g.n();
  out["k"] = k;
  out["phase1"] = phase1_text;
  out["phase1_rounds"] = result.phase1_rounds;
  out["phase2_rounds"] = result.phase2_rounds;
  out["elected"] = result.elected;
  out["centers"] = result.solution.centers;
  out["radius"] = result.solution.radius;
  out["stats"] = stats_json(result.stats);
  out["bound"] = phase1_text == "exact" ? 2.0 : 2.0 * alpha;
  attach_oracle(out, g, k, result.solution.radius);
  emit(out, json_path);
  return 0;
}

json roles_json(const GadgetGraph& gg) {
  json roles;
  roles["ell"] = gg.ell;
  roles["copies"] = gg.copies;
  roles["x"] = [&] {
    std::string s;
    for (bool b : gg.x) s += b ? '1' : '0';
    return s;
  }();
  roles["y"] = [&] {
    std::string s;
    for (bool b : gg.y) s += b ? '1' : '0';
    return s;
  }();
  roles["wiring"] = {{"same_side_ft_edges", gg.opts.same_side_ft_edges},
                     {"c_path_via_cbar", gg.opts.c_path_via_cbar}};
  roles["w2"] = gg.w2;
  json copies = json::array();
  for (const auto& cp : gg.copy) {
    json c;
    c["a"] = cp.a;
    c["b"] = cp.b;
    c["fA"] = cp.fA;
    c["tA"] = cp.tA;
    c["fB"] = cp.fB;
    c["tB"] = cp.tB;
    c["cA"] = cp.cA;
    c["cbarA"] = cp.cbarA;
    c["cB"] = cp.cB;
    c["cbarB"] = cp.cbarB;
    c["w0"] = cp.w0;
    c["w1"] = cp.w1;
    copies.push_back(std::move(c));
  }
  roles["copy"] = std::move(copies);
  return roles;
}

int cmd_gadget_build(int ell, const std::string& x, const std::string& y,
                     int copies, const std::string& out_path,
                     const std::string& sidecar_path, bool cross_only,
                     bool c_path_literal) {
  auto inst = DisjointnessInstance::from_strings(x, y);
  if (inst.ell != ell) throw std::invalid_argument("--ell disagrees with bits");
  GadgetOptions opts;
  opts.same_side_ft_edges = !cross_only;
  opts.c_path_via_cbar = !c_path_literal;
  GadgetGraph gg = copies <= 1 ? build_disjointness_gadget(inst, opts)
                               : build_shared_hub_gadget(inst, copies, opts);
  if (out_path.empty() || out_path == "-")
    save_graph(std::cout, gg.g);
  else
    save_graph_file(out_path, gg.g);
  std::string sidecar = sidecar_path;
  if (sidecar.empty() && !out_path.empty() && out_path != "-")
    sidecar = out_path + ".roles.json";
  if (!sidecar.empty()) {
    std::ofstream side(sidecar);
    side << roles_json(gg).dump(2) << "\n";
  }
  return 0;
}

int cmd_gadget_verify(int ell, bool exhaustive, const std::string& x,
                      const std::string& y, int claim2_k,
                      const std::string& json_path) {
  json out;
  bool all_ok = true;
  auto verify_pair = [&](const DisjointnessInstance& inst) {
    json rec;
    rec["x"] = inst.x_string();
    rec["y"] = inst.y_string();
    auto opt1 = verify_opt1_encoding(inst);
    rec["opt1"] = opt1.opt1;
    rec["disjoint"] = opt1.disjoint;
    rec["opt1_ok"] = opt1.ok;
    auto distances = verify_gadget_distances(build_disjointness_gadget(inst));
    rec["distance_profile_ok"] = distances.ok();
    all_ok = all_ok && opt1.ok && distances.ok();
    if (claim2_k >= 2) {
      auto cover = verify_copy_coverage(inst, claim2_k);
      rec["copy_coverage_ok"] = cover.ok;
      rec["opt_k"] = cover.opt_k;
      rec["sets_inspected"] = cover.sets_inspected;
      all_ok = all_ok && cover.ok;
    }
    return rec;
  };

  json records = json::array();
  if (exhaustive) {
    for (int xm = 0; xm < (1 << ell); ++xm) {
      for (int ym = 0; ym < (1 << ell); ++ym) {
        DisjointnessInstance inst;
        inst.ell = ell;
        for (int i = 0; i < ell; ++i) {
          inst.x.push_back((xm >> i) & 1);
          inst.y.push_back((ym >> i) & 1);
        }
        json rec = verify_pair(inst);
        if (!(rec["opt1_ok"].get<bool>() &&
              rec["distance_profile_ok"].get<bool>()))
          records.push_back(std::move(rec));
      }
    }
    out["pairs"] = (1 << ell) * (1 << ell);
    out["failures"] = std::move(records);
  } else {
    records.push_back(verify_pair(DisjointnessInstance::from_strings(x, y)));
    out["checks"] = std::move(records);
  }
  out["ok"] = all_ok;
  emit(out, json_path);
  return all_ok ? 0 : 1;
}

int cmd_bench(const std::string& config_path, const std::string& csv_path,
              const std::string& json_path, bool deterministic) {
  BenchConfig cfg = load_bench_config(config_path);
  int jobs = 1;
  if (const char* env = std::getenv("KCSIM_JOBS")) jobs = std::atoi(env);
  BenchReport report = run_bench(cfg, std::max(jobs, 1), deterministic);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    out << bench_csv(report);
  }
  if (json_path.empty()) {
    std::cout << bench_json(report);
  } else {
    std::ofstream out(json_path);
    out << bench_json(report);
  }
  return report.any_violation || report.any_error ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-center algorithms in simulated message-passing models"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "print tool and format versions");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph file");
  std::string gen_kind = "gnp", gen_out;
  int gen_n = 10;
  double gen_p = 0.3;
  Dist gen_wmin = 1, gen_wmax = 8;
  std::uint64_t gen_seed = 1;
  gen->add_option("--kind", gen_kind,
                  "cycle|path|star|gnp|weighted-gnp")->required();
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--p", gen_p);
  gen->add_option("--wmin", gen_wmin);
  gen->add_option("--wmax", gen_wmax);
  gen->add_option("--seed", gen_seed);
  gen->add_option("--out", gen_out, "output path, '-' for stdout");

  // local-run
  auto* lrun = app.add_subcommand("local-run", "LOCAL-model k-center");
  std::string lrun_graph, lrun_eps = "1", lrun_json;
  int lrun_n = 0, lrun_k = 1;
  lrun->add_option("--graph", lrun_graph, "graph file");
  lrun->add_option("--n", lrun_n, "cycle size when no graph file is given");
  lrun->add_option("--k", lrun_k)->required();
  lrun->add_option("--eps", lrun_eps, "rational, e.g. 2 or 1/2");
  lrun->add_option("--json", lrun_json, "write the report here");

  // local-adversary
  auto* ladv = app.add_subcommand("local-adversary",
                                  "cycle re-arrangement lower-bound check");
  int ladv_n = 40, ladv_k = 2, ladv_t = 2;
  double ladv_beta = 0.0;
  std::string ladv_alg = "spread", ladv_json;
  ladv->add_option("--n", ladv_n)->required();
  ladv->add_option("--k", ladv_k)->required();
  ladv->add_option("--t", ladv_t)->required();
  ladv->add_option("--beta", ladv_beta, "override the declared beta");
  ladv->add_option("--alg", ladv_alg, "spread|spread-double|prefix");
  ladv->add_option("--json", ladv_json);

  // congest-run
  auto* crun = app.add_subcommand("congest-run", "CONGEST-model k-center");
  std::string crun_graph, crun_trace, crun_json;
  int crun_k = 1;
  crun->add_option("--graph", crun_graph)->required();
  crun->add_option("--k", crun_k)->required();
  crun->add_option("--trace", crun_trace, "JSON-lines round trace");
  crun->add_option("--json", crun_json);

  // clique-run
  auto* qrun = app.add_subcommand("clique-run", "CLIQUE-model k-center");
  std::string qrun_graph, qrun_phase1 = "exact", qrun_trace, qrun_json;
  int qrun_k = 1;
  bool qrun_elect = false;
  qrun->add_option("--graph", qrun_graph)->required();
  qrun->add_option("--k", qrun_k)->required();
  qrun->add_option("--phase1", qrun_phase1, "exact | inject:ALPHA:SEED");
  qrun->add_flag("--elect", qrun_elect, "spend one round electing v_min");
  qrun->add_option("--trace", qrun_trace);
  qrun->add_option("--json", qrun_json);

  // gadget
  auto* gadget = app.add_subcommand("gadget", "lower-bound gadget graphs");
  auto* gbuild = gadget->add_subcommand("build", "emit a gadget graph file");
  int gb_ell = 4, gb_copies = 1;
  std::string gb_x, gb_y, gb_out, gb_sidecar;
  bool gb_cross_only = false, gb_cpath_literal = false;
  gbuild->add_option("--ell", gb_ell)->required();
  gbuild->add_option("--x", gb_x)->required();
  gbuild->add_option("--y", gb_y)->required();
  gbuild->add_option("--copies", gb_copies);
  gbuild->add_option("--out", gb_out);
  gbuild->add_option("--sidecar", gb_sidecar, "role-label JSON path");
  gbuild->add_flag("--cross-only", gb_cross_only,
                   "drop the same-side encoder edges (fails verification)");
  gbuild->add_flag("--c-path-literal", gb_cpath_literal,
                   "wire the c-path in declaration order (fails verification)");
  auto* gverify = gadget->add_subcommand("verify", "run the gadget verifiers");
  int gv_ell = 4, gv_claim2_k = 0;
  bool gv_exhaustive = false;
  std::string gv_x, gv_y, gv_json;
  gverify->add_option("--ell", gv_ell)->required();
  gverify->add_flag("--exhaustive", gv_exhaustive, "all (x,y) pairs");
  gverify->add_option("--x", gv_x);
  gverify->add_option("--y", gv_y);
  gverify->add_option("--claim2-k", gv_claim2_k,
                      "also check per-copy coverage with this k");
  gverify->add_option("--json", gv_json);

  // bench
  auto* bench = app.add_subcommand("bench", "batch experiment report");
  std::string bench_config, bench_csv_path, bench_json_path;
  bool bench_det = false;
  bench->add_option("--config", bench_config)->required();
  bench->add_option("--out-csv", bench_csv_path);
  bench->add_option("--out-json", bench_json_path);
  bench->add_flag("--deterministic", bench_det,
                  "zero the volatile wallclock column");

  CLI11_PARSE(app, argc, argv);

  try {
    if (show_version) {
      json v;
      v["tool"] = kToolVersion;
      v["graph_format"] = kGraphFormat;
      v["bench_csv_format"] = kBenchCsvFormat;
      v["trace_format"] = kTraceFormat;
      std::cout << v.dump(2) << std::endl;
      return 0;
    }
    if (gen->parsed())
      return cmd_gen(gen_kind, gen_n, gen_p, gen_wmin, gen_wmax, gen_seed,
                     gen_out);
    if (lrun->parsed())
      return cmd_local_run(lrun_graph, lrun_n, lrun_k, lrun_eps, lrun_json);
    if (ladv->parsed())
      return cmd_local_adversary(ladv_n, ladv_k, ladv_t, ladv_beta, ladv_alg,
                                 ladv_json);
    if (crun->parsed())
      return cmd_congest_run(crun_graph, crun_k, crun_trace, crun_json);
    if (qrun->parsed())
      return cmd_clique_run(qrun_graph, qrun_k, qrun_phase1, qrun_elect,
                            qrun_trace, qrun_json);
    if (gadget->parsed()) {
      if (gbuild->parsed())
        return cmd_gadget_build(gb_ell, gb_x, gb_y, gb_copies, gb_out,
                                gb_sidecar, gb_cross_only, gb_cpath_literal);
      if (gverify->parsed())
        return cmd_gadget_verify(gv_ell, gv_exhaustive, gv_x, gv_y,
                                 gv_claim2_k, gv_json);
      std::cerr << "gadget: need build or verify\n";
      return 2;
    }
    if (bench->parsed())
      return cmd_bench(bench_config, bench_csv_path, bench_json_path,
                       bench_det);
    std::cout << app.help() << std::endl;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}
