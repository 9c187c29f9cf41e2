// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criterion 9 reruns the whole battery and compares the JSON reports
// byte-for-byte, so every sub-suite below must be fully deterministic.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "corpus.hpp"
#include "kcsim/algo_clique.hpp"
#include "kcsim/algo_congest.hpp"
#include "kcsim/algo_local.hpp"
#include "kcsim/bench.hpp"
#include "kcsim/distances.hpp"
#include "kcsim/gadgets.hpp"
#include "kcsim/gen.hpp"
#include "kcsim/kcenter.hpp"

using namespace kcsim;
using nlohmann::json;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, bool ok,
               const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

struct Digest {
  std::uint64_t h = 1469598103934665603ULL;
  void mix(std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  void mix_solution(const CenterSolution& sol) {
    for (NodeId c : sol.centers) mix(static_cast<std::uint64_t>(c));
    mix(static_cast<std::uint64_t>(sol.radius) + 0x9e37ULL);
  }
};

struct Corpus {
  std::vector<Graph> graphs;
  // OPT_k per graph for k = 1..3, computed once
  std::vector<std::array<Dist, 4>> opt;
};

Corpus build_corpus() {
  Corpus corpus;
  corpus.graphs = testing::random_corpus(200, 12);
  for (Graph& g : testing::structured_corpus(16))
    corpus.graphs.push_back(std::move(g));
  for (const Graph& g : corpus.graphs) {
    std::array<Dist, 4> opts{0, 0, 0, 0};
    for (int k = 1; k <= 3; ++k) opts[k] = opt_k_bruteforce(g, k).radius;
    corpus.opt.push_back(opts);
  }
  return corpus;
}

json check_greedy_two_approx(const Corpus& corpus, double* elapsed) {
  auto start = std::chrono::steady_clock::now();
  long long runs = 0, violations = 0;
  double max_ratio = 0.0;
  Digest digest;
  for (std::size_t gi = 0; gi < corpus.graphs.size(); ++gi) {
    const Graph& g = corpus.graphs[gi];
    auto ds = DistanceSource::exact(g);
    for (int k = 1; k <= 3; ++k) {
      Dist opt = corpus.opt[gi][k];
      for (NodeId seed = 1; seed <= g.n(); ++seed) {
        auto sol = greedy_gonzalez(g, ds, k, seed);
        ++runs;
        if (sol.radius > 2 * opt) ++violations;
        if (opt > 0)
          max_ratio = std::max(
              max_ratio, static_cast<double>(sol.radius) / static_cast<double>(opt));
        digest.mix_solution(sol);
      }
    }
  }
  *elapsed = seconds_since(start);
  return json{{"runs", runs},
              {"violations", violations},
              {"max_ratio", max_ratio},
              {"digest", digest.h}};
}

json check_stretch_greedy(const Corpus& corpus) {
  long long runs = 0, violations = 0;
  Digest digest;
  for (std::size_t gi = 0; gi < corpus.graphs.size(); ++gi) {
    const Graph& g = corpus.graphs[gi];
    for (double alpha : {1.25, 1.5, 2.0}) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto ds = make_stretch_oracle(g, alpha, seed);
        for (int k = 1; k <= 3; ++k) {
          auto sol = greedy_gonzalez(g, ds, k, 1);
          ++runs;
          if (static_cast<double>(sol.radius) >
              2.0 * alpha * static_cast<double>(corpus.opt[gi][k]))
            ++violations;
          digest.mix_solution(sol);
        }
      }
    }
  }
  return json{{"runs", runs}, {"violations", violations}, {"digest", digest.h}};
}

json check_congest(const Corpus& corpus) {
  long long runs = 0, set_mismatches = 0, round_violations = 0,
            bandwidth_violations = 0, radius_violations = 0;
  Digest digest;
  for (std::size_t gi = 0; gi < corpus.graphs.size(); ++gi) {
    const Graph& g = corpus.graphs[gi];
    auto ds = DistanceSource::exact(g);
    Dist d = diameter(g);
    ModelConfig cfg;
    cfg.model = Model::Congest;
    int budget = cfg.budget_bits(EncodingContext::for_graph(g));
    for (int k = 1; k <= 3; ++k) {
      auto result = congest_kcenter(g, k);
      auto greedy = greedy_gonzalez(g, ds, k, 1);
      ++runs;
      if (result.solution.centers != greedy.centers) ++set_mismatches;
      if (result.stats.rounds > 10 * k * std::max<Dist>(d, 1))
        ++round_violations;
      if (result.stats.max_message_bits > budget) ++bandwidth_violations;
      if (result.solution.radius > 2 * corpus.opt[gi][k]) ++radius_violations;
      digest.mix_solution(result.solution);
      digest.mix(static_cast<std::uint64_t>(result.stats.rounds));
    }
  }
  return json{{"runs", runs},
              {"set_mismatches", set_mismatches},
              {"round_violations", round_violations},
              {"bandwidth_violations", bandwidth_violations},
              {"radius_violations", radius_violations},
              {"digest", digest.h}};
}

json check_clique(const Corpus& corpus) {
  long long runs = 0, phase2_mismatches = 0, radius_violations = 0;
  Digest digest;
  for (std::size_t gi = 0; gi < corpus.graphs.size(); ++gi) {
    const Graph& g = corpus.graphs[gi];
    for (int k = 1; k <= 3; ++k) {
      auto result = clique_kcenter(g, k, CliquePhase1::exact());
      ++runs;
      if (result.phase2_rounds != std::min(k, g.n()) - 1) ++phase2_mismatches;
      if (result.solution.radius > 2 * corpus.opt[gi][k]) ++radius_violations;
      digest.mix_solution(result.solution);
      digest.mix(static_cast<std::uint64_t>(result.phase1_rounds));
    }
  }
  return json{{"runs", runs},
              {"phase2_mismatches", phase2_mismatches},
              {"radius_violations", radius_violations},
              {"digest", digest.h}};
}

json check_gadget_opt1(double* elapsed) {
  auto start = std::chrono::steady_clock::now();
  long long checked = 0, failures = 0;
  Digest digest;
  for (unsigned xm = 0; xm < 16; ++xm) {
    for (unsigned ym = 0; ym < 16; ++ym) {
      DisjointnessInstance inst;
      inst.ell = 4;
      for (int i = 0; i < 4; ++i) {
        inst.x.push_back((xm >> i) & 1);
        inst.y.push_back((ym >> i) & 1);
      }
      auto opt1 = verify_opt1_encoding(inst);
      auto prof = verify_gadget_distances(build_disjointness_gadget(inst));
      ++checked;
      if (!opt1.ok || !prof.ok()) ++failures;
      digest.mix(static_cast<std::uint64_t>(opt1.opt1));
    }
  }
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    DisjointnessInstance inst;
    inst.ell = 8;
    std::uint64_t bits = rng();
    for (int i = 0; i < 8; ++i) {
      inst.x.push_back((bits >> i) & 1);
      inst.y.push_back((bits >> (8 + i)) & 1);
    }
    auto opt1 = verify_opt1_encoding(inst);
    auto prof = verify_gadget_distances(build_disjointness_gadget(inst));
    ++checked;
    if (!opt1.ok || !prof.ok()) ++failures;
    digest.mix(static_cast<std::uint64_t>(opt1.opt1));
  }
  *elapsed = seconds_since(start);
  return json{{"pairs", checked}, {"failures", failures}, {"digest", digest.h}};
}

json check_copy_coverage() {
  long long pairs = 0, violations = 0, sets = 0;
  Digest digest;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    DisjointnessInstance inst;
    inst.ell = 4;
    std::uint64_t bits = rng();
    for (int i = 0; i < 4; ++i) {
      inst.x.push_back((bits >> i) & 1);
      inst.y.push_back((bits >> (4 + i)) & 1);
    }
    auto report = verify_copy_coverage(inst, 2);
    ++pairs;
    violations += report.violations;
    sets += report.sets_inspected;
    digest.mix(static_cast<std::uint64_t>(report.opt_k));
    digest.mix(static_cast<std::uint64_t>(report.sets_inspected));
  }
  return json{{"pairs", pairs},
              {"near_optimal_sets", sets},
              {"violations", violations},
              {"digest", digest.h}};
}

json check_local(const Corpus&) {
  long long runs = 0, violations = 0;
  bool solo_seen = false, aggregate_seen = false, oracle_agrees = true;
  Digest digest;
  // the stated grid
  for (int n : {30, 50, 80}) {
    for (int k : {1, 2}) {
      for (int e : {1, 2}) {
        Graph c = gen_cycle(n);
        auto result = local_kcenter(c, k, Rational(e));
        ++runs;
        solo_seen = solo_seen || !result.aggregated;
        aggregate_seen = aggregate_seen || result.aggregated;
        double bound = (2.0 + e) * k;
        if (static_cast<double>(result.solution.radius) >
            bound * static_cast<double>(opt_k_cycle(n, k)))
          ++violations;
        digest.mix_solution(result.solution);
      }
    }
  }
  // spot-check the closed form against the oracle at n=30
  for (int k : {1, 2})
    oracle_agrees = oracle_agrees &&
                    opt_k_bruteforce(gen_cycle(30), k).radius ==
                        opt_k_cycle(30, k);
  // aggregation-branch cycles (depth 8 >= D)
  for (int n : {8, 12}) {
    Graph c = gen_cycle(n);
    auto result = local_kcenter(c, 2, Rational(2));
    ++runs;
    aggregate_seen = aggregate_seen || result.aggregated;
    if (static_cast<double>(result.solution.radius) >
        8.0 * static_cast<double>(opt_k_cycle(n, 2)))
      ++violations;
    if (result.aggregated &&
        result.solution.radius > 2 * opt_k_cycle(n, 2))
      ++violations;
    digest.mix_solution(result.solution);
  }
  return json{{"runs", runs},
              {"violations", violations},
              {"solo_seen", solo_seen},
              {"aggregate_seen", aggregate_seen},
              {"oracle_agrees", oracle_agrees},
              {"digest", digest.h}};
}

json check_adversary() {
  long long cases = 0, view_failures = 0, segment_failures = 0,
            ratio_failures = 0;
  double min_margin = 1e18;
  Digest digest;
  for (const std::string& name : view_algorithm_names()) {
    for (int t : {1, 2, 3}) {
      ViewAlgorithm alg = view_algorithm_by_name(name, t);
      for (int k : {1, 2, 3}) {
        for (int n : {20, 36, 50, 101, 150, 200}) {
          if (static_cast<double>(n) <= 2.0 * alg.beta * k * t) continue;
          auto rep = build_rearranged_cycle(alg, n, k);
          ++cases;
          if (!rep.views_identical) ++view_failures;
          if (rep.max_segment_len > 2 * t + 1) ++segment_failures;
          if (rep.ratio < rep.lower_bound - 1e-9) ++ratio_failures;
          min_margin = std::min(min_margin, rep.ratio - rep.lower_bound);
          digest.mix(static_cast<std::uint64_t>(rep.radius_rearranged));
          digest.mix(static_cast<std::uint64_t>(rep.k_prime));
        }
      }
    }
  }
  return json{{"cases", cases},
              {"view_failures", view_failures},
              {"segment_failures", segment_failures},
              {"ratio_failures", ratio_failures},
              {"min_margin", min_margin},
              {"digest", digest.h}};
}

struct BatteryResult {
  json report;
  double greedy_seconds = 0.0;
  double gadget_seconds = 0.0;
};

BatteryResult run_battery() {
  BatteryResult result;
  Corpus corpus = build_corpus();
  result.report["corpus_graphs"] = corpus.graphs.size();
  result.report["c1"] = check_greedy_two_approx(corpus, &result.greedy_seconds);
  result.report["c2"] = check_stretch_greedy(corpus);
  result.report["c3"] = check_congest(corpus);
  result.report["c4"] = check_clique(corpus);
  result.report["c5"] = check_gadget_opt1(&result.gadget_seconds);
  result.report["c6"] = check_copy_coverage();
  result.report["c7"] = check_local(corpus);
  result.report["c8"] = check_adversary();
  return result;
}

std::string bench_fixture_json() {
  const char* config = R"({
    "seed": 5,
    "runs": [
      {"gen": {"kind": "gnp", "n": 11, "p": 0.35}, "k": 2, "algo": "congest"},
      {"gen": {"kind": "gnp", "n": 10, "p": 0.45}, "k": 3, "algo": "clique"},
      {"gen": {"kind": "cycle", "n": 30}, "k": 2, "algo": "local", "eps": "1"},
      {"gen": {"kind": "gnp", "n": 9, "p": 0.4}, "k": 2, "algo": "clique",
       "phase1": "inject", "alpha": 2.0}
    ]
  })";
  BenchReport report = run_bench(parse_bench_config(config), 2, true);
  return bench_json(report) + bench_csv(report);
}

}  // namespace

int main() {
  BatteryResult first = run_battery();
  const json& r = first.report;

  criterion(1, "greedy 2-approximation on the corpus",
            r["c1"]["violations"] == 0 && first.greedy_seconds < 60.0,
            "runs=" + std::to_string(r["c1"]["runs"].get<long long>()) +
                " violations=" +
                std::to_string(r["c1"]["violations"].get<long long>()) +
                " time=" + std::to_string(first.greedy_seconds) + "s");
  criterion(2, "stretch-oracle greedy within 2*alpha",
            r["c2"]["violations"] == 0,
            "runs=" + std::to_string(r["c2"]["runs"].get<long long>()) +
                " violations=" +
                std::to_string(r["c2"]["violations"].get<long long>()));
  criterion(
      3, "CONGEST fidelity: greedy-identical, rounds <= 10kD, in budget",
      r["c3"]["set_mismatches"] == 0 && r["c3"]["round_violations"] == 0 &&
          r["c3"]["bandwidth_violations"] == 0 &&
          r["c3"]["radius_violations"] == 0,
      "runs=" + std::to_string(r["c3"]["runs"].get<long long>()));
  criterion(4, "CLIQUE phase structure and 2-approximation",
            r["c4"]["phase2_mismatches"] == 0 &&
                r["c4"]["radius_violations"] == 0,
            "runs=" + std::to_string(r["c4"]["runs"].get<long long>()));
  criterion(5, "gadget opt-1 encoding and distance profile",
            r["c5"]["failures"] == 0 && first.gadget_seconds < 120.0,
            "pairs=" + std::to_string(r["c5"]["pairs"].get<long long>()) +
                " time=" + std::to_string(first.gadget_seconds) + "s");
  criterion(6, "near-optimal sets cover each copy exactly once",
            r["c6"]["violations"] == 0,
            "pairs=" + std::to_string(r["c6"]["pairs"].get<long long>()) +
                " sets=" +
                std::to_string(r["c6"]["near_optimal_sets"].get<long long>()));
  criterion(7, "LOCAL algorithm within (2+eps)k on both branches",
            r["c7"]["violations"] == 0 && r["c7"]["solo_seen"].get<bool>() &&
                r["c7"]["aggregate_seen"].get<bool>() &&
                r["c7"]["oracle_agrees"].get<bool>(),
            "runs=" + std::to_string(r["c7"]["runs"].get<long long>()));
  criterion(8, "rearrangement adversary: views, segments, ratio bound",
            r["c8"]["view_failures"] == 0 && r["c8"]["segment_failures"] == 0 &&
                r["c8"]["ratio_failures"] == 0,
            "cases=" + std::to_string(r["c8"]["cases"].get<long long>()) +
                " min_margin=" +
                std::to_string(r["c8"]["min_margin"].get<double>()));

  BatteryResult second = run_battery();
  bool battery_same = first.report.dump() == second.report.dump();
  std::string bench_a = bench_fixture_json();
  std::string bench_b = bench_fixture_json();
  criterion(9, "byte-identical reruns (battery digests and bench reports)",
            battery_same && bench_a == bench_b,
            battery_same ? "reports match" : "reports differ");

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
