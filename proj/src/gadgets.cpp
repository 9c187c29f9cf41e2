#include "kcsim/gadgets.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "kcsim/distances.hpp"
#include "kcsim/errors.hpp"
#include "kcsim/kcenter.hpp"

namespace kcsim {

DisjointnessInstance DisjointnessInstance::from_strings(const std::string& xs,
                                                        const std::string& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("x and y must have equal nonzero length");
  DisjointnessInstance inst;
  inst.ell = static_cast<int>(xs.size());
  for (char c : xs) {
    if (c != '0' && c != '1') throw std::invalid_argument("bits must be 0/1");
    inst.x.push_back(c == '1');
  }
  for (char c : ys) {
    if (c != '0' && c != '1') throw std::invalid_argument("bits must be 0/1");
    inst.y.push_back(c == '1');
  }
  return inst;
}

bool DisjointnessInstance::disjoint() const {
  for (int i = 0; i < ell; ++i)
    if (x[i] && y[i]) return false;
  return true;
}

std::string DisjointnessInstance::x_string() const {
  std::string s;
  for (bool b : x) s += b ? '1' : '0';
  return s;
}
std::string DisjointnessInstance::y_string() const {
  std::string s;
  for (bool b : y) s += b ? '1' : '0';
  return s;
}

namespace {

int exact_log2(int ell) {
  if (ell < 2 || (ell & (ell - 1)) != 0)
    throw std::invalid_argument("ell must be a power of two >= 2");
  int log = 0;
  while ((1 << log) < ell) ++log;
  return log;
}

GadgetGraph build_impl(const DisjointnessInstance& inst, int copies,
                       const GadgetOptions& opts) {
  const int ell = inst.ell;
  const int logl = exact_log2(ell);
  if (static_cast<int>(inst.x.size()) != ell ||
      static_cast<int>(inst.y.size()) != ell)
    throw std::invalid_argument("bit string length mismatch");
  if (copies < 1) throw std::invalid_argument("need at least one copy");

  const int stride = 2 * ell + 4 * logl + 6;
  GadgetGraph gg;
  gg.ell = ell;
  gg.log_ell = logl;
  gg.copies = copies;
  gg.opts = opts;
  gg.x = inst.x;
  gg.y = inst.y;
  gg.w2 = copies * stride + 1;
  gg.g = Graph(copies * stride + 1, false);

  for (int c = 0; c < copies; ++c) {
    GadgetGraph::Copy cp;
    NodeId next = c * stride + 1;
    auto take = [&next](std::vector<NodeId>& out, int count) {
      for (int i = 0; i < count; ++i) out.push_back(next++);
    };
    take(cp.a, ell);
    take(cp.b, ell);
    take(cp.fA, logl);
    take(cp.tA, logl);
    take(cp.fB, logl);
    take(cp.tB, logl);
    cp.cA = next++;
    cp.cbarA = next++;
    cp.cB = next++;
    cp.cbarB = next++;
    cp.w0 = next++;
    cp.w1 = next++;

    Graph& g = gg.g;
    // binary encoders
    for (int i = 0; i < ell; ++i) {
      for (int h = 0; h < logl; ++h) {
        bool bit = (i >> h) & 1;
        g.add_edge(cp.a[i], bit ? cp.tA[h] : cp.fA[h]);
        g.add_edge(cp.b[i], bit ? cp.tB[h] : cp.fB[h]);
      }
    }
    // input edges
    for (int i = 0; i < ell; ++i) {
      if (inst.x[i]) g.add_edge(cp.a[i], cp.cbarA);
      if (inst.y[i]) g.add_edge(cp.b[i], cp.cbarB);
    }
    // hubs
    for (int i = 0; i < ell; ++i) g.add_edge(cp.cA, cp.a[i]);
    for (int i = 0; i < ell; ++i) g.add_edge(cp.cB, cp.b[i]);
    for (int h = 0; h < logl; ++h) {
      g.add_edge(cp.cbarA, cp.fA[h]);
      g.add_edge(cp.cbarA, cp.tA[h]);
      g.add_edge(cp.cbarB, cp.fB[h]);
      g.add_edge(cp.cbarB, cp.tB[h]);
    }
    // the 4-node c-path
    g.add_edge(cp.cA, cp.cbarA);
    g.add_edge(cp.cB, cp.cbarB);
    if (opts.c_path_via_cbar)
      g.add_edge(cp.cbarA, cp.cbarB);
    else
      g.add_edge(cp.cbarA, cp.cB);
    // encoder cross wiring
    for (int h = 0; h < logl; ++h) {
      g.add_edge(cp.fA[h], cp.tB[h]);
      g.add_edge(cp.tA[h], cp.fB[h]);
      if (opts.same_side_ft_edges) g.add_edge(cp.fA[h], cp.tA[h]);
    }
    // the far path
    for (int i = 0; i < ell; ++i) g.add_edge(cp.w0, cp.a[i]);
    g.add_edge(cp.w0, cp.w1);
    g.add_edge(cp.w1, gg.w2);

    gg.copy.push_back(std::move(cp));
  }
  return gg;
}

}  // namespace

int GadgetGraph::copy_of(NodeId v) const {
  if (v == w2) return -1;
  const int stride = 2 * ell + 4 * log_ell + 6;
  return (v - 1) / stride;
}

bool GadgetGraph::in_a_side(NodeId v) const {
  int c = copy_of(v);
  if (c < 0) return false;
  const auto& a = copy[c].a;
  return v >= a.front() && v <= a.back();
}

std::string GadgetGraph::role_of(NodeId v) const {
  if (v == w2) return "w2";
  const auto& cp = copy[copy_of(v)];
  auto index_in = [v](const std::vector<NodeId>& ids) {
    auto it = std::find(ids.begin(), ids.end(), v);
    return it == ids.end() ? -1 : static_cast<int>(it - ids.begin());
  };
  if (int i = index_in(cp.a); i >= 0) return "a" + std::to_string(i);
  if (int i = index_in(cp.b); i >= 0) return "b" + std::to_string(i);
  if (int i = index_in(cp.fA); i >= 0) return "fA" + std::to_string(i);
  if (int i = index_in(cp.tA); i >= 0) return "tA" + std::to_string(i);
  if (int i = index_in(cp.fB); i >= 0) return "fB" + std::to_string(i);
  if (int i = index_in(cp.tB); i >= 0) return "tB" + std::to_string(i);
  if (v == cp.cA) return "cA";
  if (v == cp.cbarA) return "cbarA";
  if (v == cp.cB) return "cB";
  if (v == cp.cbarB) return "cbarB";
  if (v == cp.w0) return "w0";
  if (v == cp.w1) return "w1";
  return "?";
}

GadgetGraph build_disjointness_gadget(const DisjointnessInstance& inst,
                                      const GadgetOptions& opts) {
  GadgetGraph gg = build_impl(inst, 1, opts);
  if (inst.ell <= 16) {
    auto report = verify_gadget_distances(gg);
    if (!report.ok())
      throw std::logic_error("gadget construction failed its distance checks");
  }
  return gg;
}

GadgetGraph build_shared_hub_gadget(const DisjointnessInstance& inst, int k,
                                    const GadgetOptions& opts) {
  return build_impl(inst, k, opts);
}

GadgetDistanceReport verify_gadget_distances(const GadgetGraph& gg) {
  if (gg.copies != 1)
    throw std::invalid_argument("distance checks apply to single copies");
  GadgetDistanceReport report;
  const Graph& g = gg.g;
  const auto& cp = gg.copy[0];
  for (NodeId v = 1; v <= g.n(); ++v) {
    auto dist = sssp(g, v);
    if (!gg.in_a_side(v)) {
      Dist ecc = *std::max_element(dist.begin() + 1, dist.end());
      if (ecc < 4 && report.ecc_ok) {
        report.ecc_ok = false;
        report.ecc_witness = v;
      }
    } else {
      int i = static_cast<int>(v - cp.a.front());
      for (NodeId u = 1; u <= g.n(); ++u) {
        if (u == cp.b[i] || u == cp.cB) continue;
        if (dist[u] > 3 && report.cover_ok) {
          report.cover_ok = false;
          report.cover_witness_a = v;
          report.cover_witness_u = u;
        }
      }
    }
  }
  return report;
}

Opt1Report verify_opt1_encoding(const DisjointnessInstance& inst,
                                const GadgetOptions& opts) {
  GadgetGraph gg = build_impl(inst, 1, opts);
  Opt1Report report;
  report.disjoint = inst.disjoint();
  Dist best = std::numeric_limits<Dist>::max();
  for (NodeId v = 1; v <= gg.g.n(); ++v) {
    Dist ecc = eccentricity(gg.g, v);
    if (ecc < best) {
      best = ecc;
      report.optimal_center = v;
    }
  }
  report.opt1 = best;
  report.ok = report.disjoint ? best == 4 : best == 3;
  return report;
}

CopyCoverageReport verify_copy_coverage(const DisjointnessInstance& inst,
                                        int k, const GadgetOptions& opts) {
  GadgetGraph gg = build_shared_hub_gadget(inst, k, opts);
  const Graph& g = gg.g;
  const int n = g.n();
  CopyCoverageReport report;
  report.opt_k = opt_k_bruteforce(g, k).radius;

  const auto table = apsp(g);
  std::vector<NodeId> pick(k);
  std::iota(pick.begin(), pick.end(), 1);
  std::vector<int> per_copy(static_cast<std::size_t>(k), 0);
  for (;;) {
    Dist radius = 0;
    for (NodeId v = 1; v <= n; ++v) {
      Dist nearest = std::numeric_limits<Dist>::max();
      for (NodeId c : pick) nearest = std::min(nearest, table[c][v]);
      radius = std::max(radius, nearest);
    }
    if (2 * radius < 3 * report.opt_k) {  // radius < (3/2) * opt, exactly
      report.sets_inspected += 1;
      std::fill(per_copy.begin(), per_copy.end(), 0);
      bool bad = false;
      for (NodeId c : pick) {
        int idx = gg.copy_of(c);
        if (idx < 0)
          bad = true;  // the shared hub leaves some copy uncovered
        else
          per_copy[idx] += 1;
      }
      for (int count : per_copy) bad = bad || count != 1;
      if (bad) {
        report.violations += 1;
        if (report.witness.empty()) report.witness = pick;
      }
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  report.ok = report.violations == 0;
  return report;
}

}  // namespace kcsim
