#pragma once

#include <string>
#include <vector>

#include "kcsim/graph.hpp"

namespace kcsim {

struct DisjointnessInstance {
  int ell = 0;
  std::vector<bool> x, y;

  // "0110" style, leftmost character is index 0
  static DisjointnessInstance from_strings(const std::string& xs,
                                           const std::string& ys);
  bool disjoint() const;
  std::string x_string() const;
  std::string y_string() const;
};

struct GadgetOptions {
  // The encoder bullet lists a same-side edge f_A[h] - t_A[h] next to the
  // two cross edges; dropping it breaks the distance profile (see tests),
  // so it ships enabled.
  bool same_side_ft_edges = true;
  // Middle edge of the 4-node c-path: cbarA - cbarB when true (the wiring
  // under which the opt-1 encoding verifies), cbarA - cB otherwise.
  bool c_path_via_cbar = true;
};

// The disjointness instance embedded as a graph: two ell-node sides a/b
// wired through binary encoders so that the 1-center optimum is 4 exactly
// when x and y are disjoint and 3 otherwise. Multiple copies share the
// far node w2.
struct GadgetGraph {
  Graph g;
  int ell = 0;
  int log_ell = 0;
  int copies = 1;
  GadgetOptions opts;
  std::vector<bool> x, y;

  struct Copy {
    std::vector<NodeId> a, b, fA, tA, fB, tB;
    NodeId cA = 0, cbarA = 0, cB = 0, cbarB = 0, w0 = 0, w1 = 0;
  };
  std::vector<Copy> copy;
  NodeId w2 = 0;

  // -1 for the shared w2, otherwise the 0-based copy index
  int copy_of(NodeId v) const;
  bool in_a_side(NodeId v) const;
  std::string role_of(NodeId v) const;  // e.g. "a3", "fA1", "cbarB", "w2"
};

// Single copy; ell must be a power of two >= 2. The distance profile is
// re-verified at construction for ell <= 16.
GadgetGraph build_disjointness_gadget(const DisjointnessInstance& inst,
                                      const GadgetOptions& opts = {});
// k copies sharing w2.
GadgetGraph build_shared_hub_gadget(const DisjointnessInstance& inst, int k,
                                    const GadgetOptions& opts = {});

struct GadgetDistanceReport {
  bool ecc_ok = true;  // every node outside the a-side has ecc >= 4
  NodeId ecc_witness = 0;
  bool cover_ok = true;  // every a_i is within 3 of all but b_i and c_B
  NodeId cover_witness_a = 0, cover_witness_u = 0;
  bool ok() const { return ecc_ok && cover_ok; }
};
GadgetDistanceReport verify_gadget_distances(const GadgetGraph& gg);

struct Opt1Report {
  Dist opt1 = 0;
  bool disjoint = false;
  bool ok = false;  // opt1 == 4 iff disjoint, == 3 iff intersecting
  NodeId optimal_center = 0;
};
Opt1Report verify_opt1_encoding(const DisjointnessInstance& inst,
                                const GadgetOptions& opts = {});

struct CopyCoverageReport {
  Dist opt_k = 0;
  long long sets_inspected = 0;  // k-sets with radius < (3/2) * opt_k
  long long violations = 0;
  std::vector<NodeId> witness;  // one violating set, when present
  bool ok = true;
};
// Enumerates every k-set of the k-copy gadget with coverage radius below
// (3/2) * OPT_k and checks that each picks exactly one center per copy.
CopyCoverageReport verify_copy_coverage(const DisjointnessInstance& inst,
                                        int k, const GadgetOptions& opts = {});

}  // namespace kcsim
