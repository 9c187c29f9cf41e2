#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "kcsim/distances.hpp"
#include "kcsim/gadgets.hpp"
#include "kcsim/kcenter.hpp"

using namespace kcsim;

namespace {

DisjointnessInstance inst_from_masks(int ell, unsigned xm, unsigned ym) {
  DisjointnessInstance inst;
  inst.ell = ell;
  for (int i = 0; i < ell; ++i) {
    inst.x.push_back((xm >> i) & 1);
    inst.y.push_back((ym >> i) & 1);
  }
  return inst;
}

}  // namespace

TEST_CASE("node count and basic shape") {
  for (int ell : {2, 4, 8, 16}) {
    auto inst = inst_from_masks(ell, 0, 0);
    GadgetGraph gg = build_disjointness_gadget(inst);
    int logl = 0;
    while ((1 << logl) < ell) ++logl;
    CHECK(gg.g.n() == 2 * ell + 4 * logl + 7);
    CHECK(gg.g.connected());
    CHECK(gg.w2 == gg.g.n());
    CHECK(gg.role_of(1) == "a0");
    CHECK(gg.role_of(gg.w2) == "w2");
    CHECK(gg.in_a_side(1));
    CHECK_FALSE(gg.in_a_side(gg.copy[0].b[0]));
  }
  CHECK_THROWS_AS(build_disjointness_gadget(inst_from_masks(3, 0, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_disjointness_gadget(inst_from_masks(1, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("instance parsing") {
  auto inst = DisjointnessInstance::from_strings("0100", "0110");
  CHECK(inst.ell == 4);
  CHECK_FALSE(inst.disjoint());
  CHECK(inst.x_string() == "0100");
  CHECK(DisjointnessInstance::from_strings("0100", "0010").disjoint());
  CHECK_THROWS_AS(DisjointnessInstance::from_strings("01", "011"),
                  std::invalid_argument);
  CHECK_THROWS_AS(DisjointnessInstance::from_strings("01x0", "0110"),
                  std::invalid_argument);
}

TEST_CASE("distance profile holds exhaustively at ell=4") {
  for (unsigned xm = 0; xm < 16; ++xm) {
    for (unsigned ym = 0; ym < 16; ++ym) {
      auto inst = inst_from_masks(4, xm, ym);
      GadgetGraph gg = build_disjointness_gadget(inst);  // self-verifies
      auto report = verify_gadget_distances(gg);
      CHECK(report.ok());
    }
  }
}

TEST_CASE("the opt-1 radius encodes disjointness (exhaustive ell=4)") {
  for (unsigned xm = 0; xm < 16; ++xm) {
    for (unsigned ym = 0; ym < 16; ++ym) {
      auto inst = inst_from_masks(4, xm, ym);
      auto report = verify_opt1_encoding(inst);
      CHECK(report.ok);
      CHECK(report.opt1 == (inst.disjoint() ? 4 : 3));
    }
  }
}

TEST_CASE("named examples") {
  // intersecting index 1: the optimal center is a^1
  auto report = verify_opt1_encoding(
      DisjointnessInstance::from_strings("0100", "0110"));
  CHECK(report.opt1 == 3);
  CHECK_FALSE(report.disjoint);
  GadgetGraph gg = build_disjointness_gadget(
      DisjointnessInstance::from_strings("0100", "0110"));
  CHECK(report.optimal_center == gg.copy[0].a[1]);

  CHECK(verify_opt1_encoding(DisjointnessInstance::from_strings("1000", "1000"))
            .opt1 == 3);
  CHECK(verify_opt1_encoding(DisjointnessInstance::from_strings("0000", "0000"))
            .opt1 == 4);

  // brute-force k=1 oracle agrees
  Dist opt = opt_k_bruteforce(
                 build_disjointness_gadget(
                     DisjointnessInstance::from_strings("1000", "1000"))
                     .g,
                 1)
                 .radius;
  CHECK(opt == 3);
}

TEST_CASE("a-to-b distance tracks the shared-index condition") {
  for (unsigned xm : {0u, 5u, 9u, 15u}) {
    for (unsigned ym : {0u, 3u, 10u, 15u}) {
      auto inst = inst_from_masks(4, xm, ym);
      GadgetGraph gg = build_disjointness_gadget(inst);
      for (int i = 0; i < 4; ++i) {
        auto d = sssp(gg.g, gg.copy[0].a[static_cast<std::size_t>(i)]);
        bool shared = inst.x[static_cast<std::size_t>(i)] &&
                      inst.y[static_cast<std::size_t>(i)];
        CHECK((d[gg.copy[0].b[static_cast<std::size_t>(i)]] <= 3) == shared);
      }
    }
  }
}

TEST_CASE("a mutated gadget fails the eccentricity check with a witness") {
  auto inst = DisjointnessInstance::from_strings("1111", "0000");
  GadgetGraph gg = build_disjointness_gadget(inst);
  gg.g.add_edge(gg.w2, gg.copy[0].cB);
  auto report = verify_gadget_distances(gg);
  CHECK_FALSE(report.ecc_ok);
  CHECK(report.ecc_witness == gg.copy[0].cB);
}

TEST_CASE("dropping the same-side encoder edges breaks the cover property") {
  GadgetOptions cross_only;
  cross_only.same_side_ft_edges = false;
  auto inst = DisjointnessInstance::from_strings("0000", "0000");
  // a_0 can no longer reach the b-side encoders within 3
  GadgetGraph gg = build_shared_hub_gadget(inst, 1, cross_only);
  auto report = verify_gadget_distances(gg);
  CHECK_FALSE(report.cover_ok);
  CHECK(gg.in_a_side(report.cover_witness_a));
  CHECK_THROWS_AS(build_disjointness_gadget(inst, cross_only),
                  std::logic_error);
}

TEST_CASE("wiring the c-path in declaration order breaks the encoding") {
  GadgetOptions literal;
  literal.c_path_via_cbar = false;
  // x has a one-bit, y is empty: the path through c_B fakes a radius-3 center
  auto disjoint_pair = DisjointnessInstance::from_strings("0100", "0000");
  auto report = verify_opt1_encoding(disjoint_pair, literal);
  CHECK_FALSE(report.ok);
  CHECK(report.opt1 == 3);
}

TEST_CASE("shared-hub copies") {
  auto inst = DisjointnessInstance::from_strings("0100", "0010");
  GadgetGraph one = build_disjointness_gadget(inst);
  GadgetGraph k1 = build_shared_hub_gadget(inst, 1);
  CHECK(one.g.n() == k1.g.n());
  CHECK(one.g.edges() == k1.g.edges());

  GadgetGraph two = build_shared_hub_gadget(inst, 2);
  CHECK(two.g.n() == 2 * (one.g.n() - 1) + 1);
  CHECK(two.copy_of(two.w2) == -1);
  CHECK(two.copy_of(two.copy[1].cA) == 1);
  CHECK(two.g.connected());

  // the far node of an uncovered copy sits at distance >= 6 from the hub
  auto d = sssp(two.g, two.copy[0].b[0]);
  CHECK(d[two.w2] >= 6);

  // with disjoint inputs OPT_k stays at 4; per-copy intersecting centers give 3
  CHECK(opt_k_bruteforce(two.g, 2).radius <= 4);
  auto both = build_shared_hub_gadget(
      DisjointnessInstance::from_strings("1111", "1111"), 2);
  CHECK(opt_k_bruteforce(both.g, 2).radius == 3);
}

TEST_CASE("every near-optimal 2-set covers each copy exactly once") {
  for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
           {"0000", "1111"}, {"1111", "1111"}, {"0101", "1010"},
           {"1100", "0110"}}) {
    auto inst = DisjointnessInstance::from_strings(x, y);
    auto report = verify_copy_coverage(inst, 2);
    CHECK(report.ok);
    CHECK(report.violations == 0);
    CHECK(report.sets_inspected > 0);
  }
}
