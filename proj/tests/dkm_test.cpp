#include <set>

#include <gtest/gtest.h>

#include "plslab/dkm.hpp"
#include "plslab/embedding.hpp"
#include "plslab/reduction.hpp"
#include "test_support.hpp"

using namespace plslab;
using namespace plslab::testing;

TEST(PhiKm, Tiny1GroundValues) {
  const DkmInstance inst = build_dkm(tiny1(), Rational(3, 2));
  EXPECT_EQ(phi_km(inst, std::vector<Index>{kX1, kX2}), Rational(103, 24));
  // 2 + 37/32 + 55/48
  EXPECT_EQ(phi_km(inst, std::vector<Index>{kNotX1, kNotX2}), Rational(413, 96));
  EXPECT_EQ(Rational(2) + Rational(37, 32) + Rational(55, 48), Rational(413, 96));
}

TEST(PhiKm, AllPointsChosenCostsZero) {
  const DkmInstance base = build_dkm(tiny1());
  const DkmInstance inst(base.points(), base.num_points(), base.distance());
  EXPECT_EQ(phi_km(inst, std::vector<Index>{0, 1, 2, 3, 4, 5}), 0);
}

TEST(PhiKm, CardinalityMustEqualK) {
  const DkmInstance inst = build_dkm(tiny1());
  EXPECT_THROW(phi_km(inst, std::vector<Index>{0}), std::invalid_argument);
  EXPECT_THROW(inst.solution({0, 1, 2}), std::invalid_argument);
}

TEST(PhiKm, MatchesNaiveSum) {
  const DkmInstance inst = build_dkm(parse_wcnf("p wcnf 3 3\n2 1 -2 0\n5 -1 3 0\n1 2 3 0\n"), Rational(7, 5));
  for (const auto& s : all_subsets(inst.num_points()))
    if (s.size() == inst.k()) EXPECT_EQ(phi_km(inst, s), naive_phi_km(inst, s));
}

TEST(DkmInstance, ConstructorValidates) {
  RationalMatrix d = RationalMatrix::Zero(2, 2);
  EXPECT_THROW(DkmInstance({"a", "b"}, 0, d), std::invalid_argument);
  EXPECT_THROW(DkmInstance({"a", "b"}, 3, d), std::invalid_argument);
  d(0, 1) = 1;
  EXPECT_THROW(DkmInstance({"a", "b"}, 1, d), std::invalid_argument);
  d(1, 0) = 1;
  d(0, 0) = 1;
  EXPECT_THROW(DkmInstance({"a", "b"}, 1, d), std::invalid_argument);
}

TEST(SwapNeighborsDkm, Counts) {
  const DkmInstance inst = build_dkm(tiny1());  // |C| = 6, K = 2
  const auto nbs = swap_neighbors_dkm(inst, inst.solution({kX1, kX2}));
  EXPECT_EQ(nbs.size(), 8u);
  for (const auto& n : nbs) EXPECT_EQ(n.size(), inst.k());

  const DkmInstance full(inst.points(), 6, inst.distance());
  EXPECT_TRUE(swap_neighbors_dkm(full, full.solution({0, 1, 2, 3, 4, 5})).empty());
}

TEST(SwapNeighborsDkm, RegularAndSymmetric) {
  const DkmInstance inst = build_dkm(tiny1());
  for (const auto& s : all_subsets(6)) {
    if (s.size() != 2) continue;
    const auto nbs = swap_neighbors_dkm(inst, inst.solution(s));
    EXPECT_EQ(nbs.size(), 2u * 4u);
    std::set<std::vector<Index>> distinct;
    for (const auto& n : nbs) {
      distinct.insert(n.members);
      EXPECT_EQ(symmetric_difference(n.members, s), 2u);
      const auto back = swap_neighbors_dkm(inst, n);
      EXPECT_TRUE(std::any_of(back.begin(), back.end(), [&](const SolutionSet& b) { return b.members == s; }));
    }
    EXPECT_EQ(distinct.size(), nbs.size());
  }
}

TEST(PhiKm, CoordinatesAgreeWithTable) {
  DkmInstance inst = build_dkm(parse_wcnf("p wcnf 3 4\n2 1 -2 0\n5 -1 3 0\n1 2 3 0\n3 -2 -3 0\n"));
  const EmbeddedPoints e = embed_squared_euclidean(inst.distance());
  inst.set_coords(e.coords);
  for (const auto& s : all_subsets(inst.num_points())) {
    if (s.size() != inst.k()) continue;
    const double exact = phi_km(inst, s).convert_to<double>();
    EXPECT_NEAR(phi_km_from_coords(inst, s), exact, 10 * e.tolerance);
  }
}
