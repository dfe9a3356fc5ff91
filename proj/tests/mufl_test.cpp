#include <random>
#include <set>

#include <gtest/gtest.h>

#include "plslab/mufl.hpp"
#include "plslab/oracle.hpp"
#include "plslab/reduction.hpp"
#include "test_support.hpp"

using namespace plslab;
using namespace plslab::testing;

namespace {

/// Random metric instance: shortest-path closure of random positive weights.
MuflInstance random_metric_instance(std::mt19937_64& rng, Index sites, Index facilities) {
  RationalMatrix d(static_cast<Eigen::Index>(sites), static_cast<Eigen::Index>(sites));
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    d(i, i) = 0;
    for (Eigen::Index j = 0; j < i; ++j) d(i, j) = d(j, i) = Rational(1 + static_cast<long long>(rng() % 20), 1 + static_cast<long long>(rng() % 3));
  }
  for (Eigen::Index k = 0; k < d.rows(); ++k)
    for (Eigen::Index i = 0; i < d.rows(); ++i)
      for (Eigen::Index j = 0; j < d.rows(); ++j)
        if (d(i, k) + d(k, j) < d(i, j)) d(i, j) = d(i, k) + d(k, j);
  std::vector<std::string> labels;
  std::vector<Index> clients;
  for (Index i = 0; i < sites; ++i) {
    labels.push_back("s" + std::to_string(i));
    clients.push_back(i);
  }
  std::vector<Index> fac;
  std::vector<Rational> open;
  for (Index f = 0; f < facilities; ++f) {
    fac.push_back(f);
    open.emplace_back(static_cast<long long>(rng() % 10), 1 + static_cast<long long>(rng() % 4));
  }
  return MuflInstance(labels, clients, fac, open, d);
}

}  // namespace

TEST(PhiFl, Tiny1GroundValues) {
  const MuflInstance inst = build_mufl(tiny1(), Rational(3, 2));
  EXPECT_EQ(phi_fl(inst, std::vector<Index>{kX1, kX2}), Cost(Rational(9)));
  EXPECT_EQ(phi_fl(inst, std::vector<Index>{kNotX1, kNotX2}), Cost(Rational(37, 4)));
  EXPECT_EQ(naive_phi_fl(inst, std::vector<Index>{kNotX1, kNotX2}), Cost(Rational(37, 4)));
}

TEST(PhiFl, EmptySetIsInfinite) {
  const MuflInstance inst = build_mufl(tiny1());
  EXPECT_TRUE(phi_fl(inst, std::vector<Index>{}).is_infinite());
}

TEST(PhiFl, IndexOutOfRange) {
  const MuflInstance inst = build_mufl(tiny1());
  EXPECT_THROW(phi_fl(inst, std::vector<Index>{7}), std::out_of_range);
  EXPECT_THROW(inst.solution({0, 0}), std::invalid_argument);
  EXPECT_THROW(inst.solution({4}), std::invalid_argument);
}

TEST(PhiFl, MatchesNaiveSumOnRandomInstances) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const MuflInstance inst = random_metric_instance(rng, 7, 5);
    for (const auto& s : all_subsets(5)) EXPECT_EQ(phi_fl(inst, s), naive_phi_fl(inst, s));
  }
}

TEST(MuflInstance, ConstructorValidates) {
  RationalMatrix d = RationalMatrix::Zero(2, 2);
  EXPECT_THROW(MuflInstance({"a", "b"}, {0, 1}, {}, {}, d), std::invalid_argument);
  EXPECT_THROW(MuflInstance({"a", "b"}, {0, 1}, {0}, {}, d), std::invalid_argument);
  EXPECT_THROW(MuflInstance({"a", "b"}, {0, 2}, {0}, {Rational(1)}, d), std::invalid_argument);
  EXPECT_THROW(MuflInstance({"a", "b", "c"}, {0}, {0}, {Rational(1)}, d), std::invalid_argument);
}

TEST(SwapNeighbors, CountsForFourFacilities) {
  const MuflInstance inst = build_mufl(tiny1());
  const auto nbs = swap_neighbors_mufl(inst, inst.solution({kX1, kX2}));
  EXPECT_EQ(nbs.size(), 8u);
}

TEST(SwapNeighbors, SingleFacilityHasNoNeighbors) {
  RationalMatrix d = RationalMatrix::Zero(1, 1);
  const MuflInstance inst({"a"}, {0}, {0}, {Rational(1)}, d);
  EXPECT_TRUE(swap_neighbors_mufl(inst, inst.solution({0})).empty());
}

// The neighborhood equals a brute-force definition (one open, one close or
// one exchange; never empty) and has the closed-form size.
TEST(SwapNeighbors, MatchesEnumerationAndFormula) {
  std::mt19937_64 rng(5);
  const MuflInstance inst = random_metric_instance(rng, 6, 6);
  const auto subsets = all_subsets(6);
  for (const auto& o : subsets) {
    if (o.empty()) continue;
    std::set<std::vector<Index>> expected;
    for (const auto& p : subsets) {
      if (p.empty()) continue;
      const Index diff = symmetric_difference(o, p);
      if (diff == 1 || (diff == 2 && p.size() == o.size())) expected.insert(p);
    }
    std::set<std::vector<Index>> got;
    const auto nbs = swap_neighbors_mufl(inst, inst.solution(o));
    for (const auto& n : nbs) {
      got.insert(n.members);
      EXPECT_EQ(n.cost, naive_phi_fl(inst, n.members));
    }
    EXPECT_EQ(got.size(), nbs.size()) << "duplicates";
    EXPECT_EQ(got, expected);
    const Index k = o.size(), f = 6;
    EXPECT_EQ(nbs.size(), k * (f - k) + (f - k) + (k > 1 ? k : 0));
  }
}

TEST(SwapNeighbors, ExchangeIsSymmetric) {
  const MuflInstance inst = build_mufl(tiny1());
  for (const auto& o : all_subsets(4)) {
    if (o.empty()) continue;
    for (const auto& n : swap_neighbors_mufl(inst, inst.solution(o))) {
      if (n.size() != o.size()) continue;
      const auto back = swap_neighbors_mufl(inst, n);
      EXPECT_TRUE(std::any_of(back.begin(), back.end(), [&](const SolutionSet& s) { return s.members == o; }));
    }
  }
}

// Opening facility g changes the cost by exactly f(g) minus the service saved.
TEST(PhiFl, OpeningChangesCostByOpeningMinusSaving) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const MuflInstance inst = random_metric_instance(rng, 6, 4);
    for (const auto& o : all_subsets(4)) {
      if (o.empty()) continue;
      for (Index g = 0; g < 4; ++g) {
        if (std::binary_search(o.begin(), o.end(), g)) continue;
        Rational saving{0};
        for (const Index c : inst.clients()) {
          Rational best = inst.distance_to_facility(c, o.front());
          for (const Index f : o) best = std::min(best, inst.distance_to_facility(c, f));
          if (inst.distance_to_facility(c, g) < best) saving += best - inst.distance_to_facility(c, g);
        }
        auto bigger = o;
        bigger.push_back(g);
        std::sort(bigger.begin(), bigger.end());
        EXPECT_EQ(phi_fl(inst, bigger).value() - phi_fl(inst, o).value(), inst.opening_cost()[g] - saving);
      }
    }
  }
}

TEST(ValidateMetric, ReducedInstanceIsMetric) {
  EXPECT_TRUE(validate_metric(build_mufl(tiny1())).ok());
}

TEST(ValidateMetric, ReportsViolatedTriangle) {
  RationalMatrix d(3, 3);
  // a=0, b=1, c=2
  d << Rational(0), Rational(5), Rational(1), Rational(5), Rational(0), Rational(1), Rational(1), Rational(1),
      Rational(0);
  const auto report = validate_metric(d);
  EXPECT_FALSE(report.ok());
  const std::array<Index, 3> acb{0, 2, 1};
  EXPECT_NE(std::find(report.triangle_violations.begin(), report.triangle_violations.end(), acb),
            report.triangle_violations.end());
}

TEST(ValidateMetric, SymmetryDiagonalAndSign) {
  RationalMatrix d(2, 2);
  d << Rational(1), Rational(2), Rational(3), Rational(0);
  auto report = validate_metric(d);
  EXPECT_EQ(report.nonzero_diagonal, std::vector<Index>{0});
  EXPECT_EQ(report.asymmetric_pairs.size(), 1u);
  d << Rational(0), Rational(-1), Rational(-1), Rational(0);
  EXPECT_EQ(validate_metric(d).negative_entries.size(), 2u);
}

TEST(ValidateMetric, OneSiteIsValid) { EXPECT_TRUE(validate_metric(RationalMatrix::Zero(1, 1)).ok()); }
