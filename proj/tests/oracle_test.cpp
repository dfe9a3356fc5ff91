#include <random>
#include <set>

#include <gtest/gtest.h>

#include "plslab/errors.hpp"
#include "plslab/oracle.hpp"
#include "plslab/reduction.hpp"
#include "plslab/search.hpp"
#include "test_support.hpp"

using namespace plslab;
using namespace plslab::testing;

namespace {

MuflInstance with_distance(const MuflInstance& base, Index i, Index j, const Rational& v) {
  RationalMatrix d = base.distance();
  d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
  d(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
  return MuflInstance(base.sites(), base.clients(), base.facilities(), base.opening_cost(), d);
}

}  // namespace

TEST(FeasibleCount, Formulas) {
  const SatInstance b = tiny1();
  EXPECT_EQ(feasible_count(b), 4u);
  EXPECT_EQ(feasible_count(build_mufl(b)), 15u);
  EXPECT_EQ(feasible_count(build_dkm(b)), 15u);  // C(6, 2)
}

TEST(EnumerateLocalOptima, Tiny1Mufl) {
  const auto optima = enumerate_local_optima(build_mufl(tiny1()));
  ASSERT_FALSE(optima.empty());
  for (const auto& o : optima) EXPECT_TRUE(is_reasonable(o, 2));
  Cost best = Cost::infinity();
  for (const auto& o : optima) best = std::min(best, o.cost);
  EXPECT_EQ(best, Cost(Rational(9)));
}

TEST(EnumerateLocalOptima, Tiny1Sat) {
  const auto optima = enumerate_local_optima(tiny1());
  EXPECT_NE(std::find(optima.begin(), optima.end(), Assignment::from_bits("11")), optima.end());
  for (const auto& t : optima) EXPECT_EQ(sat_cost(tiny1(), t), 2);
}

TEST(EnumerateLocalOptima, FullKIsSingleton) {
  const DkmInstance base = build_dkm(tiny1());
  const DkmInstance full(base.points(), base.num_points(), base.distance());
  const auto optima = enumerate_local_optima(full);
  ASSERT_EQ(optima.size(), 1u);
  EXPECT_EQ(optima[0].members.size(), 6u);
}

TEST(EnumerateLocalOptima, CapExceeded) {
  EXPECT_THROW(enumerate_local_optima(build_mufl(tiny1()), 10), CapExceeded);
  EXPECT_THROW(enumerate_local_optima(build_dkm(tiny1()), 14), CapExceeded);
  EXPECT_THROW(enumerate_local_optima(tiny1(), 3), CapExceeded);
  EXPECT_THROW(verify_reduction(tiny1(), Rational(3, 2), ReductionTarget::mufl, 10), CapExceeded);
}

// The oracle's bitmask neighborhoods agree with the engine's predicate on
// every feasible solution.
TEST(EnumerateLocalOptima, AgreesWithEnginePredicate) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    const SatInstance b = random_sat_instance(rng, {2, 3, 2, 5, 9});
    const MuflInstance mufl = build_mufl(b);
    const DkmInstance dkm = build_dkm(b);
    std::set<std::vector<Index>> fl, km;
    for (const auto& o : enumerate_local_optima(mufl)) fl.insert(o.members);
    for (const auto& o : enumerate_local_optima(dkm)) km.insert(o.members);
    for (const auto& s : all_subsets(mufl.num_facilities())) {
      if (s.empty()) continue;
      EXPECT_EQ(is_local_optimum(MuflSwapProblem(mufl), mufl.solution(s)), fl.count(s) == 1);
    }
    for (const auto& s : all_subsets(dkm.num_points())) {
      if (s.size() != dkm.k()) continue;
      EXPECT_EQ(is_local_optimum(DkmSwapProblem(dkm), dkm.solution(s)), km.count(s) == 1);
    }
  }
}

TEST(VerifyReduction, Tiny1BothTargets) {
  for (const auto target : {ReductionTarget::mufl, ReductionTarget::dkm}) {
    const OracleReport r = verify_reduction(tiny1(), Rational(3, 2), target);
    EXPECT_TRUE(r.ok()) << summary(r);
    EXPECT_EQ(r.solutions_scanned, 15u);
    EXPECT_EQ(r.reasonable_solutions, 4u);
    EXPECT_EQ(r.reasonable_pairs, 16u);
    EXPECT_EQ(r.local_optima, r.reasonable_local_optima);
  }
}

TEST(VerifyReduction, PerturbedDistanceIsCaught) {
  const SatInstance b = tiny1();
  const Rational c(3, 2);
  const MuflInstance bad = with_distance(build_mufl(b, c), kX1, kB1, Rational(8, 5));
  const OracleReport r = verify_reduction(b, c, bad);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(),
                          [](const ClaimViolation& v) { return v.claim == claims::kClosedFormCost; }));
}

TEST(VerifyReduction, CheapOpeningBreaksReasonableness) {
  // with free facilities every literal is worth opening: local optima are not reasonable
  const SatInstance b = tiny1();
  const MuflInstance base = build_mufl(b);
  const MuflInstance cheap(base.sites(), base.clients(), base.facilities(),
                           std::vector<Rational>(4, Rational(0)), base.distance());
  const OracleReport r = verify_reduction(b, Rational(3, 2), cheap);
  EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(),
                          [](const ClaimViolation& v) { return v.claim == claims::kLocalOptimaReasonable; }));
}

TEST(VerifyReduction, ShapeMismatchRejected) {
  const MuflInstance other = build_mufl(parse_wcnf("p wcnf 3 2\n1 1 2 0\n1 2 3 0\n"));
  EXPECT_THROW(verify_reduction(tiny1(), Rational(3, 2), other), std::invalid_argument);
}

TEST(RandomSatInstance, DeterministicAndInRange) {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 50; ++i) {
    const SatInstance x = random_sat_instance(a);
    const SatInstance y = random_sat_instance(b);
    EXPECT_EQ(serialize_wcnf(x), serialize_wcnf(y));
    EXPECT_GE(x.num_variables(), 2u);
    EXPECT_LE(x.num_variables(), 5u);
    EXPECT_GE(x.num_clauses(), 2u);
    EXPECT_LE(x.num_clauses(), 8u);
    EXPECT_LE(x.max_weight(), 9);
  }
}

TEST(UniformBelow, CoversRange) {
  std::mt19937_64 rng(0);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto v = uniform_below(rng, 7);
    EXPECT_LT(v, 7u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_THROW(uniform_below(rng, 0), std::invalid_argument);
}
