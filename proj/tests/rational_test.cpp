#include <random>

#include <gtest/gtest.h>

#include "plslab/errors.hpp"
#include "plslab/rational.hpp"
#include "plslab/table.hpp"

using namespace plslab;

TEST(Rational, ParseAndPrintReduced) {
  EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
  EXPECT_EQ(to_string(parse_rational("-6/3")), "-2");
  EXPECT_EQ(to_string(parse_rational("3/-6")), "-1/2");
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_EQ(to_string(parse_rational("123456789012345678901234567890/3")), "41152263004115226300411522630");
}

TEST(Rational, RejectsMalformed) {
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational("1/"), ParseError);
  EXPECT_THROW(parse_rational("a/2"), ParseError);
}

TEST(Cost, InfinityOrdersAboveEverything) {
  const Cost inf = Cost::infinity();
  EXPECT_TRUE(Cost(Rational(1000000)) < inf);
  EXPECT_FALSE(inf < inf);
  EXPECT_EQ(inf, Cost::infinity());
  EXPECT_EQ(to_string(inf), "inf");
  EXPECT_EQ(to_string(Cost(Rational(37, 4))), "37/4");
}

namespace {

Rational naive_sum_of_minima(const RationalMatrix& t, const std::vector<Index>& cols) {
  Rational total{0};
  for (Eigen::Index r = 0; r < t.rows(); ++r) {
    Rational best = t(r, static_cast<Eigen::Index>(cols.front()));
    for (const Index c : cols) best = std::min(best, Rational(t(r, static_cast<Eigen::Index>(c))));
    total += best;
  }
  return total;
}

}  // namespace

// Property: both integer representations agree with a plain rational sum.
TEST(ScaledTable, MatchesRationalSumsInBothRepresentations) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const bool huge = trial % 2 == 1;
    RationalMatrix t(4, 3);
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 3; ++j) {
        Integer num(static_cast<long long>(rng() % 1000));
        if (huge) num *= Integer("1000000000000000000000");
        t(i, j) = Rational(num, Integer(static_cast<long long>(1 + rng() % 50)));
      }
    const ScaledTable scaled(t, {}, 4);
    EXPECT_EQ(scaled.is_small(), !huge);
    const std::vector<Index> cols{0, 2};
    const Rational fast = scaled.visit([&](const auto& e) {
      return scaled.unscale(to_integer(sum_of_row_minima(e.table, std::span<const Index>(cols))));
    });
    EXPECT_EQ(fast, naive_sum_of_minima(t, cols));
  }
}
