#pragma once

#include <random>
#include <span>
#include <vector>

#include "plslab/dkm.hpp"
#include "plslab/mufl.hpp"
#include "plslab/sat.hpp"

namespace plslab::testing {

/// tiny1: b1 = (x1 v x2, 1), b2 = (~x1 v x2, 1).
inline SatInstance tiny1() { return parse_wcnf("p wcnf 2 2\n1 1 2 0\n1 -1 2 0\n"); }

inline const char* kTiny1Wcnf = "p wcnf 2 2\n1 1 2 0\n1 -1 2 0\n";

// Site / facility indices in reduced instances.
inline constexpr Index kX1 = 0, kNotX1 = 1, kX2 = 2, kNotX2 = 3, kB1 = 4, kB2 = 5;

/// phi_FL summed directly in rationals from the distance table.
inline Cost naive_phi_fl(const MuflInstance& inst, std::span<const Index> open) {
  if (open.empty()) return Cost::infinity();
  Rational total{0};
  for (const Index c : inst.clients()) {
    Rational best = inst.distance_to_facility(c, open.front());
    for (const Index f : open)
      if (inst.distance_to_facility(c, f) < best) best = inst.distance_to_facility(c, f);
    total += best;
  }
  for (const Index f : open) total += inst.opening_cost()[f];
  return total;
}

inline Rational naive_phi_km(const DkmInstance& inst, std::span<const Index> means) {
  Rational total{0};
  for (Index p = 0; p < inst.num_points(); ++p) {
    Rational best = inst.distance()(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(means.front()));
    for (const Index o : means) {
      const Rational& v = inst.distance()(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(o));
      if (v < best) best = v;
    }
    total += best;
  }
  return total;
}

/// All subsets of {0..n-1} as sorted index lists.
inline std::vector<std::vector<Index>> all_subsets(Index n) {
  std::vector<std::vector<Index>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::vector<Index> s;
    for (Index i = 0; i < n; ++i)
      if ((m >> i) & 1U) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

/// Size of the symmetric difference of two sorted index lists.
inline Index symmetric_difference(const std::vector<Index>& a, const std::vector<Index>& b) {
  Index d = 0;
  for (const Index x : a) d += !std::binary_search(b.begin(), b.end(), x);
  for (const Index x : b) d += !std::binary_search(a.begin(), a.end(), x);
  return d;
}

}  // namespace plslab::testing
