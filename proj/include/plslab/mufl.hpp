#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "plslab/rational.hpp"
#include "plslab/solution.hpp"
#include "plslab/table.hpp"

namespace plslab {

/// Metric uncapacitated facility location over a set of labelled sites.
/// Clients and facilities are index lists into the sites; the distance table
/// is indexed by site pairs.
class MuflInstance {
 public:
  MuflInstance() = default;
  /// Throws std::invalid_argument on shape mismatches, out-of-range or
  /// repeated indices, or an empty facility list. Metric axioms are not
  /// enforced here; see validate_metric.
  MuflInstance(std::vector<std::string> sites, std::vector<Index> clients, std::vector<Index> facilities,
               std::vector<Rational> opening_cost, RationalMatrix distance);

  const std::vector<std::string>& sites() const noexcept { return sites_; }
  const std::vector<Index>& clients() const noexcept { return clients_; }
  const std::vector<Index>& facilities() const noexcept { return facilities_; }
  const std::vector<Rational>& opening_cost() const noexcept { return opening_cost_; }
  const RationalMatrix& distance() const noexcept { return distance_; }

  Index num_sites() const noexcept { return sites_.size(); }
  Index num_facilities() const noexcept { return facilities_.size(); }

  /// Distance between a site and facility `f`'s site.
  const Rational& distance_to_facility(Index site, Index f) const {
    return distance_(static_cast<Eigen::Index>(site), static_cast<Eigen::Index>(facilities_.at(f)));
  }

  /// Solution over facility indices with its cost filled in.
  SolutionSet solution(std::vector<Index> members) const;

  const ScaledTable& scaled() const noexcept { return scaled_; }

 private:
  std::vector<std::string> sites_;
  std::vector<Index> clients_;
  std::vector<Index> facilities_;
  std::vector<Rational> opening_cost_;
  RationalMatrix distance_;
  // client-by-facility service table plus scaled opening costs
  ScaledTable scaled_;
};

/// phi_FL: service cost of every client to its nearest open facility plus
/// opening costs. Infinite for the empty set.
Cost phi_fl(const MuflInstance& instance, std::span<const Index> open);
inline Cost phi_fl(const MuflInstance& instance, const SolutionSet& open) { return phi_fl(instance, open.members); }

/// Single-swap neighborhood: closes (only while more than one facility is
/// open), then opens, then swaps (open index outer, closed index inner).
std::vector<SolutionSet> swap_neighbors_mufl(const MuflInstance& instance, const SolutionSet& open);

struct MetricReport {
  /// (p, q, r) with d(p, r) > d(p, q) + d(q, r), as site indices.
  std::vector<std::array<Index, 3>> triangle_violations;
  std::vector<std::pair<Index, Index>> asymmetric_pairs;
  std::vector<Index> nonzero_diagonal;
  std::vector<std::pair<Index, Index>> negative_entries;

  bool ok() const noexcept {
    return triangle_violations.empty() && asymmetric_pairs.empty() && nonzero_diagonal.empty() &&
           negative_entries.empty();
  }
};

MetricReport validate_metric(const RationalMatrix& distance);
inline MetricReport validate_metric(const MuflInstance& instance) { return validate_metric(instance.distance()); }

}  // namespace plslab
