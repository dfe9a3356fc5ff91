#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "plslab/rational.hpp"
#include "plslab/solution.hpp"
#include "plslab/table.hpp"

namespace plslab {

/// Discrete K-means over an abstract table of squared distances. Optional
/// coordinates are a witness of the table, never used for cost evaluation.
class DkmInstance {
 public:
  DkmInstance() = default;
  /// Throws std::invalid_argument unless the table is square, symmetric with
  /// zero diagonal, and 1 <= K <= |C|.
  DkmInstance(std::vector<std::string> points, Index k, RationalMatrix distance);

  const std::vector<std::string>& points() const noexcept { return points_; }
  Index num_points() const noexcept { return points_.size(); }
  Index k() const noexcept { return k_; }
  const RationalMatrix& distance() const noexcept { return distance_; }

  /// Rows are points; columns are dimensions.
  const std::optional<Eigen::MatrixXd>& coords() const noexcept { return coords_; }
  void set_coords(Eigen::MatrixXd coords);

  /// Solution over point indices with its cost filled in; |members| must be K.
  SolutionSet solution(std::vector<Index> members) const;

  const ScaledTable& scaled() const noexcept { return scaled_; }

 private:
  std::vector<std::string> points_;
  Index k_ = 1;
  RationalMatrix distance_;
  std::optional<Eigen::MatrixXd> coords_;
  ScaledTable scaled_;
};

/// phi_KM from the table. Throws std::invalid_argument unless |means| == K.
Rational phi_km(const DkmInstance& instance, std::span<const Index> means);
inline Rational phi_km(const DkmInstance& instance, const SolutionSet& means) {
  return phi_km(instance, means.members);
}

/// phi_KM recomputed from coordinates in binary64; requires coords().
double phi_km_from_coords(const DkmInstance& instance, std::span<const Index> means);

/// Swap-only neighborhood, chosen index outer and unchosen index inner.
std::vector<SolutionSet> swap_neighbors_dkm(const DkmInstance& instance, const SolutionSet& means);

}  // namespace plslab
