#include "plslab/dkm.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace plslab {

DkmInstance::DkmInstance(std::vector<std::string> points, Index k, RationalMatrix distance)
    : points_(std::move(points)), k_(k), distance_(std::move(distance)) {
  const auto n = static_cast<Eigen::Index>(points_.size());
  if (distance_.rows() != n || distance_.cols() != n)
    throw std::invalid_argument("distance table must be " + std::to_string(n) + "x" + std::to_string(n));
  if (k_ < 1 || k_ > points_.size())
    throw std::invalid_argument("K = " + std::to_string(k_) + " outside [1, " + std::to_string(n) + "]");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (distance_(i, i) != 0) throw std::invalid_argument("nonzero diagonal at point " + std::to_string(i));
    for (Eigen::Index j = 0; j < i; ++j)
      if (distance_(i, j) != distance_(j, i)) throw std::invalid_argument("distance table is not symmetric");
  }
  scaled_ = ScaledTable(distance_, {}, points_.size());
}

void DkmInstance::set_coords(Eigen::MatrixXd coords) {
  if (coords.rows() != static_cast<Eigen::Index>(points_.size()))
    throw std::invalid_argument("need one coordinate row per point");
  coords_ = std::move(coords);
}

SolutionSet DkmInstance::solution(std::vector<Index> members) const {
  SolutionSet s;
  s.members = normalized_members(std::move(members), num_points());
  s.cost = phi_km(*this, s.members);
  return s;
}

Rational phi_km(const DkmInstance& instance, std::span<const Index> means) {
  if (means.size() != instance.k())
    throw std::invalid_argument("|O| = " + std::to_string(means.size()) + " but K = " + std::to_string(instance.k()));
  for (const Index o : means)
    if (o >= instance.num_points()) throw std::out_of_range("point index " + std::to_string(o));
  const ScaledTable& scaled = instance.scaled();
  return scaled.visit([&](const auto& entries) {
    return scaled.unscale(to_integer(sum_of_row_minima(entries.table, means)));
  });
}

double phi_km_from_coords(const DkmInstance& instance, std::span<const Index> means) {
  if (!instance.coords()) throw std::invalid_argument("instance has no coordinates");
  if (means.size() != instance.k()) throw std::invalid_argument("|O| must equal K");
  const Eigen::MatrixXd& x = *instance.coords();
  double total = 0.0;
  for (Eigen::Index p = 0; p < x.rows(); ++p) {
    double best = std::numeric_limits<double>::infinity();
    for (const Index o : means) best = std::min(best, (x.row(p) - x.row(static_cast<Eigen::Index>(o))).squaredNorm());
    total += best;
  }
  return total;
}

std::vector<SolutionSet> swap_neighbors_dkm(const DkmInstance& instance, const SolutionSet& means) {
  std::vector<SolutionSet> out;
  out.reserve(means.size() * (instance.num_points() - means.size()));
  for (const Index o : means.members) {
    for (Index c = 0; c < instance.num_points(); ++c) {
      if (means.contains(c)) continue;
      std::vector<Index> m = means.members;
      *std::find(m.begin(), m.end(), o) = c;
      out.push_back(instance.solution(std::move(m)));
    }
  }
  return out;
}

}  // namespace plslab
