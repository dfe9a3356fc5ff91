#pragma once

#include <cmath>

#include <Eigen/Core>

#include "plslab/table.hpp"

namespace plslab {

inline constexpr double kDefaultEmbeddingTolerance = 1e-9;

/// Points whose pairwise squared Euclidean distances reproduce a table.
struct EmbeddedPoints {
  Eigen::MatrixXd coords;  // one row per point
  double tolerance = kDefaultEmbeddingTolerance;
  double reconstruction_error = 0.0;  // max |‖p_i - p_j‖² - d(i, j)|
  Eigen::VectorXd spectrum;           // centered Gram eigenvalues, descending

  Index dimension() const noexcept { return static_cast<Index>(coords.cols()); }
};

/// Classical double-centering embedding: G = -1/2 J d J, coordinates from the
/// eigenpairs of G above `tol`. Throws EmbeddingError when G has an
/// eigenvalue below -tol or the reconstruction misses the table by more than
/// tol; std::invalid_argument for a non-square, asymmetric or nonzero-diagonal
/// table.
EmbeddedPoints embed_squared_euclidean(const Eigen::MatrixXd& d, double tol = kDefaultEmbeddingTolerance);
EmbeddedPoints embed_squared_euclidean(const RationalMatrix& d, double tol = kDefaultEmbeddingTolerance);

/// Numerical rank of the centered Gram matrix; same errors as the embedding.
Index min_embedding_dimension(const Eigen::MatrixXd& d, double tol = kDefaultEmbeddingTolerance);

/// Pairwise squared Euclidean distances between the rows of `coords`.
template <typename Derived>
Matrix<typename Derived::Scalar> squared_distances(const Eigen::MatrixBase<Derived>& coords) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = coords.rows();
  Matrix<Scalar> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i, i) = Scalar(0);
    for (Eigen::Index j = 0; j < i; ++j) out(i, j) = out(j, i) = (coords.row(i) - coords.row(j)).squaredNorm();
  }
  return out;
}

/// D + 1 points in R^D with every pairwise squared distance equal to
/// `target`: the unit vectors e_1..e_D plus the point with all coordinates
/// (sqrt(D + 1) + 1) / D, scaled by sqrt(target / 2).
template <typename Scalar = double>
Matrix<Scalar> regular_simplex(Index dimension, Scalar target) {
  using std::sqrt;
  const auto D = static_cast<Eigen::Index>(dimension);
  Matrix<Scalar> points = Matrix<Scalar>::Zero(D + 1, D);
  points.topRows(D).setIdentity();
  points.row(D).setConstant((sqrt(Scalar(D + 1)) + Scalar(1)) / Scalar(D));
  return points * sqrt(target / Scalar(2));
}

/// Squared distance from each vertex of a regular simplex on D + 1 points
/// with pairwise squared distance c to its centroid: cD/(D+1)^2 (1 + (D-1)/2).
template <typename Scalar = double>
Scalar centroid_distance(Index dimension, Scalar c) {
  const Scalar D(static_cast<double>(dimension));
  return c * D / ((D + 1) * (D + 1)) * (Scalar(1) + (D - 1) / Scalar(2));
}

/// Smallest positive difference between two distinct entries of the table;
/// +inf when all entries are equal.
double min_distance_gap(const RationalMatrix& d);

}  // namespace plslab
