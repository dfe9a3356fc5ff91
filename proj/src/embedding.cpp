#include "plslab/embedding.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "plslab/errors.hpp"

namespace plslab {

namespace {

void check_table(const Eigen::MatrixXd& d) {
  if (d.rows() != d.cols()) throw std::invalid_argument("distance table must be square");
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    if (d(i, i) != 0.0) throw std::invalid_argument("distance table has a nonzero diagonal");
    for (Eigen::Index j = 0; j < i; ++j)
      if (d(i, j) != d(j, i)) throw std::invalid_argument("distance table is not symmetric");
  }
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> centered_gram_spectrum(const Eigen::MatrixXd& d, double tol) {
  check_table(d);
  const Eigen::Index n = d.rows();
  const Eigen::MatrixXd centering =
      Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  const Eigen::MatrixXd gram = -0.5 * centering * d * centering;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success) throw EmbeddingError("eigendecomposition failed");
  if (n > 0 && solver.eigenvalues()(0) < -tol)
    throw EmbeddingError("centered Gram matrix has eigenvalue " + std::to_string(solver.eigenvalues()(0)) +
                         " < -tol; table is not squared-Euclidean");
  return solver;
}

}  // namespace

EmbeddedPoints embed_squared_euclidean(const Eigen::MatrixXd& d, double tol) {
  EmbeddedPoints out;
  out.tolerance = tol;
  if (d.rows() == 0) {
    out.coords.resize(0, 0);
    return out;
  }
  const auto solver = centered_gram_spectrum(d, tol);
  const Eigen::VectorXd ascending = solver.eigenvalues();
  const Eigen::Index n = d.rows();
  out.spectrum = ascending.reverse();

  const auto rank = static_cast<Eigen::Index>((ascending.array() > tol).count());
  // eigenvalues ascend, so the kept pairs are the trailing ones; reverse them
  out.coords.resize(n, rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    const Eigen::Index src = n - 1 - k;
    out.coords.col(k) = solver.eigenvectors().col(src) * std::sqrt(ascending(src));
  }
  out.reconstruction_error = (squared_distances(out.coords) - d).cwiseAbs().maxCoeff();
  if (out.reconstruction_error > tol)
    throw EmbeddingError("reconstruction error " + std::to_string(out.reconstruction_error) + " exceeds tolerance");
  return out;
}

EmbeddedPoints embed_squared_euclidean(const RationalMatrix& d, double tol) {
  return embed_squared_euclidean(to_double(d), tol);
}

Index min_embedding_dimension(const Eigen::MatrixXd& d, double tol) {
  if (d.rows() == 0) return 0;
  const auto solver = centered_gram_spectrum(d, tol);
  return static_cast<Index>((solver.eigenvalues().array() > tol).count());
}

double min_distance_gap(const RationalMatrix& d) {
  std::set<Rational> values;
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j) values.insert(d(i, j));
  double gap = std::numeric_limits<double>::infinity();
  for (auto it = values.begin(); it != values.end() && std::next(it) != values.end(); ++it)
    gap = std::min(gap, Rational(*std::next(it) - *it).convert_to<double>());
  return gap;
}

}  // namespace plslab
