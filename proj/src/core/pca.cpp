#include <Eigen/Dense>
#include <cmath>

#include "mirrorbench/error.hpp"
#include "mirrorbench/metrics.hpp"

namespace mirrorbench {

Pca2d pca_2d(const std::vector<std::vector<double>>& vectors) {
  if (vectors.size() < 2) throw Error(ErrorCode::usage, "PCA needs at least two vectors");
  const std::size_t dim = vectors.front().size();
  if (dim < 2) throw Error(ErrorCode::usage, "PCA needs vectors of dimension at least two");
  const auto rows = static_cast<Eigen::Index>(vectors.size());
  const auto cols = static_cast<Eigen::Index>(dim);

  Eigen::MatrixXd X(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& v = vectors[static_cast<std::size_t>(i)];
    if (v.size() != dim) throw Error(ErrorCode::usage, "PCA vectors differ in length");
    for (Eigen::Index j = 0; j < cols; ++j) X(i, j) = v[static_cast<std::size_t>(j)];
  }
  const Eigen::RowVectorXd mean = X.colwise().mean();
  X.rowwise() -= mean;
  const Eigen::MatrixXd cov = (X.transpose() * X) / static_cast<double>(rows - 1);

  Pca2d out;
  out.coordinates.assign(vectors.size(), {0.0, 0.0});
  if (cov.trace() <= 1e-300) {
    out.zero_variance = true;
    out.weights = {std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0)};
    return out;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  // Eigenvalues come back ascending.
  for (int axis = 0; axis < 2; ++axis) {
    const Eigen::Index col = cols - 1 - axis;
    Eigen::VectorXd w = solver.eigenvectors().col(col);
    Eigen::Index arg = 0;
    for (Eigen::Index j = 1; j < cols; ++j) {
      if (std::abs(w(j)) > std::abs(w(arg)) + 1e-12) arg = j;
    }
    if (w(arg) < 0.0) w = -w;
    out.explained_variance[static_cast<std::size_t>(axis)] = std::max(0.0, solver.eigenvalues()(col));
    out.weights[static_cast<std::size_t>(axis)].assign(w.data(), w.data() + w.size());
    const Eigen::VectorXd proj = X * w;
    for (Eigen::Index i = 0; i < rows; ++i) {
      out.coordinates[static_cast<std::size_t>(i)][static_cast<std::size_t>(axis)] = proj(i);
    }
  }
  return out;
}

}  // namespace mirrorbench
