#include "mirrorbench/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "mirrorbench/error.hpp"
#include "mirrorbench/rng.hpp"

namespace mirrorbench {

namespace {

std::vector<double> inverse_sqrt_degrees(const Graph& g) {
  std::vector<double> out(g.node_count(), 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto d = g.degree(v);
    if (d > 0) out[v] = 1.0 / std::sqrt(static_cast<double>(d));
  }
  return out;
}

Eigen::MatrixXd dense_laplacian(const Graph& g, LaplacianKind kind) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  if (kind == LaplacianKind::combinatorial) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
      L(u, u) = static_cast<double>(g.degree(u));
      for (NodeId v : g.neighbors(u)) L(u, v) = -1.0;
    }
  } else {
    // Isolated nodes keep an all-zero row.
    const auto inv = inverse_sqrt_degrees(g);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (g.degree(u) == 0) continue;
      L(u, u) = 1.0;
      for (NodeId v : g.neighbors(u)) L(u, v) = -inv[u] * inv[v];
    }
  }
  return L;
}

double spectral_upper_bound(const Graph& g, LaplacianKind kind) {
  if (kind == LaplacianKind::normalized) return 2.0;
  std::size_t max_degree = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
  return 2.0 * static_cast<double>(max_degree);
}

}  // namespace

void laplacian_apply(const Graph& g, LaplacianKind kind, const std::vector<double>& x,
                     std::vector<double>& y) {
  const std::size_t n = g.node_count();
  y.assign(n, 0.0);
  if (kind == LaplacianKind::combinatorial) {
    for (NodeId u = 0; u < n; ++u) {
      double acc = static_cast<double>(g.degree(u)) * x[u];
      for (NodeId v : g.neighbors(u)) acc -= x[v];
      y[u] = acc;
    }
    return;
  }
  const auto inv = inverse_sqrt_degrees(g);
  for (NodeId u = 0; u < n; ++u) {
    if (g.degree(u) == 0) continue;
    double acc = 0.0;
    for (NodeId v : g.neighbors(u)) acc += inv[v] * x[v];
    y[u] = x[u] - inv[u] * acc;
  }
}

SpectrumResult laplacian_spectrum(const Graph& g, LaplacianKind kind, std::size_t dense_limit) {
  SpectrumResult result;
  result.kind = kind;
  const std::size_t n = g.node_count();
  if (n > dense_limit) {
    throw Error(ErrorCode::size_limit,
                "graph has " + std::to_string(n) + " nodes, above the dense eigensolver limit of " +
                    std::to_string(dense_limit) + "; use the truncated spectrum");
  }
  if (n == 0) return result;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_laplacian(g, kind),
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::fit_failed, "symmetric eigensolver did not converge");
  }
  const auto& values = solver.eigenvalues();
  result.eigenvalues.assign(values.data(), values.data() + values.size());
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end(), std::greater<>());
  return result;
}

SpectrumResult laplacian_spectrum_truncated(const Graph& g, LaplacianKind kind, std::size_t rank,
                                            SpectrumEnd end) {
  SpectrumResult result;
  result.kind = kind;
  result.truncated = true;
  const std::size_t n = g.node_count();
  if (n == 0 || rank == 0) return result;
  rank = std::min(rank, n);

  // Lanczos on L (largest end) or on shift·I − L (smallest end).
  const double shift = spectral_upper_bound(g, kind);
  const bool flip = end == SpectrumEnd::smallest;
  auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
    laplacian_apply(g, kind, x, y);
    if (flip) {
      for (std::size_t i = 0; i < n; ++i) y[i] = shift * x[i] - y[i];
    }
  };

  const std::size_t steps = std::min(n, std::max<std::size_t>(2 * rank, rank + 100));
  Eigen::MatrixXd basis(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(steps));
  std::vector<double> alpha, beta;
  alpha.reserve(steps);
  beta.reserve(steps);

  Rng rng(RngSeed{derive_seed(n, g.edge_count())});
  Eigen::VectorXd q(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < q.size(); ++i) q(i) = rng.uniform() - 0.5;
  q.normalize();

  std::vector<double> x(n), y(n);
  std::size_t built = 0;
  for (std::size_t j = 0; j < steps; ++j) {
    basis.col(static_cast<Eigen::Index>(j)) = q;
    ++built;
    for (std::size_t i = 0; i < n; ++i) x[i] = q(static_cast<Eigen::Index>(i));
    apply(x, y);
    Eigen::VectorXd w = Eigen::Map<Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(n));
    const double a = q.dot(w);
    alpha.push_back(a);
    // Full reorthogonalization, applied twice.
    const auto active = basis.leftCols(static_cast<Eigen::Index>(built));
    for (int pass = 0; pass < 2; ++pass) w -= active * (active.transpose() * w);
    const double b = w.norm();
    if (j + 1 == steps || b < 1e-10) break;
    beta.push_back(b);
    q = w / b;
  }

  const auto k = static_cast<Eigen::Index>(alpha.size());
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    T(i, i) = alpha[static_cast<std::size_t>(i)];
    if (i + 1 < k) {
      T(i, i + 1) = beta[static_cast<std::size_t>(i)];
      T(i + 1, i) = beta[static_cast<std::size_t>(i)];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(T, Eigen::EigenvaluesOnly);
  std::vector<double> ritz(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
  std::sort(ritz.begin(), ritz.end(), std::greater<>());
  ritz.resize(std::min<std::size_t>(rank, ritz.size()));
  if (flip) {
    for (double& v : ritz) v = shift - v;
    std::sort(ritz.begin(), ritz.end(), std::greater<>());
  }
  result.eigenvalues = std::move(ritz);
  return result;
}

}  // namespace mirrorbench
