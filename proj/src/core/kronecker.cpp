#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>

#include "mirrorbench/error.hpp"
#include "mirrorbench/models.hpp"

namespace mirrorbench {

namespace {

constexpr double kLo = 0.001;
constexpr double kHi = 0.999;

using Point = std::array<double, 3>;

Point clamp_to_box(Point p) {
  for (double& x : p) x = std::clamp(x, kLo, kHi);
  return p;
}

struct Targets {
  double log_edges;
  double log_wedges;
  double log_triangles;
};

double objective(const Point& p, int k, const Targets& t) {
  const auto e = kronecker_expected_moments(p[0], p[1], p[2], k);
  constexpr double tiny = 1e-300;
  const double r1 = std::log(std::max(e.edges, tiny)) - t.log_edges;
  const double r2 = std::log(std::max(e.wedges, tiny)) - t.log_wedges;
  const double r3 = std::log(std::max(e.triangles, tiny)) - t.log_triangles;
  return r1 * r1 + r2 * r2 + r3 * r3;
}

struct Minimum {
  Point point;
  double value;
};

// Nelder–Mead with every trial point projected onto the box.
Minimum nelder_mead(Point start, int k, const Targets& t) {
  constexpr double tol = 1e-6;
  constexpr int max_evals = 4000;
  std::array<Point, 4> simplex;
  std::array<double, 4> f{};
  simplex[0] = clamp_to_box(start);
  for (int d = 0; d < 3; ++d) {
    Point p = simplex[0];
    p[d] += p[d] < 0.5 ? 0.1 : -0.1;
    simplex[d + 1] = clamp_to_box(p);
  }
  int evals = 0;
  auto eval = [&](const Point& p) {
    ++evals;
    return objective(p, k, t);
  };
  for (int i = 0; i < 4; ++i) f[i] = eval(simplex[i]);

  std::array<int, 4> order{0, 1, 2, 3};
  while (evals < max_evals) {
    std::sort(order.begin(), order.end(), [&](int x, int y) { return f[x] < f[y] || (f[x] == f[y] && x < y); });
    const int best = order[0], worst = order[3], second = order[2];
    double size = 0.0;
    for (int i = 1; i < 4; ++i) {
      for (int d = 0; d < 3; ++d) size = std::max(size, std::abs(simplex[order[i]][d] - simplex[best][d]));
    }
    if (std::abs(f[worst] - f[best]) <= tol * (1.0 + std::abs(f[best])) && size <= tol) break;

    Point centroid{0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
      for (int d = 0; d < 3; ++d) centroid[d] += simplex[order[i]][d] / 3.0;
    }
    auto along = [&](double coef) {
      Point p;
      for (int d = 0; d < 3; ++d) p[d] = centroid[d] + coef * (simplex[worst][d] - centroid[d]);
      return clamp_to_box(p);
    };

    const Point reflected = along(-1.0);
    const double fr = eval(reflected);
    if (fr < f[best]) {
      const Point expanded = along(-2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        f[worst] = fe;
      } else {
        simplex[worst] = reflected;
        f[worst] = fr;
      }
      continue;
    }
    if (fr < f[second]) {
      simplex[worst] = reflected;
      f[worst] = fr;
      continue;
    }
    const bool outside = fr < f[worst];
    const Point contracted = along(outside ? -0.5 : 0.5);
    const double fc = eval(contracted);
    if (fc < (outside ? fr : f[worst])) {
      simplex[worst] = contracted;
      f[worst] = fc;
      continue;
    }
    for (int i = 1; i < 4; ++i) {
      const int idx = order[i];
      for (int d = 0; d < 3; ++d) {
        simplex[idx][d] = simplex[best][d] + 0.5 * (simplex[idx][d] - simplex[best][d]);
      }
      f[idx] = eval(simplex[idx]);
    }
  }
  int best = 0;
  for (int i = 1; i < 4; ++i) {
    if (f[i] < f[best]) best = i;
  }
  return {simplex[best], f[best]};
}

// Twenty starting initiators with a >= c; swapping a and c describes the
// same model under bit-complemented node ids.
std::array<Point, 20> restart_lattice() {
  std::array<Point, 20> starts{};
  std::size_t i = 0;
  constexpr std::array<double, 3> levels{0.2, 0.5, 0.8};
  for (double a : levels) {
    for (double c : levels) {
      if (c > a) continue;
      for (double b : levels) starts[i++] = {a, b, c};
    }
  }
  starts[i++] = {0.95, 0.6, 0.3};
  starts[i++] = {0.99, 0.5, 0.1};
  return starts;
}

}  // namespace

KroneckerMoments kronecker_expected_moments(double a, double b, double c, int k) {
  const double kk = static_cast<double>(k);
  const auto pw = [kk](double x) { return std::pow(x, kk); };
  const double sum = a + 2.0 * b + c;
  const double diag = a + c;
  const double row_a = a + b;
  const double row_c = b + c;
  // Σ_l r_l², Σ_l r_l p_ll, Σ p_ll², Σ p_ij² over the k-fold product.
  const double row_sq = pw(row_a * row_a + row_c * row_c);
  const double row_diag = pw(a * row_a + c * row_c);
  const double diag_sq = pw(a * a + c * c);
  const double all_sq = pw(a * a + 2.0 * b * b + c * c);
  // tr(P³), Σ_i p_ii Σ_j p_ij², Σ p_ii³.
  const double trace_cube = pw(a * a * a + 3.0 * b * b * (a + c) + c * c * c);
  const double diag_row_sq = pw(a * (a * a + b * b) + c * (b * b + c * c));
  const double diag_cube = pw(a * a * a + c * c * c);

  KroneckerMoments m;
  m.edges = 0.5 * (pw(sum) - pw(diag));
  m.wedges = std::max(0.0, 0.5 * (row_sq - 2.0 * row_diag + 2.0 * diag_sq - all_sq));
  m.triangles = std::max(0.0, (trace_cube - 3.0 * diag_row_sq + 2.0 * diag_cube) / 6.0);
  return m;
}

KroneckerParams fit_kronecker(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 4 || g.edge_count() == 0) {
    throw Error(ErrorCode::degenerate_input, "Kronecker fit needs at least 4 nodes and one edge");
  }
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;

  double wedges = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    const double d = static_cast<double>(g.degree(v));
    wedges += d * (d - 1.0) / 2.0;
  }
  const Targets targets{
      std::log(std::max(1.0, static_cast<double>(g.edge_count()))),
      std::log(std::max(1.0, wedges)),
      std::log(std::max(1.0, static_cast<double>(count_triangles(g)))),
  };

  Minimum best{{0.0, 0.0, 0.0}, std::numeric_limits<double>::infinity()};
  for (const Point& start : restart_lattice()) {
    const Minimum local = nelder_mead(start, k, targets);
    if (std::isfinite(local.value) && local.value < best.value) best = local;
  }
  if (!std::isfinite(best.value)) {
    throw Error(ErrorCode::fit_failed, "Kronecker moment fit failed from every starting point");
  }
  KroneckerParams params{best.point[0], best.point[1], best.point[2], k};
  if (params.c > params.a) std::swap(params.a, params.c);
  return params;
}

Graph generate_kronecker(const KroneckerParams& params, RngSeed seed) {
  const int k = params.k;
  if (k < 1 || k > 30) throw Error(ErrorCode::usage, "Kronecker power must lie in [1, 30]");
  const std::array<double, 3> entries{params.a, params.b, params.c};
  for (double x : entries) {
    if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::usage, "Kronecker initiator entries must lie in [0, 1]");
  }
  const std::size_t n = std::size_t{1} << k;
  Rng rng(seed);
  std::vector<Edge> edges;

  if (k <= kKroneckerExactMaxPower) {
    // P_ij = a^(#00 levels) · b^(#mixed levels) · c^(#11 levels).
    std::vector<double> pow_a(k + 1), pow_b(k + 1), pow_c(k + 1);
    for (int i = 0; i <= k; ++i) {
      pow_a[i] = std::pow(params.a, i);
      pow_b[i] = std::pow(params.b, i);
      pow_c[i] = std::pow(params.c, i);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const int ones = std::popcount(i & j);
        const int mixed = std::popcount(i ^ j);
        const double p = pow_a[k - ones - mixed] * pow_b[mixed] * pow_c[ones];
        if (rng.bernoulli(p)) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
    return Graph::from_dense_edges(n, edges);
  }

  // Dart throwing: S^k ordered darts, each descending one quadrant per level.
  // Only darts above the diagonal are kept, so the expected edge count
  // matches the exact mode up to collisions.
  const double sum = params.a + 2.0 * params.b + params.c;
  if (sum <= 0.0) return Graph::from_dense_edges(n, {});
  const auto darts = static_cast<std::uint64_t>(std::llround(std::pow(sum, k)));
  const double cut_a = params.a / sum;
  const double cut_ab = (params.a + params.b) / sum;
  const double cut_abb = (params.a + 2.0 * params.b) / sum;
  edges.reserve(darts / 2 + 1);
  for (std::uint64_t d = 0; d < darts; ++d) {
    std::size_t row = 0, col = 0;
    for (int level = 0; level < k; ++level) {
      const double u = rng.uniform();
      const std::size_t bit = std::size_t{1} << level;
      if (u < cut_a) {
      } else if (u < cut_ab) {
        col |= bit;
      } else if (u < cut_abb) {
        row |= bit;
      } else {
        row |= bit;
        col |= bit;
      }
    }
    if (row < col) edges.emplace_back(static_cast<NodeId>(row), static_cast<NodeId>(col));
  }
  return Graph::from_dense_edges(n, edges);
}

}  // namespace mirrorbench
