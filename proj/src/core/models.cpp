#include "mirrorbench/models.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

#include "mirrorbench/error.hpp"
#include "sampling.hpp"

namespace mirrorbench {

using detail::sample_pairs_between;
using detail::sample_pairs_within;

std::string_view cli_name(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::er: return "er";
    case ModelKind::chung_lu: return "chung-lu";
    case ModelKind::sbm: return "sbm";
    case ModelKind::kronecker: return "kron";
    case ModelKind::bter: return "bter";
  }
  return "?";
}

std::string_view json_name(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::er: return "er";
    case ModelKind::chung_lu: return "chung_lu";
    case ModelKind::sbm: return "sbm";
    case ModelKind::kronecker: return "kronecker";
    case ModelKind::bter: return "bter";
  }
  return "?";
}

std::optional<ModelKind> parse_model_kind(std::string_view name) noexcept {
  for (auto kind : {ModelKind::er, ModelKind::chung_lu, ModelKind::sbm, ModelKind::kronecker,
                    ModelKind::bter}) {
    if (name == cli_name(kind) || name == json_name(kind)) return kind;
  }
  return std::nullopt;
}

ModelKind kind_of(const ModelParams& params) noexcept {
  return static_cast<ModelKind>(params.index());
}

// ---------------------------------------------------------------------------
// Erdős–Rényi
// ---------------------------------------------------------------------------

ErParams fit_er(const Graph& g) {
  if (g.node_count() < 2) throw Error(ErrorCode::degenerate_input, "ER fit needs at least 2 nodes");
  return {g.node_count(), g.edge_count()};
}

Graph generate_er(const ErParams& params, RngSeed seed) {
  const std::uint64_t n = params.n;
  if (n >= 2 && params.m > n * (n - 1) / 2) {
    throw Error(ErrorCode::usage, "ER edge count exceeds the number of node pairs");
  }
  const double p = n < 2 ? 0.0 : 2.0 * static_cast<double>(params.m) /
                                     (static_cast<double>(n) * static_cast<double>(n - 1));
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(params.m + params.m / 8 + 16);
  sample_pairs_within(n, p, rng, [&](std::uint64_t i, std::uint64_t j) {
    edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
  });
  return Graph::from_dense_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Chung-Lu
// ---------------------------------------------------------------------------

ChungLuParams fit_chung_lu(const Graph& g) {
  if (g.edge_count() == 0) throw Error(ErrorCode::degenerate_input, "Chung-Lu fit needs at least one edge");
  ChungLuParams params;
  params.weights.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) params.weights.push_back(static_cast<double>(g.degree(v)));
  return params;
}

double chung_lu_expected_edges(const std::vector<double>& weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (total <= 0.0) return 0.0;
  double expected = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = i + 1; j < weights.size(); ++j) {
      expected += std::min(1.0, weights[i] * weights[j] / total);
    }
  }
  return expected;
}

Graph generate_chung_lu(const ChungLuParams& params, RngSeed seed) {
  const auto& w = params.weights;
  const std::size_t n = w.size();
  for (double x : w) {
    if (!(x >= 0.0)) throw Error(ErrorCode::usage, "Chung-Lu weights must be non-negative");
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (total <= 0.0) return Graph::from_dense_edges(n, {});

  // Miller–Hagberg: visit candidates in descending weight so that p_uv is
  // non-increasing along each row, then thin a geometric proposal stream.
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId x, NodeId y) { return w[x] > w[y]; });

  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double wu = w[order[i]];
    if (wu <= 0.0) break;
    std::size_t j = i + 1;
    double p = std::min(1.0, wu * w[order[j]] / total);
    while (j < n && p > 0.0) {
      if (p < 1.0) {
        const double skip = std::floor(std::log(rng.uniform_open_zero()) / std::log1p(-p));
        if (skip >= static_cast<double>(n - j)) break;
        j += static_cast<std::size_t>(skip);
      }
      if (j >= n) break;
      const double q = std::min(1.0, wu * w[order[j]] / total);
      if (rng.uniform() < q / p) edges.emplace_back(order[i], order[j]);
      p = q;
      ++j;
    }
  }
  return Graph::from_dense_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Community detection and SBM
// ---------------------------------------------------------------------------

double modularity(const Graph& g, const std::vector<std::uint32_t>& assignment) {
  const double two_m = 2.0 * static_cast<double>(g.edge_count());
  if (two_m == 0.0) return 0.0;
  const std::size_t blocks =
      assignment.empty() ? 0 : *std::max_element(assignment.begin(), assignment.end()) + 1;
  std::vector<double> inside(blocks, 0.0), ends(blocks, 0.0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    ends[assignment[u]] += static_cast<double>(g.degree(u));
    for (NodeId v : g.neighbors(u)) {
      if (assignment[u] == assignment[v]) inside[assignment[u]] += 1.0;
    }
  }
  double q = 0.0;
  for (std::size_t r = 0; r < blocks; ++r) {
    const double a = ends[r] / two_m;
    q += inside[r] / two_m - a * a;
  }
  return q;
}

std::vector<std::uint32_t> detect_communities(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> rep(n);
  std::iota(rep.begin(), rep.end(), 0U);
  if (g.edge_count() > 0) {
    const double inv_two_m = 1.0 / (2.0 * static_cast<double>(g.edge_count()));
    std::vector<double> a(n);
    std::vector<std::map<std::uint32_t, double>> e(n);
    for (NodeId u = 0; u < n; ++u) {
      a[u] = static_cast<double>(g.degree(u)) * inv_two_m;
      for (NodeId v : g.neighbors(u)) e[u][v] = inv_two_m;
    }
    auto gain = [&](std::uint32_t i, std::uint32_t j) { return 2.0 * (e[i].at(j) - a[i] * a[j]); };

    // Ordered by largest gain, then lowest (i, j).
    using Key = std::tuple<double, std::uint32_t, std::uint32_t>;
    std::set<Key> queue;
    auto key = [&](std::uint32_t i, std::uint32_t j) {
      if (i > j) std::swap(i, j);
      return Key{-gain(i, j), i, j};
    };
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v : g.neighbors(u)) {
        if (u < v) queue.insert(key(u, v));
      }
    }

    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0U);
    while (!queue.empty()) {
      const auto [neg_gain, i, j] = *queue.begin();
      if (-neg_gain <= 0.0) break;
      // Community j merges into i (i < j keeps the lowest id).
      for (const auto& [k, _] : e[i]) queue.erase(key(i, k));
      for (const auto& [k, _] : e[j]) {
        if (k != i) queue.erase(key(j, k));
      }
      for (const auto& [k, value] : e[j]) {
        if (k == i) continue;
        e[i][k] += value;
        e[k][i] += value;
        e[k].erase(j);
      }
      e[i].erase(j);
      e[j].clear();
      a[i] += a[j];
      a[j] = 0.0;
      parent[j] = i;
      for (const auto& [k, _] : e[i]) queue.insert(key(i, k));
    }
    for (std::uint32_t v = 0; v < n; ++v) {
      std::uint32_t r = v;
      while (parent[r] != r) r = parent[r];
      rep[v] = r;
    }
  }
  // Dense ids in order of each block's smallest node.
  std::vector<std::uint32_t> dense(n, UINT32_MAX);
  std::vector<std::uint32_t> assignment(n);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (dense[rep[v]] == UINT32_MAX) dense[rep[v]] = next++;
    assignment[v] = dense[rep[v]];
  }
  return assignment;
}

SbmParams fit_sbm(const Graph& g) {
  if (g.edge_count() == 0) throw Error(ErrorCode::degenerate_input, "SBM fit needs at least one edge");
  SbmParams params;
  params.assignment = detect_communities(g);
  const std::size_t blocks = *std::max_element(params.assignment.begin(), params.assignment.end()) + 1;
  params.block_sizes.assign(blocks, 0);
  params.block_edge_counts.assign(blocks, std::vector<std::uint64_t>(blocks, 0));
  for (std::uint32_t b : params.assignment) ++params.block_sizes[b];
  for (const auto& [u, v] : g.edges()) {
    const auto r = params.assignment[u];
    const auto s = params.assignment[v];
    ++params.block_edge_counts[r][s];
    if (r != s) ++params.block_edge_counts[s][r];
  }
  return params;
}

Graph generate_sbm(const SbmParams& params, RngSeed seed) {
  const std::size_t blocks = params.block_sizes.size();
  if (params.block_edge_counts.size() != blocks) {
    throw Error(ErrorCode::usage, "SBM block matrix does not match block count");
  }
  std::vector<std::vector<NodeId>> members(blocks);
  for (std::size_t v = 0; v < params.assignment.size(); ++v) {
    const auto b = params.assignment[v];
    if (b >= blocks) throw Error(ErrorCode::usage, "SBM assignment references a missing block");
    members[b].push_back(static_cast<NodeId>(v));
  }
  for (std::size_t r = 0; r < blocks; ++r) {
    if (members[r].size() != params.block_sizes[r]) {
      throw Error(ErrorCode::usage, "SBM block sizes disagree with the assignment");
    }
  }

  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < blocks; ++r) {
    const auto& row = params.block_edge_counts[r];
    const double nr = static_cast<double>(members[r].size());
    if (nr >= 2.0) {
      const double p = std::clamp(static_cast<double>(row[r]) / (nr * (nr - 1.0) / 2.0), 0.0, 1.0);
      sample_pairs_within(members[r].size(), p, rng, [&](std::uint64_t i, std::uint64_t j) {
        edges.emplace_back(members[r][i], members[r][j]);
      });
    }
    for (std::size_t s = r + 1; s < blocks; ++s) {
      const double ns = static_cast<double>(members[s].size());
      if (nr == 0.0 || ns == 0.0) continue;
      const double p = std::clamp(static_cast<double>(row[s]) / (nr * ns), 0.0, 1.0);
      sample_pairs_between(members[r].size(), members[s].size(), p, rng,
                           [&](std::uint64_t i, std::uint64_t j) {
                             edges.emplace_back(members[r][i], members[s][j]);
                           });
    }
  }
  return Graph::from_dense_edges(params.assignment.size(), edges);
}

// ---------------------------------------------------------------------------
// BTER
// ---------------------------------------------------------------------------

BterParams fit_bter(const Graph& g) {
  if (g.edge_count() == 0) throw Error(ErrorCode::degenerate_input, "BTER fit needs at least one edge");
  BterParams params;
  const auto cc = local_clustering(g);
  std::map<std::size_t, double> cc_sum;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto d = g.degree(v);
    ++params.degree_counts[d];
    cc_sum[d] += cc[v];
  }
  for (const auto& [d, count] : params.degree_counts) {
    params.clustering_by_degree[d] = d < 2 ? 0.0 : cc_sum[d] / static_cast<double>(count);
  }
  return params;
}

Graph generate_bter(const BterParams& params, RngSeed seed) {
  std::vector<std::size_t> degree;
  for (const auto& [d, count] : params.degree_counts) degree.insert(degree.end(), count, d);
  const std::size_t n = degree.size();
  auto clustering = [&](std::size_t d) {
    const auto it = params.clustering_by_degree.find(d);
    return it == params.clustering_by_degree.end() ? 0.0 : std::clamp(it->second, 0.0, 1.0);
  };

  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<double> excess(n, 0.0);

  // Phase 1: affinity blocks over nodes of degree >= 2, ascending degree.
  std::size_t start = 0;
  while (start < n && degree[start] < 2) {
    excess[start] = static_cast<double>(degree[start]);
    ++start;
  }
  while (start < n) {
    const std::size_t d = degree[start];
    const std::size_t size = std::min(d + 1, n - start);
    const double rho = std::cbrt(clustering(d));
    sample_pairs_within(size, rho, rng, [&](std::uint64_t i, std::uint64_t j) {
      edges.emplace_back(static_cast<NodeId>(start + i), static_cast<NodeId>(start + j));
    });
    for (std::size_t v = start; v < start + size; ++v) {
      excess[v] = std::max(0.0, static_cast<double>(degree[v]) - rho * static_cast<double>(size - 1));
    }
    start += size;
  }

  // Phase 2: Chung-Lu on the excess degrees.
  const Graph wiring = generate_chung_lu(ChungLuParams{excess}, RngSeed{rng.next()});
  const auto extra = wiring.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph::from_dense_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

ModelParams fit(ModelKind kind, const Graph& g) {
  switch (kind) {
    case ModelKind::er: return fit_er(g);
    case ModelKind::chung_lu: return fit_chung_lu(g);
    case ModelKind::sbm: return fit_sbm(g);
    case ModelKind::kronecker: return fit_kronecker(g);
    case ModelKind::bter: return fit_bter(g);
  }
  throw Error(ErrorCode::usage, "unknown model");
}

Graph generate(const ModelParams& params, RngSeed seed) {
  Graph g = std::visit(
      [seed](const auto& p) -> Graph {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ErParams>) return generate_er(p, seed);
        else if constexpr (std::is_same_v<T, ChungLuParams>) return generate_chung_lu(p, seed);
        else if constexpr (std::is_same_v<T, SbmParams>) return generate_sbm(p, seed);
        else if constexpr (std::is_same_v<T, KroneckerParams>) return generate_kronecker(p, seed);
        else return generate_bter(p, seed);
      },
      params);
  if (g.edge_count() == 0 || g.node_count() < 4) {
    throw Error(ErrorCode::generation_degenerate,
                "generated graph has " + std::to_string(g.node_count()) + " nodes and " +
                    std::to_string(g.edge_count()) + " edges");
  }
  return g;
}

}  // namespace mirrorbench
