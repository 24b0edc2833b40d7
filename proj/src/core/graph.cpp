#include "mirrorbench/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "mirrorbench/error.hpp"
#include "mirrorbench/rng.hpp"

namespace mirrorbench {

Graph Graph::from_dense_edges(std::size_t node_count, std::span<const Edge> edges) {
  std::vector<std::size_t> degree(node_count, 0);
  for (const auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw Error(ErrorCode::usage, "edge endpoint outside node range");
    }
    if (u == v) continue;
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[node_count]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }

  // Sort and deduplicate each row, then compact.
  std::vector<std::size_t> new_offsets(node_count + 1, 0);
  std::size_t write = 0;
  for (std::size_t v = 0; v < node_count; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    auto unique_end = std::unique(first, last);
    for (auto it = first; it != unique_end; ++it) g.targets_[write++] = *it;
    new_offsets[v + 1] = write;
  }
  g.targets_.resize(write);
  g.targets_.shrink_to_fit();
  g.offsets_ = std::move(new_offsets);
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  if (u >= node_count() || v >= node_count()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const NodeId> permutation) const {
  if (permutation.size() != node_count()) {
    throw Error(ErrorCode::usage, "permutation size does not match node count");
  }
  std::vector<Edge> mapped;
  mapped.reserve(edge_count());
  for (const auto& [u, v] : edges()) mapped.emplace_back(permutation[u], permutation[v]);
  return from_dense_edges(node_count(), mapped);
}

Graph from_edge_list(std::span<const std::pair<std::uint64_t, std::uint64_t>> pairs) {
  std::unordered_map<std::uint64_t, NodeId> ids;
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  auto intern = [&ids](std::uint64_t raw) {
    auto [it, inserted] = ids.try_emplace(raw, static_cast<NodeId>(ids.size()));
    return it->second;
  };
  for (const auto& [u, v] : pairs) {
    const NodeId a = intern(u);
    const NodeId b = intern(v);
    edges.emplace_back(a, b);
  }
  return Graph::from_dense_edges(ids.size(), edges);
}

DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram hist;
  for (NodeId v = 0; v < g.node_count(); ++v) ++hist[g.degree(v)];
  return hist;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) out[v] = g.degree(v);
  return out;
}

PageRankResult pagerank(const Graph& g, double damping, double tol, int max_iter) {
  if (!(damping > 0.0 && damping < 1.0)) {
    throw Error(ErrorCode::usage, "pagerank damping must lie in (0, 1)");
  }
  PageRankResult result;
  const std::size_t n = g.node_count();
  if (n == 0) {
    result.converged = true;
    return result;
  }
  const double uniform = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, uniform);
  std::vector<double> next(n);
  std::vector<double> share(n);

  for (int iter = 1; iter <= max_iter; ++iter) {
    double dangling = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      const auto d = g.degree(v);
      if (d == 0) {
        dangling += rank[v];
        share[v] = 0.0;
      } else {
        share[v] = rank[v] / static_cast<double>(d);
      }
    }
    const double base = (1.0 - damping) * uniform + damping * dangling * uniform;
    double delta = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double sum = 0.0;
      for (NodeId u : g.neighbors(v)) sum += share[u];
      next[v] = base + damping * sum;
      delta += std::abs(next[v] - rank[v]);
    }
    rank.swap(next);
    result.iterations = iter;
    if (delta < tol) {
      result.converged = true;
      break;
    }
  }
  result.scores = std::move(rank);
  return result;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
  if (source >= g.node_count()) throw Error(ErrorCode::usage, "bfs source out of range");
  std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> frontier{source};
  dist[source] = 0;
  std::size_t head = 0;
  while (head < frontier.size()) {
    const NodeId u = frontier[head++];
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

Components connected_components(const Graph& g) {
  Components comps;
  comps.label.assign(g.node_count(), kUnreachable);
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (comps.label[s] != kUnreachable) continue;
    const auto id = static_cast<std::uint32_t>(comps.count++);
    comps.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (comps.label[v] == kUnreachable) {
          comps.label[v] = id;
          stack.push_back(v);
        }
      }
    }
  }
  return comps;
}

namespace {

// Visits every triangle once as (u, v, w) with u < v < w.
template <typename Visit>
void for_each_triangle(const Graph& g, Visit&& visit) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto nu = g.neighbors(u);
    auto v_begin = std::upper_bound(nu.begin(), nu.end(), u);
    for (auto vit = v_begin; vit != nu.end(); ++vit) {
      const NodeId v = *vit;
      const auto nv = g.neighbors(v);
      auto a = std::next(vit);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          visit(u, v, *a);
          ++a;
          ++b;
        }
      }
    }
  }
}

}  // namespace

std::uint64_t count_triangles(const Graph& g) {
  std::uint64_t total = 0;
  for_each_triangle(g, [&total](NodeId, NodeId, NodeId) { ++total; });
  return total;
}

std::vector<std::uint64_t> node_triangles(const Graph& g) {
  std::vector<std::uint64_t> t(g.node_count(), 0);
  for_each_triangle(g, [&t](NodeId u, NodeId v, NodeId w) {
    ++t[u];
    ++t[v];
    ++t[w];
  });
  return t;
}

std::vector<double> local_clustering(const Graph& g) {
  const auto tri = node_triangles(g);
  std::vector<double> cc(g.node_count(), 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double d = static_cast<double>(g.degree(v));
    if (d >= 2.0) cc[v] = 2.0 * static_cast<double>(tri[v]) / (d * (d - 1.0));
  }
  return cc;
}

double average_clustering(const Graph& g) {
  if (g.empty()) return 0.0;
  const auto cc = local_clustering(g);
  return std::accumulate(cc.begin(), cc.end(), 0.0) / static_cast<double>(cc.size());
}

PathLengthResult average_path_length(const Graph& g, std::size_t exact_limit,
                                     std::size_t sample_sources) {
  PathLengthResult result;
  const std::size_t n = g.node_count();
  if (n < 2 || g.edge_count() == 0) return result;

  std::vector<NodeId> sources;
  if (n <= exact_limit) {
    sources.resize(n);
    std::iota(sources.begin(), sources.end(), NodeId{0});
  } else {
    result.sampled = true;
    sources.resize(n);
    std::iota(sources.begin(), sources.end(), NodeId{0});
    Rng rng(RngSeed{derive_seed(n, g.edge_count())});
    const std::size_t k = std::min(sample_sources, n);
    for (std::size_t i = 0; i < k; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.below(n - i));
      std::swap(sources[i], sources[j]);
    }
    sources.resize(k);
  }

  double total = 0.0;
  std::uint64_t pairs = 0;
  std::vector<std::uint32_t> dist(n, kUnreachable);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId s : sources) {
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId u = queue[head];
      for (NodeId v : g.neighbors(u)) {
        if (dist[v] == kUnreachable) {
          dist[v] = dist[u] + 1;
          total += dist[v];
          ++pairs;
          queue.push_back(v);
        }
      }
    }
    for (NodeId v : queue) dist[v] = kUnreachable;
  }
  if (pairs > 0) {
    result.value = total / static_cast<double>(pairs);
    result.defined = true;
  }
  return result;
}

double density(const Graph& g) {
  const auto n = static_cast<double>(g.node_count());
  if (n < 2.0) return 0.0;
  return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

}  // namespace mirrorbench
