#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace mirrorbench {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Immutable undirected simple graph in CSR form. Neighbor lists are sorted,
/// there are no self-loops or duplicate edges, and adjacency is symmetric.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over the dense id range [0, node_count). Self-loops are
  /// dropped and duplicates collapsed; ids must be < node_count.
  static Graph from_dense_edges(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  bool empty() const noexcept { return node_count() == 0; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const noexcept;

  /// Each undirected edge once as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Returns the graph with node v renamed to permutation[v].
  Graph relabeled(std::span<const NodeId> permutation) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

/// Raw edge pairs with arbitrary non-negative ids. Self-loops are dropped,
/// duplicates collapsed and ids compacted in order of first appearance.
Graph from_edge_list(std::span<const std::pair<std::uint64_t, std::uint64_t>> pairs);

using DegreeHistogram = std::map<std::size_t, std::size_t>;

DegreeHistogram degree_histogram(const Graph& g);
std::vector<std::size_t> degree_sequence(const Graph& g);

struct PageRankResult {
  std::vector<double> scores;
  bool converged = false;
  int iterations = 0;
};

PageRankResult pagerank(const Graph& g, double damping = 0.85, double tol = 1e-8, int max_iter = 100);

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source);

struct Components {
  std::vector<std::uint32_t> label;
  std::size_t count = 0;
};

Components connected_components(const Graph& g);

std::uint64_t count_triangles(const Graph& g);
/// Triangles through each node.
std::vector<std::uint64_t> node_triangles(const Graph& g);
std::vector<double> local_clustering(const Graph& g);
double average_clustering(const Graph& g);

struct PathLengthResult {
  double value = 0.0;
  /// False when the graph has no reachable pair at distance >= 1.
  bool defined = false;
  /// True when sources were sampled rather than enumerated.
  bool sampled = false;
};

/// Exact BFS from every node up to exact_limit nodes; above it, a seeded
/// sample of sample_sources sources.
PathLengthResult average_path_length(const Graph& g, std::size_t exact_limit = 5000,
                                     std::size_t sample_sources = 500);

double density(const Graph& g);

}  // namespace mirrorbench
