#include "mirrorbench/synth.hpp"

#include <vector>

#include "mirrorbench/error.hpp"

namespace mirrorbench {

Graph make_clique_ring(std::size_t num_cliques, std::size_t clique_size) {
  if (num_cliques < 3 || clique_size < 2) {
    throw Error(ErrorCode::usage, "clique ring needs at least 3 cliques of size at least 2");
  }
  const std::size_t n = num_cliques * clique_size;
  std::vector<Edge> edges;
  edges.reserve(num_cliques * (clique_size * (clique_size - 1) / 2 + 1));
  for (std::size_t t = 0; t < num_cliques; ++t) {
    const std::size_t base = t * clique_size;
    for (std::size_t i = 0; i < clique_size; ++i) {
      for (std::size_t j = i + 1; j < clique_size; ++j) {
        edges.emplace_back(static_cast<NodeId>(base + i), static_cast<NodeId>(base + j));
      }
    }
    const std::size_t next = ((t + 1) % num_cliques) * clique_size;
    edges.emplace_back(static_cast<NodeId>(base + 1), static_cast<NodeId>(next));
  }
  return Graph::from_dense_edges(n, edges);
}

Graph make_random_tree(std::size_t target_nodes, RngSeed seed) {
  if (target_nodes < 1) throw Error(ErrorCode::usage, "tree needs at least one node");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(target_nodes - 1);
  std::size_t count = 1;
  for (std::size_t parent = 0; parent < count && count < target_nodes; ++parent) {
    const std::size_t children = 2 + static_cast<std::size_t>(rng.below(3));
    for (std::size_t c = 0; c < children && count < target_nodes; ++c) {
      edges.emplace_back(static_cast<NodeId>(parent), static_cast<NodeId>(count++));
    }
  }
  return Graph::from_dense_edges(count, edges);
}

}  // namespace mirrorbench
