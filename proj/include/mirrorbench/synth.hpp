#pragma once

#include <cstddef>

#include "mirrorbench/graph.hpp"
#include "mirrorbench/rng.hpp"

namespace mirrorbench {

/// num_cliques copies of K_{clique_size}; clique t's local node 1 links to
/// clique t+1's local node 0, wrapping around.
Graph make_clique_ring(std::size_t num_cliques, std::size_t clique_size);

/// Breadth-first growth from a root; every expanded node gets 2, 3 or 4
/// children uniformly until the target is reached, the last node's children
/// clipped to the target.
Graph make_random_tree(std::size_t target_nodes, RngSeed seed);

}  // namespace mirrorbench
