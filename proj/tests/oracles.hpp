// Test-only brute-force references. Nothing here calls into the code paths
// it is used to check.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "mirrorbench/graph.hpp"

namespace oracle {

using mirrorbench::Edge;
using mirrorbench::Graph;
using mirrorbench::NodeId;

/// Dense adjacency matrix view built from the graph's edge list.
inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> a(g.node_count(), std::vector<bool>(g.node_count(), false));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

/// G(n, p) from std::mt19937_64 and std::bernoulli_distribution.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
  return Graph::from_dense_edges(n, edges);
}

inline std::vector<NodeId> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline std::uint64_t triangles(const Graph& g) {
  const auto a = adjacency(g);
  const std::size_t n = g.node_count();
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) t += a[i][j] && a[j][k] && a[i][k];
  return t;
}

/// Induced connected graphlet counts by enumerating every 2-, 3- and 4-node
/// subset: [edge, wedge, triangle, 4-path, 3-star, 4-cycle, tailed triangle,
/// diamond, 4-clique].
inline std::array<std::uint64_t, 9> graphlets(const Graph& g) {
  const auto a = adjacency(g);
  const std::size_t n = g.node_count();
  std::array<std::uint64_t, 9> c{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      c[0] += a[i][j];
      for (std::size_t k = j + 1; k < n; ++k) {
        const int e3 = a[i][j] + a[j][k] + a[i][k];
        if (e3 == 2) ++c[1];
        if (e3 == 3) ++c[2];
        for (std::size_t l = k + 1; l < n; ++l) {
          const std::array<std::size_t, 4> s{i, j, k, l};
          std::array<int, 4> deg{};
          int edges = 0;
          for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
              if (a[s[x]][s[y]]) {
                ++edges;
                ++deg[x];
                ++deg[y];
              }
          std::sort(deg.begin(), deg.end());
          if (deg[0] == 0) continue;  // an isolated member means disconnected
          if (edges == 3) {
            if (deg == std::array<int, 4>{1, 1, 2, 2}) ++c[3];
            else ++c[4];
          } else if (edges == 4) {
            if (deg == std::array<int, 4>{2, 2, 2, 2}) ++c[5];
            else ++c[6];
          } else if (edges == 5) {
            ++c[7];
          } else if (edges == 6) {
            ++c[8];
          }
        }
      }
    }
  }
  return c;
}

/// All-pairs shortest paths by Floyd–Warshall; -1 marks unreachable.
inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

/// Portrait joint distribution from (source, distance) pair counts:
/// P(l, k) = (number of sources with exactly k nodes at distance l) * k /
/// (number of ordered reachable pairs at distance >= 1).
inline std::map<std::pair<std::uint64_t, std::uint64_t>, double> portrait_joint(const Graph& g) {
  const auto d = all_pairs(g);
  std::map<std::pair<std::uint64_t, std::uint64_t>, double> joint;
  double pairs = 0.0;
  for (const auto& row : d) {
    std::map<int, std::uint64_t> at;
    for (int x : row)
      if (x >= 1) ++at[x];
    for (const auto& [l, k] : at) {
      joint[{static_cast<std::uint64_t>(l), k}] += static_cast<double>(k);
      pairs += static_cast<double>(k);
    }
  }
  for (auto& [key, v] : joint) v /= pairs;
  return joint;
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
  return Graph::from_dense_edges(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
  return Graph::from_dense_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
  return Graph::from_dense_edges(n, e);
}

/// Hub 0 with `leaves` leaves.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<NodeId>(i));
  return Graph::from_dense_edges(leaves + 1, e);
}

inline Graph two_k2() { return Graph::from_dense_edges(4, std::vector<Edge>{{0, 1}, {2, 3}}); }

/// Two K5s (0-4, 5-9) joined by the edge 4-5.
inline Graph two_k5_bridge() {
  std::vector<Edge> e;
  for (NodeId base : {0u, 5u})
    for (NodeId i = 0; i < 5; ++i)
      for (NodeId j = i + 1; j < 5; ++j) e.emplace_back(base + i, base + j);
  e.emplace_back(4, 5);
  return Graph::from_dense_edges(10, e);
}

/// Preferential attachment: a seed clique of per_node + 1 nodes, then every
/// new node links to per_node distinct earlier nodes chosen proportionally to
/// degree.
inline Graph preferential_attachment(std::size_t n, std::size_t per_node, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<NodeId> ends;
  for (std::size_t i = 0; i <= per_node; ++i)
    for (std::size_t j = i + 1; j <= per_node; ++j) {
      edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
      ends.push_back(static_cast<NodeId>(i));
      ends.push_back(static_cast<NodeId>(j));
    }
  for (std::size_t v = per_node + 1; v < n; ++v) {
    std::vector<NodeId> picked;
    while (picked.size() < per_node) {
      std::uniform_int_distribution<std::size_t> pick(0, ends.size() - 1);
      const NodeId u = ends[pick(rng)];
      if (std::find(picked.begin(), picked.end(), u) == picked.end()) picked.push_back(u);
    }
    for (NodeId u : picked) {
      edges.emplace_back(u, static_cast<NodeId>(v));
      ends.push_back(u);
      ends.push_back(static_cast<NodeId>(v));
    }
  }
  return Graph::from_dense_edges(n, edges);
}

/// Erased configuration model on a power-law degree sequence:
/// d = floor(d_min · U^(-1 / (gamma − 1))), capped at n − 1; stubs are paired
/// uniformly, then self-loops and multi-edges are dropped.
inline Graph power_law_configuration(std::size_t n, double gamma, std::size_t d_min, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<NodeId> stubs;
  for (std::size_t v = 0; v < n; ++v) {
    const double x = static_cast<double>(d_min) * std::pow(1.0 - unit(rng), -1.0 / (gamma - 1.0));
    const std::size_t d = std::min(n - 1, static_cast<std::size_t>(std::floor(x)));
    stubs.insert(stubs.end(), d, static_cast<NodeId>(v));
  }
  if (stubs.size() % 2 == 1) stubs.pop_back();
  std::shuffle(stubs.begin(), stubs.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);
  return Graph::from_dense_edges(n, edges);
}

}  // namespace oracle
