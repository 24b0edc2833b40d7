#include <algorithm>
#include <cmath>
#include <vector>

#include "mirrorbench/metrics.hpp"

namespace mirrorbench {

namespace {

std::uint64_t choose2(std::uint64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }
std::uint64_t choose3(std::uint64_t x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }

// Sorted intersection of two neighbor rows, restricted to ids > floor.
void intersect_above(std::span<const NodeId> a, std::span<const NodeId> b, NodeId floor,
                     std::vector<NodeId>& out) {
  out.clear();
  auto i = std::upper_bound(a.begin(), a.end(), floor);
  auto j = std::upper_bound(b.begin(), b.end(), floor);
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      out.push_back(*i);
      ++i;
      ++j;
    }
  }
}

std::uint64_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::uint64_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

std::uint64_t GraphletVector::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::array<double, kGraphletCount> GraphletVector::frequencies() const {
  std::array<double, kGraphletCount> f{};
  const auto t = total();
  if (t == 0) return f;
  for (std::size_t i = 0; i < kGraphletCount; ++i) {
    f[i] = static_cast<double>(counts[i]) / static_cast<double>(t);
  }
  return f;
}

// Non-induced counts from edge-local triangle and wedge statistics, then
// induced counts through the containment relations between the 4-node
// graphlets.
GraphletVector graphlet_counts(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::uint64_t> tri_at(n, 0);
  std::uint64_t triangles = 0;
  std::uint64_t paths_ni = 0;
  std::uint64_t diamonds_ni = 0;
  std::uint64_t cliques = 0;
  std::vector<NodeId> common;

  for (NodeId u = 0; u < n; ++u) {
    const auto nu = g.neighbors(u);
    for (NodeId v : nu) {
      if (v <= u) continue;
      const auto nv = g.neighbors(v);
      const std::uint64_t t_edge = intersection_size(nu, nv);
      diamonds_ni += choose2(t_edge);
      paths_ni += (g.degree(u) - 1) * (g.degree(v) - 1);

      intersect_above(nu, nv, v, common);
      for (std::size_t a = 0; a < common.size(); ++a) {
        const NodeId w = common[a];
        ++triangles;
        ++tri_at[u];
        ++tri_at[v];
        ++tri_at[w];
        const auto nw = g.neighbors(w);
        for (std::size_t b = a + 1; b < common.size(); ++b) {
          if (std::binary_search(nw.begin(), nw.end(), common[b])) ++cliques;
        }
      }
    }
  }
  paths_ni -= 3 * triangles;

  std::uint64_t wedges_ni = 0, stars_ni = 0, tailed_ni = 0;
  for (NodeId v = 0; v < n; ++v) {
    const std::uint64_t d = g.degree(v);
    wedges_ni += choose2(d);
    stars_ni += choose3(d);
    if (d >= 2) tailed_ni += tri_at[v] * (d - 2);
  }

  // Each 4-cycle is seen once from each of its two diagonals.
  std::uint64_t cycles_ni2 = 0;
  std::vector<std::uint32_t> paths_to(n, 0);
  std::vector<NodeId> touched;
  for (NodeId u = 0; u < n; ++u) {
    touched.clear();
    for (NodeId v : g.neighbors(u)) {
      for (NodeId w : g.neighbors(v)) {
        if (w <= u) continue;
        if (paths_to[w]++ == 0) touched.push_back(w);
      }
    }
    for (NodeId w : touched) {
      cycles_ni2 += choose2(paths_to[w]);
      paths_to[w] = 0;
    }
  }
  const std::uint64_t cycles_ni = cycles_ni2 / 2;

  GraphletVector out;
  auto& c = out.counts;
  const std::uint64_t diamonds = diamonds_ni - 6 * cliques;
  const std::uint64_t cycles = cycles_ni - diamonds - 3 * cliques;
  const std::uint64_t tailed = tailed_ni - 4 * diamonds - 12 * cliques;
  c[static_cast<std::size_t>(Graphlet::edge)] = g.edge_count();
  c[static_cast<std::size_t>(Graphlet::wedge)] = wedges_ni - 3 * triangles;
  c[static_cast<std::size_t>(Graphlet::triangle)] = triangles;
  c[static_cast<std::size_t>(Graphlet::clique4)] = cliques;
  c[static_cast<std::size_t>(Graphlet::diamond)] = diamonds;
  c[static_cast<std::size_t>(Graphlet::cycle4)] = cycles;
  c[static_cast<std::size_t>(Graphlet::tailed_triangle)] = tailed;
  c[static_cast<std::size_t>(Graphlet::star3)] = stars_ni - tailed - 2 * diamonds - 4 * cliques;
  c[static_cast<std::size_t>(Graphlet::path4)] =
      paths_ni - 2 * tailed - 4 * cycles - 6 * diamonds - 12 * cliques;
  return out;
}

double rgfd(const GraphletVector& v1, const GraphletVector& v2, Norm norm) {
  const auto f1 = v1.frequencies();
  const auto f2 = v2.frequencies();
  double acc = 0.0;
  for (std::size_t i = 0; i < kGraphletCount; ++i) {
    const double diff = f1[i] - f2[i];
    acc += norm == Norm::l1 ? std::abs(diff) : diff * diff;
  }
  return norm == Norm::l1 ? acc : std::sqrt(acc);
}

double rgfd(const Graph& g1, const Graph& g2, Norm norm) {
  return rgfd(graphlet_counts(g1), graphlet_counts(g2), norm);
}

}  // namespace mirrorbench
