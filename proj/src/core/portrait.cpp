#include <algorithm>
#include <vector>

#include "mirrorbench/error.hpp"
#include "mirrorbench/metrics.hpp"

namespace mirrorbench {

Portrait portrait(const Graph& g) {
  Portrait p;
  const std::size_t n = g.node_count();
  p.node_count = n;
  if (n == 0) return p;
  p.rows.emplace_back();
  p.rows[0][1] = n;

  std::vector<std::uint32_t> dist(n, kUnreachable);
  std::vector<NodeId> queue;
  std::vector<std::uint64_t> shell;
  queue.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    queue.clear();
    shell.assign(1, 1);
    queue.push_back(s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId u = queue[head];
      for (NodeId v : g.neighbors(u)) {
        if (dist[v] != kUnreachable) continue;
        dist[v] = dist[u] + 1;
        if (dist[v] >= shell.size()) shell.push_back(0);
        ++shell[dist[v]];
        queue.push_back(v);
      }
    }
    for (NodeId v : queue) dist[v] = kUnreachable;
    if (shell.size() > p.rows.size()) p.rows.resize(shell.size());
    for (std::size_t l = 1; l < shell.size(); ++l) ++p.rows[l][shell[l]];
  }
  return p;
}

std::map<std::pair<std::uint64_t, std::uint64_t>, double> portrait_joint(const Portrait& p) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, double> joint;
  double total = 0.0;
  for (std::size_t l = 1; l < p.rows.size(); ++l) {
    for (const auto& [k, count] : p.rows[l]) {
      const double w = static_cast<double>(k) * static_cast<double>(count);
      joint[{l, k}] = w;
      total += w;
    }
  }
  if (total <= 0.0) {
    throw Error(ErrorCode::undefined_portrait, "portrait has no reachable node pairs");
  }
  for (auto& [key, w] : joint) w /= total;
  return joint;
}

double portrait_divergence(const Portrait& p1, const Portrait& p2) {
  const auto j1 = portrait_joint(p1);
  const auto j2 = portrait_joint(p2);
  std::vector<double> a, b;
  auto i1 = j1.begin();
  auto i2 = j2.begin();
  while (i1 != j1.end() || i2 != j2.end()) {
    if (i2 == j2.end() || (i1 != j1.end() && i1->first < i2->first)) {
      a.push_back(i1->second);
      b.push_back(0.0);
      ++i1;
    } else if (i1 == j1.end() || i2->first < i1->first) {
      a.push_back(0.0);
      b.push_back(i2->second);
      ++i2;
    } else {
      a.push_back(i1->second);
      b.push_back(i2->second);
      ++i1;
      ++i2;
    }
  }
  return js_divergence(a, b);
}

double portrait_divergence(const Graph& g1, const Graph& g2) {
  return portrait_divergence(portrait(g1), portrait(g2));
}

}  // namespace mirrorbench
