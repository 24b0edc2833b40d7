#include <algorithm>
#include <cmath>

#include "mirrorbench/error.hpp"
#include "mirrorbench/metrics.hpp"

namespace mirrorbench {

namespace {

// p·log2(2p / (p + q)); zero when p == 0.
double half_term(double p, double q) {
  if (p <= 0.0) return 0.0;
  return p * std::log2(2.0 * p / (p + q));
}

double js_term(double p, double q) { return 0.5 * (half_term(p, q) + half_term(q, p)); }

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

Distribution Distribution::from_counts(const std::map<std::int64_t, double>& counts) {
  double total = 0.0;
  for (const auto& [label, count] : counts) {
    if (count < 0.0) throw Error(ErrorCode::usage, "distribution counts must be non-negative");
    total += count;
  }
  Distribution d;
  if (total <= 0.0) return d;
  for (const auto& [label, count] : counts) {
    if (count > 0.0) {
      d.support.push_back(label);
      d.probs.push_back(count / total);
    }
  }
  return d;
}

double js_divergence(const Distribution& p, const Distribution& q) {
  double js = 0.0;
  std::size_t i = 0, j = 0;
  while (i < p.support.size() || j < q.support.size()) {
    if (j == q.support.size() || (i < p.support.size() && p.support[i] < q.support[j])) {
      js += js_term(p.probs[i++], 0.0);
    } else if (i == p.support.size() || q.support[j] < p.support[i]) {
      js += js_term(0.0, q.probs[j++]);
    } else {
      js += js_term(p.probs[i++], q.probs[j++]);
    }
  }
  return clamp_unit(js);
}

double js_divergence(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::usage, "aligned distributions differ in length");
  double js = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) js += js_term(p[i], q[i]);
  return clamp_unit(js);
}

Distribution degree_distribution(const Graph& g) {
  std::map<std::int64_t, double> counts;
  for (const auto& [d, c] : degree_histogram(g)) counts[static_cast<std::int64_t>(d)] = static_cast<double>(c);
  return Distribution::from_counts(counts);
}

double degree_js(const Graph& g1, const Graph& g2) {
  return js_divergence(degree_distribution(g1), degree_distribution(g2));
}

double binned_js(const std::vector<double>& s1, const std::vector<double>& s2, std::size_t bins) {
  double top = 0.0;
  for (double x : s1) top = std::max(top, x);
  for (double x : s2) top = std::max(top, x);
  auto histogram = [&](const std::vector<double>& scores) {
    std::vector<double> h(bins, 0.0);
    if (scores.empty()) return h;
    for (double x : scores) {
      std::size_t b = 0;
      if (top > 0.0) {
        // The offset keeps values sitting exactly on a bin edge from
        // flipping bins under last-ulp differences in the scores.
        const double pos = x / top * static_cast<double>(bins) + 1e-9;
        b = std::min(bins - 1, static_cast<std::size_t>(std::max(0.0, std::floor(pos))));
      }
      h[b] += 1.0;
    }
    for (double& v : h) v /= static_cast<double>(scores.size());
    return h;
  };
  return js_divergence(histogram(s1), histogram(s2));
}

double pagerank_js(const Graph& g1, const Graph& g2) {
  return binned_js(pagerank(g1).scores, pagerank(g2).scores);
}

}  // namespace mirrorbench
