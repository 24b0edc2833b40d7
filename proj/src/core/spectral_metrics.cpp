#include <algorithm>
#include <cmath>

#include "mirrorbench/error.hpp"
#include "mirrorbench/metrics.hpp"

namespace mirrorbench {

SpectrumResult metric_spectrum(const Graph& g, LaplacianKind kind) {
  if (g.node_count() <= kDenseSpectrumLimit) return laplacian_spectrum(g, kind);
  return laplacian_spectrum_truncated(g, kind, kDefaultTruncatedRank, SpectrumEnd::largest);
}

double lambda_distance(const std::vector<double>& s1, const std::vector<double>& s2) {
  const std::size_t len = std::max(s1.size(), s2.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double x = i < s1.size() ? s1[i] : 0.0;
    const double y = i < s2.size() ? s2[i] : 0.0;
    sum += (x - y) * (x - y);
  }
  return std::sqrt(sum);
}

double lambda_distance(const SpectrumResult& s1, const SpectrumResult& s2) {
  if (!s1.truncated && !s2.truncated) return lambda_distance(s1.eigenvalues, s2.eigenvalues);
  const std::size_t len = std::min(s1.eigenvalues.size(), s2.eigenvalues.size());
  return lambda_distance(std::vector<double>(s1.eigenvalues.begin(), s1.eigenvalues.begin() + len),
                         std::vector<double>(s2.eigenvalues.begin(), s2.eigenvalues.begin() + len));
}

double lambda_distance(const Graph& g1, const Graph& g2, LaplacianKind kind) {
  return lambda_distance(metric_spectrum(g1, kind), metric_spectrum(g2, kind));
}

std::vector<double> netlsd_timescales() {
  std::vector<double> t(kNetlsdSamples);
  for (std::size_t j = 0; j < kNetlsdSamples; ++j) {
    const double exponent = -2.0 + 4.0 * static_cast<double>(j) / static_cast<double>(kNetlsdSamples - 1);
    t[j] = std::pow(10.0, exponent);
  }
  return t;
}

NetlsdDescriptor netlsd_from_spectrum(const std::vector<double>& normalized_eigenvalues) {
  NetlsdDescriptor d;
  d.timescales = netlsd_timescales();
  d.heat_trace.assign(kNetlsdSamples, 0.0);
  // Ascending eigenvalues so the largest terms are added first.
  std::vector<double> ascending(normalized_eigenvalues);
  std::sort(ascending.begin(), ascending.end());
  for (std::size_t j = 0; j < kNetlsdSamples; ++j) {
    double h = 0.0;
    for (double lambda : ascending) h += std::exp(-d.timescales[j] * std::max(0.0, lambda));
    d.heat_trace[j] = h;
  }
  return d;
}

NetlsdDescriptor netlsd_descriptor(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n <= kDenseSpectrumLimit) {
    return netlsd_from_spectrum(laplacian_spectrum(g, LaplacianKind::normalized).eigenvalues);
  }
  const std::size_t r = kDefaultTruncatedRank;
  const auto top = laplacian_spectrum_truncated(g, LaplacianKind::normalized, r, SpectrumEnd::largest);
  const auto bottom = laplacian_spectrum_truncated(g, LaplacianKind::normalized, r, SpectrumEnd::smallest);
  std::vector<double> values(top.eigenvalues);
  const std::size_t middle = n - top.eigenvalues.size() - bottom.eigenvalues.size();
  const double hi = top.eigenvalues.empty() ? 2.0 : top.eigenvalues.back();
  const double lo = bottom.eigenvalues.empty() ? 0.0 : bottom.eigenvalues.front();
  for (std::size_t i = 0; i < middle; ++i) {
    const double frac = static_cast<double>(i + 1) / static_cast<double>(middle + 1);
    values.push_back(hi + (lo - hi) * frac);
  }
  values.insert(values.end(), bottom.eigenvalues.begin(), bottom.eigenvalues.end());
  return netlsd_from_spectrum(values);
}

double netlsd_distance(const NetlsdDescriptor& d1, const NetlsdDescriptor& d2) {
  return lambda_distance(d1.heat_trace, d2.heat_trace);
}

double netlsd_distance(const Graph& g1, const Graph& g2) {
  return netlsd_distance(netlsd_descriptor(g1), netlsd_descriptor(g2));
}

}  // namespace mirrorbench
