#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mirrorbench/graph.hpp"
#include "mirrorbench/spectral.hpp"

namespace mirrorbench {

// ---------------------------------------------------------------------------
// Distributions and Jensen-Shannon divergence
// ---------------------------------------------------------------------------

/// Probability vector over strictly increasing integer labels.
struct Distribution {
  std::vector<std::int64_t> support;
  std::vector<double> probs;

  /// Normalizes non-negative counts. An all-zero input yields an empty
  /// distribution.
  static Distribution from_counts(const std::map<std::int64_t, double>& counts);
};

/// Base-2 JS divergence over the union of the two supports, in [0, 1].
double js_divergence(const Distribution& p, const Distribution& q);
/// Same, for two vectors already aligned on a common support.
double js_divergence(const std::vector<double>& p, const std::vector<double>& q);

Distribution degree_distribution(const Graph& g);
double degree_js(const Graph& g1, const Graph& g2);

inline constexpr std::size_t kPageRankBins = 100;

/// Histograms of both score vectors over kPageRankBins equal-width bins on
/// [0, max score over both]; returns the JS divergence of the two.
double binned_js(const std::vector<double>& s1, const std::vector<double>& s2,
                 std::size_t bins = kPageRankBins);
double pagerank_js(const Graph& g1, const Graph& g2);

// ---------------------------------------------------------------------------
// Network portraits
// ---------------------------------------------------------------------------

/// rows[l][k] = number of nodes with exactly k nodes at distance l (k >= 1).
struct Portrait {
  std::vector<std::map<std::uint64_t, std::uint64_t>> rows;
  std::size_t node_count = 0;
};

Portrait portrait(const Graph& g);

/// Joint distribution P(l, k) ∝ k·B[l][k] over l >= 1. Throws
/// ErrorCode::undefined_portrait when there are no reachable pairs.
std::map<std::pair<std::uint64_t, std::uint64_t>, double> portrait_joint(const Portrait& p);

double portrait_divergence(const Portrait& p1, const Portrait& p2);
double portrait_divergence(const Graph& g1, const Graph& g2);

// ---------------------------------------------------------------------------
// Spectral distances
// ---------------------------------------------------------------------------

/// Euclidean distance between descending spectra, shorter one zero-padded.
double lambda_distance(const std::vector<double>& s1, const std::vector<double>& s2);
/// Truncated spectra are compared on their common leading length.
double lambda_distance(const SpectrumResult& s1, const SpectrumResult& s2);
/// Full spectrum up to the dense limit, top-kDefaultTruncatedRank above it.
SpectrumResult metric_spectrum(const Graph& g, LaplacianKind kind);
double lambda_distance(const Graph& g1, const Graph& g2,
                       LaplacianKind kind = LaplacianKind::combinatorial);

inline constexpr std::size_t kNetlsdSamples = 250;

struct NetlsdDescriptor {
  std::vector<double> timescales;
  std::vector<double> heat_trace;
};

std::vector<double> netlsd_timescales();
/// Heat trace h(t) = Σ exp(-t λ) on the given normalized-Laplacian spectrum.
NetlsdDescriptor netlsd_from_spectrum(const std::vector<double>& normalized_eigenvalues);
/// For graphs above the dense limit the trace combines the extremal
/// eigenvalues with a linear interpolation of the unresolved middle.
NetlsdDescriptor netlsd_descriptor(const Graph& g);
double netlsd_distance(const NetlsdDescriptor& d1, const NetlsdDescriptor& d2);
double netlsd_distance(const Graph& g1, const Graph& g2);

// ---------------------------------------------------------------------------
// Graphlets
// ---------------------------------------------------------------------------

enum class Graphlet : std::size_t {
  edge,
  wedge,
  triangle,
  path4,
  star3,
  cycle4,
  tailed_triangle,
  diamond,
  clique4,
};

inline constexpr std::size_t kGraphletCount = 9;
inline constexpr std::array<std::string_view, kGraphletCount> kGraphletNames = {
    "edge", "wedge", "triangle", "4-path", "3-star", "4-cycle", "tailed-triangle", "diamond", "4-clique"};

/// Induced counts of the nine connected graphlets on 2-4 nodes.
struct GraphletVector {
  std::array<std::uint64_t, kGraphletCount> counts{};

  std::uint64_t operator[](Graphlet g) const { return counts[static_cast<std::size_t>(g)]; }
  std::uint64_t total() const;
  /// Relative frequencies; all zeros when total() == 0.
  std::array<double, kGraphletCount> frequencies() const;
  bool operator==(const GraphletVector&) const = default;
};

GraphletVector graphlet_counts(const Graph& g);

enum class Norm { l1, l2 };
double rgfd(const GraphletVector& v1, const GraphletVector& v2, Norm norm = Norm::l1);
double rgfd(const Graph& g1, const Graph& g2, Norm norm = Norm::l1);

// ---------------------------------------------------------------------------
// PCA
// ---------------------------------------------------------------------------

struct Pca2d {
  std::vector<std::array<double, 2>> coordinates;
  /// Loadings of the first and second principal axes.
  std::array<std::vector<double>, 2> weights;
  std::array<double, 2> explained_variance{};
  /// Set when the pooled vectors have zero total variance.
  bool zero_variance = false;
};

/// Mean-centred projection onto the top two covariance eigenvectors. Each
/// axis is oriented so that its largest-magnitude weight is positive.
Pca2d pca_2d(const std::vector<std::vector<double>>& vectors);

// ---------------------------------------------------------------------------
// Metric registry
// ---------------------------------------------------------------------------

enum class MetricId {
  degree_js,
  pagerank_js,
  portrait,
  lambda,
  rgfd_l1,
  rgfd_l2,
  netlsd,
  avg_cc,
  avg_pl,
};

inline constexpr std::array<MetricId, 9> kAllMetrics = {
    MetricId::degree_js, MetricId::pagerank_js, MetricId::portrait,
    MetricId::lambda,    MetricId::rgfd_l1,     MetricId::rgfd_l2,
    MetricId::netlsd,    MetricId::avg_cc,      MetricId::avg_pl};

std::string_view metric_name(MetricId id) noexcept;
std::optional<MetricId> parse_metric(std::string_view name) noexcept;
bool is_spectral(MetricId id) noexcept;
/// Comma-separated metric ids; "all" and "non-spectral" are accepted as
/// shorthands.
std::vector<MetricId> parse_metric_list(std::string_view list);

/// Per-graph features, computed once for the requested metrics and then
/// read-only.
class GraphProfile {
 public:
  GraphProfile(const Graph& g, const std::vector<MetricId>& metrics);

  const Distribution& degrees() const;
  const std::vector<double>& pagerank() const;
  const Portrait& portrait() const;
  const SpectrumResult& combinatorial_spectrum() const;
  const NetlsdDescriptor& netlsd() const;
  const GraphletVector& graphlets() const;
  double avg_clustering() const;
  double avg_path_length() const;

 private:
  std::optional<Distribution> degrees_;
  std::optional<std::vector<double>> pagerank_;
  std::optional<Portrait> portrait_;
  std::optional<SpectrumResult> spectrum_;
  std::optional<NetlsdDescriptor> netlsd_;
  std::optional<GraphletVector> graphlets_;
  std::optional<double> avg_cc_;
  std::optional<double> avg_pl_;
};

/// avg-cc and avg-pl compare as absolute differences of the two values.
double evaluate(MetricId id, const GraphProfile& p1, const GraphProfile& p2);
double evaluate(MetricId id, const Graph& g1, const Graph& g2);

}  // namespace mirrorbench
