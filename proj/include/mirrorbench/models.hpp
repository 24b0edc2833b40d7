#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mirrorbench/graph.hpp"
#include "mirrorbench/rng.hpp"

namespace mirrorbench {

enum class ModelKind { er, chung_lu, sbm, kronecker, bter };

/// CLI spelling: er, chung-lu, sbm, kron, bter.
std::string_view cli_name(ModelKind kind) noexcept;
/// JSON "model" tag: er, chung_lu, sbm, kronecker, bter.
std::string_view json_name(ModelKind kind) noexcept;
/// Accepts either spelling.
std::optional<ModelKind> parse_model_kind(std::string_view name) noexcept;

struct ErParams {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  bool operator==(const ErParams&) const = default;
};

struct ChungLuParams {
  std::vector<double> weights;
  bool operator==(const ChungLuParams&) const = default;
};

struct SbmParams {
  std::vector<std::uint32_t> assignment;
  std::vector<std::uint64_t> block_sizes;
  /// Row-major B x B symmetric matrix of edge counts; the diagonal holds
  /// within-block counts.
  std::vector<std::vector<std::uint64_t>> block_edge_counts;
  bool operator==(const SbmParams&) const = default;
};

struct KroneckerParams {
  /// Symmetric initiator [a b; b c].
  double a = 0.5;
  double b = 0.5;
  double c = 0.5;
  int k = 1;
  bool operator==(const KroneckerParams&) const = default;
};

struct BterParams {
  std::map<std::size_t, std::size_t> degree_counts;
  std::map<std::size_t, double> clustering_by_degree;
  bool operator==(const BterParams&) const = default;
};

using ModelParams = std::variant<ErParams, ChungLuParams, SbmParams, KroneckerParams, BterParams>;

ModelKind kind_of(const ModelParams& params) noexcept;

// Erdős–Rényi
ErParams fit_er(const Graph& g);
Graph generate_er(const ErParams& params, RngSeed seed);

// Chung-Lu
ChungLuParams fit_chung_lu(const Graph& g);
Graph generate_chung_lu(const ChungLuParams& params, RngSeed seed);
/// Σ_{i<j} min(1, w_i w_j / Σw).
double chung_lu_expected_edges(const std::vector<double>& weights);

// Stochastic block model
/// Greedy modularity agglomeration; block ids are dense, ordered by the
/// smallest node id in each block.
std::vector<std::uint32_t> detect_communities(const Graph& g);
double modularity(const Graph& g, const std::vector<std::uint32_t>& assignment);
SbmParams fit_sbm(const Graph& g);
Graph generate_sbm(const SbmParams& params, RngSeed seed);

// Stochastic Kronecker
struct KroneckerMoments {
  double edges = 0.0;
  double wedges = 0.0;
  double triangles = 0.0;
};
/// Expected edge, wedge (Σ C(d, 2)) and triangle counts of a generated graph,
/// self-loops excluded.
KroneckerMoments kronecker_expected_moments(double a, double b, double c, int k);
KroneckerParams fit_kronecker(const Graph& g);
Graph generate_kronecker(const KroneckerParams& params, RngSeed seed);
/// Above this power, generation switches from exact per-pair Bernoulli
/// trials to dart throwing.
inline constexpr int kKroneckerExactMaxPower = 11;

// BTER
BterParams fit_bter(const Graph& g);
Graph generate_bter(const BterParams& params, RngSeed seed);

/// Dispatches to the per-model fitter.
ModelParams fit(ModelKind kind, const Graph& g);
/// Dispatches to the per-model generator. Throws
/// ErrorCode::generation_degenerate when the result has no edges or fewer
/// than four nodes.
Graph generate(const ModelParams& params, RngSeed seed);

/// JSON document with a "model" tag and the per-model field names.
std::string to_json(const ModelParams& params);
ModelParams params_from_json(std::string_view text);

}  // namespace mirrorbench
