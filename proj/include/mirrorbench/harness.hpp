#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "mirrorbench/graph.hpp"
#include "mirrorbench/metrics.hpp"
#include "mirrorbench/models.hpp"

namespace mirrorbench {

struct ChainConfig {
  ModelKind model = ModelKind::er;
  std::string dataset = "source";
  int chain_length = 10;
  int trials = 50;
  std::uint64_t master_seed = 0;
  std::vector<MetricId> metrics = {MetricId::degree_js};
  /// Worker threads for run_trials; 0 means hardware concurrency.
  int jobs = 1;
  /// Keep every generated graph in the records (for edge-list dumps).
  bool keep_graphs = false;
  /// Record graphlet vectors of every generated graph even when no RGFD
  /// metric is requested.
  bool record_graphlets = false;
};

void validate(const ChainConfig& config);

enum class Mode { cumulative, iterative };
std::string_view mode_name(Mode mode) noexcept;

struct GraphSummary {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t triangles = 0;
  double avg_cc = 0.0;
  double avg_pl = 0.0;
  bool operator==(const GraphSummary&) const = default;
};

GraphSummary summarize(const Graph& g);

struct IterationEntry {
  int iteration = 0;
  GraphSummary summary;
  ModelParams params;
  std::map<MetricId, double> cumulative;
  std::map<MetricId, double> iterative;
  std::optional<GraphletVector> graphlets;
  std::optional<Graph> graph;
};

struct Termination {
  bool completed = true;
  /// Iteration at which the chain stopped; only meaningful when !completed.
  int truncated_at = 0;
  std::string reason;
};

struct ChainRecord {
  int trial = 0;
  std::uint64_t trial_seed = 0;
  std::vector<IterationEntry> iterations;
  Termination termination;
};

std::uint64_t trial_seed(std::uint64_t master_seed, int trial);
std::uint64_t iteration_seed(std::uint64_t trial_seed, int iteration);

/// One fit→generate chain of config.chain_length iterations. Fit or
/// generation failures truncate the chain and are recorded, never thrown.
ChainRecord run_chain(const ChainConfig& config, int trial, const Graph& source);
ChainRecord run_chain(const ChainConfig& config, int trial, const Graph& source,
                      const GraphProfile& source_profile);

/// All trials, ordered by trial id, independent of the worker count.
/// Throws ErrorCode::cancelled if a stop is requested before completion.
std::vector<ChainRecord> run_trials(const ChainConfig& config, const Graph& source,
                                    std::stop_token stop = {});

// ---------------------------------------------------------------------------
// Tabular results
// ---------------------------------------------------------------------------

struct RawRow {
  std::string model;
  std::string dataset;
  int trial = 0;
  int iteration = 0;
  std::string metric;
  std::string mode;
  double value = 0.0;
  bool truncated = false;
};

std::vector<RawRow> raw_rows(const ChainConfig& config, const std::vector<ChainRecord>& records);

struct AggregateRow {
  std::string model;
  std::string dataset;
  std::string metric;
  std::string mode;
  int iteration = 0;
  double mean = 0.0;
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
  std::size_t n = 0;
  /// n == 1: the interval collapses to the mean.
  bool degenerate = false;
};

/// Two-sided 95% Student-t half width, t_{0.975, n-1} · s / √n.
struct MeanInterval {
  double mean = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  bool degenerate = false;
};
MeanInterval student_t_interval(const std::vector<double>& sample);

/// Groups by (model, dataset, metric, mode, iteration); rows come out
/// sorted by those keys.
std::vector<AggregateRow> aggregate(const std::vector<RawRow>& rows);
std::vector<AggregateRow> aggregate(const ChainConfig& config, const std::vector<ChainRecord>& records);

void write_raw_csv(std::ostream& out, const std::vector<RawRow>& rows);
std::vector<RawRow> read_raw_csv(std::istream& in);
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);

/// One JSON object per line: the parameter snapshot and graph summary of
/// every iteration, followed by one termination line per trial.
void write_params_jsonl(std::ostream& out, const ChainConfig& config,
                        const std::vector<ChainRecord>& records);

// ---------------------------------------------------------------------------
// Graphlet PCA
// ---------------------------------------------------------------------------

struct GraphletRow {
  std::string model;
  std::string dataset;
  int trial = 0;
  /// 0 is the source graph.
  int iteration = 0;
  GraphletVector counts;
};

std::vector<GraphletRow> graphlet_rows(const ChainConfig& config, const GraphletVector& source,
                                       const std::vector<ChainRecord>& records);
void write_graphlet_csv(std::ostream& out, const std::vector<GraphletRow>& rows);
std::vector<GraphletRow> read_graphlet_csv(std::istream& in);

struct PcaPoint {
  std::string model;
  std::string dataset;
  int iteration = 0;
  double x = 0.0;
  double y = 0.0;
  std::size_t n = 0;
};

struct PcaReport {
  std::vector<PcaPoint> points;
  std::array<std::vector<double>, 2> weights;
  bool zero_variance = false;
};

/// Pools the normalized graphlet vectors (each source once, every
/// generated graph), runs pca_2d and reports trial-mean coordinates per
/// (model, dataset, iteration).
PcaReport graphlet_pca_report(const std::vector<GraphletRow>& rows);
PcaReport graphlet_pca_report(const ChainConfig& config, const std::vector<ChainRecord>& records,
                              const Graph& source);
void write_pca_csv(std::ostream& out, const PcaReport& report);

}  // namespace mirrorbench
