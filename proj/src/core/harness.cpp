#include "mirrorbench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <exception>
#include <istream>
#include <json.hpp>
#include <mutex>
#include <ostream>
#include <thread>
#include <set>
#include <tuple>

#include "mirrorbench/error.hpp"
#include "mirrorbench/io.hpp"

namespace mirrorbench {

void validate(const ChainConfig& config) {
  if (config.chain_length < 1) throw Error(ErrorCode::usage, "chain length must be at least 1");
  if (config.trials < 1) throw Error(ErrorCode::usage, "trial count must be at least 1");
  if (config.jobs < 0) throw Error(ErrorCode::usage, "job count must be non-negative");
  if (config.metrics.empty()) throw Error(ErrorCode::usage, "at least one metric is required");
}

std::string_view mode_name(Mode mode) noexcept {
  return mode == Mode::cumulative ? "cumulative" : "iterative";
}

GraphSummary summarize(const Graph& g) {
  return {g.node_count(), g.edge_count(), count_triangles(g), average_clustering(g),
          average_path_length(g).value};
}

std::uint64_t trial_seed(std::uint64_t master_seed, int trial) {
  return derive_seed(master_seed, static_cast<std::uint64_t>(trial));
}

std::uint64_t iteration_seed(std::uint64_t trial_seed, int iteration) {
  return derive_seed(trial_seed, static_cast<std::uint64_t>(iteration));
}

namespace {

bool wants_graphlets(const ChainConfig& config) {
  return config.record_graphlets ||
         std::any_of(config.metrics.begin(), config.metrics.end(), [](MetricId id) {
           return id == MetricId::rgfd_l1 || id == MetricId::rgfd_l2;
         });
}

std::vector<MetricId> profile_metrics(const ChainConfig& config) {
  auto metrics = config.metrics;
  if (wants_graphlets(config)) metrics.push_back(MetricId::rgfd_l1);
  return metrics;
}

}  // namespace

ChainRecord run_chain(const ChainConfig& config, int trial, const Graph& source) {
  return run_chain(config, trial, source, GraphProfile(source, profile_metrics(config)));
}

ChainRecord run_chain(const ChainConfig& config, int trial, const Graph& source,
                      const GraphProfile& source_profile) {
  validate(config);
  ChainRecord record;
  record.trial = trial;
  record.trial_seed = trial_seed(config.master_seed, trial);
  const auto metrics = profile_metrics(config);
  const bool graphlets = wants_graphlets(config);

  Graph previous = source;
  std::optional<GraphProfile> previous_profile;
  for (int i = 1; i <= config.chain_length; ++i) {
    try {
      IterationEntry entry;
      entry.iteration = i;
      entry.params = fit(config.model, previous);
      Graph current = generate(entry.params, RngSeed{iteration_seed(record.trial_seed, i)});
      GraphProfile profile(current, metrics);
      const GraphProfile& before = previous_profile ? *previous_profile : source_profile;
      for (MetricId id : config.metrics) {
        entry.cumulative[id] = evaluate(id, source_profile, profile);
        entry.iterative[id] = evaluate(id, before, profile);
      }
      if (graphlets) entry.graphlets = profile.graphlets();
      entry.summary = summarize(current);
      if (config.keep_graphs) entry.graph = current;
      record.iterations.push_back(std::move(entry));
      previous = std::move(current);
      previous_profile = std::move(profile);
    } catch (const Error& e) {
      record.termination.completed = false;
      record.termination.truncated_at = i;
      record.termination.reason = std::string(to_string(e.code())) + ": " + e.what();
      break;
    }
  }
  return record;
}

std::vector<ChainRecord> run_trials(const ChainConfig& config, const Graph& source,
                                    std::stop_token stop) {
  validate(config);
  const GraphProfile source_profile(source, profile_metrics(config));
  const auto trials = static_cast<std::size_t>(config.trials);
  std::vector<std::optional<ChainRecord>> slots(trials);

  unsigned workers = config.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                      : static_cast<unsigned>(config.jobs);
  workers = std::min<unsigned>(workers, static_cast<unsigned>(trials));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      if (stop.stop_requested()) return;
      const std::size_t t = next.fetch_add(1);
      if (t >= trials) return;
      try {
        slots[t] = run_chain(config, static_cast<int>(t), source, source_profile);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(trials);
        return;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ChainRecord> records;
  records.reserve(trials);
  for (auto& slot : slots) {
    if (!slot) throw Error(ErrorCode::cancelled, "trial run cancelled before completion");
    records.push_back(std::move(*slot));
  }
  return records;
}

// ---------------------------------------------------------------------------
// Tabular results
// ---------------------------------------------------------------------------

std::vector<RawRow> raw_rows(const ChainConfig& config, const std::vector<ChainRecord>& records) {
  std::vector<RawRow> rows;
  const std::string model(cli_name(config.model));
  for (const auto& record : records) {
    const bool truncated = !record.termination.completed;
    for (const auto& entry : record.iterations) {
      for (MetricId id : config.metrics) {
        for (Mode mode : {Mode::cumulative, Mode::iterative}) {
          const auto& values = mode == Mode::cumulative ? entry.cumulative : entry.iterative;
          rows.push_back({model, config.dataset, record.trial, entry.iteration,
                          std::string(metric_name(id)), std::string(mode_name(mode)), values.at(id),
                          truncated});
        }
      }
    }
  }
  return rows;
}

MeanInterval student_t_interval(const std::vector<double>& sample) {
  MeanInterval out;
  if (sample.empty()) return out;
  if (std::all_of(sample.begin(), sample.end(), [&](double x) { return x == sample.front(); })) {
    out.mean = out.lo = out.hi = sample.front();
    out.degenerate = sample.size() == 1;
    return out;
  }
  const double n = static_cast<double>(sample.size());
  double sum = 0.0;
  for (double x : sample) sum += x;
  out.mean = sum / n;
  double ss = 0.0;
  for (double x : sample) ss += (x - out.mean) * (x - out.mean);
  const double s = std::sqrt(ss / (n - 1.0));
  const boost::math::students_t dist(n - 1.0);
  const double t = boost::math::quantile(dist, 0.975);
  const double half = t * s / std::sqrt(n);
  out.lo = out.mean - half;
  out.hi = out.mean + half;
  return out;
}

std::vector<AggregateRow> aggregate(const std::vector<RawRow>& rows) {
  using Key = std::tuple<std::string, std::string, std::string, std::string, int>;
  std::map<Key, std::vector<double>> groups;
  for (const auto& r : rows) groups[{r.model, r.dataset, r.metric, r.mode, r.iteration}].push_back(r.value);
  std::vector<AggregateRow> out;
  out.reserve(groups.size());
  for (const auto& [key, values] : groups) {
    const auto ci = student_t_interval(values);
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key), std::get<4>(key),
                   ci.mean, ci.lo, ci.hi, values.size(), ci.degenerate});
  }
  return out;
}

std::vector<AggregateRow> aggregate(const ChainConfig& config, const std::vector<ChainRecord>& records) {
  return aggregate(raw_rows(config, records));
}

namespace {

constexpr std::string_view kRawHeader = "model,dataset,trial,iteration,metric,mode,value,truncated";
constexpr std::string_view kAggHeader = "model,dataset,metric,mode,iteration,mean,ci95_lo,ci95_hi,n";

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw Error(ErrorCode::parse, "malformed integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::parse, "malformed integer '" + s + "'");
  }
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw Error(ErrorCode::parse, "malformed number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::parse, "malformed number '" + s + "'");
  }
}

std::uint64_t parse_count(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size() || s.starts_with('-')) throw Error(ErrorCode::parse, "malformed count '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::parse, "malformed count '" + s + "'");
  }
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_escape(fields[i]);
  }
  return line;
}

void expect_header(std::istream& in, std::string_view header) {
  std::vector<std::string> fields;
  if (!read_csv_record(in, fields) || join_csv(fields) != header) {
    throw Error(ErrorCode::parse, "expected CSV header '" + std::string(header) + "'");
  }
}

}  // namespace

void write_raw_csv(std::ostream& out, const std::vector<RawRow>& rows) {
  out << kRawHeader << "\r\n";
  for (const auto& r : rows) {
    out << join_csv({r.model, r.dataset, std::to_string(r.trial), std::to_string(r.iteration), r.metric, r.mode,
                     format_double(r.value), r.truncated ? "true" : "false"})
        << "\r\n";
  }
}

std::vector<RawRow> read_raw_csv(std::istream& in) {
  expect_header(in, kRawHeader);
  std::vector<RawRow> rows;
  std::vector<std::string> f;
  while (read_csv_record(in, f)) {
    if (f.size() != 8) throw Error(ErrorCode::parse, "raw CSV record must have 8 fields");
    if (f[7] != "true" && f[7] != "false") throw Error(ErrorCode::parse, "truncated must be true or false");
    rows.push_back({f[0], f[1], parse_int(f[2]), parse_int(f[3]), f[4], f[5], parse_double(f[6]), f[7] == "true"});
  }
  return rows;
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << kAggHeader << "\r\n";
  for (const auto& r : rows) {
    out << join_csv({r.model, r.dataset, r.metric, r.mode, std::to_string(r.iteration), format_double(r.mean),
                     format_double(r.ci95_lo), format_double(r.ci95_hi), std::to_string(r.n)})
        << "\r\n";
  }
}

void write_params_jsonl(std::ostream& out, const ChainConfig& config,
                        const std::vector<ChainRecord>& records) {
  using nlohmann::json;
  const std::string model(cli_name(config.model));
  for (const auto& record : records) {
    for (const auto& entry : record.iterations) {
      json line;
      line["model"] = model;
      line["dataset"] = config.dataset;
      line["trial"] = record.trial;
      line["iteration"] = entry.iteration;
      line["seed"] = iteration_seed(record.trial_seed, entry.iteration);
      line["params"] = json::parse(to_json(entry.params));
      line["summary"] = {{"n", entry.summary.n},
                         {"m", entry.summary.m},
                         {"triangles", entry.summary.triangles},
                         {"avg_cc", entry.summary.avg_cc},
                         {"avg_pl", entry.summary.avg_pl}};
      out << line.dump() << '\n';
    }
    json end;
    end["model"] = model;
    end["dataset"] = config.dataset;
    end["trial"] = record.trial;
    end["termination"] = record.termination.completed ? "completed" : "truncated";
    if (!record.termination.completed) {
      end["truncated_at"] = record.termination.truncated_at;
      end["reason"] = record.termination.reason;
    }
    out << end.dump() << '\n';
  }
}

// ---------------------------------------------------------------------------
// Graphlet PCA
// ---------------------------------------------------------------------------

std::vector<GraphletRow> graphlet_rows(const ChainConfig& config, const GraphletVector& source,
                                       const std::vector<ChainRecord>& records) {
  const std::string model(cli_name(config.model));
  std::vector<GraphletRow> rows;
  rows.push_back({model, config.dataset, 0, 0, source});
  for (const auto& record : records) {
    for (const auto& entry : record.iterations) {
      if (!entry.graphlets) {
        throw Error(ErrorCode::usage, "chain records carry no graphlet vectors; enable an rgfd metric");
      }
      rows.push_back({model, config.dataset, record.trial, entry.iteration, *entry.graphlets});
    }
  }
  return rows;
}

namespace {

std::string graphlet_header() {
  std::string h = "model,dataset,trial,iteration";
  for (auto name : kGraphletNames) {
    h += ',';
    h += name;
  }
  return h;
}

}  // namespace

void write_graphlet_csv(std::ostream& out, const std::vector<GraphletRow>& rows) {
  out << graphlet_header() << "\r\n";
  for (const auto& r : rows) {
    std::vector<std::string> f{r.model, r.dataset, std::to_string(r.trial), std::to_string(r.iteration)};
    for (auto c : r.counts.counts) f.push_back(std::to_string(c));
    out << join_csv(f) << "\r\n";
  }
}

std::vector<GraphletRow> read_graphlet_csv(std::istream& in) {
  expect_header(in, graphlet_header());
  std::vector<GraphletRow> rows;
  std::vector<std::string> f;
  while (read_csv_record(in, f)) {
    if (f.size() != 4 + kGraphletCount) throw Error(ErrorCode::parse, "graphlet CSV record has wrong width");
    GraphletRow row{f[0], f[1], parse_int(f[2]), parse_int(f[3]), {}};
    for (std::size_t i = 0; i < kGraphletCount; ++i) row.counts.counts[i] = parse_count(f[4 + i]);
    rows.push_back(std::move(row));
  }
  return rows;
}

PcaReport graphlet_pca_report(const std::vector<GraphletRow>& rows) {
  using Key = std::tuple<std::string, std::string, int>;
  std::vector<std::vector<double>> pooled;
  std::vector<Key> keys;
  std::set<std::pair<std::string, std::string>> sources;
  for (const auto& row : rows) {
    if (row.iteration == 0 && !sources.insert({row.model, row.dataset}).second) continue;
    const auto f = row.counts.frequencies();
    pooled.emplace_back(f.begin(), f.end());
    keys.emplace_back(row.model, row.dataset, row.iteration);
  }
  const Pca2d pca = pca_2d(pooled);

  std::map<Key, std::tuple<double, double, std::size_t>> sums;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto& [x, y, n] = sums[keys[i]];
    x += pca.coordinates[i][0];
    y += pca.coordinates[i][1];
    ++n;
  }
  PcaReport report;
  report.weights = pca.weights;
  report.zero_variance = pca.zero_variance;
  for (const auto& [key, acc] : sums) {
    const auto& [x, y, n] = acc;
    report.points.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), x / static_cast<double>(n),
                             y / static_cast<double>(n), n});
  }
  return report;
}

PcaReport graphlet_pca_report(const ChainConfig& config, const std::vector<ChainRecord>& records,
                              const Graph& source) {
  return graphlet_pca_report(graphlet_rows(config, graphlet_counts(source), records));
}

void write_pca_csv(std::ostream& out, const PcaReport& report) {
  out << "kind,model,dataset,iteration,label,x,y,n\r\n";
  for (const auto& p : report.points) {
    out << join_csv({"point", p.model, p.dataset, std::to_string(p.iteration), "", format_double(p.x),
                     format_double(p.y), std::to_string(p.n)})
        << "\r\n";
  }
  for (std::size_t j = 0; j < kGraphletCount && j < report.weights[0].size(); ++j) {
    out << join_csv({"weight", "", "", "", std::string(kGraphletNames[j]), format_double(report.weights[0][j]),
                     format_double(report.weights[1][j]), ""})
        << "\r\n";
  }
}

}  // namespace mirrorbench
