#include "mirrorbench/mirrorbench.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <exception>
#include <filesystem>
#include <fstream>
#include <new>
#include <string>

#include "mirrorbench/error.hpp"
#include "mirrorbench/harness.hpp"
#include "mirrorbench/io.hpp"
#include "mirrorbench/metrics.hpp"
#include "mirrorbench/models.hpp"
#include "mirrorbench/synth.hpp"

struct mb_graph {
  mirrorbench::Graph value;
};

struct mb_params {
  mirrorbench::ModelParams value;
};

struct mb_chain_result {
  mirrorbench::ChainConfig config;
  mirrorbench::GraphletVector source_graphlets;
  bool has_source_graphlets = false;
  std::vector<mirrorbench::ChainRecord> records;
};

namespace {

using namespace mirrorbench;

thread_local std::string last_error;

mb_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::usage: return MB_ERR_USAGE;
    case ErrorCode::io: return MB_ERR_IO;
    case ErrorCode::parse: return MB_ERR_PARSE;
    case ErrorCode::degenerate_input: return MB_ERR_DEGENERATE_INPUT;
    case ErrorCode::fit_failed: return MB_ERR_FIT_FAILED;
    case ErrorCode::generation_degenerate: return MB_ERR_GENERATION_DEGENERATE;
    case ErrorCode::undefined_portrait: return MB_ERR_UNDEFINED_PORTRAIT;
    case ErrorCode::size_limit: return MB_ERR_SIZE_LIMIT;
    case ErrorCode::cancelled: return MB_ERR_CANCELLED;
  }
  return MB_ERR_INTERNAL;
}

// Runs body, translating every exception into a status and last_error.
template <typename Body>
mb_status guarded(Body&& body) noexcept {
  try {
    last_error.clear();
    body();
    return MB_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MB_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return MB_ERR_INTERNAL;
  }
}

template <typename T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::usage, std::string(what) + " must not be null");
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::ofstream open_output(const char* path) {
  require(path, "output path");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, std::string("cannot write ") + path);
  return out;
}

std::ifstream open_input(const char* path) {
  require(path, "input path");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, std::string("cannot open ") + path);
  return in;
}

void finish(std::ofstream& out, const char* path) {
  out.flush();
  if (!out) throw Error(ErrorCode::io, std::string("error while writing ") + path);
}

ModelKind model_from(const char* name) {
  require(name, "model name");
  const auto kind = parse_model_kind(name);
  if (!kind) throw Error(ErrorCode::usage, std::string("unknown model '") + name + "'");
  return *kind;
}

}  // namespace

extern "C" {

MB_API const char* mb_version(void) { return MIRRORBENCH_VERSION_STRING; }

MB_API const char* mb_last_error(void) { return last_error.c_str(); }

MB_API const char* mb_status_name(mb_status status) {
  switch (status) {
    case MB_OK: return "ok";
    case MB_ERR_USAGE: return "usage";
    case MB_ERR_IO: return "io";
    case MB_ERR_PARSE: return "parse";
    case MB_ERR_DEGENERATE_INPUT: return "degenerate_input";
    case MB_ERR_FIT_FAILED: return "fit_failed";
    case MB_ERR_GENERATION_DEGENERATE: return "generation_degenerate";
    case MB_ERR_UNDEFINED_PORTRAIT: return "undefined_portrait";
    case MB_ERR_SIZE_LIMIT: return "size_limit";
    case MB_ERR_CANCELLED: return "cancelled";
    case MB_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

MB_API void mb_string_free(char* text) { std::free(text); }

MB_API mb_status mb_graph_load(const char* path, mb_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new mb_graph{read_edge_list(std::filesystem::path(path))};
  });
}

MB_API mb_status mb_graph_save(const mb_graph* graph, const char* path) {
  return guarded([&] {
    require(graph, "graph");
    auto out = open_output(path);
    write_edge_list(out, graph->value);
    finish(out, path);
  });
}

MB_API mb_status mb_graph_from_edges(const uint64_t* pairs, size_t pair_count, mb_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (pair_count > 0) require(pairs, "pairs");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> list(pair_count);
    for (size_t i = 0; i < pair_count; ++i) list[i] = {pairs[2 * i], pairs[2 * i + 1]};
    *out = new mb_graph{from_edge_list(list)};
  });
}

MB_API void mb_graph_free(mb_graph* graph) { delete graph; }

MB_API size_t mb_graph_node_count(const mb_graph* graph) { return graph ? graph->value.node_count() : 0; }

MB_API size_t mb_graph_edge_count(const mb_graph* graph) { return graph ? graph->value.edge_count() : 0; }

MB_API mb_status mb_graph_summarize(const mb_graph* graph, mb_graph_summary* out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    const auto s = summarize(graph->value);
    *out = {s.n, s.m, s.triangles, s.avg_cc, s.avg_pl, density(graph->value)};
  });
}

MB_API mb_status mb_synth_clique_ring(size_t num_cliques, size_t clique_size, mb_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new mb_graph{make_clique_ring(num_cliques, clique_size)};
  });
}

MB_API mb_status mb_synth_tree(size_t target_nodes, uint64_t seed, mb_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new mb_graph{make_random_tree(target_nodes, RngSeed{seed})};
  });
}

MB_API mb_status mb_synth_er(uint64_t nodes, uint64_t edges, uint64_t seed, mb_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new mb_graph{generate_er(ErParams{nodes, edges}, RngSeed{seed})};
  });
}

MB_API mb_status mb_fit(const char* model, const mb_graph* graph, mb_params** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = new mb_params{fit(model_from(model), graph->value)};
  });
}

MB_API mb_status mb_generate(const mb_params* params, uint64_t seed, mb_graph** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    *out = new mb_graph{generate(params->value, RngSeed{seed})};
  });
}

MB_API mb_status mb_params_to_json(const mb_params* params, char** out_json) {
  return guarded([&] {
    require(params, "params");
    require(out_json, "out_json");
    *out_json = copy_string(to_json(params->value));
  });
}

MB_API mb_status mb_params_from_json(const char* json, mb_params** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new mb_params{params_from_json(json)};
  });
}

MB_API void mb_params_free(mb_params* params) { delete params; }

MB_API mb_status mb_compare(const mb_graph* a, const mb_graph* b, const char* metric, double* out) {
  return guarded([&] {
    require(a, "first graph");
    require(b, "second graph");
    require(metric, "metric");
    require(out, "out");
    const auto id = parse_metric(metric);
    if (!id) throw Error(ErrorCode::usage, std::string("unknown metric '") + metric + "'");
    *out = evaluate(*id, a->value, b->value);
  });
}

MB_API mb_status mb_chain_run(const mb_chain_config* config, const mb_graph* source, mb_chain_result** out) {
  return guarded([&] {
    require(config, "config");
    require(source, "source");
    require(out, "out");
    auto result = std::make_unique<mb_chain_result>();
    ChainConfig& c = result->config;
    c.model = model_from(config->model);
    c.dataset = config->dataset ? config->dataset : "source";
    c.chain_length = config->chain_length;
    c.trials = config->trials;
    c.master_seed = config->master_seed;
    c.metrics = parse_metric_list(config->metrics ? config->metrics : "degree-js");
    c.jobs = config->jobs;
    c.keep_graphs = config->keep_graphs != 0;
    c.record_graphlets = config->record_graphlets != 0;
    result->records = run_trials(c, source->value);
    if (!result->records.empty() && !result->records.front().iterations.empty() &&
        result->records.front().iterations.front().graphlets) {
      result->source_graphlets = graphlet_counts(source->value);
      result->has_source_graphlets = true;
    }
    *out = result.release();
  });
}

MB_API void mb_chain_result_free(mb_chain_result* result) { delete result; }

MB_API size_t mb_chain_trial_count(const mb_chain_result* result) {
  return result ? result->records.size() : 0;
}

MB_API mb_status mb_chain_trial_info(const mb_chain_result* result, size_t trial, size_t* iterations,
                                     int* truncated_at) {
  return guarded([&] {
    require(result, "result");
    if (trial >= result->records.size()) throw Error(ErrorCode::usage, "trial index out of range");
    const auto& record = result->records[trial];
    if (iterations) *iterations = record.iterations.size();
    if (truncated_at) *truncated_at = record.termination.completed ? 0 : record.termination.truncated_at;
  });
}

MB_API mb_status mb_chain_write_raw_csv(const mb_chain_result* result, const char* path) {
  return guarded([&] {
    require(result, "result");
    auto out = open_output(path);
    write_raw_csv(out, raw_rows(result->config, result->records));
    finish(out, path);
  });
}

MB_API mb_status mb_chain_write_aggregate_csv(const mb_chain_result* result, const char* path) {
  return guarded([&] {
    require(result, "result");
    auto out = open_output(path);
    write_aggregate_csv(out, aggregate(result->config, result->records));
    finish(out, path);
  });
}

MB_API mb_status mb_chain_write_params_jsonl(const mb_chain_result* result, const char* path) {
  return guarded([&] {
    require(result, "result");
    auto out = open_output(path);
    write_params_jsonl(out, result->config, result->records);
    finish(out, path);
  });
}

MB_API mb_status mb_chain_write_graphlet_csv(const mb_chain_result* result, const char* path) {
  return guarded([&] {
    require(result, "result");
    if (!result->has_source_graphlets) {
      throw Error(ErrorCode::usage, "chain was run without graphlet vectors");
    }
    auto out = open_output(path);
    write_graphlet_csv(out, graphlet_rows(result->config, result->source_graphlets, result->records));
    finish(out, path);
  });
}

MB_API mb_status mb_chain_dump_graphs(const mb_chain_result* result, const char* directory) {
  return guarded([&] {
    require(result, "result");
    require(directory, "directory");
    const std::filesystem::path dir(directory);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::io, "cannot create " + dir.string());
    for (const auto& record : result->records) {
      for (const auto& entry : record.iterations) {
        if (!entry.graph) throw Error(ErrorCode::usage, "chain was run without retaining graphs");
        write_edge_list(dir / ("trial" + std::to_string(record.trial) + "_iter" +
                               std::to_string(entry.iteration) + ".edges"),
                        *entry.graph);
      }
    }
  });
}

MB_API mb_status mb_stats_csv(const char* raw_csv_path, const char* aggregate_csv_path) {
  return guarded([&] {
    auto in = open_input(raw_csv_path);
    const auto rows = read_raw_csv(in);
    auto out = open_output(aggregate_csv_path);
    write_aggregate_csv(out, aggregate(rows));
    finish(out, aggregate_csv_path);
  });
}

MB_API mb_status mb_pca_csv(const char* graphlet_csv_path, const char* pca_csv_path) {
  return guarded([&] {
    auto in = open_input(graphlet_csv_path);
    const auto report = graphlet_pca_report(read_graphlet_csv(in));
    auto out = open_output(pca_csv_path);
    write_pca_csv(out, report);
    finish(out, pca_csv_path);
  });
}

MB_API mb_status mb_file_digest(const char* path, char** out_hex) {
  return guarded([&] {
    require(path, "path");
    require(out_hex, "out_hex");
    *out_hex = copy_string(file_sha256(path));
  });
}

}  // extern "C"
