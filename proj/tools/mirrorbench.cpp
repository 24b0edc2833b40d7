// mirrorbench command-line tool. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mirrorbench/mirrorbench.h"

namespace {

enum ExitCode { kSuccess = 0, kUsage = 1, kIo = 2, kModelFailure = 3 };

struct GraphDeleter {
  void operator()(mb_graph* g) const { mb_graph_free(g); }
};
struct ParamsDeleter {
  void operator()(mb_params* p) const { mb_params_free(p); }
};
struct ChainDeleter {
  void operator()(mb_chain_result* r) const { mb_chain_result_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { mb_string_free(s); }
};
using GraphPtr = std::unique_ptr<mb_graph, GraphDeleter>;
using ParamsPtr = std::unique_ptr<mb_params, ParamsDeleter>;
using ChainPtr = std::unique_ptr<mb_chain_result, ChainDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

/// Carries a failed status out of a subcommand.
struct Failure {
  mb_status status;
  std::string message;
};

int exit_code_for(mb_status status) {
  switch (status) {
    case MB_OK: return kSuccess;
    case MB_ERR_IO:
    case MB_ERR_PARSE: return kIo;
    case MB_ERR_DEGENERATE_INPUT:
    case MB_ERR_FIT_FAILED:
    case MB_ERR_GENERATION_DEGENERATE: return kModelFailure;
    default: return kUsage;
  }
}

void check(mb_status status) {
  if (status != MB_OK) throw Failure{status, mb_last_error()};
}

void report(const char* code, const std::string& message) {
  std::cerr << "error: code=" << code << " message=" << nlohmann::json(message).dump() << '\n';
}

GraphPtr load_graph(const std::string& path) {
  mb_graph* g = nullptr;
  check(mb_graph_load(path.c_str(), &g));
  return GraphPtr(g);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{MB_ERR_IO, "cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Failure{MB_ERR_IO, "cannot write " + path};
}

std::string digest(const std::string& path) {
  char* hex = nullptr;
  check(mb_file_digest(path.c_str(), &hex));
  return StringPtr(hex).get();
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

struct SynthArgs {
  std::string kind;
  std::size_t cliques = 500;
  std::size_t size = 4;
  std::size_t nodes = 3000;
  std::uint64_t edges = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int run_synth(const SynthArgs& a) {
  mb_graph* g = nullptr;
  if (a.kind == "clique-ring") {
    check(mb_synth_clique_ring(a.cliques, a.size, &g));
  } else if (a.kind == "tree") {
    check(mb_synth_tree(a.nodes, a.seed, &g));
  } else {
    check(mb_synth_er(a.nodes, a.edges, a.seed, &g));
  }
  GraphPtr graph(g);
  check(mb_graph_save(graph.get(), a.output.c_str()));
  return kSuccess;
}

struct FitArgs {
  std::string model;
  std::string input;
  std::string output;
};

int run_fit(const FitArgs& a) {
  const auto graph = load_graph(a.input);
  mb_params* p = nullptr;
  check(mb_fit(a.model.c_str(), graph.get(), &p));
  ParamsPtr params(p);
  char* json = nullptr;
  check(mb_params_to_json(params.get(), &json));
  write_file(a.output, std::string(StringPtr(json).get()) + "\n");
  return kSuccess;
}

struct GenerateArgs {
  std::string params;
  std::uint64_t seed = 0;
  std::string output;
};

int run_generate(const GenerateArgs& a) {
  mb_params* p = nullptr;
  check(mb_params_from_json(read_file(a.params).c_str(), &p));
  ParamsPtr params(p);
  mb_graph* g = nullptr;
  check(mb_generate(params.get(), a.seed, &g));
  GraphPtr graph(g);
  check(mb_graph_save(graph.get(), a.output.c_str()));
  return kSuccess;
}

struct CompareArgs {
  std::string first;
  std::string second;
  std::vector<std::string> metrics;
};

int run_compare(const CompareArgs& a) {
  const auto g1 = load_graph(a.first);
  const auto g2 = load_graph(a.second);
  for (const auto& metric : a.metrics) {
    double value = 0.0;
    check(mb_compare(g1.get(), g2.get(), metric.c_str(), &value));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    std::cout << metric << '=' << buf << '\n';
  }
  return kSuccess;
}

int run_info(const std::string& path) {
  const auto g = load_graph(path);
  mb_graph_summary s{};
  check(mb_graph_summarize(g.get(), &s));
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "nodes=%zu\nedges=%zu\ntriangles=%llu\navg-cc=%.17g\navg-pl=%.17g\ndensity=%.17g\n", s.nodes,
                s.edges, static_cast<unsigned long long>(s.triangles), s.avg_clustering, s.avg_path_length,
                s.density);
  std::cout << buf;
  return kSuccess;
}

struct ChainArgs {
  std::string model;
  std::string source;
  std::string dataset;
  int length = 10;
  int trials = 50;
  std::uint64_t seed = 0;
  std::string metrics = "degree-js";
  int jobs = 1;
  std::string out_raw;
  std::string out_agg;
  std::string dump_graphs;
  std::string dump_params;
  std::string out_graphlets;
  std::string manifest;
};

std::string quote_config(const std::string& value) { return nlohmann::json(value).dump(); }

/// key=value lines that replay the run through --config.
std::string config_echo(const ChainArgs& a) {
  std::ostringstream out;
  out << "model=" << quote_config(a.model) << '\n'
      << "source=" << quote_config(a.source) << '\n'
      << "dataset=" << quote_config(a.dataset) << '\n'
      << "length=" << a.length << '\n'
      << "trials=" << a.trials << '\n'
      << "seed=" << a.seed << '\n'
      << "metrics=" << quote_config(a.metrics) << '\n'
      << "jobs=" << a.jobs << '\n'
      << "out-raw=" << quote_config(a.out_raw) << '\n'
      << "out-agg=" << quote_config(a.out_agg) << '\n';
  if (!a.dump_graphs.empty()) out << "dump-graphs=" << quote_config(a.dump_graphs) << '\n';
  if (!a.dump_params.empty()) out << "dump-params=" << quote_config(a.dump_params) << '\n';
  if (!a.out_graphlets.empty()) out << "out-graphlets=" << quote_config(a.out_graphlets) << '\n';
  return out.str();
}

int run_chain(ChainArgs a) {
  if (a.dataset.empty()) a.dataset = std::filesystem::path(a.source).stem().string();
  const auto started = std::chrono::steady_clock::now();
  const auto source = load_graph(a.source);

  mb_chain_config config{};
  config.model = a.model.c_str();
  config.dataset = a.dataset.c_str();
  config.chain_length = a.length;
  config.trials = a.trials;
  config.master_seed = a.seed;
  config.metrics = a.metrics.c_str();
  config.jobs = a.jobs;
  config.keep_graphs = a.dump_graphs.empty() ? 0 : 1;
  config.record_graphlets = a.out_graphlets.empty() ? 0 : 1;

  mb_chain_result* r = nullptr;
  const auto model_started = std::chrono::steady_clock::now();
  check(mb_chain_run(&config, source.get(), &r));
  ChainPtr result(r);
  const double model_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - model_started).count();

  check(mb_chain_write_raw_csv(result.get(), a.out_raw.c_str()));
  check(mb_chain_write_aggregate_csv(result.get(), a.out_agg.c_str()));
  if (!a.dump_params.empty()) check(mb_chain_write_params_jsonl(result.get(), a.dump_params.c_str()));
  if (!a.out_graphlets.empty()) check(mb_chain_write_graphlet_csv(result.get(), a.out_graphlets.c_str()));
  if (!a.dump_graphs.empty()) check(mb_chain_dump_graphs(result.get(), a.dump_graphs.c_str()));

  std::size_t failed_at_first = 0;
  const std::size_t trials = mb_chain_trial_count(result.get());
  for (std::size_t t = 0; t < trials; ++t) {
    int truncated_at = 0;
    check(mb_chain_trial_info(result.get(), t, nullptr, &truncated_at));
    if (truncated_at == 1) ++failed_at_first;
  }

  nlohmann::json manifest;
  manifest["tool"] = "mirrorbench";
  manifest["version"] = mb_version();
  manifest["config"] = config_echo(a);
  manifest["source"] = a.source;
  manifest["source_sha256"] = digest(a.source);
  manifest["ci_method"] = "student-t";
  manifest["wall_clock_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  manifest["model_seconds"] = {{a.model, model_seconds}};
  manifest["truncated_at_first_iteration"] = failed_at_first;
  const std::string manifest_path = a.manifest.empty() ? a.out_raw + ".manifest.json" : a.manifest;
  write_file(manifest_path, manifest.dump(2) + "\n");

  if (trials > 0 && failed_at_first == trials) {
    report("model_failure", "every trial failed before completing iteration 1");
    return kModelFailure;
  }
  return kSuccess;
}

/// Appends "--key value" for each key=value line of a --config file whose
/// flag is not already on the command line. args is in CLI11's reversed
/// order.
void merge_config_file(std::vector<std::string>& args) {
  std::vector<std::string> forward(args.rbegin(), args.rend());
  std::optional<std::string> path;
  for (std::size_t i = 0; i < forward.size(); ++i) {
    if (forward[i] == "--config" && i + 1 < forward.size()) path = forward[i + 1];
    if (forward[i].starts_with("--config=")) path = forward[i].substr(9);
  }
  if (!path) return;
  std::ifstream in(*path);
  if (!in) throw Failure{MB_ERR_IO, "cannot open config file " + *path};
  auto present = [&forward](const std::string& flag) {
    for (const auto& arg : forward) {
      if (arg == flag || arg.starts_with(flag + "=")) return true;
    }
    return false;
  };
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Failure{MB_ERR_USAGE, "config line without '=': " + line};
    const std::string flag = "--" + line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (!value.empty() && value.front() == '"') {
      try {
        value = nlohmann::json::parse(value).get<std::string>();
      } catch (const nlohmann::json::exception&) {
        throw Failure{MB_ERR_USAGE, "malformed quoted value in config line: " + line};
      }
    }
    if (present(flag)) continue;
    forward.push_back(flag);
    forward.push_back(value);
  }
  args.assign(forward.rbegin(), forward.rend());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mirrorbench: iterated fit-and-generate stress tests for graph models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mb_version()));

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic source graph as an edge list");
  synth_cmd->add_option("kind", synth.kind, "clique-ring, tree or er")
      ->required()
      ->check(CLI::IsMember({"clique-ring", "tree", "er"}));
  synth_cmd->add_option("--cliques", synth.cliques, "Number of cliques in the ring")->capture_default_str();
  synth_cmd->add_option("--size", synth.size, "Nodes per clique")->capture_default_str();
  synth_cmd->add_option("--nodes", synth.nodes, "Target node count (tree, er)")->capture_default_str();
  synth_cmd->add_option("--edges", synth.edges, "Expected edge count (er)");
  synth_cmd->add_option("--seed", synth.seed, "Random seed")->capture_default_str();
  synth_cmd->add_option("-o,--output", synth.output, "Edge-list output")->required();

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit a model to an edge list");
  fit_cmd->add_option("--model", fit.model, "er, chung-lu, sbm, kron or bter")
      ->required()
      ->check(CLI::IsMember({"er", "chung-lu", "sbm", "kron", "bter"}));
  fit_cmd->add_option("input", fit.input, "Edge-list input")->required();
  fit_cmd->add_option("-o,--output", fit.output, "Parameter JSON output")->required();

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Generate a graph from fitted parameters");
  gen_cmd->add_option("--params", gen.params, "Parameter JSON")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output, "Edge-list output")->required();

  CompareArgs cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Compare two edge lists");
  cmp_cmd->add_option("first", cmp.first, "First edge list")->required();
  cmp_cmd->add_option("second", cmp.second, "Second edge list")->required();
  cmp_cmd->add_option("--metric", cmp.metrics, "Metric id (repeatable)")->required()->take_all();

  ChainArgs chain;
  auto* chain_cmd = app.add_subcommand("chain", "Run fit-and-generate chains");
  std::string config_file;
  chain_cmd->add_option("--config", config_file, "key=value file mirroring these flags; flags win");
  chain_cmd->add_option("--model", chain.model, "er, chung-lu, sbm, kron or bter")
      ->required()
      ->check(CLI::IsMember({"er", "chung-lu", "sbm", "kron", "bter"}));
  chain_cmd->add_option("--source", chain.source, "Source edge list")->required();
  chain_cmd->add_option("--dataset", chain.dataset, "Dataset label (default: source file stem)");
  chain_cmd->add_option("--length", chain.length, "Chain length")->capture_default_str()->check(CLI::PositiveNumber);
  chain_cmd->add_option("--trials", chain.trials, "Independent chains")->capture_default_str()->check(CLI::PositiveNumber);
  chain_cmd->add_option("--seed", chain.seed, "Master seed")->capture_default_str();
  chain_cmd->add_option("--metrics", chain.metrics, "Comma-separated metric ids, 'all' or 'non-spectral'")
      ->capture_default_str();
  chain_cmd->add_option("--jobs", chain.jobs, "Worker threads (0: all cores)")
      ->envname("MIRRORBENCH_JOBS")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  chain_cmd->add_option("--out-raw", chain.out_raw, "Raw per-trial CSV")->required();
  chain_cmd->add_option("--out-agg", chain.out_agg, "Aggregate CSV")->required();
  chain_cmd->add_option("--dump-graphs", chain.dump_graphs, "Directory for every generated edge list");
  chain_cmd->add_option("--dump-params", chain.dump_params, "JSON-lines parameter snapshots");
  chain_cmd->add_option("--out-graphlets", chain.out_graphlets, "Per-graph graphlet counts CSV (pca input)");
  chain_cmd->add_option("--manifest", chain.manifest, "Run manifest (default: OUT_RAW.manifest.json)");

  std::string stats_in, stats_out;
  auto* stats_cmd = app.add_subcommand("stats", "Re-aggregate a raw results CSV");
  stats_cmd->add_option("raw", stats_in, "Raw CSV")->required();
  stats_cmd->add_option("-o,--output", stats_out, "Aggregate CSV output")->required();

  std::string pca_in, pca_out;
  auto* pca_cmd = app.add_subcommand("pca", "2-D PCA of graphlet vectors");
  pca_cmd->add_option("graphlets", pca_in, "Graphlet CSV written by chain --out-graphlets")->required();
  pca_cmd->add_option("-o,--output", pca_out, "PCA CSV output")->required();

  std::string info_in;
  auto* info_cmd = app.add_subcommand("info", "Print structural statistics of an edge list");
  info_cmd->add_option("input", info_in, "Edge-list input")->required();

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    merge_config_file(args);
  } catch (const Failure& f) {
    report(mb_status_name(f.status), f.message);
    return exit_code_for(f.status);
  }

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report("usage", e.what());
    return kUsage;
  }

  try {
    if (*synth_cmd) return run_synth(synth);
    if (*fit_cmd) return run_fit(fit);
    if (*gen_cmd) return run_generate(gen);
    if (*cmp_cmd) return run_compare(cmp);
    if (*chain_cmd) return run_chain(chain);
    if (*stats_cmd) {
      check(mb_stats_csv(stats_in.c_str(), stats_out.c_str()));
      return kSuccess;
    }
    if (*info_cmd) return run_info(info_in);
    if (*pca_cmd) {
      check(mb_pca_csv(pca_in.c_str(), pca_out.c_str()));
      return kSuccess;
    }
  } catch (const Failure& f) {
    report(mb_status_name(f.status), f.message);
    return exit_code_for(f.status);
  }
  return kUsage;
}
