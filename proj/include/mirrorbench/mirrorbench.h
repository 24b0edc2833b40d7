/*
 * mirrorbench C API.
 *
 * Graphs, fitted parameters and chain results are opaque handles owned by
 * the caller and released with the matching *_free function. Every fallible
 * call returns an mb_status; on failure mb_last_error() describes the most
 * recent error raised on the calling thread.
 */
#ifndef MIRRORBENCH_H
#define MIRRORBENCH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MIRRORBENCH_BUILDING_LIBRARY)
#    define MB_API __declspec(dllexport)
#  else
#    define MB_API __declspec(dllimport)
#  endif
#else
#  define MB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mb_status {
  MB_OK = 0,
  MB_ERR_USAGE = 1,
  MB_ERR_IO = 2,
  MB_ERR_PARSE = 3,
  MB_ERR_DEGENERATE_INPUT = 4,
  MB_ERR_FIT_FAILED = 5,
  MB_ERR_GENERATION_DEGENERATE = 6,
  MB_ERR_UNDEFINED_PORTRAIT = 7,
  MB_ERR_SIZE_LIMIT = 8,
  MB_ERR_CANCELLED = 9,
  MB_ERR_INTERNAL = 10
} mb_status;

typedef struct mb_graph mb_graph;
typedef struct mb_params mb_params;
typedef struct mb_chain_result mb_chain_result;

MB_API const char* mb_version(void);
/* Message of the last failure on this thread; empty when none. */
MB_API const char* mb_last_error(void);
/* Stable identifier of a status, e.g. "generation_degenerate". */
MB_API const char* mb_status_name(mb_status status);

/* Strings returned through char** out-parameters are released here. */
MB_API void mb_string_free(char* text);

/* ---- graphs ------------------------------------------------------------ */

MB_API mb_status mb_graph_load(const char* path, mb_graph** out);
MB_API mb_status mb_graph_save(const mb_graph* graph, const char* path);
/* pairs holds 2 * pair_count ids; ids are compacted in order of appearance. */
MB_API mb_status mb_graph_from_edges(const uint64_t* pairs, size_t pair_count, mb_graph** out);
MB_API void mb_graph_free(mb_graph* graph);
MB_API size_t mb_graph_node_count(const mb_graph* graph);
MB_API size_t mb_graph_edge_count(const mb_graph* graph);

typedef struct mb_graph_summary {
  size_t nodes;
  size_t edges;
  uint64_t triangles;
  double avg_clustering;
  double avg_path_length;
  double density;
} mb_graph_summary;

MB_API mb_status mb_graph_summarize(const mb_graph* graph, mb_graph_summary* out);

MB_API mb_status mb_synth_clique_ring(size_t num_cliques, size_t clique_size, mb_graph** out);
MB_API mb_status mb_synth_tree(size_t target_nodes, uint64_t seed, mb_graph** out);
MB_API mb_status mb_synth_er(uint64_t nodes, uint64_t edges, uint64_t seed, mb_graph** out);

/* ---- models ------------------------------------------------------------ */

/* model: er, chung-lu, sbm, kron, bter. */
MB_API mb_status mb_fit(const char* model, const mb_graph* graph, mb_params** out);
/* MB_ERR_GENERATION_DEGENERATE when the result has no edges or < 4 nodes. */
MB_API mb_status mb_generate(const mb_params* params, uint64_t seed, mb_graph** out);
MB_API mb_status mb_params_to_json(const mb_params* params, char** out_json);
MB_API mb_status mb_params_from_json(const char* json, mb_params** out);
MB_API void mb_params_free(mb_params* params);

/* ---- metrics ----------------------------------------------------------- */

/* metric: degree-js, pagerank-js, portrait, lambda, rgfd-l1, rgfd-l2,
   netlsd, avg-cc, avg-pl. */
MB_API mb_status mb_compare(const mb_graph* a, const mb_graph* b, const char* metric, double* out);

/* ---- chains ------------------------------------------------------------ */

typedef struct mb_chain_config {
  const char* model;   /* as for mb_fit */
  const char* dataset; /* label written to every CSV row */
  int chain_length;
  int trials;
  uint64_t master_seed;
  const char* metrics; /* comma-separated ids, or "all" / "non-spectral" */
  int jobs;            /* 0: hardware concurrency */
  int keep_graphs;     /* non-zero: retain generated graphs for mb_chain_dump_graphs */
  int record_graphlets; /* non-zero: graphlet vectors even without rgfd */
} mb_chain_config;

MB_API mb_status mb_chain_run(const mb_chain_config* config, const mb_graph* source,
                              mb_chain_result** out);
MB_API void mb_chain_result_free(mb_chain_result* result);
MB_API size_t mb_chain_trial_count(const mb_chain_result* result);
/* Number of completed iterations of a trial; truncated_at is 0 for complete chains. */
MB_API mb_status mb_chain_trial_info(const mb_chain_result* result, size_t trial,
                                     size_t* iterations, int* truncated_at);
MB_API mb_status mb_chain_write_raw_csv(const mb_chain_result* result, const char* path);
MB_API mb_status mb_chain_write_aggregate_csv(const mb_chain_result* result, const char* path);
MB_API mb_status mb_chain_write_params_jsonl(const mb_chain_result* result, const char* path);
MB_API mb_status mb_chain_write_graphlet_csv(const mb_chain_result* result, const char* path);
/* Writes DIR/trial<T>_iter<I>.edges for every retained graph. */
MB_API mb_status mb_chain_dump_graphs(const mb_chain_result* result, const char* directory);

/* ---- post-processing --------------------------------------------------- */

MB_API mb_status mb_stats_csv(const char* raw_csv_path, const char* aggregate_csv_path);
MB_API mb_status mb_pca_csv(const char* graphlet_csv_path, const char* pca_csv_path);
/* Lower-case hex SHA-256 of a file's bytes. */
MB_API mb_status mb_file_digest(const char* path, char** out_hex);

#ifdef __cplusplus
}
#endif

#endif /* MIRRORBENCH_H */
