#ifndef CHEEGERLAB_H
#define CHEEGERLAB_H

/* Generated from the cheegerlab-ffi crate by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible library call.
 */
typedef enum CheegerlabStatus {
  /**
   * The call succeeded and all out-parameters are set.
   */
  CHEEGERLAB_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  CHEEGERLAB_STATUS_NULL_ARGUMENT = 1,
  /**
   * A text argument was not valid UTF-8.
   */
  CHEEGERLAB_STATUS_INVALID_UTF8 = 2,
  /**
   * The edge-list text could not be parsed.
   */
  CHEEGERLAB_STATUS_PARSE_ERROR = 3,
  /**
   * The described graph is invalid (loop, duplicate edge, isolated
   * vertex, out-of-range index) or the family parameters are.
   */
  CHEEGERLAB_STATUS_INVALID_GRAPH = 4,
  /**
   * The graph exceeds a size cap of the requested computation.
   */
  CHEEGERLAB_STATUS_TOO_LARGE = 5,
  /**
   * The computation is only defined for connected graphs.
   */
  CHEEGERLAB_STATUS_NOT_CONNECTED = 6,
  /**
   * The eigensolver could not certify the requested accuracy.
   */
  CHEEGERLAB_STATUS_NUMERICAL_FAILURE = 7,
} CheegerlabStatus;

/**
 * An undirected graph. Opaque; create, query and free it through the
 * `cheegerlab_*` functions only.
 */
typedef struct CheegerlabGraph CheegerlabGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the library version as a static string; do not free it.
 */
const char *cheegerlab_version(void);

/**
 * Returns the explanation of the most recent failure on this thread, or
 * null if none occurred. The pointer stays valid until the next failing
 * call on the same thread; do not free it.
 */
const char *cheegerlab_last_error_message(void);

/**
 * Parses an edge-list document (optional `n N` header, one `u v` pair per
 * line, `#` comments) into a new graph handle.
 *
 * # Safety
 * `text` must point to a NUL-terminated string; `out_graph` must be a
 * valid location to store the handle.
 */
enum CheegerlabStatus cheegerlab_graph_parse(const char *text, struct CheegerlabGraph **out_graph);

/**
 * Builds a graph on `vertex_count` vertices from `edge_count` endpoint
 * pairs laid out as `u0 v0 u1 v1 ...` in `endpoints`.
 *
 * # Safety
 * `endpoints` must point to `2 * edge_count` readable `uint32_t` values
 * (it may be null only when `edge_count` is 0); `out_graph` must be a
 * valid location to store the handle.
 */
enum CheegerlabStatus cheegerlab_graph_from_edges(size_t vertex_count,
                                                  const uint32_t *endpoints,
                                                  size_t edge_count,
                                                  struct CheegerlabGraph **out_graph);

/**
 * Builds the joined circulant/independent-set graph with `n` vertices,
 * `k` of them independent, and circulant-side degree `d`.
 *
 * # Safety
 * `out_graph` must be a valid location to store the handle.
 */
enum CheegerlabStatus cheegerlab_one_sided_graph(size_t n,
                                                 size_t k,
                                                 size_t d,
                                                 struct CheegerlabGraph **out_graph);

/**
 * Releases a graph handle. Null is ignored.
 *
 * # Safety
 * `graph` must be null or a handle from this library not yet freed; it
 * must not be used afterwards.
 */
void cheegerlab_graph_free(struct CheegerlabGraph *graph);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle from this library.
 */
size_t cheegerlab_graph_vertex_count(const struct CheegerlabGraph *graph);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle from this library.
 */
size_t cheegerlab_graph_edge_count(const struct CheegerlabGraph *graph);

/**
 * Whether the graph is connected; false for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle from this library.
 */
bool cheegerlab_graph_is_connected(const struct CheegerlabGraph *graph);

/**
 * Renders the graph back into edge-list text (with an `n N` header).
 * Free the result with [`cheegerlab_string_free`].
 *
 * # Safety
 * `graph` must be a live handle; `out_text` must be a valid location to
 * store the string.
 */
enum CheegerlabStatus cheegerlab_graph_format(const struct CheegerlabGraph *graph, char **out_text);

/**
 * The degree bound `Q = max over edges of 1/deg(u) + 1/deg(v)`, written
 * as a reduced fraction.
 *
 * # Safety
 * `graph` must be a live handle; `out_num` and `out_den` must be valid
 * locations for one `int64_t` each.
 */
enum CheegerlabStatus cheegerlab_q(const struct CheegerlabGraph *graph,
                                   int64_t *out_num,
                                   int64_t *out_den);

/**
 * The companion constant `tau`; `Q * tau` bounds the top eigenvalue from
 * above.
 *
 * # Safety
 * `graph` must be a live handle; `out_num` and `out_den` must be valid
 * locations for one `int64_t` each.
 */
enum CheegerlabStatus cheegerlab_tau(const struct CheegerlabGraph *graph,
                                     int64_t *out_num,
                                     int64_t *out_den);

/**
 * The Cheeger constant by exact enumeration (connected graphs, at most
 * 22 vertices).
 *
 * # Safety
 * `graph` must be a live handle; `out_num` and `out_den` must be valid
 * locations for one `int64_t` each.
 */
enum CheegerlabStatus cheegerlab_cheeger(const struct CheegerlabGraph *graph,
                                         int64_t *out_num,
                                         int64_t *out_den);

/**
 * The dual Cheeger constant by exact enumeration (at most 13 vertices);
 * exactly 1 on bipartite graphs.
 *
 * # Safety
 * `graph` must be a live handle; `out_num` and `out_den` must be valid
 * locations for one `int64_t` each.
 */
enum CheegerlabStatus cheegerlab_dual_cheeger(const struct CheegerlabGraph *graph,
                                              int64_t *out_num,
                                              int64_t *out_den);

/**
 * The largest normalized-Laplacian eigenvalue, solved to residual
 * tolerance `tol` (pass 0 for the default).
 *
 * # Safety
 * `graph` must be a live handle; `out_value` must be a valid location for
 * one `double`.
 */
enum CheegerlabStatus cheegerlab_lambda_max(const struct CheegerlabGraph *graph,
                                            double tol,
                                            double *out_value);

/**
 * The second-smallest normalized-Laplacian eigenvalue, solved to residual
 * tolerance `tol` (pass 0 for the default).
 *
 * # Safety
 * `graph` must be a live handle; `out_value` must be a valid location for
 * one `double`.
 */
enum CheegerlabStatus cheegerlab_lambda_2(const struct CheegerlabGraph *graph,
                                          double tol,
                                          double *out_value);

/**
 * Runs the full inequality check suite (skipping what the graph's size or
 * disconnection rules out) and returns the report as a JSON document.
 * Free the result with [`cheegerlab_string_free`].
 *
 * # Safety
 * `graph` must be a live handle; `out_json` must be a valid location to
 * store the string.
 */
enum CheegerlabStatus cheegerlab_report_json(const struct CheegerlabGraph *graph,
                                             double tol,
                                             char **out_json);

/**
 * Releases a string handed out by this library. Null is ignored.
 *
 * # Safety
 * `text` must be null or a string from this library not yet freed; it
 * must not be used afterwards.
 */
void cheegerlab_string_free(char *text);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CHEEGERLAB_H */
