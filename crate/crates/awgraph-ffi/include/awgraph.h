/* C interface to the awgraph library. Generated; do not edit. */

#ifndef AWGRAPH_H
#define AWGRAPH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum AwgStatus {
  /**
   * The call succeeded.
   */
  AwgStatusOk = 0,
  /**
   * Malformed input (parse errors, out-of-range vertices, bad bounds).
   */
  AwgStatusInput = 1,
  /**
   * A documented precondition of the operation does not hold.
   */
  AwgStatusPrecondition = 2,
  /**
   * A required pointer argument was null.
   */
  AwgStatusNull = 3,
  /**
   * An internal error or caught panic; always a bug in this library.
   */
  AwgStatusInternal = 4,
} AwgStatus;

/**
 * The result of an aw computation (opaque): the value itself plus the
 * largest rainbow-free exact coloring found on the way.
 */
typedef struct AwgAwResult AwgAwResult;

/**
 * A connected graph with precomputed distances (opaque).
 */
typedef struct AwgGraph AwgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the message of the last error on this thread. The pointer
 * stays valid until the next failing call on the same thread; never
 * free it.
 */
const char *awg_last_error(void);

/**
 * Version of the JSON record schema used by the core library's stores.
 */
uint32_t awg_schema_version(void);

/**
 * Parses a graph from text (graph6 or edge list, detected by shape) into
 * a new handle. On success `*out` owns the graph; release it with
 * [`awg_graph_free`].
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be a valid
 * pointer.
 */
enum AwgStatus awg_graph_parse(const char *text, struct AwgGraph **out);

/**
 * Releases a graph handle. Null is ignored.
 *
 * # Safety
 * `g` must be null or a pointer returned by this library that has not
 * been freed already.
 */
void awg_graph_free(struct AwgGraph *g);

/**
 * Number of vertices, or 0 if the handle is null.
 *
 * # Safety
 * `g` must be null or a live handle from this library.
 */
uintptr_t awg_graph_vertex_count(const struct AwgGraph *g);

/**
 * Number of edges, or 0 if the handle is null.
 *
 * # Safety
 * `g` must be null or a live handle from this library.
 */
uintptr_t awg_graph_edge_count(const struct AwgGraph *g);

/**
 * Distance between 1-based vertices `u` and `v`, written to `*out`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be a valid pointer.
 */
enum AwgStatus awg_graph_distance(const struct AwgGraph *g,
                                  uintptr_t u,
                                  uintptr_t v,
                                  uint32_t *out);

/**
 * Diameter of the graph, written to `*out`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be a valid pointer.
 */
enum AwgStatus awg_graph_diameter(const struct AwgGraph *g, uint32_t *out);

/**
 * Encodes the graph as graph6 into a fresh NUL-terminated string owned
 * by the caller; release it with [`awg_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be a valid pointer.
 */
enum AwgStatus awg_graph_to_graph6(const struct AwgGraph *g, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library that has not
 * been freed already.
 */
void awg_string_free(char *s);

/**
 * Builds the Cartesian product of two graphs as a new graph handle.
 * Vertex (i, j) of the product gets the 1-based id (i - 1) * n_right + j.
 *
 * # Safety
 * `left` and `right` must be live handles; `out` must be a valid
 * pointer.
 */
enum AwgStatus awg_graph_product(const struct AwgGraph *left,
                                 const struct AwgGraph *right,
                                 struct AwgGraph **out);

/**
 * Whether the graph contains `k` vertices pairwise at distance exactly
 * the diameter; writes 1 or 0 to `*out`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be a valid pointer.
 */
enum AwgStatus awg_graph_is_k_peripheral(const struct AwgGraph *g, uintptr_t k, int32_t *out);

/**
 * Computes aw(G, k) by exhaustive search. On success `*out` owns the
 * result; release it with [`awg_result_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be a valid pointer.
 */
enum AwgStatus awg_aw_compute(const struct AwgGraph *g, uintptr_t k, struct AwgAwResult **out);

/**
 * The computed aw value, or 0 if the handle is null.
 *
 * # Safety
 * `r` must be null or a live result handle.
 */
uint16_t awg_result_value(const struct AwgAwResult *r);

/**
 * Length of the stored certificate (the largest rainbow-free exact
 * coloring): the vertex count, or 0 when no certificate exists.
 *
 * # Safety
 * `r` must be null or a live result handle.
 */
uintptr_t awg_result_certificate_len(const struct AwgAwResult *r);

/**
 * Copies the certificate colors (1-based colors, one per vertex) into
 * `buf`, which must hold at least [`awg_result_certificate_len`]
 * entries; writes the copied length to `*written`.
 *
 * # Safety
 * `r` must be a live result handle; `buf` must point to at least `cap`
 * writable entries; `written` must be a valid pointer.
 */
enum AwgStatus awg_result_certificate(const struct AwgAwResult *r,
                                      uint16_t *buf,
                                      uintptr_t cap,
                                      uintptr_t *written);

/**
 * Releases a result handle. Null is ignored.
 *
 * # Safety
 * `r` must be null or a live result handle that has not been freed
 * already.
 */
void awg_result_free(struct AwgAwResult *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AWGRAPH_H */
