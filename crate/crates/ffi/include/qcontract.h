#ifndef QCONTRACT_H
#define QCONTRACT_H

#pragma once

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result code of every fallible call.
 */
typedef enum QcStatus {
  QC_STATUS_OK = 0,
  QC_STATUS_NULL_POINTER = 1,
  QC_STATUS_INVALID_UTF8 = 2,
  QC_STATUS_PARSE_ERROR = 3,
  QC_STATUS_VERTEX_OUT_OF_RANGE = 4,
  QC_STATUS_NOT_AN_EDGE = 5,
  QC_STATUS_TOO_MANY_VERTICES = 6,
  QC_STATUS_INVALID_ARGUMENT = 7,
  QC_STATUS_PRECONDITION = 8,
  QC_STATUS_BUFFER_TOO_SMALL = 9,
  QC_STATUS_PANIC = 10,
} QcStatus;

/*
 Outcome of contracting one edge.
 */
typedef enum QcVerdict {
  QC_VERDICT_QUASI_K = 0,
  QC_VERDICT_CONNECTED_NOT_QUASI = 1,
  QC_VERDICT_BELOW = 2,
} QcVerdict;

/*
 Opaque graph handle.
 */
typedef struct QcGraph QcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Static, NUL-terminated description of a status code.
 */
const char *qc_status_message(enum QcStatus status);

/*
 Creates an edgeless graph on `n` vertices.

 # Safety
 `out` must be valid for writes.
 */
enum QcStatus qc_graph_new(size_t n, struct QcGraph **out);

/*
 Parses one graph6 line.

 # Safety
 `text` must be a NUL-terminated string and `out` valid for writes.
 */
enum QcStatus qc_graph_from_graph6(const char *text, struct QcGraph **out);

/*
 Releases a handle. Null is ignored.

 # Safety
 `g` must come from this library and not be used afterwards.
 */
void qc_graph_free(struct QcGraph *g);

/*
 # Safety
 `g` must be a live handle.
 */
enum QcStatus qc_graph_add_edge(struct QcGraph *g, size_t u, size_t v);

/*
 Number of vertices, or 0 for a null handle.

 # Safety
 `g` must be a live handle or null.
 */
size_t qc_graph_vertex_count(const struct QcGraph *g);

/*
 Number of edges, or 0 for a null handle.

 # Safety
 `g` must be a live handle or null.
 */
size_t qc_graph_edge_count(const struct QcGraph *g);

/*
 Writes the graph6 encoding plus a NUL into `buf`. `needed` receives the
 required size including the NUL, even when the buffer is too small.

 # Safety
 `g` must be a live handle, `buf` valid for `len` bytes (or null with
 `len` 0) and `needed` valid for writes.
 */
enum QcStatus qc_graph_to_graph6(const struct QcGraph *g, char *buf, size_t len, size_t *needed);

/*
 # Safety
 `g` must be a live handle and `out` valid for writes.
 */
enum QcStatus qc_vertex_connectivity(const struct QcGraph *g, size_t *out);

/*
 `k` must be at least 2.

 # Safety
 `g` must be a live handle and `out` valid for writes.
 */
enum QcStatus qc_is_quasi_k_connected(const struct QcGraph *g, size_t k, bool *out);

/*
 Contracts edge `u v` into a new handle; the merged vertex is `min(u, v)`.

 # Safety
 `g` must be a live handle and `out` valid for writes.
 */
enum QcStatus qc_contract_edge(const struct QcGraph *g, size_t u, size_t v, struct QcGraph **out);

/*
 Classifies `G/uv` against quasi k-connectivity.

 # Safety
 `g` must be a live handle and `out` valid for writes.
 */
enum QcStatus qc_classify_contraction(const struct QcGraph *g,
                                      size_t u,
                                      size_t v,
                                      size_t k,
                                      enum QcVerdict *out);

/*
 Whether no edge is k-contractible (`quasi` false) or quasi k-contractible
 (`quasi` true). The graph must be k-connected, respectively quasi
 k-connected, else [`QcStatus::Precondition`].

 # Safety
 `g` must be a live handle and `out` valid for writes.
 */
enum QcStatus qc_is_contraction_critical(const struct QcGraph *g, size_t k, bool quasi, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QCONTRACT_H */
