#ifndef BROADCAST_LAB_H
#define BROADCAST_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum BlStatus {
  BL_STATUS_OK = 0,
  BL_STATUS_NULL_POINTER = 1,
  BL_STATUS_INVALID_UTF8 = 2,
  BL_STATUS_INVALID_GRAPH = 3,
  BL_STATUS_DISCONNECTED = 4,
  BL_STATUS_CAP_EXCEEDED = 5,
  BL_STATUS_INVALID_ARGUMENT = 6,
  BL_STATUS_GRAPH6 = 7,
  BL_STATUS_CERTIFICATE_REJECTED = 8,
  BL_STATUS_BUFFER_TOO_SMALL = 9,
  BL_STATUS_PANIC = 10,
} BlStatus;

/**
 * Opaque graph handle.
 */
typedef struct BlGraph BlGraph;

/**
 * Opaque solver result handle.
 */
typedef struct BlResult BlResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread; empty if none. The
 * pointer stays valid until the next failing call on this thread.
 */
const char *bl_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *bl_version(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void bl_string_free(char *s);

/**
 * Parses graph6 text into a new graph handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum BlStatus bl_graph_from_graph6(const char *text, struct BlGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`2 * edge_count` entries).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be NULL when
 * `edge_count` is 0); `out` must be writable.
 */
enum BlStatus bl_graph_from_edges(uintptr_t n,
                                  const uint32_t *edges,
                                  uintptr_t edge_count,
                                  struct BlGraph **out);

/**
 * Generates a family member, e.g. `("spider", "2,2,2")`.
 *
 * # Safety
 * `name` and `args` must be NUL-terminated strings; `out` must be writable.
 */
enum BlStatus bl_graph_from_family(const char *name, const char *args, struct BlGraph **out);

/**
 * Vertex count, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
uintptr_t bl_graph_vertex_count(const struct BlGraph *g);

/**
 * graph6 encoding of the graph, or NULL for a NULL handle.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
char *bl_graph_to_graph6(const struct BlGraph *g);

/**
 * # Safety
 * `g` must be NULL or a handle from this library not yet freed.
 */
void bl_graph_free(struct BlGraph *g);

/**
 * Solves one parameter (`"Gamma_b"`, `"alpha_bnr"`, ...). A `node_budget`
 * of 0 keeps the default; `threads` of 0 uses the default worker count.
 *
 * # Safety
 * `g` must be a live graph handle, `kind` a NUL-terminated string and `out`
 * writable.
 */
enum BlStatus bl_solve(const struct BlGraph *g,
                       const char *kind,
                       uint64_t node_budget,
                       uintptr_t threads,
                       struct BlResult **out);

/**
 * # Safety
 * `r` must be NULL or a live result handle.
 */
uint32_t bl_result_value(const struct BlResult *r);

/**
 * True when the value is proven optimal.
 *
 * # Safety
 * `r` must be NULL or a live result handle.
 */
bool bl_result_optimal(const struct BlResult *r);

/**
 * # Safety
 * `r` must be NULL or a live result handle.
 */
uint64_t bl_result_nodes(const struct BlResult *r);

/**
 * Copies the witness strengths into `buf`, which must hold one entry per
 * vertex.
 *
 * # Safety
 * `r` must be a live result handle and `buf` writable for `len` values.
 */
enum BlStatus bl_result_witness(const struct BlResult *r, uint32_t *buf, uintptr_t len);

/**
 * JSON form of the result, or NULL for a NULL handle.
 *
 * # Safety
 * `r` must be NULL or a live result handle.
 */
char *bl_result_to_json(const struct BlResult *r);

/**
 * # Safety
 * `r` must be NULL or a handle from this library not yet freed.
 */
void bl_result_free(struct BlResult *r);

/**
 * Builds and validates a named certificate on a family member, writing its
 * weight to `weight` on success.
 *
 * # Safety
 * String arguments must be NUL-terminated; `weight` must be writable.
 */
enum BlStatus bl_certificate_verify(const char *certificate,
                                    const char *family,
                                    const char *args,
                                    uint32_t *weight);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BROADCAST_LAB_H */
