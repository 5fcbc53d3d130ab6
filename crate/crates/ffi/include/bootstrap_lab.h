#ifndef BOOTSTRAP_LAB_H
#define BOOTSTRAP_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of the C interface.
 */
typedef enum BlStatus {
  BL_STATUS_OK = 0,
  BL_STATUS_NULL_POINTER = 1,
  BL_STATUS_INVALID_INPUT = 2,
  BL_STATUS_PARSE = 3,
  BL_STATUS_CONSTRUCTION = 4,
  BL_STATUS_VERIFICATION = 5,
  BL_STATUS_INTERNAL = 6,
  BL_STATUS_IO = 7,
  BL_STATUS_OUT_OF_RANGE = 8,
  BL_STATUS_PANIC = 9,
} BlStatus;

/**
 * An undirected simple graph.
 */
typedef struct BlGraph BlGraph;

/**
 * An infection rule with its precomputed search data.
 */
typedef struct BlRule BlRule;

/**
 * The round-by-round record of one process run.
 */
typedef struct BlTrace BlTrace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread; empty after a
 * success. Valid until the next library call on the same thread.
 */
const char *bl_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *bl_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void bl_string_free(char *s);

/**
 * The edgeless graph on `n` vertices.
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
enum BlStatus bl_graph_new(size_t n, struct BlGraph **out);

/**
 * Decodes a graph6 string.
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
enum BlStatus bl_graph_from_graph6(const char *text, struct BlGraph **out);

/**
 * Encodes a graph as graph6; free the result with [`bl_string_free`].
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
enum BlStatus bl_graph_to_graph6(const struct BlGraph *g, char **out);

/**
 * Adds the edge `uv`; loops and out-of-range endpoints are rejected.
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
enum BlStatus bl_graph_add_edge(struct BlGraph *g, size_t u, size_t v);

/**
 * Number of vertices; 0 for a null handle.
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
size_t bl_graph_vertex_count(const struct BlGraph *g);

/**
 * Number of edges; 0 for a null handle.
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
size_t bl_graph_edge_count(const struct BlGraph *g);

/**
 * Whether `uv` is an edge; false for null handles and out-of-range input.
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
bool bl_graph_has_edge(const struct BlGraph *g, size_t u, size_t v);

/**
 * # Safety
 * `g` must come from this library and not have been freed.
 */
void bl_graph_free(struct BlGraph *g);

/**
 * The `n`-vertex starting graph with the largest known `K_4` running time.
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
enum BlStatus bl_k4_extremal(size_t n, struct BlGraph **out);

/**
 * Resolves a rule specification such as `"clique 4"` or `"cycle 3 + cycle 4"`.
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
enum BlStatus bl_rule_from_spec(const char *spec, struct BlRule **out);

/**
 * Vertices of the rule graph; 0 for a null handle.
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
size_t bl_rule_vertex_count(const struct BlRule *rule);

/**
 * # Safety
 * `rule` must come from this library and not have been freed.
 */
void bl_rule_free(struct BlRule *rule);

/**
 * Runs the process from `g`. `max_rounds == 0` means no limit.
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
enum BlStatus bl_run_process(const struct BlGraph *g,
                             const struct BlRule *rule,
                             size_t max_rounds,
                             struct BlTrace **out);

/**
 * Running time; 0 for a null handle.
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
size_t bl_trace_tau(const struct BlTrace *t);

/**
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
bool bl_trace_percolated(const struct BlTrace *t);

/**
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
bool bl_trace_truncated(const struct BlTrace *t);

/**
 * Number of edges infected in round `round` (1-based).
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
enum BlStatus bl_trace_round_size(const struct BlTrace *t, size_t round, size_t *out);

/**
 * The `index`-th edge (in sorted order) infected in round `round`.
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
enum BlStatus bl_trace_round_edge(const struct BlTrace *t,
                                  size_t round,
                                  size_t index,
                                  size_t *u,
                                  size_t *v);

/**
 * A new handle holding the final graph of the run.
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
enum BlStatus bl_trace_final_graph(const struct BlTrace *t, struct BlGraph **out);

/**
 * The trace document; free the result with [`bl_string_free`].
 * # Safety
 * Pointer arguments follow the contract in the crate documentation.
 */
enum BlStatus bl_trace_to_text(const struct BlTrace *t, char **out);

/**
 * # Safety
 * `t` must come from this library and not have been freed.
 */
void bl_trace_free(struct BlTrace *t);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BOOTSTRAP_LAB_H */
