#ifndef CHORDAL_MDS_H
#define CHORDAL_MDS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum CmdsStatus {
  CMDS_STATUS_OK = 0,
  CMDS_STATUS_NULL_POINTER = 1,
  CMDS_STATUS_INVALID_GRAPH = 2,
  CMDS_STATUS_PARSE_ERROR = 3,
  CMDS_STATUS_INVALID_UTF8 = 4,
  CMDS_STATUS_NOT_CHORDAL = 5,
  CMDS_STATUS_OUT_OF_RANGE = 6,
  CMDS_STATUS_PANIC = 7,
} CmdsStatus;

/**
 * A graph with its clique tree, or the reason none exists.
 */
typedef struct CmdsGraph CmdsGraph;

/**
 * Solutions collected by `cmds_solutions_new`.
 */
typedef struct CmdsSolutions CmdsSolutions;

/**
 * Receives one solution as ascending vertex ids. A non-zero return stops
 * the enumeration.
 */
typedef int (*CmdsVisit)(const uint32_t *vertices, size_t len, void *user_data);

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`2 * edge_count` ids). `edges` may be null when `edge_count`
 * is zero.
 *
 * # Safety
 * `edges` must be valid for `2 * edge_count` reads and `out` for one write.
 */
enum CmdsStatus cmds_graph_new(size_t n,
                               const uint32_t *edges,
                               size_t edge_count,
                               struct CmdsGraph **out);

/**
 * Parses a graph in the text format of the command-line tool: a line
 * `n m`, then `m` lines `u v`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` valid for one write.
 */
enum CmdsStatus cmds_graph_parse(const char *text, struct CmdsGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `graph` must come from this library and not be used afterwards.
 */
void cmds_graph_free(struct CmdsGraph *graph);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t cmds_graph_vertex_count(const struct CmdsGraph *graph);

/**
 * Whether the graph is chordal. False for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
bool cmds_graph_is_chordal(const struct CmdsGraph *graph);

/**
 * Streams every minimal dominating set to `visit`, stopping after `limit`
 * solutions when `limit` is non-zero or when `visit` returns non-zero.
 * The number of solutions delivered is stored in `out_count` when it is
 * not null. The vertex buffer passed to `visit` is valid only during the
 * call.
 *
 * # Safety
 * `graph` must be a live handle, `visit` safe to call with `user_data`,
 * and `out_count` null or valid for one write.
 */
enum CmdsStatus cmds_enumerate(const struct CmdsGraph *graph,
                               uint64_t limit,
                               CmdsVisit visit,
                               void *user_data,
                               uint64_t *out_count);

/**
 * Collects up to `limit` solutions (all when `limit` is 0).
 *
 * # Safety
 * `graph` must be a live handle and `out` valid for one write.
 */
enum CmdsStatus cmds_solutions_new(const struct CmdsGraph *graph,
                                   uint64_t limit,
                                   struct CmdsSolutions **out);

/**
 * Number of collected solutions, or 0 for a null handle.
 *
 * # Safety
 * `solutions` must be null or a live handle.
 */
size_t cmds_solutions_len(const struct CmdsSolutions *solutions);

/**
 * Points `out_vertices` at solution `index` (ascending ids) and stores its
 * size in `out_len`. The buffer lives as long as the handle.
 *
 * # Safety
 * `solutions` must be a live handle; both out pointers valid for one write.
 */
enum CmdsStatus cmds_solutions_get(const struct CmdsSolutions *solutions,
                                   size_t index,
                                   const uint32_t **out_vertices,
                                   size_t *out_len);

/**
 * Releases collected solutions. Null is ignored.
 *
 * # Safety
 * `solutions` must come from this library and not be used afterwards.
 */
void cmds_solutions_free(struct CmdsSolutions *solutions);

/**
 * Static description of a status code; unknown codes get a generic text.
 */
const char *cmds_status_message(int status);

/**
 * Detail of the last failed call on this thread, or an empty string after
 * a successful one. Valid until the next library call on the thread.
 */
const char *cmds_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHORDAL_MDS_H */
