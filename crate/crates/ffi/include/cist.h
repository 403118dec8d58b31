#ifndef CIST_H
#define CIST_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Result of every fallible call.
 */
typedef enum CistStatus {
  CIST_STATUS_OK = 0,
  /*
   The graph is disconnected, has fewer than 7 vertices, or μ₂ < n.
   */
  CIST_STATUS_PRECONDITION_FAILED = 1,
  /*
   The edge-list text could not be read.
   */
  CIST_STATUS_PARSE_ERROR = 2,
  /*
   A null pointer, out-of-range vertex, short buffer or malformed tree.
   */
  CIST_STATUS_INVALID_ARGUMENT = 3,
  /*
   The exhaustive search found no 2-CIST-partition.
   */
  CIST_STATUS_NOT_FOUND = 4,
  /*
   The graph exceeds the exhaustive search's size cap.
   */
  CIST_STATUS_TOO_LARGE = 5,
  /*
   An internal consistency check failed; this is a bug.
   */
  CIST_STATUS_INTERNAL_ERROR = 6,
  /*
   A panic was caught at the boundary; this is a bug.
   */
  CIST_STATUS_PANIC = 7,
} CistStatus;

/*
 A 2-CIST-partition with its two spanning trees.
 */
typedef struct CistConstruction CistConstruction;

/*
 An undirected simple graph.
 */
typedef struct CistGraph CistGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or null. The pointer
 stays valid until the next call into this library on the same thread.
 */
const char *cist_last_error(void);

/*
 Builds a graph on `n` vertices from `edge_count` pairs stored flat in `edges`.

 # Safety
 `edges` must be valid for `2 * edge_count` reads; `out` must be writable.
 */
enum CistStatus cist_graph_new(size_t n,
                               const size_t *edges,
                               size_t edge_count,
                               struct CistGraph **out);

/*
 Parses edge-list text (one `u v` pair per line, optional `p <n>` header).

 # Safety
 `text` must be a NUL-terminated string; `out` must be writable.
 */
enum CistStatus cist_graph_parse(const char *text, struct CistGraph **out);

/*
 # Safety
 `graph` is null or a handle from this library that has not been freed.
 */
void cist_graph_free(struct CistGraph *graph);

/*
 Vertex count, or 0 for a null handle.

 # Safety
 `graph` is null or a live handle.
 */
size_t cist_graph_vertex_count(const struct CistGraph *graph);

/*
 Edge count, or 0 for a null handle.

 # Safety
 `graph` is null or a live handle.
 */
size_t cist_graph_edge_count(const struct CistGraph *graph);

/*
 Input label of vertex `v`.

 # Safety
 `graph` is a live handle; `out` is writable.
 */
enum CistStatus cist_graph_label(const struct CistGraph *graph, size_t v, size_t *out);

/*
 μ₂(G). When no pair is at distance two, `*infinite` is set and `*value` is 0.

 # Safety
 `graph` is a live handle; `value` and `infinite` are writable.
 */
enum CistStatus cist_graph_mu2(const struct CistGraph *graph, size_t *value, bool *infinite);

/*
 Vertex connectivity κ(G).

 # Safety
 `graph` is a live handle; `out` is writable.
 */
enum CistStatus cist_graph_connectivity(const struct CistGraph *graph, size_t *out);

/*
 Whether the graph is connected with `n >= 7` and μ₂ >= n.

 # Safety
 `graph` is a live handle; `out` is writable.
 */
enum CistStatus cist_graph_fan_ok(const struct CistGraph *graph, bool *out);

/*
 Builds a 2-CIST-partition and its two trees.

 # Safety
 `graph` is a live handle; `out` is writable.
 */
enum CistStatus cist_construct(const struct CistGraph *graph, struct CistConstruction **out);

/*
 # Safety
 `c` is null or a handle from [`cist_construct`] that has not been freed.
 */
void cist_construction_free(struct CistConstruction *c);

/*
 Label of the case-analysis branch that produced the partition, or null.
 Valid while `c` lives.

 # Safety
 `c` is null or a live handle.
 */
const char *cist_construction_branch(const struct CistConstruction *c);

/*
 Side of vertex `v`: 1 for `V1`, 2 for `V2`.

 # Safety
 `c` is a live handle; `out` is writable.
 */
enum CistStatus cist_construction_side(const struct CistConstruction *c, size_t v, uint8_t *out);

/*
 Copies tree `tree` (1 or 2) as flat `u v` pairs into `buf`, which holds
 `capacity` values. `*written` receives the number of edges, `n - 1`;
 when `capacity < 2 * (n - 1)` nothing is copied and the call fails.

 # Safety
 `c` is a live handle; `buf` is valid for `capacity` writes; `written` is writable.
 */
enum CistStatus cist_construction_tree(const struct CistConstruction *c,
                                       uint8_t tree,
                                       size_t *buf,
                                       size_t capacity,
                                       size_t *written);

/*
 The certificate as JSON, in input labels. Free with [`cist_string_free`].
 Returns null on a null handle.

 # Safety
 `c` is null or a live handle.
 */
char *cist_construction_certificate_json(const struct CistConstruction *c);

/*
 # Safety
 `s` is null or a string returned by this library that has not been freed.
 */
void cist_string_free(char *s);

/*
 Checks whether two spanning trees, each given as `edge_count` flat
 pairs, are completely independent. Both the path-based definition and
 the edge-disjoint/internal-vertex criterion are evaluated; they must
 agree. Input that is not a pair of spanning trees fails with
 `CIST_STATUS_INVALID_ARGUMENT`.

 # Safety
 `graph` is a live handle; `t1` and `t2` are valid for `2 * edge_count`
 reads; `out` is writable.
 */
enum CistStatus cist_verify(const struct CistGraph *graph,
                            const size_t *t1,
                            const size_t *t2,
                            size_t edge_count,
                            bool *out);

/*
 Exhaustive search for a 2-CIST-partition. Returns `CIST_STATUS_NOT_FOUND`
 when none exists; `*checked` is the number of bipartitions examined.

 # Safety
 `graph` is a live handle; `checked` is writable.
 */
enum CistStatus cist_oracle(const struct CistGraph *graph, uint64_t *checked);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CIST_H */
