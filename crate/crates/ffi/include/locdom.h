#ifndef LOCDOM_H
#define LOCDOM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LocdomInvariant {
  LOCDOM_INVARIANT_METRIC_DIMENSION = 0,
  LOCDOM_INVARIANT_DETERMINING_NUMBER = 1,
  LOCDOM_INVARIANT_LOCATION_DOMINATION = 2,
  LOCDOM_INVARIANT_DOMINATION = 3,
  /*
   Uses the `k` field of [`LocdomOptions`].
   */
  LOCDOM_INVARIANT_K_DOMINATION = 4,
  LOCDOM_INVARIANT_UPPER_DOMINATION = 5,
  LOCDOM_INVARIANT_INDEPENDENCE = 6,
  LOCDOM_INVARIANT_CLIQUE = 7,
  LOCDOM_INVARIANT_CHROMATIC = 8,
  LOCDOM_INVARIANT_MATCHING_NUMBER = 9,
  /*
   Greedy locating-dominating set from seed vertex `k`.
   */
  LOCDOM_INVARIANT_GREEDY_LD = 10,
  /*
   Matching-based locating-dominating set.
   */
  LOCDOM_INVARIANT_MATCHING_LD = 11,
} LocdomInvariant;

typedef enum LocdomSetKind {
  LOCDOM_SET_KIND_RESOLVING = 0,
  LOCDOM_SET_KIND_DETERMINING = 1,
  LOCDOM_SET_KIND_LOCATING_DOMINATING = 2,
} LocdomSetKind;

typedef enum LocdomStatus {
  LOCDOM_STATUS_OK = 0,
  LOCDOM_STATUS_NULL_POINTER = 1,
  /*
   Malformed graph6 text, bad edge or vertex, order outside 1..=64.
   */
  LOCDOM_STATUS_INVALID_INPUT = 2,
  /*
   The graph does not meet the computation's hypotheses.
   */
  LOCDOM_STATUS_PRECONDITION = 3,
  LOCDOM_STATUS_CAP_EXCEEDED = 4,
  LOCDOM_STATUS_TIMEOUT = 5,
  /*
   A bug: the library panicked.
   */
  LOCDOM_STATUS_INTERNAL = 6,
} LocdomStatus;

/*
 Opaque graph handle.
 */
typedef struct LocdomGraph LocdomGraph;

/*
 Solver limits. Zero means "default" for every field.
 */
typedef struct LocdomOptions {
  uint32_t cap;
  uint64_t time_budget_ms;
  uint32_t k;
} LocdomOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or NULL. Valid until the
 next call into the library from the same thread.
 */
const char *locdom_last_error(void);

/*
 Parses a NUL-terminated graph6 string into `*out`.

 # Safety
 `text` must be NULL or a valid C string; `out` must be NULL or writable.
 */
enum LocdomStatus locdom_graph_from_graph6(const char *text, struct LocdomGraph **out);

/*
 Builds a graph of order `n` from `edge_count` pairs stored flat in `edges`.

 # Safety
 `edges` must point to `2 * edge_count` readable values (or be NULL when
 `edge_count` is 0); `out` must be NULL or writable.
 */
enum LocdomStatus locdom_graph_from_edges(uint32_t n,
                                          const uint32_t *edges,
                                          size_t edge_count,
                                          struct LocdomGraph **out);

/*
 Releases a graph. NULL is ignored.

 # Safety
 `g` must be NULL or a handle from this library not yet freed.
 */
void locdom_graph_free(struct LocdomGraph *g);

/*
 Order of the graph, or 0 for NULL.

 # Safety
 `g` must be NULL or a live handle.
 */
uint32_t locdom_graph_order(const struct LocdomGraph *g);

/*
 Whether `u` and `v` are adjacent. Out-of-range vertices are not.

 # Safety
 `g` must be NULL or a live handle.
 */
bool locdom_graph_has_edge(const struct LocdomGraph *g, uint32_t u, uint32_t v);

/*
 Writes a newly allocated graph6 string to `*out`; release it with
 [`locdom_string_free`].

 # Safety
 `g` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum LocdomStatus locdom_graph_to_graph6(const struct LocdomGraph *g, char **out);

/*
 Releases a string returned by this library. NULL is ignored.

 # Safety
 `s` must be NULL or a string from this library not yet freed.
 */
void locdom_string_free(char *s);

/*
 Computes an invariant. `*value` receives its value and, when `witness` is
 not NULL, `*witness` a vertex set attaining it (for the chromatic number,
 one colour class; for the matching number, the matched vertices). `opts`
 may be NULL for defaults.

 # Safety
 `g` must be NULL or a live handle; `opts` NULL or readable; `value` and
 `witness` NULL or writable.
 */
enum LocdomStatus locdom_compute(const struct LocdomGraph *g,
                                 enum LocdomInvariant invariant,
                                 const struct LocdomOptions *opts,
                                 uint32_t *value,
                                 uint64_t *witness);

/*
 Tests whether the vertex set `set` has the given property in `g`.

 # Safety
 `g` must be NULL or a live handle; `out` NULL or writable.
 */
enum LocdomStatus locdom_check_set(const struct LocdomGraph *g,
                                   enum LocdomSetKind kind,
                                   uint64_t set,
                                   bool *out);

/*
 Library version as a static NUL-terminated string.
 */
const char *locdom_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LOCDOM_H */
