/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef AQCIST_H
#define AQCIST_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. `AQ_STATUS_NOT_CIST` is a verification verdict, not an
// error.
typedef enum AqStatus {
  AQ_STATUS_OK = 0,
  AQ_STATUS_NOT_CIST = 1,
  AQ_STATUS_INVALID_ARGUMENT = 2,
  AQ_STATUS_UNSUPPORTED = 3,
  AQ_STATUS_PARSE = 4,
  AQ_STATUS_NULL_POINTER = 5,
  AQ_STATUS_BUFFER_TOO_SMALL = 6,
  AQ_STATUS_INTERNAL = 7,
} AqStatus;

typedef enum AqMode {
  AQ_MODE_CHARACTERIZATION = 0,
  AQ_MODE_BRUTE_FORCE = 1,
  AQ_MODE_BOTH = 2,
} AqMode;

// Opaque family handle.
typedef struct AqFamily AqFamily;

typedef struct AqGraphStats {
  uint64_t vertex_count;
  uint64_t edge_count;
  uint32_t degree;
} AqGraphStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failing call on this thread; empty if none. Valid
// until the next failing call on the same thread.
const char *aq_last_error(void);

// Library version as a static NUL-terminated string.
const char *aq_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void aq_string_free(char *s);

// Whether `u` and `v` are adjacent in AQ_n.
//
// # Safety
// `out` must be valid for writes.
enum AqStatus aq_are_adjacent(uint8_t n, uint32_t u, uint32_t v, bool *out);

// Vertex count, edge count and degree of AQ_n.
//
// # Safety
// `out` must be valid for writes.
enum AqStatus aq_graph_stats(uint8_t n, struct AqGraphStats *out);

// Builds the CIST family for AQ_n (3 <= n <= 14).
//
// # Safety
// `out` must be valid for writes; on success it receives a handle to free
// with `aq_family_free`.
enum AqStatus aq_family_construct(uint32_t n, struct AqFamily **out);

// The stored base family for n in 3..=5.
//
// # Safety
// As for `aq_family_construct`.
enum AqStatus aq_family_base(uint8_t n, struct AqFamily **out);

// Parses a family JSON document. Each tree must be a spanning tree of
// AQ_n; the family itself is not verified.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be valid for writes.
enum AqStatus aq_family_from_json(const char *json, struct AqFamily **out);

// Canonical JSON for the family. Free the result with `aq_string_free`.
//
// # Safety
// `family` must be a live handle; `out` must be valid for writes.
enum AqStatus aq_family_to_json(const struct AqFamily *family, char **out);

// Releases a family handle. Null is ignored.
//
// # Safety
// `family` must come from this library and not be freed twice.
void aq_family_free(struct AqFamily *family);

// Dimension n of the family, or 0 for a null handle.
//
// # Safety
// `family` must be null or a live handle.
uint8_t aq_family_dim(const struct AqFamily *family);

// Number of trees, or 0 for a null handle.
//
// # Safety
// `family` must be null or a live handle.
size_t aq_family_tree_count(const struct AqFamily *family);

// Diameter of tree `tree` (zero-based index).
//
// # Safety
// `family` must be a live handle; `out` must be valid for writes.
enum AqStatus aq_family_tree_diameter(const struct AqFamily *family, size_t tree, uint32_t *out);

// Copies the sorted edges of tree `tree` into `buf` as `lo, hi` pairs.
// `capacity` counts edges, so `buf` holds `2 * capacity` values. `out_len`
// always receives the edge count; if it exceeds `capacity` nothing is
// copied and `AQ_STATUS_BUFFER_TOO_SMALL` is returned. `buf` may be null
// when `capacity` is 0.
//
// # Safety
// `family` must be a live handle, `buf` valid for `2 * capacity` writes and
// `out_len` valid for writes.
enum AqStatus aq_family_tree_edges(const struct AqFamily *family,
                                   size_t tree,
                                   uint32_t *buf,
                                   size_t capacity,
                                   size_t *out_len);

// Verifies the family. Returns `AQ_STATUS_OK` when it is a set of CISTs and
// `AQ_STATUS_NOT_CIST` when it is not. If `report_json` is non-null it
// receives the report, to be freed with `aq_string_free`.
//
// # Safety
// `family` must be a live handle; `report_json` null or valid for writes.
enum AqStatus aq_family_verify(const struct AqFamily *family, enum AqMode mode, char **report_json);

// Writes the path from `u` to `v` in tree `tree` into `buf`, source first.
// `out_len` always receives the number of vertices on the path; if it
// exceeds `capacity` nothing is copied and `AQ_STATUS_BUFFER_TOO_SMALL` is
// returned. The first call on a handle verifies the family and fails with
// `AQ_STATUS_NOT_CIST` if it is not a set of CISTs.
//
// # Safety
// `family` must be a live handle not used concurrently from another
// thread, `buf` valid for `capacity` writes, `out_len` valid for writes.
enum AqStatus aq_family_route(struct AqFamily *family,
                              size_t tree,
                              uint32_t u,
                              uint32_t v,
                              uint32_t *buf,
                              size_t capacity,
                              size_t *out_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AQCIST_H */
