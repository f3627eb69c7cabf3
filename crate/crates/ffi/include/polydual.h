#ifndef POLYDUAL_H
#define POLYDUAL_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success.
 */
typedef enum PdStatus {
  PD_STATUS_OK = 0,
  PD_STATUS_NULL_ARGUMENT = 1,
  /**
   * Malformed weights, polynomial text, case name or UTF-8.
   */
  PD_STATUS_INVALID_INPUT = 2,
  /**
   * Points span less than three dimensions.
   */
  PD_STATUS_DEGENERATE = 3,
  /**
   * A coordinate or intermediate value is out of range.
   */
  PD_STATUS_OVERFLOW = 4,
  /**
   * The output buffer is too small; the required size is still reported.
   */
  PD_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * The polar dual has non-lattice vertices, or the origin is not interior.
   */
  PD_STATUS_NOT_INTEGRAL = 6,
  /**
   * A shipped value failed to reproduce.
   */
  PD_STATUS_FIXTURE_MISMATCH = 7,
  PD_STATUS_INTERNAL = 8,
  PD_STATUS_PANIC = 9,
} PdStatus;

/**
 * Opaque lattice polytope.
 */
typedef struct PdPolytope PdPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Convex hull of `n_points` points read from `coords` (`3 * n_points`
 * values).
 *
 * # Safety
 * `coords` must point to `3 * n_points` readable values and `out` must be
 * writable.
 */
enum PdStatus pd_polytope_from_points(const int64_t *coords,
                                      size_t n_points,
                                      struct PdPolytope **out);

/**
 * Weight polytope of the weight system `weights[0..4]` in the Hermite
 * normal form basis of its kernel lattice.
 *
 * # Safety
 * `weights` must point to four readable values and `out` must be writable.
 */
enum PdStatus pd_polytope_from_weights(const int64_t *weights, struct PdPolytope **out);

/**
 * Newton polytope of a weighted-homogeneous polynomial, in the same basis
 * as [`pd_polytope_from_weights`].
 *
 * # Safety
 * `polynomial` must be a NUL-terminated string, `weights` must point to four
 * readable values and `out` must be writable.
 */
enum PdStatus pd_polytope_from_newton(const char *polynomial,
                                      const int64_t *weights,
                                      struct PdPolytope **out);

/**
 * Polar dual of a polytope whose dual is again a lattice polytope.
 *
 * # Safety
 * `p` must be a live handle and `out` must be writable.
 */
enum PdStatus pd_polytope_dual(const struct PdPolytope *p, struct PdPolytope **out);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t pd_polytope_vertex_count(const struct PdPolytope *p);

/**
 * Copies the sorted vertices into `out` (room for `capacity` points). The
 * number of vertices is stored in `written` even when the buffer is too
 * small.
 *
 * # Safety
 * `p` must be a live handle, `out` must have room for `3 * capacity` values
 * and `written` must be writable.
 */
enum PdStatus pd_polytope_vertices(const struct PdPolytope *p,
                                   int64_t *out,
                                   size_t capacity,
                                   size_t *written);

/**
 * # Safety
 * `p` must be a live handle and `out` must be writable.
 */
enum PdStatus pd_polytope_lattice_point_count(const struct PdPolytope *p, size_t *out);

/**
 * # Safety
 * `p` must be a live handle and `out` must be writable.
 */
enum PdStatus pd_polytope_is_reflexive(const struct PdPolytope *p, bool *out);

/**
 * Whether some unimodular map (plus a translation when `affine`) carries
 * `candidate` into `target`. The search is exhaustive.
 *
 * # Safety
 * Both handles must be live and `out` must be writable.
 */
enum PdStatus pd_polytope_embeds(const struct PdPolytope *candidate,
                                 const struct PdPolytope *target,
                                 bool affine,
                                 bool *out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `p` must be null or a handle not yet freed.
 */
void pd_polytope_free(struct PdPolytope *p);

/**
 * Full duality check for the case `"Q16"` or `"S16"` against both targets.
 * The JSON report is stored in `json_out` and must be released with
 * [`pd_string_free`]. Returns [`PdStatus::FixtureMismatch`] (and still
 * the report) when a shipped value fails to reproduce.
 *
 * # Safety
 * `case_name` must be a NUL-terminated string and `json_out` writable.
 */
enum PdStatus pd_verify_case(const char *case_name, char **json_out);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void pd_string_free(char *s);

/**
 * Message for the most recent failure on this thread, empty after a
 * success. Valid until the next call into the library on this thread.
 */
const char *pd_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYDUAL_H */
