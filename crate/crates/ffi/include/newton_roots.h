#ifndef NEWTON_ROOTS_H
#define NEWTON_ROOTS_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; the nonzero values match the command-line exit codes.
 */
typedef enum NrStatus {
  NR_STATUS_OK = 0,
  NR_STATUS_USAGE = 1,
  NR_STATUS_PRECONDITION = 2,
  NR_STATUS_CONSISTENCY = 3,
  NR_STATUS_NULL_POINTER = 4,
  NR_STATUS_PANIC = 5,
} NrStatus;

/**
 * A parsed system of `n` Laurent polynomials in `t1..tn`.
 */
typedef struct NrSystem NrSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse `count` equations in `n` variables into a new handle.
 *
 * # Safety
 * `equations` must point to `count` nul-terminated strings and `out` must be writable.
 */
enum NrStatus nr_system_from_text(size_t n,
                                  const char *const *equations,
                                  size_t count,
                                  struct NrSystem **out);

/**
 * Release a handle; null is ignored.
 *
 * # Safety
 * `system` must come from [`nr_system_from_text`] and not be used afterwards.
 */
void nr_system_free(struct NrSystem *system);

/**
 * Number of variables of the system.
 *
 * # Safety
 * `system` must be a live handle or null.
 */
size_t nr_system_dimension(const struct NrSystem *system);

/**
 * Whether the Newton polytopes form a developed collection.
 *
 * # Safety
 * `system` must be a live handle and `out` writable.
 */
enum NrStatus nr_is_developed(const struct NrSystem *system, bool *out);

/**
 * Mixed volume by inclusion–exclusion, as a decimal string.
 *
 * # Safety
 * `system` must be a live handle and `out` writable.
 */
enum NrStatus nr_mixed_volume(const struct NrSystem *system, char **out);

/**
 * Root count of a developed system, checked against the mixed volume.
 *
 * # Safety
 * `system` must be a live handle and `out` writable.
 */
enum NrStatus nr_bernstein_number(const struct NrSystem *system, char **out);

/**
 * Product of the monomial `f0` over the roots, as `"p/q"`.
 *
 * # Safety
 * `system` must be a live handle, `f0` a nul-terminated string and `out` writable.
 */
enum NrStatus nr_product_over_roots(const struct NrSystem *system, const char *f0, char **out);

/**
 * Sum of `f0` over the roots, as `"p/q"`.
 *
 * # Safety
 * `system` must be a live handle, `f0` a nul-terminated string and `out` writable.
 */
enum NrStatus nr_sum_over_roots(const struct NrSystem *system, const char *f0, char **out);

/**
 * Combinatorial coefficients as JSON `[{"vertex":[..],"c":k},..]` in vertex order.
 *
 * # Safety
 * `system` must be a live handle and `out` writable.
 */
enum NrStatus nr_coefficients_json(const struct NrSystem *system, char **out);

/**
 * Copy of the last error message on this thread, or null if the last call succeeded.
 * Release with [`nr_string_free`].
 */
char *nr_last_error_message(void);

/**
 * Release a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void nr_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NEWTON_ROOTS_H */
