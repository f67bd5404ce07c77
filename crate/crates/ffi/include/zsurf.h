#ifndef ZSURF_H
#define ZSURF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum ZsStatus {
  ZS_STATUS_OK = 0,
  ZS_STATUS_NULL_POINTER = 1,
  ZS_STATUS_INVALID_UTF8 = 2,
  ZS_STATUS_PARSE = 3,
  ZS_STATUS_DIMENSION = 4,
  ZS_STATUS_NOT_DIVISIBLE = 5,
  ZS_STATUS_NOT_HERMITIAN = 6,
  ZS_STATUS_OVERFLOW = 7,
  ZS_STATUS_INTERNAL = 8,
} ZsStatus;

/**
 * Opaque matrix over the Laurent ring.
 */
typedef struct ZsMatrix ZsMatrix;

/**
 * Opaque Laurent polynomial.
 */
typedef struct ZsPoly ZsPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null if it succeeded.
 * The caller owns the returned string.
 */
char *zs_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a pointer previously returned by this library.
 */
void zs_string_free(char *s);

/**
 * Parses text such as `2 - t - t^-1`.
 *
 * # Safety
 * `src` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ZsStatus zs_poly_parse(const char *src, struct ZsPoly **out);

/**
 * The twisted Alexander polynomial `n(2 - t - t^-1) + 1`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ZsStatus zs_poly_twist_alexander(int64_t n, struct ZsPoly **out);

/**
 * # Safety
 * `p` must be null or a handle from this library not yet freed.
 */
void zs_poly_free(struct ZsPoly *p);

/**
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum ZsStatus zs_poly_to_string(const struct ZsPoly *p, char **out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum ZsStatus zs_poly_add(const struct ZsPoly *a, const struct ZsPoly *b, struct ZsPoly **out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum ZsStatus zs_poly_mul(const struct ZsPoly *a, const struct ZsPoly *b, struct ZsPoly **out);

/**
 * The involution `t -> t^-1`.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum ZsStatus zs_poly_involute(const struct ZsPoly *p, struct ZsPoly **out);

/**
 * Value at `t = 1`; fails with `Overflow` if it does not fit in 64 bits.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum ZsStatus zs_poly_eval_one(const struct ZsPoly *p, int64_t *out);

/**
 * Writes 1 if the polynomials are equal and 0 otherwise.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum ZsStatus zs_poly_equal(const struct ZsPoly *a, const struct ZsPoly *b, int32_t *out);

/**
 * Reads `{"size": n, "rows": [["2 - t - t^-1", ...], ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ZsStatus zs_matrix_from_json(const char *json, struct ZsMatrix **out);

/**
 * The standard hermitian form for `c+` positive and `c-` negative double points and genus `g`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ZsStatus zs_matrix_standard_form(uint32_t c_plus,
                                      uint32_t c_minus,
                                      uint32_t genus,
                                      struct ZsMatrix **out);

/**
 * # Safety
 * `m` must be null or a handle from this library not yet freed.
 */
void zs_matrix_free(struct ZsMatrix *m);

/**
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum ZsStatus zs_matrix_to_json(const struct ZsMatrix *m, char **out);

/**
 * # Safety
 * `m` must be a live handle; `rows` and `cols` valid pointers.
 */
enum ZsStatus zs_matrix_shape(const struct ZsMatrix *m, uint32_t *rows, uint32_t *cols);

/**
 * Copies entry `(i, j)`, 0-based.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum ZsStatus zs_matrix_get(const struct ZsMatrix *m, uint32_t i, uint32_t j, struct ZsPoly **out);

/**
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum ZsStatus zs_matrix_det(const struct ZsMatrix *m, struct ZsPoly **out);

/**
 * Writes 1 if the matrix is square and equals its conjugate transpose.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum ZsStatus zs_matrix_is_hermitian(const struct ZsMatrix *m, int32_t *out);

/**
 * Divides a hermitian matrix entrywise by `z = 2 - t - t^-1`.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum ZsStatus zs_matrix_factor_out_z(const struct ZsMatrix *m, struct ZsMatrix **out);

/**
 * Unit group report for `Z[t, t^-1] / (Delta_n)` as JSON.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ZsStatus zs_units_classify_json(int64_t n, char **out);

/**
 * Presentation and invariants of the twisted first homology as JSON.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ZsStatus zs_homology_invariants_json(uint32_t genus,
                                          uint32_t c_plus,
                                          uint32_t c_minus,
                                          char **out);

/**
 * Standardness checks of `lambda` against the standard form, as JSON.
 * `witness` may be null.
 *
 * # Safety
 * `lambda` must be a live handle, `witness` null or live, `out` valid.
 */
enum ZsStatus zs_standardness_json(const struct ZsMatrix *lambda,
                                   uint32_t c_plus,
                                   uint32_t c_minus,
                                   uint32_t genus,
                                   const struct ZsMatrix *witness,
                                   char **out);

/**
 * Algebraic unknotting checks as JSON. Either matrix may be null, but not both.
 *
 * # Safety
 * `a` and `b` must be null or live handles; `out` valid.
 */
enum ZsStatus zs_unknotting_json(const struct ZsMatrix *a,
                                 const struct ZsMatrix *b,
                                 uint32_t c_plus,
                                 uint32_t c_minus,
                                 uint32_t entry_bound,
                                 char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZSURF_H */
