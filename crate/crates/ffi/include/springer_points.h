#ifndef SPRINGER_POINTS_H
#define SPRINGER_POINTS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  SP_STATUS_OK = 0,
  SP_STATUS_NULL_POINTER = 1,
  SP_STATUS_PARSE_ERROR = 2,
  SP_STATUS_INVALID_ARGUMENT = 3,
  SP_STATUS_UNSUPPORTED = 4,
  SP_STATUS_BUFFER_TOO_SMALL = 5,
  SP_STATUS_INTERNAL = 6,
} SpStatus;

typedef enum {
  SP_CLAIM_THEOREM1 = 0,
  SP_CLAIM_CLOSURE = 1,
  SP_CLAIM_DELETION = 2,
  SP_CLAIM_MAXIMALITY = 3,
} SpClaim;

typedef struct SpPartition SpPartition;

typedef struct SpPermutation SpPermutation;

typedef struct SpPolynomial SpPolynomial;

typedef struct SpReport SpReport;

typedef struct SpTableau SpTableau;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty if none. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *sp_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *sp_version(void);

/**
 * # Safety
 * `s` is null or a string returned by this library and not yet freed.
 */
void sp_string_free(char *s);

/**
 * Parses `"2,2,1"`, `"(2,2,1)"` or `"2 2 1"`.
 *
 * # Safety
 * `text` is a NUL-terminated string and `out` is writable.
 */
SpStatus sp_partition_parse(const char *text, SpPartition **out);

/**
 * Size `n` of the partition, or 0 for a null handle.
 *
 * # Safety
 * `shape` is null or a live handle.
 */
size_t sp_partition_size(const SpPartition *shape);

/**
 * # Safety
 * `shape` is null or a live handle, not used afterwards.
 */
void sp_partition_free(SpPartition *shape);

/**
 * Parses a tableau such as `"1,2/3,4/5"` and checks it has shape `shape`.
 *
 * # Safety
 * `text` is a NUL-terminated string, `shape` a live handle, `out` writable.
 */
SpStatus sp_tableau_parse(const char *text, const SpPartition *shape, SpTableau **out);

/**
 * The tableau in `"1,2/3,4/5"` form; free with [`sp_string_free`].
 *
 * # Safety
 * `tableau` is null or a live handle.
 */
char *sp_tableau_to_string(const SpTableau *tableau);

/**
 * # Safety
 * `tableau` is null or a live handle, not used afterwards.
 */
void sp_tableau_free(SpTableau *tableau);

/**
 * Parses one-line notation `"[3,5,2,4,1]"`.
 *
 * # Safety
 * `text` is a NUL-terminated string and `out` is writable.
 */
SpStatus sp_permutation_parse(const char *text, SpPermutation **out);

/**
 * # Safety
 * `w` is null or a live handle.
 */
size_t sp_permutation_rank(const SpPermutation *w);

/**
 * Coxeter length (number of inversions).
 *
 * # Safety
 * `w` is null or a live handle.
 */
size_t sp_permutation_length(const SpPermutation *w);

/**
 * Copies the one-line notation into `buffer`, which must hold the rank.
 *
 * # Safety
 * `w` is a live handle and `buffer` has room for `capacity` values.
 */
SpStatus sp_permutation_one_line(const SpPermutation *w, size_t *buffer, size_t capacity);

/**
 * Reduced word from the monotone factorization, e.g. `"s3 s4 s3 s2"`.
 *
 * # Safety
 * `w` is null or a live handle.
 */
char *sp_permutation_word(const SpPermutation *w);

/**
 * # Safety
 * `w` is null or a live handle, not used afterwards.
 */
void sp_permutation_free(SpPermutation *w);

/**
 * The Schubert point `w_T` of a tableau.
 *
 * # Safety
 * `tableau` is a live handle and `out` is writable.
 */
SpStatus sp_schubert_point(const SpTableau *tableau, SpPermutation **out);

/**
 * Whether `w` is the Schubert point of some tableau of `shape`. When it is
 * and `tableau_out` is non-null, the tableau is written there.
 *
 * # Safety
 * `w` and `shape` are live handles; `found` is writable; `tableau_out` is
 * null or writable.
 */
SpStatus sp_is_schubert_point(const SpPermutation *w,
                              const SpPartition *shape,
                              bool *found,
                              SpTableau **tableau_out);

/**
 * Erase the letter at position `pos` (from 1) of string `w_string` in the
 * Schubert point of `tableau` and return the resulting permutation.
 *
 * # Safety
 * `tableau` is a live handle and `out` is writable.
 */
SpStatus sp_delete_and_normalize(const SpTableau *tableau,
                                 size_t string,
                                 size_t pos,
                                 SpPermutation **out);

/**
 * Poincaré polynomial of the Springer fiber of Jordan type `shape`.
 *
 * # Safety
 * `shape` is a live handle and `out` is writable.
 */
SpStatus sp_springer_poincare(const SpPartition *shape, SpPolynomial **out);

/**
 * Poincaré polynomial of the union of Schubert varieties of all points of `shape`.
 *
 * # Safety
 * `shape` is a live handle and `out` is writable.
 */
SpStatus sp_schubert_poincare(const SpPartition *shape, SpPolynomial **out);

/**
 * Degree of the polynomial, or -1 for zero or a null handle.
 *
 * # Safety
 * `p` is null or a live handle.
 */
ptrdiff_t sp_polynomial_degree(const SpPolynomial *p);

/**
 * Coefficient of `t^degree`; 0 beyond the degree or for a null handle.
 *
 * # Safety
 * `p` is null or a live handle.
 */
uint64_t sp_polynomial_coefficient(const SpPolynomial *p, size_t degree);

/**
 * Coefficient-wise equality; false if either handle is null.
 *
 * # Safety
 * `a` and `b` are null or live handles.
 */
bool sp_polynomial_equal(const SpPolynomial *a, const SpPolynomial *b);

/**
 * Text form such as `"5t^4+11t^3+9t^2+4t+1"`; free with [`sp_string_free`].
 *
 * # Safety
 * `p` is null or a live handle.
 */
char *sp_polynomial_to_string(const SpPolynomial *p);

/**
 * # Safety
 * `p` is null or a live handle, not used afterwards.
 */
void sp_polynomial_free(SpPolynomial *p);

/**
 * Check one claim for one shape.
 *
 * # Safety
 * `shape` is a live handle and `out` is writable.
 */
SpStatus sp_verify(const SpPartition *shape, SpClaim claim, SpReport **out);

/**
 * Point-set inclusion for `lambda ≥ mu` in dominance order.
 *
 * # Safety
 * `lambda` and `mu` are live handles and `out` is writable.
 */
SpStatus sp_verify_dominance(const SpPartition *lambda, const SpPartition *mu, SpReport **out);

/**
 * # Safety
 * `report` is null or a live handle.
 */
bool sp_report_holds(const SpReport *report);

/**
 * # Safety
 * `report` is null or a live handle.
 */
size_t sp_report_witness_count(const SpReport *report);

/**
 * The report as JSON; free with [`sp_string_free`].
 *
 * # Safety
 * `report` is null or a live handle.
 */
char *sp_report_to_json(const SpReport *report);

/**
 * # Safety
 * `report` is null or a live handle, not used afterwards.
 */
void sp_report_free(SpReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPRINGER_POINTS_H */
