#ifndef CYCLOHECKE_H
#define CYCLOHECKE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. The first four match the command-line exit codes.
 */
typedef enum ChStatus {
  CH_STATUS_OK = 0,
  CH_STATUS_INVALID_ARGUMENT = 1,
  CH_STATUS_ASSERTION_FAILED = 2,
  CH_STATUS_RESOURCE_CAP = 3,
  CH_STATUS_NULL_POINTER = 4,
  CH_STATUS_PANIC = 5,
} ChStatus;

/**
 * Opaque handle to a cyclotomic Hecke algebra.
 */
typedef struct ch_hecke ch_hecke;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Build `H_n(v_1, …, v_m; q)`. `q` and each of the `m` entries of `v` use the
 * scalar syntax `p/q`, `z{e}^{a}` and sums. Refuses dimensions above
 * `max_dim`.
 *
 * # Safety
 * `q` must be a nul-terminated string, `v` an array of `m` such strings and
 * `out` a valid pointer.
 */
enum ChStatus ch_hecke_new(size_t m,
                           size_t n,
                           const char *q,
                           const char *const *v,
                           size_t max_dim,
                           struct ch_hecke **out);

/**
 * # Safety
 * `h` must come from [`ch_hecke_new`] and not be used afterwards. Null is
 * ignored.
 */
void ch_hecke_free(struct ch_hecke *h);

/**
 * `m^n n!`, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t ch_hecke_dim(const struct ch_hecke *h);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum ChStatus ch_hecke_is_semisimple(const struct ch_hecke *h, bool *out);

/**
 * Rank of the Gram matrix of `S^λ`, i.e. `dim D^λ`.
 *
 * # Safety
 * `h` must be a live handle, `lambda` a nul-terminated string such as
 * `"[[2],[1]]"` and `out` a valid pointer.
 */
enum ChStatus ch_gram_rank(const struct ch_hecke *h, const char *lambda, size_t *out);

/**
 * JSON array of the shapes with `D^λ ≠ 0`.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum ChStatus ch_simple_labels_json(const struct ch_hecke *h, char **out);

/**
 * Kleshchev test for `λ` with modulus `r` (0 for infinity) and residues
 * `gamma[0..m]`.
 *
 * # Safety
 * `gamma` must point to `m` integers, `lambda` be a nul-terminated string
 * and `out` a valid pointer.
 */
enum ChStatus ch_is_kleshchev(uint32_t r,
                              const int64_t *gamma,
                              size_t m,
                              const char *lambda,
                              bool *out);

/**
 * Decomposition matrix of the Hecke algebra of `S_n` at `q = ζ_r`, as JSON.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ChStatus ch_llt_decomposition_json(size_t n, uint32_t r, char **out);

/**
 * Number of aperiodic multisegments of size `n` over `Z/r`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ChStatus ch_count_aperiodic(size_t n, uint32_t r, uint64_t *out);

/**
 * Message of the last failure on this thread, or null. Valid until the next
 * failing call on the same thread.
 */
const char *ch_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void ch_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLOHECKE_H */
