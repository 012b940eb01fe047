#ifndef BEREZIN_H
#define BEREZIN_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every call.
 */
typedef enum BzStatus {
  BZ_STATUS_OK = 0,
  BZ_STATUS_NULL_POINTER = 1,
  BZ_STATUS_INVALID_ARGUMENT = 2,
  BZ_STATUS_DIMENSION_MISMATCH = 3,
  BZ_STATUS_INDEX_OUT_OF_RANGE = 4,
  BZ_STATUS_NUMERIC_FAILURE = 5,
  BZ_STATUS_CONFIG_ERROR = 6,
  BZ_STATUS_IO = 7,
  BZ_STATUS_PANIC = 8,
} BzStatus;

/**
 * A square complex matrix.
 */
typedef struct BzOperator BzOperator;

/**
 * A sampled kernel space.
 */
typedef struct BzSpace BzSpace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *bz_last_error_message(void);

/**
 * Builds a space from its JSON description.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BzStatus bz_space_from_json(const char *json, struct BzSpace **out);

/**
 * Releases a space. Null is ignored.
 *
 * # Safety
 * `space` must come from [`bz_space_from_json`] and not be freed twice.
 */
void bz_space_free(struct BzSpace *space);

/**
 * Hilbert-space dimension.
 *
 * # Safety
 * Pointers must be valid.
 */
enum BzStatus bz_space_dim(const struct BzSpace *space, size_t *out);

/**
 * Number of grid points.
 *
 * # Safety
 * Pointers must be valid.
 */
enum BzStatus bz_space_len(const struct BzSpace *space, size_t *out);

/**
 * Unit kernel at grid point `index`, written as `2·dim` doubles.
 *
 * # Safety
 * `out` must hold `out_len` doubles.
 */
enum BzStatus bz_space_kernel(const struct BzSpace *space,
                              size_t index,
                              double *out,
                              size_t out_len);

/**
 * Operator from `dim·dim` row-major complex entries (`2·dim·dim` doubles).
 *
 * # Safety
 * `entries` must hold `len` doubles and `out` must be valid.
 */
enum BzStatus bz_operator_new(size_t dim,
                              const double *entries,
                              size_t len,
                              struct BzOperator **out);

/**
 * Releases an operator. Null is ignored.
 *
 * # Safety
 * `op` must come from [`bz_operator_new`] and not be freed twice.
 */
void bz_operator_free(struct BzOperator *op);

/**
 * Grid Berezin number of `op` on `space`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum BzStatus bz_berezin_number(const struct BzOperator *op,
                                const struct BzSpace *space,
                                double *out);

/**
 * Berezin symbol of `op` at grid point `index`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum BzStatus bz_berezin_symbol(const struct BzOperator *op,
                                const struct BzSpace *space,
                                size_t index,
                                double *re,
                                double *im);

/**
 * Spectral radius.
 *
 * # Safety
 * Pointers must be valid.
 */
enum BzStatus bz_spectral_radius(const struct BzOperator *op, double *out);

/**
 * Operator norm.
 *
 * # Safety
 * Pointers must be valid.
 */
enum BzStatus bz_op_norm(const struct BzOperator *op, double *out);

/**
 * Minimum modulus (smallest singular value).
 *
 * # Safety
 * Pointers must be valid.
 */
enum BzStatus bz_min_modulus(const struct BzOperator *op, double *out);

/**
 * Runs a configuration given as JSON and returns the report JSON in
 * `report` (release with [`bz_string_free`]) and the run's exit code
 * (0 clean, 1 violations) in `exit`. The config's output directory is
 * ignored.
 *
 * # Safety
 * `config_json` must be NUL-terminated; `report` and `exit` must be valid.
 */
enum BzStatus bz_run_config_json(const char *config_json, char **report, int32_t *exit);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void bz_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BEREZIN_H */
