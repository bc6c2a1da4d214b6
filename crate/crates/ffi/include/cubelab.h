#ifndef CUBELAB_H
#define CUBELAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes shared by every fallible function.
typedef enum CubelabStatus {
  CUBELAB_STATUS_OK = 0,
  CUBELAB_STATUS_NULL_POINTER = 1,
  CUBELAB_STATUS_INVALID_UTF8 = 2,
  CUBELAB_STATUS_INVALID_ARGUMENT = 3,
  CUBELAB_STATUS_OUT_OF_RANGE = 4,
  CUBELAB_STATUS_BUFFER_TOO_SMALL = 5,
  // Eigensolver or structural failure.
  CUBELAB_STATUS_NUMERIC = 6,
  // Some verification entry failed; the report is still returned.
  CUBELAB_STATUS_VERIFY_FAILED = 7,
  CUBELAB_STATUS_PANIC = 8,
  CUBELAB_STATUS_INTERNAL = 9,
} CubelabStatus;

// Opaque dense matrix.
typedef struct CubelabMatrix CubelabMatrix;

// Opaque spectrum with clustered multiplicities.
typedef struct CubelabSpectrum CubelabSpectrum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread, or null. Owned by the
// library and valid until the next failing call on the same thread.
const char *cubelab_last_error(void);

// Library version as a static NUL-terminated string.
const char *cubelab_version(void);

// Builds a family's matrix (`ncube`, `hamming`, `tricube`, `regtricube`,
// `powcube`, `powtri`, `powhamming`). `ordering` may be null for binary.
//
// # Safety
// `family` and a non-null `ordering` must be NUL-terminated strings; `out`
// must be valid for a pointer write.
enum CubelabStatus cubelab_matrix_build(const char *family,
                                        uint32_t n,
                                        const char *ordering,
                                        struct CubelabMatrix **out);

// Side length of the matrix; 0 for a null handle.
//
// # Safety
// `m` must be null or a live handle.
uintptr_t cubelab_matrix_dim(const struct CubelabMatrix *m);

// Copies the entries row-major into `buf`, which must hold `dim * dim`
// values; `len` is its capacity.
//
// # Safety
// `m` must be a live handle and `buf` valid for `len` writes.
enum CubelabStatus cubelab_matrix_entries(const struct CubelabMatrix *m,
                                          double *buf,
                                          uintptr_t len);

// # Safety
// `m` must be a live handle and `value` valid for a write.
enum CubelabStatus cubelab_matrix_get(const struct CubelabMatrix *m,
                                      uintptr_t row,
                                      uintptr_t col,
                                      double *value);

// # Safety
// `m` must be null or a handle from [`cubelab_matrix_build`], freed once.
void cubelab_matrix_free(struct CubelabMatrix *m);

// Eigenvalues of a matrix, clustered at `tol` (the default when `tol <= 0`).
//
// # Safety
// `m` must be a live handle and `out` valid for a pointer write.
enum CubelabStatus cubelab_spectrum_compute(const struct CubelabMatrix *m,
                                            double tol,
                                            struct CubelabSpectrum **out);

// Number of eigenvalues; 0 for a null handle.
//
// # Safety
// `s` must be null or a live handle.
uintptr_t cubelab_spectrum_len(const struct CubelabSpectrum *s);

// Ascending eigenvalues into `buf` (capacity `len`).
//
// # Safety
// `s` must be a live handle and `buf` valid for `len` writes.
enum CubelabStatus cubelab_spectrum_values(const struct CubelabSpectrum *s,
                                           double *buf,
                                           uintptr_t len);

// Number of distinct eigenvalue clusters; 0 for a null handle.
//
// # Safety
// `s` must be null or a live handle.
uintptr_t cubelab_spectrum_cluster_count(const struct CubelabSpectrum *s);

// Representative value and multiplicity of cluster `index`.
//
// # Safety
// `s` must be a live handle; `value` and `multiplicity` valid for writes.
enum CubelabStatus cubelab_spectrum_cluster(const struct CubelabSpectrum *s,
                                            uintptr_t index,
                                            double *value,
                                            uintptr_t *multiplicity);

// # Safety
// `s` must be null or a handle from [`cubelab_spectrum_compute`], freed once.
void cubelab_spectrum_free(struct CubelabSpectrum *s);

// Activation value `caf(n, r, p)` as a double.
//
// # Safety
// `value` must be valid for a write.
enum CubelabStatus cubelab_caf(uint32_t n, uint64_t r, uint64_t p, double *value);

// Runs the comma-separated `claims` (or `all`) over `lo..=hi`, or each
// claim's default range when `lo > hi`, offline. The JSON report is written
// to `out` even when entries fail (status `VERIFY_FAILED`); release it with
// [`cubelab_string_free`].
//
// # Safety
// `claims` must be a NUL-terminated string and `out` valid for a write.
enum CubelabStatus cubelab_verify_json(const char *claims, uint32_t lo, uint32_t hi, char **out);

// # Safety
// `s` must be null or a string returned by this library, freed once.
void cubelab_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CUBELAB_H */
