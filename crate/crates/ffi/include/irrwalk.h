#ifndef IRRWALK_H
#define IRRWALK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of an FFI call.
 */
typedef enum IrwStatus {
  IRW_STATUS_OK = 0,
  IRW_STATUS_NULL_POINTER = 1,
  IRW_STATUS_INVALID_ARGUMENT = 2,
  IRW_STATUS_CAPACITY = 3,
  IRW_STATUS_PARSE = 4,
  IRW_STATUS_BUFFER_TOO_SMALL = 5,
  IRW_STATUS_ACCEPTANCE_FAILURE = 6,
  IRW_STATUS_INTERNAL = 7,
} IrwStatus;

/**
 * Exact Plancherel sampler for Irr(GL(n, q)).
 */
typedef struct IrwGlSampler IrwGlSampler;

/**
 * Distribution of the walk on Irr(S_n) after `r` steps.
 */
typedef struct IrwWalkDistribution IrwWalkDistribution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *irw_version(void);

/**
 * Message for the last failed call on this thread.
 *
 * Every string output works the same way: the size including the NUL is
 * written to `needed` when it is non-null, and the text is copied only when
 * `capacity` is large enough, otherwise `IRW_STATUS_BUFFER_TOO_SMALL`.
 *
 * # Safety
 * `buf` must point to `capacity` writable bytes or be null; `needed` must be
 * null or writable.
 */
enum IrwStatus irw_last_error(char *buf, size_t capacity, size_t *needed);

/**
 * Distribution after `r` steps from the trivial representation of S_n,
 * in rational arithmetic when `exact` is nonzero.
 *
 * # Safety
 * `out` must be writable. The handle must be released with [`irw_walk_free`].
 */
enum IrwStatus irw_walk_new(size_t n, size_t r, int32_t exact, struct IrwWalkDistribution **out);

/**
 * Releases a distribution handle; null is ignored.
 *
 * # Safety
 * `h` must come from [`irw_walk_new`] and not be used afterwards.
 */
void irw_walk_free(struct IrwWalkDistribution *h);

/**
 * Number of partitions of `n`.
 *
 * # Safety
 * `h` must be a live handle and `len` writable.
 */
enum IrwStatus irw_walk_len(const struct IrwWalkDistribution *h, size_t *len);

/**
 * Mass of the `i`-th partition in enumeration order, as a double.
 *
 * # Safety
 * `h` must be a live handle and `mass` writable.
 */
enum IrwStatus irw_walk_mass(const struct IrwWalkDistribution *h, size_t i, double *mass);

/**
 * Label of the `i`-th partition, e.g. `"3+1"`.
 *
 * # Safety
 * `h` must be a live handle; strings follow [`irw_last_error`].
 */
enum IrwStatus irw_walk_partition(const struct IrwWalkDistribution *h,
                                  size_t i,
                                  char *buf,
                                  size_t capacity,
                                  size_t *needed);

/**
 * Total variation distance to Plancherel measure.
 *
 * # Safety
 * `h` must be a live handle and `tv` writable.
 */
enum IrwStatus irw_walk_tv(const struct IrwWalkDistribution *h, double *tv);

/**
 * Upper bound on the distance to Plancherel after `r` steps on Irr(S_n).
 *
 * # Safety
 * `bound` must be writable.
 */
enum IrwStatus irw_sn_upper_bound(size_t n, size_t r, double *bound);

/**
 * Upper bound on the distance to Plancherel after `r` steps on Irr(GL(n, q)).
 *
 * # Safety
 * `bound` must be writable.
 */
enum IrwStatus irw_gl_upper_bound(size_t n, uint64_t q, size_t r, double *bound);

/**
 * Exact Plancherel sampler for Irr(GL(n, q)). When `u_den` is zero the
 * default size bias is used, otherwise `u = u_num/u_den`.
 *
 * # Safety
 * `out` must be writable. Release with [`irw_gl_sampler_free`].
 */
enum IrwStatus irw_gl_sampler_new(size_t n,
                                  uint64_t q,
                                  int64_t u_num,
                                  int64_t u_den,
                                  struct IrwGlSampler **out);

/**
 * Releases a sampler handle; null is ignored.
 *
 * # Safety
 * `h` must come from [`irw_gl_sampler_new`] and not be used afterwards.
 */
void irw_gl_sampler_free(struct IrwGlSampler *h);

/**
 * Draws one family for `seed` and writes its descriptor, e.g. `"1.0:2;2.0:1"`.
 * `attempts` receives the number of proposals used and may be null.
 *
 * # Safety
 * `h` must be a live handle; strings follow [`irw_last_error`].
 */
enum IrwStatus irw_gl_sampler_draw(const struct IrwGlSampler *h,
                                   uint64_t seed,
                                   char *buf,
                                   size_t capacity,
                                   size_t *needed,
                                   uint64_t *attempts);

/**
 * Distance from Plancherel of the weak Fourier sampling distribution for the
 * subgroup of S_n generated by `gens` (e.g. `"(1 2)(3 4),(1 3)"`), with the
 * two class-sum upper bounds.
 *
 * # Safety
 * `gens` must be a NUL-terminated string; the outputs must be writable.
 */
enum IrwStatus irw_hsp_bounds(size_t n, const char *gens, double *tv, double *sharp, double *ks);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IRRWALK_H */
