#ifndef PATHEXT_H
#define PATHEXT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum PxStatus {
  PX_STATUS_OK = 0,
  PX_STATUS_NULL_POINTER = 1,
  PX_STATUS_ARGUMENT = 2,
  PX_STATUS_CAPACITY = 3,
  PX_STATUS_PARSE = 4,
  PX_STATUS_DOMAIN = 5,
  PX_STATUS_IO = 6,
  PX_STATUS_BUFFER_TOO_SMALL = 7,
  PX_STATUS_PANIC = 8,
} PxStatus;

/**
 * Opaque tournament handle.
 */
typedef struct PxTournament PxTournament;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *px_last_error_message(void);

/**
 * Parses TRN text (`"n\npairs\n"`).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum PxStatus px_tournament_from_trn(const char *text, struct PxTournament **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum PxStatus px_tournament_transitive(size_t n, struct PxTournament **out);

/**
 * Quadratic-residue tournament on `q` vertices (`q` prime, `q ≡ 3 mod 4`).
 *
 * # Safety
 * `out` must be writable.
 */
enum PxStatus px_tournament_paley(size_t q, struct PxTournament **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum PxStatus px_tournament_random(size_t n, uint64_t seed, struct PxTournament **out);

/**
 * Three Paley blocks of order `4t + 3` arranged in a directed triangle.
 *
 * # Safety
 * `out` must be writable.
 */
enum PxStatus px_tournament_three_block(size_t t, struct PxTournament **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum PxStatus px_tournament_figure4(size_t k, uint64_t seed, struct PxTournament **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `t` must come from a constructor here and not be used afterwards.
 */
void px_tournament_free(struct PxTournament *t);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `t` must be NULL or a live handle.
 */
size_t px_tournament_order(const struct PxTournament *t);

/**
 * Writes the TRN encoding plus a NUL into `buf`. `needed` receives the
 * byte count including the NUL, also when `cap` is too small.
 *
 * # Safety
 * `buf` must have room for `cap` bytes; `needed` must be writable.
 */
enum PxStatus px_tournament_to_trn(const struct PxTournament *t,
                                   char *buf,
                                   size_t cap,
                                   size_t *needed);

/**
 * Number of `w` with `u -> w -> v`.
 *
 * # Safety
 * `t` must be a live handle; `out` writable.
 */
enum PxStatus px_p2(const struct PxTournament *t, size_t u, size_t v, size_t *out);

/**
 * Minimum 2-path count over ordered pairs.
 *
 * # Safety
 * `t` must be a live handle; `out` writable.
 */
enum PxStatus px_pi2(const struct PxTournament *t, size_t *out);

/**
 * `max |d⁺(v) − d⁻(v)|`.
 *
 * # Safety
 * `t` must be a live handle; `out` writable.
 */
enum PxStatus px_irregularity(const struct PxTournament *t, size_t *out);

/**
 * Decides whether every nonhamiltonian path with at least `k` arcs is
 * extendable. When it is not, the certificate path is written to
 * `cert` (capacity `cert_cap`) and its vertex count to `cert_len`;
 * otherwise `cert_len` is 0.
 *
 * # Safety
 * `t` must be a live handle; `extendable` and `cert_len` writable;
 * `cert` must have room for `cert_cap` entries.
 */
enum PxStatus px_is_path_extendable(const struct PxTournament *t,
                                    size_t k,
                                    bool *extendable,
                                    size_t *cert,
                                    size_t cert_cap,
                                    size_t *cert_len);

/**
 * Tries to extend one path. On success `extended` is true and the longer
 * path (same endpoints, one more vertex) is written to `out`.
 *
 * # Safety
 * `path` must point to `len` entries; `out` must have room for
 * `out_cap` entries; `extended` and `out_len` writable.
 */
enum PxStatus px_extend_path(const struct PxTournament *t,
                             const size_t *path,
                             size_t len,
                             bool *extended,
                             size_t *out,
                             size_t out_cap,
                             size_t *out_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PATHEXT_H */
