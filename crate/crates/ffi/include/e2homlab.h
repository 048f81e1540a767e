#ifndef E2HOMLAB_H
#define E2HOMLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum E2hlStatus {
  E2HL_STATUS_OK = 0,
  E2HL_STATUS_PRECONDITION = 1,
  E2HL_STATUS_PARSE = 2,
  E2HL_STATUS_CAP_EXCEEDED = 3,
  E2HL_STATUS_CHECK_FAILED = 4,
  E2HL_STATUS_NULL_ARGUMENT = 5,
  E2HL_STATUS_INVALID_UTF8 = 6,
  E2HL_STATUS_PANIC = 7,
} E2hlStatus;

/**
 * Opaque ring context.
 */
typedef struct E2hlRing E2hlRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the next failing call.
 */
const char *e2hl_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void e2hl_string_free(char *s);

/**
 * Parses a ring spec such as `Z/12`, `GF(9)` or `F2[t]/t^2` and builds its context.
 * `basis_cap` of 0 keeps the default cap.
 *
 * # Safety
 * `spec` must be a nul terminated string and `out` writable.
 */
enum E2hlStatus e2hl_ring_new(const char *spec, size_t basis_cap, struct E2hlRing **out);

/**
 * # Safety
 * `r` must come from [`e2hl_ring_new`] and not have been freed. Null is ignored.
 */
void e2hl_ring_free(struct E2hlRing *r);

/**
 * Basic sizes: `|A|`, `|A^x|`, `|G_A|` and `|W_A|`.
 *
 * # Safety
 * `r` must be a live handle; every output pointer must be writable.
 */
enum E2hlStatus e2hl_ring_sizes(const struct E2hlRing *r,
                                size_t *order,
                                size_t *units,
                                size_t *square_classes,
                                size_t *w_size);

/**
 * Invariant factors of `H_1(E2(A), Z)` into `buf` (0 marks a free summand). The number of factors
 * is written to `len` even when it exceeds `cap`, in which case `buf` is left untouched.
 *
 * # Safety
 * `r` must be a live handle, `buf` valid for `cap` writes, `len` writable.
 */
enum E2hlStatus e2hl_ring_h1(const struct E2hlRing *r, uint64_t *buf, size_t cap, size_t *len);

/**
 * JSON report for one ring; `checks` is a comma separated section list or null for all.
 * The string in `out` is released with [`e2hl_string_free`].
 *
 * # Safety
 * `spec` and `checks` (when not null) must be nul terminated strings; `out` writable.
 */
enum E2hlStatus e2hl_report_json(const char *spec,
                                 size_t degree,
                                 const char *checks,
                                 size_t basis_cap,
                                 char **out);

/**
 * Acceptance suite over a named family, as CSV. Returns `CheckFailed` when some criterion
 * fails; the table is written either way.
 *
 * # Safety
 * `family_name` must be a nul terminated string; `out` writable.
 */
enum E2hlStatus e2hl_check_family(const char *family_name,
                                  size_t jobs,
                                  size_t basis_cap,
                                  char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* E2HOMLAB_H */
