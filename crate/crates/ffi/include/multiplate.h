#ifndef MULTIPLATE_H
#define MULTIPLATE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MpStatus {
  MP_STATUS_OK = 0,
  MP_STATUS_NULL_ARGUMENT = 1,
  MP_STATUS_INVALID_UTF8 = 2,
  MP_STATUS_PARSE_ERROR = 3,
  MP_STATUS_DECODE_ERROR = 4,
  /**
   * Unknown pass, sort or suite name, or a size out of range.
   */
  MP_STATUS_USAGE = 5,
  /**
   * A law suite ran and at least one law failed.
   */
  MP_STATUS_LAW_FAILURE = 6,
  /**
   * A Rust panic was caught at the boundary.
   */
  MP_STATUS_INTERNAL = 7,
} MpStatus;

/**
 * An owned mini-language term of any sort.
 */
typedef struct MpTerm MpTerm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses and decodes `text`. `root` names the sort (`stm`, `expr`, `var`,
 * `typ`) or is null to infer it from the head constructor.
 *
 * # Safety
 * `text` is a NUL-terminated string; `root` is null or one; `out` is
 * writable.
 */
enum MpStatus mp_term_parse(const char *text, const char *root, struct MpTerm **out);

/**
 * Releases a term. Null is ignored.
 *
 * # Safety
 * `t` is null or a live handle from [`mp_term_parse`].
 */
void mp_term_free(struct MpTerm *t);

/**
 * Runs a comma-separated pipeline of `rename` and `constfold` in place.
 * An unknown pass name leaves the term untouched.
 *
 * # Safety
 * `t` is a live handle; `passes` is a NUL-terminated string.
 */
enum MpStatus mp_term_apply_passes(struct MpTerm *t, const char *passes);

/**
 * Writes the canonical s-expression, without a trailing newline.
 *
 * # Safety
 * `t` is a live handle; `out` is writable.
 */
enum MpStatus mp_term_to_sexpr(const struct MpTerm *t, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` is null or a string from this library not yet freed.
 */
void mp_string_free(char *s);

/**
 * Counts constructor nodes.
 *
 * # Safety
 * `t` is a live handle; `out` is writable.
 */
enum MpStatus mp_term_count_nodes(const struct MpTerm *t, int64_t *out);

/**
 * Variable names in preorder, one per line, each line newline-terminated.
 *
 * # Safety
 * `t` is a live handle; `out` is writable.
 */
enum MpStatus mp_term_collect_vars(const struct MpTerm *t, char **out);

/**
 * Runs a law suite by name (`store`, `cartesian`, `lens`, `biplate`, `vl`,
 * `multiplate`, `all`) at term-size bound `size`, 0 meaning the default.
 * `failed` receives the number of failing laws and may be null.
 *
 * # Safety
 * `suite` is a NUL-terminated string; `failed` is null or writable.
 */
enum MpStatus mp_run_laws(const char *suite, uint32_t size, uint32_t *failed);

/**
 * The message for the last failing call on this thread, or null. Valid
 * until the next call into this library on the same thread.
 */
const char *mp_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MULTIPLATE_H */
