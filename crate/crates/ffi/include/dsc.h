#ifndef DSC_H
#define DSC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum DscStatus {
  DSC_STATUS_OK = 0,
  DSC_STATUS_NULL_POINTER = 1,
  DSC_STATUS_INVALID_UTF8 = 2,
  DSC_STATUS_PARSE_ERROR = 3,
  DSC_STATUS_INVALID_TABLE = 4,
  DSC_STATUS_TOO_LARGE = 5,
  DSC_STATUS_IS_GROUP = 6,
  DSC_STATUS_NOT_A_MONOID = 7,
  DSC_STATUS_EQUAL_ELEMENTS = 8,
  DSC_STATUS_NOT_REGULAR = 9,
  DSC_STATUS_VERIFICATION = 10,
  DSC_STATUS_OUT_OF_RANGE = 11,
  DSC_STATUS_INTERNAL = 12,
} DscStatus;

/**
 * Byleen's monoid over a finite base monoid.
 */
typedef struct DscByleen DscByleen;

/**
 * A finite semigroup given by a validated Cayley table.
 */
typedef struct DscSemigroup DscSemigroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a Cayley table in JSON form: `{"order": n, "names": [...],
 * "table": [[...]]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` writable.
 */
enum DscStatus dsc_semigroup_from_json(const char *json, struct DscSemigroup **out);

/**
 * Builds a semigroup from a row-major table of `order * order` entries.
 *
 * # Safety
 * `table` must point to `order * order` readable values and `out` be
 * writable.
 */
enum DscStatus dsc_semigroup_from_table(size_t order,
                                        const size_t *table,
                                        struct DscSemigroup **out);

/**
 * Releases a semigroup handle. Null is ignored.
 *
 * # Safety
 * `s` must be null or a handle not yet freed.
 */
void dsc_semigroup_free(struct DscSemigroup *s);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum DscStatus dsc_semigroup_order(const struct DscSemigroup *s, size_t *out);

/**
 * The product `x · y`.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum DscStatus dsc_semigroup_mul(const struct DscSemigroup *s, size_t x, size_t y, size_t *out);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum DscStatus dsc_semigroup_is_group(const struct DscSemigroup *s, bool *out);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum DscStatus dsc_semigroup_is_simple(const struct DscSemigroup *s, bool *out);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum DscStatus dsc_semigroup_is_completely_simple(const struct DscSemigroup *s, bool *out);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum DscStatus dsc_semigroup_is_inverse(const struct DscSemigroup *s, bool *out);

/**
 * Whether every diagonal subsemigroup is a congruence.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum DscStatus dsc_semigroup_is_dsc(const struct DscSemigroup *s, bool *out);

/**
 * The exhaustive decision over all subsets of `S × S ∖ Δ`. Fails with
 * `TooLarge` above the scan limit.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum DscStatus dsc_semigroup_brute_force_is_dsc(const struct DscSemigroup *s, bool *out);

/**
 * A verified non-congruence diagonal subsemigroup as JSON. Fails with
 * `IsGroup` for a group.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum DscStatus dsc_semigroup_witness_json(const struct DscSemigroup *s, char **out);

/**
 * Byleen's monoid over the monoid `base`. The base handle may be freed
 * afterwards.
 *
 * # Safety
 * `base` must be a live handle and `out` writable.
 */
enum DscStatus dsc_byleen_new(const struct DscSemigroup *base, struct DscByleen **out);

/**
 * Releases a Byleen handle. Null is ignored.
 *
 * # Safety
 * `m` must be null or a handle not yet freed.
 */
void dsc_byleen_free(struct DscByleen *m);

/**
 * Normal form of a whitespace-separated word such as `"a(0,s1) s1 b(2,s0)"`.
 *
 * # Safety
 * `m` must be a live handle, `word_text` nul-terminated, `out` writable.
 */
enum DscStatus dsc_byleen_eval(const struct DscByleen *m, const char *word_text, char **out);

/**
 * Normal form of the product `x · y`.
 *
 * # Safety
 * `m` must be a live handle, `x` and `y` nul-terminated, `out` writable.
 */
enum DscStatus dsc_byleen_mul(const struct DscByleen *m, const char *x, const char *y, char **out);

/**
 * A verified inverse `t′` with `t t′ t = t` and `t′ t t′ = t′`.
 *
 * # Safety
 * `m` must be a live handle, `t` nul-terminated, `out` writable.
 */
enum DscStatus dsc_byleen_inverse(const struct DscByleen *m, const char *t, char **out);

/**
 * A verified certificate, as JSON, that the letter pair `(w1, w2)` lies in
 * the diagonal subsemigroup generated by `(g, h)`.
 *
 * # Safety
 * `m` must be a live handle, the strings nul-terminated, `out` writable.
 */
enum DscStatus dsc_byleen_span_json(const struct DscByleen *m,
                                    const char *g,
                                    const char *h,
                                    const char *w1,
                                    const char *w2,
                                    char **out);

/**
 * The report of an infinite model (`bicyclic`, `bruck-reilly`,
 * `baer-levi` or `z`) as JSON. `window` bounds the Baer–Levi validation.
 * `passed` receives whether every check held.
 *
 * # Safety
 * `name` must be nul-terminated; `out` and `passed` writable.
 */
enum DscStatus dsc_models_report_json(const char *name, uint64_t window, char **out, bool *passed);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void dsc_string_free(char *s);

/**
 * The message of the last failure on this thread, or null. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *dsc_last_error_message(void);

/**
 * A static name for a status code.
 */
const char *dsc_status_name(enum DscStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DSC_H */
