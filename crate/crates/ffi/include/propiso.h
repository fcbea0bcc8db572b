#ifndef PROPISO_H
#define PROPISO_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Default cap on distinct letters for truth-table checks.
 */
#define PROPISO_DEFAULT_LETTER_CAP 24

/**
 * Result code of every fallible call.
 */
typedef enum PropisoStatus {
  PROPISO_STATUS_OK = 0,
  PROPISO_STATUS_NULL_POINTER = 1,
  PROPISO_STATUS_INVALID_UTF8 = 2,
  PROPISO_STATUS_PARSE_ERROR = 3,
  /**
   * The formula is outside the language an operation accepts.
   */
  PROPISO_STATUS_WRONG_LANGUAGE = 4,
  PROPISO_STATUS_LETTER_CAP = 5,
  /**
   * Any other library error; see `propiso_last_error`.
   */
  PROPISO_STATUS_FAILED = 6,
  PROPISO_STATUS_PANIC = 7,
} PropisoStatus;

/**
 * Opaque formula handle.
 */
typedef struct PropisoFormula PropisoFormula;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `text` (nul-terminated UTF-8) into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must be null or a valid nul-terminated string; `out` must be null
 * or valid for writes.
 */
enum PropisoStatus propiso_parse(const char *text, struct PropisoFormula **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `f` must be null or a handle returned by this library, not yet freed.
 */
void propiso_formula_free(struct PropisoFormula *f);

/**
 * Renders the formula in the input syntax; null if `f` is null.
 *
 * # Safety
 * `f` must be null or a live handle.
 */
char *propiso_formula_to_string(const struct PropisoFormula *f);

/**
 * Number of letter occurrences; 0 if `f` is null.
 *
 * # Safety
 * `f` must be null or a live handle.
 */
size_t propiso_formula_size(const struct PropisoFormula *f);

/**
 * Negation normal form as a new handle.
 *
 * # Safety
 * `f` must be null or a live handle; `out` must be null or valid for writes.
 */
enum PropisoStatus propiso_nnf(const struct PropisoFormula *f, struct PropisoFormula **out);

/**
 * AC-canonical form, e.g. `AND[p, p, q]`, as a caller-owned string.
 *
 * # Safety
 * `f` must be null or a live handle; `out` must be null or valid for writes.
 */
enum PropisoStatus propiso_canonical(const struct PropisoFormula *f, char **out);

/**
 * Truth-table check over at most `max_letters` distinct letters.
 *
 * # Safety
 * `f` must be null or a live handle; `out` must be null or valid for writes.
 */
enum PropisoStatus propiso_is_tautology(const struct PropisoFormula *f,
                                        size_t max_letters,
                                        bool *out);

/**
 * Theoremhood of `a <-> b` under associativity, commutativity, double
 * negation and De Morgan; this is isomorphism in the generality sense.
 * Formulas with constants are rejected with `WrongLanguage`.
 *
 * # Safety
 * `a`, `b` must be null or live handles; `out` must be null or valid for writes.
 */
enum PropisoStatus propiso_iso_generality(const struct PropisoFormula *a,
                                          const struct PropisoFormula *b,
                                          bool *out);

/**
 * Isomorphism in the Boolean category.
 *
 * # Safety
 * `a`, `b` must be null or live handles; `out` must be null or valid for writes.
 */
enum PropisoStatus propiso_iso_boolean(const struct PropisoFormula *a,
                                       const struct PropisoFormula *b,
                                       size_t max_letters,
                                       bool *out);

/**
 * Boolean isomorphism witness as JSON
 * (`{"f": [[s,t],...], "g": [...], "gf_is_identity": .., "fg_is_identity": ..}`),
 * or the string `null` when the formulas are not isomorphic.
 *
 * # Safety
 * `a`, `b` must be null or live handles; `out` must be null or valid for writes.
 */
enum PropisoStatus propiso_iso_witness_json(const struct PropisoFormula *a,
                                            const struct PropisoFormula *b,
                                            size_t max_letters,
                                            char **out);

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library on the same thread.
 */
const char *propiso_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void propiso_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PROPISO_H */
