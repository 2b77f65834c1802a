#ifndef WORDLAB_H
#define WORDLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WlStatus {
  WL_STATUS_OK = 0,
  WL_STATUS_NULL_POINTER = 1,
  WL_STATUS_FORMAT = 2,
  WL_STATUS_RANGE = 3,
  WL_STATUS_PRECONDITION = 4,
  WL_STATUS_INVARIANT = 5,
  WL_STATUS_RUNTIME = 6,
  WL_STATUS_BUFFER_TOO_SMALL = 7,
  WL_STATUS_PANIC = 8,
} WlStatus;

typedef enum WlVerdict {
  WL_VERDICT_NOT_EXTENSION = 0,
  WL_VERDICT_TRIVIAL = 1,
  WL_VERDICT_NONTRIVIAL_MINIMAL = 2,
  WL_VERDICT_NONTRIVIAL_NON_MINIMAL = 3,
} WlVerdict;

/**
 * Opaque word handle.
 */
typedef struct WlWord WlWord;

typedef struct WlClassification {
  enum WlVerdict verdict;
  size_t period_wu;
  size_t mu_wu;
  /**
   * Set only for non-extensions; `witness_start` is 1-based.
   */
  bool has_witness;
  size_t witness_start;
  size_t witness_len;
  bool structural_form;
} WlClassification;

typedef struct WlVerifySummary {
  bool verified;
  uint64_t words_scanned;
  uint64_t vacuous;
  size_t violations;
  size_t tight_cases;
} WlVerifySummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *wl_last_error_message(void);

/**
 * Decodes a word over `a..=z`.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum WlStatus wl_word_from_text(const char *text, struct WlWord **out);

/**
 * # Safety
 * `w` must be null or a handle from this library that was not freed yet.
 */
void wl_word_free(struct WlWord *w);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void wl_string_free(char *s);

/**
 * # Safety
 * `w` must be a live handle and `out` a valid pointer.
 */
enum WlStatus wl_word_len(const struct WlWord *w, size_t *out);

/**
 * Writes a newly allocated string; release it with [`wl_string_free`].
 *
 * # Safety
 * `w` must be a live handle and `out` a valid pointer.
 */
enum WlStatus wl_word_to_text(const struct WlWord *w, char **out);

/**
 * # Safety
 * `w` must be a live handle and `out` a valid pointer.
 */
enum WlStatus wl_word_period(const struct WlWord *w, size_t *out);

/**
 * Length and 1-based start of the leftmost longest unbordered factor.
 *
 * # Safety
 * `w` must be a live handle; `mu` and `start` valid pointers.
 */
enum WlStatus wl_word_mu(const struct WlWord *w, size_t *mu, size_t *start);

/**
 * # Safety
 * `w` must be a live handle and `out` a valid pointer.
 */
enum WlStatus wl_word_is_unbordered(const struct WlWord *w, bool *out);

/**
 * Local period at point `p`, `1 <= p < |w|`.
 *
 * # Safety
 * `w` must be a live handle and `out` a valid pointer.
 */
enum WlStatus wl_word_local_period(const struct WlWord *w, size_t p, size_t *out);

/**
 * Writes up to `cap` critical points into `buf` and their total count into
 * `needed`. Returns `BufferTooSmall` (with `needed` set) when `cap` is short.
 *
 * # Safety
 * `w` must be a live handle, `needed` a valid pointer, and `buf` valid for
 * `cap` writes (it may be null when `cap` is 0).
 */
enum WlStatus wl_word_critical_points(const struct WlWord *w,
                                      size_t *buf,
                                      size_t cap,
                                      size_t *needed);

/**
 * # Safety
 * `w` and `u` must be live handles and `out` a valid pointer.
 */
enum WlStatus wl_classify_extension(const struct WlWord *w,
                                    const struct WlWord *u,
                                    struct WlClassification *out);

/**
 * # Safety
 * `w_out` and `u_out` must be valid pointers.
 */
enum WlStatus wl_family_tightness(size_t n, size_t m, struct WlWord **w_out, struct WlWord **u_out);

/**
 * # Safety
 * `out` must be a valid pointer.
 */
enum WlStatus wl_family_assous_pouzet(size_t n, struct WlWord **out);

/**
 * Runs a campaign (`main-theorem`, `corollary`, `cft`, `lemmas`,
 * `extremal-ratio`). A campaign that finds violations still returns `Ok`
 * with `verified` false. `workers` of 0 means 1.
 *
 * # Safety
 * `target` must be a nul-terminated string and `out` a valid pointer.
 */
enum WlStatus wl_verify(const char *target,
                        uint8_t alphabet,
                        size_t max_len,
                        size_t workers,
                        struct WlVerifySummary *out);

/**
 * Same campaign as [`wl_verify`], reported as the CLI's JSON record.
 *
 * # Safety
 * `target` must be a nul-terminated string and `out` a valid pointer.
 */
enum WlStatus wl_verify_json(const char *target,
                             uint8_t alphabet,
                             size_t max_len,
                             size_t workers,
                             char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WORDLAB_H */
