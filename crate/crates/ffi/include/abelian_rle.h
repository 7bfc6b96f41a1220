#ifndef ABELIAN_RLE_H
#define ABELIAN_RLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AbrStatus {
  ABR_STATUS_OK = 0,
  ABR_STATUS_NULL_POINTER = 1,
  ABR_STATUS_INVALID_UTF8 = 2,
  ABR_STATUS_MALFORMED_INPUT = 3,
  ABR_STATUS_OUT_OF_RANGE = 4,
  ABR_STATUS_EMPTY_INPUT = 5,
  ABR_STATUS_PANIC = 6,
} AbrStatus;

typedef struct AbrLcaf AbrLcaf;

typedef struct AbrPeriods AbrPeriods;

typedef struct AbrSquares AbrSquares;

// Run-length encoded text.
typedef struct AbrText AbrText;

typedef struct AbrSquareRun {
  size_t first_start;
  size_t last_start;
  size_t half_len;
} AbrSquareRun;

typedef struct AbrPeriod {
  size_t p;
  size_t t;
} AbrPeriod;

typedef struct AbrPair {
  size_t i;
  size_t k;
} AbrPair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next failing call on the same thread.
const char *abr_last_error_message(void);

// Static description of a status code.
const char *abr_status_str(enum AbrStatus status);

// Encodes a NUL-terminated UTF-8 string.
//
// # Safety
// `text` must be null or a valid NUL-terminated string; `out` must be
// writable.
enum AbrStatus abr_text_from_utf8(const char *text, struct AbrText **out);

// Builds a text from whitespace-separated `char:count` tokens.
//
// # Safety
// As for [`abr_text_from_utf8`].
enum AbrStatus abr_text_from_rle_tokens(const char *tokens, struct AbrText **out);

// # Safety
// `text` must be null or a handle from this library, not yet freed.
void abr_text_free(struct AbrText *text);

// Length in characters; 0 for a null handle.
//
// # Safety
// `text` must be null or a live handle.
size_t abr_text_len(const struct AbrText *text);

// Number of maximal runs; 0 for a null handle.
//
// # Safety
// `text` must be null or a live handle.
size_t abr_text_runs(const struct AbrText *text);

// Abelian squares with half length `d`, or every half length when `d` is 0.
//
// # Safety
// `text` must be a live handle and `out` writable.
enum AbrStatus abr_squares(const struct AbrText *text, size_t d, struct AbrSquares **out);

// # Safety
// `s` must be null or a live handle.
size_t abr_squares_len(const struct AbrSquares *s);

// # Safety
// `s` must be a live handle and `out` writable.
enum AbrStatus abr_squares_get(const struct AbrSquares *s, size_t index, struct AbrSquareRun *out);

// # Safety
// `s` must be null or a handle from this library, not yet freed.
void abr_squares_free(struct AbrSquares *s);

// All regular Abelian periods, ascending by `p`.
//
// # Safety
// `text` must be a live handle and `out` writable.
enum AbrStatus abr_periods(const struct AbrText *text, struct AbrPeriods **out);

// # Safety
// `p` must be null or a live handle.
size_t abr_periods_len(const struct AbrPeriods *p);

// # Safety
// `p` must be a live handle and `out` writable.
enum AbrStatus abr_periods_get(const struct AbrPeriods *p, size_t index, struct AbrPeriod *out);

// # Safety
// `p` must be null or a handle from this library, not yet freed.
void abr_periods_free(struct AbrPeriods *p);

// Longest common Abelian factors of two NUL-terminated UTF-8 strings.
//
// # Safety
// `a` and `b` must be valid NUL-terminated strings and `out` writable.
enum AbrStatus abr_lcaf(const char *a, const char *b, struct AbrLcaf **out);

// Length of the longest common factors; 0 when none exist.
//
// # Safety
// `l` must be null or a live handle.
size_t abr_lcaf_length(const struct AbrLcaf *l);

// Number of compact match records.
//
// # Safety
// `l` must be null or a live handle.
size_t abr_lcaf_match_count(const struct AbrLcaf *l);

// Number of distinct start-position pairs.
//
// # Safety
// `l` must be null or a live handle.
size_t abr_lcaf_pair_count(const struct AbrLcaf *l);

// Pairs are sorted by first position, then second.
//
// # Safety
// `l` must be a live handle and `out` writable.
enum AbrStatus abr_lcaf_pair_get(const struct AbrLcaf *l, size_t index, struct AbrPair *out);

// # Safety
// `l` must be null or a handle from this library, not yet freed.
void abr_lcaf_free(struct AbrLcaf *l);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ABELIAN_RLE_H */
