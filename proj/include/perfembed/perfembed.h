/*
 * perfembed — embedding binary 1-error-correcting codes in perfect codes.
 *
 * C interface of the shared library. All objects are opaque handles that
 * must be released with the matching *_free function. Functions return
 * pe_status; on any status other than PE_OK a human-readable message is
 * available from pe_last_error() (thread-local, overwritten by the next
 * failing call on the same thread).
 *
 * Words cross this boundary as NUL-terminated '0'/'1' strings whose
 * leftmost character is coordinate 1. Output buffers must provide room
 * for the word plus the terminator (n + 1 bytes for length-n words).
 */
#ifndef PERFEMBED_H
#define PERFEMBED_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pe_status {
  PE_OK = 0,
  PE_ERR_IO = 1,       /* file missing or unreadable/unwritable */
  PE_ERR_INVALID = 2,  /* malformed or rejected input */
  PE_ERR_VERIFY = 3,   /* a verification check failed */
  PE_ERR_LIMIT = 4,    /* enumeration/materialization size limit */
  PE_ERR_ARG = 5,      /* null handle, null pointer, short buffer */
  PE_ERR_INTERNAL = 6, /* invariant breach; indicates a library bug */
} pe_status;

/* An embedding of a seed code C of length m (2 <= m <= 16) into a
 * 1-error-correcting perfect code of length n = 2^m - 1. Immutable and
 * safe to share between threads. */
typedef struct pe_oracle pe_oracle;

/* A set of point triples on points 1..v. */
typedef struct pe_sts pe_sts;

const char *pe_version(void);
const char *pe_last_error(void);

/* ---- oracle construction ---------------------------------------------- */

/* Seed-code file: first data line "m=<int>", then one m-bit word per line;
 * '#' comments and blank lines are ignored. */
pe_status pe_oracle_from_file(const char *path, pe_oracle **out);

/* Seed from `count` rendered m-words. A seed missing the all-zero word is
 * accepted and handled by translation; queries speak the original code. */
pe_status pe_oracle_from_words(uint32_t m, const char *const *words,
                               size_t count, pe_oracle **out);

void pe_oracle_free(pe_oracle *oracle);

/* ---- oracle properties ------------------------------------------------- */

uint32_t pe_oracle_m(const pe_oracle *oracle);
uint32_t pe_oracle_n(const pe_oracle *oracle);
size_t pe_oracle_seed_size(const pe_oracle *oracle);

/* The translation applied to a seed without the zero word (all zeroes when
 * none was needed), as an m-word. */
pe_status pe_oracle_offset(const pe_oracle *oracle, char *buf, size_t cap);

/* Number of codewords, 2^(n-m), formatted in decimal when it fits 64 bits
 * and as "2^k" otherwise. */
pe_status pe_oracle_code_size(const pe_oracle *oracle, char *buf, size_t cap);

/* ---- queries ------------------------------------------------------------ */

/* *result = 1 iff `word` (length n) is a codeword. */
pe_status pe_member(const pe_oracle *oracle, const char *word, int *result);

/* Writes the unique codeword at distance <= 1 from `word` into buf and the
 * 1-based position that was flipped into *flipped_pos (0 when `word` itself
 * is the codeword). flipped_pos may be NULL. */
pe_status pe_decode(const pe_oracle *oracle, const char *word, char *buf,
                    size_t cap, uint32_t *flipped_pos);

/* Word callback: return 0 to continue, nonzero to stop the stream early. */
typedef int (*pe_word_cb)(const char *word, void *ctx);

/* Streams every codeword in ascending order of the rendered string.
 * Enumeration is refused above m = min(enum_limit, 5) with PE_ERR_LIMIT;
 * pass enum_limit = 5 explicitly to enumerate an m = 5 code (2^26 words). */
pe_status pe_enumerate(const pe_oracle *oracle, uint32_t enum_limit,
                       pe_word_cb cb, void *ctx);

/* Streams the seed words recovered from the embedded code by fixing the
 * last n - m coordinates to zero, in ascending rendered order. */
pe_status pe_project(const pe_oracle *oracle, pe_word_cb cb, void *ctx);

/* ---- verification -------------------------------------------------------- */

typedef enum pe_verify_level {
  PE_VERIFY_FAST = 0,       /* any m: projection + sampled decode checks   */
  PE_VERIFY_EXHAUSTIVE = 1, /* m <= 4: full-space agreement + perfectness  */
  PE_VERIFY_M5_SWEEP = 2,   /* m == 5: 2^31-word coverage sweep            */
} pe_verify_level;

/* Report-line callback; lines arrive already formatted. */
typedef void (*pe_line_cb)(const char *line, void *ctx);

/* Runs the verification suite for `level`. Randomized checks derive from
 * rng_seed (pass 0 for the reproducible default). threads <= 0 picks the
 * hardware default. Returns PE_OK when every check passed, PE_ERR_VERIFY
 * when some check failed; report lines are emitted either way. */
pe_status pe_verify(const pe_oracle *oracle, pe_verify_level level,
                    uint64_t rng_seed, int threads, pe_line_cb cb, void *ctx);

/* Verifies an explicit codeword dump (one n-bit word per line): full
 * radius-1 coverage of the n-cube and, when `oracle` is non-NULL,
 * word-for-word membership and cardinality. */
pe_status pe_verify_dump_file(const pe_oracle *oracle, const char *path,
                              int threads, pe_line_cb cb, void *ctx);
pe_status pe_verify_dump_words(const pe_oracle *oracle,
                               const char *const *words, size_t count,
                               int threads, pe_line_cb cb, void *ctx);

/* ---- triple systems ------------------------------------------------------ */

/* Triple file: first data line "v=<int>", then one triple per line as three
 * ascending space-separated 1-based points. */
pe_status pe_sts_from_file(const char *path, pe_sts **out);

/* From `count` triples given as point arrays. */
pe_status pe_sts_from_triples(uint32_t v, const uint32_t (*triples)[3],
                              size_t count, pe_sts **out);

void pe_sts_free(pe_sts *sts);

uint32_t pe_sts_v(const pe_sts *sts);
size_t pe_sts_size(const pe_sts *sts);
pe_status pe_sts_triple(const pe_sts *sts, size_t idx, uint32_t out[3]);

pe_status pe_sts_to_file(const pe_sts *sts, const char *path,
                         const char *comment /* nullable */);

/* Pair-coverage check: complete != 0 demands every point pair in exactly
 * one triple, otherwise at most one. PE_OK when valid, PE_ERR_VERIFY when
 * not; report lines are emitted either way. */
pe_status pe_sts_check(const pe_sts *sts, int complete, pe_line_cb cb,
                       void *ctx);

/* Embeds a partial system on v points (2 <= v <= 16) into the complete
 * system on 2^v - 1 points formed by the weight-3 codewords of the embedded
 * code; input triples reappear verbatim. A one-line summary is written to
 * note_buf when provided. */
pe_status pe_sts_embed(const pe_sts *sts, pe_sts **out, char *note_buf,
                       size_t note_cap);

/* The complete triple system of an embedded code whose seed contained the
 * zero word, via pair-completion decoding. */
pe_status pe_sts_extract(const pe_oracle *oracle, pe_sts **out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PERFEMBED_H */
