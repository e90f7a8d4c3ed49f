/*
 * C interface to the primwords library: primitive words, palindromes and
 * Farey arithmetic in the free group F(A, B).
 *
 * Conventions:
 *  - Every function returns a pw_status. On failure, pw_last_error() gives a
 *    thread-local message that stays valid until the next failing call on
 *    the same thread.
 *  - Handles (pw_word, pw_word_list, pw_diagram) are opaque and owned by the
 *    caller once returned; release them with the matching *_free function.
 *  - Strings returned through `char **` are heap allocated by the library
 *    and must be released with pw_string_free.
 *  - Variable-length numeric results use caller buffers: pass `cap` slots,
 *    and `*len` receives the number needed. PW_ERR_BUFFER is returned when
 *    cap is too small (nothing is truncated silently).
 *  - Rationals are p/q in lowest terms with q >= 0; 1/0 is infinity. The
 *    numerator counts B letters and the denominator counts A letters.
 */
#ifndef PRIMWORDS_H
#define PRIMWORDS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PRIMWORDS_BUILDING)
#    define PW_API __declspec(dllexport)
#  else
#    define PW_API __declspec(dllimport)
#  endif
#else
#  define PW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pw_status {
  PW_OK = 0,
  PW_ERR_PARSE = 1,    /* malformed word or rational text */
  PW_ERR_DOMAIN = 2,   /* input outside the operation's domain */
  PW_ERR_OVERFLOW = 3, /* exact arithmetic exceeded 64 bits */
  PW_ERR_NULL = 4,     /* a required pointer argument was NULL */
  PW_ERR_BUFFER = 5,   /* caller buffer too small, see *len */
  PW_ERR_INTERNAL = 6
} pw_status;

typedef struct pw_rational {
  int64_t p;
  int64_t q;
} pw_rational;

typedef struct pw_word pw_word;
typedef struct pw_word_list pw_word_list;
typedef struct pw_diagram pw_diagram;

typedef enum pw_scheme { PW_SCHEME_W = 0, PW_SCHEME_E = 1, PW_SCHEME_CF = 2 } pw_scheme;

typedef enum pw_start {
  PW_START_LOWEST_A = 0,
  PW_START_RIGHTMOST_BOTTOM = 1,
  PW_START_MIDDLE = 2,
  PW_START_OFFSET = 3
} pw_start;

typedef enum pw_symmetry {
  PW_SYM_IDENTITY = 0,
  PW_SYM_INVERT_A = 1,
  PW_SYM_INVERT_B = 2,
  PW_SYM_INVERT_BOTH = 3
} pw_symmetry;

typedef enum pw_reject_reason {
  PW_REJECT_IDENTITY = 0,
  PW_REJECT_MIXED_SIGNS = 1,
  PW_REJECT_NOT_COPRIME = 2,
  PW_REJECT_EXPONENT_PATTERN = 3,
  PW_REJECT_NOT_ROTATION = 4
} pw_reject_reason;

typedef struct pw_verdict {
  int primitive;          /* 1 or 0 */
  pw_rational slope;      /* when primitive */
  uint64_t rotation;      /* when primitive */
  pw_symmetry symmetry;   /* when primitive */
  pw_reject_reason reason; /* when not primitive */
} pw_verdict;

typedef struct pw_abelian {
  int64_t b_sum;
  int64_t a_sum;
} pw_abelian;

typedef struct pw_counts {
  uint64_t vertical;
  uint64_t horizontal;
  uint64_t corner;
} pw_counts;

typedef struct pw_enumerated {
  pw_rational slope;
  int64_t level;
  const pw_word *w; /* borrowed for the duration of the callback */
  const pw_word *e;
} pw_enumerated;

/* Return non-zero to stop the enumeration early. */
typedef int (*pw_enumerate_fn)(void *ctx, const pw_enumerated *item);

PW_API const char *pw_version(void);
PW_API const char *pw_last_error(void);
PW_API const char *pw_status_name(pw_status s);
PW_API void pw_string_free(char *s);

/* Rationals and the Farey tree. */
PW_API pw_status pw_rational_parse(const char *text, pw_rational *out);
PW_API pw_status pw_rational_format(pw_rational x, char **out);
PW_API pw_status pw_is_neighbor(pw_rational x, pw_rational y, int *out);
PW_API pw_status pw_determinant(pw_rational x, pw_rational y, int64_t *out);
PW_API pw_status pw_mediant(pw_rational x, pw_rational y, pw_rational *out);
PW_API pw_status pw_continued_fraction(pw_rational x, int64_t *digits, size_t cap, size_t *len);
PW_API pw_status pw_approximants(pw_rational x, pw_rational *out, size_t cap, size_t *len);
PW_API pw_status pw_farey_sequence(pw_rational x, pw_rational *out, size_t cap, size_t *len);
PW_API pw_status pw_farey_level(pw_rational x, int64_t *out);
PW_API pw_status pw_distinguished_neighbors(pw_rational x, pw_rational *lo, pw_rational *hi);

/* Words. */
PW_API pw_status pw_word_parse(const char *text, pw_word **out);
PW_API void pw_word_free(pw_word *w);
PW_API pw_status pw_word_clone(const pw_word *w, pw_word **out);
PW_API pw_status pw_word_text(const pw_word *w, char **out);
PW_API pw_status pw_word_length(const pw_word *w, size_t *out);
PW_API pw_status pw_word_equal(const pw_word *x, const pw_word *y, int *out);
PW_API pw_status pw_word_concat(const pw_word *x, const pw_word *y, pw_word **out);
PW_API pw_status pw_word_inverse(const pw_word *w, pw_word **out);
PW_API pw_status pw_word_cyclic_reduce(const pw_word *w, pw_word **core, pw_word **conjugator);
PW_API pw_status pw_word_is_palindrome(const pw_word *w, int *out);
PW_API pw_status pw_word_abelianize(const pw_word *w, pw_abelian *out);
PW_API pw_status pw_word_cyclic_equal(const pw_word *x, const pw_word *y, int *out);

PW_API void pw_word_list_free(pw_word_list *l);
PW_API pw_status pw_word_list_size(const pw_word_list *l, size_t *out);
/* Borrowed pointer, valid while the list lives. */
PW_API pw_status pw_word_list_at(const pw_word_list *l, size_t i, const pw_word **out);

/* Enumeration schemes and primitivity. */
PW_API pw_status pw_scheme_word(pw_rational x, pw_scheme scheme, pw_word **out);
PW_API pw_status pw_v_sequence(pw_rational x, pw_word_list **out);
/* exponents receives n0..nt; slope_class is 'B' or 'A' (majority generator). */
PW_API pw_status pw_primitive_exponents(const pw_word *w, char *slope_class, int *separator_sign,
                                        int64_t *exponents, size_t cap, size_t *len);
PW_API pw_status pw_is_primitive(const pw_word *w, pw_verdict *out);
PW_API const char *pw_symmetry_name(pw_symmetry s);
PW_API const char *pw_reject_reason_name(pw_reject_reason r);
/* *second is NULL for a single palindrome. */
PW_API pw_status pw_palindromic_parts(pw_rational x, pw_word **first, pw_word **second);
PW_API pw_status pw_enumerate(int max_level, pw_enumerate_fn fn, void *ctx);
PW_API pw_status pw_associates(pw_rational x, pw_rational y, int *out);

/* Cutting sequences. */
PW_API pw_status pw_cutting_word(pw_rational x, pw_start start, uint64_t offset, pw_word **out);
PW_API pw_status pw_centered_palindrome(pw_rational x, pw_word **out);
PW_API pw_status pw_diagram_build(const pw_word *w, pw_diagram **out);
PW_API void pw_diagram_free(pw_diagram *d);
PW_API pw_status pw_diagram_counts(const pw_diagram *d, pw_counts *out);
PW_API pw_status pw_diagram_is_simple(const pw_diagram *d, int *out);
PW_API pw_status pw_diagram_json(const pw_diagram *d, char **out);
PW_API pw_status pw_diagram_svg(const pw_diagram *d, char **out);

/* Oracle. */
PW_API pw_status pw_whitehead_is_primitive(const pw_word *w, int *out);
PW_API pw_status pw_is_generating_pair(const pw_word *u, const pw_word *v, int *out);
/* Report as JSON; *ok is 1 when no disagreement was found. */
PW_API pw_status pw_cross_check(unsigned max_len, int64_t pair_bound, char **json, int *ok);

#ifdef __cplusplus
}
#endif

#endif /* PRIMWORDS_H */
