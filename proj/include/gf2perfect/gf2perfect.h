/*
 * C interface to the gf2perfect library: GF(2)[x] arithmetic, sigma,
 * perfect-polynomial certification, structural lemma verifiers and searches.
 *
 * Conventions
 *   - Every fallible call returns gf2p_status; GF2P_OK is zero.
 *   - Objects are opaque handles created by *_create / producer functions and
 *     released by the matching *_destroy. Destroy functions accept NULL.
 *   - Strings returned through char** are heap-allocated by the library and
 *     must be released with gf2p_string_free. Rendered output (factorizations,
 *     records, summaries, JSON documents) is newline-terminated; polynomial
 *     text and hex strings are not.
 *   - A context carries options (worker count, factorization seed) and the
 *     last error message. A context must not be used by two threads at once;
 *     polynomial handles are immutable and may be shared freely.
 */
#ifndef GF2PERFECT_H
#define GF2PERFECT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GF2P_BUILDING_LIBRARY)
#define GF2P_API __declspec(dllexport)
#else
#define GF2P_API __declspec(dllimport)
#endif
#else
#define GF2P_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gf2p_status {
  GF2P_OK = 0,
  GF2P_ERR_INVALID_ARGUMENT = 1, /* NULL handle, bad bound, unknown name */
  GF2P_ERR_PARSE = 2,            /* see gf2p_context_error_position */
  GF2P_ERR_DOMAIN = 3,           /* zero input, division by zero, ... */
  GF2P_ERR_RANGE = 4,            /* bound outside the supported range */
  GF2P_ERR_IO = 5,
  GF2P_ERR_INTERNAL = 6
} gf2p_status;

typedef enum gf2p_format {
  GF2P_FORMAT_TEXT = 0,
  GF2P_FORMAT_JSON = 1
} gf2p_format;

typedef struct gf2p_context gf2p_context;
typedef struct gf2p_poly gf2p_poly;
typedef struct gf2p_report gf2p_report;

GF2P_API const char* gf2p_status_name(gf2p_status status);
GF2P_API void gf2p_string_free(char* s);

/* ---- context ---------------------------------------------------------- */

GF2P_API gf2p_status gf2p_context_create(gf2p_context** out);
GF2P_API void gf2p_context_destroy(gf2p_context* ctx);
GF2P_API gf2p_status gf2p_context_set_jobs(gf2p_context* ctx, unsigned jobs);
GF2P_API gf2p_status gf2p_context_set_seed(gf2p_context* ctx, uint64_t seed);
/* Message of the last failed call on ctx; "" if none. Valid until the next call. */
GF2P_API const char* gf2p_context_last_error(const gf2p_context* ctx);
/* Input offset of the last GF2P_ERR_PARSE, or -1. */
GF2P_API long gf2p_context_error_position(const gf2p_context* ctx);

/* ---- polynomials ------------------------------------------------------ */

GF2P_API gf2p_status gf2p_poly_parse(gf2p_context* ctx, const char* text, gf2p_poly** out);
/* words[i] holds coefficients 64i .. 64i+63, least significant bit first. */
GF2P_API gf2p_status gf2p_poly_from_words(gf2p_context* ctx, const uint64_t* words, size_t count,
                                          gf2p_poly** out);
GF2P_API void gf2p_poly_destroy(gf2p_poly* p);
/* Degree, or -1 for the zero polynomial. */
GF2P_API long gf2p_poly_degree(const gf2p_poly* p);
/* Writes up to capacity words and returns the number of words needed. */
GF2P_API size_t gf2p_poly_words(const gf2p_poly* p, uint64_t* words, size_t capacity);
GF2P_API int gf2p_poly_equal(const gf2p_poly* a, const gf2p_poly* b);
GF2P_API gf2p_status gf2p_poly_to_text(gf2p_context* ctx, const gf2p_poly* p, char** out);
GF2P_API gf2p_status gf2p_poly_to_hex(gf2p_context* ctx, const gf2p_poly* p, char** out);

GF2P_API gf2p_status gf2p_poly_add(gf2p_context* ctx, const gf2p_poly* a, const gf2p_poly* b, gf2p_poly** out);
GF2P_API gf2p_status gf2p_poly_mul(gf2p_context* ctx, const gf2p_poly* a, const gf2p_poly* b, gf2p_poly** out);
GF2P_API gf2p_status gf2p_poly_divrem(gf2p_context* ctx, const gf2p_poly* a, const gf2p_poly* d,
                                      gf2p_poly** quotient, gf2p_poly** remainder);
GF2P_API gf2p_status gf2p_poly_gcd(gf2p_context* ctx, const gf2p_poly* a, const gf2p_poly* b, gf2p_poly** out);
GF2P_API gf2p_status gf2p_poly_pow(gf2p_context* ctx, const gf2p_poly* a, uint64_t e, gf2p_poly** out);
GF2P_API gf2p_status gf2p_poly_translate(gf2p_context* ctx, const gf2p_poly* a, gf2p_poly** out);
GF2P_API gf2p_status gf2p_poly_reverse(gf2p_context* ctx, const gf2p_poly* a, gf2p_poly** out);

/* ---- factorization and sigma ------------------------------------------ */

GF2P_API gf2p_status gf2p_is_irreducible(gf2p_context* ctx, const gf2p_poly* p, int* out);
/* text: "x^2*(x+1)"; json: [{"prime_hex","prime_text","exp"}, ...] */
GF2P_API gf2p_status gf2p_factor(gf2p_context* ctx, const gf2p_poly* p, gf2p_format format, char** out);
GF2P_API gf2p_status gf2p_sigma(gf2p_context* ctx, const gf2p_poly* p, gf2p_poly** out);
/* text: sigma as a polynomial; json: sigma document */
GF2P_API gf2p_status gf2p_sigma_describe(gf2p_context* ctx, const gf2p_poly* p, gf2p_format format, char** out);
GF2P_API gf2p_status gf2p_omega(gf2p_context* ctx, const gf2p_poly* p, size_t* out);
/* *is_even is 1 for even, 0 for odd. */
GF2P_API gf2p_status gf2p_parity(gf2p_context* ctx, const gf2p_poly* p, int* is_even);
/* Irreducibles of degree 1..max_deg. If cache_path is non-NULL the list is
 * read from it when it exists and covers max_deg, otherwise computed and
 * written there (one hex mask per line). Output: hex masks, one per line. */
GF2P_API gf2p_status gf2p_irreducibles(gf2p_context* ctx, int max_deg, const char* cache_path, char** out);

/* ---- certification ---------------------------------------------------- */

GF2P_API gf2p_status gf2p_certify(gf2p_context* ctx, const gf2p_poly* p, int* is_perfect,
                                  gf2p_format format, char** out);
GF2P_API gf2p_status gf2p_catalog(gf2p_context* ctx, gf2p_format format, char** out);

/* ---- searches ---------------------------------------------------------- */

GF2P_API gf2p_status gf2p_exhaustive_search(gf2p_context* ctx, int max_deg, gf2p_report** out);
GF2P_API gf2p_status gf2p_shape_search(gf2p_context* ctx, int deg_bound, int p_deg_bound, int use_pruning,
                                       gf2p_report** out);
GF2P_API gf2p_status gf2p_odd_square_search(gf2p_context* ctx, int max_deg, gf2p_report** out);
GF2P_API void gf2p_report_destroy(gf2p_report* r);
GF2P_API size_t gf2p_report_perfect_count(const gf2p_report* r);
GF2P_API uint64_t gf2p_report_candidates_examined(const gf2p_report* r);
GF2P_API double gf2p_report_wall_seconds(const gf2p_report* r);
/* Hex mask of the i-th found perfect polynomial. */
GF2P_API gf2p_status gf2p_report_perfect_hex(gf2p_context* ctx, const gf2p_report* r, size_t i, char** out);
GF2P_API gf2p_status gf2p_report_summary(gf2p_context* ctx, const gf2p_report* r, char** out);
/* text: one record per line; json: the report document */
GF2P_API gf2p_status gf2p_report_render(gf2p_context* ctx, const gf2p_report* r, gf2p_format format, char** out);

/* ---- lemma verifiers -------------------------------------------------- */

/* Bounds left at -1 take the verifier's default. */
typedef struct gf2p_lemma_bounds {
  int max_deg;
  int m_bound;
  int h_bound;
  int k_bound;
  int p_deg_bound;
  int n_bound;
  const gf2p_poly* poly; /* parity only; NULL checks the catalog */
} gf2p_lemma_bounds;

GF2P_API void gf2p_lemma_bounds_init(gf2p_lemma_bounds* b);
/* name: "1iii", "1iv", "4", "5", "6", "8" or "parity". *holds receives 1 when
 * the scan matches the expected outcome. out receives the verdict record. */
GF2P_API gf2p_status gf2p_verify_lemma(gf2p_context* ctx, const char* name, const gf2p_lemma_bounds* bounds,
                                       int* holds, gf2p_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GF2PERFECT_H */
