#ifndef EQS_EQS_H
#define EQS_EQS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(EQS_BUILDING_LIBRARY)
#define EQS_API __attribute__((visibility("default")))
#else
#define EQS_API
#endif

/* Status codes double as process exit codes for the command-line tool. */
typedef enum eqs_status {
  EQS_OK = 0,
  EQS_MISMATCH = 1, /* a verification item failed */
  EQS_USAGE = 2,    /* bad argument or input outside the domain */
  EQS_CAP = 3,      /* an enumeration cap was exceeded */
  EQS_INTERNAL = 4
} eqs_status;

typedef enum eqs_format { EQS_FORMAT_TEXT = 0, EQS_FORMAT_JSON = 1, EQS_FORMAT_CSV = 2 } eqs_format;

typedef struct eqs_context eqs_context;
typedef struct eqs_result eqs_result;

EQS_API const char* eqs_version(void);

/* Caps start from the defaults, overridden by EQS_CAPS="perm_n=12,sym_degree=14,...". */
EQS_API eqs_status eqs_context_new(eqs_context** out);
EQS_API void eqs_context_free(eqs_context* ctx);
EQS_API eqs_status eqs_set_format(eqs_context* ctx, eqs_format format);
/* Keys: perm_n, sym_degree, q_degree, series_order, poset_elements. */
EQS_API eqs_status eqs_set_cap(eqs_context* ctx, const char* key, long long value);
/* Message for the last call on ctx that did not return EQS_OK; never NULL. */
EQS_API const char* eqs_last_error(const eqs_context* ctx);

/* Suites, in registry order. */
EQS_API size_t eqs_suite_count(void);
EQS_API const char* eqs_suite_id(size_t index);
EQS_API const char* eqs_suite_summary(size_t index);
/* Bound names and defaults of a suite; returns 0 past the end. */
EQS_API int eqs_suite_bound(size_t index, size_t bound, const char** name, long long* value);

/* Overrides one bound for the next eqs_verify call on ctx; cleared after it. */
EQS_API eqs_status eqs_set_bound(eqs_context* ctx, const char* name, long long value);
/* Runs a suite by id. Returns EQS_MISMATCH when an item fails; the result still holds the report. */
EQS_API eqs_status eqs_verify(eqs_context* ctx, const char* suite_id, eqs_result** out);

/* Statistics of a permutation in one-line notation, e.g. "45162387" or "10 2 1 3 ...". */
EQS_API eqs_status eqs_stats(eqs_context* ctx, const char* perm, eqs_result** out);

/* kind: "char" (characters of Q_{(n),j}), "qeuler" (Σ q^maj p^des t^exc by exc),
   "whitney" (family: boolean, subspace, isotropic, crosspolytope; q used by the field families),
   "dims" (dimensions of Q_{λ,j} over λ ⊢ n). all_j != 0 lists every j for char. */
EQS_API eqs_status eqs_table(eqs_context* ctx, const char* kind, int n, const char* family, int q, int all_j,
                             eqs_result** out);

/* object "Q" with lambda "6" or "3,2,1" (or lambda NULL and n >= 0 for Q_{n,j}, k >= 0 adds fixed points).
   basis: m, h, e, p, s. */
EQS_API eqs_status eqs_expand(eqs_context* ctx, const char* object, const char* lambda, int n, int j, int k,
                              const char* basis, eqs_result** out);

/* map: phi (barred word -> permutation), eta (its inverse), gamma (banner -> banner and marked
   sequence), lyndon, incfact (words), grphi (input permutation, extra compatible sequence "7,7,5"),
   greta (ornament "(7'5'47)(7'5)(2'2)"). Barred letters carry an apostrophe. */
EQS_API eqs_status eqs_biject(eqs_context* ctx, const char* map, const char* input, const char* extra,
                              eqs_result** out);

/* kind: "mobius" (of the family, completed when unbounded), "rees" (completed P⁻ * C_n),
   "ideal" (Î_j(P)). family: boolean, subspace, isotropic, crosspolytope, chain. */
EQS_API eqs_status eqs_poset(eqs_context* ctx, const char* kind, const char* family, int n, int q, int j,
                             eqs_result** out);

/* Formatted output in the context format at the time the result was made. */
EQS_API const char* eqs_result_text(const eqs_result* res);
/* First failing item of a verification, empty otherwise. */
EQS_API const char* eqs_result_witness(const eqs_result* res);
EQS_API eqs_status eqs_result_status(const eqs_result* res);
EQS_API void eqs_result_free(eqs_result* res);

#ifdef __cplusplus
}
#endif

#endif
