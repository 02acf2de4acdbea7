#ifndef NICHOLS_NICHOLS_H
#define NICHOLS_NICHOLS_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define NW_API __attribute__((visibility("default")))
#else
#define NW_API
#endif

typedef enum nw_status {
  NW_OK = 0,
  NW_ERR_INVALID_ARGUMENT = 1,
  NW_ERR_UNKNOWN_IDENTITY = 2,
  NW_ERR_CAP_EXCEEDED = 3,
  NW_ERR_MEMORY = 4,
  NW_ERR_NOT_FINITE = 5,
  NW_ERR_UNSUPPORTED = 6,
  NW_ERR_INTERNAL = 7
} nw_status;

typedef struct nw_context nw_context;

NW_API const char* nw_version(void);
NW_API const char* nw_status_name(nw_status s);
/* Message of the last failed call on this thread; never NULL. */
NW_API const char* nw_last_error(void);
/* Frees strings returned through char** out parameters. */
NW_API void nw_string_free(char* s);

/*
 * type: "A", "D" or "E".  config_json may be NULL or an object with keys
 *   field ("rational" | "prime"), prime, cap, memory_mb, seed, trials,
 *   max_degree, exhaustive.
 * Prime-field contexts share one process-wide modulus; creating one with a
 * different prime while another is alive fails.
 */
NW_API nw_status nw_context_create(const char* type, int rank, const char* config_json, nw_context** out);
NW_API void nw_context_destroy(nw_context* ctx);

/*
 * Every call below writes a JSON report to *out (free with nw_string_free),
 * also on NW_ERR_CAP_EXCEEDED and NW_ERR_MEMORY, where the report carries
 * "partial": true.  Check outcomes are in the report's "status" field.
 */
NW_API nw_status nw_roots(nw_context* ctx, char** out);
NW_API nw_status nw_group(nw_context* ctx, char** out);
/* max_degree < 0: up to the top degree or the cap. */
NW_API nw_status nw_dims(nw_context* ctx, int max_degree, char** out);
NW_API nw_status nw_hilbert(nw_context* ctx, char** out);
/* identity: see nw_identities(); "all" runs every applicable suite. */
NW_API nw_status nw_verify(nw_context* ctx, const char* identity, char** out);
NW_API nw_status nw_identities(char** out);
NW_API nw_status nw_integral(nw_context* ctx, char** out);
NW_API nw_status nw_hypothetical(nw_context* ctx, char** out);
/*
 * monomial_json: array of root indices or root names like "(13)".
 * options_json may be NULL: {"side": "right"|"left", "policy":
 * "min_root"|"max_root", "oracle": bool}.
 */
NW_API nw_status nw_reduce(nw_context* ctx, const char* monomial_json, const char* options_json, char** out);
/* options_json may be NULL: {"max_solutions": n}. */
NW_API nw_status nw_disjoint_search(nw_context* ctx, const char* options_json, char** out);
/* elements_json: array of group elements ({"perm": [...]}, {"word": [...]} or a one-line string "2413"). */
NW_API nw_status nw_disjoint_check(nw_context* ctx, const char* elements_json, char** out);
/* a_json, b_json: element objects or monomials (arrays of root indices). */
NW_API nw_status nw_pairing(nw_context* ctx, const char* a_json, const char* b_json, char** out);
/* elements_json may be NULL: the first complete system found is used. */
NW_API nw_status nw_bracket(nw_context* ctx, const char* elements_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
