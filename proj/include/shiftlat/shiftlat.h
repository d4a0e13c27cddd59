/* shiftlat — truncated weighted shift operators and their invariant-subspace
 * lattices, exposed through a C ABI. All structured data crosses the boundary
 * as JSON text; rationals are strings "p/q" in lowest terms with q > 0.
 */
#ifndef SHIFTLAT_H
#define SHIFTLAT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sl_status {
    SL_OK = 0,
    SL_ERR_PARSE = 1,
    SL_ERR_DIM = 2,
    SL_ERR_DOMAIN = 3,
    SL_ERR_NOT_INVARIANT = 4,
    SL_ERR_PATTERN = 5,
    SL_ERR_INTERNAL = 99
} sl_status;

/* Opaque session handle; holds the last error message. Not thread-shared. */
typedef struct sl_ctx sl_ctx;
/* Opaque canonical subspace handle. */
typedef struct sl_subspace sl_subspace;

sl_ctx* sl_ctx_new(void);
void sl_ctx_free(sl_ctx* ctx);
/* Message for the most recent failing call on this ctx; empty if none. */
const char* sl_last_error(const sl_ctx* ctx);
const char* sl_version(void);

/* Frees any char* returned through an out parameter below. */
void sl_string_free(char* s);

/* Parses {"ambient_dim": int, "basis": [["p/q", ...], ...]} and canonicalizes
 * the basis to reduced row echelon form. */
sl_status sl_subspace_parse(sl_ctx* ctx, const char* json, sl_subspace** out);
void sl_subspace_free(sl_subspace* s);
int sl_subspace_dim(const sl_subspace* s);
int sl_subspace_ambient(const sl_subspace* s);
sl_status sl_subspace_to_json(sl_ctx* ctx, const sl_subspace* s, char** out_json);

/* shift_spec_json: {"family": name, "params": {...}, "N": int,
 * "direction": "backward"|"forward"}. */
sl_status sl_is_invariant(sl_ctx* ctx, const sl_subspace* s, const char* shift_spec_json,
                          int power, int* out);
sl_status sl_shift_matrix(sl_ctx* ctx, const char* shift_spec_json, int power, char** out_json);
sl_status sl_decompose(sl_ctx* ctx, const sl_subspace* s, const char* shift_spec_json, int power,
                       char** out_json);

/* mode: "2", "3", "joint", "parity2", "parity3". The report carries the
 * canonical form and an invariance certificate. */
sl_status sl_classify(sl_ctx* ctx, const sl_subspace* s, const char* shift_spec_json,
                      const char* mode, char** out_json);

/* Weight-class report; config keys: family (required), prefix, tail_budget,
 * bv_K, K, M_max, cap, epsilon, diagonal_only, include_n_lt_m, an_K. */
sl_status sl_weights_report(sl_ctx* ctx, const char* config_json, char** out_json);

/* Verification suites: t2, t3, joint, prop29, cor44, thm36, thm39.
 * config keys: seed (required for randomized suites), cases, N.
 * out_csv (nullable pointer) receives the CSV artifact when the suite
 * produces one. */
sl_status sl_verify_suite(sl_ctx* ctx, const char* suite, const char* config_json,
                          char** out_json, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* SHIFTLAT_H */
