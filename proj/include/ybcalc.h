/* ybcalc: C interface to the Yang-Baxter solution calculator.
 *
 * Usage pattern: create a context, parse or load a document into an opaque
 * object, call operations on it. Every function returns a status code;
 * on any non-OK status the context holds a human-readable message and a
 * stable machine code (ybc_last_error / ybc_last_error_code).
 *
 * All char* outputs are heap strings owned by the caller; release them with
 * ybc_string_free. Reports and documents are UTF-8 JSON text. Mathematical
 * outcomes (validity verdicts, search results, overflow states) are encoded
 * in the report body, never as error statuses: an error status means the
 * computation could not be carried out as requested.
 */

#ifndef YBCALC_H
#define YBCALC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ybc_status {
  YBC_OK = 0,
  YBC_ERR_PARSE = 1,    /* input is not JSON */
  YBC_ERR_SCHEMA = 2,   /* JSON that does not match the document schema */
  YBC_ERR_KIND = 3,     /* unknown document kind, or kind unfit for the call */
  YBC_ERR_DOMAIN = 4,   /* content violates a precondition: invalid math
                           content, bad option value, out-of-range letter */
  YBC_ERR_FILE = 5,     /* file unreadable */
  YBC_ERR_ARGUMENT = 6, /* null pointer or otherwise unusable call argument */
  YBC_ERR_INTERNAL = 7  /* invariant breach inside the library; report it */
} ybc_status;

typedef struct ybc_ctx ybc_ctx;
typedef struct ybc_object ybc_object;

ybc_ctx *ybc_ctx_new(void);
void ybc_ctx_free(ybc_ctx *ctx);

/* Message and stable code of the most recent failure on this context.
 * Returned pointers stay valid until the next call on the same context. */
const char *ybc_last_error(const ybc_ctx *ctx);
const char *ybc_last_error_code(const ybc_ctx *ctx);

void ybc_string_free(char *s);
void ybc_object_free(ybc_object *obj);

/* ---- documents ---------------------------------------------------- */

ybc_status ybc_parse(ybc_ctx *ctx, const char *json_text, ybc_object **out);
ybc_status ybc_load_file(ybc_ctx *ctx, const char *path, ybc_object **out);

/* "solution" | "rack" | "brace" | "rack_data" (static string). */
const char *ybc_object_kind(const ybc_object *obj);

/* Canonical serialization; round-trips through ybc_parse. */
ybc_status ybc_serialize(ybc_ctx *ctx, const ybc_object *obj, char **out_json);

/* ---- validation and analysis -------------------------------------- */

/* Validates whatever the object is, using the validator of its kind.
 * *out_valid is 1/0; *out_report (optional, pass NULL to skip) receives the
 * issue list as JSON. Invalid content is a successful validation run. */
ybc_status ybc_validate(ybc_ctx *ctx, const ybc_object *obj, int *out_valid,
                        char **out_report);

/* Full analysis of a solution document. options_json may be NULL or a JSON
 * object with any of (all optional): "class_cap", "closure_cap",
 * "malcev_class", "malcev_len", "d_retries", "reach_cap",
 * "max_subsets_per_size", "sim_word_budget", "falsifier_overflow_budget",
 * "run_falsifier", "run_components", "timing". */
ybc_status ybc_analyze(ybc_ctx *ctx, const ybc_object *obj,
                       const char *options_json, char **out_report);

/* Pair-condition search on a solution; report carries outcome and witness.
 * Extra option: "sizes" (array of subset sizes to search). */
ybc_status ybc_nc_check(ybc_ctx *ctx, const ybc_object *obj,
                        const char *options_json, char **out_report);

/* Replays an explicit witness {"Y":[..],"Z":[..],"a":[..],"b":[..]}.
 * *out_ok is 1 when the witness certifies the condition. */
ybc_status ybc_nc_verify(ybc_ctx *ctx, const ybc_object *obj,
                         const char *witness_json, int *out_ok,
                         char **out_report);

/* ---- word calculus ------------------------------------------------- */

/* Words are letter arrays over 0..n-1. in_m = 1 treats words as structure
 * monoid elements (transported through the cocycle), 0 as additive words. */
ybc_status ybc_word_normalize(ybc_ctx *ctx, const ybc_object *obj,
                              const int32_t *word, size_t len, int in_m,
                              const char *options_json, char **out_report);
ybc_status ybc_word_equal(ybc_ctx *ctx, const ybc_object *obj,
                          const int32_t *w1, size_t len1, const int32_t *w2,
                          size_t len2, int in_m, const char *options_json,
                          char **out_report);
ybc_status ybc_word_divisors(ybc_ctx *ctx, const ybc_object *obj,
                             const int32_t *word, size_t len, int in_m,
                             const char *options_json, char **out_report);

/* ---- racks and braces ---------------------------------------------- */

/* Abelian rack -> block-description document (kind "rack_data"). */
ybc_status ybc_rack_classify(ybc_ctx *ctx, const ybc_object *obj,
                             char **out_doc);
/* Block description -> rack document. */
ybc_status ybc_rack_build(ybc_ctx *ctx, const ybc_object *obj, char **out_doc);

ybc_status ybc_brace_socle(ybc_ctx *ctx, const ybc_object *obj,
                           char **out_report);
ybc_status ybc_brace_commutator(ybc_ctx *ctx, const ybc_object *obj,
                                char **out_report);
/* Brace -> associated solution document. */
ybc_status ybc_brace_solution(ybc_ctx *ctx, const ybc_object *obj,
                              char **out_doc);

/* ---- enumeration ---------------------------------------------------- */

/* kind: "solutions" (n <= 3), "racks" (n <= 4), "rack_data" (n <= 4).
 * When callback is non-NULL it receives each structure as a serialized
 * document. *out_count receives the number of valid structures. */
ybc_status ybc_enumerate(ybc_ctx *ctx, const char *kind, int n,
                         void (*callback)(const char *doc_json, void *user),
                         void *user, uint64_t *out_count);

const char *ybc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* YBCALC_H */
