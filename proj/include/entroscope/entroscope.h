#ifndef ENTROSCOPE_H
#define ENTROSCOPE_H

#include <stddef.h>
#include <stdint.h>

#if defined(ENTROSCOPE_BUILDING)
#define ENT_API __attribute__((visibility("default")))
#else
#define ENT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as the CLI exit codes. */
typedef enum ent_status {
  ENT_OK = 0,
  ENT_ERR_INTERNAL = 1,
  ENT_ERR_PARSE = 2,              /* syntax, format, unknown variable */
  ENT_ERR_INVARIANT = 3,          /* distribution or argument invariant */
  ENT_ERR_BUDGET = 4,             /* not prime, budget exceeded */
  ENT_ERR_UNKNOWN_INEQUALITY = 5,
  ENT_ERR_GAP_NOT_POSITIVE = 6
} ent_status;

typedef struct ent_context ent_context;
typedef struct ent_distribution ent_distribution;
typedef struct ent_profile ent_profile;
typedef struct ent_expression ent_expression;

/* Receives consecutive chunks of a streamed artifact; non-zero aborts. */
typedef int (*ent_write_fn)(const char* data, size_t len, void* user);

ENT_API ent_context* ent_context_new(void);
ENT_API void ent_context_free(ent_context* ctx);
/* Support-size cap for constructions and i.i.d. powers; 0 restores the default. */
ENT_API void ent_set_budget(ent_context* ctx, uint64_t budget);
ENT_API void ent_set_tolerance(ent_context* ctx, double tol);
/* Message of the last failed call on ctx, "" when none. */
ENT_API const char* ent_last_error(const ent_context* ctx);
ENT_API const char* ent_version(void);

/* Strings returned through char** out-parameters are owned by the caller. */
ENT_API void ent_string_free(char* s);

ENT_API ent_status ent_distribution_from_json(ent_context* ctx, const char* json, ent_distribution** out);
ENT_API ent_status ent_distribution_to_json(ent_context* ctx, const ent_distribution* d, char** out);
ENT_API ent_status ent_distribution_write(ent_context* ctx, const ent_distribution* d, ent_write_fn fn, void* user);
ENT_API size_t ent_distribution_support_size(const ent_distribution* d);
ENT_API void ent_distribution_free(ent_distribution* d);

/* Uniform distribution of the (a,b,c,d)_q quadruple, prime q <= 31. */
ENT_API ent_status ent_example_construct(ent_context* ctx, uint32_t q, ent_distribution** out);
ENT_API ent_status ent_example_verify(ent_context* ctx, uint32_t q, char** report_json);

ENT_API ent_status ent_profile_of(ent_context* ctx, const ent_distribution* d, ent_profile** out);
ENT_API ent_status ent_profile_from_json(ent_context* ctx, const char* json, ent_profile** out);
ENT_API ent_status ent_profile_to_json(ent_context* ctx, const ent_profile* p, char** out);
/* Profile plus its polymatroid verdict. */
ENT_API ent_status ent_profile_report_json(ent_context* ctx, const ent_profile* p, char** out);
ENT_API size_t ent_profile_dimension(const ent_profile* p);
/* H(S) for the subset bitmask S (0 reads as 0). */
ENT_API ent_status ent_profile_coordinate(ent_context* ctx, const ent_profile* p, uint32_t mask, double* out);
ENT_API void ent_profile_free(ent_profile* p);

/* variables may be NULL to infer the sorted names from the text. */
ENT_API ent_status ent_expression_parse(ent_context* ctx, const char* text, const char* const* variables,
                                        size_t num_variables, ent_expression** out);
/* coefficients[mask - 1] multiplies H(mask); each double is converted exactly. */
ENT_API ent_status ent_expression_from_doubles(ent_context* ctx, const char* const* variables, size_t num_variables,
                                               const double* coefficients, ent_expression** out);
ENT_API ent_status ent_expression_print(ent_context* ctx, const ent_expression* e, char** out);
ENT_API ent_status ent_expression_evaluate(ent_context* ctx, const ent_expression* e, const ent_profile* p,
                                           double* out);
ENT_API void ent_expression_free(ent_expression* e);

/* Verdict with a re-verified certificate. */
ENT_API ent_status ent_shannon_type_json(ent_context* ctx, const ent_expression* e, char** out);

/* Exactly one of inequality_name / e; exactly one of d / p. */
ENT_API ent_status ent_check_json(ent_context* ctx, const char* inequality_name, const ent_expression* e,
                                  const ent_distribution* d, const ent_profile* p, char** out);

/* target: "cond1", "cond3" or "both"; q = 0 scans for the first certifying prime. */
ENT_API ent_status ent_ae_cert_json(ent_context* ctx, const char* target, uint32_t q, char** out);

/* Rows for seeds first_seed .. first_seed + num_seeds − 1, every N in Ns. */
ENT_API ent_status ent_sw_sim_csv(ent_context* ctx, const ent_distribution* pair, const int* Ns, size_t num_N,
                                  double delta, uint64_t first_seed, uint64_t num_seeds, char** out);

#ifdef __cplusplus
}
#endif

#endif
