/* C interface to the whitlocal library.
 *
 * Every function returns a status code; on failure a message is available
 * from whitlocal_last_error() on the calling thread. Strings handed out by
 * the library are released with whitlocal_string_free, handles with their
 * own free function. Handles are immutable and may be shared across threads.
 */
#ifndef WHITLOCAL_H
#define WHITLOCAL_H

#include <stddef.h>

#if defined(_WIN32)
#define WHITLOCAL_API __declspec(dllexport)
#else
#define WHITLOCAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  WHITLOCAL_OK = 0,
  WHITLOCAL_INVALID_ARGUMENT = 1,
  WHITLOCAL_PARSE_ERROR = 2,
  WHITLOCAL_NOT_EXPANDABLE = 3,
  WHITLOCAL_UNBOUND_VARIABLE = 4,
  WHITLOCAL_DIVISION_BY_ZERO = 5,
  WHITLOCAL_NEGATIVE_UNDER_HALF_EXPONENT = 6,
  WHITLOCAL_VARIABLE_MISMATCH = 7,
  WHITLOCAL_INEXACT_DIVISION = 8,
  WHITLOCAL_ZERO_SATAKE_PARAMETER = 9,
  WHITLOCAL_ENUMERATION_TOO_LARGE = 10,
  WHITLOCAL_UNSUPPORTED_CONDUCTOR = 11,
  WHITLOCAL_RANK_MISMATCH = 12,
  WHITLOCAL_SYMBOL_COLLISION = 13,
  WHITLOCAL_INTERNAL = 99
} whitlocal_status;

typedef struct whitlocal_poly whitlocal_poly;
typedef struct whitlocal_config whitlocal_config;

WHITLOCAL_API const char* whitlocal_version(void);
/* Message of the last failing call on this thread, or "" */
WHITLOCAL_API const char* whitlocal_last_error(void);
WHITLOCAL_API void whitlocal_string_free(char* s);

/* Laurent polynomials over Q, e.g. "3/2*a1^2*q^(-1/2) + 1" */
WHITLOCAL_API whitlocal_status whitlocal_poly_parse(const char* text, whitlocal_poly** out);
WHITLOCAL_API void whitlocal_poly_free(whitlocal_poly* p);
WHITLOCAL_API whitlocal_status whitlocal_poly_add(const whitlocal_poly* a, const whitlocal_poly* b, whitlocal_poly** out);
WHITLOCAL_API whitlocal_status whitlocal_poly_sub(const whitlocal_poly* a, const whitlocal_poly* b, whitlocal_poly** out);
WHITLOCAL_API whitlocal_status whitlocal_poly_mul(const whitlocal_poly* a, const whitlocal_poly* b, whitlocal_poly** out);
WHITLOCAL_API whitlocal_status whitlocal_poly_equal(const whitlocal_poly* a, const whitlocal_poly* b, int* out);
WHITLOCAL_API whitlocal_status whitlocal_poly_to_string(const whitlocal_poly* p, char** out);
WHITLOCAL_API whitlocal_status whitlocal_poly_to_json(const whitlocal_poly* p, char** out);
/* Exact evaluation; names[i] is bound to the rational values[i] ("2", "-1/3"). */
WHITLOCAL_API whitlocal_status whitlocal_poly_evaluate(const whitlocal_poly* p, const char* const* names,
                                                       const char* const* values, size_t count, char** out);

/* Run configuration, set with the command-line option names without dashes
 * ("n", "n-max", "level", "order", "p", "emit", "seed", "jobs", "suite",
 * "place", "conductor", "valuations", "mu", "s", "w", "bruteforce", "timings"). */
WHITLOCAL_API whitlocal_status whitlocal_config_new(const char* command, whitlocal_config** out);
WHITLOCAL_API whitlocal_status whitlocal_config_set(whitlocal_config* cfg, const char* key, const char* value);
WHITLOCAL_API void whitlocal_config_free(whitlocal_config* cfg);

/* Runs the configured command. exit_code follows the command-line contract:
 * 0 pass, 1 a verification failed, 2 invalid input (message in
 * whitlocal_last_error). The returned status is WHITLOCAL_OK unless the
 * arguments themselves are unusable. */
WHITLOCAL_API whitlocal_status whitlocal_run(const whitlocal_config* cfg, char** output, int* exit_code);

/* Newline separated suite names accepted by "verify". */
WHITLOCAL_API whitlocal_status whitlocal_suite_names(char** out);

/* WHITLOCAL_JOBS, or 1 */
WHITLOCAL_API int whitlocal_default_jobs(void);

#ifdef __cplusplus
}
#endif

#endif
