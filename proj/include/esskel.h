/*
 * esskel -- dual complexes, weight functions and essential skeletons of
 * degenerate fibers, behind a plain C interface.
 *
 * All objects are opaque handles; every fallible call returns a status code
 * and leaves a human-readable message in a thread-local slot reachable via
 * esskel_last_error(). Strings returned through out-parameters are owned by
 * the caller and released with esskel_string_free().
 */
#ifndef ESSKEL_H
#define ESSKEL_H

#include <stddef.h>

#if defined(_WIN32)
#define ESSKEL_API __declspec(dllexport)
#else
#define ESSKEL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct esskel_document esskel_document;

typedef enum esskel_status {
  ESSKEL_OK = 0,
  ESSKEL_E_IO = 1,
  ESSKEL_E_PARSE = 2,
  ESSKEL_E_VALIDATION = 3,
  ESSKEL_E_NOT_FOUND = 4,
  ESSKEL_E_INVALID_PARAMS = 5,
  ESSKEL_E_INVALID_REQUEST = 6,
  ESSKEL_E_MISSING_FORMS = 7,
  ESSKEL_E_INCOMPLETE_DIVISOR = 8,
  ESSKEL_E_INCOMPLETE_DELTA = 9,
  ESSKEL_E_DLT_VIOLATION = 10,
  ESSKEL_E_UNSUPPORTED_DIMENSION = 11,
  ESSKEL_E_EMPTY_COMPLEX = 12,
  ESSKEL_E_CONTAINMENT = 13,
  ESSKEL_E_INTERNAL = 14
} esskel_status;

ESSKEL_API const char* esskel_version(void);

/* Stable name of a status value, e.g. "dlt_violation". */
ESSKEL_API const char* esskel_status_name(esskel_status status);

/* Process exit class: 0 for ESSKEL_OK, 1 for domain errors, 2 for I/O and
 * syntax errors. */
ESSKEL_API int esskel_exit_code(esskel_status status);

/* Message of the most recent failure on the calling thread. Valid until the
 * next failing esskel_* call on the same thread. Never NULL. */
ESSKEL_API const char* esskel_last_error(void);

/*
 * Parsing is lenient about semantic problems: a document whose JSON is well
 * formed always yields a handle, and outstanding semantic issues surface
 * either through the "validate" command or as ESSKEL_E_VALIDATION when any
 * other command runs. Syntax and I/O problems fail here.
 */
ESSKEL_API esskel_status esskel_document_parse(const char* bytes, size_t len,
                                               esskel_document** out);
ESSKEL_API esskel_status esskel_document_parse_file(const char* path, esskel_document** out);

/* Built-in corpus. params_json is an object such as {"n": 3}; pass NULL or
 * "{}" for entries without parameters. */
ESSKEL_API esskel_status esskel_corpus(const char* name, const char* params_json,
                                       esskel_document** out);

/* Canonical serialization (components sorted by id, strata by dimension then
 * id, maps key-sorted, rationals as "p/q"). */
ESSKEL_API esskel_status esskel_document_serialize(const esskel_document* doc, char** json_out);

/* Content digest of the canonical form, "fnv1a64:" + 16 hex digits. */
ESSKEL_API esskel_status esskel_document_digest(const esskel_document* doc, char** digest_out);

/*
 * Runs one command and returns the report as canonical JSON. request_json is
 * an object {"command": NAME, ...flags}; commands mirror the CLI:
 * validate, dual-complex, weights, ks-skeleton, essential, lc-skeleton,
 * classify, homology, sphere-check, collapse, blowup, rescale.
 */
ESSKEL_API esskel_status esskel_run(const esskel_document* doc, const char* request_json,
                                    char** report_json_out);

/* Renders a report produced by esskel_run as human-readable text. */
ESSKEL_API esskel_status esskel_report_render_text(const char* report_json, char** text_out);

ESSKEL_API void esskel_document_free(esskel_document* doc);
ESSKEL_API void esskel_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ESSKEL_H */
