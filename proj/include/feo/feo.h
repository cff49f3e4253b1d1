/*
Copyright 2026 The FEO Explain Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/


/* C interface to the FEO explanation engine.
 *
 * A feo_kb handle owns an asserted graph and, once saturated, the inferred
 * graph with its derivation trace. Every call returns a feo_status; on
 * failure feo_kb_last_error() describes the problem. Strings returned
 * through char** out-parameters are heap-allocated and must be released
 * with feo_string_free(). A handle must not be used from two threads at
 * once.
 */

#ifndef FEO_FEO_H_
#define FEO_FEO_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(FEO_BUILDING_LIBRARY)
#    define FEO_API __declspec(dllexport)
#  else
#    define FEO_API __declspec(dllimport)
#  endif
#else
#  define FEO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct feo_kb feo_kb;

typedef enum feo_status {
  FEO_OK = 0,
  FEO_ERR_USAGE = 1,              /* invalid argument or argument combination */
  FEO_ERR_PARSE = 2,              /* Turtle or query syntax error */
  FEO_ERR_RESOURCE = 3,           /* derived-triple cap exceeded */
  FEO_ERR_UNKNOWN_INDIVIDUAL = 4, /* referenced IRI has no triples */
  FEO_ERR_IO = 5,                 /* file could not be read or written */
  FEO_ERR_EVAL = 6,               /* query evaluation error */
  FEO_ERR_STATE = 7               /* call not valid in the handle's current state */
} feo_status;

typedef enum feo_format {
  FEO_FORMAT_TEXT = 0,
  FEO_FORMAT_JSON = 1,
  FEO_FORMAT_TSV = 2
} feo_format;

typedef enum feo_builtin {
  FEO_BUILTIN_SCHEMA = 0,
  FEO_BUILTIN_DEMO = 1
} feo_builtin;

typedef enum feo_question_type {
  FEO_CONTEXTUAL = 0,
  FEO_CONTRASTIVE = 1,
  FEO_COUNTERFACTUAL = 2
} feo_question_type;

FEO_API const char* feo_version(void);
FEO_API const char* feo_status_name(feo_status status);

FEO_API feo_status feo_kb_create(feo_kb** out);
FEO_API void feo_kb_destroy(feo_kb* kb);

/* Message for the most recent failed call on this handle, "" if none. */
FEO_API const char* feo_kb_last_error(const feo_kb* kb);

/* Loading adds to the asserted graph and discards any saturation. */
FEO_API feo_status feo_kb_load_file(feo_kb* kb, const char* path);
FEO_API feo_status feo_kb_load_turtle(feo_kb* kb, const char* text, size_t length);
FEO_API feo_status feo_kb_load_builtin(feo_kb* kb, feo_builtin which);
/* Loader warnings accumulated since the last call, one per line; clears them. */
FEO_API feo_status feo_kb_take_warnings(feo_kb* kb, char** out);
/* Number of asserted triples. */
FEO_API size_t feo_kb_asserted_size(const feo_kb* kb);

/* Replaces the season and/or region of the system individual. NULL leaves
 * a value unchanged. Names are prefixed names, <IRIs> or bare feo: local names. */
FEO_API feo_status feo_kb_set_context(feo_kb* kb, const char* season, const char* region);
FEO_API feo_status feo_kb_set_triple_cap(feo_kb* kb, size_t cap);

FEO_API feo_status feo_kb_saturate(feo_kb* kb);
/* Number of triples in the saturated graph; 0 before saturation. */
FEO_API size_t feo_kb_saturated_size(const feo_kb* kb);

/* N-Triples of the saturated graph, and the derivation trace
 * ("rule-id TAB n-triples" per line). Require feo_kb_saturate. */
FEO_API feo_status feo_kb_ntriples(feo_kb* kb, char** out);
FEO_API feo_status feo_kb_trace(feo_kb* kb, char** out);

/* Evaluates a query against the saturated graph. TEXT and TSV both yield
 * TSV; JSON yields the SPARQL results layout. */
FEO_API feo_status feo_kb_query(feo_kb* kb, const char* query, feo_format format, char** out);

/* Explains a question about individuals given as prefixed names or <IRIs>.
 * `secondary` is required for contrastive questions and `hypothetical` for
 * counterfactual ones; `primary` may be NULL for counterfactual questions.
 * TEXT yields the rendered answer plus a newline; JSON the structured
 * explanation; TSV is a usage error. */
FEO_API feo_status feo_kb_ask(feo_kb* kb, feo_question_type type, const char* primary,
                              const char* secondary, const char* hypothetical, feo_format format,
                              char** out);

FEO_API void feo_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FEO_FEO_H_ */
