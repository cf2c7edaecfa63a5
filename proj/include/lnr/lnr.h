/*
 * Copyright 2026 The lnr Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LNR_LNR_H_
#define LNR_LNR_H_

/*
 * C interface to the lnr library: finite loops, loop near-rings, their
 * modules, radicals and localness.
 *
 * Every function returns an lnr_status. On failure a message is available
 * from lnr_last_error() until the next call on the same thread. Strings
 * returned through `char** out` are owned by the caller and must be
 * released with lnr_string_free().
 */

#include <stddef.h>

#if defined(_WIN32)
#define LNR_API __declspec(dllexport)
#elif defined(__GNUC__)
#define LNR_API __attribute__((visibility("default")))
#else
#define LNR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lnr_structure lnr_structure;

typedef enum lnr_status {
  LNR_OK = 0,
  LNR_E_INVALID_ARGUMENT = 1,
  LNR_E_IO = 2,
  LNR_E_MALFORMED = 3,
  /* The input parsed but violates an axiom; the message names a witness. */
  LNR_E_VALIDATION = 4,
  LNR_E_PRECONDITION = 5,
  LNR_E_CAP_EXCEEDED = 6,
  LNR_E_UNKNOWN_SUITE = 7,
  LNR_E_INTERNAL = 8
} lnr_status;

typedef enum lnr_verdict {
  LNR_VERDICT_PASS = 0,
  LNR_VERDICT_FAIL = 1,
  LNR_VERDICT_PARTIAL = 2
} lnr_verdict;

typedef struct lnr_options {
  int json;          /* nonzero: JSON reports, otherwise text */
  size_t cap_order;  /* largest census order */
  size_t cap_mg;     /* largest element count of M(G) / M0(G) */
  unsigned threads;  /* worker threads for corpus runs and catalogs */
} lnr_options;

LNR_API void lnr_options_init(lnr_options* options);

LNR_API const char* lnr_status_string(lnr_status status);
LNR_API const char* lnr_last_error(void);
LNR_API void lnr_string_free(char* s);

LNR_API lnr_status lnr_structure_load(const char* path, lnr_structure** out);
/* `base_dir` resolves near-ring references in module files; may be NULL. */
LNR_API lnr_status lnr_structure_parse(const char* text, const char* base_dir,
                                       lnr_structure** out);
LNR_API void lnr_structure_free(lnr_structure* s);
/* "loop", "near_ring", "left_module" or "bimodule". */
LNR_API const char* lnr_structure_kind(const lnr_structure* s);
LNR_API size_t lnr_structure_order(const lnr_structure* s);
LNR_API lnr_status lnr_structure_serialize(const lnr_structure* s, char** out);

/* Loads and validates `path`. A structure that violates an axiom yields
 * LNR_OK with verdict FAIL and a report carrying the witness. */
LNR_API lnr_status lnr_check_file(const char* path, const lnr_options* options,
                                  lnr_verdict* verdict, char** out);
LNR_API lnr_status lnr_analyze(const lnr_structure* s, const lnr_options* options, char** out);
/* PARTIAL when `s` is not a unital, zero-symmetric near-ring of order >= 2. */
LNR_API lnr_status lnr_radicals(const lnr_structure* s, const lnr_options* options,
                                lnr_verdict* verdict, char** out);
LNR_API lnr_status lnr_localness(const lnr_structure* s, const lnr_options* options,
                                 lnr_verdict* verdict, char** out);

/* M(G) or M0(G) for the additive loop of `s`, as a structure file. */
LNR_API lnr_status lnr_mtables(const lnr_structure* s, int zero_symmetric,
                               const lnr_options* options, char** out);

enum {
  LNR_FILTER_UNITAL = 1u << 0,
  LNR_FILTER_ZERO_SYMMETRIC = 1u << 1,
  LNR_FILTER_NON_ASSOCIATIVE_ADD = 1u << 2,
  LNR_FILTER_NOT_LEFT_DISTRIBUTIVE = 1u << 3,
  LNR_FILTER_LOCAL = 1u << 4,
  LNR_FILTER_NEAR_FIELD = 1u << 5
};

typedef struct lnr_census_query {
  int near_rings;                  /* 0: loops, nonzero: near-rings */
  size_t order;                    /* ignored when `additive` is set */
  const lnr_structure* additive;   /* loop or near-ring; may be NULL */
  unsigned filters;                /* LNR_FILTER_* bits */
  int up_to_iso;
  long long limit;                 /* negative: unlimited */
} lnr_census_query;

/* Receives one JSON catalog line (no trailing newline). Return nonzero to
 * continue. */
typedef int (*lnr_line_fn)(const char* line, void* user);

LNR_API lnr_status lnr_enumerate(const lnr_census_query* query, const lnr_options* options,
                                 lnr_line_fn on_line, void* user, size_t* count);

/* Runs `suite` on `s`, or on the built-in corpus when `s` is NULL. */
LNR_API lnr_status lnr_verify(const lnr_structure* s, const char* suite,
                              const lnr_options* options, lnr_verdict* verdict, char** out);

/* Space-separated suite names. Static storage. */
LNR_API const char* lnr_suite_names(void);

#ifdef __cplusplus
}
#endif

#endif /* LNR_LNR_H_ */
