/* Copyright 2026 The luzin Authors
 *
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

#ifndef LUZIN_LUZIN_H_
#define LUZIN_LUZIN_H_

#include <stddef.h>

#if defined(LUZIN_BUILDING_DLL)
#define LZ_API __attribute__((visibility("default")))
#else
#define LZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status; LZ_OK is the only success value. */
typedef enum lz_status {
  LZ_OK = 0,
  LZ_ERR_INVALID_ARGUMENT = 1,
  LZ_ERR_DOMAIN = 2,
  LZ_ERR_PARSE = 3,
  LZ_ERR_VALIDATION = 4,
  LZ_ERR_CONSTRUCTION = 5,
  LZ_ERR_CONFIGURATION = 6,
  LZ_ERR_CHECK_FAILED = 7,
  LZ_ERR_IO = 8,
  LZ_ERR_INTERNAL = 9
} lz_status;

/* Opaque handles. A finite union of closed rational intervals, and a
 * continuous piecewise-linear function with rational breakpoints. */
typedef struct lz_set lz_set;
typedef struct lz_pwl lz_pwl;

/* Rationals cross the boundary as strings "p/q" (input also accepts "p").
 * Sets cross as JSON arrays of ["lo","hi"] pairs, functions as JSON arrays of
 * ["x","y"] pairs. Output strings are owned by the caller and released with
 * lz_string_free. */

LZ_API const char* lz_version(void);
/* Message of the last failed call on this thread; never NULL. */
LZ_API const char* lz_last_error(void);
LZ_API const char* lz_status_name(lz_status status);
LZ_API void lz_string_free(char* s);

LZ_API lz_status lz_set_parse(const char* json, lz_set** out);
LZ_API void lz_set_free(lz_set* s);
/* "[[0/1,1/3]]" */
LZ_API lz_status lz_set_format(const lz_set* s, char** out);
LZ_API lz_status lz_set_to_json(const lz_set* s, char** out);
LZ_API lz_status lz_set_union(const lz_set* a, const lz_set* b, lz_set** out);
LZ_API lz_status lz_set_intersection(const lz_set* a, const lz_set* b, lz_set** out);
LZ_API lz_status lz_set_difference(const lz_set* a, const lz_set* b, lz_set** out);
LZ_API lz_status lz_set_complement(const lz_set* s, const char* lo, const char* hi, lz_set** out);
LZ_API lz_status lz_set_measure(const lz_set* s, char** out);
/* "inf" when either set is empty. */
LZ_API lz_status lz_set_distance(const lz_set* a, const lz_set* b, char** out);

LZ_API lz_status lz_pwl_parse(const char* json, lz_pwl** out);
/* Reads a stage dump or a bare breakpoint array from a file. */
LZ_API lz_status lz_pwl_load(const char* path, lz_pwl** out);
LZ_API void lz_pwl_free(lz_pwl* f);
LZ_API lz_status lz_pwl_to_json(const lz_pwl* f, char** out);
LZ_API lz_status lz_pwl_piece_count(const lz_pwl* f, size_t* out);
LZ_API lz_status lz_pwl_eval(const lz_pwl* f, const char* x, char** out);
LZ_API lz_status lz_pwl_image(const lz_pwl* f, const lz_set* s, lz_set** out);
LZ_API lz_status lz_pwl_preimage(const lz_pwl* f, const lz_set* s, lz_set** out);
LZ_API lz_status lz_pwl_open_image(const lz_pwl* f, const lz_set* s, lz_set** out);
LZ_API lz_status lz_pwl_variation(const lz_pwl* f, const char* upto, char** out);
LZ_API lz_status lz_pwl_sup_distance(const lz_pwl* f, const lz_pwl* g, char** out);
/* *holds is 1 or 0; *witness is set only when it holds and is NULL
 * otherwise. Pass NULL to skip the witness. */
LZ_API lz_status lz_pwl_check_2l(const lz_pwl* f, const char* a, const char* b, int* holds,
                                 char** witness);
LZ_API lz_status lz_pwl_check_bilipschitz(const lz_pwl* f, const char* a, const char* b,
                                          const char* lipschitz, int* holds);
LZ_API lz_status lz_pwl_measure_from_cdf(const lz_pwl* f, const lz_set* s, char** out);
LZ_API lz_status lz_pwl_subdivide(const lz_pwl* f, const char* height, lz_pwl** out);
LZ_API lz_status lz_pwl_concentrate(const lz_pwl* h, const lz_set* b, const char* delta,
                                    lz_pwl** out, lz_set** steep_set);

typedef struct lz_run_options {
  long stages;         /* negative: the scenario's own stage count */
  int verify;          /* nonzero: run the exact checks, write verdict.json */
  int export_json;
  int export_csv;
  int export_svg;
  long grid;           /* CSV sample intervals; values below 1 mean 1024 */
  const char* out_dir; /* NULL means "." */
} lz_run_options;

LZ_API lz_run_options lz_run_options_default(void);

/* Runs a scenario file. *report receives the verdict JSON (or NULL on input
 * errors). LZ_ERR_CHECK_FAILED names the first failing check in
 * lz_last_error. */
LZ_API lz_status lz_run_scenario_file(const char* path, const lz_run_options* options,
                                      char** report);
/* Re-verifies one stage dump; same status contract as a run. */
LZ_API lz_status lz_verify_dump(const char* path, char** report);

#ifdef __cplusplus
}
#endif

#endif /* LUZIN_LUZIN_H_ */
