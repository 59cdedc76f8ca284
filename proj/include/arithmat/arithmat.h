/* Copyright 2026 The Authors.
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

#ifndef ARITHMAT_H
#define ARITHMAT_H

/* C interface to the arithmetic-matroid toolkit. Matroids are opaque
 * handles built from JSON descriptions; polynomials and reports come
 * back as malloc'd strings that must be released with amt_free_string.
 * All functions return AMT_OK on success; on failure amt_last_error()
 * holds a human-readable message for the calling thread.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct amt_matroid amt_matroid;

typedef enum amt_status {
  AMT_OK = 0,
  AMT_ERROR_PARSE = 1,       /* malformed spec document */
  AMT_ERROR_INVALID = 2,     /* violated precondition or bad tables */
  AMT_ERROR_UNSUPPORTED = 3, /* unknown polynomial or identity name */
  AMT_ERROR_INTERNAL = 4
} amt_status;

/* Builds a matroid from a JSON spec document; see the project README for
 * the format. The handle must be released with amt_matroid_free. */
amt_status amt_matroid_from_json(const char* text, amt_matroid** out);

void amt_matroid_free(amt_matroid* m);

/* Ground-set size, or -1 on a null handle. */
int amt_matroid_size(const amt_matroid* m);

/* which: "z", "sokal-z", "tutte", "arith-tutte" or "char". The result is
 * the canonical polynomial string. */
amt_status amt_compute_poly(const amt_matroid* m, const char* which,
                            char** out);

/* identity: "all", "product-mv", "product-uv", "single-mv", "single-uv",
 * "dupont", "backman-lenz", "mixed", "char" or "kook". `second` may be
 * NULL; product identities then use the trivial multiplicity on the same
 * underlying matroid, and single-matroid identities with a second factor
 * run on the product. mode: "auto", "symbolic" or "fast". all_equal is
 * set to 1 when every checked identity holds exactly. */
amt_status amt_verify(const amt_matroid* m, const amt_matroid* second,
                      const char* identity, const char* mode, int as_json,
                      char** report, int* all_equal);

/* Matroid rank axioms plus the four arithmetic axioms; ok is set to 1
 * when everything holds. */
amt_status amt_check_axioms(const amt_matroid* m, int as_json, char** report,
                            int* ok);

/* Runs the built-in identity corpus. Entries with more than max_n
 * ground-set elements are skipped (pass max_n <= 0 for the default).
 * The JSON form is byte-stable for a fixed seed. */
amt_status amt_corpus_run(uint64_t seed, int max_n, int as_json, char** report,
                          int* pass);

/* Message for the last failing call on this thread; empty on success. */
const char* amt_last_error(void);

void amt_free_string(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ARITHMAT_H */
