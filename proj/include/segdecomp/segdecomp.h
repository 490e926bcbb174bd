/*
 * Copyright 2026 The segdecomp Authors
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

#ifndef SEGDECOMP_SEGDECOMP_H
#define SEGDECOMP_SEGDECOMP_H

/*
 * C interface to the decomposition library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every function returns an sd_status; on failure the thread's last error
 * message is available from sd_last_error() until the next call on that
 * thread. Strings returned through char** are released with sd_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SD_API __declspec(dllexport)
#else
#define SD_API __attribute__((visibility("default")))
#endif

typedef enum sd_status {
  SD_OK = 0,
  SD_ERR_SEMANTIC = 1,       /* axioms violated, verification mismatch */
  SD_ERR_PARSE = 2,          /* malformed input text */
  SD_ERR_INVALID_ARGUMENT = 3,
  SD_ERR_SHAPE_MISMATCH = 4, /* certificate does not fit the table */
  SD_ERR_HYPOTHESIS = 5,     /* decomposition hypotheses fail */
  SD_ERR_CONSTRUCTION = 6,   /* a construction step failed */
  SD_ERR_IO = 7,
  SD_ERR_INTERNAL = 8
} sd_status;

typedef struct sd_table sd_table;
typedef struct sd_certificate sd_certificate;

SD_API const char* sd_last_error(void);
SD_API const char* sd_status_name(sd_status status);
SD_API void sd_string_free(char* s);

/* Tables. */
SD_API sd_status sd_table_parse(const char* text, sd_table** out);
SD_API sd_status sd_table_read(const char* path, sd_table** out);
SD_API sd_status sd_table_write(const sd_table* t, const char* path);
SD_API sd_status sd_table_to_string(const sd_table* t, char** out);
SD_API void sd_table_free(sd_table* t);

typedef struct sd_table_shape {
  unsigned p, k;
  int n, m, target_dimension;
  size_t points;
  size_t defined;
} sd_table_shape;

SD_API sd_status sd_table_shape_of(const sd_table* t, sd_table_shape* out);

/* Human-readable summary: field, shape, counts, radicals, hypothesis
 * witnesses and, for line x line grids, the exceptional-set class. */
SD_API sd_status sd_table_info(const sd_table* t, char** out);

/* SD_OK when (L1) and (L2) hold; SD_ERR_SEMANTIC otherwise, with one line per
 * violation in *report (may be NULL). */
SD_API sd_status sd_table_check_axioms(const sd_table* t, unsigned workers,
                                       char** report);

/* Decomposes t. Falls back to the degenerate pipeline when a hypothesis of
 * the direct one fails. On SD_OK the certificate is produced and verified;
 * SD_ERR_SEMANTIC means a certificate was produced but does not verify. */
SD_API sd_status sd_decompose(const sd_table* t, unsigned workers,
                              sd_certificate** out);

/* Certificates. */
SD_API sd_status sd_certificate_parse(const char* text, sd_certificate** out);
SD_API sd_status sd_certificate_read(const char* path, sd_certificate** out);
SD_API sd_status sd_certificate_write(const sd_certificate* c, const char* path);
SD_API sd_status sd_certificate_to_string(const sd_certificate* c, char** out);
SD_API int sd_certificate_verified_flag(const sd_certificate* c);
SD_API void sd_certificate_free(sd_certificate* c);

/* Recomputes phi(gamma(X,Y)) == chi(X, alpha'(Y)) everywhere, ignoring the
 * certificate's own flag. SD_ERR_SEMANTIC on mismatch; the first
 * `max_listed` mismatches go to *report (may be NULL). */
SD_API sd_status sd_verify(const sd_table* t, const sd_certificate* c,
                           unsigned workers, size_t max_listed, char** report);

typedef enum sd_generate_kind {
  SD_GEN_SEGRE = 0,
  SD_GEN_ROUNDTRIP = 1,
  SD_GEN_DEGENERATE = 2,
  SD_GEN_GRID = 3
} sd_generate_kind;

typedef struct sd_generate_params {
  sd_generate_kind kind;
  unsigned p, k;
  int n, m;
  int target_dimension; /* -1 for the default */
  uint64_t seed;
  int psi_sigma;        /* roundtrip: -1 random, else exponent j */
  int rad1_dim;         /* degenerate */
  int rad2_dim;         /* degenerate */
} sd_generate_params;

/* Fills in the defaults: GF(2), n=2, m=1, N default, seed 0, random psi
 * automorphism, radicals (-1, 0). */
SD_API void sd_generate_params_init(sd_generate_params* params);

/* *table receives the table text; *answer the ground truth text for the
 * roundtrip and degenerate kinds, NULL otherwise (answer may be NULL). */
SD_API sd_status sd_generate(const sd_generate_params* params, char** table,
                             char** answer);

#ifdef __cplusplus
}
#endif

#endif /* SEGDECOMP_SEGDECOMP_H */
