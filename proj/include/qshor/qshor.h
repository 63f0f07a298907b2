// Copyright 2026 The qshor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the qshor library. All objects are opaque handles owned by
 * the caller and released with the matching *_free function. Functions
 * return QSHOR_OK or an error code; qshor_last_error() describes the most
 * recent failure on the calling thread.
 */
#ifndef QSHOR_QSHOR_H
#define QSHOR_QSHOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QSHOR_API __declspec(dllexport)
#else
#define QSHOR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qshor_status {
    QSHOR_OK = 0,
    QSHOR_ERR_INVALID_ARGUMENT = 1,
    QSHOR_ERR_CAPACITY = 2,
    QSHOR_ERR_PRECONDITION = 3,
    QSHOR_ERR_IO = 4,
    QSHOR_ERR_INTERNAL = 5
} qshor_status;

typedef enum qshor_variant {
    QSHOR_VARIANT_ORIGINAL = 0,
    QSHOR_VARIANT_REDUCED = 1,
    QSHOR_VARIANT_BOTH = 2
} qshor_variant;

typedef enum qshor_post_processing {
    QSHOR_POST_CANDIDATES = 0,
    QSHOR_POST_VERIFIED = 1
} qshor_post_processing;

typedef enum qshor_factor_kind {
    QSHOR_FACTORED = 0,
    QSHOR_SCREENED = 1,
    QSHOR_PRIME = 2,
    QSHOR_EXHAUSTED = 3
} qshor_factor_kind;

typedef struct qshor_factor_result qshor_factor_result;
typedef struct qshor_sweep_result qshor_sweep_result;
typedef struct qshor_text qshor_text;

typedef struct qshor_sweep_config {
    const uint64_t *n_values;
    size_t n_count;
    qshor_variant variant;
    uint32_t repetitions;
    uint64_t seed;
    qshor_post_processing post;
    uint32_t threads; /* 0 = hardware concurrency */
} qshor_sweep_config;

QSHOR_API const char *qshor_version(void);
QSHOR_API const char *qshor_last_error(void);

/* Factorization loop. fixed_base = 0 draws a fresh random base per
 * iteration; otherwise every iteration uses fixed_base. */
QSHOR_API qshor_status qshor_factor(uint64_t n, qshor_variant variant, uint64_t fixed_base, uint32_t max_iterations,
                                    uint64_t seed, qshor_post_processing post, qshor_factor_result **out);
QSHOR_API qshor_factor_kind qshor_factor_result_kind(const qshor_factor_result *result);
/* index 0 or 1; 0 when the run did not factor. */
QSHOR_API uint64_t qshor_factor_result_divisor(const qshor_factor_result *result, int index);
QSHOR_API uint32_t qshor_factor_result_iterations(const qshor_factor_result *result);
QSHOR_API const char *qshor_factor_result_json(const qshor_factor_result *result);
QSHOR_API const char *qshor_factor_result_text(const qshor_factor_result *result);
QSHOR_API void qshor_factor_result_free(qshor_factor_result *result);

/* One phase sample plus post-processing for a fixed base. y receives the
 * measured integer, factored is set to 1 on success. */
QSHOR_API qshor_status qshor_single_iteration(uint64_t n, uint64_t a, qshor_variant variant, uint64_t seed,
                                              qshor_post_processing post, uint64_t *y, int *factored);

QSHOR_API qshor_status qshor_sweep(const qshor_sweep_config *config, qshor_sweep_result **out);
QSHOR_API const char *qshor_sweep_result_csv(const qshor_sweep_result *result);
QSHOR_API const char *qshor_sweep_result_json(const qshor_sweep_result *result);
QSHOR_API size_t qshor_sweep_result_cell_count(const qshor_sweep_result *result);
QSHOR_API qshor_status qshor_sweep_result_mean(const qshor_sweep_result *result, uint64_t n, qshor_variant variant,
                                               double *mean);
QSHOR_API void qshor_sweep_result_free(qshor_sweep_result *result);

/* Phase histogram CSV (variant BOTH emits both histograms). */
QSHOR_API qshor_status qshor_phases(uint64_t n, uint64_t a, qshor_variant variant, uint32_t shots, uint64_t seed,
                                    qshor_post_processing post, qshor_text **out);
/* Depth report JSON for each N. */
QSHOR_API qshor_status qshor_depth(const uint64_t *n_values, size_t n_count, qshor_variant variant,
                                   qshor_text **out);
QSHOR_API const char *qshor_text_data(const qshor_text *text);
QSHOR_API size_t qshor_text_size(const qshor_text *text);
QSHOR_API void qshor_text_free(qshor_text *text);

QSHOR_API uint64_t qshor_depth_model(uint32_t n);
QSHOR_API qshor_status qshor_trial_division(uint64_t n, uint64_t *smallest_factor, int *is_prime, double *seconds);

#ifdef __cplusplus
}
#endif

#endif
