// Copyright 2026 The Dualis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to libdualis. Every call returns a dualis_status; on failure
   dualis_last_error() holds a message for the calling thread. Strings handed
   out through char** must be released with dualis_string_free. */

#ifndef DUALIS_DUALIS_H
#define DUALIS_DUALIS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DUALIS_API __declspec(dllexport)
#else
#define DUALIS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dualis_status {
    DUALIS_OK = 0,
    DUALIS_E_INVALID_ARGUMENT,
    DUALIS_E_NOT_HERMITIAN,
    DUALIS_E_NOT_DENSITY_STATE,
    DUALIS_E_NOT_PROJECTOR,
    DUALIS_E_NOT_UNITARY,
    DUALIS_E_NON_CONVERGENCE,
    DUALIS_E_OVERFLOW,
    DUALIS_E_INVALID_ARITY,
    DUALIS_E_DIM_MISMATCH,
    DUALIS_E_SCALING_UNDEFINED,
    DUALIS_E_ZERO_OPERAND_IN_MIXTURE,
    DUALIS_E_NO_UNITARY_BLOCKS,
    DUALIS_E_WRONG_SCALING,
    DUALIS_E_INVALID_DISTRIBUTION,
    DUALIS_E_NON_REAL_ROOT,
    DUALIS_E_DIM_INCOMPATIBLE,
    DUALIS_E_NEGATIVE_SCALING,
    DUALIS_E_RANK_MISMATCH,
    DUALIS_E_UNENCODED_STATE,
    DUALIS_E_TOO_LARGE,
    DUALIS_E_UNSUPPORTED,
    DUALIS_E_DOMAIN_ERROR,
    DUALIS_E_SINGULAR_STATE,
    DUALIS_E_REGIME_VIOLATION,
    DUALIS_E_PARSE,
    DUALIS_E_IO,
    DUALIS_E_INTERNAL = 99
} dualis_status;

typedef struct dualis_matrix dualis_matrix;
typedef struct dualis_map dualis_map;
typedef struct dualis_report dualis_report;

DUALIS_API const char* dualis_version(void);
DUALIS_API const char* dualis_status_name(dualis_status status);
DUALIS_API const char* dualis_last_error(void);
DUALIS_API void dualis_string_free(char* s);

/* Complex matrices, row-major. im may be NULL for a real matrix. */
DUALIS_API dualis_status dualis_matrix_create(size_t rows, size_t cols, const double* re, const double* im,
                                              dualis_matrix** out);
DUALIS_API dualis_status dualis_matrix_from_json(const char* text, dualis_matrix** out);
DUALIS_API dualis_status dualis_matrix_to_json(const dualis_matrix* m, char** out);
DUALIS_API dualis_status dualis_matrix_dims(const dualis_matrix* m, size_t* rows, size_t* cols);
DUALIS_API dualis_status dualis_matrix_get(const dualis_matrix* m, size_t r, size_t c, double* re, double* im);
DUALIS_API void dualis_matrix_destroy(dualis_matrix* m);

/* Duality maps. */
DUALIS_API dualis_status dualis_map_from_json(const char* text, dualis_map** out);
DUALIS_API dualis_status dualis_map_to_json(const dualis_map* phi, char** out);
/* Haar-random U, constant scaling f. */
DUALIS_API dualis_status dualis_map_random(size_t n, int p, int q, uint64_t seed, double f, dualis_map** out);
DUALIS_API dualis_status dualis_map_kw(size_t n, double coupling, double beta, dualis_map** out);
DUALIS_API dualis_status dualis_map_info(const dualis_map* phi, size_t* n, int* p, int* q);
DUALIS_API dualis_status dualis_map_apply(const dualis_map* phi, const dualis_matrix* a, dualis_matrix** out);
DUALIS_API dualis_status dualis_map_compose(const dualis_map* outer, const dualis_map* inner, dualis_map** out);
DUALIS_API dualis_status dualis_map_verify_spectral(const dualis_map* phi, const dualis_matrix* a, double tol,
                                                    int* pass, double* deviation);
DUALIS_API void dualis_map_destroy(dualis_map* phi);

/* Numerics. Output arrays are caller-owned; cap is their length. */
DUALIS_API dualis_status dualis_eigvalsh(const dualis_matrix* a, double* values, size_t cap);
DUALIS_API dualis_status dualis_entropy(const dualis_matrix* rho, double* out);
DUALIS_API dualis_status dualis_power_sums(const double* spectrum, size_t d, int order, double* out);
DUALIS_API dualis_status dualis_reconstruct_spectrum(const double* sums, size_t order, int64_t alpha_num,
                                                     int64_t alpha_den, int d, double* out);
DUALIS_API dualis_status dualis_dual_coupling(double k, double* out);
DUALIS_API dualis_status dualis_self_dual_coupling(double* out);
DUALIS_API dualis_status dualis_ising_log_partition(int rows, int cols, double k, double* out);
DUALIS_API dualis_status dualis_kw_residual(int rows, int cols, double k, double* residual_f, double* residual_z);

/* Suites: verify-map, equivalence, approx-audit, kw, recover-spectrum, all. */
DUALIS_API dualis_status dualis_suite_run(const char* suite, const char* config_json, dualis_report** out);
DUALIS_API dualis_status dualis_report_json(const dualis_report* r, char** out);
DUALIS_API dualis_status dualis_report_csv(const dualis_report* r, char** out);
DUALIS_API dualis_status dualis_report_text(const dualis_report* r, char** out);
DUALIS_API dualis_status dualis_report_counts(const dualis_report* r, size_t* total, size_t* passed, size_t* failed);
DUALIS_API void dualis_report_destroy(dualis_report* r);

/* Golden fixtures. check sets *mismatches to the number of differing fields
   and, if details is non-NULL, to a newline-separated listing. */
DUALIS_API dualis_status dualis_fixtures_generate(const char* dir, uint64_t seed);
DUALIS_API dualis_status dualis_fixtures_check(const char* dir, uint64_t seed, size_t* mismatches, char** details);

#ifdef __cplusplus
}
#endif

#endif
