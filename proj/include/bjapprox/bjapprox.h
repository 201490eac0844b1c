/*
 * Copyright 2026 The bjapprox Authors
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

/*
 * bjapprox: distances, best approximations and dual certificates for points
 * versus subspaces of mixed l_p-sum spaces on R^n.
 *
 * Conventions:
 *  - Every function returns a bja_status; BJA_OK is zero. On failure
 *    bja_last_error() describes the problem (per thread).
 *  - Vectors are passed as (pointer, length); a length that disagrees with
 *    the space yields BJA_ERR_DIMENSION.
 *  - Exponents are doubles >= 1; use INFINITY from <math.h> for l_inf.
 *  - Handles are opaque and must be released with their _free function.
 *    Handles are immutable after creation and may be shared across threads.
 */

#ifndef BJAPPROX_BJAPPROX_H_
#define BJAPPROX_BJAPPROX_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BJA_BUILDING_LIBRARY)
#define BJA_API __declspec(dllexport)
#else
#define BJA_API __declspec(dllimport)
#endif
#else
#define BJA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bja_status {
  BJA_OK = 0,
  BJA_ERR_INVALID_ARGUMENT = 1,
  BJA_ERR_PARSE = 2,
  BJA_ERR_DIMENSION = 3,
  BJA_ERR_NOT_CONVERGED = 4,
  BJA_ERR_UNSUPPORTED = 6,
  BJA_ERR_ORACLE_LIMIT = 7,
  BJA_ERR_INTERNAL = 8
} bja_status;

typedef enum bja_uniqueness {
  BJA_UNIQUE_YES = 0,
  BJA_UNIQUE_NO = 1,
  BJA_UNIQUE_UNKNOWN = 2
} bja_uniqueness;

typedef enum bja_method {
  BJA_METHOD_LP_VERTEX = 0,
  BJA_METHOD_SMOOTH_ASCENT = 1,
  BJA_METHOD_MIXED_ASCENT = 2,
  BJA_METHOD_CLOSED_FORM = 3
} bja_method;

typedef struct bja_space bja_space;
typedef struct bja_subspace bja_subspace;
typedef struct bja_result bja_result;

BJA_API const char* bja_version(void);
BJA_API const char* bja_status_string(bja_status status);
/* Message of the last failed call on this thread; "" after a success. */
BJA_API const char* bja_last_error(void);

/* ---- spaces ---------------------------------------------------------- */

/* {"outer_p": e, "blocks": [{"dim": d, "p": e}, ...]} or {"p": e, "dim": d},
 * where e is a number or "inf". */
BJA_API bja_status bja_space_from_json(const char* json, bja_space** out);
BJA_API bja_status bja_space_plain(int dim, double p, bja_space** out);
BJA_API bja_status bja_space_create(int block_count, const int* dims,
                                    const double* ps, double outer_p,
                                    bja_space** out);
/* Same blocks, every exponent replaced by its conjugate. */
BJA_API bja_status bja_space_dual(const bja_space* space, bja_space** out);
BJA_API int bja_space_dim(const bja_space* space);
/* Writes the canonical JSON form; *needed receives the size including the
 * terminating NUL. buf may be NULL when capacity is 0. */
BJA_API bja_status bja_space_to_json(const bja_space* space, char* buf,
                                     size_t capacity, size_t* needed);
BJA_API bja_status bja_norm(const bja_space* space, const double* x, int n,
                            double* out);
BJA_API void bja_space_free(bja_space* space);

BJA_API bja_status bja_conjugate_exponent(double p, double* q);
/* Support functional of l_p at a / |a|_p, 1 < p < inf; out has n entries. */
BJA_API bja_status bja_duality_map(const double* a, int n, double p,
                                   double* out);
/* Plain l_1 or l_inf only. *tight_count receives the number of tight
 * coordinates (may be NULL). */
BJA_API bja_status bja_is_smooth_point(const bja_space* space, const double* z,
                                       int n, double tol, int* smooth,
                                       int* tight_count);

/* ---- subspaces ------------------------------------------------------- */

/* rows: m x n row-major, one spanning vector per row; m may be 0. */
BJA_API bja_status bja_subspace_create(const double* rows, int m, int n,
                                       bja_subspace** out);
BJA_API int bja_subspace_ambient_dim(const bja_subspace* y);
BJA_API int bja_subspace_count(const bja_subspace* y);
BJA_API int bja_subspace_rank(const bja_subspace* y);
/* Non-zero when the spanning vectors were linearly dependent. */
BJA_API int bja_subspace_is_dependent(const bja_subspace* y);
/* The annihilator W of Y: Euclidean-orthonormal, dimension n - rank. */
BJA_API int bja_subspace_kernel_dim(const bja_subspace* y);
BJA_API bja_status bja_subspace_kernel_vector(const bja_subspace* y, int index,
                                              double* out, int n);
BJA_API bja_status bja_subspace_contains(const bja_subspace* y, const double* x,
                                         int n, double tol, int* contained);
BJA_API void bja_subspace_free(bja_subspace* y);

/* ---- solvers --------------------------------------------------------- */

typedef struct bja_options {
  uint64_t seed; /* multi-start and probe streams */
  double tol;    /* span-membership tolerance, default 1e-9 */
} bja_options;

BJA_API void bja_options_default(bja_options* options);

typedef struct bja_sphere_max_info {
  double value;
  bja_method method;
  int iterations;
  int converged;
  int degenerate;
} bja_sphere_max_info;

/* max |<c, z>| over unit vectors z of `space` annihilating Y. maximizer
 * receives n entries (may be NULL). */
BJA_API bja_status bja_sphere_max(const bja_space* space, const bja_subspace* y,
                                  const double* c, int n,
                                  const bja_options* options,
                                  bja_sphere_max_info* info, double* maximizer);

/* Both return BJA_OK even when the iteration did not converge; check
 * bja_result_converged. A distance-only result has no best approximation. */
BJA_API bja_status bja_distance(const bja_space* space, const bja_subspace* y,
                                const double* x0, int n,
                                const bja_options* options, bja_result** out);
BJA_API bja_status bja_best_approximation(const bja_space* space,
                                          const bja_subspace* y,
                                          const double* x0, int n,
                                          const bja_options* options,
                                          bja_result** out);

typedef struct bja_certificate_info {
  double dual_norm;
  double pairing;
  double kernel_residual;
  int degenerate;
} bja_certificate_info;

BJA_API int bja_result_dim(const bja_result* r);
BJA_API double bja_result_distance(const bja_result* r);
BJA_API int bja_result_has_best_approx(const bja_result* r);
BJA_API bja_status bja_result_best_approx(const bja_result* r, double* out,
                                          int n);
BJA_API bja_status bja_result_residual(const bja_result* r, double* out, int n);
/* z receives n entries (may be NULL). */
BJA_API bja_status bja_result_certificate(const bja_result* r, double* z, int n,
                                          bja_certificate_info* info);
BJA_API double bja_result_duality_gap(const bja_result* r);
BJA_API bja_uniqueness bja_result_unique(const bja_result* r);
BJA_API int bja_result_converged(const bja_result* r);
BJA_API int bja_result_iterations(const bja_result* r);
BJA_API const char* bja_result_primal_method(const bja_result* r);
BJA_API const char* bja_result_dual_method(const bja_result* r);
BJA_API int bja_result_warning_count(const bja_result* r);
BJA_API const char* bja_result_warning(const bja_result* r, int index);
BJA_API void bja_result_free(bja_result* r);

/* ---- diagnostics ----------------------------------------------------- */

/* |x + lambda y| >= |x| for every lambda (Birkhoff-James). */
BJA_API bja_status bja_bj_orthogonal(const bja_space* space, const double* x,
                                     const double* y, int n, double tol,
                                     int* orthogonal, double* lambda,
                                     double* min_value);
/* The residual x0 - y0 is orthogonal to every spanning vector of Y. */
BJA_API bja_status bja_residual_orthogonality(const bja_space* space,
                                              const bja_subspace* y,
                                              const double* x0,
                                              const double* y0, int n,
                                              double tol, int* orthogonal);
/* Plain l_1 or l_inf: *sufficient is 1 when the smoothness condition proves
 * a unique best approximation, 0 when inconclusive. */
BJA_API bja_status bja_uniqueness_certificate(const bja_space* space,
                                              const bja_subspace* y,
                                              const double* x0, int n,
                                              int* sufficient);

typedef struct bja_equal_distance_info {
  int equal;
  double distance1;
  double distance2;
  int has_witness;
  double lambda;
  int index; /* 0-based coordinate of the witness */
  int axis_aligned;
  int basis_in_hyperplane;
  int consistent;
} bja_equal_distance_info;

BJA_API bja_status bja_equal_distance(const bja_subspace* y, const double* x,
                                      int n, double p1, double p2,
                                      const bja_options* options,
                                      bja_equal_distance_info* info);
BJA_API bja_status bja_restriction_norm_equality(const bja_space* space,
                                                 const bja_subspace* y,
                                                 const double* x0,
                                                 const double* y0, int n,
                                                 int* equal);

/* ---- brute-force oracles --------------------------------------------- */

typedef struct bja_oracle_config {
  int grid_points_per_dim; /* odd, >= 3; default 41 */
  int refine_rounds;       /* default 6 */
  uint64_t seed;
  int trials; /* default 1000 */
} bja_oracle_config;

BJA_API void bja_oracle_config_default(bja_oracle_config* cfg);
BJA_API bja_status bja_brute_force_distance(const bja_space* space,
                                            const bja_subspace* y,
                                            const double* x0, int n,
                                            const bja_oracle_config* cfg,
                                            double* out);
/* Sphere of `space`, subspace W = annihilator of Y. */
BJA_API bja_status bja_brute_force_sphere_max(const bja_space* space,
                                              const bja_subspace* y,
                                              const double* c, int n,
                                              const bja_oracle_config* cfg,
                                              double* out);
BJA_API bja_status bja_check_weak_duality(const bja_space* space,
                                          const bja_subspace* y,
                                          const double* x0, int n,
                                          const bja_oracle_config* cfg,
                                          int* holds);

typedef struct bja_holder_info {
  int holds;
  double classical_lhs;
  double classical_rhs;
  double mixed_lhs;
  double mixed_rhs;
  int blocks;
} bja_holder_info;

BJA_API bja_status bja_holder_check(const double* u, const double* v, int n,
                                    double p, const bja_oracle_config* cfg,
                                    bja_holder_info* info);

typedef struct bja_mixed_inequality_info {
  int holds;
  double left;
  double right;
  double pairing;
  double primal_min;
  double dual_max;
  double relative_gap;
  int tight;
} bja_mixed_inequality_info;

BJA_API bja_status bja_mixed_inequality_check(
    const bja_space* space, const double* x, const double* a, double lambda,
    const double* b, int n, const bja_oracle_config* cfg,
    bja_mixed_inequality_info* info);

/* ---- self-test ------------------------------------------------------- */

typedef void (*bja_selftest_callback)(int id, const char* title, int passed,
                                      double seconds, const char* detail,
                                      void* user);

BJA_API int bja_selftest_count(void);
/* Runs every acceptance criterion; *failures receives the failure count. */
BJA_API bja_status bja_selftest_run(uint64_t seed, bja_selftest_callback cb,
                                    void* user, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* BJAPPROX_BJAPPROX_H_ */
