/* Copyright 2026 The schatten authors
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

/* schatten: Schatten p-(quasi)norms, discrete multilinear operator
 * integrals, explicit isometric embeddings between l_p / S_p spaces,
 * cubature dimension bounds, and a numeric non-embeddability
 * ("obstruction") checker for candidate maps l_q^2 -> S_p^n.
 *
 * This is the C surface of the library.  All objects are opaque handles
 * created and destroyed through these functions; every fallible call
 * returns a sch_status and writes results through out-parameters.  On
 * failure a human-readable message is available from sch_last_error()
 * (thread-local).  Handles are immutable after creation, so sharing them
 * across threads is safe; all computations are deterministic for fixed
 * inputs and seeds.
 *
 * Complex matrices are passed as parallel row-major double arrays
 * (re, im); a NULL im means all-zero imaginary part.  Exponents p are
 * doubles: any finite value > 0, or INFINITY for the operator norm.
 * Elements of vector spaces travel as 1 x n (or n x 1) matrices.
 */

#ifndef SCHATTEN_H_
#define SCHATTEN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SCH_API __declspec(dllexport)
#else
#define SCH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sch_status {
  SCH_OK = 0,
  SCH_ERROR_INVALID_ARGUMENT = 1,  /* NULL handle / out pointer, bad sizes */
  SCH_ERROR_DIMENSION_MISMATCH = 2,
  SCH_ERROR_NOT_HERMITIAN = 3,
  SCH_ERROR_PRECONDITION = 4,      /* semantic precondition violated (e.g. p < 2) */
  SCH_ERROR_NUMERICAL = 5,         /* solver failure, overflow, consistency check */
  SCH_ERROR_NOMEM = 6
} sch_status;

typedef struct sch_matrix sch_matrix;       /* dense complex matrix */
typedef struct sch_symbol sch_symbol;       /* scalar function with derivative oracles */
typedef struct sch_embedding sch_embedding; /* linear map given by basis images */
typedef struct sch_report sch_report;       /* obstruction-checker verdict */

SCH_API const char* sch_version(void);
SCH_API const char* sch_status_name(sch_status status);
/* Message for the most recent failure on the calling thread ("" if none). */
SCH_API const char* sch_last_error(void);

/* ---- matrices ---------------------------------------------------------- */

SCH_API sch_status sch_matrix_create(int rows, int cols, const double* re,
                                     const double* im, sch_matrix** out);
SCH_API void sch_matrix_free(sch_matrix* m);
SCH_API int sch_matrix_rows(const sch_matrix* m);
SCH_API int sch_matrix_cols(const sch_matrix* m);
/* Copies entries row-major into re/im (each rows*cols doubles; im may be NULL). */
SCH_API sch_status sch_matrix_copy_data(const sch_matrix* m, double* re, double* im);

/* Haar-like random unitary; deterministic for a fixed seed. */
SCH_API sch_status sch_random_unitary(int dim, uint64_t seed, sch_matrix** out);

/* ---- norms ------------------------------------------------------------- */

/* Singular values, descending; out must hold min(rows, cols) doubles. */
SCH_API sch_status sch_singular_values(const sch_matrix* m, double* out);
/* Schatten p-(quasi)norm: (sum s_k^p)^(1/p), largest singular value at p = INFINITY. */
SCH_API sch_status sch_schatten_norm(const sch_matrix* m, double p, double* out);
/* l_p (quasi)norm of a complex vector (im may be NULL). */
SCH_API sch_status sch_vector_pnorm(const double* re, const double* im, size_t n,
                                    double p, double* out);

/* ---- symbol functions and divided differences -------------------------- */

/* f(x) = |x|^p, p > 0.  Derivative oracles up to order 2 (p >= 2),
 * order 1 (1 < p < 2), order 0 otherwise. */
SCH_API sch_status sch_symbol_abs_pow(double p, sch_symbol** out);
/* Polynomial sum coeffs[k] x^k with exact derivatives of every order. */
SCH_API sch_status sch_symbol_polynomial(const double* coeffs, size_t count,
                                         sch_symbol** out);
SCH_API void sch_symbol_free(sch_symbol* s);
SCH_API sch_status sch_symbol_eval(const sch_symbol* s, int derivative_order,
                                   double x, double* out);
/* Divided difference f^[k] at k+1 nodes; repeated nodes take the confluent
 * (derivative) branch and require derivative oracles up to the repeat depth. */
SCH_API sch_status sch_divided_difference(const sch_symbol* s, const double* nodes,
                                          size_t count, double* out);

/* ---- discrete multilinear operator integrals --------------------------- */

/* T_{f^[n]}^{A_0..A_n}(B_1..B_n): anchor_count = n+1 Hermitian anchors,
 * perturbation_count = n matrices of the same dimension.  group_tol < 0
 * selects the default eigenvalue-clustering tolerance (1e-8). */
SCH_API sch_status sch_moi_apply(const sch_symbol* s,
                                 const sch_matrix* const* anchors, size_t anchor_count,
                                 const sch_matrix* const* perturbations,
                                 size_t perturbation_count,
                                 double group_tol, sch_matrix** out);
/* d^2/dt^2 ||A+tB||_p^p at t = 0 via the order-2 operator integral of |x|^p.
 * Requires Hermitian A, B and finite p >= 2. */
SCH_API sch_status sch_second_derivative_schatten(const sch_matrix* a,
                                                  const sch_matrix* b, double p,
                                                  double* out);
/* Central-difference oracle for the same quantity; h <= 0 selects the
 * default step 1e-3 * (1+||A||) / (1+||B||). */
SCH_API sch_status sch_fd_second_derivative(const sch_matrix* a, const sch_matrix* b,
                                            double p, double h, double* out);

/* ---- embeddings --------------------------------------------------------- */

typedef enum sch_space_kind {
  SCH_SPACE_VECTOR = 0, /* l_p^n */
  SCH_SPACE_MATRIX = 1  /* S_p^n */
} sch_space_kind;

typedef enum sch_field {
  SCH_FIELD_REAL = 0,
  SCH_FIELD_COMPLEX = 1,
  SCH_FIELD_QUATERNION = 2 /* accepted by sch_lambda_bound only */
} sch_field;

/* l_p^m(C) -> S_p^m, e_k -> E_kk (diagonal matrices). */
SCH_API sch_status sch_embedding_diag(int m, double p, sch_embedding** out);
/* S_p^m -> S_p^n, top-left block placement, m <= n. */
SCH_API sch_status sch_embedding_corner(int m, int n, double p, sch_embedding** out);
/* l_1^2(R) -> l_inf^n(R), (x,y) -> (x-y, x+y, 0, ..., 0), n >= 2. */
SCH_API sch_status sch_embedding_sum_diff(int n, sch_embedding** out);
/* l_2^{m^2}(C) -> S_p^{m^2}, e_k -> E_1k (first-row placement). */
SCH_API sch_status sch_embedding_first_row(int m, double p, sch_embedding** out);
/* S_2^m -> l_2^{m^2}(C), row-major flattening (Frobenius isometry). */
SCH_API sch_status sch_embedding_vec(int m, sch_embedding** out);
/* S_2^m -> S_p^{m^2}, first_row o vec. */
SCH_API sch_status sch_embedding_s2_to_sp(int m, double p, sch_embedding** out);
/* l_2^2(R) -> l_4^3(R) through three directions at 60 degrees, scaled by (8/9)^(1/4). */
SCH_API sch_status sch_embedding_cubature_2_4_3(sch_embedding** out);
/* Arbitrary candidate map from basis images (count = domain dim, or dim^2 for
 * a matrix domain, ordered row-major).  Images must match the codomain shape:
 * cdim x cdim matrices, or 1 x cdim / cdim x 1 for a vector codomain. */
SCH_API sch_status sch_embedding_create(sch_space_kind dkind, int ddim, double dp,
                                        sch_field dfield, sch_space_kind ckind,
                                        int cdim, double cp, sch_field cfield,
                                        const sch_matrix* const* basis_images,
                                        size_t image_count, sch_embedding** out);
/* Same basis images, re-tagged exponents (for testing a map against foreign p, q). */
SCH_API sch_status sch_embedding_with_exponents(const sch_embedding* e, double domain_p,
                                                double codomain_p, sch_embedding** out);
SCH_API void sch_embedding_free(sch_embedding* e);

SCH_API sch_status sch_embedding_domain(const sch_embedding* e, sch_space_kind* kind,
                                        int* dim, double* p, sch_field* field);
SCH_API sch_status sch_embedding_codomain(const sch_embedding* e, sch_space_kind* kind,
                                          int* dim, double* p, sch_field* field);
SCH_API sch_status sch_embedding_basis_image(const sch_embedding* e, size_t index,
                                             sch_matrix** out);
/* Applies the map.  Vector-space elements are 1 x n or n x 1 matrices. */
SCH_API sch_status sch_embedding_apply(const sch_embedding* e, const sch_matrix* x,
                                       sch_matrix** out);
/* Draws `samples` seeded pseudorandom domain elements and compares domain
 * norm against codomain norm of the image; pass iff the largest relative
 * residual is <= tol. */
SCH_API sch_status sch_verify_isometry(const sch_embedding* e, int samples,
                                       uint64_t seed, double tol,
                                       double* max_relative_residual, int* pass);

/* Lambda(m,p): exact binomial bound on n for l_2^m -> l_p^n, p even.
 * Integer arithmetic only; overflow and a non-integer quaternion value are
 * reported as SCH_ERROR_NUMERICAL. */
SCH_API sch_status sch_lambda_bound(int m, int p, sch_field field, uint64_t* out);

/* ---- obstruction checker ------------------------------------------------ */

typedef enum sch_verdict {
  SCH_VERDICT_CONSISTENT = 0,
  SCH_VERDICT_FAILS_SCALAR_IDENTITY = 1,
  SCH_VERDICT_FAILS_D2_DIVERGENCE = 2,
  SCH_VERDICT_FAILS_D2_NONZERO = 3,
  SCH_VERDICT_INCONCLUSIVE = 4
} sch_verdict;

/* Doubling construction: for T : l_q^2 -> S_p^n returns the Hermitian pair
 * A = J(e_1), B = J(e_2) of dimension 2n, J(a) = 2^(-1/p) [[0, M(a)], [M(a)*, 0]]
 * with M(a) = a_1 T(e_1) + a_2 T(e_2).  Requires finite p and q. */
SCH_API sch_status sch_double_map(const sch_embedding* e, double q, double p,
                                  sch_matrix** a, sch_matrix** b);

/* Eigenvalues of A + tB tracked over a strictly increasing grid; trajectories
 * are continuity-matched.  out holds dim * t_count doubles, trajectory-major
 * (out[i*t_count + k] = trajectory i at t_grid[k]). */
SCH_API sch_status sch_eigenvalue_curves(const sch_matrix* a, const sch_matrix* b,
                                         const double* t_grid, size_t t_count,
                                         double* out);

/* Full pipeline: doubling, scalar-identity residuals over the grid, and the
 * second-derivative comparison when finite p >= 2 and q > 1.  t_count = 0
 * selects the default grid {0, +-1e-4, 1e-3, 1e-2, 0.1, 0.25, 0.5, 1, 2};
 * tol <= 0 selects the default verdict tolerance 1e-6. */
SCH_API sch_status sch_check_candidate(const sch_embedding* e, double q, double p,
                                       const double* t_grid, size_t t_count,
                                       double tol, sch_report** out);
SCH_API void sch_report_free(sch_report* r);
SCH_API sch_verdict sch_report_verdict(const sch_report* r);
SCH_API const char* sch_verdict_name(sch_verdict verdict);
SCH_API double sch_report_max_residual(const sch_report* r);
SCH_API double sch_report_q(const sch_report* r);
SCH_API double sch_report_p(const sch_report* r);
SCH_API double sch_report_tol(const sch_report* r);
/* 0 when the derivative stage did not run (d2 values are then meaningless). */
SCH_API int sch_report_has_d2(const sch_report* r);
/* 1 when q < 2 makes the target second derivative divergent. */
SCH_API int sch_report_d2_diverges(const sch_report* r);
SCH_API sch_status sch_report_d2(const sch_report* r, double* target, double* actual);
SCH_API size_t sch_report_profile_size(const sch_report* r);
SCH_API sch_status sch_report_profile_row(const sch_report* r, size_t index, double* t,
                                          double* target, double* actual,
                                          double* residual);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SCHATTEN_H_ */
