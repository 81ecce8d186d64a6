// Copyright 2026 The schatten authors
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

#include "schatten.h"

#include <cmath>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "core/embedding.hpp"
#include "core/errors.hpp"
#include "core/matrix.hpp"
#include "core/moi.hpp"
#include "core/obstruction.hpp"
#include "core/pnorm.hpp"
#include "core/symbol.hpp"

struct sch_matrix {
  schatten::Matrix m;
};
struct sch_symbol {
  schatten::Symbol s;
};
struct sch_embedding {
  schatten::EmbeddingMap map;
};
struct sch_report {
  schatten::ObstructionReport report;
};

namespace {

thread_local std::string t_last_error;

void set_error(const char* message) { t_last_error = message ? message : ""; }

sch_status fail(sch_status status, const char* message) {
  set_error(message);
  return status;
}

// Runs the body and maps C++ failures onto status codes.
template <typename Fn>
sch_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    t_last_error.clear();
    return SCH_OK;
  } catch (const schatten::DimensionError& e) {
    set_error(e.what());
    return SCH_ERROR_DIMENSION_MISMATCH;
  } catch (const schatten::NotHermitianError& e) {
    set_error(e.what());
    return SCH_ERROR_NOT_HERMITIAN;
  } catch (const schatten::NumericalError& e) {
    set_error(e.what());
    return SCH_ERROR_NUMERICAL;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return SCH_ERROR_PRECONDITION;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return SCH_ERROR_PRECONDITION;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return SCH_ERROR_NOMEM;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SCH_ERROR_NUMERICAL;
  } catch (...) {
    set_error("unknown failure");
    return SCH_ERROR_NUMERICAL;
  }
}

schatten::Matrix matrix_from_buffers(int rows, int cols, const double* re,
                                     const double* im) {
  schatten::Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const size_t k = static_cast<size_t>(i) * static_cast<size_t>(cols) +
                       static_cast<size_t>(j);
      m(i, j) = {re[k], im ? im[k] : 0.0};
    }
  schatten::require_finite(m, "sch_matrix_create");
  return m;
}

std::optional<schatten::SpaceKind> to_space_kind(sch_space_kind kind) {
  switch (kind) {
    case SCH_SPACE_VECTOR:
      return schatten::SpaceKind::kVector;
    case SCH_SPACE_MATRIX:
      return schatten::SpaceKind::kMatrix;
  }
  return std::nullopt;
}

std::optional<schatten::SpaceField> to_space_field(sch_field field) {
  switch (field) {
    case SCH_FIELD_REAL:
      return schatten::SpaceField::kReal;
    case SCH_FIELD_COMPLEX:
      return schatten::SpaceField::kComplex;
    default:
      return std::nullopt;
  }
}

sch_space_kind from_space_kind(schatten::SpaceKind kind) {
  return kind == schatten::SpaceKind::kMatrix ? SCH_SPACE_MATRIX : SCH_SPACE_VECTOR;
}

sch_field from_space_field(schatten::SpaceField field) {
  return field == schatten::SpaceField::kReal ? SCH_FIELD_REAL : SCH_FIELD_COMPLEX;
}

sch_verdict from_verdict(schatten::Verdict verdict) {
  switch (verdict) {
    case schatten::Verdict::kConsistent:
      return SCH_VERDICT_CONSISTENT;
    case schatten::Verdict::kFailsScalarIdentity:
      return SCH_VERDICT_FAILS_SCALAR_IDENTITY;
    case schatten::Verdict::kFailsD2Divergence:
      return SCH_VERDICT_FAILS_D2_DIVERGENCE;
    case schatten::Verdict::kFailsD2Nonzero:
      return SCH_VERDICT_FAILS_D2_NONZERO;
    case schatten::Verdict::kInconclusive:
      return SCH_VERDICT_INCONCLUSIVE;
  }
  return SCH_VERDICT_INCONCLUSIVE;
}

sch_status space_info(const schatten::SpaceSpec& space, sch_space_kind* kind,
                      int* dim, double* p, sch_field* field) {
  if (kind) *kind = from_space_kind(space.kind);
  if (dim) *dim = space.dim;
  if (p) *p = space.p;
  if (field) *field = from_space_field(space.field);
  return SCH_OK;
}

}  // namespace

extern "C" {

const char* sch_version(void) { return "1.0.0"; }

const char* sch_status_name(sch_status status) {
  switch (status) {
    case SCH_OK:
      return "SCH_OK";
    case SCH_ERROR_INVALID_ARGUMENT:
      return "SCH_ERROR_INVALID_ARGUMENT";
    case SCH_ERROR_DIMENSION_MISMATCH:
      return "SCH_ERROR_DIMENSION_MISMATCH";
    case SCH_ERROR_NOT_HERMITIAN:
      return "SCH_ERROR_NOT_HERMITIAN";
    case SCH_ERROR_PRECONDITION:
      return "SCH_ERROR_PRECONDITION";
    case SCH_ERROR_NUMERICAL:
      return "SCH_ERROR_NUMERICAL";
    case SCH_ERROR_NOMEM:
      return "SCH_ERROR_NOMEM";
  }
  return "SCH_ERROR_UNKNOWN";
}

const char* sch_last_error(void) { return t_last_error.c_str(); }

sch_status sch_matrix_create(int rows, int cols, const double* re, const double* im,
                             sch_matrix** out) {
  if (!out || !re || rows < 1 || cols < 1)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_matrix_create: bad arguments");
  *out = nullptr;
  return guarded([&] { *out = new sch_matrix{matrix_from_buffers(rows, cols, re, im)}; });
}

void sch_matrix_free(sch_matrix* m) { delete m; }

int sch_matrix_rows(const sch_matrix* m) {
  return m ? static_cast<int>(m->m.rows()) : 0;
}

int sch_matrix_cols(const sch_matrix* m) {
  return m ? static_cast<int>(m->m.cols()) : 0;
}

sch_status sch_matrix_copy_data(const sch_matrix* m, double* re, double* im) {
  if (!m || !re)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_matrix_copy_data: bad arguments");
  size_t k = 0;
  for (Eigen::Index i = 0; i < m->m.rows(); ++i)
    for (Eigen::Index j = 0; j < m->m.cols(); ++j, ++k) {
      re[k] = m->m(i, j).real();
      if (im) im[k] = m->m(i, j).imag();
    }
  return SCH_OK;
}

sch_status sch_random_unitary(int dim, uint64_t seed, sch_matrix** out) {
  if (!out) return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_random_unitary: bad arguments");
  *out = nullptr;
  return guarded([&] { *out = new sch_matrix{schatten::random_unitary(dim, seed)}; });
}

sch_status sch_singular_values(const sch_matrix* m, double* out) {
  if (!m || !out)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_singular_values: bad arguments");
  return guarded([&] {
    const Eigen::VectorXd s = schatten::singular_values(m->m);
    for (Eigen::Index k = 0; k < s.size(); ++k) out[k] = s(k);
  });
}

sch_status sch_schatten_norm(const sch_matrix* m, double p, double* out) {
  if (!m || !out)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_schatten_norm: bad arguments");
  return guarded([&] { *out = schatten::schatten_norm(m->m, p); });
}

sch_status sch_vector_pnorm(const double* re, const double* im, size_t n, double p,
                            double* out) {
  if (!re || !out || n == 0)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_vector_pnorm: bad arguments");
  return guarded([&] {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
    for (size_t k = 0; k < n; ++k)
      v(static_cast<Eigen::Index>(k)) = {re[k], im ? im[k] : 0.0};
    *out = schatten::vector_pnorm(v, p);
  });
}

sch_status sch_symbol_abs_pow(double p, sch_symbol** out) {
  if (!out) return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_symbol_abs_pow: bad arguments");
  *out = nullptr;
  return guarded([&] { *out = new sch_symbol{schatten::Symbol::abs_pow(p)}; });
}

sch_status sch_symbol_polynomial(const double* coeffs, size_t count, sch_symbol** out) {
  if (!out || (!coeffs && count > 0))
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_symbol_polynomial: bad arguments");
  *out = nullptr;
  return guarded([&] {
    *out = new sch_symbol{
        schatten::Symbol::polynomial(std::vector<double>(coeffs, coeffs + count))};
  });
}

void sch_symbol_free(sch_symbol* s) { delete s; }

sch_status sch_symbol_eval(const sch_symbol* s, int derivative_order, double x,
                           double* out) {
  if (!s || !out) return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_symbol_eval: bad arguments");
  return guarded([&] { *out = s->s.derivative(derivative_order, x); });
}

sch_status sch_divided_difference(const sch_symbol* s, const double* nodes,
                                  size_t count, double* out) {
  if (!s || !nodes || !out || count == 0)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_divided_difference: bad arguments");
  return guarded([&] {
    *out = schatten::divided_difference(s->s, std::span<const double>(nodes, count));
  });
}

sch_status sch_moi_apply(const sch_symbol* s, const sch_matrix* const* anchors,
                         size_t anchor_count, const sch_matrix* const* perturbations,
                         size_t perturbation_count, double group_tol,
                         sch_matrix** out) {
  if (!s || !anchors || !perturbations || !out)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_moi_apply: bad arguments");
  for (size_t k = 0; k < anchor_count; ++k)
    if (!anchors[k])
      return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_moi_apply: NULL anchor");
  for (size_t k = 0; k < perturbation_count; ++k)
    if (!perturbations[k])
      return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_moi_apply: NULL perturbation");
  *out = nullptr;
  return guarded([&] {
    std::vector<schatten::Matrix> as;
    as.reserve(anchor_count);
    for (size_t k = 0; k < anchor_count; ++k) as.push_back(anchors[k]->m);
    std::vector<schatten::Matrix> bs;
    bs.reserve(perturbation_count);
    for (size_t k = 0; k < perturbation_count; ++k) bs.push_back(perturbations[k]->m);
    *out = new sch_matrix{schatten::moi_apply(
        s->s, as, bs, group_tol < 0 ? schatten::kDefaultGroupTol : group_tol)};
  });
}

sch_status sch_second_derivative_schatten(const sch_matrix* a, const sch_matrix* b,
                                          double p, double* out) {
  if (!a || !b || !out)
    return fail(SCH_ERROR_INVALID_ARGUMENT,
                "sch_second_derivative_schatten: bad arguments");
  return guarded([&] { *out = schatten::second_derivative_schatten(a->m, b->m, p); });
}

sch_status sch_fd_second_derivative(const sch_matrix* a, const sch_matrix* b, double p,
                                    double h, double* out) {
  if (!a || !b || !out)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_fd_second_derivative: bad arguments");
  return guarded([&] { *out = schatten::fd_second_derivative(a->m, b->m, p, h); });
}

sch_status sch_embedding_diag(int m, double p, sch_embedding** out) {
  if (!out) return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_diag: bad arguments");
  *out = nullptr;
  return guarded([&] { *out = new sch_embedding{schatten::diag_embedding(m, p)}; });
}

sch_status sch_embedding_corner(int m, int n, double p, sch_embedding** out) {
  if (!out) return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_corner: bad arguments");
  *out = nullptr;
  return guarded([&] { *out = new sch_embedding{schatten::corner_embedding(m, n, p)}; });
}

sch_status sch_embedding_sum_diff(int n, sch_embedding** out) {
  if (!out)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_sum_diff: bad arguments");
  *out = nullptr;
  return guarded([&] { *out = new sch_embedding{schatten::sum_diff_embedding(n)}; });
}

sch_status sch_embedding_first_row(int m, double p, sch_embedding** out) {
  if (!out)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_first_row: bad arguments");
  *out = nullptr;
  return guarded([&] { *out = new sch_embedding{schatten::first_row_embedding(m, p)}; });
}

sch_status sch_embedding_vec(int m, sch_embedding** out) {
  if (!out) return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_vec: bad arguments");
  *out = nullptr;
  return guarded([&] { *out = new sch_embedding{schatten::vec_embedding(m)}; });
}

sch_status sch_embedding_s2_to_sp(int m, double p, sch_embedding** out) {
  if (!out)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_s2_to_sp: bad arguments");
  *out = nullptr;
  return guarded([&] { *out = new sch_embedding{schatten::s2_to_sp_embedding(m, p)}; });
}

sch_status sch_embedding_cubature_2_4_3(sch_embedding** out) {
  if (!out)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_cubature_2_4_3: bad arguments");
  *out = nullptr;
  return guarded([&] { *out = new sch_embedding{schatten::cubature_embedding_2_4_3()}; });
}

sch_status sch_embedding_create(sch_space_kind dkind, int ddim, double dp,
                                sch_field dfield, sch_space_kind ckind, int cdim,
                                double cp, sch_field cfield,
                                const sch_matrix* const* basis_images,
                                size_t image_count, sch_embedding** out) {
  if (!out || !basis_images || image_count == 0)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_create: bad arguments");
  for (size_t k = 0; k < image_count; ++k)
    if (!basis_images[k])
      return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_create: NULL image");
  const auto dk = to_space_kind(dkind);
  const auto ck = to_space_kind(ckind);
  const auto df = to_space_field(dfield);
  const auto cf = to_space_field(cfield);
  if (!dk || !ck || !df || !cf)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_create: bad kind or field");
  *out = nullptr;
  return guarded([&] {
    std::vector<schatten::Matrix> images;
    images.reserve(image_count);
    for (size_t k = 0; k < image_count; ++k) images.push_back(basis_images[k]->m);
    *out = new sch_embedding{schatten::make_embedding(
        {*dk, ddim, dp, *df}, {*ck, cdim, cp, *cf}, std::move(images))};
  });
}

sch_status sch_embedding_with_exponents(const sch_embedding* e, double domain_p,
                                        double codomain_p, sch_embedding** out) {
  if (!e || !out)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_with_exponents: bad arguments");
  *out = nullptr;
  return guarded(
      [&] { *out = new sch_embedding{e->map.with_exponents(domain_p, codomain_p)}; });
}

void sch_embedding_free(sch_embedding* e) { delete e; }

sch_status sch_embedding_domain(const sch_embedding* e, sch_space_kind* kind, int* dim,
                                double* p, sch_field* field) {
  if (!e) return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_domain: bad arguments");
  return space_info(e->map.domain, kind, dim, p, field);
}

sch_status sch_embedding_codomain(const sch_embedding* e, sch_space_kind* kind,
                                  int* dim, double* p, sch_field* field) {
  if (!e)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_codomain: bad arguments");
  return space_info(e->map.codomain, kind, dim, p, field);
}

sch_status sch_embedding_basis_image(const sch_embedding* e, size_t index,
                                     sch_matrix** out) {
  if (!e || !out)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_basis_image: bad arguments");
  if (index >= e->map.basis_images.size())
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_basis_image: index out of range");
  *out = nullptr;
  return guarded([&] { *out = new sch_matrix{e->map.basis_images[index]}; });
}

sch_status sch_embedding_apply(const sch_embedding* e, const sch_matrix* x,
                               sch_matrix** out) {
  if (!e || !x || !out)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_embedding_apply: bad arguments");
  *out = nullptr;
  return guarded([&] { *out = new sch_matrix{e->map.apply(x->m)}; });
}

sch_status sch_verify_isometry(const sch_embedding* e, int samples, uint64_t seed,
                               double tol, double* max_relative_residual, int* pass) {
  if (!e || !max_relative_residual || !pass)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_verify_isometry: bad arguments");
  return guarded([&] {
    const schatten::VerifyResult result =
        schatten::verify_isometry(e->map, samples, seed, tol);
    *max_relative_residual = result.max_relative_residual;
    *pass = result.pass ? 1 : 0;
  });
}

sch_status sch_lambda_bound(int m, int p, sch_field field, uint64_t* out) {
  if (!out) return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_lambda_bound: bad arguments");
  schatten::LambdaField lf;
  switch (field) {
    case SCH_FIELD_REAL:
      lf = schatten::LambdaField::kReal;
      break;
    case SCH_FIELD_COMPLEX:
      lf = schatten::LambdaField::kComplex;
      break;
    case SCH_FIELD_QUATERNION:
      lf = schatten::LambdaField::kQuaternion;
      break;
    default:
      return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_lambda_bound: bad field");
  }
  return guarded([&] { *out = schatten::lambda_bound(m, p, lf); });
}

sch_status sch_double_map(const sch_embedding* e, double q, double p, sch_matrix** a,
                          sch_matrix** b) {
  if (!e || !a || !b)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_double_map: bad arguments");
  *a = nullptr;
  *b = nullptr;
  return guarded([&] {
    const schatten::CandidatePair pair =
        schatten::double_map(e->map.with_exponents(q, p));
    *a = new sch_matrix{pair.a};
    *b = new sch_matrix{pair.b};
  });
}

sch_status sch_eigenvalue_curves(const sch_matrix* a, const sch_matrix* b,
                                 const double* t_grid, size_t t_count, double* out) {
  if (!a || !b || !t_grid || !out || t_count == 0)
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_eigenvalue_curves: bad arguments");
  return guarded([&] {
    const schatten::CandidatePair pair{a->m, b->m, 2.0, 2.0};
    const schatten::CurveSet set = schatten::eigenvalue_curves(
        pair, std::span<const double>(t_grid, t_count));
    for (size_t i = 0; i < set.curves.size(); ++i)
      for (size_t k = 0; k < t_count; ++k) out[i * t_count + k] = set.curves[i][k];
  });
}

sch_status sch_check_candidate(const sch_embedding* e, double q, double p,
                               const double* t_grid, size_t t_count, double tol,
                               sch_report** out) {
  if (!e || !out || (t_count > 0 && !t_grid))
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_check_candidate: bad arguments");
  *out = nullptr;
  return guarded([&] {
    schatten::ObstructionConfig config;
    if (t_count > 0) config.t_grid.assign(t_grid, t_grid + t_count);
    if (tol > 0) config.tol = tol;
    *out = new sch_report{
        schatten::check_candidate(e->map.with_exponents(q, p), config)};
  });
}

void sch_report_free(sch_report* r) { delete r; }

sch_verdict sch_report_verdict(const sch_report* r) {
  return r ? from_verdict(r->report.verdict) : SCH_VERDICT_INCONCLUSIVE;
}

const char* sch_verdict_name(sch_verdict verdict) {
  switch (verdict) {
    case SCH_VERDICT_CONSISTENT:
      return "CONSISTENT";
    case SCH_VERDICT_FAILS_SCALAR_IDENTITY:
      return "FAILS_SCALAR_IDENTITY";
    case SCH_VERDICT_FAILS_D2_DIVERGENCE:
      return "FAILS_D2_DIVERGENCE";
    case SCH_VERDICT_FAILS_D2_NONZERO:
      return "FAILS_D2_NONZERO";
    case SCH_VERDICT_INCONCLUSIVE:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

double sch_report_max_residual(const sch_report* r) {
  return r ? r->report.max_residual : 0.0;
}

double sch_report_q(const sch_report* r) { return r ? r->report.q : 0.0; }

double sch_report_p(const sch_report* r) { return r ? r->report.p : 0.0; }

double sch_report_tol(const sch_report* r) { return r ? r->report.tol : 0.0; }

int sch_report_has_d2(const sch_report* r) {
  return r && r->report.d2_applicable ? 1 : 0;
}

int sch_report_d2_diverges(const sch_report* r) {
  return r && r->report.d2_diverges ? 1 : 0;
}

sch_status sch_report_d2(const sch_report* r, double* target, double* actual) {
  if (!r) return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_report_d2: bad arguments");
  if (!r->report.d2_applicable)
    return fail(SCH_ERROR_PRECONDITION, "sch_report_d2: derivative stage did not run");
  if (target) *target = r->report.d2_target;
  if (actual) *actual = r->report.d2_actual;
  return SCH_OK;
}

size_t sch_report_profile_size(const sch_report* r) {
  return r ? r->report.residual_profile.size() : 0;
}

sch_status sch_report_profile_row(const sch_report* r, size_t index, double* t,
                                  double* target, double* actual, double* residual) {
  if (!r) return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_report_profile_row: bad arguments");
  if (index >= r->report.residual_profile.size())
    return fail(SCH_ERROR_INVALID_ARGUMENT, "sch_report_profile_row: index out of range");
  const schatten::ProfileRow& row = r->report.residual_profile[index];
  if (t) *t = row.t;
  if (target) *target = row.target;
  if (actual) *actual = row.actual;
  if (residual) *residual = row.residual;
  return SCH_OK;
}

}  // extern "C"
