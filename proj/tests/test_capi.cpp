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
#include <limits>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct MatrixHandle {
  sch_matrix* ptr = nullptr;
  MatrixHandle() = default;
  explicit MatrixHandle(sch_matrix* p) : ptr(p) {}
  ~MatrixHandle() { sch_matrix_free(ptr); }
  MatrixHandle(const MatrixHandle&) = delete;
  MatrixHandle& operator=(const MatrixHandle&) = delete;
};

sch_matrix* make(int rows, int cols, const std::vector<double>& re,
                 const std::vector<double>* im = nullptr) {
  sch_matrix* out = nullptr;
  REQUIRE(sch_matrix_create(rows, cols, re.data(), im ? im->data() : nullptr, &out) ==
          SCH_OK);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(sch_version()).find('.') != std::string::npos);
  CHECK(std::string(sch_status_name(SCH_OK)) == "SCH_OK");
  CHECK(std::string(sch_status_name(SCH_ERROR_PRECONDITION)) ==
        "SCH_ERROR_PRECONDITION");
}

TEST_CASE("matrix round trip is bit exact") {
  const std::vector<double> re = {0.1, -0.0, 1e-300, 0.12345678901234567};
  const std::vector<double> im = {3.0, 4.0, -5e-17, 0.0};
  MatrixHandle m(make(2, 2, re, &im));
  CHECK(sch_matrix_rows(m.ptr) == 2);
  CHECK(sch_matrix_cols(m.ptr) == 2);
  std::vector<double> re_out(4), im_out(4);
  REQUIRE(sch_matrix_copy_data(m.ptr, re_out.data(), im_out.data()) == SCH_OK);
  CHECK(std::memcmp(re.data(), re_out.data(), 4 * sizeof(double)) == 0);
  CHECK(std::memcmp(im.data(), im_out.data(), 4 * sizeof(double)) == 0);
}

TEST_CASE("matrix creation rejects non-finite input") {
  const std::vector<double> re = {1.0, std::numeric_limits<double>::quiet_NaN()};
  sch_matrix* out = nullptr;
  CHECK(sch_matrix_create(1, 2, re.data(), nullptr, &out) == SCH_ERROR_PRECONDITION);
  CHECK(out == nullptr);
  CHECK(std::string(sch_last_error()).size() > 0);
}

TEST_CASE("norms through the C surface") {
  MatrixHandle d(make(2, 2, {3.0, 0.0, 0.0, -4.0}));
  double norm = 0.0;
  REQUIRE(sch_schatten_norm(d.ptr, 1.0, &norm) == SCH_OK);
  CHECK(norm == doctest::Approx(7.0));
  REQUIRE(sch_schatten_norm(d.ptr, kInf, &norm) == SCH_OK);
  CHECK(norm == doctest::Approx(4.0));
  CHECK(sch_schatten_norm(d.ptr, 0.0, &norm) == SCH_ERROR_PRECONDITION);

  double svals[2] = {0, 0};
  REQUIRE(sch_singular_values(d.ptr, svals) == SCH_OK);
  CHECK(svals[0] == doctest::Approx(4.0));
  CHECK(svals[1] == doctest::Approx(3.0));

  const double re[3] = {1.0, -2.0, 2.0};
  REQUIRE(sch_vector_pnorm(re, nullptr, 3, kInf, &norm) == SCH_OK);
  CHECK(norm == doctest::Approx(2.0));
}

TEST_CASE("random unitary determinism through the C surface") {
  sch_matrix* u1 = nullptr;
  sch_matrix* u2 = nullptr;
  REQUIRE(sch_random_unitary(3, 42, &u1) == SCH_OK);
  REQUIRE(sch_random_unitary(3, 42, &u2) == SCH_OK);
  std::vector<double> a(9), b(9), ai(9), bi(9);
  sch_matrix_copy_data(u1, a.data(), ai.data());
  sch_matrix_copy_data(u2, b.data(), bi.data());
  CHECK(std::memcmp(a.data(), b.data(), 9 * sizeof(double)) == 0);
  CHECK(std::memcmp(ai.data(), bi.data(), 9 * sizeof(double)) == 0);
  sch_matrix_free(u1);
  sch_matrix_free(u2);
}

TEST_CASE("divided differences and symbols through the C surface") {
  sch_symbol* cube = nullptr;
  const double coeffs[4] = {0, 0, 0, 1};
  REQUIRE(sch_symbol_polynomial(coeffs, 4, &cube) == SCH_OK);
  double value = 0.0;
  REQUIRE(sch_symbol_eval(cube, 1, 1.0, &value) == SCH_OK);
  CHECK(value == doctest::Approx(3.0));
  const double nodes[3] = {0.0, 1.0, 2.0};
  REQUIRE(sch_divided_difference(cube, nodes, 3, &value) == SCH_OK);
  CHECK(value == doctest::Approx(3.0));
  sch_symbol_free(cube);

  sch_symbol* rough = nullptr;
  REQUIRE(sch_symbol_abs_pow(1.5, &rough) == SCH_OK);
  const double repeated[3] = {0.0, 0.0, 0.0};
  CHECK(sch_divided_difference(rough, repeated, 3, &value) == SCH_ERROR_PRECONDITION);
  sch_symbol_free(rough);

  CHECK(sch_symbol_abs_pow(-2.0, &rough) == SCH_ERROR_PRECONDITION);
}

TEST_CASE("operator integrals through the C surface") {
  MatrixHandle a(make(2, 2, {1.0, 0.0, 0.0, 0.0}));
  MatrixHandle b(make(2, 2, {0.0, 1.0, 1.0, 0.0}));

  double d2 = 0.0;
  REQUIRE(sch_second_derivative_schatten(a.ptr, b.ptr, 4.0, &d2) == SCH_OK);
  CHECK(d2 == doctest::Approx(8.0).epsilon(1e-9));
  CHECK(sch_second_derivative_schatten(a.ptr, b.ptr, 1.0, &d2) ==
        SCH_ERROR_PRECONDITION);

  MatrixHandle skew(make(2, 2, {0.0, 1.0, 0.0, 0.0}));
  CHECK(sch_second_derivative_schatten(skew.ptr, b.ptr, 2.0, &d2) ==
        SCH_ERROR_NOT_HERMITIAN);

  double fd = 0.0;
  REQUIRE(sch_fd_second_derivative(a.ptr, b.ptr, 4.0, 1e-3, &fd) == SCH_OK);
  CHECK(std::abs(fd - 8.0) < 1e-4);

  sch_symbol* square = nullptr;
  const double coeffs[3] = {0, 0, 1};
  REQUIRE(sch_symbol_polynomial(coeffs, 3, &square) == SCH_OK);
  const sch_matrix* anchors[2] = {a.ptr, a.ptr};
  const sch_matrix* perturbations[1] = {b.ptr};
  sch_matrix* moi = nullptr;
  REQUIRE(sch_moi_apply(square, anchors, 2, perturbations, 1, -1.0, &moi) == SCH_OK);
  CHECK(sch_matrix_rows(moi) == 2);
  sch_matrix_free(moi);

  const sch_matrix* wrong[2] = {a.ptr, nullptr};
  CHECK(sch_moi_apply(square, wrong, 2, perturbations, 1, -1.0, &moi) ==
        SCH_ERROR_INVALID_ARGUMENT);
  sch_symbol_free(square);
}

TEST_CASE("embeddings through the C surface") {
  sch_embedding* map = nullptr;
  REQUIRE(sch_embedding_diag(2, 2.0, &map) == SCH_OK);

  sch_space_kind kind;
  int dim = 0;
  double p = 0.0;
  sch_field field;
  REQUIRE(sch_embedding_domain(map, &kind, &dim, &p, &field) == SCH_OK);
  CHECK(kind == SCH_SPACE_VECTOR);
  CHECK(dim == 2);
  CHECK(p == 2.0);
  CHECK(field == SCH_FIELD_COMPLEX);
  REQUIRE(sch_embedding_codomain(map, &kind, &dim, &p, &field) == SCH_OK);
  CHECK(kind == SCH_SPACE_MATRIX);

  sch_matrix* image = nullptr;
  REQUIRE(sch_embedding_basis_image(map, 0, &image) == SCH_OK);
  std::vector<double> re(4), im(4);
  sch_matrix_copy_data(image, re.data(), im.data());
  CHECK(re[0] == 1.0);
  CHECK(re[3] == 0.0);
  sch_matrix_free(image);
  CHECK(sch_embedding_basis_image(map, 9, &image) == SCH_ERROR_INVALID_ARGUMENT);

  MatrixHandle x(make(1, 2, {3.0, 4.0}));
  sch_matrix* y = nullptr;
  REQUIRE(sch_embedding_apply(map, x.ptr, &y) == SCH_OK);
  double norm = 0.0;
  REQUIRE(sch_schatten_norm(y, 1.0, &norm) == SCH_OK);
  CHECK(norm == doctest::Approx(7.0));
  sch_matrix_free(y);

  double residual = 0.0;
  int pass = 0;
  REQUIRE(sch_verify_isometry(map, 100, 0, 1e-10, &residual, &pass) == SCH_OK);
  CHECK(pass == 1);
  CHECK(residual <= 1e-10);
  sch_embedding_free(map);
}

TEST_CASE("custom embeddings and exponent retagging") {
  MatrixHandle e11(make(2, 2, {1.0, 0.0, 0.0, 0.0}));
  MatrixHandle e22(make(2, 2, {0.0, 0.0, 0.0, 1.0}));
  const sch_matrix* images[2] = {e11.ptr, e22.ptr};
  sch_embedding* map = nullptr;
  REQUIRE(sch_embedding_create(SCH_SPACE_VECTOR, 2, 1.0, SCH_FIELD_COMPLEX,
                               SCH_SPACE_MATRIX, 2, 2.0, SCH_FIELD_COMPLEX, images, 2,
                               &map) == SCH_OK);
  double residual = 0.0;
  int pass = 1;
  REQUIRE(sch_verify_isometry(map, 100, 0, 1e-9, &residual, &pass) == SCH_OK);
  CHECK(pass == 0);
  CHECK(residual >= 0.29);

  sch_embedding* retagged = nullptr;
  REQUIRE(sch_embedding_with_exponents(map, 2.0, 2.0, &retagged) == SCH_OK);
  REQUIRE(sch_verify_isometry(retagged, 100, 0, 1e-10, &residual, &pass) == SCH_OK);
  CHECK(pass == 1);
  sch_embedding_free(retagged);
  sch_embedding_free(map);

  // image count must match the domain dimension
  sch_embedding* bad = nullptr;
  CHECK(sch_embedding_create(SCH_SPACE_VECTOR, 3, 1.0, SCH_FIELD_COMPLEX,
                             SCH_SPACE_MATRIX, 2, 2.0, SCH_FIELD_COMPLEX, images, 2,
                             &bad) == SCH_ERROR_DIMENSION_MISMATCH);
}

TEST_CASE("lambda bound through the C surface") {
  uint64_t value = 0;
  REQUIRE(sch_lambda_bound(2, 2, SCH_FIELD_REAL, &value) == SCH_OK);
  CHECK(value == 3);
  REQUIRE(sch_lambda_bound(2, 2, SCH_FIELD_COMPLEX, &value) == SCH_OK);
  CHECK(value == 4);
  REQUIRE(sch_lambda_bound(2, 2, SCH_FIELD_QUATERNION, &value) == SCH_OK);
  CHECK(value == 6);
  CHECK(sch_lambda_bound(2, 3, SCH_FIELD_REAL, &value) == SCH_ERROR_PRECONDITION);
  CHECK(sch_lambda_bound(1, 2, SCH_FIELD_REAL, &value) == SCH_ERROR_PRECONDITION);
}

TEST_CASE("obstruction pipeline through the C surface") {
  sch_embedding* map = nullptr;
  REQUIRE(sch_embedding_diag(2, 2.0, &map) == SCH_OK);

  sch_matrix* a = nullptr;
  sch_matrix* b = nullptr;
  REQUIRE(sch_double_map(map, 2.0, 2.0, &a, &b) == SCH_OK);
  CHECK(sch_matrix_rows(a) == 4);
  double norm = 0.0;
  REQUIRE(sch_schatten_norm(a, 2.0, &norm) == SCH_OK);
  CHECK(norm == doctest::Approx(1.0));

  const double grid[3] = {-1.0, 0.0, 1.0};
  std::vector<double> curves(4 * 3);
  REQUIRE(sch_eigenvalue_curves(a, b, grid, 3, curves.data()) == SCH_OK);
  // top trajectory of the doubled diagonal pair: 2^{-1/2} max(1, |t|)
  CHECK(curves[0 * 3 + 1] == doctest::Approx(std::pow(2.0, -0.5)));

  sch_report* report = nullptr;
  REQUIRE(sch_check_candidate(map, 1.0, 2.0, nullptr, 0, -1.0, &report) == SCH_OK);
  CHECK(sch_report_verdict(report) == SCH_VERDICT_FAILS_SCALAR_IDENTITY);
  CHECK(std::string(sch_verdict_name(sch_report_verdict(report))) ==
        "FAILS_SCALAR_IDENTITY");
  CHECK(sch_report_max_residual(report) >= 0.4 - 1e-12);
  CHECK(sch_report_q(report) == 1.0);
  CHECK(sch_report_p(report) == 2.0);
  CHECK(sch_report_has_d2(report) == 0);
  double t0, target, actual, residual;
  REQUIRE(sch_report_profile_size(report) == 17);
  REQUIRE(sch_report_profile_row(report, 0, &t0, &target, &actual, &residual) ==
          SCH_OK);
  CHECK(t0 == -2.0);
  CHECK(sch_report_profile_row(report, 99, &t0, &target, &actual, &residual) ==
        SCH_ERROR_INVALID_ARGUMENT);
  CHECK(sch_report_d2(report, &target, &actual) == SCH_ERROR_PRECONDITION);
  sch_report_free(report);

  REQUIRE(sch_check_candidate(map, 1.5, 2.0, nullptr, 0, -1.0, &report) == SCH_OK);
  CHECK(sch_report_verdict(report) == SCH_VERDICT_FAILS_D2_DIVERGENCE);
  CHECK(sch_report_has_d2(report) == 1);
  CHECK(sch_report_d2_diverges(report) == 1);
  sch_report_free(report);

  REQUIRE(sch_check_candidate(map, 2.0, 2.0, nullptr, 0, -1.0, &report) == SCH_OK);
  CHECK(sch_report_verdict(report) == SCH_VERDICT_CONSISTENT);
  REQUIRE(sch_report_d2(report, &target, &actual) == SCH_OK);
  CHECK(target == doctest::Approx(2.0));
  CHECK(actual == doctest::Approx(2.0).epsilon(1e-9));
  sch_report_free(report);

  // p = infinity has no doubling normalization
  CHECK(sch_check_candidate(map, 2.0, kInf, nullptr, 0, -1.0, &report) ==
        SCH_ERROR_PRECONDITION);

  sch_matrix_free(a);
  sch_matrix_free(b);
  sch_embedding_free(map);
}

TEST_CASE("null arguments are rejected") {
  CHECK(sch_matrix_create(2, 2, nullptr, nullptr, nullptr) ==
        SCH_ERROR_INVALID_ARGUMENT);
  double out = 0.0;
  CHECK(sch_schatten_norm(nullptr, 2.0, &out) == SCH_ERROR_INVALID_ARGUMENT);
  CHECK(sch_report_verdict(nullptr) == SCH_VERDICT_INCONCLUSIVE);
}
