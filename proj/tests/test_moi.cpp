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

#include "core/moi.hpp"

#include <cmath>
#include <vector>

#include "core/errors.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace schatten;
using test::pauli_x;
using test::random_hermitian_unit;

namespace {

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Matrix moi1(const Symbol& f, const Matrix& a0, const Matrix& a1, const Matrix& b) {
  const std::vector<Matrix> anchors = {a0, a1};
  const std::vector<Matrix> perturbations = {b};
  return moi_apply(f, anchors, perturbations);
}

Matrix moi2(const Symbol& f, const Matrix& a, const Matrix& b1, const Matrix& b2) {
  const std::vector<Matrix> anchors = {a, a, a};
  const std::vector<Matrix> perturbations = {b1, b2};
  return moi_apply(f, anchors, perturbations);
}

}  // namespace

TEST_CASE("first-order integral of x^2 against a flat anchor pair") {
  // f^[1](0,1) = 1 and the diagonal terms carry B_ii = 0, so the sum is B.
  const Matrix result =
      moi1(Symbol::polynomial({0, 0, 1}), diag2(0, 1), diag2(0, 1), pauli_x());
  CHECK((result - pauli_x()).norm() < 1e-12);
}

TEST_CASE("zero perturbation gives the zero operator") {
  const Matrix result = moi1(Symbol::polynomial({0, 0, 1}), diag2(0, 1), diag2(0, 1),
                             Matrix::Zero(2, 2));
  CHECK(result.norm() == 0.0);
}

TEST_CASE("second-order integral of x^4, brute-forced over all index tuples") {
  // P1 X P2 X P1 and P2 X P1 X P2 are the only surviving products;
  // f^[2](1,0,1) = 3 and f^[2](0,1,0) = 1 give diag(3,1).
  const Matrix result =
      moi2(Symbol::polynomial({0, 0, 0, 0, 1}), diag2(1, 0), pauli_x(), pauli_x());
  CHECK((result - diag2(3, 1)).norm() < 1e-10);
}

TEST_CASE("moi input validation") {
  const Symbol f = Symbol::polynomial({0, 0, 1});
  const std::vector<Matrix> ok_anchor = {diag2(0, 1), diag2(0, 1)};
  const std::vector<Matrix> short_anchor = {diag2(0, 1)};
  const std::vector<Matrix> one_b = {pauli_x()};
  const std::vector<Matrix> wrong_b = {Matrix::Zero(3, 3)};
  CHECK_THROWS_AS(moi_apply(f, short_anchor, one_b), std::invalid_argument);
  CHECK_THROWS_AS(moi_apply(f, ok_anchor, wrong_b), DimensionError);
  // order 2 needs two derivatives
  const std::vector<Matrix> anchors3 = {diag2(0, 1), diag2(0, 1), diag2(0, 1)};
  const std::vector<Matrix> two_b = {pauli_x(), pauli_x()};
  CHECK_THROWS_AS(moi_apply(Symbol::abs_pow(1.5), anchors3, two_b),
                  std::invalid_argument);
}

TEST_CASE("second derivative of the schatten power on fixed pairs") {
  // Tr (A+tB)^2 = 1 + 2 t^2 and Tr (A+tB)^4 = 1 + 4 t^2 + 2 t^4.
  CHECK(second_derivative_schatten(diag2(1, 0), pauli_x(), 2.0) ==
        doctest::Approx(4.0).epsilon(1e-10));
  CHECK(second_derivative_schatten(diag2(1, 0), pauli_x(), 4.0) ==
        doctest::Approx(8.0).epsilon(1e-10));
  CHECK(second_derivative_schatten(diag2(1, 0), Matrix::Zero(2, 2), 3.0) ==
        doctest::Approx(0.0));
}

TEST_CASE("second derivative preconditions") {
  CHECK_THROWS_AS(second_derivative_schatten(diag2(1, 0), pauli_x(), 1.5),
                  std::invalid_argument);
  Matrix nilpotent = Matrix::Zero(2, 2);
  nilpotent(0, 1) = 1.0;
  CHECK_THROWS_AS(second_derivative_schatten(nilpotent, pauli_x(), 2.0),
                  NotHermitianError);
  CHECK_THROWS_AS(second_derivative_schatten(diag2(1, 0), Matrix::Zero(3, 3), 2.0),
                  DimensionError);
}

TEST_CASE("finite-difference oracle on fixed pairs") {
  CHECK(std::abs(fd_second_derivative(diag2(1, 0), pauli_x(), 2.0, 1e-3) - 4.0) <=
        1e-6);
  CHECK(fd_second_derivative(diag2(1, 0), Matrix::Zero(2, 2), 2.0, 0.1) ==
        doctest::Approx(0.0));
  // g(t) = ||t I_2||_4^4 = 2 t^4, so the central difference is 4 h^2.
  CHECK(fd_second_derivative(Matrix::Zero(2, 2), Matrix::Identity(2, 2), 4.0, 1e-2) ==
        doctest::Approx(4e-4).epsilon(1e-8));
}

TEST_CASE("perturbation identity f(A) - f(B) against the first-order integral") {
  Rng rng(1001);
  const std::vector<Symbol> symbols = {
      Symbol::polynomial({0, 0, 1}), Symbol::polynomial({0, 0, 0, 1}),
      Symbol::polynomial({0, 0, 0, 0, 1}), Symbol::abs_pow(2.5)};
  for (int trial = 0; trial < 25; ++trial) {
    const int dim = 2 + static_cast<int>(rng.next_u64() % 5);
    const Matrix a = random_hermitian_unit(dim, rng);
    const Matrix b = random_hermitian_unit(dim, rng);
    for (const Symbol& f : symbols) {
      const Matrix lhs = function_calculus(a, f) - function_calculus(b, f);
      const Matrix rhs = moi1(f, a, b, a - b);
      CHECK((lhs - rhs).norm() <=
            1e-8 * (1.0 + function_calculus(a, f).norm()));
    }
  }
}

TEST_CASE("multilinearity in each perturbation slot") {
  Rng rng(1002);
  const Symbol f = Symbol::polynomial({0, 0, 0, 0, 1});
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = 2 + static_cast<int>(rng.next_u64() % 3);
    const Matrix a = random_hermitian_unit(dim, rng);
    const Matrix b1 = test::random_complex(dim, dim, rng);
    const Matrix b1b = test::random_complex(dim, dim, rng);
    const Matrix b2 = test::random_complex(dim, dim, rng);
    const double c = 2.5;

    const Matrix sum_first = moi2(f, a, b1 + b1b, b2);
    const Matrix split_first = moi2(f, a, b1, b2) + moi2(f, a, b1b, b2);
    CHECK((sum_first - split_first).norm() <= 1e-10 * (1.0 + split_first.norm()));

    const Matrix scaled_second = moi2(f, a, b1, c * b2);
    const Matrix scaled_out = c * moi2(f, a, b1, b2);
    CHECK((scaled_second - scaled_out).norm() <= 1e-10 * (1.0 + scaled_out.norm()));
  }
}

TEST_CASE("trace formula matches the finite-difference oracle") {
  Rng rng(1003);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = 2 + static_cast<int>(rng.next_u64() % 5);
    const Matrix a = random_hermitian_unit(dim, rng);
    const Matrix b = random_hermitian_unit(dim, rng);
    for (double p : {2.0, 2.5, 3.0, 4.0}) {
      const double exact = second_derivative_schatten(a, b, p);
      const double approx = fd_second_derivative(a, b, p, 1e-3);
      CHECK(std::abs(exact - approx) <= 1e-4 * (1.0 + std::abs(exact)));
    }
  }
}

TEST_CASE("order-2 integral with symmetric data is Hermitian") {
  Rng rng(1004);
  for (double p : {2.5, 3.0, 4.0}) {
    const Matrix a = random_hermitian_unit(4, rng);
    const Matrix b = random_hermitian_unit(4, rng);
    const Matrix result = moi2(Symbol::abs_pow(p), a, b, b);
    CHECK((result - result.adjoint()).norm() <= 1e-9 * (1.0 + result.norm()));
  }
}
