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

#ifndef SCHATTEN_CORE_MATRIX_HPP_
#define SCHATTEN_CORE_MATRIX_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "core/symbol.hpp"

namespace schatten {

using Matrix = Eigen::MatrixXcd;

// Eigenvalue clusters closer than group_tol * (1 + ||A||_F) merge into one
// spectral point; 1e-8 separates genuine degeneracy from round-off at double
// precision while keeping divided-difference nodes well separated.
inline constexpr double kDefaultGroupTol = 1e-8;
// Hermitian inputs may deviate from A = A* by at most this, times (1 + ||A||_F).
inline constexpr double kHermitianCheckTol = 1e-12;

void require_finite(const Matrix& m, const char* where);
bool is_hermitian(const Matrix& m, double tol_factor = kHermitianCheckTol);
void require_hermitian(const Matrix& m, const char* where);

/// Grouped spectral decomposition of a Hermitian matrix: distinct descending
/// eigenvalues with their multiplicities and orthogonal spectral projectors.
/// Invariants: sum of multiplicities = dim, projectors idempotent/Hermitian/
/// complete, sum lambda_i P_i reconstructs the input, and consecutive
/// eigenvalues differ by more than the grouping tolerance used.
struct Spectrum {
  int dim = 0;
  std::vector<double> eigenvalues;
  std::vector<int> multiplicities;
  std::vector<Matrix> projectors;
};

/// Eigendecomposition with eigenvalue clustering.  The input is checked for
/// Hermitian-ness, then symmetrized as (A + A*)/2 so round-off asymmetry
/// cannot leak into the spectrum.  Clusters use the mean as representative.
Spectrum hermitian_eig(const Matrix& a, double group_tol = kDefaultGroupTol);

/// Singular values, descending, length min(rows, cols).
Eigen::VectorXd singular_values(const Matrix& t);

/// f(A) = sum f(lambda_i) P_i for Hermitian A.
Matrix function_calculus(const Matrix& a, const Symbol& f);

/// Haar-like random unitary, deterministic per seed.
Matrix random_unitary(int dim, std::uint64_t seed);

}  // namespace schatten

#endif  // SCHATTEN_CORE_MATRIX_HPP_
