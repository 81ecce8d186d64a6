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

#ifndef SCHATTEN_CORE_MOI_HPP_
#define SCHATTEN_CORE_MOI_HPP_

#include <span>

#include "core/matrix.hpp"
#include "core/symbol.hpp"

namespace schatten {

/// Discrete multilinear operator integral
///   sum over index tuples of
///     f^[n](lambda_{i_0}, ..., lambda_{i_n}) P_{i_0} B_1 P_{i_1} ... B_n P_{i_n}
/// with spectral data (eigenvalue clusters and projectors) taken from
/// hermitian_eig of each anchor at group_tol.  anchors.size() must be
/// perturbations.size() + 1 >= 2; anchors Hermitian, all matrices square of
/// one common dimension, and the symbol must supply derivatives up to order n.
/// Direct summation: O(d_0...d_n m^3), fine at desk scale.
Matrix moi_apply(const Symbol& f, std::span<const Matrix> anchors,
                 std::span<const Matrix> perturbations,
                 double group_tol = kDefaultGroupTol);

/// d^2/dt^2 ||A+tB||_p^p at t = 0, evaluated as
/// 2 Re Tr T_{f^[2]}^{A,A,A}(B, B) with f(x) = |x|^p.  Requires Hermitian
/// A, B of equal dimension and finite p >= 2.  An imaginary trace residue
/// beyond 1e-9 * (1 + |trace|) is a numerical failure: the quantity is real.
double second_derivative_schatten(const Matrix& a, const Matrix& b, double p);

/// Central-difference oracle (g(h) - 2 g(0) + g(-h)) / h^2 for
/// g(t) = ||A+tB||_p^p, finite p.  h <= 0 selects the default step
/// 1e-3 * (1 + ||A||) / (1 + ||B||) (operator norms).
double fd_second_derivative(const Matrix& a, const Matrix& b, double p,
                            double h = 0.0);

}  // namespace schatten

#endif  // SCHATTEN_CORE_MOI_HPP_
