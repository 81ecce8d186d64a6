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

#ifndef SCHATTEN_CORE_PNORM_HPP_
#define SCHATTEN_CORE_PNORM_HPP_

#include "core/matrix.hpp"

namespace schatten {

/// Exponents are plain doubles: any finite value > 0, or +infinity for the
/// sup/operator norm.  For p < 1 the same functions compute the p-quasi-norm.
bool is_valid_exponent(double p);
void require_exponent(double p, const char* where);

/// Schatten p-(quasi)norm: (sum s_k^p)^(1/p) over singular values, largest
/// singular value at p = infinity.  Singular values below 1e-14 * s_1 count
/// as exact zeros before powers are taken.
double schatten_norm(const Matrix& t, double p);

/// l_p (quasi)norm of a vector, max modulus at p = infinity.
double vector_pnorm(const Eigen::VectorXcd& v, double p);
double vector_pnorm(const Eigen::VectorXd& v, double p);

}  // namespace schatten

#endif  // SCHATTEN_CORE_PNORM_HPP_
