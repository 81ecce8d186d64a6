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

#ifndef SCHATTEN_TESTS_HELPERS_HPP_
#define SCHATTEN_TESTS_HELPERS_HPP_

#include <complex>

#include "core/matrix.hpp"
#include "core/rng.hpp"

namespace schatten::test {

inline Matrix random_complex(int rows, int cols, Rng& rng) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
  return m;
}

inline Matrix random_hermitian(int dim, Rng& rng) {
  const Matrix g = random_complex(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

// Unit Frobenius norm; keeps finite-difference truncation terms small.
inline Matrix random_hermitian_unit(int dim, Rng& rng) {
  Matrix h = random_hermitian(dim, rng);
  const double norm = h.norm();
  if (norm > 0) h /= norm;
  return h;
}

inline Matrix pauli_x() {
  Matrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  return x;
}

}  // namespace schatten::test

#endif  // SCHATTEN_TESTS_HELPERS_HPP_
