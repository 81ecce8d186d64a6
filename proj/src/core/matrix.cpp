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

#include "core/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace schatten {

void require_finite(const Matrix& m, const char* where) {
  if (!m.allFinite())
    throw std::invalid_argument(std::string(where) + ": entries must be finite");
}

bool is_hermitian(const Matrix& m, double tol_factor) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= tol_factor * (1.0 + m.norm());
}

void require_hermitian(const Matrix& m, const char* where) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(where) + ": matrix must be square");
  require_finite(m, where);
  if (!is_hermitian(m))
    throw NotHermitianError(std::string(where) + ": matrix is not Hermitian");
}

Spectrum hermitian_eig(const Matrix& a, double group_tol) {
  require_hermitian(a, "hermitian_eig");
  if (!(group_tol >= 0))
    throw std::invalid_argument("hermitian_eig: group_tol must be >= 0");

  const Matrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw NumericalError("hermitian_eig: eigensolver did not converge");

  const int dim = static_cast<int>(a.rows());
  const double merge_tol = group_tol * (1.0 + a.norm());

  Spectrum spec;
  spec.dim = dim;
  // Eigen returns ascending order; walk from the top for descending clusters.
  int hi = dim - 1;
  while (hi >= 0) {
    int lo = hi;
    while (lo > 0 && solver.eigenvalues()(lo) - solver.eigenvalues()(lo - 1) <= merge_tol)
      --lo;
    double mean = 0.0;
    Matrix projector = Matrix::Zero(dim, dim);
    for (int k = lo; k <= hi; ++k) {
      mean += solver.eigenvalues()(k);
      const Eigen::VectorXcd v = solver.eigenvectors().col(k);
      projector.noalias() += v * v.adjoint();
    }
    mean /= static_cast<double>(hi - lo + 1);
    spec.eigenvalues.push_back(mean);
    spec.multiplicities.push_back(hi - lo + 1);
    spec.projectors.push_back(std::move(projector));
    hi = lo - 1;
  }
  return spec;
}

Eigen::VectorXd singular_values(const Matrix& t) {
  require_finite(t, "singular_values");
  Eigen::JacobiSVD<Matrix> svd(t);
  return svd.singularValues();
}

Matrix function_calculus(const Matrix& a, const Symbol& f) {
  const Spectrum spec = hermitian_eig(a);
  Matrix result = Matrix::Zero(spec.dim, spec.dim);
  for (size_t i = 0; i < spec.eigenvalues.size(); ++i)
    result.noalias() += f.value(spec.eigenvalues[i]) * spec.projectors[i];
  return result;
}

Matrix random_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("random_unitary: dim must be >= 1");
  Rng rng(seed);
  Matrix z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = rng.complex_normal();

  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix u = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
  // Fixing the phases of R's diagonal makes the distribution Haar-like and
  // the result independent of QR sign conventions.
  for (int i = 0; i < dim; ++i) {
    const std::complex<double> d = r(i, i);
    const double mag = std::abs(d);
    u.col(i) *= mag > 0 ? d / mag : std::complex<double>(1.0, 0.0);
  }
  return u;
}

}  // namespace schatten
