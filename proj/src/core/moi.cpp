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
#include <limits>
#include <stdexcept>
#include <vector>

#include "core/errors.hpp"
#include "core/pnorm.hpp"

namespace schatten {

namespace {

// Accumulates terms over index tuples, reusing the left partial product
// P_{i_0} B_1 P_{i_1} ... at each recursion level.
void moi_walk(const Symbol& f, const std::vector<Spectrum>& spectra,
              std::span<const Matrix> perturbations, size_t level,
              const Matrix& left, std::vector<double>& nodes, Matrix& result) {
  const Spectrum& spec = spectra[level];
  const bool last = level == spectra.size() - 1;
  for (size_t i = 0; i < spec.projectors.size(); ++i) {
    nodes.push_back(spec.eigenvalues[i]);
    Matrix next = level == 0 ? spec.projectors[i]
                             : Matrix(left * perturbations[level - 1] *
                                      spec.projectors[i]);
    if (last) {
      result.noalias() += divided_difference(f, nodes) * next;
    } else {
      moi_walk(f, spectra, perturbations, level + 1, next, nodes, result);
    }
    nodes.pop_back();
  }
}

}  // namespace

Matrix moi_apply(const Symbol& f, std::span<const Matrix> anchors,
                 std::span<const Matrix> perturbations, double group_tol) {
  if (anchors.size() < 2 || anchors.size() != perturbations.size() + 1)
    throw std::invalid_argument(
        "moi_apply: need n+1 anchors and n >= 1 perturbations");
  const size_t n = perturbations.size();
  if (f.max_order() < static_cast<int>(n))
    throw std::invalid_argument("moi_apply: symbol derivative order insufficient");

  const Eigen::Index dim = anchors[0].rows();
  for (const Matrix& a : anchors) {
    require_hermitian(a, "moi_apply anchor");
    if (a.rows() != dim)
      throw DimensionError("moi_apply: anchors must share one dimension");
  }
  for (const Matrix& b : perturbations) {
    require_finite(b, "moi_apply perturbation");
    if (b.rows() != dim || b.cols() != dim)
      throw DimensionError("moi_apply: perturbations must match the anchor dimension");
  }

  std::vector<Spectrum> spectra;
  spectra.reserve(anchors.size());
  for (const Matrix& a : anchors) spectra.push_back(hermitian_eig(a, group_tol));

  Matrix result = Matrix::Zero(dim, dim);
  std::vector<double> nodes;
  nodes.reserve(anchors.size());
  moi_walk(f, spectra, perturbations, 0, Matrix(), nodes, result);
  return result;
}

double second_derivative_schatten(const Matrix& a, const Matrix& b, double p) {
  if (!std::isfinite(p) || p < 2)
    throw std::invalid_argument(
        "second_derivative_schatten: requires finite p >= 2");
  require_hermitian(a, "second_derivative_schatten");
  require_hermitian(b, "second_derivative_schatten");
  if (a.rows() != b.rows())
    throw DimensionError("second_derivative_schatten: dimension mismatch");

  const Matrix anchors_arr[] = {a, a, a};
  const Matrix perturbations_arr[] = {b, b};
  const Matrix m = moi_apply(Symbol::abs_pow(p), anchors_arr, perturbations_arr);
  const std::complex<double> tr = m.trace();
  if (std::abs(tr.imag()) > 1e-9 * (1.0 + std::abs(tr)))
    throw NumericalError(
        "second_derivative_schatten: imaginary trace residue beyond tolerance");
  return 2.0 * tr.real();
}

double fd_second_derivative(const Matrix& a, const Matrix& b, double p, double h) {
  if (!std::isfinite(p) || !(p > 0))
    throw std::invalid_argument("fd_second_derivative: requires finite p > 0");
  require_finite(a, "fd_second_derivative");
  require_finite(b, "fd_second_derivative");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("fd_second_derivative: dimension mismatch");
  if (h <= 0.0) {
    h = 1e-3 * (1.0 + schatten_norm(a, std::numeric_limits<double>::infinity())) /
        (1.0 + schatten_norm(b, std::numeric_limits<double>::infinity()));
  }
  auto g = [&](double t) { return std::pow(schatten_norm(a + t * b, p), p); };
  return (g(h) - 2.0 * g(0.0) + g(-h)) / (h * h);
}

}  // namespace schatten
