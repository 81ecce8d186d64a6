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

#include "core/pnorm.hpp"

#include <cmath>
#include <stdexcept>

namespace schatten {

bool is_valid_exponent(double p) {
  return (std::isfinite(p) && p > 0) || (std::isinf(p) && p > 0);
}

void require_exponent(double p, const char* where) {
  if (!is_valid_exponent(p))
    throw std::invalid_argument(std::string(where) +
                                ": exponent must be > 0 or infinity");
}

namespace {

// p-norm of nonnegative magnitudes, scaled by the largest to stay inside the
// double range.  Values below 1e-14 * max are exact zeros; without this,
// p < 1 amplifies SVD round-off of structurally zero singular values far
// above the verification tolerances.
double pnorm_of_magnitudes(const Eigen::VectorXd& mags, double p) {
  const double top = mags.size() > 0 ? mags.maxCoeff() : 0.0;
  if (top <= 0.0) return 0.0;
  if (std::isinf(p)) return top;
  const double cutoff = 1e-14 * top;
  double sum = 0.0;
  for (Eigen::Index k = 0; k < mags.size(); ++k)
    if (mags(k) >= cutoff) sum += std::pow(mags(k) / top, p);
  return top * std::pow(sum, 1.0 / p);
}

}  // namespace

double schatten_norm(const Matrix& t, double p) {
  require_exponent(p, "schatten_norm");
  return pnorm_of_magnitudes(singular_values(t), p);
}

double vector_pnorm(const Eigen::VectorXcd& v, double p) {
  require_exponent(p, "vector_pnorm");
  if (!v.allFinite())
    throw std::invalid_argument("vector_pnorm: entries must be finite");
  return pnorm_of_magnitudes(v.cwiseAbs(), p);
}

double vector_pnorm(const Eigen::VectorXd& v, double p) {
  return vector_pnorm(Eigen::VectorXcd(v.cast<std::complex<double>>()), p);
}

}  // namespace schatten
