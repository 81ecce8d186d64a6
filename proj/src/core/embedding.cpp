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

#include "core/embedding.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/pnorm.hpp"
#include "core/rng.hpp"

namespace schatten {

void validate_space(const SpaceSpec& space, const char* where) {
  if (space.dim < 1)
    throw std::invalid_argument(std::string(where) + ": space dim must be >= 1");
  require_exponent(space.p, where);
  if (space.kind == SpaceKind::kMatrix && space.field != SpaceField::kComplex)
    throw std::invalid_argument(std::string(where) +
                                ": matrix spaces are complex");
}

namespace {

bool element_shape_ok(const SpaceSpec& space, const Matrix& x) {
  if (space.kind == SpaceKind::kMatrix)
    return x.rows() == space.dim && x.cols() == space.dim;
  return (x.rows() == 1 && x.cols() == space.dim) ||
         (x.cols() == 1 && x.rows() == space.dim);
}

// Row-major flattening; for vector elements this accepts rows and columns.
Eigen::VectorXcd flatten(const Matrix& x) {
  Eigen::VectorXcd v(x.size());
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) v(k++) = x(i, j);
  return v;
}

void require_real_if_needed(const SpaceSpec& space, const Matrix& x,
                            const char* where) {
  if (space.field != SpaceField::kReal) return;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      if (x(i, j).imag() != 0.0)
        throw std::invalid_argument(std::string(where) +
                                    ": element of a real space has an imaginary part");
}

Matrix zero_element(const SpaceSpec& space) {
  return space.kind == SpaceKind::kMatrix ? Matrix::Zero(space.dim, space.dim)
                                          : Matrix::Zero(1, space.dim);
}

}  // namespace

double space_norm(const SpaceSpec& space, const Matrix& element) {
  if (!element_shape_ok(space, element))
    throw DimensionError("space_norm: element does not match the space shape");
  if (space.kind == SpaceKind::kMatrix) return schatten_norm(element, space.p);
  return vector_pnorm(flatten(element), space.p);
}

Matrix EmbeddingMap::apply(const Matrix& x) const {
  if (!element_shape_ok(domain, x))
    throw DimensionError("apply: element does not match the domain shape");
  require_finite(x, "apply");
  require_real_if_needed(domain, x, "apply");
  const Eigen::VectorXcd coeffs = flatten(x);
  Matrix result = zero_element(codomain);
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    result.noalias() += coeffs(k) * basis_images[static_cast<size_t>(k)];
  return result;
}

EmbeddingMap EmbeddingMap::with_exponents(double domain_p, double codomain_p) const {
  require_exponent(domain_p, "with_exponents");
  require_exponent(codomain_p, "with_exponents");
  EmbeddingMap out = *this;
  out.domain.p = domain_p;
  out.codomain.p = codomain_p;
  return out;
}

EmbeddingMap make_embedding(SpaceSpec domain, SpaceSpec codomain,
                            std::vector<Matrix> basis_images) {
  validate_space(domain, "make_embedding domain");
  validate_space(codomain, "make_embedding codomain");
  if (basis_images.size() != static_cast<size_t>(domain.element_count()))
    throw DimensionError(
        "make_embedding: need one basis image per domain basis element");
  for (Matrix& image : basis_images) {
    require_finite(image, "make_embedding image");
    if (codomain.kind == SpaceKind::kVector && image.cols() == 1 && image.rows() > 1)
      image.transposeInPlace();  // store vector images as rows
    if (!element_shape_ok(codomain, image))
      throw DimensionError("make_embedding: image does not match the codomain shape");
    require_real_if_needed(codomain, image, "make_embedding image");
  }
  return EmbeddingMap{domain, codomain, std::move(basis_images)};
}

EmbeddingMap diag_embedding(int m, double p) {
  if (m < 1) throw std::invalid_argument("diag_embedding: m must be >= 1");
  require_exponent(p, "diag_embedding");
  std::vector<Matrix> images;
  images.reserve(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    Matrix e = Matrix::Zero(m, m);
    e(k, k) = 1.0;
    images.push_back(std::move(e));
  }
  return make_embedding({SpaceKind::kVector, m, p, SpaceField::kComplex},
                        {SpaceKind::kMatrix, m, p, SpaceField::kComplex},
                        std::move(images));
}

EmbeddingMap corner_embedding(int m, int n, double p) {
  if (m < 1) throw std::invalid_argument("corner_embedding: m must be >= 1");
  if (m > n) throw std::invalid_argument("corner_embedding: requires m <= n");
  require_exponent(p, "corner_embedding");
  std::vector<Matrix> images;
  images.reserve(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      images.push_back(std::move(e));
    }
  return make_embedding({SpaceKind::kMatrix, m, p, SpaceField::kComplex},
                        {SpaceKind::kMatrix, n, p, SpaceField::kComplex},
                        std::move(images));
}

EmbeddingMap sum_diff_embedding(int n) {
  if (n < 2) throw std::invalid_argument("sum_diff_embedding: n must be >= 2");
  Matrix e1 = Matrix::Zero(1, n);
  Matrix e2 = Matrix::Zero(1, n);
  e1(0, 0) = 1.0;
  e1(0, 1) = 1.0;
  e2(0, 0) = -1.0;
  e2(0, 1) = 1.0;
  const double inf = std::numeric_limits<double>::infinity();
  return make_embedding({SpaceKind::kVector, 2, 1.0, SpaceField::kReal},
                        {SpaceKind::kVector, n, inf, SpaceField::kReal},
                        {std::move(e1), std::move(e2)});
}

EmbeddingMap first_row_embedding(int m, double p) {
  if (m < 1) throw std::invalid_argument("first_row_embedding: m must be >= 1");
  require_exponent(p, "first_row_embedding");
  const int d = m * m;
  std::vector<Matrix> images;
  images.reserve(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) {
    Matrix e = Matrix::Zero(d, d);
    e(0, k) = 1.0;
    images.push_back(std::move(e));
  }
  return make_embedding({SpaceKind::kVector, d, 2.0, SpaceField::kComplex},
                        {SpaceKind::kMatrix, d, p, SpaceField::kComplex},
                        std::move(images));
}

EmbeddingMap vec_embedding(int m) {
  if (m < 1) throw std::invalid_argument("vec_embedding: m must be >= 1");
  const int d = m * m;
  std::vector<Matrix> images;
  images.reserve(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) {
    Matrix e = Matrix::Zero(1, d);
    e(0, k) = 1.0;
    images.push_back(std::move(e));
  }
  return make_embedding({SpaceKind::kMatrix, m, 2.0, SpaceField::kComplex},
                        {SpaceKind::kVector, d, 2.0, SpaceField::kComplex},
                        std::move(images));
}

EmbeddingMap s2_to_sp_embedding(int m, double p) {
  const EmbeddingMap vec = vec_embedding(m);
  const EmbeddingMap row = first_row_embedding(m, p);
  std::vector<Matrix> images;
  images.reserve(vec.basis_images.size());
  for (const Matrix& v : vec.basis_images) images.push_back(row.apply(v));
  return make_embedding({SpaceKind::kMatrix, m, 2.0, SpaceField::kComplex},
                        {SpaceKind::kMatrix, m * m, p, SpaceField::kComplex},
                        std::move(images));
}

EmbeddingMap cubature_embedding_2_4_3() {
  // Three directions at 60 degrees form a projective 2-design in the plane:
  // sum_k <u, v_k>^4 = (9/8) |u|^4, so the constant (8/9)^(1/4) makes the
  // map an isometry of l_2^2(R) into l_4^3(R).
  const double c = std::pow(8.0 / 9.0, 0.25);
  const double third_pi = 1.0471975511965977461542;
  Matrix e1 = Matrix::Zero(1, 3);
  Matrix e2 = Matrix::Zero(1, 3);
  for (int k = 0; k < 3; ++k) {
    e1(0, k) = c * std::cos(k * third_pi);
    e2(0, k) = c * std::sin(k * third_pi);
  }
  return make_embedding({SpaceKind::kVector, 2, 2.0, SpaceField::kReal},
                        {SpaceKind::kVector, 3, 4.0, SpaceField::kReal},
                        {std::move(e1), std::move(e2)});
}

VerifyResult verify_isometry(const EmbeddingMap& map, int samples,
                             std::uint64_t seed, double tol) {
  if (samples < 1)
    throw std::invalid_argument("verify_isometry: samples must be >= 1");
  if (!(tol > 0)) throw std::invalid_argument("verify_isometry: tol must be > 0");

  Rng rng(seed);
  const bool complex_domain = map.domain.field == SpaceField::kComplex;
  Matrix x = zero_element(map.domain);

  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j)
        x(i, j) = complex_domain ? rng.complex_normal()
                                 : std::complex<double>(rng.normal(), 0.0);
    const double dn = space_norm(map.domain, x);
    const double cn = space_norm(map.codomain, map.apply(x));
    const double residual = dn > 0 ? std::abs(cn - dn) / dn : std::abs(cn);
    worst = std::max(worst, residual);
  }
  return {worst, worst <= tol};
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 wide = static_cast<unsigned __int128>(a) * b;
  if (wide > std::numeric_limits<std::uint64_t>::max())
    throw NumericalError("lambda_bound: 64-bit overflow");
  return static_cast<std::uint64_t>(wide);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  // c * (n-k+i) is divisible by i at every step, so the result stays exact.
  for (std::uint64_t i = 1; i <= k; ++i) c = checked_mul(c, n - k + i) / i;
  return c;
}

}  // namespace

std::uint64_t lambda_bound(int m, int p, LambdaField field) {
  if (m < 2) throw std::invalid_argument("lambda_bound: m must be >= 2");
  if (p < 2 || p % 2 != 0)
    throw std::invalid_argument("lambda_bound: p must be a positive even integer");
  const std::uint64_t um = static_cast<std::uint64_t>(m);
  const std::uint64_t up = static_cast<std::uint64_t>(p);
  switch (field) {
    case LambdaField::kReal:
      return binomial(um + up - 1, um - 1);
    case LambdaField::kComplex: {
      const std::uint64_t c = binomial(um + up / 2 - 1, um - 1);
      return checked_mul(c, c);
    }
    case LambdaField::kQuaternion: {
      std::uint64_t a = binomial(2 * um + up / 2 - 2, 2 * um - 2);
      std::uint64_t b = binomial(2 * um + up / 2 - 1, 2 * um - 2);
      std::uint64_t divisor = 2 * um - 1;
      std::uint64_t g = std::gcd(a, divisor);
      a /= g;
      divisor /= g;
      g = std::gcd(b, divisor);
      b /= g;
      divisor /= g;
      if (divisor != 1)
        throw NumericalError(
            "lambda_bound: quaternion case did not reduce to an integer");
      return checked_mul(a, b);
    }
  }
  throw std::invalid_argument("lambda_bound: unknown field");
}

}  // namespace schatten
