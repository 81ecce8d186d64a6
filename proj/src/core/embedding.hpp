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

#ifndef SCHATTEN_CORE_EMBEDDING_HPP_
#define SCHATTEN_CORE_EMBEDDING_HPP_

#include <cstdint>
#include <vector>

#include "core/matrix.hpp"

namespace schatten {

enum class SpaceKind { kVector, kMatrix };
enum class SpaceField { kReal, kComplex };

/// A normed space l_p^dim (vector kind) or S_p^dim (matrix kind, always
/// complex).  Elements travel as matrices: 1 x dim rows for vector spaces,
/// dim x dim for matrix spaces.
struct SpaceSpec {
  SpaceKind kind = SpaceKind::kVector;
  int dim = 1;
  double p = 2.0;
  SpaceField field = SpaceField::kComplex;

  int element_count() const { return kind == SpaceKind::kMatrix ? dim * dim : dim; }
};

void validate_space(const SpaceSpec& space, const char* where);

/// Norm of an element in its space: l_p norm for vector spaces (the element
/// may arrive as 1 x dim or dim x 1), Schatten p-norm for matrix spaces.
double space_norm(const SpaceSpec& space, const Matrix& element);

/// Linear map stored as images of the domain basis (row-major E_ij order for
/// matrix domains).  Storing images rather than a closed-form rule gives all
/// constructors, and user-supplied candidates, one verification and
/// serialization path.
struct EmbeddingMap {
  SpaceSpec domain;
  SpaceSpec codomain;
  std::vector<Matrix> basis_images;

  /// sum_k x_k * basis_images[k]; all maps are linear (never conjugate-linear).
  Matrix apply(const Matrix& x) const;

  /// Same images, re-tagged exponents; used to test a map against a foreign
  /// (q, p) pair in the obstruction pipeline.
  EmbeddingMap with_exponents(double domain_p, double codomain_p) const;
};

/// Validates shapes, fields and finiteness and assembles the map.
EmbeddingMap make_embedding(SpaceSpec domain, SpaceSpec codomain,
                            std::vector<Matrix> basis_images);

EmbeddingMap diag_embedding(int m, double p);
EmbeddingMap corner_embedding(int m, int n, double p);
EmbeddingMap sum_diff_embedding(int n);
EmbeddingMap first_row_embedding(int m, double p);
EmbeddingMap vec_embedding(int m);
EmbeddingMap s2_to_sp_embedding(int m, double p);
EmbeddingMap cubature_embedding_2_4_3();

struct VerifyResult {
  double max_relative_residual = 0.0;
  bool pass = false;
};

/// Draws seeded pseudorandom domain elements and compares the domain norm
/// against the codomain norm of the image; the residual is relative to the
/// domain norm.
VerifyResult verify_isometry(const EmbeddingMap& map, int samples,
                             std::uint64_t seed, double tol);

enum class LambdaField { kReal, kComplex, kQuaternion };

/// Lambda(m, p) for even p >= 2 and m >= 2: the binomial bound on codomain
/// dimensions reached by cubature-formula embeddings of l_2^m into l_p^n.
/// Exact 64-bit integer arithmetic with overflow detection; the quaternion
/// case divides by 2m-1 and reports a non-integer outcome as a numerical
/// consistency failure.
std::uint64_t lambda_bound(int m, int p, LambdaField field);

}  // namespace schatten

#endif  // SCHATTEN_CORE_EMBEDDING_HPP_
