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

#ifndef SCHATTEN_CORE_OBSTRUCTION_HPP_
#define SCHATTEN_CORE_OBSTRUCTION_HPP_

#include <complex>
#include <span>
#include <vector>

#include "core/embedding.hpp"
#include "core/matrix.hpp"

namespace schatten {

/// Hermitian pair produced by the doubling construction, tagged with the
/// exponents (q, p) it is supposed to witness: an isometry l_q^2 -> S_p^n
/// forces (1+|t|^q)^{p/q} = ||A+tB||_p^p for all real t.
struct CandidatePair {
  Matrix a;
  Matrix b;
  double q = 2.0;  // finite
  double p = 2.0;  // finite, or infinity for the norm-form identity
};

/// Doubling: J(a) = 2^(-1/p) [[0, M(a)], [M(a)*, 0]] with
/// M(a) = a_1 T(e_1) + a_2 T(e_2); returns (J(e_1), J(e_2)).  Requires a
/// 2-dimensional vector domain, a matrix codomain, and finite exponents
/// (no p = infinity normalization is defined for the prefactor).
CandidatePair double_map(const EmbeddingMap& t);

/// J applied to an arbitrary coefficient pair, for identity checks.
Matrix doubled_element(const EmbeddingMap& t, std::complex<double> a1,
                       std::complex<double> a2);

struct ProfileRow {
  double t = 0.0;
  double target = 0.0;
  double actual = 0.0;
  double residual = 0.0;  // |target - actual| / (1 + |target|)
};

/// Scalar-identity residuals over the grid.  Finite p compares p-th powers
/// (1+|t|^q)^{p/q} against ||A+tB||_p^p; p = infinity compares the norm form
/// (1+|t|^q)^{1/q} against the operator norm.
std::vector<ProfileRow> scalar_identity_residual(const CandidatePair& pair,
                                                 std::span<const double> t_grid);

/// Eigenvalues of A + tB over a strictly increasing grid, matched across
/// adjacent grid points into continuous trajectories.  Matching minimizes
/// displacement from first-order predicted positions (previous value plus
/// estimated slope times the step), which reduces to plain nearest matching
/// on the first step and follows analytic curves through crossings.
struct CurveSet {
  std::vector<double> t;
  std::vector<std::vector<double>> curves;  // curves[i][k]: trajectory i at t[k]
};
CurveSet eigenvalue_curves(const CandidatePair& pair,
                           std::span<const double> t_grid);

/// Comparison of the second derivative of the scalar identity at t = 0.
/// Target side, differentiating (1+|t|^q)^{p/q} analytically: divergent for
/// q < 2, p at q = 2, zero for q > 2.  Actual side: the operator-integral
/// trace formula (requires finite p >= 2).
struct D2Check {
  bool target_diverges = false;
  double target = 0.0;  // meaningful only when !target_diverges
  double actual = 0.0;
  bool consistent = false;
};
D2Check second_derivative_obstruction(const CandidatePair& pair,
                                      double tol = 1e-6);

enum class Verdict {
  kConsistent,
  kFailsScalarIdentity,
  kFailsD2Divergence,
  kFailsD2Nonzero,
  kInconclusive,
};
const char* to_string(Verdict verdict);

/// Log-spaced near zero to probe derivative behavior, moderate |t| for the
/// global identity: {0, +-1e-4, +-1e-3, +-1e-2, +-0.1, +-0.25, +-0.5, +-1, +-2}.
std::vector<double> default_t_grid();

struct ObstructionConfig {
  std::vector<double> t_grid = default_t_grid();
  double tol = 1e-6;  // relative verdict tolerance
};

struct ObstructionReport {
  double q = 0.0;
  double p = 0.0;
  double tol = 0.0;
  std::vector<ProfileRow> residual_profile;  // sorted by t
  double max_residual = 0.0;
  bool d2_applicable = false;  // false: d2 fields are NOT_APPLICABLE
  bool d2_diverges = false;
  double d2_target = 0.0;
  double d2_actual = 0.0;
  Verdict verdict = Verdict::kInconclusive;
};

/// Full pipeline on a candidate T : l_q^2 -> S_p^n (exponents from the map's
/// spaces): doubling, grid residuals, then the derivative comparison when
/// finite p >= 2 and q > 1 (the range where the limit relation holds).
/// A divergent target at q in (1,2) is a parameter-level obstruction and
/// outranks the grid evidence; otherwise a failed grid outranks a nonzero
/// second derivative.
ObstructionReport check_candidate(const EmbeddingMap& t,
                                  const ObstructionConfig& config = {});

}  // namespace schatten

#endif  // SCHATTEN_CORE_OBSTRUCTION_HPP_
