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

#include "core/obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/moi.hpp"
#include "core/pnorm.hpp"

namespace schatten {

namespace {

void validate_pair(const CandidatePair& pair, const char* where) {
  require_hermitian(pair.a, where);
  require_hermitian(pair.b, where);
  if (pair.a.rows() != pair.b.rows())
    throw DimensionError(std::string(where) + ": pair dimension mismatch");
  if (!std::isfinite(pair.q) || !(pair.q > 0))
    throw std::invalid_argument(std::string(where) + ": q must be finite and > 0");
  require_exponent(pair.p, where);
}

void validate_candidate_map(const EmbeddingMap& t, const char* where) {
  if (t.domain.kind != SpaceKind::kVector || t.domain.dim != 2)
    throw std::invalid_argument(std::string(where) +
                                ": candidate domain must be a 2-dimensional vector space");
  if (t.codomain.kind != SpaceKind::kMatrix)
    throw std::invalid_argument(std::string(where) +
                                ": candidate codomain must be a matrix space");
  if (!std::isfinite(t.codomain.p))
    throw std::invalid_argument(std::string(where) +
                                ": p = infinity is rejected, the doubling prefactor "
                                "2^(-1/p) has no defined limit convention");
  if (!std::isfinite(t.domain.p))
    throw std::invalid_argument(std::string(where) + ": q must be finite");
}

}  // namespace

Matrix doubled_element(const EmbeddingMap& t, std::complex<double> a1,
                       std::complex<double> a2) {
  validate_candidate_map(t, "doubled_element");
  const int n = t.codomain.dim;
  const Matrix block = a1 * t.basis_images[0] + a2 * t.basis_images[1];
  const double prefactor = std::pow(2.0, -1.0 / t.codomain.p);
  Matrix j = Matrix::Zero(2 * n, 2 * n);
  j.block(0, n, n, n) = prefactor * block;
  j.block(n, 0, n, n) = prefactor * block.adjoint();
  return j;
}

CandidatePair double_map(const EmbeddingMap& t) {
  validate_candidate_map(t, "double_map");
  return {doubled_element(t, 1.0, 0.0), doubled_element(t, 0.0, 1.0),
          t.domain.p, t.codomain.p};
}

std::vector<ProfileRow> scalar_identity_residual(const CandidatePair& pair,
                                                 std::span<const double> t_grid) {
  validate_pair(pair, "scalar_identity_residual");
  const bool finite_p = std::isfinite(pair.p);
  std::vector<ProfileRow> profile;
  profile.reserve(t_grid.size());
  for (double t : t_grid) {
    if (!std::isfinite(t))
      throw std::invalid_argument("scalar_identity_residual: grid must be finite");
    const double base = 1.0 + std::pow(std::abs(t), pair.q);
    ProfileRow row;
    row.t = t;
    if (finite_p) {
      row.target = std::pow(base, pair.p / pair.q);
      row.actual = std::pow(schatten_norm(pair.a + t * pair.b, pair.p), pair.p);
    } else {
      row.target = std::pow(base, 1.0 / pair.q);
      row.actual = schatten_norm(pair.a + t * pair.b, pair.p);
    }
    row.residual = std::abs(row.target - row.actual) / (1.0 + std::abs(row.target));
    profile.push_back(row);
  }
  return profile;
}

CurveSet eigenvalue_curves(const CandidatePair& pair,
                           std::span<const double> t_grid) {
  validate_pair(pair, "eigenvalue_curves");
  if (t_grid.empty())
    throw std::invalid_argument("eigenvalue_curves: grid must be non-empty");
  for (size_t k = 0; k + 1 < t_grid.size(); ++k)
    if (!(t_grid[k] < t_grid[k + 1]))
      throw std::invalid_argument("eigenvalue_curves: grid must be strictly increasing");

  const int dim = static_cast<int>(pair.a.rows());
  CurveSet set;
  set.t.assign(t_grid.begin(), t_grid.end());
  set.curves.assign(static_cast<size_t>(dim), {});

  auto eigenvalues_desc = [&](double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(pair.a + t * pair.b,
                                                 Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw NumericalError("eigenvalue_curves: eigensolver did not converge");
    Eigen::VectorXd v = solver.eigenvalues();
    return Eigen::VectorXd(v.reverse());
  };

  const double b_norm = schatten_norm(pair.b, std::numeric_limits<double>::infinity());

  std::vector<double> value(static_cast<size_t>(dim), 0.0);
  std::vector<double> slope(static_cast<size_t>(dim), 0.0);
  for (size_t k = 0; k < t_grid.size(); ++k) {
    const Eigen::VectorXd evals = eigenvalues_desc(t_grid[k]);
    if (k == 0) {
      for (int i = 0; i < dim; ++i) value[static_cast<size_t>(i)] = evals(i);
    } else {
      const double dt = t_grid[k] - t_grid[k - 1];
      // Rank trajectories by predicted position and hand the r-th largest
      // eigenvalue to the r-th ranked trajectory; for real values this is
      // the assignment minimizing total displacement from the predictions,
      // and it follows analytic branches through crossings.
      std::vector<size_t> order(static_cast<size_t>(dim));
      std::iota(order.begin(), order.end(), size_t{0});
      auto rank_by = [&](bool predicted) {
        std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) {
          const double si = predicted ? slope[i] : 0.0;
          const double sj = predicted ? slope[j] : 0.0;
          return value[i] + si * dt > value[j] + sj * dt;
        });
      };
      rank_by(true);
      // Weyl guarantees a matching with jumps <= ||B|| dt; if stale slopes
      // ever propose worse, fall back to plain sorted matching, which always
      // meets that bound.
      const double weyl = b_norm * dt + 1e-12 * (1.0 + b_norm);
      double worst = 0.0;
      for (int r = 0; r < dim; ++r)
        worst = std::max(worst, std::abs(evals(r) - value[order[static_cast<size_t>(r)]]));
      if (worst > weyl) rank_by(false);
      for (int r = 0; r < dim; ++r) {
        const size_t i = order[static_cast<size_t>(r)];
        slope[i] = (evals(r) - value[i]) / dt;
        value[i] = evals(r);
      }
    }
    for (int i = 0; i < dim; ++i)
      set.curves[static_cast<size_t>(i)].push_back(value[static_cast<size_t>(i)]);
  }
  return set;
}

D2Check second_derivative_obstruction(const CandidatePair& pair, double tol) {
  validate_pair(pair, "second_derivative_obstruction");
  if (!std::isfinite(pair.p) || pair.p < 2)
    throw std::invalid_argument(
        "second_derivative_obstruction: requires finite p >= 2");
  if (!(tol > 0))
    throw std::invalid_argument("second_derivative_obstruction: tol must be > 0");

  D2Check check;
  check.actual = second_derivative_schatten(pair.a, pair.b, pair.p);
  if (pair.q < 2) {
    // (1+|t|^q)^{p/q} has divergent second derivative at 0; no finite value
    // on the operator side can match.
    check.target_diverges = true;
    check.target = std::numeric_limits<double>::quiet_NaN();
    check.consistent = false;
    return check;
  }
  check.target = pair.q == 2 ? pair.p : 0.0;
  check.consistent =
      std::abs(check.actual - check.target) <= tol * (1.0 + std::abs(check.target));
  return check;
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kConsistent:
      return "CONSISTENT";
    case Verdict::kFailsScalarIdentity:
      return "FAILS_SCALAR_IDENTITY";
    case Verdict::kFailsD2Divergence:
      return "FAILS_D2_DIVERGENCE";
    case Verdict::kFailsD2Nonzero:
      return "FAILS_D2_NONZERO";
    case Verdict::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::vector<double> default_t_grid() {
  return {-2.0,  -1.0,   -0.5,   -0.25,  -0.1, -0.01, -0.001, -0.0001, 0.0,
          0.0001, 0.001, 0.01,   0.1,    0.25, 0.5,   1.0,    2.0};
}

ObstructionReport check_candidate(const EmbeddingMap& t,
                                  const ObstructionConfig& config) {
  validate_candidate_map(t, "check_candidate");
  if (!(config.tol > 0))
    throw std::invalid_argument("check_candidate: tol must be > 0");

  const CandidatePair pair = double_map(t);

  std::vector<double> grid(config.t_grid.begin(), config.t_grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  ObstructionReport report;
  report.q = pair.q;
  report.p = pair.p;
  report.tol = config.tol;
  report.residual_profile = scalar_identity_residual(pair, grid);
  for (const ProfileRow& row : report.residual_profile)
    report.max_residual = std::max(report.max_residual, row.residual);

  // The derivative comparison is meaningful where the limit relation holds:
  // finite p >= 2 and q > 1.
  report.d2_applicable = std::isfinite(pair.p) && pair.p >= 2 && pair.q > 1;
  bool d2_consistent = true;
  if (report.d2_applicable) {
    const D2Check d2 = second_derivative_obstruction(pair, config.tol);
    report.d2_diverges = d2.target_diverges;
    report.d2_target = d2.target;
    report.d2_actual = d2.actual;
    d2_consistent = d2.consistent;
  }

  const bool scalar_ok = report.max_residual <= config.tol;
  if (report.d2_applicable && report.d2_diverges) {
    report.verdict = Verdict::kFailsD2Divergence;
  } else if (!scalar_ok) {
    report.verdict = Verdict::kFailsScalarIdentity;
  } else if (report.d2_applicable && !d2_consistent) {
    report.verdict = Verdict::kFailsD2Nonzero;
  } else if (report.residual_profile.empty() && !report.d2_applicable) {
    report.verdict = Verdict::kInconclusive;
  } else {
    report.verdict = Verdict::kConsistent;
  }
  return report;
}

}  // namespace schatten
