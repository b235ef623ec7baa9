// Copyright 2026 The orx Authors
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

#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "orx/linalg.hpp"
#include "orx/proxreg.hpp"
#include "orx/types.hpp"

namespace orx {

/// Outlier-regularized linear regression.
///
/// Fits the affine prediction f_i = a'x_i + b while regularizing the targets:
/// targets whose residual against the current fit exceeds delta are clamped to
/// the tolerance band, and the fit and the clamped targets are alternated
/// until the objective
///   ||y - ytilde||_1 + (1/2 delta) ||ytilde - (a'X + b)||^2
/// stops changing. Each alternation step exactly minimizes its block, so the
/// objective trace is non-increasing.
struct OrlrConfig {
  Tolerance delta;
  int max_iters = 200;
  /// Relative objective change below which the loop stops. 0 disables the
  /// objective stop entirely: the loop then runs until the regularized
  /// targets are bitwise stationary (an exact fixed point) or max_iters.
  double tol = 1e-10;
  bool record_trace = true;
};

struct OrlrResult {
  Vector a;                           ///< slope, length p
  double b = 0.0;                     ///< intercept
  Vector y_tilde;                     ///< regularized targets, length n
  BoolVector outlier_mask;            ///< true where |y_i - f_i| > delta at the final fit
  std::vector<double> objective_trace;
  int iterations = 0;
  bool converged = false;
};

/// Warm start for fit_orlr: the regularized targets are recomputed from
/// (a, b) before the first regression step.
struct AffineInit {
  Vector a;
  double b = 0.0;
};

/// Ordinary least squares of t against the columns of X with an intercept,
/// i.e. the minimizer of ||t' - (a'X + b)||^2. Solved through the augmented
/// design [X; 1'] with a rank-tolerant SVD (cutoff 1e-12 * sigma_max), so
/// rank-deficient systems yield the minimum-norm solution instead of failing.
inline std::pair<Vector, double> ols_fit(const Matrix& X, const Vector& t) {
  require(X.cols() == t.size(), "ols_fit: X columns and t length differ");
  require_finite(X, "ols_fit: X");
  require_finite(t, "ols_fit: t");

  const Index p = X.rows();
  const Index n = X.cols();
  Matrix design(n, p + 1);  // rows are samples [x_i' 1]
  design.leftCols(p) = X.transpose();
  design.col(p).setOnes();
  const Vector w = detail::pinv_solve(design, t);
  return {w.head(p), w(p)};
}

/// ORLR objective ||y - z||_1 + (1/2 delta) ||z - (a'X + b)||^2.
inline double objective_orlr(const Vector& y, const Vector& z, const Vector& a, double b,
                             const Matrix& X, const Tolerance& delta) {
  require(X.rows() == a.size(), "objective_orlr: X rows and a length differ");
  require(X.cols() == y.size(), "objective_orlr: X columns and y length differ");
  const Vector f = X.transpose() * a + Vector::Constant(X.cols(), b);
  return objective_prox(y, z, f, delta);
}

inline OrlrResult fit_orlr(const Matrix& X, const Vector& y, const OrlrConfig& cfg,
                           const std::optional<AffineInit>& init = std::nullopt) {
  require(X.cols() == y.size(), "fit_orlr: X columns and y length differ");
  require(cfg.max_iters >= 1, "fit_orlr: max_iters must be >= 1");
  require(cfg.tol >= 0.0, "fit_orlr: tol must be >= 0");
  require_finite(X, "fit_orlr: X");
  require_finite(y, "fit_orlr: y");

  const Index n = X.cols();
  const double d = cfg.delta.value();
  const Vector ones = Vector::Ones(n);

  Vector y_tilde = y;
  if (init) {
    require(init->a.size() == X.rows(), "fit_orlr: warm-start slope length differs from X rows");
    const Vector f0 = X.transpose() * init->a + init->b * ones;
    for (Index i = 0; i < n; ++i) y_tilde(i) = detail::clamp_unchecked(y(i), f0(i), d);
  }

  OrlrResult res;
  double prev_obj = 0.0;
  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    auto [a, b] = ols_fit(X, y_tilde);
    const Vector f = X.transpose() * a + b * ones;

    Vector y_next(n);
    for (Index i = 0; i < n; ++i) y_next(i) = detail::clamp_unchecked(y(i), f(i), d);

    const double obj = objective_prox(y, y_next, f, cfg.delta);
    if (cfg.record_trace) res.objective_trace.push_back(obj);

    const bool fixed_point = (y_next.array() == y_tilde.array()).all();
    res.a = std::move(a);
    res.b = b;
    y_tilde = std::move(y_next);
    res.iterations = iter;

    // Near the fixed point the per-iteration improvement quantizes to zero in
    // the objective's floating-point resolution while the parameters are still
    // drifting, so the objective stop is skipped when tol is 0.
    const bool objective_stop =
        cfg.tol > 0.0 && iter >= 2 && detail::relative_change(prev_obj, obj) <= cfg.tol;
    if (fixed_point || objective_stop) {
      res.converged = true;
      break;
    }
    prev_obj = obj;
  }

  const Vector f = X.transpose() * res.a + res.b * ones;
  res.outlier_mask.resize(n);
  for (Index i = 0; i < n; ++i)
    res.outlier_mask(i) = detail::is_outlier_unchecked(y(i), f(i), d);
  res.y_tilde = std::move(y_tilde);
  return res;
}

/// Default continuation schedule for l1_regression: {1, 0.1, 0.01, 0.001}
/// times the median absolute residual of the plain least-squares fit.
inline std::vector<double> default_l1_schedule(const Matrix& X, const Vector& y) {
  auto [a, b] = ols_fit(X, y);
  Vector r = (y - X.transpose() * a - Vector::Constant(y.size(), b)).cwiseAbs();
  std::sort(r.begin(), r.end());
  const double med = r.size() == 0 ? 0.0 : r(r.size() / 2);
  const double base = med > 0.0 ? med : r.size() > 0 ? r(r.size() - 1) : 0.0;
  if (base <= 0.0) return {};  // exact fit; caller short-circuits
  return {base, 0.1 * base, 0.01 * base, 0.001 * base};
}

/// Approximate L1 regression min ||y - (a'X + b)||_1 via delta continuation:
/// fit_orlr is run along a strictly decreasing delta schedule, each stage
/// warm-started from the previous one.
inline std::pair<Vector, double> l1_regression(const Matrix& X, const Vector& y,
                                               const std::vector<double>& schedule) {
  require(!schedule.empty(), "l1_regression: schedule must be non-empty");
  for (std::size_t s = 0; s < schedule.size(); ++s) {
    require(std::isfinite(schedule[s]) && schedule[s] > 0.0,
            "l1_regression: schedule entries must be finite and > 0");
    if (s > 0)
      require(schedule[s] < schedule[s - 1], "l1_regression: schedule must be strictly decreasing");
  }

  std::optional<AffineInit> warm;
  Vector a;
  double b = 0.0;
  for (const double d : schedule) {
    OrlrConfig cfg{Tolerance(d)};
    cfg.record_trace = false;
    OrlrResult r = fit_orlr(X, y, cfg, warm);
    a = r.a;
    b = r.b;
    warm = AffineInit{a, b};
  }
  return {a, b};
}

inline std::pair<Vector, double> l1_regression(const Matrix& X, const Vector& y) {
  const std::vector<double> schedule = default_l1_schedule(X, y);
  if (schedule.empty()) return ols_fit(X, y);  // residuals all zero
  return l1_regression(X, y, schedule);
}

}  // namespace orx
