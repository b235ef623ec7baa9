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

#include <cmath>

#include "orx/types.hpp"

namespace orx {

namespace detail {

// Shared scalar kernel: the outlier branch and the shrinkage route must use
// one floating-point expression graph so that
//   clamp(y, f, delta) == y + soft_threshold(f - y, delta)
// holds bit-for-bit, and the pass-through branch returns y unmodified
// (including the sign of zero).
inline double clamp_unchecked(double y, double f, double delta) {
  const double mag = std::abs(f - y) - delta;
  if (!(mag > 0.0)) return y;
  return y + std::copysign(mag, f - y);
}

inline bool is_outlier_unchecked(double y, double f, double delta) {
  return std::abs(f - y) - delta > 0.0;
}

}  // namespace detail

/// Soft-thresholding map sign(t) * max(|t| - delta, 0), the proximal operator
/// of delta * |.|. Uses the convention sign(0) = 0.
inline double soft_threshold(double t, const Tolerance& delta) {
  if (!std::isfinite(t)) throw std::invalid_argument("soft_threshold: t must be finite");
  const double mag = std::abs(t) - delta.value();
  return mag > 0.0 ? std::copysign(mag, t) : 0.0;
}

/// Outlier regularization of a scalar measurement y against its prediction f:
/// y passes through unchanged when |y - f| <= delta (ties included), and is
/// pulled back to the tolerance boundary f + delta * sign(y - f) otherwise.
inline double regularize_scalar(double y, double f, const Tolerance& delta) {
  if (!std::isfinite(y) || !std::isfinite(f))
    throw std::invalid_argument("regularize_scalar: y and f must be finite");
  return detail::clamp_unchecked(y, f, delta.value());
}

/// Element-wise outlier regularization of X against the prediction F.
struct RegularizationOutcome {
  Matrix regularized;      ///< Z, same shape as X
  BoolMatrix outlier_mask; ///< true where |X_ij - F_ij| > delta
  Index num_outliers = 0;
};

inline RegularizationOutcome regularize_matrix(const Matrix& X, const Matrix& F,
                                               const Tolerance& delta) {
  require_same_shape(X, F, "regularize_matrix");
  require_finite(X, "regularize_matrix: X");
  require_finite(F, "regularize_matrix: F");

  const double d = delta.value();
  RegularizationOutcome out;
  out.regularized.resize(X.rows(), X.cols());
  out.outlier_mask.resize(X.rows(), X.cols());
  Index count = 0;
  for (Index j = 0; j < X.cols(); ++j) {
    for (Index i = 0; i < X.rows(); ++i) {
      const double y = X(i, j);
      const double f = F(i, j);
      const bool outlier = detail::is_outlier_unchecked(y, f, d);
      out.outlier_mask(i, j) = outlier;
      out.regularized(i, j) = detail::clamp_unchecked(y, f, d);
      count += outlier ? 1 : 0;
    }
  }
  out.num_outliers = count;
  return out;
}

/// Minimizer of ||y - z||_1 + (1/2 delta) ||z - f||^2 over z, in closed form
/// z_i = y_i + soft_threshold(f_i - y_i, delta). Agrees with
/// regularize_matrix on the same inputs bit-for-bit.
inline Vector variational_solve(const Vector& y, const Vector& f, const Tolerance& delta) {
  require_same_size(y, f, "variational_solve");
  require_finite(y, "variational_solve: y");
  require_finite(f, "variational_solve: f");

  const double d = delta.value();
  Vector z(y.size());
  for (Index i = 0; i < y.size(); ++i) z(i) = detail::clamp_unchecked(y(i), f(i), d);
  return z;
}

/// Objective of the variational representation,
/// sum_i |y_i - z_i| + (1/2 delta) sum_i (z_i - f_i)^2.
/// Accumulated in extended precision; objective traces are compared at
/// 1e-12 absolute slack downstream.
inline double objective_prox(const Vector& y, const Vector& z, const Vector& f,
                             const Tolerance& delta) {
  require_same_size(y, z, "objective_prox");
  require_same_size(y, f, "objective_prox");

  long double l1 = 0.0L;
  long double quad = 0.0L;
  for (Index i = 0; i < y.size(); ++i) {
    l1 += std::abs(y(i) - z(i));
    const double r = z(i) - f(i);
    quad += static_cast<long double>(r) * r;
  }
  return static_cast<double>(l1 + quad / (2.0L * static_cast<long double>(delta.value())));
}

}  // namespace orx
