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

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "orx/linalg.hpp"
#include "orx/types.hpp"

namespace orx {

/// Trace-norm robust PCA baseline, min_Z ||X - Z||_1 + beta ||Z||_tr, solved
/// with an inexact augmented-Lagrangian splitting Z + S = X. Every iteration
/// performs one full SVD (the singular value thresholding step); this is the
/// cost profile the alternating solvers are benchmarked against.
struct RpcaConfig {
  double beta = 0.0;             ///< trace-norm weight, must be > 0
  std::optional<double> mu0;     ///< initial penalty; default 1.25 / sigma_max(X)
  double rho = 1.5;              ///< penalty growth factor, > 1
  int max_iters = 1000;
  double tol = 1e-10;  ///< on relative primal residual and relative objective change
};

struct RpcaResult {
  Matrix Z;  ///< low-rank part
  Matrix S;  ///< sparse residual; ||X - Z - S||_F / ||X||_F <= tol at convergence
  /// Lagrange multiplier at the last iterate. At convergence it certifies
  /// optimality: Y is a subgradient of ||S||_1 (|Y_ij| <= 1, Y_ij = sign(S_ij)
  /// on the support) and Y/beta is a subgradient of ||Z||_tr (Y/beta =
  /// U1 V1' + W with U1' W = 0, W V1 = 0, ||W||_2 <= 1). Tests audit exactly
  /// these residuals.
  Matrix dual;
  std::vector<double> objective_trace;
  Index rank_Z = 0;  ///< numerical rank of Z (cutoff 1e-10 * sigma_max)
  int iterations = 0;
  bool converged = false;
};

namespace detail {

// Singular value thresholding with the shrunk spectrum returned through sv.
inline Matrix svt_impl(const Matrix& M, double tau, Vector* sv) {
  Eigen::BDCSVD<Matrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Vector s = svd.singularValues();
  Index rank = 0;
  for (Index i = 0; i < s.size(); ++i) {
    s(i) = std::max(s(i) - tau, 0.0);
    if (s(i) > 0.0) rank = i + 1;
  }
  if (sv) *sv = s;
  if (rank == 0) return Matrix::Zero(M.rows(), M.cols());
  return svd.matrixU().leftCols(rank) * s.head(rank).asDiagonal() *
         svd.matrixV().leftCols(rank).transpose();
}

}  // namespace detail

/// Singular value thresholding: for M = A diag(s) B', returns
/// A diag(max(s - tau, 0)) B'. This is the proximal operator of
/// tau * ||.||_tr, and shifts every singular value down by the same amount.
inline Matrix svt(const Matrix& M, double tau) {
  require(std::isfinite(tau) && tau > 0.0, "svt: tau must be finite and > 0");
  require_finite(M, "svt: M");
  return detail::svt_impl(M, tau, nullptr);
}

/// Objective ||X - Z||_1 + beta * ||Z||_tr.
inline double objective_rpca(const Matrix& X, const Matrix& Z, double beta) {
  require_same_shape(X, Z, "objective_rpca");
  long double l1 = 0.0L;
  for (Index j = 0; j < X.cols(); ++j)
    for (Index i = 0; i < X.rows(); ++i) l1 += std::abs(X(i, j) - Z(i, j));
  return static_cast<double>(l1) + beta * spectrum(Z).sum();
}

/// Standard weighting beta = max|X_ij| / sqrt(max(p, n)).
inline double default_beta(const Matrix& X) {
  const double scale = X.size() == 0 ? 1.0 : X.cwiseAbs().maxCoeff();
  return (scale > 0.0 ? scale : 1.0) / std::sqrt(static_cast<double>(std::max(X.rows(), X.cols())));
}

inline RpcaResult fit_rpca(const Matrix& X, const RpcaConfig& cfg) {
  require(std::isfinite(cfg.beta) && cfg.beta > 0.0, "fit_rpca: beta must be finite and > 0");
  require(cfg.rho > 1.0, "fit_rpca: rho must be > 1");
  require(cfg.max_iters >= 1, "fit_rpca: max_iters must be >= 1");
  require(cfg.tol > 0.0, "fit_rpca: tol must be > 0");
  require_finite(X, "fit_rpca: X");

  RpcaResult res;
  const double norm_x = X.norm();
  if (norm_x == 0.0) {
    res.Z = Matrix::Zero(X.rows(), X.cols());
    res.S = Matrix::Zero(X.rows(), X.cols());
    res.dual = Matrix::Zero(X.rows(), X.cols());
    res.objective_trace.push_back(0.0);
    res.iterations = 0;
    res.converged = true;
    return res;
  }

  const double sigma_max = max_singular_value(X);
  double mu = cfg.mu0 ? *cfg.mu0 : 1.25 / sigma_max;
  require(std::isfinite(mu) && mu > 0.0, "fit_rpca: mu0 must be finite and > 0");

  Matrix Z = Matrix::Zero(X.rows(), X.cols());
  Matrix S = Matrix::Zero(X.rows(), X.cols());
  Matrix Y = Matrix::Zero(X.rows(), X.cols());
  Vector shrunk_sv;

  double prev_obj = 0.0;
  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    // Z-step: prox of (beta/mu) ||.||_tr at X - S + Y/mu.
    Z = detail::svt_impl(X - S + Y / mu, cfg.beta / mu, &shrunk_sv);

    // S-step: prox of (1/mu) ||.||_1 at X - Z + Y/mu. Together with the
    // multiplier update below, this keeps Y a valid subgradient of ||S||_1.
    const Matrix T = X - Z + Y / mu;
    const double kappa = 1.0 / mu;
    for (Index j = 0; j < S.cols(); ++j) {
      for (Index i = 0; i < S.rows(); ++i) {
        const double t = T(i, j);
        const double mag = std::abs(t) - kappa;
        S(i, j) = mag > 0.0 ? std::copysign(mag, t) : 0.0;
      }
    }

    const Matrix R = X - Z - S;
    Y += mu * R;

    long double l1 = 0.0L;
    for (Index j = 0; j < X.cols(); ++j)
      for (Index i = 0; i < X.rows(); ++i) l1 += std::abs(X(i, j) - Z(i, j));
    const double obj = static_cast<double>(l1) + cfg.beta * shrunk_sv.sum();
    res.objective_trace.push_back(obj);
    res.iterations = iter;

    const double primal = R.norm() / norm_x;
    if (primal <= cfg.tol && iter >= 2 && detail::relative_change(prev_obj, obj) <= cfg.tol) {
      res.converged = true;
      break;
    }
    prev_obj = obj;
    mu *= cfg.rho;
  }

  res.rank_Z = numerical_rank(Z);
  res.Z = std::move(Z);
  res.S = std::move(S);
  res.dual = std::move(Y);
  return res;
}

/// Closed-form minimizer of (1/2) ||X - Z||_F^2 + beta ||Z||_tr, which is
/// exactly svt(X, beta).
inline Matrix l2_trace_pca(const Matrix& X, double beta) {
  require(std::isfinite(beta) && beta > 0.0, "l2_trace_pca: beta must be finite and > 0");
  require_finite(X, "l2_trace_pca: X");
  return detail::svt_impl(X, beta, nullptr);
}

}  // namespace orx
