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
#include <optional>
#include <utility>
#include <vector>

#include "orx/linalg.hpp"
#include "orx/proxreg.hpp"
#include "orx/types.hpp"

namespace orx {

/// Outlier-regularized PCA.
///
/// Alternates element-wise regularization of the data against the current
/// rank-k prediction F = U*V with least-squares factor updates, minimizing
///   ||X - Z||_1 + (1/2 delta) ||Z - U*V||_F^2.
/// The regularized data Z is the main output: it stays close to the rank-k
/// subspace but keeps small high-rank components, because non-outlier entries
/// pass through unchanged.
struct OrpcaConfig {
  int rank_k = 1;
  Tolerance delta;
  int max_iters = 500;
  /// Relative objective change below which the loop stops. 0 disables the
  /// objective stop entirely: the loop then runs until the regularized matrix
  /// is bitwise stationary (an exact fixed point) or max_iters.
  double tol = 1e-10;
  int inner_als_sweeps = 1;
  bool record_trace = true;
  std::optional<std::uint64_t> seed;  ///< reserved for randomized inits; the
                                      ///< default PCA init ignores it
};

struct OrpcaResult {
  Matrix Z;  ///< regularized data, consistent with U*V at the final factors
  Matrix U;  ///< p x k
  Matrix V;  ///< k x n
  std::vector<double> objective_trace;
  double outlier_fraction = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Warm start for fit_orpca, replacing the PCA initialization.
struct FactorInit {
  Matrix U;
  Matrix V;
};

/// Rank-k PCA initialization via thin SVD: X ~ A S B', U0 = A_k S_k,
/// V0 = B_k'. The data is not mean-centered.
inline std::pair<Matrix, Matrix> pca_init(const Matrix& X, int k) {
  require(k >= 1 && k <= std::min(X.rows(), X.cols()),
          "pca_init: k must satisfy 1 <= k <= min(p, n)");
  require_finite(X, "pca_init: X");
  Eigen::BDCSVD<Matrix> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Matrix U0 = svd.matrixU().leftCols(k) * svd.singularValues().head(k).asDiagonal();
  const Matrix V0 = svd.matrixV().leftCols(k).transpose();
  return {U0, V0};
}

/// Alternating least-squares sweeps on ||Z - U*V||_F^2:
///   U <- Z V' (V V')^-1   then   V <- (U'U)^-1 U' Z,
/// each k x k inverse taken as a rank-tolerant solve (cutoff 1e-12 *
/// sigma_max). Neither half-step can increase the residual.
inline void update_factors(const Matrix& Z, Matrix& U, Matrix& V, int sweeps = 1) {
  require(sweeps >= 1, "update_factors: sweeps must be >= 1");
  require(U.rows() == Z.rows() && V.cols() == Z.cols() && U.cols() == V.rows(),
          "update_factors: factor shapes not conformable with Z");
  for (int s = 0; s < sweeps; ++s) {
    U = detail::pinv_solve(V * V.transpose(), V * Z.transpose()).transpose();
    V = detail::pinv_solve(U.transpose() * U, U.transpose() * Z);
  }
}

namespace detail {

inline double objective_orpca_with_prediction(const Matrix& X, const Matrix& Z,
                                              const Matrix& F, double delta) {
  long double l1 = 0.0L;
  long double quad = 0.0L;
  for (Index j = 0; j < X.cols(); ++j) {
    for (Index i = 0; i < X.rows(); ++i) {
      l1 += std::abs(X(i, j) - Z(i, j));
      const double r = Z(i, j) - F(i, j);
      quad += static_cast<long double>(r) * r;
    }
  }
  return static_cast<double>(l1 + quad / (2.0L * static_cast<long double>(delta)));
}

}  // namespace detail

/// ORPCA objective ||X - Z||_1 + (1/2 delta) ||Z - U*V||_F^2.
inline double objective_orpca(const Matrix& X, const Matrix& Z, const Matrix& U,
                              const Matrix& V, const Tolerance& delta) {
  require_same_shape(X, Z, "objective_orpca");
  const Matrix F = U * V;
  require_same_shape(X, F, "objective_orpca: U*V");
  return detail::objective_orpca_with_prediction(X, Z, F, delta.value());
}

inline OrpcaResult fit_orpca(const Matrix& X, const OrpcaConfig& cfg,
                             const std::optional<FactorInit>& init = std::nullopt) {
  require(cfg.rank_k >= 1 && cfg.rank_k <= std::min(X.rows(), X.cols()),
          "fit_orpca: rank_k must satisfy 1 <= k <= min(p, n)");
  require(cfg.max_iters >= 1, "fit_orpca: max_iters must be >= 1");
  require(cfg.inner_als_sweeps >= 1, "fit_orpca: inner_als_sweeps must be >= 1");
  require(cfg.tol >= 0.0, "fit_orpca: tol must be >= 0");
  require_finite(X, "fit_orpca: X");

  const double d = cfg.delta.value();
  Matrix U, V;
  if (init) {
    require(init->U.rows() == X.rows() && init->V.cols() == X.cols() &&
                init->U.cols() == init->V.rows(),
            "fit_orpca: warm-start factor shapes not conformable with X");
    U = init->U;
    V = init->V;
  } else {
    std::tie(U, V) = pca_init(X, cfg.rank_k);
  }

  OrpcaResult res;
  Matrix F = U * V;
  Matrix Z(X.rows(), X.cols());
  // Reference for the bitwise fixed-point test. Starting it at X makes a
  // no-op first clamp (no entry moved: clean data, or delta beyond every
  // residual) terminate in exactly one iteration with the initial factors,
  // i.e. plain truncated-SVD PCA.
  Matrix Z_prev = X;
  double prev_obj = 0.0;
  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    for (Index j = 0; j < X.cols(); ++j)
      for (Index i = 0; i < X.rows(); ++i)
        Z(i, j) = detail::clamp_unchecked(X(i, j), F(i, j), d);

    res.iterations = iter;
    if ((Z.array() == Z_prev.array()).all()) {
      // The factor update is a deterministic function of Z, so an unchanged
      // Z means the whole state is a fixed point; stop before re-updating.
      if (cfg.record_trace)
        res.objective_trace.push_back(detail::objective_orpca_with_prediction(X, Z, F, d));
      res.converged = true;
      break;
    }
    Z_prev = Z;

    update_factors(Z, U, V, cfg.inner_als_sweeps);
    F.noalias() = U * V;

    const double obj = detail::objective_orpca_with_prediction(X, Z, F, d);
    if (cfg.record_trace) res.objective_trace.push_back(obj);

    // With tol = 0 the objective stop is skipped: near a fixed point the
    // per-iteration improvement quantizes to zero in the objective's
    // floating-point resolution while the iterates are still drifting.
    const bool objective_stop =
        cfg.tol > 0.0 && iter >= 2 && detail::relative_change(prev_obj, obj) <= cfg.tol;
    if (obj == 0.0 || objective_stop) {
      res.converged = true;
      break;
    }
    prev_obj = obj;
  }

  // Consistency pass: re-regularize against the final factors so Z and U*V
  // agree exactly. This minimizes the objective over Z, so the appended trace
  // value keeps the trace non-increasing.
  Index outliers = 0;
  for (Index j = 0; j < X.cols(); ++j) {
    for (Index i = 0; i < X.rows(); ++i) {
      Z(i, j) = detail::clamp_unchecked(X(i, j), F(i, j), d);
      outliers += detail::is_outlier_unchecked(X(i, j), F(i, j), d) ? 1 : 0;
    }
  }
  if (cfg.record_trace)
    res.objective_trace.push_back(detail::objective_orpca_with_prediction(X, Z, F, d));

  res.Z = std::move(Z);
  res.U = std::move(U);
  res.V = std::move(V);
  res.outlier_fraction = X.size() == 0 ? 0.0 : static_cast<double>(outliers) / X.size();
  return res;
}

/// Default continuation schedule for l1_pca: six stages, geometric ratio 0.3,
/// starting at the median absolute residual of the PCA initialization.
inline std::vector<double> default_l1pca_schedule(const Matrix& X, int k) {
  auto [U0, V0] = pca_init(X, k);
  Matrix R = (X - U0 * V0).cwiseAbs();
  std::vector<double> r(R.data(), R.data() + R.size());
  std::sort(r.begin(), r.end());
  const double med = r.empty() ? 0.0 : r[r.size() / 2];
  const double base = med > 0.0 ? med : (r.empty() ? 0.0 : r.back());
  if (base <= 0.0) return {};  // X is exactly rank k
  std::vector<double> schedule(6);
  double delta = base;
  for (auto& s : schedule) {
    s = delta;
    delta *= 0.3;
  }
  return schedule;
}

/// Approximate L1-norm PCA min ||X - U*V||_1 via delta continuation of
/// fit_orpca with warm starts along a strictly decreasing schedule.
inline std::pair<Matrix, Matrix> l1_pca(const Matrix& X, int k,
                                        const std::vector<double>& schedule) {
  require(!schedule.empty(), "l1_pca: schedule must be non-empty");
  for (std::size_t s = 0; s < schedule.size(); ++s) {
    require(std::isfinite(schedule[s]) && schedule[s] > 0.0,
            "l1_pca: schedule entries must be finite and > 0");
    if (s > 0) require(schedule[s] < schedule[s - 1], "l1_pca: schedule must be strictly decreasing");
  }

  std::optional<FactorInit> warm;
  Matrix U, V;
  for (const double d : schedule) {
    OrpcaConfig cfg{.rank_k = k, .delta = Tolerance(d)};
    cfg.record_trace = false;
    OrpcaResult r = fit_orpca(X, cfg, warm);
    U = std::move(r.U);
    V = std::move(r.V);
    warm = FactorInit{U, V};
  }
  return {U, V};
}

inline std::pair<Matrix, Matrix> l1_pca(const Matrix& X, int k) {
  const std::vector<double> schedule = default_l1pca_schedule(X, k);
  if (schedule.empty()) return pca_init(X, k);  // already an exact fit
  return l1_pca(X, k, schedule);
}

}  // namespace orx
