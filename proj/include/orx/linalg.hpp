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

#include "orx/types.hpp"

namespace orx {

/// Singular values of M, non-increasing.
inline Vector spectrum(const Matrix& M) {
  require_finite(M, "spectrum: M");
  if (M.size() == 0) return Vector(0);
  Eigen::BDCSVD<Matrix> svd(M);
  return svd.singularValues();
}

inline double max_singular_value(const Matrix& M) {
  if (M.size() == 0) return 0.0;
  return spectrum(M)(0);
}

/// Count of singular values exceeding rel_cutoff * sigma_max.
inline Index numerical_rank(const Matrix& M, double rel_cutoff = 1e-10) {
  const Vector sv = spectrum(M);
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = rel_cutoff * sv(0);
  Index r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  return r;
}

namespace detail {

// Least-squares solve of A w = b with a rank-tolerant SVD: singular values
// below rel_cutoff * sigma_max are dropped, giving the minimum-norm solution
// on rank-deficient systems. B may have multiple right-hand sides.
inline Matrix pinv_solve(const Matrix& A, const Matrix& B, double rel_cutoff = 1e-12) {
  Eigen::BDCSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(rel_cutoff);
  return svd.solve(B);
}

// Relative change between consecutive objective values. The floor keeps the
// ratio defined when the objective reaches zero.
inline double relative_change(double prev, double cur) {
  return std::abs(cur - prev) / std::max(std::abs(prev), 1e-30);
}

}  // namespace detail

}  // namespace orx
