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
#include <cmath>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "orx/random.hpp"
#include "orx/types.hpp"

namespace orx {

// ---------------------------------------------------------------------------
// 1-D line data with gross outliers
// ---------------------------------------------------------------------------

/// Seeded generator spec for scalar regression data: points on a line with
/// small Gaussian noise, plus a handful of grossly displaced responses.
struct LineDatasetSpec {
  int n_clean = 10;
  int n_outliers = 3;
  double slope = 1.0;
  double intercept = 0.0;
  double noise_sigma = 0.05;
  /// Vertical displacement applied to each outlier response, one entry per
  /// outlier. Each displacement must dominate the noise (|offset| > 3*sigma).
  std::vector<double> outlier_offsets = {3.0, -4.0, 5.0};
  double x_min = 0.0;
  double x_max = 10.0;
  std::uint64_t seed = 1;
};

struct LineDataset {
  Matrix X;              ///< 1 x n design (row of x coordinates)
  Vector y;              ///< n responses, outliers last
  BoolVector is_outlier; ///< marks the displaced entries
};

inline LineDataset gen_line_dataset(const LineDatasetSpec& spec) {
  require(spec.n_clean >= 2, "line dataset: need at least 2 clean points");
  require(spec.n_outliers >= 0, "line dataset: negative outlier count");
  require(spec.outlier_offsets.size() == static_cast<std::size_t>(spec.n_outliers),
          "line dataset: one offset per outlier required");
  require(spec.noise_sigma >= 0.0 && std::isfinite(spec.noise_sigma),
          "line dataset: noise_sigma must be finite and non-negative");
  require(spec.x_min < spec.x_max, "line dataset: empty x range");
  for (double off : spec.outlier_offsets) {
    require(std::isfinite(off) && std::abs(off) > 3.0 * spec.noise_sigma,
            "line dataset: outlier offsets must exceed 3*noise_sigma in magnitude");
  }

  const Index n = spec.n_clean + spec.n_outliers;
  Rng rng(spec.seed);
  LineDataset out;
  out.X.resize(1, n);
  out.y.resize(n);
  out.is_outlier = BoolVector::Constant(n, false);
  for (Index i = 0; i < n; ++i) {
    const double x = rng.uniform(spec.x_min, spec.x_max);
    out.X(0, i) = x;
    out.y(i) = spec.slope * x + spec.intercept + spec.noise_sigma * rng.normal();
  }
  for (int j = 0; j < spec.n_outliers; ++j) {
    const Index i = spec.n_clean + j;
    out.y(i) += spec.outlier_offsets[static_cast<std::size_t>(j)];
    out.is_outlier(i) = true;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Low-rank matrices with sparse / block corruption
// ---------------------------------------------------------------------------

/// Rectangular occlusion blocks: each block SETS a height x width patch to
/// +magnitude (it does not add), modelling saturated sensor regions.
struct BlockOcclusionSpec {
  int height = 4;
  int width = 5;
  int count = 1;
};

/// Seeded generator spec for a p x n low-rank matrix plus gross corruption.
struct LowRankCorruptionSpec {
  Index p = 100;
  Index n = 200;
  int k_true = 10;
  /// Singular values of the clean matrix, length k_true, positive
  /// non-increasing. Empty selects the default profile 10, 9, ..., (linear
  /// decay from 10 down to 1 across k_true values).
  std::vector<double> singular_profile;
  /// Fraction of entries to corrupt; round(frac * p * n) distinct positions.
  double corruption_frac = 0.05;
  /// Value added at corrupted entries (sign chosen per entry). Zero selects
  /// the default 5 * max |clean entry|.
  double corruption_magnitude = 0.0;
  std::optional<BlockOcclusionSpec> block_occlusion;
  std::uint64_t seed = 1;
};

struct LowRankDataset {
  Matrix clean;
  Matrix corrupted;
  BoolMatrix corruption_mask;
  double corruption_magnitude = 0.0;  ///< resolved value actually used
};

namespace detail {

/// Orthonormal columns: QR of a seeded Gaussian matrix, with the sign of each
/// column fixed so the factorization is unambiguous.
inline Matrix random_orthonormal(Index rows, Index cols, Rng& rng) {
  Matrix g(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  const Matrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Index j = 0; j < cols; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

}  // namespace detail

inline LowRankDataset gen_lowrank_corrupted(const LowRankCorruptionSpec& spec) {
  require(spec.p >= 2 && spec.n >= 2, "lowrank dataset: need at least a 2x2 matrix");
  require(spec.k_true >= 1 && spec.k_true <= std::min(spec.p, spec.n),
          "lowrank dataset: rank must lie in [1, min(p, n)]");
  require(spec.corruption_frac >= 0.0 && spec.corruption_frac <= 0.5,
          "lowrank dataset: corruption fraction must lie in [0, 0.5]");

  std::vector<double> profile = spec.singular_profile;
  if (profile.empty()) {
    profile.resize(static_cast<std::size_t>(spec.k_true));
    for (int i = 0; i < spec.k_true; ++i) {
      const double t = spec.k_true == 1 ? 0.0 : static_cast<double>(i) / (spec.k_true - 1);
      profile[static_cast<std::size_t>(i)] = 10.0 - 9.0 * t;  // 10 down to 1
    }
  }
  require(profile.size() == static_cast<std::size_t>(spec.k_true),
          "lowrank dataset: singular profile length must equal the rank");
  for (std::size_t i = 0; i < profile.size(); ++i) {
    require(std::isfinite(profile[i]) && profile[i] > 0.0,
            "lowrank dataset: singular values must be positive");
    if (i > 0)
      require(profile[i] <= profile[i - 1], "lowrank dataset: singular values must be non-increasing");
  }

  Rng rng(spec.seed);
  const Matrix qp = detail::random_orthonormal(spec.p, spec.k_true, rng);
  const Matrix qn = detail::random_orthonormal(spec.n, spec.k_true, rng);
  Vector sv(spec.k_true);
  for (int i = 0; i < spec.k_true; ++i) sv(i) = profile[static_cast<std::size_t>(i)];

  LowRankDataset out;
  out.clean = qp * sv.asDiagonal() * qn.transpose();
  out.corrupted = out.clean;
  out.corruption_mask = BoolMatrix::Constant(spec.p, spec.n, false);

  double magnitude = spec.corruption_magnitude;
  if (magnitude == 0.0) magnitude = 5.0 * out.clean.cwiseAbs().maxCoeff();
  require(std::isfinite(magnitude) && magnitude > 0.0,
          "lowrank dataset: corruption magnitude must be positive");
  out.corruption_magnitude = magnitude;

  // Entrywise corruption: distinct flat positions, additive +/- magnitude.
  const std::uint64_t total = static_cast<std::uint64_t>(spec.p) * static_cast<std::uint64_t>(spec.n);
  const auto n_corrupt =
      static_cast<std::uint64_t>(std::llround(spec.corruption_frac * static_cast<double>(total)));
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(static_cast<std::size_t>(n_corrupt) * 2);
  while (taken.size() < n_corrupt) {
    const std::uint64_t flat = rng.below(total);
    if (!taken.insert(flat).second) continue;
    const Index i = static_cast<Index>(flat % static_cast<std::uint64_t>(spec.p));
    const Index j = static_cast<Index>(flat / static_cast<std::uint64_t>(spec.p));
    out.corrupted(i, j) += rng.sign() * magnitude;
    out.corruption_mask(i, j) = true;
  }

  // Optional block occlusions.
  if (spec.block_occlusion) {
    const BlockOcclusionSpec& b = *spec.block_occlusion;
    require(b.height >= 1 && b.width >= 1 && b.count >= 0, "lowrank dataset: bad block spec");
    require(b.height <= spec.p && b.width <= spec.n,
            "lowrank dataset: occlusion block larger than the matrix");
    for (int c = 0; c < b.count; ++c) {
      const Index i0 = static_cast<Index>(rng.below(static_cast<std::uint64_t>(spec.p - b.height + 1)));
      const Index j0 = static_cast<Index>(rng.below(static_cast<std::uint64_t>(spec.n - b.width + 1)));
      out.corrupted.block(i0, j0, b.height, b.width).setConstant(magnitude);
      out.corruption_mask.block(i0, j0, b.height, b.width).setConstant(true);
    }
  }
  return out;
}

}  // namespace orx
