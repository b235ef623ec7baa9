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

#include <string>
#include <vector>

#include "orx/linalg.hpp"
#include "orx/types.hpp"

namespace orx {

/// Labeled singular-value spectra plus per-label downshift relative to the
/// first (reference) label: downshift[l][i] = sigma_i(reference) - sigma_i(l).
///
/// Construction validates every spectrum as non-negative and non-increasing.
/// Downshift vectors are derived data and are NOT validated: reconstructions
/// can in principle overshoot a singular value, making an entry negative,
/// and rejecting the report would hide exactly the comparison it exists to
/// show.
struct SpectrumReport {
  std::vector<std::string> labels;
  std::vector<Vector> spectra;
  std::vector<Vector> downshift;
};

struct LabeledMatrix {
  std::string label;
  Matrix matrix;
};

inline SpectrumReport make_spectrum_report(const std::vector<LabeledMatrix>& inputs) {
  require(!inputs.empty(), "spectrum report: need at least one matrix");
  SpectrumReport report;
  for (const auto& in : inputs) {
    require(!in.label.empty(), "spectrum report: empty label");
    const Vector sv = spectrum(in.matrix);
    for (Index i = 0; i < sv.size(); ++i) {
      require(sv(i) >= 0.0, "spectrum report: negative singular value");
      if (i > 0) require(sv(i) <= sv(i - 1), "spectrum report: spectrum not non-increasing");
    }
    report.labels.push_back(in.label);
    report.spectra.push_back(sv);
  }
  const Vector& ref = report.spectra.front();
  for (const Vector& sv : report.spectra) {
    require(sv.size() == ref.size(),
            "spectrum report: all matrices must have the same spectrum length");
    report.downshift.push_back(ref - sv);
  }
  return report;
}

/// Per-solver reconstruction quality against the known clean matrix.
struct ReconstructionEntry {
  std::string label;
  double rel_frobenius_error = 0.0;  ///< ||Z - clean||_F / ||clean||_F
  Vector column_residuals;           ///< per-column ||Z_col - clean_col||_2
  Vector spectrum_downshift;         ///< sigma(clean) - sigma(Z)
  Index rank = 0;                    ///< numerical rank of Z
};

struct ReconstructionReport {
  double corrupted_rel_error = 0.0;  ///< baseline: ||corrupted - clean||_F / ||clean||_F
  std::vector<ReconstructionEntry> entries;
};

inline ReconstructionReport reconstruction_report(const Matrix& clean, const Matrix& corrupted,
                                                  const std::vector<LabeledMatrix>& results) {
  require_same_shape(clean, corrupted, "reconstruction report");
  const double clean_norm = clean.norm();
  require(clean_norm > 0.0, "reconstruction report: clean matrix is zero");
  const Vector clean_sv = spectrum(clean);

  ReconstructionReport report;
  report.corrupted_rel_error = (corrupted - clean).norm() / clean_norm;
  for (const auto& r : results) {
    require(!r.label.empty(), "reconstruction report: empty label");
    require_same_shape(clean, r.matrix, "reconstruction report");
    ReconstructionEntry e;
    e.label = r.label;
    e.rel_frobenius_error = (r.matrix - clean).norm() / clean_norm;
    e.column_residuals = (r.matrix - clean).colwise().norm().transpose();
    e.spectrum_downshift = clean_sv - spectrum(r.matrix);
    e.rank = numerical_rank(r.matrix);
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace orx
