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

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace orx {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using BoolMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;
using BoolVector = Eigen::Array<bool, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Outlier tolerance delta. A residual with |y - f| <= delta passes through
/// unchanged; anything beyond the band is treated as an outlier.
/// Construction rejects non-positive and non-finite values.
class Tolerance {
 public:
  explicit Tolerance(double delta) : delta_(delta) {
    if (!std::isfinite(delta) || !(delta > 0.0)) {
      throw std::invalid_argument("Tolerance: delta must be finite and > 0, got " +
                                  std::to_string(delta));
    }
  }

  double value() const { return delta_; }

 private:
  double delta_;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

inline void require_finite(const Matrix& m, const char* name) {
  if (!m.allFinite())
    throw std::invalid_argument(std::string(name) + ": all entries must be finite");
}

inline void require_finite(const Vector& v, const char* name) {
  if (!v.allFinite())
    throw std::invalid_argument(std::string(name) + ": all entries must be finite");
}

inline void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch (" +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
  }
}

inline void require_same_size(const Vector& a, const Vector& b, const char* what) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(what) + ": length mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                                ")");
  }
}

}  // namespace orx
