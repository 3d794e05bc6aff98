// Copyright 2026 The krausmap Authors
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

#include "krausmap/genfun.hpp"
#include "krausmap/qmodel.hpp"

namespace krausmap {

/// 9x9 linear map on VectorizedState.
class Superoperator {
 public:
  Superoperator() : entries_(Matrix9::Zero()) {}
  explicit Superoperator(const Matrix9& entries) : entries_(entries) {}

  const Matrix9& matrix() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  VectorizedState apply(const VectorizedState& v) const {
    return VectorizedState(entries_ * v.vector());
  }

 private:
  Matrix9 entries_;
};

/// Generator A of d[rho]/dt = A [rho] in the row-major vectorized basis.
Superoperator drift_matrix(const SystemParams& params);

/// F(t) = exp(A t), assembled entry by entry from the generating functions.
Superoperator analytic_propagator(const SystemParams& params, double t);

struct EvolveOptions {
  /// Validate the result and throw ConsistencyError on failure.
  bool validate = true;
  ToleranceSet tolerances = kTolerances;
};

DensityMatrix evolve_analytic(const SystemParams& params, const DensityMatrix& rho0,
                              double t, const EvolveOptions& options = {});

}  // namespace krausmap
