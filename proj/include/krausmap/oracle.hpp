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

// Reference engines used only to check the closed forms. Nothing here may
// depend on the propagator or kraus modules.

#include "krausmap/qmodel.hpp"

namespace krausmap::oracle {

struct IntegratorConfig {
  int steps = 100000;
  /// Throw ConsistencyError if an intermediate state leaves the
  /// density-matrix set.
  bool validate_each_step = false;
};

/// Right-hand side of the nine component equations for d rho / dt. Does not
/// assume rho is Hermitian.
Matrix3 lindblad_rhs(const SystemParams& params, const Matrix3& rho);

/// Fixed-step classical RK4 on lindblad_rhs.
DensityMatrix integrate_rk4(const SystemParams& params, const DensityMatrix& rho0, double t,
                            const IntegratorConfig& config = {});

/// exp(M t) by scaling and squaring around a degree-18 Taylor core.
/// Throws NumericalError when |M t|_1 is too large to square back safely.
Matrix9 matrix_exponential(const Matrix9& m, double t);

}  // namespace krausmap::oracle
