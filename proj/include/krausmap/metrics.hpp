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

#include <vector>

#include "krausmap/kraus.hpp"
#include "krausmap/qmodel.hpp"

namespace krausmap {

/// Largest singular value, from the eigenvalues of M^dagger M.
double spectral_norm(const Matrix3& m);

/// Spectral norm of the difference.
double distance(const DensityMatrix& a, const DensityMatrix& b);

/// (|rho_discrete| - |rho_analytic|) / |rho_analytic| in spectral norm.
/// Signed. Throws NumericalError when the analytic norm is zero.
double relative_error(const DensityMatrix& rho_discrete, const DensityMatrix& rho_analytic);

inline double relative_error_abs(const DensityMatrix& rho_discrete,
                                 const DensityMatrix& rho_analytic) {
  const double re = relative_error(rho_discrete, rho_analytic);
  return re < 0.0 ? -re : re;
}

/// Reference curve omega^2 / n. Throws ParameterError for n < 1.
double re_approx(double omega, int n);

/// One discrete-vs-analytic comparison at the same physical time t = n tau.
struct EvolutionRecord {
  double theta = 0.0;
  double t = 0.0;
  int n = 0;  ///< 0 marks an analytic-only record
  double norm_analytic = 0.0;
  double norm_discrete = 0.0;
  double distance = 0.0;
  double relative_error = 0.0;  ///< signed
  double re_approx = 0.0;

  double relative_error_abs() const { return relative_error < 0.0 ? -relative_error : relative_error; }
};

/// Evolves initial_state(theta) to time t with both engines and fills a record.
EvolutionRecord compare_engines(const SystemParams& params, double theta, double t, int n,
                                const JumpSpec& jumps, const DiscreteOptions& options = {});

/// Least-squares slope of log(y) against log(x); points with non-positive
/// coordinates are skipped. NaN when fewer than two points remain.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace krausmap
