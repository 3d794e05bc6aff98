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

#include "krausmap/propagator.hpp"

#include <cmath>
#include <sstream>

#include "krausmap/error.hpp"

namespace krausmap {

namespace {

// Positions of rho_kl in the vectorized state.
enum Slot : int { k11 = 0, k12, k13, k21, k22, k23, k31, k32, k33 };

}  // namespace

Superoperator drift_matrix(const SystemParams& params) {
  const double half_rabi = 0.5 * params.rabi();
  const double kappa = params.kappa();
  const Complex iw(0.0, params.omega());

  Matrix9 a = Matrix9::Zero();
  a(k11, k12) = -half_rabi;
  a(k11, k21) = -half_rabi;

  a(k12, k11) = half_rabi;
  a(k12, k12) = -0.5 * kappa;
  a(k12, k22) = -half_rabi;

  a(k13, k13) = -iw;
  a(k13, k23) = -half_rabi;

  a(k21, k11) = half_rabi;
  a(k21, k21) = -0.5 * kappa;
  a(k21, k22) = -half_rabi;

  a(k22, k12) = half_rabi;
  a(k22, k21) = half_rabi;
  a(k22, k22) = -kappa;

  a(k23, k13) = half_rabi;
  a(k23, k23) = -0.5 * kappa - iw;

  a(k31, k31) = iw;
  a(k31, k32) = -half_rabi;

  a(k32, k31) = half_rabi;
  a(k32, k32) = iw - 0.5 * kappa;

  a(k33, k22) = kappa;
  return Superoperator(a);
}

Superoperator analytic_propagator(const SystemParams& params, double t) {
  const GeneratingValues v = generating_values(params, t);
  const double lp = v.lambda_plus;
  const double lm = v.lambda_minus;
  const double l0 = v.lambda_zero;
  const double cross = 2.0 * v.gamma_lambda_zero * l0;  // 2 gamma Lambda_0^2
  const Complex down = std::polar(1.0, -params.omega() * t);
  const Complex up = std::conj(down);

  Matrix9 f = Matrix9::Zero();
  // Excitation block {rho_11, rho_12, rho_21, rho_22}.
  f(k11, k11) = lp * lp;
  f(k11, k12) = -lp * l0;
  f(k11, k21) = -lp * l0;
  f(k11, k22) = l0 * l0;

  f(k12, k11) = lp * l0;
  f(k12, k12) = -lm * lp;
  f(k12, k21) = -l0 * l0;
  f(k12, k22) = lm * l0;

  f(k21, k11) = lp * l0;
  f(k21, k12) = -l0 * l0;
  f(k21, k21) = -lm * lp;
  f(k21, k22) = lm * l0;

  f(k22, k11) = l0 * l0;
  f(k22, k12) = -lm * l0;
  f(k22, k21) = -lm * l0;
  f(k22, k22) = lm * lm;

  // Coherences with the ground state pick up the free phase.
  f(k13, k13) = down * lp;
  f(k13, k23) = -down * l0;
  f(k23, k13) = down * l0;
  f(k23, k23) = -down * lm;

  f(k31, k31) = up * lp;
  f(k31, k32) = -up * l0;
  f(k32, k31) = up * l0;
  f(k32, k32) = -up * lm;

  // Ground-state population collects what leaves the excitation block.
  f(k33, k11) = v.cap_plus;
  f(k33, k12) = cross;
  f(k33, k21) = cross;
  f(k33, k22) = v.cap_minus;
  f(k33, k33) = 1.0;
  return Superoperator(f);
}

DensityMatrix evolve_analytic(const SystemParams& params, const DensityMatrix& rho0,
                              double t, const EvolveOptions& options) {
  const DensityMatrix rho =
      devectorize(analytic_propagator(params, t).apply(vectorize(rho0)));
  if (options.validate) {
    const ValidationReport report = validate_density(rho, options.tolerances);
    if (!report.ok()) {
      std::ostringstream msg;
      msg << "analytic evolution left the density-matrix set at t=" << t
          << " (regime " << to_string(params.regime())
          << "): trace deviation " << report.trace_deviation
          << ", hermiticity defect " << report.hermiticity_defect
          << ", min eigenvalue " << report.min_eigenvalue;
      throw ConsistencyError(msg.str());
    }
  }
  return rho;
}

}  // namespace krausmap
