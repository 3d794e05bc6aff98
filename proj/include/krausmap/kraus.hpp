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

#include <variant>
#include <vector>

#include "krausmap/qmodel.hpp"

namespace krausmap {

/// Exact channel at elapsed time t.
struct ExactKind {
  double time = 0.0;
};
/// First-order channel for one step of length tau.
struct DifferentialKind {
  double tau = 0.0;
};
using KrausKind = std::variant<ExactKind, DifferentialKind>;

/// Operator-sum representation rho -> sum_mu K_mu rho K_mu^dagger.
class KrausSet {
 public:
  KrausSet(std::vector<Matrix3> operators, KrausKind kind);

  const std::vector<Matrix3>& operators() const { return operators_; }
  std::size_t size() const { return operators_.size(); }
  const Matrix3& operator[](std::size_t mu) const { return operators_[mu]; }
  const KrausKind& kind() const { return kind_; }
  /// Spectral norm of sum K^dagger K - I, computed at construction.
  double completeness_defect() const { return defect_; }

 private:
  std::vector<Matrix3> operators_;
  KrausKind kind_;
  double defect_;
};

/// Photon-leak amplitudes ell_mu, each placed at entry (3,2) of a jump
/// operator L_mu. Construction enforces sum |ell_mu|^2 = kappa.
class JumpSpec {
 public:
  /// The two amplitudes -(sqrt3 -+ 1) sqrt(kappa) / (2 sqrt2) read off the
  /// small-time limit of the exact channel.
  static JumpSpec limit_pair(double kappa);
  /// One jump operator with ell = sqrt(kappa).
  static JumpSpec single(double kappa);
  /// Throws ParameterError when sum |ell|^2 differs from kappa by more than
  /// 1e-12 (relative to max(1, kappa)).
  static JumpSpec custom(std::vector<Complex> amplitudes, double kappa);

  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

 private:
  explicit JumpSpec(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {}
  std::vector<Complex> amplitudes_;
};

/// lambda_+ below this switches K1, K2 to the regularized small-time form.
inline constexpr double kCapPlusRegularization = 1e-12;
/// Negative discriminants down to this are rounding and clamped to zero.
inline constexpr double kDiscriminantClamp = -1e-10;

/// {K0, K1, K2} with
///   K0 = [[L+, -L0, 0], [L0, -L-, 0], [0, 0, e^{i omega t}]]
///   K1, K2 zero except row 3: (-sqrt(l+/2), (-2 gamma L0^2 +- s) / sqrt(2 l+), 0)
///   s = sqrt(l+ l- - 4 gamma^2 L0^4).
/// Throws RegimeError if the discriminant under s is clearly negative.
KrausSet exact_kraus(const SystemParams& params, double t);

/// {I + A tau, L_1 sqrt(tau), ...} with the 3x3 drift
///   A = [[0, -rabi/2, 0], [rabi/2, -kappa/2, 0], [0, 0, i omega]].
KrausSet differential_kraus(const SystemParams& params, double tau, const JumpSpec& jumps);

/// sum_mu K_mu rho K_mu^dagger, symmetrized to be exactly Hermitian.
DensityMatrix apply_channel(const KrausSet& kset, const DensityMatrix& rho);

/// Same as apply_channel, also returning the max |X - X^dagger| removed by
/// symmetrization.
DensityMatrix apply_channel(const KrausSet& kset, const DensityMatrix& rho,
                            double& hermiticity_defect);

double completeness_defect(const KrausSet& kset);
double completeness_defect(const std::vector<Matrix3>& operators);

struct DiscreteOptions {
  /// Divide by the trace after every step.
  bool renormalize = false;
  /// Cumulative |Tr rho - 1| above which a warning is recorded.
  double drift_warning = 0.1;
};

struct StepDiagnostics {
  std::vector<double> step_trace_drift;  ///< |Tr after - Tr before| per step
  double max_step_trace_drift = 0.0;
  double final_trace_deviation = 0.0;    ///< |Tr rho_n - 1| of the returned state
  double max_symmetrization_defect = 0.0;
  bool renormalized = false;
  bool drift_warning = false;
  ValidationReport final_validation;
};

struct DiscreteResult {
  DensityMatrix rho;
  StepDiagnostics diagnostics;
};

/// n applications of differential_kraus(params, t / n, jumps).
DiscreteResult evolve_discrete(const SystemParams& params, const DensityMatrix& rho0,
                               double t, int n, const JumpSpec& jumps,
                               const DiscreteOptions& options = {});

}  // namespace krausmap
