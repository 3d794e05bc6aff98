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

#include "krausmap/kraus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "krausmap/error.hpp"
#include "krausmap/genfun.hpp"

namespace krausmap {

namespace {

// |ell_mu| / sqrt(kappa) for the two default jump amplitudes; squares sum to 1.
constexpr double kLeakSmall = (std::numbers::sqrt3 - 1.0) / (2.0 * std::numbers::sqrt2);
constexpr double kLeakLarge = (std::numbers::sqrt3 + 1.0) / (2.0 * std::numbers::sqrt2);

Matrix3 row3_operator(Complex first, Complex second) {
  Matrix3 k = Matrix3::Zero();
  k(2, 0) = first;
  k(2, 1) = second;
  return k;
}

}  // namespace

KrausSet::KrausSet(std::vector<Matrix3> operators, KrausKind kind)
    : operators_(std::move(operators)), kind_(kind),
      defect_(krausmap::completeness_defect(operators_)) {}

JumpSpec JumpSpec::limit_pair(double kappa) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw ParameterError("kappa must be finite and >= 0");
  }
  const double root = std::sqrt(kappa);
  return JumpSpec({Complex(-kLeakSmall * root), Complex(-kLeakLarge * root)});
}

JumpSpec JumpSpec::single(double kappa) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw ParameterError("kappa must be finite and >= 0");
  }
  return JumpSpec({Complex(std::sqrt(kappa))});
}

JumpSpec JumpSpec::custom(std::vector<Complex> amplitudes, double kappa) {
  double total = 0.0;
  for (const Complex& ell : amplitudes) {
    if (!std::isfinite(ell.real()) || !std::isfinite(ell.imag())) {
      throw ParameterError("jump amplitudes must be finite");
    }
    total += std::norm(ell);
  }
  const double mismatch = total - kappa;
  if (std::abs(mismatch) > 1e-12 * std::max(1.0, kappa)) {
    std::ostringstream msg;
    msg << "jump amplitudes must satisfy sum |ell|^2 = kappa; sum - kappa = " << mismatch;
    throw ParameterError(msg.str());
  }
  return JumpSpec(std::move(amplitudes));
}

KrausSet exact_kraus(const SystemParams& params, double t) {
  const GeneratingValues v = generating_values(params, t);
  const double l0 = v.lambda_zero;
  const double cap_plus = v.cap_plus;
  const double cap_minus = v.cap_minus;
  const double cross = 2.0 * v.gamma_lambda_zero * l0;  // 2 gamma Lambda_0^2

  double disc = cap_plus * cap_minus - cross * cross;
  if (disc < kDiscriminantClamp) {
    std::ostringstream msg;
    msg << "exact Kraus discriminant is negative (" << disc << ") at t=" << t
        << " for kappa=" << params.kappa() << ", rabi=" << params.rabi()
        << ", omega=" << params.omega();
    throw RegimeError(msg.str());
  }
  disc = std::max(disc, 0.0);
  const double s = std::sqrt(disc);

  Matrix3 k0 = Matrix3::Zero();
  k0(0, 0) = v.lambda_plus;
  k0(0, 1) = -l0;
  k0(1, 0) = l0;
  k0(1, 1) = -v.lambda_minus;
  k0(2, 2) = std::polar(1.0, params.omega() * t);

  Matrix3 k1 = Matrix3::Zero();
  Matrix3 k2 = Matrix3::Zero();
  if (cap_plus >= kCapPlusRegularization) {
    const double first = -std::sqrt(0.5 * cap_plus);
    const double denom = std::sqrt(2.0 * cap_plus);
    k1 = row3_operator(first, (-cross + s) / denom);
    k2 = row3_operator(first, (-cross - s) / denom);
  } else if (cap_minus > 0.0) {
    // Near t = 0 (or with no coupling) the closed form is 0/0. Factor the
    // same Gram matrix [[l+, cross], [cross, l-]] pivoting on l-, then rotate
    // so the (3,2) entries are ell_mu sqrt(l- / kappa) -> ell_mu sqrt(t).
    const double root = std::sqrt(cap_minus);
    const double a1 = cross / root;
    const double a2 = s / root;
    k1 = row3_operator(-kLeakSmall * a1 + kLeakLarge * a2, -kLeakSmall * root);
    k2 = row3_operator(-kLeakLarge * a1 - kLeakSmall * a2, -kLeakLarge * root);
  }
  return KrausSet({k0, k1, k2}, ExactKind{t});
}

KrausSet differential_kraus(const SystemParams& params, double tau, const JumpSpec& jumps) {
  if (!std::isfinite(tau) || tau <= 0.0) {
    throw ParameterError("tau must be finite and > 0");
  }
  Matrix3 drift = Matrix3::Zero();
  drift(0, 1) = -0.5 * params.rabi();
  drift(1, 0) = 0.5 * params.rabi();
  drift(1, 1) = -0.5 * params.kappa();
  drift(2, 2) = Complex(0.0, params.omega());

  std::vector<Matrix3> ops;
  ops.reserve(1 + jumps.amplitudes().size());
  ops.push_back(Matrix3::Identity() + drift * tau);
  const double root_tau = std::sqrt(tau);
  for (const Complex& ell : jumps.amplitudes()) {
    Matrix3 jump = Matrix3::Zero();
    jump(2, 1) = ell * root_tau;
    ops.push_back(jump);
  }
  return KrausSet(std::move(ops), DifferentialKind{tau});
}

DensityMatrix apply_channel(const KrausSet& kset, const DensityMatrix& rho,
                            double& hermiticity_defect) {
  Matrix3 out = Matrix3::Zero();
  for (const Matrix3& k : kset.operators()) {
    out.noalias() += k * rho.matrix() * k.adjoint();
  }
  hermiticity_defect = (out - out.adjoint()).cwiseAbs().maxCoeff();
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

DensityMatrix apply_channel(const KrausSet& kset, const DensityMatrix& rho) {
  double ignored = 0.0;
  return apply_channel(kset, rho, ignored);
}

double completeness_defect(const std::vector<Matrix3>& operators) {
  Matrix3 sum = -Matrix3::Identity();
  for (const Matrix3& k : operators) {
    sum.noalias() += k.adjoint() * k;
  }
  const auto ev = hermitian_eigenvalues(sum);
  return std::max(std::abs(ev[0]), std::abs(ev[2]));
}

double completeness_defect(const KrausSet& kset) {
  return kset.completeness_defect();
}

DiscreteResult evolve_discrete(const SystemParams& params, const DensityMatrix& rho0,
                               double t, int n, const JumpSpec& jumps,
                               const DiscreteOptions& options) {
  if (n < 1) {
    throw ParameterError("step count n must be >= 1");
  }
  if (!std::isfinite(t) || t <= 0.0) {
    throw ParameterError("time must be finite and > 0 for discrete evolution");
  }
  const KrausSet step = differential_kraus(params, t / n, jumps);

  DiscreteResult result{rho0, {}};
  StepDiagnostics& diag = result.diagnostics;
  diag.renormalized = options.renormalize;
  diag.step_trace_drift.reserve(static_cast<std::size_t>(n));

  DensityMatrix rho = rho0;
  for (int i = 0; i < n; ++i) {
    const Complex before = rho.trace();
    double sym = 0.0;
    rho = apply_channel(step, rho, sym);
    const Complex after = rho.trace();
    const double drift = std::abs(after - before);
    diag.step_trace_drift.push_back(drift);
    diag.max_step_trace_drift = std::max(diag.max_step_trace_drift, drift);
    diag.max_symmetrization_defect = std::max(diag.max_symmetrization_defect, sym);
    if (options.renormalize) {
      rho = DensityMatrix(rho.matrix() / after.real());
    }
  }
  diag.final_trace_deviation = std::abs(rho.trace() - Complex(1.0, 0.0));
  diag.drift_warning = diag.final_trace_deviation > options.drift_warning;
  diag.final_validation = validate_density(rho);
  result.rho = rho;
  return result;
}

}  // namespace krausmap
