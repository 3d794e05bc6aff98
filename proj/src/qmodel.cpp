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

#include "krausmap/qmodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "krausmap/error.hpp"

namespace krausmap {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Oscillatory:
      return "oscillatory";
    case Regime::Critical:
      return "critical";
    case Regime::Dissipative:
      return "dissipative";
    case Regime::Uncoupled:
      return "uncoupled";
  }
  return "unknown";
}

namespace {

void require_rate(double value, const char* field) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ParameterError(std::string(field) + " must be finite and >= 0, got " +
                         std::to_string(value));
  }
}

}  // namespace

SystemParams::SystemParams(double kappa, double rabi, double omega)
    : kappa_(kappa), rabi_(rabi), omega_(omega) {
  if (rabi_ == 0.0) {
    gamma_ = std::numeric_limits<double>::infinity();
    regime_ = Regime::Uncoupled;
    return;
  }
  gamma_ = kappa_ / (2.0 * rabi_);
  const double gap = gamma_ * gamma_ - 1.0;
  if (std::abs(gap) < kTolerances.critical) {
    regime_ = Regime::Critical;
  } else if (gap > 0.0) {
    regime_ = Regime::Dissipative;
  } else {
    regime_ = Regime::Oscillatory;
  }
}

SystemParams SystemParams::make(double kappa, double rabi, double omega) {
  require_rate(kappa, "kappa");
  require_rate(rabi, "rabi");
  require_rate(omega, "omega");
  return SystemParams(kappa, rabi, omega);
}

DensityMatrix DensityMatrix::basis_projector(int index) {
  if (index < 0 || index > 2) {
    throw ParameterError("basis index must be 0, 1 or 2");
  }
  Matrix3 m = Matrix3::Zero();
  m(index, index) = 1.0;
  return DensityMatrix(m);
}

VectorizedState vectorize(const DensityMatrix& rho) {
  Vector9 v;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      v(3 * r + c) = rho(r, c);
    }
  }
  return VectorizedState(v);
}

DensityMatrix devectorize(const VectorizedState& v) {
  Matrix3 m;
  for (int k = 0; k < 9; ++k) {
    m(k / 3, k % 3) = v[k];
  }
  return DensityMatrix(m);
}

DensityMatrix initial_state(double theta) {
  if (!std::isfinite(theta)) {
    throw ParameterError("theta must be finite");
  }
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  Matrix3 m = Matrix3::Zero();
  m(0, 0) = s * s;
  m(0, 2) = s * c;
  m(2, 0) = s * c;
  m(2, 2) = c * c;
  return DensityMatrix(m);
}

std::array<double, 3> hermitian_eigenvalues(const Matrix3& m) {
  Matrix3 a = 0.5 * (m + m.adjoint());
  const double scale = a.norm();
  if (scale == 0.0) {
    return {0.0, 0.0, 0.0};
  }
  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = std::sqrt(std::norm(a(0, 1)) + std::norm(a(0, 2)) +
                                 std::norm(a(1, 2)));
    if (off <= 1e-300 || off < 1e-17 * scale) {
      break;
    }
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) {
          continue;
        }
        // Phase q so the (p, q) entry is real, then a real Jacobi rotation.
        const Complex phase = std::conj(a(p, q)) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Matrix3 u = Matrix3::Identity();
        u(p, p) = c;
        u(p, q) = s;
        u(q, p) = -s * phase;
        u(q, q) = c * phase;
        a = (u.adjoint() * a * u).eval();
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  std::array<double, 3> ev{a(0, 0).real(), a(1, 1).real(), a(2, 2).real()};
  std::sort(ev.begin(), ev.end());
  return ev;
}

ValidationReport validate_density(const DensityMatrix& rho, const ToleranceSet& tol) {
  ValidationReport report;
  const Matrix3& m = rho.matrix();
  report.trace_deviation = std::abs(m.trace() - Complex(1.0, 0.0));
  report.hermiticity_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  report.min_eigenvalue = hermitian_eigenvalues(m)[0];
  report.trace_ok = report.trace_deviation <= tol.trace;
  report.hermitian_ok = report.hermiticity_defect <= tol.hermiticity;
  report.positive_ok = report.min_eigenvalue >= tol.positivity;
  return report;
}

}  // namespace krausmap
