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

#include "krausmap/oracle.hpp"

#include <cmath>
#include <sstream>

#include "krausmap/error.hpp"

namespace krausmap::oracle {

Matrix3 lindblad_rhs(const SystemParams& params, const Matrix3& rho) {
  const double h = 0.5 * params.rabi();
  const double k = params.kappa();
  const Complex iw(0.0, params.omega());
  // 1-based aliases keep the component equations readable.
  auto r = [&rho](int i, int j) { return rho(i - 1, j - 1); };

  Matrix3 d = Matrix3::Zero();
  d(0, 0) = -h * (r(1, 2) + r(2, 1));
  d(1, 1) = h * (r(1, 2) + r(2, 1)) - k * r(2, 2);
  d(0, 1) = h * (r(1, 1) - r(2, 2)) - 0.5 * k * r(1, 2);
  d(1, 0) = h * (r(1, 1) - r(2, 2)) - 0.5 * k * r(2, 1);
  d(2, 2) = k * r(2, 2);
  d(0, 2) = -h * r(2, 3) - iw * r(1, 3);
  d(1, 2) = h * r(1, 3) + (-0.5 * k - iw) * r(2, 3);
  d(2, 0) = -h * r(3, 2) + iw * r(3, 1);
  d(2, 1) = h * r(3, 1) + (-0.5 * k + iw) * r(3, 2);
  return d;
}

DensityMatrix integrate_rk4(const SystemParams& params, const DensityMatrix& rho0, double t,
                            const IntegratorConfig& config) {
  if (config.steps < 1) {
    throw ParameterError("RK4 step count must be >= 1");
  }
  if (!std::isfinite(t) || t < 0.0) {
    throw ParameterError("time must be finite and >= 0");
  }
  if (t == 0.0) {
    return rho0;
  }
  const double h = t / config.steps;
  Matrix3 y = rho0.matrix();
  for (int i = 0; i < config.steps; ++i) {
    const Matrix3 k1 = lindblad_rhs(params, y);
    const Matrix3 k2 = lindblad_rhs(params, y + 0.5 * h * k1);
    const Matrix3 k3 = lindblad_rhs(params, y + 0.5 * h * k2);
    const Matrix3 k4 = lindblad_rhs(params, y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (config.validate_each_step) {
      const ValidationReport report = validate_density(DensityMatrix(y));
      if (!report.ok()) {
        std::ostringstream msg;
        msg << "RK4 state invalid after step " << (i + 1) << ": trace deviation "
            << report.trace_deviation << ", min eigenvalue " << report.min_eigenvalue;
        throw ConsistencyError(msg.str());
      }
    }
  }
  return DensityMatrix(y);
}

Matrix9 matrix_exponential(const Matrix9& m, double t) {
  const Matrix9 a = m * t;
  if (!a.allFinite()) {
    throw NumericalError("matrix exponential input is not finite");
  }
  // Induced 1-norm: max column sum.
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  constexpr double kMaxNorm = 700.0;
  if (norm1 > kMaxNorm) {
    std::ostringstream msg;
    msg << "matrix exponential argument too large (|Mt|_1 = " << norm1 << ")";
    throw NumericalError(msg.str());
  }
  // Scale to |A / 2^s|_1 <= 1/2; the degree-18 Taylor remainder is then
  // below 2^-19 / 19! ~ 1e-23.
  int squarings = 0;
  if (norm1 > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  }
  const Matrix9 scaled = a / std::ldexp(1.0, squarings);

  constexpr int kDegree = 18;
  Matrix9 result = Matrix9::Identity();
  for (int j = kDegree; j >= 1; --j) {
    result = (Matrix9::Identity() + scaled * result / static_cast<double>(j)).eval();
  }
  for (int i = 0; i < squarings; ++i) {
    result = (result * result).eval();
  }
  return result;
}

}  // namespace krausmap::oracle
