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

#include "krausmap/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "krausmap/error.hpp"
#include "krausmap/propagator.hpp"

namespace krausmap {

double spectral_norm(const Matrix3& m) {
  const auto ev = hermitian_eigenvalues(m.adjoint() * m);
  return std::sqrt(std::max(ev[2], 0.0));
}

double distance(const DensityMatrix& a, const DensityMatrix& b) {
  return spectral_norm(a.matrix() - b.matrix());
}

double relative_error(const DensityMatrix& rho_discrete, const DensityMatrix& rho_analytic) {
  const double reference = spectral_norm(rho_analytic.matrix());
  if (reference == 0.0) {
    throw NumericalError("relative error undefined: analytic state has zero norm");
  }
  return (spectral_norm(rho_discrete.matrix()) - reference) / reference;
}

double re_approx(double omega, int n) {
  if (n < 1) {
    throw ParameterError("re_approx needs n >= 1");
  }
  return omega * omega / n;
}

EvolutionRecord compare_engines(const SystemParams& params, double theta, double t, int n,
                                const JumpSpec& jumps, const DiscreteOptions& options) {
  const DensityMatrix rho0 = initial_state(theta);
  const DensityMatrix analytic = evolve_analytic(params, rho0, t);
  const DensityMatrix discrete = evolve_discrete(params, rho0, t, n, jumps, options).rho;

  EvolutionRecord rec;
  rec.theta = theta;
  rec.t = t;
  rec.n = n;
  rec.norm_analytic = spectral_norm(analytic.matrix());
  rec.norm_discrete = spectral_norm(discrete.matrix());
  rec.distance = distance(discrete, analytic);
  rec.relative_error = relative_error(discrete, analytic);
  rec.re_approx = re_approx(params.omega(), n);
  return rec;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      continue;
    }
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  if (count < 2) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return (count * sxy - sx * sy) / denom;
}

}  // namespace krausmap
