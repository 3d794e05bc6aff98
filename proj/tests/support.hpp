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

// Test-only helpers: seeded generators and closed forms written
// independently of the library code paths they check.

#include <complex>
#include <random>

#include "krausmap/qmodel.hpp"

namespace krausmap::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261017);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Matrix3 random_matrix(double scale = 1.0) {
  Matrix3 m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      m(r, c) = Complex(uniform(-scale, scale), uniform(-scale, scale));
    }
  }
  return m;
}

/// Random full-rank density matrix B B^dagger / Tr.
inline DensityMatrix random_density() {
  const Matrix3 b = random_matrix();
  Matrix3 rho = b * b.adjoint();
  rho /= rho.trace();
  return DensityMatrix(rho);
}

struct LiteralLambdas {
  double plus;
  double minus;
  double zero;
};

/// Generating functions straight from the sinh(Theta +- phi) form, with
/// cosh(phi) = gamma continued through complex arithmetic for gamma < 1.
inline LiteralLambdas literal_lambdas(double kappa, double rabi, double t) {
  using C = std::complex<double>;
  const double gamma = kappa / (2.0 * rabi);
  const double g = std::exp(-kappa * t / 4.0);
  const C root = std::sqrt(C(gamma * gamma - 1.0, 0.0));
  const C phi = std::acosh(C(gamma, 0.0));
  const C theta = rabi * root * t / 2.0;
  return {(g * std::sinh(theta + phi) / root).real(), (g * std::sinh(theta - phi) / root).real(),
          (g * std::sinh(theta) / root).real()};
}

inline double max_abs(const Matrix3& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace krausmap::testing
