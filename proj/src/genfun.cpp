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

#include "krausmap/genfun.hpp"

#include <cmath>

#include "krausmap/error.hpp"

namespace krausmap {

namespace {

void check_time(double t, const GenfunOptions& options) {
  if (!std::isfinite(t)) {
    throw ParameterError("time must be finite");
  }
  if (t < 0.0 && !options.allow_negative_time) {
    throw ParameterError("time must be >= 0, got " + std::to_string(t));
  }
}

void fill_caps(GeneratingValues& v) {
  const double l0sq = v.lambda_zero * v.lambda_zero;
  v.cap_plus = 1.0 - l0sq - v.lambda_plus * v.lambda_plus;
  v.cap_minus = 1.0 - l0sq - v.lambda_minus * v.lambda_minus;
}

}  // namespace

GeneratingValues generating_values(const SystemParams& params, double t,
                                   GenfunOptions options) {
  check_time(t, options);
  if (params.regime() == Regime::Uncoupled) {
    return limit_case(params, t, LimitCase::CouplingOff);
  }

  // z = (gamma^2 - 1) (rabi t / 2)^2 written without gamma, so the
  // expression stays finite for any rabi > 0.
  const double q = 0.25 * params.kappa() * t;
  const double h = 0.5 * params.rabi() * t;
  const double z = (q - h) * (q + h);

  // g S and g C, with S(z) = sinh(sqrt z)/sqrt z and C(z) = cosh(sqrt z)
  // continued to z < 0.
  double g_s = 0.0;
  double g_c = 0.0;
  const double g = std::exp(-q);
  if (params.regime() == Regime::Critical || z == 0.0) {
    g_s = g * (1.0 + z / 6.0 + z * z / 120.0);
    g_c = g * (1.0 + z / 2.0 + z * z / 24.0);
  } else if (z > 0.0) {
    const double r = std::sqrt(z);
    const double up = std::exp(r - q);
    const double down = std::exp(-r - q);
    g_s = 0.5 * (up - down) / r;
    g_c = 0.5 * (up + down);
  } else {
    const double r = std::sqrt(-z);
    g_s = g * std::sin(r) / r;
    g_c = g * std::cos(r);
  }

  GeneratingValues v;
  v.time = t;
  v.envelope = g;
  v.lambda_zero = h * g_s;
  v.gamma_lambda_zero = q * g_s;
  v.lambda_plus = v.gamma_lambda_zero + g_c;
  v.lambda_minus = v.gamma_lambda_zero - g_c;
  fill_caps(v);
  return v;
}

GeneratingValues limit_case(const SystemParams& params, double t, LimitCase which) {
  check_time(t, GenfunOptions{.allow_negative_time = true});
  GeneratingValues v;
  v.time = t;
  switch (which) {
    case LimitCase::CouplingOff: {
      const double decay = std::exp(-0.5 * params.kappa() * t);
      v.envelope = std::exp(-0.25 * params.kappa() * t);
      v.lambda_plus = 1.0;
      v.lambda_minus = -decay;
      v.lambda_zero = 0.0;
      v.gamma_lambda_zero = 0.5 * (1.0 - decay);
      break;
    }
    case LimitCase::DecayOff: {
      const double arg = 0.5 * params.rabi() * t;
      v.envelope = 1.0;
      v.lambda_plus = std::cos(arg);
      v.lambda_minus = -std::cos(arg);
      v.lambda_zero = std::sin(arg);
      v.gamma_lambda_zero = 0.0;
      break;
    }
  }
  fill_caps(v);
  return v;
}

}  // namespace krausmap
