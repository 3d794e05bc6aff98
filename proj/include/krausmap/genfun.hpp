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

// Generating functions of the damped atom-cavity exchange.
//
// With g(t) = exp(-kappa t / 4) the three functions are
//   Lambda_0(t)   = g(t) sinh(Theta) / sqrt(gamma^2 - 1)
//   Lambda_pm(t)  = g(t) sinh(Theta +- phi) / sqrt(gamma^2 - 1),  cosh(phi) = gamma
// where Theta = rabi sqrt(gamma^2 - 1) t / 2. They are evaluated through the
// addition form Lambda_pm = gamma Lambda_0 +- g C(t), with C = cosh(Theta)
// (gamma > 1), cos(Theta') (gamma < 1) or 1 (gamma = 1). This is real in
// every regime and never needs phi itself.

#include "krausmap/qmodel.hpp"

namespace krausmap {

struct GeneratingValues {
  double time = 0.0;
  double lambda_plus = 1.0;   ///< Lambda_+
  double lambda_minus = -1.0; ///< Lambda_-
  double lambda_zero = 0.0;   ///< Lambda_0
  double envelope = 1.0;      ///< g(t)
  double cap_plus = 0.0;      ///< lambda_+ = 1 - Lambda_0^2 - Lambda_+^2
  double cap_minus = 0.0;     ///< lambda_- = 1 - Lambda_0^2 - Lambda_-^2
  /// gamma * Lambda_0 = (Lambda_+ + Lambda_-) / 2; finite even when uncoupled.
  double gamma_lambda_zero = 0.0;
};

struct GenfunOptions {
  /// Negative times are rejected unless set.
  bool allow_negative_time = false;
};

GeneratingValues generating_values(const SystemParams& params, double t,
                                   GenfunOptions options = {});

enum class LimitCase {
  CouplingOff,  ///< rabi -> 0: atom and cavity evolve independently
  DecayOff,     ///< kappa -> 0: closed atom-cavity system
};

/// Closed-form limits; the rate that the case switches off is ignored.
GeneratingValues limit_case(const SystemParams& params, double t, LimitCase which);

}  // namespace krausmap
