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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "krausmap/error.hpp"
#include "krausmap/genfun.hpp"
#include "support.hpp"

using namespace krausmap;
using krausmap::testing::literal_lambdas;
using krausmap::testing::uniform;

TEST_SUITE("genfun") {

TEST_CASE("identity at t = 0 in every regime") {
  for (const auto& p : {SystemParams::make(2, 4, 2), SystemParams::make(8, 2, 1),
                        SystemParams::make(4, 2, 1), SystemParams::make(2, 0, 1),
                        SystemParams::make(0, 3, 1)}) {
    const auto v = generating_values(p, 0.0);
    CHECK(v.lambda_plus == 1.0);
    CHECK(v.lambda_minus == -1.0);
    CHECK(v.lambda_zero == 0.0);
    CHECK(v.cap_plus == 0.0);
    CHECK(v.cap_minus == 0.0);
    CHECK(v.envelope == 1.0);
  }
}

TEST_CASE("frozen high-precision values") {
  // 40-digit evaluations of the sinh(Theta +- phi) form.
  const auto osc = generating_values(SystemParams::make(2, 4, 2), 1.0);
  CHECK(osc.lambda_plus == doctest::Approx(-0.070644550919464029241).epsilon(1e-13));
  CHECK(osc.lambda_minus == doctest::Approx(0.36314465771780583591).epsilon(1e-13));
  CHECK(osc.lambda_zero == doctest::Approx(0.58500021359668361334).epsilon(1e-13));
  // Same number as e^{-1/2} 4 sin(sqrt(15)/2) / sqrt(15).
  CHECK(osc.lambda_zero ==
        doctest::Approx(std::exp(-0.5) * 4 * std::sin(std::sqrt(15.0) / 2) / std::sqrt(15.0))
            .epsilon(1e-14));

  const auto dis = generating_values(SystemParams::make(8, 2, 1), 0.7);
  CHECK(dis.lambda_plus == doctest::Approx(0.88742311501345811134).epsilon(1e-13));
  CHECK(dis.lambda_minus == doctest::Approx(-0.014908250149645343792).epsilon(1e-12));
  CHECK(dis.lambda_zero == doctest::Approx(0.21812871621595319189).epsilon(1e-13));
}

TEST_CASE("agrees with the literal complex-continued form") {
  for (int i = 0; i < 2000; ++i) {
    const double rabi = uniform(0.2, 6.0);
    double gamma = uniform(0.05, 3.0);
    if (std::abs(gamma - 1.0) < 1e-3) {
      continue;  // the literal form divides by sqrt(gamma^2 - 1)
    }
    const double t = uniform(0.0, 3.0);
    const auto p = SystemParams::make(2 * rabi * gamma, rabi, 1.0);
    const auto v = generating_values(p, t);
    const auto lit = literal_lambdas(p.kappa(), p.rabi(), t);
    CHECK(std::abs(v.lambda_plus - lit.plus) <= 1e-11);
    CHECK(std::abs(v.lambda_minus - lit.minus) <= 1e-11);
    CHECK(std::abs(v.lambda_zero - lit.zero) <= 1e-11);
  }
}

TEST_CASE("sum identity Lambda_+ + Lambda_- = 2 gamma Lambda_0") {
  for (int i = 0; i < 10000; ++i) {
    const double kappa = uniform(0.0, 10.0);
    const double rabi = uniform(0.01, 10.0);
    const double t = uniform(0.0, 3.0);
    const auto p = SystemParams::make(kappa, rabi, 1.0);
    const auto v = generating_values(p, t);
    CHECK(std::abs(v.lambda_plus + v.lambda_minus - 2 * p.gamma() * v.lambda_zero) <= 1e-10);
  }
}

TEST_CASE("unified form matches explicit regime branches") {
  // Lambda_pm = gamma Lambda_0 +- g C, with C from each regime's own function.
  struct Case {
    double kappa, rabi;
  };
  for (const Case c : {Case{8, 2}, Case{2, 4}, Case{4, 2}, Case{3, 1}, Case{0.5, 3}}) {
    const auto p = SystemParams::make(c.kappa, c.rabi, 1.0);
    for (double t : {0.1, 0.5, 1.0, 2.0, 3.0}) {
      const auto v = generating_values(p, t);
      const double g = std::exp(-c.kappa * t / 4);
      const double gsq = p.gamma() * p.gamma() - 1.0;
      double cfun = 1.0;
      double lam0 = g * c.rabi * t / 2;
      if (p.regime() == Regime::Dissipative) {
        const double th = c.rabi * std::sqrt(gsq) * t / 2;
        cfun = std::cosh(th);
        lam0 = g * std::sinh(th) / std::sqrt(gsq);
      } else if (p.regime() == Regime::Oscillatory) {
        const double th = c.rabi * std::sqrt(-gsq) * t / 2;
        cfun = std::cos(th);
        lam0 = g * std::sin(th) / std::sqrt(-gsq);
      }
      CHECK(std::abs(v.lambda_zero - lam0) <= 1e-12);
      CHECK(std::abs(v.lambda_plus - (p.gamma() * lam0 + g * cfun)) <= 1e-12);
      CHECK(std::abs(v.lambda_minus - (p.gamma() * lam0 - g * cfun)) <= 1e-12);
      CHECK(std::abs(v.envelope - g) <= 1e-15);
    }
  }
}

TEST_CASE("continuous across the critical point") {
  const double rabi = 2.0;
  const auto crit = SystemParams::make(4.0, rabi, 1.0);
  REQUIRE(crit.regime() == Regime::Critical);
  for (double gamma : {1.0 - 1e-6, 1.0 + 1e-6}) {
    const auto near = SystemParams::make(2 * rabi * gamma, rabi, 1.0);
    CHECK(near.regime() != Regime::Critical);
    for (double t = 0.0; t <= 3.0; t += 0.05) {
      const auto a = generating_values(near, t);
      const auto b = generating_values(crit, t);
      CHECK(std::abs(a.lambda_plus - b.lambda_plus) < 1e-5);
      CHECK(std::abs(a.lambda_minus - b.lambda_minus) < 1e-5);
      CHECK(std::abs(a.lambda_zero - b.lambda_zero) < 1e-5);
    }
  }
  // Critical closed form: Lambda_0 = g rabi t / 2.
  const auto v = generating_values(crit, 1.5);
  CHECK(v.lambda_zero == doctest::Approx(std::exp(-1.5) * 1.5).epsilon(1e-14));
}

TEST_CASE("limit_case closed forms") {
  const auto p = SystemParams::make(2, 4, 2);
  const auto decay_off = limit_case(p, std::numbers::pi / 4, LimitCase::DecayOff);
  CHECK(decay_off.lambda_zero == doctest::Approx(1.0));
  CHECK(std::abs(decay_off.lambda_plus) < 1e-15);
  CHECK(std::abs(decay_off.lambda_minus) < 1e-15);

  const auto coupling_off = limit_case(p, 1.0, LimitCase::CouplingOff);
  CHECK(coupling_off.lambda_plus == 1.0);
  CHECK(coupling_off.lambda_minus == doctest::Approx(-std::exp(-1.0)));
  CHECK(coupling_off.lambda_zero == 0.0);

  for (auto which : {LimitCase::CouplingOff, LimitCase::DecayOff}) {
    const auto v = limit_case(p, 0.0, which);
    CHECK(v.lambda_plus == 1.0);
    CHECK(v.lambda_minus == -1.0);
    CHECK(v.lambda_zero == 0.0);
  }
}

TEST_CASE("uncoupled params reproduce the coupling-off limit") {
  const auto p = SystemParams::make(2, 0, 1);
  for (double t : {0.0, 0.3, 1.0, 3.0}) {
    const auto v = generating_values(p, t);
    CHECK(v.lambda_plus == 1.0);
    CHECK(v.lambda_minus == doctest::Approx(-std::exp(-t)));
    CHECK(v.lambda_zero == 0.0);
  }
}

TEST_CASE("vanishing rates converge to the limit cases") {
  for (double t = 0.0; t <= 3.0; t += 0.1) {
    const auto weak = generating_values(SystemParams::make(2, 1e-12, 1), t);
    const auto off = limit_case(SystemParams::make(2, 1e-12, 1), t, LimitCase::CouplingOff);
    CHECK(std::abs(weak.lambda_plus - off.lambda_plus) < 1e-6);
    CHECK(std::abs(weak.lambda_minus - off.lambda_minus) < 1e-6);
    CHECK(std::abs(weak.lambda_zero - off.lambda_zero) < 1e-6);

    const auto closed = generating_values(SystemParams::make(1e-12, 4, 1), t);
    const auto dec = limit_case(SystemParams::make(1e-12, 4, 1), t, LimitCase::DecayOff);
    CHECK(std::abs(closed.lambda_plus - dec.lambda_plus) < 1e-6);
    CHECK(std::abs(closed.lambda_minus - dec.lambda_minus) < 1e-6);
    CHECK(std::abs(closed.lambda_zero - dec.lambda_zero) < 1e-6);
  }
}

TEST_CASE("caps stay non-negative on [0, 3]") {
  for (int i = 0; i < 5000; ++i) {
    const auto p = SystemParams::make(uniform(0, 10), uniform(0, 10), 1.0);
    const auto v = generating_values(p, uniform(0, 3));
    CHECK(v.cap_plus >= -1e-10);
    CHECK(v.cap_minus >= -1e-10);
  }
}

TEST_CASE("time validation") {
  const auto p = SystemParams::make(2, 4, 2);
  CHECK_THROWS_AS(generating_values(p, -0.1), ParameterError);
  CHECK_THROWS_AS(generating_values(p, NAN), ParameterError);
  const auto back = generating_values(p, -0.1, GenfunOptions{.allow_negative_time = true});
  const auto lit = literal_lambdas(2, 4, -0.1);
  CHECK(back.lambda_zero == doctest::Approx(lit.zero).epsilon(1e-12));
  CHECK(back.lambda_plus == doctest::Approx(lit.plus).epsilon(1e-12));
}

}  // TEST_SUITE
