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
#include "krausmap/metrics.hpp"
#include "krausmap/propagator.hpp"
#include "support.hpp"

using namespace krausmap;
using krausmap::testing::random_matrix;
using krausmap::testing::uniform;

TEST_SUITE("metrics") {

TEST_CASE("spectral norm examples") {
  CHECK(spectral_norm(Matrix3::Identity()) == doctest::Approx(1.0).epsilon(1e-15));
  Matrix3 d = Matrix3::Zero();
  d(0, 0) = 0.3;
  d(2, 2) = 0.7;
  CHECK(spectral_norm(d) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(spectral_norm(initial_state(0.4).matrix()) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(spectral_norm(Matrix3::Zero()) == 0.0);
}

TEST_CASE("spectral norm matches a singular value decomposition") {
  for (int i = 0; i < 500; ++i) {
    const Matrix3 m = random_matrix(uniform(1e-3, 10));
    const double ref = m.jacobiSvd().singularValues()(0);
    CHECK(std::abs(spectral_norm(m) - ref) <= 1e-13 * ref);
  }
}

TEST_CASE("norm axioms") {
  for (int i = 0; i < 500; ++i) {
    const Matrix3 a = random_matrix();
    const Matrix3 b = random_matrix();
    const Complex z(uniform(-2, 2), uniform(-2, 2));
    CHECK(spectral_norm(a) >= 0.0);
    CHECK(spectral_norm(z * a) == doctest::Approx(std::abs(z) * spectral_norm(a)).epsilon(1e-12));
    CHECK(spectral_norm(a + b) <= spectral_norm(a) + spectral_norm(b) + 1e-13);
    CHECK(spectral_norm(a * b) <= spectral_norm(a) * spectral_norm(b) + 1e-13);
  }
}

TEST_CASE("Hermitian norm is the largest absolute eigenvalue") {
  for (int i = 0; i < 300; ++i) {
    const Matrix3 b = random_matrix();
    const Matrix3 h = b + b.adjoint();
    const auto ev = hermitian_eigenvalues(h);
    const double expected = std::max(std::abs(ev[0]), std::abs(ev[2]));
    CHECK(spectral_norm(h) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("distance examples") {
  const auto rho = initial_state(0.7);
  CHECK(distance(rho, rho) == 0.0);
  const auto a = DensityMatrix::basis_projector(0);
  const auto c = DensityMatrix::basis_projector(2);
  CHECK(distance(a, c) == doctest::Approx(1.0).epsilon(1e-15));
  const auto r1 = krausmap::testing::random_density();
  const auto r2 = krausmap::testing::random_density();
  CHECK(distance(r1, r2) == doctest::Approx(distance(r2, r1)).epsilon(1e-14));
}

TEST_CASE("relative error examples") {
  const auto rho = initial_state(std::numbers::pi / 4);
  CHECK(relative_error(rho, rho) == 0.0);
  CHECK(relative_error(DensityMatrix(rho.matrix() * 1.1), rho) == doctest::Approx(0.1).epsilon(1e-13));
  CHECK(relative_error(DensityMatrix(rho.matrix() * 0.9), rho) ==
        doctest::Approx(-0.1).epsilon(1e-13));
  CHECK(relative_error_abs(DensityMatrix(rho.matrix() * 0.9), rho) ==
        doctest::Approx(0.1).epsilon(1e-13));
  CHECK_THROWS_AS(relative_error(rho, DensityMatrix(Matrix3::Zero())), NumericalError);
}

TEST_CASE("re_approx") {
  CHECK(re_approx(2.0, 100) == doctest::Approx(0.04));
  CHECK(re_approx(0.0, 10) == 0.0);
  CHECK(re_approx(3.0, 1) == 9.0);
  CHECK_THROWS_AS(re_approx(2.0, 0), ParameterError);
}

TEST_CASE("|RE| is bounded by D / |rho|") {
  const auto p = SystemParams::make(2, 4, 2);
  for (int i = 0; i < 100; ++i) {
    const double theta = uniform(0, std::numbers::pi);
    const int n = 1 + static_cast<int>(uniform(0, 300));
    const auto rec = compare_engines(p, theta, 1.0, n, JumpSpec::limit_pair(2.0));
    CHECK(rec.relative_error_abs() <= rec.distance / rec.norm_analytic + 1e-14);
    CHECK(rec.re_approx == doctest::Approx(4.0 / n));
  }
}

TEST_CASE("compare_engines record contents") {
  const auto p = SystemParams::make(2, 4, 2);
  const auto rec = compare_engines(p, std::numbers::pi / 4, 1.0, 1000, JumpSpec::limit_pair(2.0));
  const auto analytic = evolve_analytic(p, initial_state(std::numbers::pi / 4), 1.0);
  CHECK(rec.n == 1000);
  CHECK(rec.t == 1.0);
  CHECK(rec.norm_analytic == doctest::Approx(spectral_norm(analytic.matrix())).epsilon(1e-14));
  CHECK(rec.distance < 1e-2);
  CHECK(rec.relative_error > 0.0);
}

TEST_CASE("loglog_slope") {
  CHECK(loglog_slope({1, 10, 100}, {1, 0.1, 0.01}) == doctest::Approx(-1.0));
  CHECK(loglog_slope({1, 2, 4}, {3, 12, 48}) == doctest::Approx(2.0));
  CHECK(loglog_slope({1, 10, 100}, {0, 0.1, 0.01}) == doctest::Approx(-1.0));
  CHECK(std::isnan(loglog_slope({1, 10}, {0, 1})));
}

}  // TEST_SUITE
