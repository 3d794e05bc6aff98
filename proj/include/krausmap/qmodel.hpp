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

// Core types for the three-level atom-cavity model.
//
// Basis convention, used by every module:
//   index 0  <->  |1> = |e0>  (excited atom, empty cavity)
//   index 1  <->  |2> = |g1>  (ground atom, one photon)
//   index 2  <->  |3> = |g0>  (ground atom, empty cavity)
// Matrix entries are addressed zero-based in code; docs use the 1-based
// labels rho_11 .. rho_33.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <string_view>

namespace krausmap {

using Complex = std::complex<double>;
using Matrix3 = Eigen::Matrix3cd;
using Vector9 = Eigen::Matrix<Complex, 9, 1>;
using Matrix9 = Eigen::Matrix<Complex, 9, 9>;

/// Named tolerances shared by validation and the acceptance suite.
struct ToleranceSet {
  double trace = 1e-10;        ///< |Tr rho - 1|
  double hermiticity = 1e-12;  ///< max |rho - rho^dagger|
  double positivity = -1e-10;  ///< lowest admissible eigenvalue
  double critical = 1e-9;      ///< |gamma^2 - 1| below this is Critical
};

inline constexpr ToleranceSet kTolerances{};

enum class Regime { Oscillatory, Critical, Dissipative, Uncoupled };

std::string_view to_string(Regime regime);

/// Physical rates of the resonant model: photon decay kappa, atom-cavity
/// coupling (Rabi) and the common transition frequency omega.
class SystemParams {
 public:
  /// Throws ParameterError naming the field when a rate is negative or
  /// non-finite.
  static SystemParams make(double kappa, double rabi, double omega);

  double kappa() const { return kappa_; }
  double rabi() const { return rabi_; }
  double omega() const { return omega_; }
  /// kappa / (2 rabi); +inf when uncoupled.
  double gamma() const { return gamma_; }
  Regime regime() const { return regime_; }

 private:
  SystemParams(double kappa, double rabi, double omega);

  double kappa_;
  double rabi_;
  double omega_;
  double gamma_;
  Regime regime_;
};

/// 3x3 density matrix in the fixed basis above. Construction does not
/// validate; use validate_density.
class DensityMatrix {
 public:
  DensityMatrix() : entries_(Matrix3::Zero()) {}
  explicit DensityMatrix(const Matrix3& entries) : entries_(entries) {}

  const Matrix3& matrix() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }
  Complex trace() const { return entries_.trace(); }

  /// Projector onto basis state index (0, 1 or 2).
  static DensityMatrix basis_projector(int index);

  friend bool operator==(const DensityMatrix& a, const DensityMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Matrix3 entries_;
};

/// Row-major 9-vector (rho_11, rho_12, rho_13, rho_21, ..., rho_33).
class VectorizedState {
 public:
  VectorizedState() : components_(Vector9::Zero()) {}
  explicit VectorizedState(const Vector9& components) : components_(components) {}

  const Vector9& vector() const { return components_; }
  Complex operator[](int k) const { return components_(k); }

 private:
  Vector9 components_;
};

VectorizedState vectorize(const DensityMatrix& rho);
DensityMatrix devectorize(const VectorizedState& v);

/// Pure state (cos t |g> + sin t |e>) (x) |0>, i.e.
///   [[sin^2, 0, sin cos], [0, 0, 0], [sin cos, 0, cos^2]].
/// Any finite angle is accepted.
DensityMatrix initial_state(double theta);

struct ValidationReport {
  double trace_deviation = 0.0;
  double hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool trace_ok = false;
  bool hermitian_ok = false;
  bool positive_ok = false;

  bool ok() const { return trace_ok && hermitian_ok && positive_ok; }
};

ValidationReport validate_density(const DensityMatrix& rho,
                                  const ToleranceSet& tol = kTolerances);

/// Ascending eigenvalues of the Hermitian part (M + M^dagger)/2, by cyclic
/// complex Jacobi rotations.
std::array<double, 3> hermitian_eigenvalues(const Matrix3& m);

}  // namespace krausmap
