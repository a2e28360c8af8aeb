// Copyright 2026 The Qutrit Sections Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <string_view>

#include "qutrit/matrix.hpp"

namespace qutrit {

inline constexpr double kDefaultHermitianTol = 1e-12;
inline constexpr double kDefaultClassifyTol = 1e-9;

/// A 3x3 Hermitian matrix with unit trace.
///
/// Positivity is deliberately not part of the type: unphysical matrices can be
/// held and then rejected by `ClassifyState`. Instances are only produced by
/// `ValidateMatrix` and the parameterization conversions, all of which check
/// the Hermitian and trace invariants.
class DensityMatrix {
 public:
  const Matrix3& matrix() const noexcept { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  /// Maximally mixed state I/3.
  static DensityMatrix MaximallyMixed();

 private:
  explicit DensityMatrix(const Matrix3& m) : m_(m) {}
  friend DensityMatrix ValidateMatrix(const Matrix3& raw, double tol);

  Matrix3 m_;
};

/// Gell-Mann coordinates n_1..n_8, stored zero-based (n[0] is n_1).
struct GellMannVector {
  std::array<double, 8> n{};

  double& operator[](int i) { return n[i]; }
  double operator[](int i) const { return n[i]; }
};

/// Spin-1 parameterization: weights omega_i = rho_ii and the real/imaginary
/// parts (q_i, a_i) of the off-diagonal entries.
struct SpinOneParams {
  Vec3 omega{};
  Vec3 a{};
  Vec3 q{};
};

/// Elementary symmetric functions of the eigenvalues.
struct CharPoly {
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
};

struct TraceInvariants {
  double i1 = 0.0;   // Tr rho
  double i2t = 0.0;  // Tr rho^2
  double i3t = 0.0;  // 3 Tr rho^2 - 2 Tr rho^3
};

struct ParamInvariants {
  double i2p = 0.0;  // |n|^2
  double i3p = 0.0;  // cubic form in n
};

enum class PurityClass { kNotAState, kMixedInterior, kBoundaryMixed, kPure };

std::string_view PurityClassName(PurityClass c);

// Accepts `raw` if it is Hermitian and unit-trace within `tol`. The stored
// matrix is the Hermitian part (M + M^dagger)/2.
DensityMatrix ValidateMatrix(const Matrix3& raw, double tol = kDefaultHermitianTol);

// rho = I/3 + (1/sqrt 3) sum_k n_k lambda_k with the standard Gell-Mann basis
// (Tr lambda_i lambda_j = 2 delta_ij).
DensityMatrix GellMannToMatrix(const GellMannVector& n);
// Same map without validation; used in hot loops over section coordinates.
Matrix3 GellMannToRawMatrix(const GellMannVector& n);
GellMannVector MatrixToGellMann(const DensityMatrix& rho);

// The i-th standard Gell-Mann matrix, i in [0, 8).
Matrix3 GellMannBasis(int i);

DensityMatrix Spin1ToMatrix(const SpinOneParams& p);
SpinOneParams MatrixToSpin1(const DensityMatrix& rho);

CharPoly ComputeCharPoly(const Matrix3& m);

// Eigenvalues of a Hermitian matrix in descending order. Trigonometric closed
// form, followed by deflation of the most isolated root so that clustered
// eigenvalues keep full absolute accuracy.
Vec3 Eigenvalues(const Matrix3& m);

TraceInvariants ComputeTraceInvariants(const Matrix3& m);
ParamInvariants ComputeParamInvariants(const GellMannVector& n);

PurityClass ClassifyState(const DensityMatrix& rho, double tol = kDefaultClassifyTol);
PurityClass ClassifyMatrix(const Matrix3& m, double tol = kDefaultClassifyTol);

// (sin^2 t cos^2 p, sin^2 t sin^2 p, cos^2 t)
Vec3 WeightsFromAngles(double theta, double phi);

}  // namespace qutrit
