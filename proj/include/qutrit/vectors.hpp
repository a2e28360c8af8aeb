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

#include <optional>

#include "qutrit/state.hpp"

namespace qutrit {

// Squared-component primitives of the spin-1 derived vectors. Component
// squares may be negative for physical mixed states (e.g. diag(0, 1/2, 1/2)
// gives u_1^2 = -1/6), so the real vectors are optional.
inline constexpr double kSquareClampTol = 1e-12;

struct SpinDerived {
  Vec3 r_sq{};     // (a_i^2 + q_i^2) / 4
  double d = 0.0;  // a2 a3 q1 + a3 a1 q2 + a1 a2 q3 - q1 q2 q3
  double x = 0.0;  // 1/3 - (4 w1 w2 w3 + D) / 2
};

struct StateVectors {
  Vec3 w{};
  Vec3 u_sq{};
  Vec3 v_sq{};
  std::optional<Vec3> u;
  std::optional<Vec3> v;
  bool u_real = false;
  bool v_real = false;
  std::optional<double> volume;
  std::optional<double> alpha;
};

struct MixingMeasure {
  std::optional<double> volume;
  std::optional<double> alpha;
};

SpinDerived ComputeSpinDerived(const SpinOneParams& p);

// Componentwise square roots of the weights. Throws NegativeWeight below
// -1e-12; smaller negatives are clamped to zero.
Vec3 WVector(const Vec3& omega);

// 1/3 - 2 (w_j w_k - r_i^2), no square roots taken.
Vec3 USignedSquares(const SpinOneParams& p);

// X + 6 w_i r_i^2, no square roots taken.
Vec3 VSignedSquares(const SpinOneParams& p);

StateVectors ComputeVectorTriple(const DensityMatrix& rho);

/// Parallelepiped volume |(u x v) . w| and the angle between u and v.
///
/// Both are absent unless u and v are real-representable. The triple product
/// uses the state's own w; the equal-weight shortcut with w = (1,1,1)/sqrt 3 is
/// only the special case omega = (1/3, 1/3, 1/3).
MixingMeasure ComputeMixing(const StateVectors& sv);

}  // namespace qutrit
