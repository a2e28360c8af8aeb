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

#include "qutrit/vectors.hpp"

#include <cmath>
#include <sstream>

#include "qutrit/error.hpp"

namespace qutrit {
namespace {

Vec3 Cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double Dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::optional<Vec3> RootsIfRepresentable(const Vec3& sq) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    if (sq[i] < -kSquareClampTol) return std::nullopt;
    out[i] = std::sqrt(std::max(sq[i], 0.0));
  }
  return out;
}

}  // namespace

SpinDerived ComputeSpinDerived(const SpinOneParams& p) {
  const auto& a = p.a;
  const auto& q = p.q;
  const auto& w = p.omega;
  SpinDerived s;
  for (int i = 0; i < 3; ++i) s.r_sq[i] = 0.25 * (a[i] * a[i] + q[i] * q[i]);
  s.d = a[1] * a[2] * q[0] + a[2] * a[0] * q[1] + a[0] * a[1] * q[2] -
        q[0] * q[1] * q[2];
  s.x = 1.0 / 3.0 - 0.5 * (4.0 * w[0] * w[1] * w[2] + s.d);
  return s;
}

Vec3 WVector(const Vec3& omega) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    if (omega[i] < -kSquareClampTol) {
      std::ostringstream os;
      os << "weight omega_" << (i + 1) << " = " << omega[i] << " is negative";
      throw Error(ErrorKind::kNegativeWeight, os.str(), omega[i]);
    }
    out[i] = std::sqrt(std::max(omega[i], 0.0));
  }
  return out;
}

Vec3 USignedSquares(const SpinOneParams& p) {
  const SpinDerived s = ComputeSpinDerived(p);
  const auto& w = p.omega;
  return {1.0 / 3.0 - 2.0 * (w[1] * w[2] - s.r_sq[0]),
          1.0 / 3.0 - 2.0 * (w[2] * w[0] - s.r_sq[1]),
          1.0 / 3.0 - 2.0 * (w[0] * w[1] - s.r_sq[2])};
}

Vec3 VSignedSquares(const SpinOneParams& p) {
  const SpinDerived s = ComputeSpinDerived(p);
  Vec3 out{};
  for (int i = 0; i < 3; ++i) out[i] = s.x + 6.0 * p.omega[i] * s.r_sq[i];
  return out;
}

StateVectors ComputeVectorTriple(const DensityMatrix& rho) {
  const SpinOneParams p = MatrixToSpin1(rho);
  StateVectors sv;
  sv.w = WVector(p.omega);
  sv.u_sq = USignedSquares(p);
  sv.v_sq = VSignedSquares(p);
  sv.u = RootsIfRepresentable(sv.u_sq);
  sv.v = RootsIfRepresentable(sv.v_sq);
  sv.u_real = sv.u.has_value();
  sv.v_real = sv.v.has_value();
  const MixingMeasure mix = ComputeMixing(sv);
  sv.volume = mix.volume;
  sv.alpha = mix.alpha;
  return sv;
}

MixingMeasure ComputeMixing(const StateVectors& sv) {
  if (!sv.u || !sv.v) return {};
  const Vec3 c = Cross(*sv.u, *sv.v);
  const double cross_norm = std::sqrt(Dot(c, c));
  return {std::abs(Dot(c, sv.w)), std::atan2(cross_norm, Dot(*sv.u, *sv.v))};
}

}  // namespace qutrit
