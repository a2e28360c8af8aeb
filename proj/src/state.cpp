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

#include "qutrit/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qutrit/error.hpp"

namespace qutrit {
namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kInvSqrt3 = 1.0 / std::numbers::sqrt3;
const Complex kI{0.0, 1.0};

// Bilinear cross product (no conjugation).
CVec3 Cross(const CVec3& a, const CVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double Norm2(const CVec3& v) {
  return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]);
}

// x^dagger M y
Complex Sandwich(const CVec3& x, const Matrix3& m, const CVec3& y) {
  Complex s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += std::conj(x[i]) * m(i, j) * y[j];
  return s;
}

// Closed-form eigenvalues, descending, for a Hermitian matrix.
Vec3 TrigonometricEigenvalues(const Matrix3& m) {
  const double q = m.Trace().real() / 3.0;
  Matrix3 b = m - q * Matrix3::Identity();
  double frob = 0.0;
  for (const Complex& z : b.e) frob += std::norm(z);
  const double p2 = frob / 6.0;
  if (p2 <= 1e-300) return {q, q, q};
  const double p = std::sqrt(p2);
  const double r = std::clamp(((1.0 / p) * b).Determinant().real() / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double hi = q + 2.0 * p * std::cos(phi);
  const double lo = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  return {hi, 3.0 * q - hi - lo, lo};
}

}  // namespace

std::string_view PurityClassName(PurityClass c) {
  switch (c) {
    case PurityClass::kNotAState: return "NotAState";
    case PurityClass::kMixedInterior: return "MixedInterior";
    case PurityClass::kBoundaryMixed: return "BoundaryMixed";
    case PurityClass::kPure: return "Pure";
  }
  return "Unknown";
}

DensityMatrix DensityMatrix::MaximallyMixed() {
  return ValidateMatrix((1.0 / 3.0) * Matrix3::Identity());
}

DensityMatrix ValidateMatrix(const Matrix3& raw, double tol) {
  const double asym = HermitianDefect(raw);
  if (!(asym <= tol)) {
    std::ostringstream os;
    os << "matrix is not Hermitian: asymmetry " << asym << " exceeds " << tol;
    throw Error(ErrorKind::kNotHermitian, os.str(), asym);
  }
  Matrix3 h = 0.5 * (raw + raw.Adjoint());
  const double trace_err = std::abs(h.Trace().real() - 1.0);
  if (!(trace_err <= tol)) {
    std::ostringstream os;
    os << "trace differs from 1 by " << trace_err;
    throw Error(ErrorKind::kTraceNotOne, os.str(), trace_err);
  }
  return DensityMatrix(h);
}

Matrix3 GellMannBasis(int i) {
  Matrix3 m;
  switch (i) {
    case 0: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 1: m(0, 1) = -kI; m(1, 0) = kI; break;
    case 2: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case 3: m(0, 2) = 1.0; m(2, 0) = 1.0; break;
    case 4: m(0, 2) = -kI; m(2, 0) = kI; break;
    case 5: m(1, 2) = 1.0; m(2, 1) = 1.0; break;
    case 6: m(1, 2) = -kI; m(2, 1) = kI; break;
    case 7:
      m(0, 0) = kInvSqrt3;
      m(1, 1) = kInvSqrt3;
      m(2, 2) = -2.0 * kInvSqrt3;
      break;
    default:
      throw Error(ErrorKind::kInvalidArgument, "Gell-Mann index out of range");
  }
  return m;
}

Matrix3 GellMannToRawMatrix(const GellMannVector& n) {
  // Entries written out directly; this sits inside root-finding loops.
  const double s = kInvSqrt3;
  Matrix3 m;
  m(0, 0) = 1.0 / 3.0 + s * (n[2] + n[7] * kInvSqrt3);
  m(1, 1) = 1.0 / 3.0 + s * (-n[2] + n[7] * kInvSqrt3);
  m(2, 2) = 1.0 / 3.0 - s * (2.0 * n[7] * kInvSqrt3);
  m(0, 1) = s * Complex(n[0], -n[1]);
  m(0, 2) = s * Complex(n[3], -n[4]);
  m(1, 2) = s * Complex(n[5], -n[6]);
  m(1, 0) = std::conj(m(0, 1));
  m(2, 0) = std::conj(m(0, 2));
  m(2, 1) = std::conj(m(1, 2));
  return m;
}

DensityMatrix GellMannToMatrix(const GellMannVector& n) {
  return ValidateMatrix(GellMannToRawMatrix(n));
}

GellMannVector MatrixToGellMann(const DensityMatrix& rho) {
  const Matrix3& m = rho.matrix();
  // n_k = (sqrt 3 / 2) Tr(rho lambda_k), expanded entry-wise.
  const double c = kSqrt3 / 2.0;
  GellMannVector n;
  n[0] = c * 2.0 * m(0, 1).real();
  n[1] = c * -2.0 * m(0, 1).imag();
  n[2] = c * (m(0, 0).real() - m(1, 1).real());
  n[3] = c * 2.0 * m(0, 2).real();
  n[4] = c * -2.0 * m(0, 2).imag();
  n[5] = c * 2.0 * m(1, 2).real();
  n[6] = c * -2.0 * m(1, 2).imag();
  n[7] = 0.5 * (m(0, 0).real() + m(1, 1).real() - 2.0 * m(2, 2).real());
  return n;
}

DensityMatrix Spin1ToMatrix(const SpinOneParams& p) {
  const double sum = p.omega[0] + p.omega[1] + p.omega[2];
  if (!(std::abs(sum - 1.0) <= 1e-12)) {
    std::ostringstream os;
    os << "spin-1 weights sum to " << sum << ", expected 1";
    throw Error(ErrorKind::kWeightSumViolation, os.str(), sum);
  }
  Matrix3 m;
  m(0, 0) = p.omega[0];
  m(1, 1) = p.omega[1];
  m(2, 2) = p.omega[2];
  m(0, 1) = 0.5 * Complex(p.q[2], p.a[2]);
  m(0, 2) = 0.5 * Complex(p.q[1], -p.a[1]);
  m(1, 2) = -0.5 * Complex(p.q[0], p.a[0]);
  m(1, 0) = std::conj(m(0, 1));
  m(2, 0) = std::conj(m(0, 2));
  m(2, 1) = std::conj(m(1, 2));
  return ValidateMatrix(m);
}

SpinOneParams MatrixToSpin1(const DensityMatrix& rho) {
  const Matrix3& m = rho.matrix();
  SpinOneParams p;
  for (int i = 0; i < 3; ++i) p.omega[i] = m(i, i).real();
  p.q[2] = 2.0 * m(0, 1).real();
  p.a[2] = 2.0 * m(0, 1).imag();
  p.q[1] = 2.0 * m(0, 2).real();
  p.a[1] = -2.0 * m(0, 2).imag();
  p.q[0] = -2.0 * m(1, 2).real();
  p.a[0] = -2.0 * m(1, 2).imag();
  return p;
}

CharPoly ComputeCharPoly(const Matrix3& m) {
  const double d0 = m(0, 0).real(), d1 = m(1, 1).real(), d2 = m(2, 2).real();
  const double n01 = std::norm(m(0, 1)), n02 = std::norm(m(0, 2)),
               n12 = std::norm(m(1, 2));
  CharPoly c;
  c.e1 = d0 + d1 + d2;
  // Sum of principal 2x2 minors.
  c.e2 = (d0 * d1 - n01) + (d0 * d2 - n02) + (d1 * d2 - n12);
  c.e3 = d0 * d1 * d2 + 2.0 * (m(0, 1) * m(1, 2) * m(2, 0)).real() - d0 * n12 -
         d1 * n02 - d2 * n01;
  return c;
}

Vec3 Eigenvalues(const Matrix3& m) {
  const Vec3 trig = TrigonometricEigenvalues(m);
  const double gap_hi = trig[0] - trig[1];
  const double gap_lo = trig[1] - trig[2];
  const double iso = gap_hi >= gap_lo ? trig[0] : trig[2];
  if (std::max(gap_hi, gap_lo) <= 0.0) return trig;

  // Eigenvector of the isolated root from the largest cross product of rows
  // of (M - iso I).
  const Matrix3 shifted = m - iso * Matrix3::Identity();
  const CVec3 r0{shifted(0, 0), shifted(0, 1), shifted(0, 2)};
  const CVec3 r1{shifted(1, 0), shifted(1, 1), shifted(1, 2)};
  const CVec3 r2{shifted(2, 0), shifted(2, 1), shifted(2, 2)};
  CVec3 best = Cross(r0, r1);
  double best_n = Norm2(best);
  for (const CVec3& c : {Cross(r0, r2), Cross(r1, r2)}) {
    const double n = Norm2(c);
    if (n > best_n) {
      best = c;
      best_n = n;
    }
  }
  if (best_n <= 1e-300) return trig;
  const double inv = 1.0 / std::sqrt(best_n);
  CVec3 v{best[0] * inv, best[1] * inv, best[2] * inv};

  // Orthonormal basis {u, w} of the complement of v.
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(v[i]) < std::abs(v[k])) k = i;
  CVec3 u{};
  for (int i = 0; i < 3; ++i) u[i] = -v[i] * std::conj(v[k]);
  u[k] += 1.0;
  const double un = 1.0 / std::sqrt(Norm2(u));
  for (Complex& z : u) z *= un;
  CVec3 w = Cross(v, u);
  for (Complex& z : w) z = std::conj(z);

  const double a = Sandwich(u, m, u).real();
  const double d = Sandwich(w, m, w).real();
  const Complex b = Sandwich(u, m, w);
  const double mean = 0.5 * (a + d);
  const double rad = std::hypot(0.5 * (a - d), std::abs(b));
  const double lam = Sandwich(v, m, v).real();
  Vec3 out{lam, mean + rad, mean - rad};
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

TraceInvariants ComputeTraceInvariants(const Matrix3& m) {
  TraceInvariants t;
  t.i1 = m.Trace().real();
  double tr2 = 0.0;
  for (const Complex& z : m.e) tr2 += std::norm(z);
  const double tr3 = (m * m * m).Trace().real();
  t.i2t = tr2;
  t.i3t = 3.0 * tr2 - 2.0 * tr3;
  return t;
}

ParamInvariants ComputeParamInvariants(const GellMannVector& n) {
  const double n1 = n[0], n2 = n[1], n3 = n[2], n4 = n[3], n5 = n[4], n6 = n[5],
               n7 = n[6], n8 = n[7];
  double sq = 0.0;
  for (double x : n.n) sq += x * x;
  const double s123 = n1 * n1 + n2 * n2 + n3 * n3;
  const double s4567 = n4 * n4 + n5 * n5 + n6 * n6 + n7 * n7;
  ParamInvariants p;
  p.i2p = sq;
  p.i3p = 3.0 * sq - 6.0 * n8 * (s123 - 0.5 * s4567 - n8 * n8 / 3.0) -
          6.0 * kSqrt3 * (n1 * n4 * n6 + n1 * n5 * n7 + n2 * n5 * n6 - n2 * n4 * n7) -
          3.0 * kSqrt3 * n3 * (n4 * n4 + n5 * n5 - n6 * n6 - n7 * n7);
  return p;
}

PurityClass ClassifyMatrix(const Matrix3& m, double tol) {
  const CharPoly c = ComputeCharPoly(m);
  // Every eigenvalue is >= -tol iff the spectrum of (M + tol I) is
  // nonnegative, iff its characteristic coefficients are all nonnegative.
  const double e2s = c.e2 + 2.0 * tol * c.e1 + 3.0 * tol * tol;
  const double e3s = c.e3 + tol * c.e2 + tol * tol * c.e1 + tol * tol * tol;
  // Rounding bounds on the computed coefficients. Near a double-zero eigenvalue
  // e3s is O(tol^2), below the determinant's rounding noise; inside that band
  // the sign is settled by the deflated eigenvalues instead.
  double scale = 0.0;
  for (const Complex& z : m.e) scale = std::max(scale, std::abs(z));
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double band2 = 32.0 * kEps * scale * scale;
  const double band3 = 32.0 * kEps * scale * scale * scale;
  if (e2s < -band2 || e3s < -band3) return PurityClass::kNotAState;
  if (e2s < band2 || e3s < band3) {
    if (Eigenvalues(m)[2] < -tol) return PurityClass::kNotAState;
  }
  const double i2t = c.e1 * c.e1 - 2.0 * c.e2;
  const double i3t = 1.0 - 6.0 * c.e3;
  const bool boundary = std::abs(i3t - 1.0) <= tol;
  if (boundary && std::abs(i2t - 1.0) <= tol) return PurityClass::kPure;
  if (boundary) return PurityClass::kBoundaryMixed;
  return PurityClass::kMixedInterior;
}

PurityClass ClassifyState(const DensityMatrix& rho, double tol) {
  return ClassifyMatrix(rho.matrix(), tol);
}

Vec3 WeightsFromAngles(double theta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  return {st * st * cp * cp, st * st * sp * sp, ct * ct};
}

}  // namespace qutrit
