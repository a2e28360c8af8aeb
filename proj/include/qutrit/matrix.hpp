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
#include <complex>

namespace qutrit {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<Complex, 3>;

// Dense 3x3 complex matrix, row-major. No structure is assumed.
struct Matrix3 {
  std::array<Complex, 9> e{};

  Complex& operator()(int i, int j) { return e[3 * i + j]; }
  const Complex& operator()(int i, int j) const { return e[3 * i + j]; }

  static Matrix3 Identity();
  static Matrix3 Diagonal(double d0, double d1, double d2);

  Matrix3 Adjoint() const;
  Complex Trace() const;
  Complex Determinant() const;

  friend Matrix3 operator+(const Matrix3& a, const Matrix3& b);
  friend Matrix3 operator-(const Matrix3& a, const Matrix3& b);
  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
  friend Matrix3 operator*(double s, const Matrix3& a);
  friend Matrix3 operator*(Complex s, const Matrix3& a);
};

// max_ij |a_ij - b_ij|
double MaxAbsDiff(const Matrix3& a, const Matrix3& b);

// max_ij |m_ij - conj(m_ji)|
double HermitianDefect(const Matrix3& m);

}  // namespace qutrit
