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

#include "qutrit/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qutrit/error.hpp"

namespace qutrit {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotHermitian: return "NotHermitian";
    case ErrorKind::kTraceNotOne: return "TraceNotOne";
    case ErrorKind::kWeightSumViolation: return "WeightSumViolation";
    case ErrorKind::kNegativeWeight: return "NegativeWeight";
    case ErrorKind::kInvalidOrder: return "InvalidOrder";
    case ErrorKind::kInvalidSection: return "InvalidSection";
    case ErrorKind::kArityMismatch: return "ArityMismatch";
    case ErrorKind::kNoExpectation: return "NoExpectation";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kSchema: return "Schema";
  }
  return "Unknown";
}

Matrix3 Matrix3::Identity() { return Diagonal(1.0, 1.0, 1.0); }

Matrix3 Matrix3::Diagonal(double d0, double d1, double d2) {
  Matrix3 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  return m;
}

Matrix3 Matrix3::Adjoint() const {
  Matrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = std::conj((*this)(j, i));
  return out;
}

Complex Matrix3::Trace() const { return e[0] + e[4] + e[8]; }

Complex Matrix3::Determinant() const {
  const Matrix3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Matrix3 operator+(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (int k = 0; k < 9; ++k) out.e[k] = a.e[k] + b.e[k];
  return out;
}

Matrix3 operator-(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (int k = 0; k < 9; ++k) out.e[k] = a.e[k] - b.e[k];
  return out;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

Matrix3 operator*(double s, const Matrix3& a) {
  Matrix3 out;
  for (int k = 0; k < 9; ++k) out.e[k] = s * a.e[k];
  return out;
}

Matrix3 operator*(Complex s, const Matrix3& a) {
  Matrix3 out;
  for (int k = 0; k < 9; ++k) out.e[k] = s * a.e[k];
  return out;
}

double MaxAbsDiff(const Matrix3& a, const Matrix3& b) {
  double m = 0.0;
  for (int k = 0; k < 9; ++k) m = std::max(m, std::abs(a.e[k] - b.e[k]));
  return m;
}

double HermitianDefect(const Matrix3& m) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

}  // namespace qutrit
