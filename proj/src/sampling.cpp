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

#include "qutrit/sampling.hpp"

#include <cmath>
#include <numbers>

namespace qutrit {
namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

CVec3 RandomUnitVector(RngStream& rng) {
  CVec3 psi{};
  double norm = 0.0;
  do {
    norm = 0.0;
    for (Complex& z : psi) {
      const double re = rng.Normal();
      const double im = rng.Normal();
      z = Complex(re, im);
      norm += re * re + im * im;
    }
  } while (norm < 1e-200);
  const double inv = 1.0 / std::sqrt(norm);
  for (Complex& z : psi) z *= inv;
  return psi;
}

Matrix3 Projector(const CVec3& psi) {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  return m;
}

// Projectors and Gram matrices are exactly Hermitian up to rounding but the
// trace may be off by a few ulps; renormalize before validation.
DensityMatrix Normalized(const Matrix3& m) {
  return ValidateMatrix((1.0 / m.Trace().real()) * m);
}

}  // namespace

std::uint64_t SplitMix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t RngStream::NextU64() {
  ++counter_;
  return SplitMix64(seed_ + counter_ * kGoldenGamma);
}

double RngStream::Uniform() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

double RngStream::Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

double RngStream::Normal() {
  // 1 - U lies in (0, 1], so the log is finite.
  const double u1 = 1.0 - Uniform();
  const double u2 = Uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RngStream RngStream::Split(std::uint64_t worker) const {
  return RngStream(SplitMix64(seed_ ^ SplitMix64(worker + kGoldenGamma)), 0);
}

DensityMatrix RandomPure(RngStream& rng) { return Normalized(Projector(RandomUnitVector(rng))); }

DensityMatrix RandomMixed(RngStream& rng) {
  Matrix3 g;
  for (Complex& z : g.e) {
    const double re = rng.Normal();
    const double im = rng.Normal();
    z = Complex(re, im);
  }
  return Normalized(g * g.Adjoint());
}

DensityMatrix RandomRank2(RngStream& rng) {
  const CVec3 a = RandomUnitVector(rng);
  const CVec3 b = RandomUnitVector(rng);
  // Keep both weights away from zero so the sample is never numerically pure.
  const double t = rng.Uniform(0.05, 0.95);
  return Normalized(t * Projector(a) + (1.0 - t) * Projector(b));
}

PsdVerdict PsdOracle(const Matrix3& m, double tol) {
  const double lo = Eigenvalues(m)[2];
  return {lo >= -tol, lo};
}

}  // namespace qutrit
