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

#include <cstdint>

#include "qutrit/state.hpp"

namespace qutrit {

// Counter-based stream: the k-th 64-bit draw is SplitMix64's finalizer applied
// to seed + (k + 1) * golden_gamma. Only integer arithmetic is involved, so the
// raw stream is identical on every platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

  std::uint64_t NextU64();
  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  // Uniform on [lo, hi).
  double Uniform(double lo, double hi);
  // Standard normal via Box-Muller; consumes two draws.
  double Normal();

  // Independent stream for a parallel worker.
  RngStream Split(std::uint64_t worker) const;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

std::uint64_t SplitMix64(std::uint64_t x);

// Haar-random pure state psi psi^dagger.
DensityMatrix RandomPure(RngStream& rng);
// Hilbert-Schmidt random mixed state G G^dagger / Tr(G G^dagger).
DensityMatrix RandomMixed(RngStream& rng);
// Convex combination of two Haar-random projectors; det = 0 up to rounding.
DensityMatrix RandomRank2(RngStream& rng);

struct PsdVerdict {
  bool is_psd = false;
  double min_eig = 0.0;
};

PsdVerdict PsdOracle(const Matrix3& m, double tol = kDefaultClassifyTol);

}  // namespace qutrit
