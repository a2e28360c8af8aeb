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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qutrit/sampling.hpp"
#include "qutrit/state.hpp"
#include "test_util.hpp"

namespace qutrit {
namespace {

// Reference SplitMix64 stream for seed 0 (the published first outputs of the
// generator).
TEST(RngStreamTest, MatchesReferenceSplitMix64) {
  RngStream rng(0);
  EXPECT_EQ(rng.NextU64(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.NextU64(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.NextU64(), 0x06C45D188009454FULL);
  EXPECT_EQ(rng.counter(), 3u);
}

TEST(RngStreamTest, CounterResumesStream) {
  RngStream a(77);
  for (int i = 0; i < 10; ++i) a.NextU64();
  RngStream b(77, 10);
  EXPECT_EQ(a.NextU64(), b.NextU64());
}

TEST(RngStreamTest, UniformRangeAndMoments) {
  RngStream rng(1);
  double sum = 0, sum_sq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.Uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / n, 0.5, 0.005);
  sum = 0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.Normal();
    sum += z;
    sum_sq += z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sum_sq / n, 1.0, 0.01);
}

TEST(RngStreamTest, SplitStreamsDiffer) {
  const RngStream base(9);
  RngStream w0 = base.Split(0), w1 = base.Split(1), again = base.Split(1);
  const auto x0 = w0.NextU64(), x1 = w1.NextU64();
  EXPECT_NE(x0, x1);
  EXPECT_EQ(x1, again.NextU64());
}

TEST(SamplingTest, DeterministicAcrossRuns) {
  RngStream a(0), b(0);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(MaxAbsDiff(RandomPure(a).matrix(), RandomPure(b).matrix()), 0.0);
    EXPECT_EQ(MaxAbsDiff(RandomMixed(a).matrix(), RandomMixed(b).matrix()), 0.0);
    EXPECT_EQ(MaxAbsDiff(RandomRank2(a).matrix(), RandomRank2(b).matrix()), 0.0);
  }
}

TEST(SamplingTest, RandomPureIsRankOne) {
  RngStream rng(41);
  for (int s = 0; s < 10000; ++s) {
    const Matrix3 m = RandomPure(rng).matrix();
    ASSERT_NEAR(testing::Tr2(m), 1.0, 1e-12);
    ASSERT_EQ(ClassifyMatrix(m), PurityClass::kPure);
  }
}

TEST(SamplingTest, RandomMixedIsInterior) {
  RngStream rng(42);
  for (int s = 0; s < 10000; ++s) {
    const Matrix3 m = RandomMixed(rng).matrix();
    ASSERT_GT(testing::OracleMinEigenvalue(m), 0.0);
    ASSERT_EQ(ClassifyMatrix(m), PurityClass::kMixedInterior);
    const double i2t = ComputeTraceInvariants(m).i2t;
    ASSERT_GT(i2t, 1. / 3);
    ASSERT_LT(i2t, 1.0);
  }
}

TEST(SamplingTest, MeanPurityIsReproducible) {
  auto mean = [](std::uint64_t seed) {
    RngStream rng(seed);
    double s = 0;
    for (int i = 0; i < 20000; ++i) s += ComputeTraceInvariants(RandomMixed(rng).matrix()).i2t;
    return s / 20000;
  };
  const double m = mean(3);
  EXPECT_EQ(m, mean(3));
  // Hilbert-Schmidt ensemble for d = 3: E[Tr rho^2] = 2d / (d^2 + 1) = 0.6.
  EXPECT_NEAR(m, 0.6, 0.005);
}

TEST(SamplingTest, RandomRank2IsBoundaryMixed) {
  RngStream rng(43);
  for (int s = 0; s < 10000; ++s) {
    const Matrix3 m = RandomRank2(rng).matrix();
    ASSERT_LE(std::abs(m.Determinant().real()), 1e-14);
    ASSERT_EQ(ClassifyMatrix(m), PurityClass::kBoundaryMixed);
    const TraceInvariants t = ComputeTraceInvariants(m);
    ASSERT_NEAR(t.i3t, 1.0, 1e-10);
    ASSERT_LT(t.i2t, 1.0);
  }
}

TEST(PsdOracleTest, Examples) {
  const PsdVerdict mm = PsdOracle(Matrix3::Diagonal(1. / 3, 1. / 3, 1. / 3));
  EXPECT_TRUE(mm.is_psd);
  EXPECT_NEAR(mm.min_eig, 1. / 3, 1e-15);
  const PsdVerdict bad = PsdOracle(Matrix3::Diagonal(.7, .4, -.1));
  EXPECT_FALSE(bad.is_psd);
  EXPECT_NEAR(bad.min_eig, -.1, 1e-15);
  const PsdVerdict edge = PsdOracle(Matrix3::Diagonal(.5, .5, 0));
  EXPECT_TRUE(edge.is_psd);
  EXPECT_NEAR(edge.min_eig, 0.0, 1e-15);
}

TEST(PsdOracleTest, AgreesWithClassifier) {
  RngStream rng(44);
  int disagreements = 0;
  for (int s = 0; s < 20000; ++s) {
    const Matrix3 m = testing::PerturbedState(rng);
    const bool oracle = PsdOracle(m, 1e-9).is_psd;
    disagreements += oracle != (ClassifyMatrix(m, 1e-9) != PurityClass::kNotAState);
  }
  EXPECT_EQ(disagreements, 0);
}

}  // namespace
}  // namespace qutrit
