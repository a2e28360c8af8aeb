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
#include <numbers>

#include "qutrit/catalog.hpp"
#include "qutrit/error.hpp"
#include "test_util.hpp"

namespace qutrit {
namespace {

class ExemplarTest : public ::testing::TestWithParam<std::vector<int>> {};

TEST_P(ExemplarTest, MatchesEmbeddedTable) {
  const CatalogReport rep = VerifyCatalog(SectionId(GetParam()));
  for (const auto& c : rep.checks) EXPECT_TRUE(c.ok) << c.description << ": " << c.detail;
  EXPECT_TRUE(rep.matched);
  for (const auto& s : rep.solutions) {
    EXPECT_LE(s.residual, 1e-8);
    const Matrix3 m = GellMannToRawMatrix(EmbedSectionPoint(s.section, s.coords));
    EXPECT_NEAR(testing::OracleEigenvalues(m)[0], 1.0, 1e-8);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Sections, ExemplarTest,
    ::testing::Values(std::vector<int>{1, 2}, std::vector<int>{1, 8}, std::vector<int>{3, 4},
                      std::vector<int>{4, 8}, std::vector<int>{1, 2, 8},
                      std::vector<int>{3, 4, 5}, std::vector<int>{4, 6, 8},
                      std::vector<int>{1, 4, 6}, std::vector<int>{1, 3, 4},
                      std::vector<int>{1, 4, 8}, std::vector<int>{1, 2, 3}),
    [](const auto& info) { return "s" + SectionId(info.param).Label(); });

TEST(CatalogTest, ElevenExemplars) {
  EXPECT_EQ(ExemplarCatalog().size(), 11u);
  EXPECT_NE(FindExpectation(SectionId({4, 8})), nullptr);
  EXPECT_EQ(FindExpectation(SectionId({5, 6})), nullptr);
}

TEST(CatalogTest, NoExpectation) {
  try {
    VerifyCatalog(SectionId({5, 6}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoExpectation);
  }
}

TEST(CatalogTest, TriangleVerticesInGellMannCoordinates) {
  // Through n_1 = sqrt 3 q_3 / 2 and n_8 = 3 (w1 + w2) / 2 - 1.
  const double s = std::numbers::sqrt3 / 2;
  const std::vector<std::vector<double>> want{{-s, 0.5}, {0, -1}, {s, 0.5}};
  const auto sols = FindPureStates(SectionId({1, 8}));
  ASSERT_EQ(sols.size(), want.size());
  std::vector<std::vector<double>> got;
  for (const auto& sol : sols) got.push_back(sol.coords);
  std::sort(got.begin(), got.end());
  for (std::size_t i = 0; i < want.size(); ++i)
    for (int j = 0; j < 2; ++j) EXPECT_NEAR(got[i][j], want[i][j], 1e-9);
}

TEST(CatalogTest, ConeFamilyIsPureCircle) {
  const auto sols = FindPureStates(SectionId({1, 2, 8}));
  int family = 0, isolated = 0;
  for (const auto& s : sols) {
    if (s.kind == SolutionKind::kFamilyMember) {
      ++family;
      EXPECT_NEAR(s.spin1.omega[0], 0.5, 1e-8);
      EXPECT_NEAR(s.spin1.q[2] * s.spin1.q[2] + s.spin1.a[2] * s.spin1.a[2], 1.0, 1e-8);
      EXPECT_LE(s.residual, 1e-8);
    } else {
      ++isolated;
      EXPECT_NEAR(s.spin1.omega[0], 0.0, 1e-8);
    }
  }
  EXPECT_EQ(isolated, 1);
  EXPECT_GE(family, 8);
}

TEST(CatalogTest, EllipseCandidatesAreNotPure) {
  const CatalogExpectation* e = FindExpectation(SectionId({4, 8}));
  ASSERT_NE(e, nullptr);
  ASSERT_EQ(e->non_pure.size(), 2u);
  EXPECT_DOUBLE_EQ(e->non_pure[0].expected_i2t, 5. / 8);
  EXPECT_DOUBLE_EQ(e->non_pure[1].expected_i2t, 0.5);
  for (const auto& c : e->non_pure) {
    const Matrix3 m = Spin1ToMatrix(c.params).matrix();
    const Vec3 ev = testing::OracleEigenvalues(m);
    EXPECT_NEAR(ev[2], 0.0, 1e-12);
    EXPECT_LT(ev[0], 1.0 - 1e-3);
    EXPECT_NEAR(testing::Tr2(m), c.expected_i2t, 1e-12);
  }
}

}  // namespace
}  // namespace qutrit
