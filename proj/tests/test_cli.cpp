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
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct CliResult {
  int code = -1;
  std::string out;
};

// Runs a shell pipeline; "$Q" expands to the CLI binary.
CliResult Shell(const std::string& script) {
  const std::string cmd = "Q='" QUTRIT_CLI "'; { " + script + "; } 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

CliResult Classify(const std::string& doc, const std::string& extra = "") {
  return Shell("printf '%s' '" + doc + "' | " + extra + " \"$Q\" classify -");
}

TEST(CliClassifyTest, MaximallyMixed) {
  const CliResult r = Classify(R"({"format":"gellmann","n":[0,0,0,0,0,0,0,0]})");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["purity"], "MixedInterior");
  EXPECT_NEAR(j["invariants"]["I2t"].get<double>(), 1. / 3, 1e-15);
}

TEST(CliClassifyTest, TrianglePureState) {
  const CliResult r = Classify(R"({"format":"spin1","omega":[0.5,0.5,0],"a":[0,0,0],"q":[0,0,1]})");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["purity"], "Pure");
}

TEST(CliClassifyTest, UnphysicalExitsTwoWithReport) {
  const CliResult r = Classify(
      R"({"format":"matrix","re":[[0.7,0,0],[0,0.4,0],[0,0,-0.1]],"im":[[0,0,0],[0,0,0],[0,0,0]]})");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(Json::parse(r.out)["purity"], "NotAState");
}

TEST(CliClassifyTest, InputErrorsExitOne) {
  EXPECT_EQ(Classify(R"({"format":"gellmann","n":[0,0]})").code, 1);
  EXPECT_EQ(Classify("garbage").code, 1);
  EXPECT_EQ(Shell("\"$Q\" classify /nonexistent/file.json").code, 1);
  // Schema-valid but violating the weight sum.
  EXPECT_EQ(Classify(R"({"format":"spin1","omega":[1,1,0],"a":[0,0,0],"q":[0,0,0]})").code, 1);
}

TEST(CliClassifyTest, DiagnosticIsOneLine) {
  const CliResult r = Shell("printf '{}' | \"$Q\" classify - 2>&1 >/dev/null");
  EXPECT_EQ(r.code, 1);
  ASSERT_FALSE(r.out.empty());
  EXPECT_EQ(r.out.find('\n'), r.out.size() - 1);
  EXPECT_NE(r.out.find("format"), std::string::npos);
}

TEST(CliClassifyTest, ToleranceFlagBeatsEnvironment) {
  // Smallest eigenvalue -1e-6.
  const std::string doc =
      R"({"format":"matrix","re":[[0.500001,0,0],[0,0.5,0],[0,0,-0.000001]],"im":[[0,0,0],[0,0,0],[0,0,0]]})";
  EXPECT_EQ(Classify(doc).code, 2);
  EXPECT_EQ(Classify(doc, "QUTRIT_TOL=1e-5").code, 0);
  EXPECT_EQ(Shell("printf '%s' '" + doc + "' | QUTRIT_TOL=1e-5 \"$Q\" classify --tol 1e-9 -").code,
            2);
}

TEST(CliSectionTest, PureTriangle) {
  const CliResult r = Shell("\"$Q\" section pure --axes 1,8");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).size(), 3u);
}

TEST(CliSectionTest, PureSphereIsEmpty) {
  const CliResult r = Shell("\"$Q\" section pure --axes 1,2,3");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out).empty());
}

TEST(CliSectionTest, PureVerify) {
  const CliResult r = Shell("\"$Q\" section pure --axes 3,4 --verify");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out)["matched"].get<bool>());
  EXPECT_EQ(Shell("\"$Q\" section pure --axes 5,6 --verify").code, 1);
}

TEST(CliSectionTest, CircleBoundaryCsv) {
  const CliResult r = Shell("\"$Q\" section boundary --axes 1,2 --format csv");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n1,n2,det,i2_trace,i3_trace");
  int rows = 0;
  while (std::getline(in, line)) {
    double x, y;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf", &x, &y), 2);
    ASSERT_NEAR(x * x + y * y, 1. / 3, 1e-6);
    ++rows;
  }
  EXPECT_GT(rows, 100);
}

TEST(CliSectionTest, BoundaryIsStable) {
  const std::string cmd = "\"$Q\" section boundary --axes 2,5,8 --resolution 15";
  const CliResult a = Shell(cmd), b = Shell(cmd);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(Json::parse(a.out)["points"].empty());
}

TEST(CliSectionTest, Report) {
  const CliResult r = Shell("\"$Q\" section report --axes 1,2 --coords 0.5773502691896258,0");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_NEAR(j["u2"].get<double>(), 5. / 9, 1e-12);
  EXPECT_NEAR(j["v2"].get<double>(), 1.0, 1e-12);
}

TEST(CliSectionTest, InvalidAxesExitOne) {
  EXPECT_EQ(Shell("\"$Q\" section pure --axes 1,9").code, 1);
  EXPECT_EQ(Shell("\"$Q\" section pure --axes 2,2").code, 1);
  EXPECT_EQ(Shell("\"$Q\" section pure --axes a,b").code, 1);
  EXPECT_EQ(Shell("\"$Q\" section report --axes 1,2 --coords 0.1").code, 1);
}

std::map<std::string, int> ClassHistogram(const Json& entries) {
  std::map<std::string, int> h;
  for (const auto& e : entries) ++h[e["class"].get<std::string>()];
  return h;
}

TEST(CliAtlasTest, TwoSections) {
  const CliResult r = Shell("\"$Q\" atlas --k 2");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.size(), 28u);
  const std::map<std::string, int> want{
      {"Circle", 17}, {"Triangle", 3}, {"Parabola", 4}, {"Ellipse", 4}};
  EXPECT_EQ(ClassHistogram(j), want);
}

TEST(CliAtlasTest, ThreeSections) {
  const CliResult r = Shell("\"$Q\" atlas --k 3");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.size(), 56u);
  const std::map<std::string, int> want{{"Cone", 7},   {"Paraboloid", 2}, {"Ellipsoid", 6},
                                        {"ObeseTetrahedron", 8}, {"RS1", 8}, {"RS2", 8},
                                        {"Sphere", 17}};
  EXPECT_EQ(ClassHistogram(j), want);
}

TEST(CliAtlasTest, VerifyTwoSections) {
  const CliResult r = Shell("\"$Q\" atlas --k 2 --verify");
  EXPECT_EQ(r.code, 0);
  int verified = 0;
  for (const auto& e : Json::parse(r.out))
    if (e.contains("found_pure")) {
      ++verified;
      EXPECT_TRUE(e["found_pure"]["matched"].get<bool>());
    }
  EXPECT_EQ(verified, 4);
}

TEST(CliAtlasTest, UnsupportedOrder) { EXPECT_EQ(Shell("\"$Q\" atlas --k 4").code, 1); }

TEST(CliSampleTest, Deterministic) {
  const CliResult a = Shell("\"$Q\" sample --kind pure --n 3 --seed 7");
  const CliResult b = Shell("\"$Q\" sample --kind pure --n 3 --seed 7");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 3);
}

TEST(CliSampleTest, PipesIntoClassify) {
  const CliResult r2 = Shell("\"$Q\" sample --kind rank2 --n 1 | \"$Q\" classify -");
  ASSERT_EQ(r2.code, 0);
  EXPECT_EQ(Json::parse(r2.out)["purity"], "BoundaryMixed");
  const CliResult mixed = Shell("\"$Q\" sample --kind mixed --n 1 | \"$Q\" classify -");
  ASSERT_EQ(mixed.code, 0);
  EXPECT_EQ(Json::parse(mixed.out)["purity"], "MixedInterior");
}

TEST(CliSampleTest, InvalidKindOrCount) {
  EXPECT_EQ(Shell("\"$Q\" sample --kind thermal").code, 1);
  EXPECT_EQ(Shell("\"$Q\" sample --kind pure --n 0").code, 1);
}

}  // namespace
