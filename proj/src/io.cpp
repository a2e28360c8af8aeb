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

#include "qutrit/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>

#include "qutrit/error.hpp"

namespace qutrit::io {
namespace {

[[noreturn]] void SchemaError(const std::string& msg) {
  throw Error(ErrorKind::kSchema, msg);
}

double Number(const Json& j, const std::string& where) {
  if (!j.is_number()) SchemaError(where + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) SchemaError(where + " must be finite");
  return v;
}

template <std::size_t N>
std::array<double, N> NumberArray(const Json& obj, const std::string& key) {
  if (!obj.contains(key)) SchemaError("missing field \"" + key + "\"");
  const Json& a = obj.at(key);
  if (!a.is_array() || a.size() != N)
    SchemaError("\"" + key + "\" must be an array of " + std::to_string(N) + " numbers");
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i)
    out[i] = Number(a[i], key + "[" + std::to_string(i) + "]");
  return out;
}

std::array<std::array<double, 3>, 3> Rows(const Json& obj, const std::string& key) {
  if (!obj.contains(key)) SchemaError("missing field \"" + key + "\"");
  const Json& a = obj.at(key);
  if (!a.is_array() || a.size() != 3) SchemaError("\"" + key + "\" must be a 3x3 array");
  std::array<std::array<double, 3>, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!a[i].is_array() || a[i].size() != 3)
      SchemaError("\"" + key + "\" must be a 3x3 array");
    for (std::size_t j = 0; j < 3; ++j)
      out[i][j] = Number(a[i][j], key + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return out;
}

void OnlyKeys(const Json& obj, const std::set<std::string>& allowed) {
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) SchemaError("unexpected field \"" + k + "\"");
}

Json Vec(std::span<const double> v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x + 0.0);  // drop negative zero
  return a;
}

Json Vec3Json(const Vec3& v) { return Vec(v); }

Json OptionalJson(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json Spin1Json(const SpinOneParams& p) {
  return Json{{"omega", Vec3Json(p.omega)}, {"a", Vec3Json(p.a)}, {"q", Vec3Json(p.q)}};
}

}  // namespace

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

StateDocument ParseStateDocument(const Json& j) {
  if (!j.is_object()) SchemaError("state document must be a JSON object");
  if (!j.contains("format") || !j.at("format").is_string())
    SchemaError("missing string field \"format\"");
  const std::string fmt = j.at("format").get<std::string>();
  StateDocument doc;
  if (fmt == "matrix") {
    OnlyKeys(j, {"format", "re", "im"});
    doc.format = StateFormat::kMatrix;
    const auto re = Rows(j, "re");
    const auto im = Rows(j, "im");
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) doc.matrix(r, c) = Complex(re[r][c], im[r][c]);
  } else if (fmt == "gellmann") {
    OnlyKeys(j, {"format", "n"});
    doc.format = StateFormat::kGellMann;
    doc.gellmann.n = NumberArray<8>(j, "n");
  } else if (fmt == "spin1") {
    OnlyKeys(j, {"format", "omega", "a", "q"});
    doc.format = StateFormat::kSpin1;
    doc.spin1.omega = NumberArray<3>(j, "omega");
    doc.spin1.a = NumberArray<3>(j, "a");
    doc.spin1.q = NumberArray<3>(j, "q");
  } else {
    SchemaError("unknown format \"" + fmt + "\" (expected matrix, gellmann or spin1)");
  }
  return doc;
}

StateDocument ParseStateDocument(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return ParseStateDocument(j);
}

Json ToJson(const StateDocument& doc) {
  switch (doc.format) {
    case StateFormat::kMatrix: {
      Json re = Json::array(), im = Json::array();
      for (int r = 0; r < 3; ++r) {
        Json rr = Json::array(), ri = Json::array();
        for (int c = 0; c < 3; ++c) {
          rr.push_back(doc.matrix(r, c).real());
          ri.push_back(doc.matrix(r, c).imag());
        }
        re.push_back(rr);
        im.push_back(ri);
      }
      return Json{{"format", "matrix"}, {"re", re}, {"im", im}};
    }
    case StateFormat::kGellMann:
      return Json{{"format", "gellmann"}, {"n", Vec(doc.gellmann.n)}};
    case StateFormat::kSpin1: {
      Json j{{"format", "spin1"}};
      j.update(Spin1Json(doc.spin1));
      return j;
    }
  }
  return {};
}

StateDocument MatrixDocument(const DensityMatrix& rho) {
  StateDocument doc;
  doc.format = StateFormat::kMatrix;
  doc.matrix = rho.matrix();
  return doc;
}

DensityMatrix ToDensityMatrix(const StateDocument& doc, double tol) {
  switch (doc.format) {
    case StateFormat::kMatrix: return ValidateMatrix(doc.matrix, tol);
    case StateFormat::kGellMann: return GellMannToMatrix(doc.gellmann);
    case StateFormat::kSpin1: return Spin1ToMatrix(doc.spin1);
  }
  throw Error(ErrorKind::kSchema, "unknown state format");
}

StateReport BuildStateReport(const DensityMatrix& rho, double tol) {
  StateReport r;
  r.trace = ComputeTraceInvariants(rho.matrix());
  r.gellmann = MatrixToGellMann(rho);
  r.param = ComputeParamInvariants(r.gellmann);
  r.spin1 = MatrixToSpin1(rho);
  r.purity = ClassifyState(rho, tol);
  r.eigenvalues = Eigenvalues(rho.matrix());
  try {
    r.vectors = ComputeVectorTriple(rho);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNegativeWeight) throw;
  }
  return r;
}

Json ToJson(const StateReport& r) {
  Json vectors;
  if (r.vectors) {
    const StateVectors& v = *r.vectors;
    vectors = Json{{"w", Vec3Json(v.w)},
                   {"u_sq", Vec3Json(v.u_sq)},
                   {"v_sq", Vec3Json(v.v_sq)},
                   {"u", v.u ? Vec3Json(*v.u) : Json(nullptr)},
                   {"v", v.v ? Vec3Json(*v.v) : Json(nullptr)},
                   {"u_real", v.u_real},
                   {"v_real", v.v_real}};
  } else {
    // Unphysical diagonal: w is undefined; squares are still well defined.
    vectors = Json{{"w", nullptr},
                   {"u_sq", Vec3Json(USignedSquares(r.spin1))},
                   {"v_sq", Vec3Json(VSignedSquares(r.spin1))},
                   {"u", nullptr},
                   {"v", nullptr},
                   {"u_real", false},
                   {"v_real", false}};
  }
  const std::optional<double> vol = r.vectors ? r.vectors->volume : std::nullopt;
  const std::optional<double> alpha = r.vectors ? r.vectors->alpha : std::nullopt;
  return Json{{"purity", std::string(PurityClassName(r.purity))},
              {"eigenvalues", Vec3Json(r.eigenvalues)},
              {"invariants",
               {{"I1", r.trace.i1},
                {"I2t", r.trace.i2t},
                {"I3t", r.trace.i3t},
                {"I2p", r.param.i2p},
                {"I3p", r.param.i3p}}},
              {"vectors", vectors},
              {"mixing", {{"V", OptionalJson(vol)}, {"alpha", OptionalJson(alpha)}}},
              {"gellmann", Vec(r.gellmann.n)},
              {"spin1", Spin1Json(r.spin1)}};
}

Json ToJson(const PureStateSolution& s) {
  return Json{{"axes", s.section.axes()},
              {"coords", Vec(s.coords)},
              {"spin1", Spin1Json(s.spin1)},
              {"kind", std::string(SolutionKindName(s.kind))},
              {"residual", s.residual}};
}

Json ToJson(const std::vector<PureStateSolution>& sols) {
  Json a = Json::array();
  for (const auto& s : sols) a.push_back(ToJson(s));
  return a;
}

Json ToJson(const SectionId& id, std::span<const double> coords, const SectionReport& r) {
  return Json{{"axes", id.axes()},
              {"coords", Vec(coords)},
              {"I2p", r.param.i2p},
              {"I3p", r.param.i3p},
              {"I2t", r.trace.i2t},
              {"I3t", r.trace.i3t},
              {"u_sq", Vec3Json(r.u_sq)},
              {"v_sq", Vec3Json(r.v_sq)},
              {"u2", r.u_len_sq},
              {"v2", r.v_len_sq},
              {"purity", std::string(PurityClassName(r.purity))}};
}

Json ToJson(const PointCloud& cloud) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const auto& a = cloud.annotations[i];
    pts.push_back(Json{{"coords", Vec(cloud.points[i])},
                       {"det", a.det},
                       {"i2_trace", a.i2t},
                       {"i3_trace", a.i3t}});
  }
  return Json{{"axes", cloud.section.axes()}, {"points", pts}};
}

Json ToJson(const CatalogReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"check", c.description}, {"ok", c.ok}, {"detail", c.detail}});
  return Json{{"axes", r.section.axes()},
              {"matched", r.matched},
              {"found_isolated", r.found_isolated},
              {"found_family", r.found_family},
              {"checks", checks}};
}

Json ExpectedPureJson(const CatalogExpectation& e) {
  Json iso = Json::array();
  for (const auto& a : e.isolated) {
    Json o = Json::object();
    for (const auto& [k, v] : a.values) o[k] = v;
    iso.push_back(o);
  }
  Json non_pure = Json::array();
  for (const auto& c : e.non_pure) {
    Json o = Json::object();
    for (const auto& [k, v] : c.point.values) o[k] = v;
    non_pure.push_back(Json{{"point", o}, {"I2t", c.expected_i2t}});
  }
  return Json{{"isolated", iso},
              {"family", e.family ? Json(e.family->description) : Json(nullptr)},
              {"non_pure_candidates", non_pure}};
}

void WriteCsv(std::ostream& os, const PointCloud& cloud) {
  for (int a : cloud.section.axes()) os << 'n' << a << ',';
  os << "det,i2_trace,i3_trace\n";
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    for (double v : cloud.points[i]) os << FormatDouble(v) << ',';
    const auto& a = cloud.annotations[i];
    os << FormatDouble(a.det) << ',' << FormatDouble(a.i2t) << ',' << FormatDouble(a.i3t)
       << '\n';
  }
}

}  // namespace qutrit::io
