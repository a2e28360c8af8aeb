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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qutrit/catalog.hpp"
#include "qutrit/sections.hpp"
#include "qutrit/state.hpp"
#include "qutrit/vectors.hpp"

namespace qutrit::io {

using Json = nlohmann::ordered_json;

enum class StateFormat { kMatrix, kGellMann, kSpin1 };

// Parsed state input. `matrix` is the raw (unvalidated) content for the
// "matrix" format; the other payloads are kept as given.
struct StateDocument {
  StateFormat format = StateFormat::kMatrix;
  Matrix3 matrix;
  GellMannVector gellmann;
  SpinOneParams spin1;
};

// Throws Error(kSchema) naming the first violation.
StateDocument ParseStateDocument(const Json& j);
StateDocument ParseStateDocument(const std::string& text);
inline StateDocument ParseStateDocument(const char* text) {
  return ParseStateDocument(std::string(text));
}

Json ToJson(const StateDocument& doc);
StateDocument MatrixDocument(const DensityMatrix& rho);

// Converts a document to a validated DensityMatrix.
DensityMatrix ToDensityMatrix(const StateDocument& doc, double tol = kDefaultHermitianTol);

struct StateReport {
  TraceInvariants trace;
  ParamInvariants param;
  std::optional<StateVectors> vectors;  // absent when a weight is negative
  PurityClass purity = PurityClass::kMixedInterior;
  Vec3 eigenvalues{};
  GellMannVector gellmann;
  SpinOneParams spin1;
};

StateReport BuildStateReport(const DensityMatrix& rho, double tol);
Json ToJson(const StateReport& r);

Json ToJson(const PureStateSolution& s);
Json ToJson(const std::vector<PureStateSolution>& sols);
Json ToJson(const SectionId& id, std::span<const double> coords, const SectionReport& r);
Json ToJson(const PointCloud& cloud);
Json ToJson(const CatalogReport& r);
Json ExpectedPureJson(const CatalogExpectation& e);

// Header: n<axis>..., det, i2_trace, i3_trace. 17 significant digits.
void WriteCsv(std::ostream& os, const PointCloud& cloud);

// "%.17g"
std::string FormatDouble(double v);

}  // namespace qutrit::io
