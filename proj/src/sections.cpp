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

#include "qutrit/sections.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qutrit/error.hpp"
#include "qutrit/vectors.hpp"

namespace qutrit {
namespace {

// Shape tables of the 2- and 3-sections, keyed by compact label.
const std::map<std::string, SectionClass>& ShapeTable() {
  static const std::map<std::string, SectionClass> table = [] {
    std::map<std::string, SectionClass> t;
    auto add = [&t](SectionClass c, std::initializer_list<const char*> labels) {
      for (const char* l : labels) t.emplace(l, c);
    };
    add(SectionClass::kCircle, {"12", "13", "23", "14", "15", "16", "17", "24", "25",
                                "26", "27", "45", "46", "47", "56", "57", "67"});
    add(SectionClass::kTriangle, {"18", "28", "38"});
    add(SectionClass::kParabola, {"34", "35", "36", "37"});
    add(SectionClass::kEllipse, {"48", "58", "68", "78"});
    add(SectionClass::kCone, {"128", "138", "238", "348", "358", "368", "378"});
    add(SectionClass::kParaboloid, {"345", "367"});
    add(SectionClass::kEllipsoid, {"458", "468", "478", "568", "578", "678"});
    add(SectionClass::kObeseTetrahedron,
        {"146", "157", "247", "256", "346", "347", "356", "357"});
    add(SectionClass::kRS1, {"134", "135", "136", "137", "234", "235", "236", "237"});
    add(SectionClass::kRS2, {"148", "158", "168", "178", "248", "258", "268", "278"});
    add(SectionClass::kSphere, {"123", "124", "125", "126", "127", "145", "147", "156",
                                "167", "245", "246", "257", "267", "456", "457", "467",
                                "567"});
    return t;
  }();
  return table;
}

void CheckArity(const SectionId& id, std::span<const double> coords) {
  if (static_cast<int>(coords.size()) != id.order()) {
    std::ostringstream os;
    os << "section " << id.ToString() << " takes " << id.order()
       << " coordinates, got " << coords.size();
    throw Error(ErrorKind::kArityMismatch, os.str(),
                static_cast<double>(coords.size()));
  }
}

}  // namespace

SectionId::SectionId(std::vector<int> axes) : axes_(std::move(axes)) {
  std::sort(axes_.begin(), axes_.end());
  if (axes_.empty()) throw Error(ErrorKind::kInvalidSection, "section has no axes");
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (axes_[i] < 1 || axes_[i] > 8)
      throw Error(ErrorKind::kInvalidSection,
                  "section axis " + std::to_string(axes_[i]) + " outside 1..8", axes_[i]);
    if (i > 0 && axes_[i] == axes_[i - 1])
      throw Error(ErrorKind::kInvalidSection,
                  "section axis " + std::to_string(axes_[i]) + " repeated", axes_[i]);
  }
}

std::string SectionId::ToString() const {
  std::string s = "{";
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(axes_[i]);
  }
  return s + "}";
}

std::string SectionId::Label() const {
  std::string s;
  for (int a : axes_) s += static_cast<char>('0' + a);
  return s;
}

std::string_view SectionClassName(SectionClass c) {
  switch (c) {
    case SectionClass::kCircle: return "Circle";
    case SectionClass::kTriangle: return "Triangle";
    case SectionClass::kParabola: return "Parabola";
    case SectionClass::kEllipse: return "Ellipse";
    case SectionClass::kCone: return "Cone";
    case SectionClass::kParaboloid: return "Paraboloid";
    case SectionClass::kEllipsoid: return "Ellipsoid";
    case SectionClass::kObeseTetrahedron: return "ObeseTetrahedron";
    case SectionClass::kRS1: return "RS1";
    case SectionClass::kRS2: return "RS2";
    case SectionClass::kSphere: return "Sphere";
    case SectionClass::kUnclassified: return "Unclassified";
  }
  return "Unclassified";
}

std::vector<SectionId> EnumerateSections(int k) {
  if (k < 1 || k > 8)
    throw Error(ErrorKind::kInvalidOrder,
                "section order " + std::to_string(k) + " outside 1..8", k);
  std::vector<SectionId> out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    out.emplace_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == 8 - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

SectionClass ClassifySection(const SectionId& id) {
  if (id.order() != 2 && id.order() != 3) return SectionClass::kUnclassified;
  const auto& table = ShapeTable();
  auto it = table.find(id.Label());
  return it == table.end() ? SectionClass::kUnclassified : it->second;
}

GellMannVector EmbedSectionPoint(const SectionId& id, std::span<const double> coords) {
  CheckArity(id, coords);
  GellMannVector n;
  for (int i = 0; i < id.order(); ++i) n[id.axes()[i] - 1] = coords[i];
  return n;
}

SectionReport ComputeSectionReport(const SectionId& id, std::span<const double> coords) {
  const GellMannVector n = EmbedSectionPoint(id, coords);
  const DensityMatrix rho = GellMannToMatrix(n);
  const SpinOneParams p = MatrixToSpin1(rho);
  SectionReport r;
  r.param = ComputeParamInvariants(n);
  r.trace = ComputeTraceInvariants(rho.matrix());
  r.u_sq = USignedSquares(p);
  r.v_sq = VSignedSquares(p);
  r.u_len_sq = r.u_sq[0] + r.u_sq[1] + r.u_sq[2];
  r.v_len_sq = r.v_sq[0] + r.v_sq[1] + r.v_sq[2];
  r.purity = ClassifyState(rho);
  return r;
}

double SectionMinEigenvalue(const SectionId& id, std::span<const double> coords) {
  return Eigenvalues(GellMannToRawMatrix(EmbedSectionPoint(id, coords)))[2];
}

int DefaultResolution(int order) { return order <= 2 ? 201 : 61; }

std::string_view SolutionKindName(SolutionKind k) {
  return k == SolutionKind::kIsolated ? "Isolated" : "FamilyMember";
}

}  // namespace qutrit
