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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qutrit/state.hpp"

namespace qutrit {

/// Coordinate section of the Gell-Mann parameter space: the axes (1-based,
/// strictly increasing, drawn from 1..8) whose parameters may be nonzero.
class SectionId {
 public:
  // Sorts and validates; throws InvalidSection on duplicates, out-of-range
  // axes or an empty list.
  explicit SectionId(std::vector<int> axes);

  const std::vector<int>& axes() const noexcept { return axes_; }
  int order() const noexcept { return static_cast<int>(axes_.size()); }

  // "{1,2,8}"
  std::string ToString() const;
  // "128", the compact label used in the shape tables.
  std::string Label() const;

  friend bool operator==(const SectionId&, const SectionId&) = default;
  friend auto operator<=>(const SectionId&, const SectionId&) = default;

 private:
  std::vector<int> axes_;
};

enum class SectionClass {
  kCircle,
  kTriangle,
  kParabola,
  kEllipse,
  kCone,
  kParaboloid,
  kEllipsoid,
  kObeseTetrahedron,
  kRS1,
  kRS2,
  kSphere,
  kUnclassified,
};

std::string_view SectionClassName(SectionClass c);

// All C(8, k) sections of order k in lexicographic order.
std::vector<SectionId> EnumerateSections(int k);

// Shape class from the embedded 2- and 3-section tables; Unclassified for
// every other order.
SectionClass ClassifySection(const SectionId& id);

GellMannVector EmbedSectionPoint(const SectionId& id, std::span<const double> coords);

struct SectionReport {
  ParamInvariants param;
  TraceInvariants trace;
  Vec3 u_sq{};
  Vec3 v_sq{};
  double u_len_sq = 0.0;
  double v_len_sq = 0.0;
  PurityClass purity = PurityClass::kMixedInterior;
};

SectionReport ComputeSectionReport(const SectionId& id, std::span<const double> coords);

// Smallest eigenvalue of the embedded matrix; positive inside the state space.
double SectionMinEigenvalue(const SectionId& id, std::span<const double> coords);

// ---- boundary extraction -------------------------------------------------

inline constexpr double kSearchHalfWidth = 1.05;

struct BoundaryAnnotation {
  double det = 0.0;
  double i2t = 0.0;
  double i3t = 0.0;
};

struct PointCloud {
  SectionId section;
  std::vector<std::vector<double>> points;
  std::vector<BoundaryAnnotation> annotations;
};

/// Samples the boundary (det rho = 0, rho >= 0) of a section.
///
/// k <= 2: marching squares on the minimum eigenvalue over a
/// `resolution`-per-axis grid on [-1.05, 1.05]^k, plus tangent-line
/// intersections at kinks of the contour. k == 3: sign changes along every
/// grid line. k >= 4: one bisection per seeded random ray from the origin.
/// All crossings are bisected until |min eigenvalue| <= 1e-10.
PointCloud BoundaryCloud(const SectionId& id, int resolution, int samples,
                         std::uint64_t seed);

int DefaultResolution(int order);
inline constexpr int kDefaultRaySamples = 10000;

// ---- pure-state search ---------------------------------------------------

enum class SolutionKind { kIsolated, kFamilyMember };

std::string_view SolutionKindName(SolutionKind k);

struct PureStateSolution {
  SectionId section;
  std::vector<double> coords;
  SpinOneParams spin1;
  SolutionKind kind = SolutionKind::kIsolated;
  double residual = 0.0;  // max(|I2t - 1|, |I3t - 1|)
};

struct PureSearchOptions {
  int grid_per_axis = 41;   // seeds per axis for k <= 3
  int starts = 20000;       // random seeds for k >= 4
  std::uint64_t seed = 0;
  double tol = 1e-8;        // acceptance threshold on the residual
};

/// Solves e2 = e3 = 0 on the section by Gauss-Newton (central-difference
/// Jacobian, minimum-norm steps) from grid or random seeds.
///
/// Roots are deduplicated within 1e-4; a connected chain of at least 10 roots
/// with neighbor spacing below twice the seed spacing is reported as
/// FamilyMember, everything else as Isolated. Output is sorted by coordinates.
std::vector<PureStateSolution> FindPureStates(const SectionId& id,
                                              const PureSearchOptions& opts = {});

}  // namespace qutrit
