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

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qutrit/sections.hpp"

namespace qutrit::detail {

struct RootResult {
  std::vector<double> x;
  double residual = 0.0;  // ||(e2, e3)||_inf at x
};

inline constexpr double kJacobianStep = 1e-6;
inline constexpr int kMaxNewtonIterations = 50;
inline constexpr double kRootResidualTol = 1e-12;

// (e2, e3) of the embedded section point.
std::array<double, 2> PureResidual(const SectionId& id, std::span<const double> x);

// Gauss-Newton from x0 on (e2, e3) = 0. Returns nullopt unless the residual
// reaches kRootResidualTol.
std::optional<RootResult> SolvePureRoot(const SectionId& id, std::span<const double> x0);

}  // namespace qutrit::detail
