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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qutrit/sections.hpp"

namespace qutrit {

// Names a spin-1 parameter: "w1".."w3", "a1".."a3", "q1".."q3".
double Spin1Component(const SpinOneParams& p, const std::string& name);

struct SpinAssignment {
  std::vector<std::pair<std::string, double>> values;

  std::string ToString() const;
  bool Matches(const SpinOneParams& p, double tol) const;
};

// A one-parameter family of pure states, described by equations that each
// member must satisfy (each lambda returns a residual).
struct FamilyExpectation {
  std::string description;
  std::vector<std::function<double(const SpinOneParams&)>> equations;
};

// A boundary point that looks like a pure-state solution of the shape
// equation but is not pure; checked by class and by Tr rho^2.
struct NonPureCandidate {
  SpinAssignment point;  // all nine spin-1 values must be inferable
  SpinOneParams params;
  double expected_i2t = 0.0;
};

struct CatalogExpectation {
  SectionId section;
  std::vector<SpinAssignment> isolated;
  std::optional<FamilyExpectation> family;
  std::vector<NonPureCandidate> non_pure;
};

// The worked pure-state tables for the eleven exemplar sections.
const std::vector<CatalogExpectation>& ExemplarCatalog();
const CatalogExpectation* FindExpectation(const SectionId& id);

struct CatalogCheck {
  std::string description;
  bool ok = false;
  std::string detail;
};

struct CatalogReport {
  SectionId section;
  bool matched = false;
  std::size_t found_isolated = 0;
  std::size_t found_family = 0;
  std::vector<CatalogCheck> checks;
  std::vector<PureStateSolution> solutions;
};

// Runs the pure-state search and compares it against the embedded table.
// Throws NoExpectation for sections without one.
CatalogReport VerifyCatalog(const SectionId& id, double tol = 1e-6,
                            const PureSearchOptions& opts = {});

}  // namespace qutrit
