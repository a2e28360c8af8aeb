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

#include "qutrit/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qutrit/error.hpp"
#include "qutrit/sampling.hpp"

namespace qutrit {
namespace {

SpinAssignment Assign(std::initializer_list<std::pair<std::string, double>> v) {
  return SpinAssignment{std::vector<std::pair<std::string, double>>(v)};
}

std::vector<CatalogExpectation> BuildCatalog() {
  const double r2 = std::sqrt(2.0);
  std::vector<CatalogExpectation> c;

  c.push_back({SectionId({1, 2}), {}, std::nullopt, {}});

  c.push_back({SectionId({1, 8}),
               {Assign({{"w1", 0.0}, {"q3", 0.0}}),
                Assign({{"w1", 0.5}, {"q3", 1.0}}),
                Assign({{"w1", 0.5}, {"q3", -1.0}})},
               std::nullopt,
               {}});

  c.push_back({SectionId({3, 4}),
               {Assign({{"w1", 2.0 / 3.0}, {"q2", 2.0 * r2 / 3.0}}),
                Assign({{"w1", 2.0 / 3.0}, {"q2", -2.0 * r2 / 3.0}})},
               std::nullopt,
               {}});

  // Of the three boundary solutions {0,0}, {1/4, 1/sqrt 2}, {1/2, 0} only the
  // first is pure.
  SpinOneParams quarter;
  quarter.omega = {0.25, 0.25, 0.5};
  quarter.q = {0.0, 1.0 / r2, 0.0};
  SpinOneParams half;
  half.omega = {0.5, 0.5, 0.0};
  c.push_back({SectionId({4, 8}),
               {Assign({{"w1", 0.0}, {"q2", 0.0}})},
               std::nullopt,
               {{Assign({{"w1", 0.25}, {"q2", 1.0 / r2}}), quarter, 5.0 / 8.0},
                {Assign({{"w1", 0.5}, {"q2", 0.0}}), half, 0.5}}});

  c.push_back(
      {SectionId({1, 2, 8}),
       {Assign({{"w1", 0.0}, {"q3", 0.0}, {"a3", 0.0}})},
       FamilyExpectation{"w1 = 1/2, q3^2 + a3^2 = 1",
                         {[](const SpinOneParams& p) { return p.omega[0] - 0.5; },
                          [](const SpinOneParams& p) {
                            return p.q[2] * p.q[2] + p.a[2] * p.a[2] - 1.0;
                          }}},
       {}});

  c.push_back(
      {SectionId({3, 4, 5}),
       {},
       FamilyExpectation{"w1 = 2/3, q2^2 + a2^2 = 8/9",
                         {[](const SpinOneParams& p) { return p.omega[0] - 2.0 / 3.0; },
                          [](const SpinOneParams& p) {
                            return p.q[1] * p.q[1] + p.a[1] * p.a[1] - 8.0 / 9.0;
                          }}},
       {}});

  c.push_back({SectionId({4, 6, 8}),
               {Assign({{"w1", 0.0}, {"q1", 0.0}, {"q2", 0.0}})},
               std::nullopt,
               {}});

  const double t = 2.0 / 3.0;
  c.push_back({SectionId({1, 4, 6}),
               {Assign({{"q1", -t}, {"q2", t}, {"q3", t}}),
                Assign({{"q1", t}, {"q2", -t}, {"q3", t}}),
                Assign({{"q1", t}, {"q2", t}, {"q3", -t}}),
                Assign({{"q1", -t}, {"q2", -t}, {"q3", -t}})},
               std::nullopt,
               {}});

  c.push_back({SectionId({1, 3, 4}),
               {Assign({{"w1", t}, {"q2", 2.0 * r2 / 3.0}, {"q3", 0.0}}),
                Assign({{"w1", t}, {"q2", -2.0 * r2 / 3.0}, {"q3", 0.0}})},
               std::nullopt,
               {}});

  c.push_back({SectionId({1, 4, 8}),
               {Assign({{"w1", 0.0}, {"q2", 0.0}, {"q3", 0.0}}),
                Assign({{"w1", 0.5}, {"q2", 0.0}, {"q3", 1.0}}),
                Assign({{"w1", 0.5}, {"q2", 0.0}, {"q3", -1.0}})},
               std::nullopt,
               {}});

  c.push_back({SectionId({1, 2, 3}), {}, std::nullopt, {}});
  return c;
}

std::string Fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

double Spin1Component(const SpinOneParams& p, const std::string& name) {
  if (name.size() == 2 && name[1] >= '1' && name[1] <= '3') {
    const int i = name[1] - '1';
    switch (name[0]) {
      case 'w': return p.omega[i];
      case 'a': return p.a[i];
      case 'q': return p.q[i];
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown spin-1 component '" + name + "'");
}

std::string SpinAssignment::ToString() const {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += values[i].first + "=" + Fmt(values[i].second);
  }
  return s + "}";
}

bool SpinAssignment::Matches(const SpinOneParams& p, double tol) const {
  return std::all_of(values.begin(), values.end(), [&](const auto& kv) {
    return std::abs(Spin1Component(p, kv.first) - kv.second) <= tol;
  });
}

const std::vector<CatalogExpectation>& ExemplarCatalog() {
  static const std::vector<CatalogExpectation> catalog = BuildCatalog();
  return catalog;
}

const CatalogExpectation* FindExpectation(const SectionId& id) {
  for (const auto& e : ExemplarCatalog())
    if (e.section == id) return &e;
  return nullptr;
}

CatalogReport VerifyCatalog(const SectionId& id, double tol, const PureSearchOptions& opts) {
  const CatalogExpectation* exp = FindExpectation(id);
  if (!exp)
    throw Error(ErrorKind::kNoExpectation,
                "no embedded pure-state table for section " + id.ToString());

  CatalogReport rep{id, false, 0, 0, {}, FindPureStates(id, opts)};
  std::vector<const PureStateSolution*> isolated, family;
  for (const auto& s : rep.solutions)
    (s.kind == SolutionKind::kIsolated ? isolated : family).push_back(&s);
  rep.found_isolated = isolated.size();
  rep.found_family = family.size();

  rep.checks.push_back({"isolated count " + std::to_string(exp->isolated.size()),
                        isolated.size() == exp->isolated.size(),
                        "found " + std::to_string(isolated.size())});
  for (const auto& want : exp->isolated) {
    const auto hit = std::find_if(isolated.begin(), isolated.end(), [&](const auto* s) {
      return want.Matches(s->spin1, tol);
    });
    rep.checks.push_back({"isolated " + want.ToString(), hit != isolated.end(),
                          hit != isolated.end() ? "found at residual " + Fmt((*hit)->residual)
                                                : "missing"});
  }
  for (const auto* s : isolated) {
    const bool expected = std::any_of(exp->isolated.begin(), exp->isolated.end(),
                                      [&](const auto& w) { return w.Matches(s->spin1, tol); });
    if (!expected) {
      std::ostringstream os;
      os << "unexpected isolated solution at coords";
      for (double v : s->coords) os << ' ' << Fmt(v);
      rep.checks.push_back({"no extra isolated solutions", false, os.str()});
    }
  }

  if (exp->family) {
    bool all_on = !family.empty();
    double worst = 0.0;
    for (const auto* s : family)
      for (const auto& eq : exp->family->equations)
        worst = std::max(worst, std::abs(eq(s->spin1)));
    all_on = all_on && worst <= tol;
    rep.checks.push_back({"family " + exp->family->description, all_on,
                          std::to_string(family.size()) + " members, worst residual " +
                              Fmt(worst)});
  } else {
    rep.checks.push_back({"no family", family.empty(),
                          std::to_string(family.size()) + " family members"});
  }

  for (const auto& cand : exp->non_pure) {
    const DensityMatrix rho = Spin1ToMatrix(cand.params);
    const GellMannVector n = MatrixToGellMann(rho);
    bool in_section = true;
    for (int axis = 1; axis <= 8; ++axis) {
      const auto& ax = id.axes();
      if (std::find(ax.begin(), ax.end(), axis) == ax.end() && std::abs(n[axis - 1]) > 1e-12)
        in_section = false;
    }
    const PurityClass cls = ClassifyState(rho);
    const double i2t = ComputeTraceInvariants(rho.matrix()).i2t;
    const PsdVerdict psd = PsdOracle(rho.matrix());
    const bool ok = in_section && cls == PurityClass::kBoundaryMixed &&
                    std::abs(i2t - cand.expected_i2t) <= tol && psd.is_psd &&
                    std::abs(psd.min_eig) <= 1e-9 && Eigenvalues(rho.matrix())[0] < 1.0 - 1e-9;
    rep.checks.push_back({"non-pure candidate " + cand.point.ToString(), ok,
                          std::string(PurityClassName(cls)) + ", I2t = " + Fmt(i2t) +
                              ", min eigenvalue " + Fmt(psd.min_eig)});
  }

  rep.matched = std::all_of(rep.checks.begin(), rep.checks.end(),
                            [](const CatalogCheck& c) { return c.ok; });
  return rep;
}

}  // namespace qutrit
