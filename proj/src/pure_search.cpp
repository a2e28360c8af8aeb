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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "pure_root.hpp"
#include "qutrit/sampling.hpp"
#include "qutrit/sections.hpp"

namespace qutrit {
namespace detail {

std::array<double, 2> PureResidual(const SectionId& id, std::span<const double> x) {
  const CharPoly c = ComputeCharPoly(GellMannToRawMatrix(EmbedSectionPoint(id, x)));
  return {c.e2, c.e3};
}

namespace {

constexpr int kMaxPolishIterations = 60;

// rho^2 - rho as 9 real numbers (diagonal, then re/im of the upper triangle).
std::array<double, 9> IdempotencyResidual(const SectionId& id, std::span<const double> x) {
  const Matrix3 m = GellMannToRawMatrix(EmbedSectionPoint(id, x));
  const Matrix3 r = m * m - m;
  return {r(0, 0).real(), r(1, 1).real(), r(2, 2).real(), r(0, 1).real(), r(0, 1).imag(),
          r(0, 2).real(), r(0, 2).imag(), r(1, 2).real(), r(1, 2).imag()};
}

// Solves (A + mu I) y = rhs in place for a small symmetric positive
// semidefinite A by Gaussian elimination with partial pivoting.
bool SolveRidge(std::vector<double>& a, std::vector<double>& rhs, int n) {
  double trace = 0.0;
  for (int i = 0; i < n; ++i) trace += a[i * n + i];
  if (!(trace > 0.0) || !std::isfinite(trace)) return false;
  for (int i = 0; i < n; ++i) a[i * n + i] += 1e-14 * trace;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (a[piv * n + c] == 0.0) return false;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
      std::swap(rhs[c], rhs[piv]);
    }
    for (int r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / a[c * n + c];
      for (int j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
      rhs[r] -= f * rhs[c];
    }
  }
  for (int c = n - 1; c >= 0; --c) {
    for (int j = c + 1; j < n; ++j) rhs[c] -= a[c * n + j] * rhs[j];
    rhs[c] /= a[c * n + c];
  }
  return true;
}

// Near a pure state e2 and e3 vanish quadratically in the distance, so a
// converged (e2, e3) root is only located to about sqrt(1e-12). The
// idempotency residual rho^2 - rho vanishes linearly there, and for unit-trace
// Hermitian rho it is zero exactly on the pure states. Where a section runs
// tangent to the pure states (e.g. at diag(0, 0, 1) in {1,4,8}) even this
// residual is quadratic along one direction and convergence is only linear,
// hence the generous iteration budget.
void PolishIdempotent(const SectionId& id, std::vector<double>& x) {
  const int k = static_cast<int>(x.size());
  std::vector<double> probe(k);
  std::vector<std::array<double, 9>> jac(k);
  for (int it = 0; it < kMaxPolishIterations; ++it) {
    const auto r = IdempotencyResidual(id, x);
    for (int j = 0; j < k; ++j) {
      probe = x;
      probe[j] = x[j] + kJacobianStep;
      const auto hi = IdempotencyResidual(id, probe);
      probe[j] = x[j] - kJacobianStep;
      const auto lo = IdempotencyResidual(id, probe);
      for (int i = 0; i < 9; ++i) jac[j][i] = (hi[i] - lo[i]) / (2.0 * kJacobianStep);
    }
    std::vector<double> normal(static_cast<std::size_t>(k) * k, 0.0), rhs(k, 0.0);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b)
        for (int i = 0; i < 9; ++i) normal[a * k + b] += jac[a][i] * jac[b][i];
      for (int i = 0; i < 9; ++i) rhs[a] -= jac[a][i] * r[i];
    }
    if (!SolveRidge(normal, rhs, k)) return;
    double step = 0.0;
    for (int j = 0; j < k; ++j) {
      x[j] += rhs[j];
      step = std::max(step, std::abs(rhs[j]));
    }
    if (step <= 1e-15) return;
  }
}

}  // namespace

std::optional<RootResult> SolvePureRoot(const SectionId& id, std::span<const double> x0) {
  const int k = static_cast<int>(x0.size());
  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> probe(k);
  std::vector<std::array<double, 2>> jac(k);  // column j = dF/dx_j

  auto inf_norm = [](const std::array<double, 2>& f) {
    return std::max(std::abs(f[0]), std::abs(f[1]));
  };

  std::array<double, 2> f = PureResidual(id, x);
  for (int it = 0; it < kMaxNewtonIterations; ++it) {
    for (int j = 0; j < k; ++j) {
      probe = x;
      probe[j] = x[j] + kJacobianStep;
      const auto hi = PureResidual(id, probe);
      probe[j] = x[j] - kJacobianStep;
      const auto lo = PureResidual(id, probe);
      jac[j] = {(hi[0] - lo[0]) / (2.0 * kJacobianStep),
                (hi[1] - lo[1]) / (2.0 * kJacobianStep)};
    }
    // Minimum-norm step: dx = -J^T (J J^T + mu I)^{-1} F, with a tiny
    // relative ridge so rank-deficient Jacobians stay solvable.
    double a = 0.0, b = 0.0, d = 0.0;
    for (const auto& col : jac) {
      a += col[0] * col[0];
      b += col[0] * col[1];
      d += col[1] * col[1];
    }
    const double trace = a + d;
    if (!(trace > 0.0) || !std::isfinite(trace)) break;
    const double mu = 1e-14 * trace;
    a += mu;
    d += mu;
    const double det = a * d - b * b;
    const double y0 = (d * f[0] - b * f[1]) / det;
    const double y1 = (a * f[1] - b * f[0]) / det;
    double step = 0.0;
    for (int j = 0; j < k; ++j) {
      const double dx = -(jac[j][0] * y0 + jac[j][1] * y1);
      x[j] += dx;
      step = std::max(step, std::abs(dx));
    }
    f = PureResidual(id, x);
    const double res = inf_norm(f);
    if (!std::isfinite(res)) return std::nullopt;
    // Far outside the state space; the iteration is not coming back.
    if (std::any_of(x.begin(), x.end(), [](double v) { return std::abs(v) > 10.0; }))
      return std::nullopt;
    // Keep polishing past the residual threshold until the step stalls, since
    // the residual is quadratic in the distance near a pure state.
    if (res <= kRootResidualTol && step <= 1e-13) break;
    if (it >= kMaxNewtonIterations / 2 && res > 1e-6) return std::nullopt;
  }
  if (!(inf_norm(f) <= kRootResidualTol)) return std::nullopt;
  PolishIdempotent(id, x);
  f = PureResidual(id, x);
  const double res = inf_norm(f);
  if (!(res <= kRootResidualTol)) return std::nullopt;
  return RootResult{x, res};
}

}  // namespace detail

namespace {

using Key = std::array<long long, 3>;

// Buckets points by their first (up to three) coordinates on a grid of the
// query radius; full-dimensional distances decide.
class NeighborIndex {
 public:
  NeighborIndex(double radius) : radius_(radius) {}

  Key KeyOf(const std::vector<double>& p) const {
    Key key{0, 0, 0};
    for (std::size_t i = 0; i < std::min<std::size_t>(3, p.size()); ++i)
      key[i] = static_cast<long long>(std::floor(p[i] / radius_));
    return key;
  }

  // Calls fn(index) for every stored point within `radius` of p.
  template <typename Fn>
  void ForNeighbors(const std::vector<std::vector<double>>& pts,
                    const std::vector<double>& p, Fn&& fn) const {
    const Key base = KeyOf(p);
    const int dims = static_cast<int>(std::min<std::size_t>(3, p.size()));
    const int span = dims == 1 ? 3 : dims == 2 ? 9 : 27;
    for (int code = 0; code < span; ++code) {
      Key key = base;
      int c = code;
      for (int i = 0; i < dims; ++i, c /= 3) key[i] += c % 3 - 1;
      auto it = cells_.find(key);
      if (it == cells_.end()) continue;
      for (int idx : it->second)
        if (Distance(pts[idx], p) < radius_) fn(idx);
    }
  }

  void Insert(const std::vector<double>& p, int idx) { cells_[KeyOf(p)].push_back(idx); }

  static double Distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
  }

 private:
  double radius_;
  std::map<Key, std::vector<int>> cells_;
};

constexpr double kDedupRadius = 1e-4;
constexpr std::size_t kMinFamilySize = 10;

int Find(std::vector<int>& parent, int i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

std::vector<PureStateSolution> FindPureStates(const SectionId& id,
                                              const PureSearchOptions& opts) {
  const int k = id.order();
  std::vector<std::vector<double>> seeds;
  double seed_step = 0.0;
  if (k <= 3) {
    const int g = std::max(opts.grid_per_axis, 2);
    seed_step = 2.0 * kSearchHalfWidth / (g - 1);
    std::vector<int> counter(k, 0);
    while (true) {
      std::vector<double> s(k);
      for (int i = 0; i < k; ++i) s[i] = -kSearchHalfWidth + seed_step * counter[i];
      seeds.push_back(std::move(s));
      int i = k - 1;
      while (i >= 0 && ++counter[i] == g) counter[i--] = 0;
      if (i < 0) break;
    }
  } else {
    const int n = std::max(opts.starts, 1);
    seed_step = 2.0 * kSearchHalfWidth / std::pow(static_cast<double>(n), 1.0 / k);
    RngStream rng(opts.seed);
    for (int s = 0; s < n; ++s) {
      std::vector<double> p(k);
      for (double& v : p) v = rng.Uniform(-kSearchHalfWidth, kSearchHalfWidth);
      seeds.push_back(std::move(p));
    }
  }

  std::vector<std::vector<double>> roots;
  std::vector<double> residuals;
  NeighborIndex dedup(kDedupRadius);
  for (const auto& s : seeds) {
    const auto root = detail::SolvePureRoot(id, s);
    if (!root) continue;
    bool seen = false;
    dedup.ForNeighbors(roots, root->x, [&](int) { seen = true; });
    if (seen) continue;
    dedup.Insert(root->x, static_cast<int>(roots.size()));
    roots.push_back(root->x);
    residuals.push_back(root->residual);
  }

  // Chains of roots closer than twice the seed spacing form families.
  const int m = static_cast<int>(roots.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  NeighborIndex chain(2.0 * seed_step);
  for (int i = 0; i < m; ++i) {
    chain.ForNeighbors(roots, roots[i], [&](int j) {
      parent[Find(parent, i)] = Find(parent, j);
    });
    chain.Insert(roots[i], i);
  }
  std::map<int, std::size_t> component_size;
  for (int i = 0; i < m; ++i) ++component_size[Find(parent, i)];

  std::vector<PureStateSolution> out;
  for (int i = 0; i < m; ++i) {
    const DensityMatrix rho = GellMannToMatrix(EmbedSectionPoint(id, roots[i]));
    const TraceInvariants t = ComputeTraceInvariants(rho.matrix());
    const double residual = std::max(std::abs(t.i2t - 1.0), std::abs(t.i3t - 1.0));
    if (residual > opts.tol || ClassifyState(rho, opts.tol) != PurityClass::kPure) continue;
    PureStateSolution sol{id, roots[i], MatrixToSpin1(rho),
                          component_size[Find(parent, i)] >= kMinFamilySize
                              ? SolutionKind::kFamilyMember
                              : SolutionKind::kIsolated,
                          residual};
    out.push_back(std::move(sol));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.coords < b.coords;
  });
  return out;
}

}  // namespace qutrit
