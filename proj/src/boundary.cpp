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
#include <numbers>

#include "pure_root.hpp"
#include "qutrit/error.hpp"
#include "qutrit/sampling.hpp"
#include "qutrit/sections.hpp"

namespace qutrit {
namespace {

constexpr double kBisectTol = 1e-10;
constexpr int kMaxBisections = 200;
// Minimum angle between contour normals for a cell to be treated as a kink.
const double kKinkSin = std::sin(10.0 * std::numbers::pi / 180.0);

using Point = std::vector<double>;

class CloudBuilder {
 public:
  explicit CloudBuilder(const SectionId& id) : id_(id), cloud_{id, {}, {}} {}

  double Eval(const Point& x) const { return SectionMinEigenvalue(id_, x); }

  // `inside` has f >= 0, `outside` has f < 0.
  Point Bisect(Point inside, Point outside) const {
    Point mid(inside.size());
    for (int it = 0; it < kMaxBisections; ++it) {
      double width = 0.0;
      for (std::size_t i = 0; i < mid.size(); ++i) {
        mid[i] = 0.5 * (inside[i] + outside[i]);
        width = std::max(width, std::abs(inside[i] - outside[i]));
      }
      const double f = Eval(mid);
      if (std::abs(f) <= kBisectTol) return mid;
      if (width < 1e-15) break;
      (f >= 0.0 ? inside : outside) = mid;
    }
    return inside;
  }

  // Bisects between two sample points with values fa, fb if they straddle
  // the boundary. Returns the point index in the cloud or -1.
  int Crossing(const Point& a, double fa, const Point& b, double fb) {
    if ((fa >= 0.0) == (fb >= 0.0)) return -1;
    return Add(fa >= 0.0 ? Bisect(a, b) : Bisect(b, a));
  }

  int Add(const Point& p) {
    const Matrix3 m = GellMannToRawMatrix(EmbedSectionPoint(id_, p));
    const TraceInvariants t = ComputeTraceInvariants(m);
    cloud_.points.push_back(p);
    cloud_.annotations.push_back({m.Determinant().real(), t.i2t, t.i3t});
    return static_cast<int>(cloud_.points.size()) - 1;
  }

  const Point& At(int idx) const { return cloud_.points[idx]; }

  PointCloud Take() { return std::move(cloud_); }

 private:
  SectionId id_;
  PointCloud cloud_;
};

double GridCoord(int i, int resolution) {
  return -kSearchHalfWidth + 2.0 * kSearchHalfWidth * i / (resolution - 1);
}

void LineCloud(CloudBuilder& b, int resolution) {
  Point prev{GridCoord(0, resolution)};
  double fprev = b.Eval(prev);
  for (int i = 1; i < resolution; ++i) {
    Point cur{GridCoord(i, resolution)};
    const double f = b.Eval(cur);
    b.Crossing(prev, fprev, cur, f);
    prev = cur;
    fprev = f;
  }
}

std::array<double, 2> Gradient(const CloudBuilder& b, const Point& p) {
  constexpr double h = 1e-7;
  std::array<double, 2> g{};
  for (int i = 0; i < 2; ++i) {
    Point lo = p, hi = p;
    lo[i] -= h;
    hi[i] += h;
    g[i] = (b.Eval(hi) - b.Eval(lo)) / (2.0 * h);
  }
  return g;
}

// At a kink the two contour branches meet at a point where two eigenvalues
// vanish, i.e. a pure state. Intersect the branch tangents and let the
// pure-state solver pin the corner down.
void MaybeAddKink(CloudBuilder& b, const SectionId& id, int c0, int c1, double x_lo,
                  double y_lo, double step) {
  const Point& p = b.At(c0);
  const Point& q = b.At(c1);
  const auto n1 = Gradient(b, p);
  const auto n2 = Gradient(b, q);
  const double l1 = std::hypot(n1[0], n1[1]), l2 = std::hypot(n2[0], n2[1]);
  if (l1 == 0.0 || l2 == 0.0) return;
  const double det = n1[0] * n2[1] - n1[1] * n2[0];
  if (std::abs(det) < kKinkSin * l1 * l2) return;
  const double r1 = n1[0] * p[0] + n1[1] * p[1];
  const double r2 = n2[0] * q[0] + n2[1] * q[1];
  const Point guess{(r1 * n2[1] - r2 * n1[1]) / det, (n1[0] * r2 - n2[0] * r1) / det};
  const auto root = detail::SolvePureRoot(id, guess);
  if (!root) return;
  const double slack = 0.5 * step;
  const Point& x = root->x;
  if (x[0] < x_lo - slack || x[0] > x_lo + step + slack || x[1] < y_lo - slack ||
      x[1] > y_lo + step + slack)
    return;
  b.Add(x);
}

void MarchingSquares(CloudBuilder& b, const SectionId& id, int resolution) {
  const int r = resolution;
  const double step = 2.0 * kSearchHalfWidth / (r - 1);
  std::vector<double> f(static_cast<std::size_t>(r) * r);
  auto val = [&](int i, int j) -> double& { return f[static_cast<std::size_t>(j) * r + i]; };
  auto node = [&](int i, int j) { return Point{GridCoord(i, r), GridCoord(j, r)}; };
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) val(i, j) = b.Eval(node(i, j));

  // Crossing index per edge; -2 = not yet visited.
  std::vector<int> h_edge(static_cast<std::size_t>(r) * r, -2);
  std::vector<int> v_edge(static_cast<std::size_t>(r) * r, -2);
  auto horizontal = [&](int i, int j) {
    int& slot = h_edge[static_cast<std::size_t>(j) * r + i];
    if (slot == -2) slot = b.Crossing(node(i, j), val(i, j), node(i + 1, j), val(i + 1, j));
    return slot;
  };
  auto vertical = [&](int i, int j) {
    int& slot = v_edge[static_cast<std::size_t>(j) * r + i];
    if (slot == -2) slot = b.Crossing(node(i, j), val(i, j), node(i, j + 1), val(i, j + 1));
    return slot;
  };

  for (int j = 0; j + 1 < r; ++j) {
    for (int i = 0; i + 1 < r; ++i) {
      std::vector<int> hits;
      for (int c : {horizontal(i, j), vertical(i + 1, j), horizontal(i, j + 1), vertical(i, j)})
        if (c >= 0) hits.push_back(c);
      if (hits.size() == 2)
        MaybeAddKink(b, id, hits[0], hits[1], GridCoord(i, r), GridCoord(j, r), step);
    }
  }
}

void GridLines3(CloudBuilder& b, int resolution) {
  const int r = resolution;
  auto idx = [r](int i, int j, int k) {
    return (static_cast<std::size_t>(k) * r + j) * r + i;
  };
  std::vector<double> f(static_cast<std::size_t>(r) * r * r);
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i)
        f[idx(i, j, k)] = b.Eval({GridCoord(i, r), GridCoord(j, r), GridCoord(k, r)});

  for (int axis = 0; axis < 3; ++axis) {
    for (int s = 0; s < r; ++s) {
      for (int t = 0; t < r; ++t) {
        for (int m = 0; m + 1 < r; ++m) {
          std::array<int, 3> a{}, c{};
          a[axis] = m;
          c[axis] = m + 1;
          a[(axis + 1) % 3] = c[(axis + 1) % 3] = s;
          a[(axis + 2) % 3] = c[(axis + 2) % 3] = t;
          const Point pa{GridCoord(a[0], r), GridCoord(a[1], r), GridCoord(a[2], r)};
          const Point pc{GridCoord(c[0], r), GridCoord(c[1], r), GridCoord(c[2], r)};
          b.Crossing(pa, f[idx(a[0], a[1], a[2])], pc, f[idx(c[0], c[1], c[2])]);
        }
      }
    }
  }
}

void Rays(CloudBuilder& b, int k, int samples, std::uint64_t seed) {
  RngStream rng(seed);
  const Point origin(k, 0.0);
  for (int s = 0; s < samples; ++s) {
    Point dir(k);
    double norm = 0.0;
    do {
      norm = 0.0;
      for (double& d : dir) {
        d = rng.Normal();
        norm += d * d;
      }
    } while (norm < 1e-20);
    norm = std::sqrt(norm);
    // |n| <= 1 on the state space, so the far end is always outside.
    for (double& d : dir) d *= kSearchHalfWidth / norm;
    b.Crossing(origin, b.Eval(origin), dir, b.Eval(dir));
  }
}

}  // namespace

PointCloud BoundaryCloud(const SectionId& id, int resolution, int samples,
                         std::uint64_t seed) {
  const int k = id.order();
  if (k <= 3 && resolution < 2)
    throw Error(ErrorKind::kInvalidArgument, "boundary resolution must be >= 2",
                resolution);
  if (k >= 4 && samples < 1)
    throw Error(ErrorKind::kInvalidArgument, "boundary samples must be >= 1", samples);
  CloudBuilder b(id);
  switch (k) {
    case 1: LineCloud(b, resolution); break;
    case 2: MarchingSquares(b, id, resolution); break;
    case 3: GridLines3(b, resolution); break;
    default: Rays(b, k, samples, seed); break;
  }
  return b.Take();
}

}  // namespace qutrit
