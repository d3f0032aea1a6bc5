// Copyright 2026 The Anderson Landscape Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anderson/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "anderson/error.hpp"

namespace anderson {

Coord squared_distance(const LatticePoint& a, const LatticePoint& b) {
  Coord s = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const Coord diff = a.coords[i] - b.coords[i];
    s += diff * diff;
  }
  return s;
}

Domain Domain::from_points(int d, std::vector<LatticePoint> points) {
  require(d >= 1, ErrorCode::kInvalidArgument, "dimension must be at least 1");
  require(!points.empty(), ErrorCode::kEmptyDomain, "domain must contain a point");
  for (const auto& p : points) {
    require(p.dim() == d, ErrorCode::kDimensionMismatch,
            fmt::format("point of dimension {} in a {}-dimensional domain", p.dim(), d));
  }
  std::sort(points.begin(), points.end());
  require(std::adjacent_find(points.begin(), points.end()) == points.end(),
          ErrorCode::kInvalidArgument, "domain points must be distinct");

  auto impl = std::make_shared<Impl>();
  impl->d = d;
  impl->path = d == 1 && (points.back()[0] - points.front()[0] + 1 ==
                          static_cast<Coord>(points.size()));
  impl->points = std::move(points);
  return Domain(std::move(impl));
}

std::optional<std::size_t> Domain::index_of(const LatticePoint& p) const {
  if (p.dim() != dim()) return std::nullopt;
  const auto& pts = impl_->points;
  if (impl_->path) {
    const Coord offset = p[0] - pts.front()[0];
    if (offset < 0 || offset >= static_cast<Coord>(pts.size())) return std::nullopt;
    return static_cast<std::size_t>(offset);
  }
  auto it = std::lower_bound(pts.begin(), pts.end(), p);
  if (it == pts.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - pts.begin());
}

std::size_t Domain::require_index(const LatticePoint& p) const {
  auto idx = index_of(p);
  if (!idx) fail(ErrorCode::kNotInDomain, "lattice point is not in the domain");
  return *idx;
}

bool Domain::is_subset_of(const Domain& other) const {
  if (dim() != other.dim()) return false;
  return std::includes(other.impl_->points.begin(), other.impl_->points.end(),
                       impl_->points.begin(), impl_->points.end());
}

bool operator==(const Domain& a, const Domain& b) {
  return a.impl_ == b.impl_ || (a.dim() == b.dim() && a.impl_->points == b.impl_->points);
}

Domain make_box(Coord n, int d) {
  require(d >= 1, ErrorCode::kInvalidArgument, "dimension must be at least 1");
  require(n >= 0, ErrorCode::kInvalidArgument, "box radius must be nonnegative");
  const Coord side = 2 * n + 1;
  std::size_t total = 1;
  for (int k = 0; k < d; ++k) total *= static_cast<std::size_t>(side);

  // Odometer over [-n, n]^d with the last coordinate fastest yields
  // lexicographic order directly.
  std::vector<LatticePoint> pts;
  pts.reserve(total);
  std::vector<Coord> c(static_cast<std::size_t>(d), -n);
  for (std::size_t k = 0; k < total; ++k) {
    pts.emplace_back(c);
    for (int axis = d - 1; axis >= 0; --axis) {
      if (++c[static_cast<std::size_t>(axis)] <= n) break;
      c[static_cast<std::size_t>(axis)] = -n;
    }
  }
  return Domain::from_points(d, std::move(pts));
}

Domain make_interval(Coord a, Coord b) {
  require(a <= b, ErrorCode::kInvalidArgument,
          fmt::format("interval [{}, {}] is empty", a, b));
  std::vector<LatticePoint> pts;
  pts.reserve(static_cast<std::size_t>(b - a + 1));
  for (Coord x = a; x <= b; ++x) pts.push_back(LatticePoint{x});
  return Domain::from_points(1, std::move(pts));
}

Domain make_ball(const LatticePoint& center, double r, const Domain* clip) {
  require(r > 0.0 && std::isfinite(r), ErrorCode::kInvalidArgument,
          "ball radius must be positive and finite");
  const int d = center.dim();
  require(d >= 1, ErrorCode::kInvalidArgument, "center has no coordinates");
  if (clip != nullptr) {
    require(clip->dim() == d, ErrorCode::kDimensionMismatch,
            "clip domain dimension differs from the center");
  }

  const Coord reach = static_cast<Coord>(std::ceil(r));
  const double r2 = r * r;
  std::vector<LatticePoint> pts;
  std::vector<Coord> offset(static_cast<std::size_t>(d), -reach);
  while (true) {
    Coord s = 0;
    for (Coord o : offset) s += o * o;
    if (static_cast<double>(s) < r2) {
      LatticePoint p = center;
      for (int k = 0; k < d; ++k) p.coords[static_cast<std::size_t>(k)] += offset[static_cast<std::size_t>(k)];
      if (clip == nullptr || clip->contains(p)) pts.push_back(std::move(p));
    }
    int axis = d - 1;
    for (; axis >= 0; --axis) {
      if (++offset[static_cast<std::size_t>(axis)] <= reach) break;
      offset[static_cast<std::size_t>(axis)] = -reach;
    }
    if (axis < 0) break;
  }
  require(!pts.empty(), ErrorCode::kEmptyDomain, "ball does not meet the clip domain");
  return Domain::from_points(d, std::move(pts));
}

std::vector<LatticePoint> unit_steps(int d) {
  // Sorted so that x + step enumerates neighbors lexicographically:
  // negative steps on the first axis come first.
  std::vector<LatticePoint> steps;
  for (int axis = 0; axis < d; ++axis) {
    LatticePoint s(std::vector<Coord>(static_cast<std::size_t>(d), 0));
    s.coords[static_cast<std::size_t>(axis)] = -1;
    steps.push_back(s);
  }
  for (int axis = d - 1; axis >= 0; --axis) {
    LatticePoint s(std::vector<Coord>(static_cast<std::size_t>(d), 0));
    s.coords[static_cast<std::size_t>(axis)] = 1;
    steps.push_back(s);
  }
  return steps;
}

namespace {

LatticePoint shifted(const LatticePoint& x, const LatticePoint& step) {
  LatticePoint y = x;
  for (std::size_t k = 0; k < y.coords.size(); ++k) y.coords[k] += step.coords[k];
  return y;
}

}  // namespace

std::vector<LatticePoint> neighbors(const Domain& dom, const LatticePoint& x) {
  dom.require_index(x);
  std::vector<LatticePoint> out;
  for (const auto& step : unit_steps(dom.dim())) {
    LatticePoint y = shifted(x, step);
    if (dom.contains(y)) out.push_back(std::move(y));
  }
  return out;
}

std::vector<EdgePair> boundary_edges(const Domain& sub) {
  const auto steps = unit_steps(sub.dim());
  std::vector<EdgePair> edges;
  for (const auto& x : sub.points()) {
    for (const auto& step : steps) {
      LatticePoint y = shifted(x, step);
      if (!sub.contains(y)) edges.push_back({x, std::move(y)});
    }
  }
  return edges;
}

Domain outer_boundary(const Domain& sub) {
  std::set<LatticePoint> ring;
  for (auto& e : boundary_edges(sub)) ring.insert(std::move(e.outer));
  return Domain::from_points(sub.dim(), {ring.begin(), ring.end()});
}

std::optional<Coord> box_radius(const Domain& dom) {
  const auto& first = dom[0];
  const Coord n = -first[0];
  if (n < 0) return std::nullopt;
  std::size_t expected = 1;
  for (int k = 0; k < dom.dim(); ++k) expected *= static_cast<std::size_t>(2 * n + 1);
  if (expected != dom.size()) return std::nullopt;
  for (const auto& p : dom.points()) {
    for (Coord c : p.coords) {
      if (c < -n || c > n) return std::nullopt;
    }
  }
  return n;
}

}  // namespace anderson
