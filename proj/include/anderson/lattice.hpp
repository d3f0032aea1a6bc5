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

// Finite subsets of Z^d: boxes, intervals, open Euclidean balls, neighbor
// structure and boundaries.

#ifndef ANDERSON_LATTICE_HPP
#define ANDERSON_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace anderson {

using Coord = std::int64_t;

struct LatticePoint {
  std::vector<Coord> coords;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> c) : coords(std::move(c)) {}
  LatticePoint(std::initializer_list<Coord> c) : coords(c) {}

  int dim() const noexcept { return static_cast<int>(coords.size()); }
  Coord operator[](std::size_t i) const { return coords[i]; }

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Squared Euclidean distance; both points must share a dimension.
Coord squared_distance(const LatticePoint& a, const LatticePoint& b);

/// Ordered, immutable finite subset of Z^d.
///
/// Points are kept in lexicographic order, which is also the site index order
/// used by every vector indexed by a domain. Copies share storage.
class Domain {
 public:
  /// Builds a domain from arbitrary distinct points of dimension `d`; points
  /// are sorted lexicographically. Duplicates, mixed dimensions and empty input
  /// are rejected.
  static Domain from_points(int d, std::vector<LatticePoint> points);

  int dim() const noexcept { return impl_->d; }
  std::size_t size() const noexcept { return impl_->points.size(); }
  const LatticePoint& operator[](std::size_t i) const { return impl_->points[i]; }
  std::span<const LatticePoint> points() const noexcept { return impl_->points; }

  std::optional<std::size_t> index_of(const LatticePoint& p) const;
  bool contains(const LatticePoint& p) const { return index_of(p).has_value(); }

  /// Throws kNotInDomain when `p` is absent.
  std::size_t require_index(const LatticePoint& p) const;

  /// True when d = 1 and the points are consecutive integers.
  bool is_path() const noexcept { return impl_->path; }

  /// Every point of `*this` lies in `other`.
  bool is_subset_of(const Domain& other) const;

  friend bool operator==(const Domain& a, const Domain& b);

 private:
  struct Impl {
    int d = 0;
    std::vector<LatticePoint> points;
    bool path = false;
  };
  explicit Domain(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// Ordered nearest-neighbor pair with `inner` in a domain and `outer` outside.
struct EdgePair {
  LatticePoint inner;
  LatticePoint outer;

  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

/// [-n, n]^d ∩ Z^d.
Domain make_box(Coord n, int d);

/// {a, ..., b} in d = 1.
Domain make_interval(Coord a, Coord b);

/// Lattice points at Euclidean distance strictly less than `r` from `center`,
/// optionally intersected with `clip`. Throws kEmptyDomain if the clipped
/// result is empty.
Domain make_ball(const LatticePoint& center, double r, const Domain* clip = nullptr);

/// In-domain members of the 2d nearest neighbors of `x`.
std::vector<LatticePoint> neighbors(const Domain& dom, const LatticePoint& x);

/// All (i, j) with i in `sub`, j outside, |i - j| = 1, sorted by (i, j).
std::vector<EdgePair> boundary_edges(const Domain& sub);

/// Points outside `sub` adjacent to some point of `sub`.
Domain outer_boundary(const Domain& sub);

/// The 2d unit displacements, in lexicographic order of the displaced point.
std::vector<LatticePoint> unit_steps(int d);

/// Returns n if `dom` equals make_box(n, dom.dim()).
std::optional<Coord> box_radius(const Domain& dom);

}  // namespace anderson

#endif  // ANDERSON_LATTICE_HPP
