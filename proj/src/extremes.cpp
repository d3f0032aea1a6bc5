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

#include "anderson/extremes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "anderson/error.hpp"
#include "anderson/scales.hpp"

namespace anderson {

namespace {

// Offsets k with (r-1)² ≤ |k|² < r², i.e. B(0,r) \ B(0,r-1) on Z^d, for
// r = 1, 2, ... grown on demand.
class BallShells {
 public:
  explicit BallShells(int d) : d_(d) { shells_.emplace_back(); }

  const std::vector<std::vector<Coord>>& shell(std::int64_t r) {
    while (static_cast<std::int64_t>(shells_.size()) <= r) grow();
    return shells_[static_cast<std::size_t>(r)];
  }

 private:
  void grow() {
    const auto r = static_cast<Coord>(shells_.size());
    const Coord reach = r - 1;
    std::vector<std::vector<Coord>> shell;
    std::vector<Coord> k(static_cast<std::size_t>(d_), -reach);
    while (true) {
      Coord s = 0;
      for (Coord c : k) s += c * c;
      if (s >= (r - 1) * (r - 1) && s < r * r) shell.push_back(k);
      int axis = d_ - 1;
      for (; axis >= 0; --axis) {
        if (++k[static_cast<std::size_t>(axis)] <= reach) break;
        k[static_cast<std::size_t>(axis)] = -reach;
      }
      if (axis < 0) break;
    }
    shells_.push_back(std::move(shell));
  }

  int d_;
  std::vector<std::vector<std::vector<Coord>>> shells_;
};

// Lexicographic site index inside Λ_n.
std::size_t box_index(std::span<const Coord> x, Coord n) {
  std::size_t idx = 0;
  const auto side = static_cast<std::size_t>(2 * n + 1);
  for (Coord c : x) idx = idx * side + static_cast<std::size_t>(c + n);
  return idx;
}

void require_path(const PotentialField& v) {
  require(v.domain.is_path(), ErrorCode::kInvalidArgument,
          "Z-sums need a potential on a one-dimensional interval");
}

}  // namespace

ClearBallResult largest_clear_ball(const PotentialField& v, double threshold) {
  require(threshold >= 0.0, ErrorCode::kInvalidArgument, "threshold must be nonnegative");
  const auto box_n = box_radius(v.domain);
  require(box_n.has_value(), ErrorCode::kInvalidArgument,
          "largest_clear_ball needs a potential on a box [-n,n]^d");
  const Coord n = *box_n;
  const int d = v.domain.dim();

  BallShells shells(d);
  ClearBallResult best;
  best.threshold = threshold;
  std::vector<Coord> y(static_cast<std::size_t>(d));

  for (const auto& x : v.domain.points()) {
    Coord reach = 0;
    for (Coord c : x.coords) reach = std::max(reach, std::abs(c));
    const Coord contain_cap = n + 1 - reach;  // largest r with B(x,r) ⊆ Λ_n
    if (contain_cap <= best.radius) continue;

    Coord r = 0;
    while (r < contain_cap) {
      bool clear = true;
      for (const auto& k : shells.shell(r + 1)) {
        for (int a = 0; a < d; ++a) {
          y[static_cast<std::size_t>(a)] = x.coords[static_cast<std::size_t>(a)] + k[static_cast<std::size_t>(a)];
        }
        if (v.values[box_index(y, n)] > threshold) {
          clear = false;
          break;
        }
      }
      if (!clear) break;
      ++r;
    }
    if (r > best.radius) {
      best.radius = r;
      best.center = x;
    }
  }
  if (best.radius == 0) {
    fail(ErrorCode::kNoBall,
         fmt::format("no site of the box has potential at most {}", threshold));
  }
  return best;
}

ZResult z_delta(const PotentialField& v, Coord x, double delta) {
  require_path(v);
  require(delta > 0.0, ErrorCode::kInvalidArgument, "delta must be positive");
  const std::size_t i = v.domain.require_index(LatticePoint{x});
  const double level = 1.0 / delta;
  const auto scan = [&](int direction) -> std::optional<std::int64_t> {
    double partial = 0.0;   // Σ_{j≤m} V(x ± j)
    double weighted = 0.0;  // Σ_{j≤m} (m+1-j) V(x ± j)
    const auto available = direction > 0 ? v.values.size() - 1 - i : i;
    for (std::size_t m = 1; m <= available; ++m) {
      partial += v.values[direction > 0 ? i + m : i - m];
      weighted += partial;
      if (weighted > level) return static_cast<std::int64_t>(m);
    }
    return std::nullopt;
  };
  return ZResult{scan(+1), scan(-1), delta};
}

MaxZResult max_z_sum(const PotentialField& v, double delta, std::optional<double> y_n_value) {
  require_path(v);
  MaxZResult out;
  bool found = false;
  for (const auto& p : v.domain.points()) {
    const auto z = z_delta(v, p[0], delta);
    if (!z.z_plus || !z.z_minus) {
      ++out.excluded;
      continue;
    }
    const auto sum = *z.z_plus + *z.z_minus;
    if (!found || sum > out.max_sum) {
      out.max_sum = sum;
      out.argmax_x = p[0];
      found = true;
    }
  }
  if (!found) {
    throw AllNotReachedError(
        fmt::format("no site reaches the level 1/delta on both sides ({} excluded)",
                    out.excluded),
        out.excluded);
  }

  double scale = std::numeric_limits<double>::quiet_NaN();
  if (y_n_value) {
    scale = *y_n_value;
  } else if (v.spec) {
    if (auto n = box_radius(v.domain); n && *n >= 2) scale = y_n(*v.spec, *n, 1);
  }
  out.y_ratio = static_cast<double>(out.max_sum) / (2.0 * scale);
  return out;
}

}  // namespace anderson
