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

// Extremal geometry of a sampled potential: the largest low-potential ball in
// a box, and the one-sided accumulation lengths Z±_δ on a line.

#ifndef ANDERSON_EXTREMES_HPP
#define ANDERSON_EXTREMES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "anderson/lattice.hpp"
#include "anderson/potential.hpp"

namespace anderson {

struct ClearBallResult {
  std::int64_t radius = 0;  ///< Y_n
  LatticePoint center;      ///< x_n, lexicographically smallest maximizer
  double threshold = 0.0;   ///< ε_n
};

/// Largest integer r such that some open ball B(x, r) ∩ Z^d, x in the box,
/// stays inside the box and has V ≤ threshold on every site. `v` must live on
/// a box Λ_n. Throws kNoBall when not even r = 1 qualifies.
ClearBallResult largest_clear_ball(const PotentialField& v, double threshold);

/// Lengths n such that Σ_{j=1}^n (n+1-j) V(x ± j) first exceeds 1/δ.
/// std::nullopt when the window ends first.
struct ZResult {
  std::optional<std::int64_t> z_plus;
  std::optional<std::int64_t> z_minus;
  double delta = 0.0;
};

/// `v` must live on a d = 1 path domain containing x.
ZResult z_delta(const PotentialField& v, Coord x, double delta);

struct MaxZResult {
  std::int64_t max_sum = 0;  ///< max over x of Z⁺ + Z⁻ where both are reached
  Coord argmax_x = 0;        ///< smallest maximizer
  double y_ratio = 0.0;      ///< max_sum / (2 y_n); NaN when y_n is unknown
  std::size_t excluded = 0;  ///< sites with either side not reached
};

/// Throws AllNotReachedError when every site is excluded. `y_n_value` scales
/// the ratio; without it the field's distribution and box radius are used.
MaxZResult max_z_sum(const PotentialField& v, double delta,
                     std::optional<double> y_n_value = std::nullopt);

}  // namespace anderson

#endif  // ANDERSON_EXTREMES_HPP
