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

// Randomized checks of the deterministic identities and inequalities:
// resolvent identity, one-dimensional Green bounds, the eigenvalue-landscape
// product, the semigroup bound, path determinants and ball limits.

#ifndef ANDERSON_VERIFY_HPP
#define ANDERSON_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>

#include "anderson/lattice.hpp"
#include "anderson/potential.hpp"

namespace anderson {

struct VerifyReport {
  std::string suite;
  bool passed = true;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::map<std::string, double> metrics;  ///< recorded extremes
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// 0 keeps each suite's default instance count.
  std::size_t instances = 0;
};

// Thresholds.
inline constexpr double kGriRelativeTol = 1e-9;
inline constexpr double kGreenBoundSlack = -1e-12;
inline constexpr double kProductFloorTol = 1e-9;
inline constexpr double kSinglePointTol = 1e-12;
inline constexpr double kSemigroupConstant = 3.0;
inline constexpr double kBallLimitTolD1 = 0.01;
inline constexpr double kBallLimitTolD2 = 0.05;

VerifyReport verify_gri(const VerifyOptions& opts);           // default 100
VerifyReport verify_green_bound(const VerifyOptions& opts);   // default 1000
VerifyReport verify_evlf(const VerifyOptions& opts);          // default 1000
VerifyReport verify_semigroup(const VerifyOptions& opts);     // default 100
VerifyReport verify_detpath(const VerifyOptions& opts);       // default 100
VerifyReport verify_ball_limits(const VerifyOptions& opts);

/// Dispatch by CLI name: gri, green-bound, evlf, semigroup, detpath, ball-limits.
VerifyReport run_verify_suite(std::string_view name, const VerifyOptions& opts);

/// Random subset of a box in d ∈ {1, 2} with at most `max_sites` sites.
Domain random_subdomain(std::mt19937_64& rng, std::size_t max_sites);

/// Random subset of `ambient` (nonempty).
Domain random_subset(std::mt19937_64& rng, const Domain& ambient);

/// Bernoulli(p) with random p, or Uniform01, sampled on `dom`.
PotentialField random_potential(std::mt19937_64& rng, const Domain& dom);

}  // namespace anderson

#endif  // ANDERSON_VERIFY_HPP
