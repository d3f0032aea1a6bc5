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

// I.i.d. nonnegative site potentials: distributions, sampling, the
// distribution function F, the cumulant-generating function H and the
// atom-at-zero / power-law classification.

#ifndef ANDERSON_POTENTIAL_HPP
#define ANDERSON_POTENTIAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "anderson/lattice.hpp"

namespace anderson {

/// V = 1 with probability p, else 0.
struct Bernoulli {
  double p;
  friend bool operator==(const Bernoulli&, const Bernoulli&) = default;
};

struct Uniform01 {
  friend bool operator==(const Uniform01&, const Uniform01&) = default;
};

/// Deterministic V = v.
struct PointMass {
  double v;
  friend bool operator==(const PointMass&, const PointMass&) = default;
};

using DistributionSpec = std::variant<Bernoulli, Uniform01, PointMass>;

/// Atom at zero: 0 < F(0) < 1.
struct AtomAtZero {
  double f0;
};

/// Power law near zero: F(t) = c t^eta (1 + o(1)).
struct PowerLawAtZero {
  double c;
  double eta;
};

using ConditionTag = std::variant<AtomAtZero, PowerLawAtZero>;

/// Throws kInvalidArgument on out-of-range parameters.
void validate(const DistributionSpec& spec);

/// Parses "bernoulli:0.3", "uniform01" or "pointmass:0.0".
DistributionSpec parse_distribution(std::string_view text);
std::string to_string(const DistributionSpec& spec);

struct PotentialField {
  Domain domain;
  std::vector<double> values;
  /// Empty for explicitly supplied values.
  std::optional<DistributionSpec> spec;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;

  double at(const LatticePoint& x) const { return values[domain.require_index(x)]; }
};

/// Wraps explicit nonnegative values; length must match the domain.
PotentialField make_field(const Domain& dom, std::vector<double> values);

/// Restriction of `field` to `sub`, which must be a subset of its domain.
PotentialField restrict_field(const PotentialField& field, const Domain& sub);

/// Uniform variate in [0, 1) determined by (seed, trial, coordinates) alone.
double site_uniform(std::uint64_t seed, std::uint64_t trial, const LatticePoint& x);

/// Samples V(x) for every site of `dom`. Each value depends only on
/// (seed, trial, absolute coordinates of x), so fields on nested domains agree
/// on their intersection and the result is independent of evaluation order.
PotentialField sample_potential(const DistributionSpec& spec, const Domain& dom,
                                std::uint64_t seed, std::uint64_t trial);

/// F(t) = P[V <= t].
double cdf(const DistributionSpec& spec, double t);

/// H(t) = ln E[exp(-t V)], t > 0.
double cgf(const DistributionSpec& spec, double t);

/// Bernoulli -> atom at zero with F(0) = 1 - p; Uniform01 -> power law with
/// c = eta = 1. PointMass fits neither and throws kUnclassifiable.
ConditionTag classify(const DistributionSpec& spec);

}  // namespace anderson

#endif  // ANDERSON_POTENTIAL_HPP
