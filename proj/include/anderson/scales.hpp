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

// Deterministic constants and scaling functions of the principal eigenvalue
// asymptotics.
//
// Notation: ω_d is the volume of the unit ball of R^d and μ_d the principal
// Dirichlet eigenvalue of the Laplacian on it. Everything that depends on the
// potential law does so through a ConditionTag: an atom at zero (F(0) ∈ (0,1))
// or a power law F(t) ~ c t^η near zero.

#ifndef ANDERSON_SCALES_HPP
#define ANDERSON_SCALES_HPP

#include <cstdint>

#include "anderson/potential.hpp"

namespace anderson {

inline constexpr int kMaxBesselDimension = 10;

struct DimensionConstants {
  int d = 0;
  double omega = 0.0;
  double mu = 0.0;
};

/// π^{d/2} / Γ(d/2 + 1).
double omega(int d);

/// Square of the first positive zero of J_{d/2-1}, found by bracketing a sign
/// change and refining with TOMS 748. Supports 1 ≤ d ≤ kMaxBesselDimension.
double mu(int d);

DimensionConstants dimension_constants(int d);

/// μ_d / (2d): the conjectured limit of λ‖L‖∞ on large boxes.
double conjecture_constant(int d);

/// 1 + d/4.
double naive_constant(int d);

/// 0 for an atom at zero, (ln n)^{-2/d} for a power law. n ≥ 2.
double epsilon_n(const ConditionTag& tag, std::int64_t n, int d);

/// (d ln n / (ω_d |ln F(ε_n)|))^{1/d}; throws kDegenerate when F(ε_n) ∈ {0, 1}.
double y_n(const DistributionSpec& spec, std::int64_t n, int d);

/// |ln F(0)| for an atom at zero, 2η/(d+2) for a power law.
double h_tilde(const ConditionTag& tag, int d);

/// t^{1/(d+2)} for an atom, (t / ln t)^{1/(d+2)} for a power law. t > 1.
double alpha(const ConditionTag& tag, double t, int d);

/// Inverse of alpha on its increasing branch. For a power law that branch is
/// t > e (where t / ln t turns around), so s must exceed e^{1/(d+2)}.
double alpha_inverse(const ConditionTag& tag, double s, int d);

/// Lower end of the range on which f is increasing and f_inverse is defined:
/// 0 for an atom, e^{2/(d+2)} for a power law.
double f_domain_start(const ConditionTag& tag, int d);

/// (d+2) (H̃ ω_d / 2)^{2/(d+2)} (μ_d / d)^{d/(d+2)}.
double chi(const ConditionTag& tag, int d);
double chi_from_h_tilde(double h, int d);

/// f(t) = H̃ ω_d μ_d^{d/2} α^{-1}(√t) / t.
double f(const ConditionTag& tag, double t, int d);

/// Closed form for an atom; bisection on f for a power law. Inputs below
/// f(f_domain_start) are rejected.
double f_inverse(const ConditionTag& tag, double t, int d);

/// The asymptotic form (1/μ_d)(d t / (2η ω_d ln t))^{2/d} of f^{-1} for a power law.
double f_inverse_asymptotic(const PowerLawAtZero& tag, double t, int d);

/// Scale s_n such that λ_n / s_n → μ_d:
///   atom:      (ω_d |ln F(0)| / (d ln n))^{2/d}, n ≥ 2
///   power law: (2η ω_d ln ln n / (d² ln n))^{2/d}, n ≥ 3
double eig_normalizer(const ConditionTag& tag, std::int64_t n, int d);

}  // namespace anderson

#endif  // ANDERSON_SCALES_HPP
