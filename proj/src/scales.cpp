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

#include "anderson/scales.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include "anderson/error.hpp"

namespace anderson {

namespace {

void check_dimension(int d) {
  require(d >= 1, ErrorCode::kInvalidArgument, "dimension must be at least 1");
}

bool is_atom(const ConditionTag& tag) { return std::holds_alternative<AtomAtZero>(tag); }

double eta_of(const ConditionTag& tag) { return std::get<PowerLawAtZero>(tag).eta; }

double first_bessel_zero(double order) {
  const auto j = [order](double x) { return boost::math::cyl_bessel_j(order, x); };
  // J_ν > 0 on (0, first zero) for ν > -1; step until the sign flips.
  constexpr double step = 0.25;
  double lo = 1e-3;
  double hi = lo + step;
  while (j(hi) > 0.0) {
    lo = hi;
    hi += step;
  }
  std::uintmax_t iterations = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      j, lo, hi, boost::math::tools::eps_tolerance<double>(), iterations);
  return 0.5 * (a + b);
}

}  // namespace

double omega(int d) {
  check_dimension(d);
  return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

double mu(int d) {
  check_dimension(d);
  require(d <= kMaxBesselDimension, ErrorCode::kInvalidArgument,
          fmt::format("mu is supported for 1 ≤ d ≤ {}", kMaxBesselDimension));
  const double z = first_bessel_zero(d / 2.0 - 1.0);
  return z * z;
}

DimensionConstants dimension_constants(int d) { return {d, omega(d), mu(d)}; }

double conjecture_constant(int d) { return mu(d) / (2.0 * d); }

double naive_constant(int d) {
  check_dimension(d);
  return 1.0 + d / 4.0;
}

double epsilon_n(const ConditionTag& tag, std::int64_t n, int d) {
  check_dimension(d);
  require(n >= 2, ErrorCode::kInvalidArgument, "epsilon_n needs n ≥ 2");
  if (is_atom(tag)) return 0.0;
  return std::pow(std::log(static_cast<double>(n)), -2.0 / d);
}

double y_n(const DistributionSpec& spec, std::int64_t n, int d) {
  const double eps = epsilon_n(classify(spec), n, d);
  const double f_eps = cdf(spec, eps);
  require(f_eps > 0.0 && f_eps < 1.0, ErrorCode::kDegenerate,
          fmt::format("F(epsilon_n) = {} is degenerate", f_eps));
  return std::pow(d * std::log(static_cast<double>(n)) / (omega(d) * std::abs(std::log(f_eps))),
                  1.0 / d);
}

double h_tilde(const ConditionTag& tag, int d) {
  check_dimension(d);
  if (const auto* a = std::get_if<AtomAtZero>(&tag)) {
    require(a->f0 > 0.0 && a->f0 < 1.0, ErrorCode::kInvalidArgument, "F(0) must lie in (0,1)");
    return std::abs(std::log(a->f0));
  }
  const double eta = eta_of(tag);
  require(eta > 0.0, ErrorCode::kInvalidArgument, "eta must be positive");
  return 2.0 * eta / (d + 2.0);
}

double alpha(const ConditionTag& tag, double t, int d) {
  check_dimension(d);
  require(t > 1.0, ErrorCode::kInvalidArgument, "alpha is defined for t > 1");
  const double base = is_atom(tag) ? t : t / std::log(t);
  return std::pow(base, 1.0 / (d + 2.0));
}

double alpha_inverse(const ConditionTag& tag, double s, int d) {
  check_dimension(d);
  const double target = std::pow(s, d + 2.0);
  if (is_atom(tag)) {
    require(s > 1.0, ErrorCode::kInvalidArgument, "alpha_inverse needs s > 1");
    return target;
  }
  require(s > std::exp(1.0 / (d + 2.0)), ErrorCode::kInvalidArgument,
          "alpha_inverse needs s above the turning value e^{1/(d+2)}");
  // Solve u / ln u = target on u > e. The map u -> target ln u contracts there
  // (derivative 1/ln u < 1); near u = e it is slow, so fall back to bisection.
  double u = std::max(std::numbers::e, target * std::log(std::max(target, std::numbers::e)));
  for (int it = 0; it < 200; ++it) {
    const double next = target * std::log(u);
    if (std::abs(next - u) <= 1e-15 * u) return next;
    u = next;
  }
  double lo = std::numbers::e;
  double hi = std::max(2.0 * std::numbers::e, 2.0 * target * std::log(target + 1.0) + 10.0);
  while (hi / std::log(hi) < target) hi *= 2.0;
  for (int it = 0; it < 400 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (mid / std::log(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double f_domain_start(const ConditionTag& tag, int d) {
  check_dimension(d);
  return is_atom(tag) ? 0.0 : std::exp(2.0 / (d + 2.0));
}

double chi_from_h_tilde(double h, int d) {
  require(h > 0.0, ErrorCode::kInvalidArgument, "H tilde must be positive");
  const double dd = d;
  return (dd + 2.0) * std::pow(h * omega(d) / 2.0, 2.0 / (dd + 2.0)) *
         std::pow(mu(d) / dd, dd / (dd + 2.0));
}

double chi(const ConditionTag& tag, int d) { return chi_from_h_tilde(h_tilde(tag, d), d); }

double f(const ConditionTag& tag, double t, int d) {
  require(t > 0.0, ErrorCode::kInvalidArgument, "f needs t > 0");
  const double k = h_tilde(tag, d) * omega(d) * std::pow(mu(d), d / 2.0);
  if (is_atom(tag)) return k * std::pow(t, d / 2.0);
  require(t > f_domain_start(tag, d), ErrorCode::kInvalidArgument,
          "f is only monotone for t > e^{2/(d+2)} under a power law");
  return k * alpha_inverse(tag, std::sqrt(t), d) / t;
}

double f_inverse(const ConditionTag& tag, double t, int d) {
  require(t > 0.0, ErrorCode::kInvalidArgument, "f_inverse needs t > 0");
  const double k = h_tilde(tag, d) * omega(d) * std::pow(mu(d), d / 2.0);
  if (is_atom(tag)) return std::pow(t / k, 2.0 / d);

  const double start = f_domain_start(tag, d);
  // f(start⁺) = k e / start: α^{-1} equals e at the turning point.
  const double f_start = k * std::numbers::e / start;
  require(t > f_start, ErrorCode::kInvalidArgument,
          fmt::format("f_inverse needs t > {} under a power law", f_start));
  double lo = start;
  double hi = 2.0 * start;
  while (f(tag, hi, d) < t) {
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 300 && hi - lo > 4e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= start) break;
    (f(tag, mid, d) < t ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double f_inverse_asymptotic(const PowerLawAtZero& tag, double t, int d) {
  require(t > 1.0, ErrorCode::kInvalidArgument, "asymptotic form needs t > 1");
  return std::pow(d * t / (2.0 * tag.eta * omega(d) * std::log(t)), 2.0 / d) / mu(d);
}

double eig_normalizer(const ConditionTag& tag, std::int64_t n, int d) {
  check_dimension(d);
  const double ln_n = std::log(static_cast<double>(n));
  if (const auto* a = std::get_if<AtomAtZero>(&tag)) {
    require(n >= 2, ErrorCode::kInvalidArgument, "normalizer needs n ≥ 2");
    return std::pow(omega(d) * std::abs(std::log(a->f0)) / (d * ln_n), 2.0 / d);
  }
  require(n >= 3, ErrorCode::kInvalidArgument, "power-law normalizer needs n ≥ 3");
  return std::pow(2.0 * eta_of(tag) * omega(d) * std::log(ln_n) / (double(d) * d * ln_n),
                  2.0 / d);
}

}  // namespace anderson
