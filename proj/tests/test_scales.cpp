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

#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"

#include "anderson/scales.hpp"
#include "oracles.hpp"

using namespace anderson;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

const ConditionTag kC1{AtomAtZero{0.7}};
const ConditionTag kC2{PowerLawAtZero{1.0, 1.0}};

/// f⁻¹ under a power law, computed entirely in logarithms: ln u solves
/// L - ln L = ((d+2)/2) ln t for u = α⁻¹(√t), then ln f = ln k + L - ln t is
/// inverted by bisection in ln t.
double f_inverse_log_oracle(double eta, double target, int d) {
  const double m = oracle::mu_oracle(d);
  const double w = std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
  const double log_k = std::log(2.0 * eta / (d + 2.0) * w * std::pow(m, d / 2.0));
  const auto log_f = [&](double lt) {
    const double ls = (d + 2.0) / 2.0 * lt;
    const double big = oracle::bisect([ls](double l) { return l - std::log(l) - ls; }, 1.0,
                                      4.0 * ls + 10.0);
    return log_k + big - lt;
  };
  const double lt = oracle::bisect([&](double l) { return log_f(l) - std::log(target); },
                                   2.0 / (d + 2.0) + 1e-9, 1e4);
  return std::exp(lt);
}

}  // namespace

TEST_CASE("omega") {
  CHECK(omega(1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(omega(2) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(omega(3) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-15));
  CHECK(omega(4) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-15));
  CHECK(oracle::error_code_of([] { omega(0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("mu") {
  CHECK(std::abs(mu(1) - kPi * kPi / 4.0) <= 1e-12 * mu(1));
  CHECK(std::abs(mu(3) - kPi * kPi) <= 1e-12 * mu(3));
  CHECK(mu(2) > 5.78);
  CHECK(mu(2) < 5.79);
  for (int d = 1; d <= kMaxBesselDimension; ++d) {
    CHECK(mu(d) == doctest::Approx(oracle::mu_oracle(d)).epsilon(1e-10));
  }
  CHECK(mu(1) / 2.0 == doctest::Approx(1.2337).epsilon(1e-4));
  CHECK(oracle::error_code_of([] { mu(kMaxBesselDimension + 1); }) ==
        ErrorCode::kInvalidArgument);
  const auto dc = dimension_constants(2);
  CHECK(dc.d == 2);
  CHECK(dc.omega == omega(2));
  CHECK(dc.mu == mu(2));
}

TEST_CASE("conjecture and naive constants") {
  CHECK(conjecture_constant(1) == doctest::Approx(kPi * kPi / 8.0).epsilon(1e-12));
  CHECK(naive_constant(1) == 1.25);
  CHECK(conjecture_constant(2) == doctest::Approx(1.4458).epsilon(1e-4));
  CHECK(naive_constant(2) == 1.5);
  CHECK(conjecture_constant(3) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
  CHECK(naive_constant(3) == 1.75);
  for (int d = 1; d <= 6; ++d) CHECK(conjecture_constant(d) < naive_constant(d));
}

TEST_CASE("epsilon_n and y_n") {
  CHECK(epsilon_n(kC1, 100, 1) == 0.0);
  CHECK(epsilon_n(kC2, 100, 1) == doctest::Approx(std::pow(std::log(100.0), -2.0)));
  CHECK(epsilon_n(kC2, 100, 1) == doctest::Approx(0.04715).epsilon(1e-4));
  CHECK(epsilon_n(kC2, 100, 2) == doctest::Approx(0.2171).epsilon(1e-4));
  CHECK(oracle::error_code_of([] { epsilon_n(kC1, 1, 1); }) == ErrorCode::kInvalidArgument);

  const double y100 = y_n(Bernoulli{0.3}, 100, 1);
  CHECK(y100 == doctest::Approx(std::log(100.0) / (2.0 * std::abs(std::log(0.7)))));
  CHECK(y100 == doctest::Approx(6.456).epsilon(1e-4));
  CHECK(y_n(Bernoulli{0.3}, 10000, 1) == doctest::Approx(2.0 * y100).epsilon(1e-14));

  const double eps = std::pow(std::log(100.0), -2.0);
  CHECK(y_n(Uniform01{}, 100, 1) ==
        doctest::Approx(std::log(100.0) / (2.0 * std::abs(std::log(eps)))).epsilon(1e-14));
  CHECK(y_n(Uniform01{}, 100, 1) == doctest::Approx(0.75387).epsilon(1e-5));
  CHECK(oracle::error_code_of([] { y_n(PointMass{0.0}, 100, 1); }) ==
        ErrorCode::kUnclassifiable);
}

TEST_CASE("property: the C1 normalizer is y_n to the power -2") {
  for (int d = 1; d <= 3; ++d) {
    for (double p : {0.1, 0.3, 0.8}) {
      for (std::int64_t n : {2, 10, 100, 100000}) {
        const double y = y_n(Bernoulli{p}, n, d);
        const double norm = eig_normalizer(classify(Bernoulli{p}), n, d);
        CHECK(std::abs(norm * y * y - 1.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("h_tilde and alpha") {
  CHECK(h_tilde(kC1, 1) == doctest::Approx(0.35667).epsilon(1e-5));
  CHECK(h_tilde(kC2, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(h_tilde(kC2, 2) == doctest::Approx(0.5).epsilon(1e-15));

  CHECK(alpha(kC1, 8.0, 1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(alpha(kC2, kE * kE, 1) == doctest::Approx(std::cbrt(kE * kE / 2.0)).epsilon(1e-15));
  CHECK(alpha(kC1, 1024.0, 3) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(oracle::error_code_of([] { alpha(kC1, 1.0, 1); }) == ErrorCode::kInvalidArgument);

  for (int d = 1; d <= 3; ++d) {
    for (double t : {3.0, 10.0, 1e3, 1e8}) {
      CHECK(alpha_inverse(kC1, alpha(kC1, t, d), d) == doctest::Approx(t).epsilon(1e-12));
      CHECK(alpha_inverse(kC2, alpha(kC2, t, d), d) == doctest::Approx(t).epsilon(1e-10));
    }
  }
}

TEST_CASE("chi") {
  CHECK(chi_from_h_tilde(1.0, 1) == doctest::Approx(3.0 * std::cbrt(kPi * kPi / 4.0)));
  CHECK(chi_from_h_tilde(1.0, 1) == doctest::Approx(4.05385).epsilon(1e-5));
  for (double h : {0.1, 1.0, 10.0}) {
    CHECK(chi_from_h_tilde(h, 1) ==
          doctest::Approx(std::pow(h, 2.0 / 3.0) * chi_from_h_tilde(1.0, 1)).epsilon(1e-12));
  }
  CHECK(chi(kC1, 2) == doctest::Approx(oracle::chi_oracle(std::abs(std::log(0.7)), 2)).epsilon(1e-8));
  CHECK(oracle::error_code_of([] { chi_from_h_tilde(0.0, 1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("property: chi closed form equals numerical minimization") {
  for (int d = 1; d <= 3; ++d) {
    for (double h : {0.1, 1.0, 10.0}) {
      const double closed = chi_from_h_tilde(h, d);
      CHECK(std::abs(closed / oracle::chi_oracle(h, d) - 1.0) <= 1e-8);
    }
  }
}

TEST_CASE("f and f_inverse") {
  const double k1 = 2.0 * std::abs(std::log(0.7)) * std::sqrt(kPi * kPi / 4.0);
  for (double t : {0.01, 1.0, 42.0}) {
    CHECK(f(kC1, t, 1) == doctest::Approx(k1 * std::sqrt(t)).epsilon(1e-12));
    CHECK(f(kC1, f_inverse(kC1, t, 1), 1) == doctest::Approx(t).epsilon(1e-14));
  }
  // Closed form of the inverse for an atom at zero.
  for (int d = 1; d <= 3; ++d) {
    const double t = 17.0;
    CHECK(f_inverse(kC1, t, d) ==
          doctest::Approx(std::pow(t / (omega(d) * std::abs(std::log(0.7))), 2.0 / d) / mu(d))
              .epsilon(1e-12));
  }

  SUBCASE("power law: agrees with a log-space oracle and approaches the asymptotic form") {
    double prev = std::numeric_limits<double>::infinity();
    for (double t : {1e6, 1e10, 1e20, 1e40}) {
      const double numeric = f_inverse(kC2, t, 1);
      CHECK(numeric == doctest::Approx(f_inverse_log_oracle(1.0, t, 1)).epsilon(1e-8));
      const double ratio = numeric / f_inverse_asymptotic(PowerLawAtZero{1.0, 1.0}, t, 1);
      CHECK(ratio > 1.0);
      CHECK(ratio < prev);
      prev = ratio;
    }
    // The approach is logarithmic: 1.65 at t = 1e6, inside 25% only from about 1e20.
    CHECK(f_inverse(kC2, 1e6, 1) / f_inverse_asymptotic(PowerLawAtZero{1.0, 1.0}, 1e6, 1) ==
          doctest::Approx(1.6486).epsilon(1e-4));
    CHECK(f_inverse(kC2, 1e20, 1) / f_inverse_asymptotic(PowerLawAtZero{1.0, 1.0}, 1e20, 1) <
          1.25);
  }
  SUBCASE("power law: defined only in the monotone range") {
    CHECK(f_domain_start(kC1, 1) == 0.0);
    CHECK(f_domain_start(kC2, 1) == doctest::Approx(std::exp(2.0 / 3.0)));
    CHECK(oracle::error_code_of([] { f(kC2, 1.5, 1); }) == ErrorCode::kInvalidArgument);
    CHECK(oracle::error_code_of([] { f_inverse(kC2, 1.0, 1); }) == ErrorCode::kInvalidArgument);
    CHECK(oracle::error_code_of([] { f(kC1, 0.0, 1); }) == ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("property: f_inverse round-trips f") {
  for (int d = 1; d <= 3; ++d) {
    for (const auto& tag : {kC1, kC2, ConditionTag{PowerLawAtZero{2.0, 0.5}}}) {
      const double start = f_domain_start(tag, d);
      for (double x : {1.5, 3.0, 10.0, 1e3, 1e6}) {
        const double t = start > 0.0 ? start * x : x;
        const double y = f(tag, t, d);
        CHECK(std::abs(f_inverse(tag, y, d) / t - 1.0) <= 1e-8);
        CHECK(std::abs(f(tag, f_inverse(tag, y, d), d) / y - 1.0) <= 1e-8);
      }
    }
  }
}

TEST_CASE("property: f is increasing on its domain") {
  for (int d = 1; d <= 3; ++d) {
    const double start = f_domain_start(kC2, d);
    double prev = 0.0;
    for (double t = start * 1.0001; t < 1e8; t *= 1.3) {
      const double v = f(kC2, t, d);
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("eig_normalizer") {
  CHECK(eig_normalizer(kC1, 100, 1) ==
        doctest::Approx(std::pow(2.0 * std::abs(std::log(0.7)) / std::log(100.0), 2.0)));
  CHECK(eig_normalizer(kC1, 100, 1) == doctest::Approx(0.02399).epsilon(1e-3));
  const double l = std::log(1e4);
  CHECK(eig_normalizer(kC2, 10000, 1) ==
        doctest::Approx(std::pow(4.0 * std::log(l) / l, 2.0)).epsilon(1e-14));
  for (int k = 2; k <= 6; ++k) {
    const auto n = static_cast<std::int64_t>(std::llround(std::exp(k)));
    const double scaled = eig_normalizer(kC1, n, 1) * std::log(static_cast<double>(n)) *
                          std::log(static_cast<double>(n));
    CHECK(scaled == doctest::Approx(4.0 * std::log(0.7) * std::log(0.7)).epsilon(1e-12));
  }
  CHECK(oracle::error_code_of([] { eig_normalizer(kC2, 2, 1); }) == ErrorCode::kInvalidArgument);
  CHECK(eig_normalizer(kC1, 2, 1) > 0.0);
}
