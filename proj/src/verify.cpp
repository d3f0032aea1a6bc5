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

#include "anderson/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "anderson/error.hpp"
#include "anderson/landscape.hpp"
#include "anderson/operator.hpp"
#include "anderson/scales.hpp"

namespace anderson {

namespace {

std::size_t count_or(const VerifyOptions& opts, std::size_t fallback) {
  return opts.instances > 0 ? opts.instances : fallback;
}

void record_max(VerifyReport& r, const std::string& key, double value) {
  auto [it, inserted] = r.metrics.try_emplace(key, value);
  if (!inserted) it->second = std::max(it->second, value);
}

void record_min(VerifyReport& r, const std::string& key, double value) {
  auto [it, inserted] = r.metrics.try_emplace(key, value);
  if (!inserted) it->second = std::min(it->second, value);
}

void check(VerifyReport& r, bool ok) {
  if (!ok) {
    ++r.failures;
    r.passed = false;
  }
}

}  // namespace

Domain random_subdomain(std::mt19937_64& rng, std::size_t max_sites) {
  const int d = std::uniform_int_distribution<int>(1, 2)(rng);
  Coord n_max = 0;
  while (true) {
    const auto side = static_cast<std::size_t>(2 * (n_max + 1) + 1);
    if ((d == 1 ? side : side * side) > max_sites) break;
    ++n_max;
  }
  const Coord n = std::uniform_int_distribution<Coord>(0, n_max)(rng);
  const auto box = make_box(n, d);
  const double keep = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
  std::bernoulli_distribution coin(keep);
  std::vector<LatticePoint> pts;
  for (const auto& p : box.points()) {
    if (coin(rng)) pts.push_back(p);
  }
  if (pts.empty()) pts.push_back(box[box.size() / 2]);
  return Domain::from_points(d, std::move(pts));
}

Domain random_subset(std::mt19937_64& rng, const Domain& ambient) {
  const double keep = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
  std::bernoulli_distribution coin(keep);
  std::vector<LatticePoint> pts;
  for (const auto& p : ambient.points()) {
    if (coin(rng)) pts.push_back(p);
  }
  if (pts.empty()) {
    pts.push_back(ambient[std::uniform_int_distribution<std::size_t>(0, ambient.size() - 1)(rng)]);
  }
  return Domain::from_points(ambient.dim(), std::move(pts));
}

PotentialField random_potential(std::mt19937_64& rng, const Domain& dom) {
  DistributionSpec spec = Uniform01{};
  if (std::bernoulli_distribution(0.5)(rng)) {
    spec = Bernoulli{std::uniform_real_distribution<double>(0.05, 0.95)(rng)};
  }
  return sample_potential(spec, dom, rng(), rng());
}

VerifyReport verify_gri(const VerifyOptions& opts) {
  VerifyReport r{"gri", true, 0, 0, {}};
  std::mt19937_64 rng(opts.seed);
  r.metrics["max_relative_defect"] = 0.0;
  for (std::size_t k = 0; k < count_or(opts, 100); ++k) {
    const auto ambient = random_subdomain(rng, 300);
    const auto sub = random_subset(rng, ambient);
    const auto w = random_potential(rng, ambient);
    const double sup = compute_landscape(ambient, w).sup_norm;
    const double rel = gri_defect(sub, ambient, w) / sup;
    record_max(r, "max_relative_defect", rel);
    check(r, rel <= kGriRelativeTol);
    ++r.instances;
  }
  return r;
}

VerifyReport verify_green_bound(const VerifyOptions& opts) {
  VerifyReport r{"green-bound", true, 0, 0, {}};
  std::mt19937_64 rng(opts.seed);
  const auto dom = make_interval(1, 50);
  std::size_t vacuous = 0;
  for (std::size_t k = 0; k < count_or(opts, 1000); ++k) {
    const auto w = sample_potential(Uniform01{}, dom, rng(), k);
    for (Coord y = 1; y <= 50; ++y) {
      const auto rec = green_bound_d1(w.values, y);
      for (auto [g, b] : {std::pair{rec.g1y, rec.bound1}, std::pair{rec.gyn, rec.bound2}}) {
        if (!std::isfinite(b)) {
          ++vacuous;
          continue;
        }
        record_min(r, "min_slack", b - g);
        record_min(r, "min_relative_slack", (b - g) / b);
        check(r, b - g >= kGreenBoundSlack);
      }
    }
    ++r.instances;
  }
  r.metrics["vacuous_bounds"] = static_cast<double>(vacuous);
  return r;
}

VerifyReport verify_evlf(const VerifyOptions& opts) {
  VerifyReport r{"evlf", true, 0, 0, {}};
  std::mt19937_64 rng(opts.seed);
  for (std::size_t k = 0; k < count_or(opts, 1000); ++k) {
    const auto dom = random_subdomain(rng, 400);
    const auto w = random_potential(rng, dom);
    const auto op = assemble(dom, w);
    const double product = principal_eigpair(op).lambda * compute_landscape(op).sup_norm;
    const auto suffix = fmt::format("_d{}", dom.dim());
    record_min(r, "min_product" + suffix, product);
    record_max(r, "max_product" + suffix, product);
    check(r, product >= 1.0 - kProductFloorTol);
    ++r.instances;
  }
  // Single sites, with and without potential, in both dimensions.
  double worst = 0.0;
  for (int d = 1; d <= 2; ++d) {
    const auto single = make_box(0, d);
    for (double v : {0.0, 0.37, 5.0}) {
      const auto op = assemble(single, std::vector<double>{v});
      const double product = principal_eigpair(op).lambda * compute_landscape(op).sup_norm;
      worst = std::max(worst, std::abs(product - 1.0));
    }
  }
  r.metrics["single_point_deviation"] = worst;
  check(r, worst <= kSinglePointTol);
  return r;
}

VerifyReport verify_semigroup(const VerifyOptions& opts) {
  VerifyReport r{"semigroup", true, 0, 0, {}};
  std::mt19937_64 rng(opts.seed);
  r.metrics["max_ratio"] = 0.0;
  r.metrics["max_sup_norm"] = 0.0;
  for (std::size_t k = 0; k < count_or(opts, 100); ++k) {
    const auto dom = random_subdomain(rng, 400);
    const auto w = random_potential(rng, dom);
    const auto op = assemble(dom, w);
    const double lambda = principal_eigpair(op).lambda;
    std::vector<double> grid;
    constexpr int kPoints = 81;
    for (int i = 0; i < kPoints; ++i) grid.push_back(10.0 / lambda * i / (kPoints - 1));
    const auto rep = semigroup_bound_ratio(op, grid);
    record_max(r, "max_ratio", rep.max_ratio);
    record_max(r, "max_sup_norm", rep.max_sup_norm);
    check(r, rep.max_ratio <= kSemigroupConstant && rep.max_sup_norm <= 1.0 + 1e-12 &&
                 rep.nonincreasing);
    ++r.instances;
  }
  return r;
}

VerifyReport verify_detpath(const VerifyOptions& opts) {
  VerifyReport r{"detpath", true, 0, 0, {}};
  std::mt19937_64 rng(opts.seed);
  for (int k = 1; k <= 30; ++k) {
    check(r, det_path_exact(k) == k + 1);
    ++r.instances;
  }
  double min_excess = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count_or(opts, 100); ++i) {
    const int k = std::uniform_int_distribution<int>(1, 30)(rng);
    std::vector<std::int64_t> w(static_cast<std::size_t>(k));
    for (auto& v : w) v = std::uniform_int_distribution<std::int64_t>(0, 5)(rng);
    const auto det = det_path_exact(k, w);
    check(r, det >= k + 1);
    min_excess = std::min(min_excess, static_cast<double>(det - (k + 1)));
    ++r.instances;
  }
  r.metrics["min_excess"] = min_excess;
  return r;
}

VerifyReport verify_ball_limits(const VerifyOptions&) {
  VerifyReport r{"ball-limits", true, 0, 0, {}};
  {
    const double radius = 500.0;
    const auto ball = make_ball(LatticePoint{0}, radius);
    const auto op = assemble(ball, std::vector<double>(ball.size(), 0.0));
    const double lambda = principal_eigpair(op).lambda;
    const double dev = std::abs(radius * radius * lambda / mu(1) - 1.0);
    r.metrics["d1_eigen_deviation"] = dev;
    check(r, dev <= kBallLimitTolD1);

    const auto interval = make_interval(1, 2 * 500 - 1);
    const auto land =
        compute_landscape(assemble(interval, std::vector<double>(interval.size(), 0.0)));
    const double l_dev = std::abs(land.sup_norm / (radius * radius / 2.0) - 1.0);
    r.metrics["d1_landscape_relative_deviation"] = l_dev;
    check(r, ball.size() == 999 && l_dev <= 1e-9);
    ++r.instances;
  }
  {
    const double radius = 40.0;
    const auto ball = make_ball(LatticePoint{0, 0}, radius);
    const auto op = assemble(ball, std::vector<double>(ball.size(), 0.0));
    const double lambda = principal_eigpair(op).lambda;
    const double dev = std::abs(radius * radius * lambda / mu(2) - 1.0);
    r.metrics["d2_eigen_deviation"] = dev;
    r.metrics["d2_landscape_ratio"] =
        compute_landscape(op).sup_norm / (radius * radius / 4.0);
    check(r, dev <= kBallLimitTolD2);
    ++r.instances;
  }
  return r;
}

VerifyReport run_verify_suite(std::string_view name, const VerifyOptions& opts) {
  if (name == "gri") return verify_gri(opts);
  if (name == "green-bound") return verify_green_bound(opts);
  if (name == "evlf") return verify_evlf(opts);
  if (name == "semigroup") return verify_semigroup(opts);
  if (name == "detpath") return verify_detpath(opts);
  if (name == "ball-limits") return verify_ball_limits(opts);
  fail(ErrorCode::kParse, fmt::format("unknown verify suite '{}'", name));
}

}  // namespace anderson
