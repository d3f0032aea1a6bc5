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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "doctest.h"

#include "anderson/landscape.hpp"
#include "anderson/operator.hpp"
#include "anderson/verify.hpp"
#include "oracles.hpp"

using namespace anderson;

namespace {

PotentialField zero_field(const Domain& dom) {
  return make_field(dom, std::vector<double>(dom.size(), 0.0));
}

double sup(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

}  // namespace

TEST_CASE("compute_landscape closed forms") {
  const auto single = compute_landscape(make_box(0, 1), zero_field(make_box(0, 1)));
  CHECK(single.values == std::vector<double>{0.5});
  CHECK(single.sup_norm == 0.5);

  const auto i3 = make_interval(1, 3);
  const auto l3 = compute_landscape(i3, zero_field(i3));
  CHECK(l3.values[0] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(l3.values[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(l3.values[2] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(l3.argmax == LatticePoint{2});

  const auto i199 = make_interval(1, 199);
  const auto l199 = compute_landscape(i199, zero_field(i199));
  CHECK(l199.sup_norm == doctest::Approx(5000.0).epsilon(1e-12));
  CHECK(l199.argmax == LatticePoint{100});
  for (std::int64_t j = 1; j <= 199; ++j) {
    CHECK(l199.values[static_cast<std::size_t>(j - 1)] ==
          doctest::Approx(oracle::interval_landscape(j, 199)).epsilon(1e-12));
  }

  SUBCASE("ties break to the lexicographically smallest site") {
    const auto i4 = make_interval(1, 4);
    CHECK(compute_landscape(i4, zero_field(i4)).argmax == LatticePoint{2});
    const auto sq = make_box(1, 2);
    std::vector<double> w(9, 1.0);
    w[4] = 0.0;
    CHECK(compute_landscape(sq, make_field(sq, w)).argmax == LatticePoint{0, 0});
  }
  SUBCASE("field on another domain") {
    CHECK(oracle::error_code_of([&] { compute_landscape(i3, zero_field(make_interval(1, 4))); }) ==
          ErrorCode::kDimensionMismatch);
  }
}

TEST_CASE("green_column closed forms") {
  const auto single = make_box(0, 1);
  CHECK(green_column(single, zero_field(single), LatticePoint{0}).values ==
        std::vector<double>{0.5});

  const std::int64_t n = 12;
  const auto dom = make_interval(1, n);
  for (std::int64_t y = 1; y <= n; ++y) {
    const auto col = green_column(dom, zero_field(dom), LatticePoint{y});
    CHECK(col.source == LatticePoint{y});
    for (std::int64_t x = 1; x <= n; ++x) {
      CHECK(col.values[static_cast<std::size_t>(x - 1)] ==
            doctest::Approx(oracle::interval_green(x, y, n)).epsilon(1e-12));
    }
  }
  CHECK(oracle::error_code_of([&] { green_column(dom, zero_field(dom), LatticePoint{0}); }) ==
        ErrorCode::kNotInDomain);
}

TEST_CASE("property: landscape and Green function against dense inversion") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 25; ++k) {
    const auto dom = random_subdomain(rng, 70);
    const auto field = random_potential(rng, dom);
    const auto op = assemble(dom, field);
    const auto inv = oracle::inverse(oracle::dense_operator(dom, field.values));
    const auto land = compute_landscape(op);

    std::vector<double> row_sums(dom.size(), 0.0);
    double gmax = 0.0;
    std::vector<std::vector<double>> g(dom.size());
    for (std::size_t y = 0; y < dom.size(); ++y) {
      g[y] = green_column(op, dom[y]).values;
      for (std::size_t x = 0; x < dom.size(); ++x) {
        CHECK(g[y][x] >= 0.0);
        CHECK(g[y][x] == doctest::Approx(inv[x][y]).epsilon(1e-9));
        row_sums[x] += g[y][x];
        gmax = std::max(gmax, g[y][x]);
      }
    }
    // Symmetry of the Green function.
    for (std::size_t x = 0; x < dom.size(); ++x) {
      for (std::size_t y = 0; y < x; ++y) CHECK(std::abs(g[y][x] - g[x][y]) <= 1e-10 * gmax);
    }
    // Linearity and the ℓ∞ operator-norm identity.
    for (std::size_t x = 0; x < dom.size(); ++x) {
      CHECK(row_sums[x] == doctest::Approx(land.values[x]).epsilon(1e-9));
    }
    CHECK(sup(row_sums) == doctest::Approx(land.sup_norm).epsilon(1e-9));
    CHECK(land.sup_norm == sup(land.values));
    for (double v : land.values) CHECK(v >= 0.0);
  }
}

TEST_CASE("property: monotonicity in the potential and the domain") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 40; ++k) {
    const auto dom = random_subdomain(rng, 250);
    const auto field = random_potential(rng, dom);
    // Tight solves so that solver error stays well below the 1e-10 slack.
    constexpr double kTol = 1e-14;
    const auto big = compute_landscape(dom, field, kTol).values;

    std::vector<double> lower = field.values;
    for (auto& e : lower) e *= std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto lifted = compute_landscape(dom, make_field(dom, lower), kTol).values;
    for (std::size_t i = 0; i < dom.size(); ++i) CHECK(big[i] <= lifted[i] + 1e-10);

    const auto sub = random_subset(rng, dom);
    const auto small = compute_landscape(sub, restrict_field(field, sub), kTol).values;
    for (std::size_t i = 0; i < sub.size(); ++i) {
      CHECK(small[i] <= big[dom.require_index(sub[i])] + 1e-10);
    }
  }
}

TEST_CASE("property: eigenvalue-landscape product floor") {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 100; ++k) {
    const auto dom = random_subdomain(rng, 300);
    const auto op = assemble(dom, random_potential(rng, dom));
    CHECK(principal_eigpair(op).lambda * compute_landscape(op).sup_norm >= 1.0 - 1e-9);
  }
  for (int d = 1; d <= 3; ++d) {
    for (double v : {0.0, 2.5}) {
      const auto op = assemble(make_box(0, d), std::vector<double>{v});
      CHECK(std::abs(principal_eigpair(op).lambda * compute_landscape(op).sup_norm - 1.0) <=
            1e-12);
    }
  }
}

TEST_CASE("gri_defect") {
  const auto amb = make_interval(-1, 1);
  CHECK(gri_defect(make_box(0, 1), amb, zero_field(amb)) <= 1e-10);
  CHECK(gri_defect(amb, amb, zero_field(amb)) <= 1e-12);

  std::mt19937_64 rng(53);
  const auto box = make_box(4, 2);
  for (int k = 0; k < 20; ++k) {
    const auto sub = random_subset(rng, box);
    const auto w = sample_potential(Bernoulli{0.4}, box, rng(), 0);
    CHECK(gri_defect(sub, box, w) <= 1e-9 * compute_landscape(box, w).sup_norm);
  }
  CHECK(oracle::error_code_of([&] { gri_defect(make_interval(3, 5), amb, zero_field(amb)); }) ==
        ErrorCode::kNotInDomain);
}

TEST_CASE("green_bound_d1") {
  const std::vector<double> zero(5, 0.0);
  const auto vac = green_bound_d1(zero, 3);
  CHECK(std::isinf(vac.bound1));
  CHECK(std::isinf(vac.bound2));

  const std::vector<double> w{0, 1, 0, 0, 0};
  const auto rec = green_bound_d1(w, 2);
  CHECK(rec.bound1 == doctest::Approx(0.5));
  const auto inv = oracle::inverse(oracle::dense_operator(make_interval(1, 5), w));
  CHECK(rec.g1y == doctest::Approx(inv[0][1]).epsilon(1e-12));
  CHECK(rec.gyn == doctest::Approx(inv[1][4]).epsilon(1e-12));
  CHECK(rec.g1y <= rec.bound1);
  // Σ_{j=0}^{3} (4-j) W(2+j) = 4·1.
  CHECK(rec.bound2 == doctest::Approx(0.25));
  CHECK(rec.gyn <= rec.bound2);

  std::mt19937_64 rng(59);
  for (int k = 0; k < 50; ++k) {
    const auto f = sample_potential(Uniform01{}, make_interval(1, 50), rng(), 0);
    for (Coord y = 1; y <= 50; ++y) {
      const auto r = green_bound_d1(f.values, y);
      CHECK(r.bound1 - r.g1y >= -1e-12);
      CHECK(r.bound2 - r.gyn >= -1e-12);
    }
  }
  CHECK(oracle::error_code_of([&] { green_bound_d1(w, 0); }) == ErrorCode::kNotInDomain);
  CHECK(oracle::error_code_of([&] { green_bound_d1(w, 6); }) == ErrorCode::kNotInDomain);
  CHECK(oracle::error_code_of([&] { green_bound_d1({}, 1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("write_site_csv") {
  std::ostringstream out;
  const auto dom = Domain::from_points(2, {{0, 1}, {-1, 2}});
  write_site_csv(dom, std::vector<double>{0.25, 1.0 / 3.0}, out);
  CHECK(out.str() == "x1,x2,value\n-1,2,0.25\n0,1,0.33333333333333331\n");
}
