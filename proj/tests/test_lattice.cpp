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
#include <random>
#include <set>

#include "doctest.h"
#include "json.hpp"

#include "anderson/json_io.hpp"
#include "anderson/lattice.hpp"
#include "anderson/verify.hpp"
#include "oracles.hpp"

using namespace anderson;

namespace {

std::vector<LatticePoint> pts(std::initializer_list<LatticePoint> l) { return {l}; }

}  // namespace

TEST_CASE("make_box enumerates the cube in lexicographic order") {
  const auto b0 = make_box(0, 1);
  CHECK(b0.size() == 1);
  CHECK(b0[0] == LatticePoint{0});

  const auto b2 = make_box(2, 1);
  REQUIRE(b2.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(b2[i] == LatticePoint{static_cast<Coord>(i) - 2});
  CHECK(b2.is_path());

  const auto sq = make_box(1, 2);
  REQUIRE(sq.size() == 9);
  CHECK(sq[0] == LatticePoint{-1, -1});
  CHECK(sq[1] == LatticePoint{-1, 0});
  CHECK(sq[8] == LatticePoint{1, 1});
  CHECK(std::is_sorted(sq.points().begin(), sq.points().end()));
  CHECK_FALSE(sq.is_path());

  CHECK(make_box(3, 3).size() == 343);
}

TEST_CASE("make_interval") {
  CHECK(make_interval(1, 1).size() == 1);
  const auto i13 = make_interval(1, 3);
  REQUIRE(i13.size() == 3);
  CHECK(i13[2] == LatticePoint{3});
  for (Coord n : {0, 1, 2, 7}) CHECK(make_interval(-n, n) == make_box(n, 1));
  CHECK(oracle::error_code_of([] { make_interval(3, 1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("make_ball uses the strict Euclidean inequality") {
  CHECK(make_ball(LatticePoint{0}, 1.0) ==
        Domain::from_points(1, pts({LatticePoint{0}})));
  CHECK(make_ball(LatticePoint{0}, 2.0) == make_interval(-1, 1));
  // |(±1, ±1)|² = 2 < 2.25, so the diagonal sites belong to the open ball.
  CHECK(make_ball(LatticePoint{0, 0}, 1.5) == make_box(1, 2));
  CHECK(make_ball(LatticePoint{0, 0}, 1.4) ==
        Domain::from_points(2, pts({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}})));
  CHECK(make_ball(LatticePoint{10}, 3.0) == make_interval(8, 12));

  SUBCASE("clipping") {
    const auto box = make_box(2, 1);
    CHECK(make_ball(LatticePoint{2}, 3.0, &box) == make_interval(0, 2));
    const auto far = make_interval(100, 101);
    CHECK(oracle::error_code_of([&] { make_ball(LatticePoint{0}, 2.0, &far); }) ==
          ErrorCode::kEmptyDomain);
    const auto sq = make_box(1, 2);
    CHECK(oracle::error_code_of([&] { make_ball(LatticePoint{0}, 2.0, &sq); }) ==
          ErrorCode::kDimensionMismatch);
  }
  SUBCASE("invalid radius") {
    CHECK(oracle::error_code_of([] { make_ball(LatticePoint{0}, 0.0); }) ==
          ErrorCode::kInvalidArgument);
    CHECK(oracle::error_code_of([] { make_ball(LatticePoint{0}, -1.0); }) ==
          ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("make_ball agrees with enumeration over the bounding cube") {
  for (double r : {0.5, 1.0, 1.2, 1.5, 2.0, 2.3, 3.0, 4.7}) {
    std::vector<LatticePoint> expect;
    for (Coord a = -5; a <= 5; ++a) {
      for (Coord b = -5; b <= 5; ++b) {
        if (static_cast<double>(a * a + b * b) < r * r) expect.push_back({a, b});
      }
    }
    CHECK(make_ball(LatticePoint{0, 0}, r) == Domain::from_points(2, expect));
  }
}

TEST_CASE("make_ball is symmetric under sign flips and coordinate swaps") {
  for (int r = 1; r <= 6; ++r) {
    const auto ball = make_ball(LatticePoint{3, -2}, r);
    for (const auto& p : ball.points()) {
      const Coord a = p[0] - 3, b = p[1] + 2;
      for (auto [u, v] : {std::pair{-a, b}, {a, -b}, {b, a}, {-b, -a}}) {
        CHECK(ball.contains(LatticePoint{3 + u, -2 + v}));
      }
    }
  }
}

TEST_CASE("Domain construction rejects bad input and sorts") {
  const auto dom = Domain::from_points(1, pts({{3}, {1}, {2}}));
  CHECK(dom == make_interval(1, 3));
  CHECK(dom.is_path());
  CHECK_FALSE(Domain::from_points(1, pts({{1}, {3}})).is_path());

  CHECK(oracle::error_code_of([] { Domain::from_points(1, {}); }) == ErrorCode::kEmptyDomain);
  CHECK(oracle::error_code_of([] { Domain::from_points(1, pts({{1}, {1}})); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(oracle::error_code_of([] { Domain::from_points(2, pts({{1}})); }) ==
        ErrorCode::kDimensionMismatch);
  CHECK(oracle::error_code_of([] { Domain::from_points(0, pts({{}})); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("index lookup") {
  const auto sq = make_box(2, 2);
  for (std::size_t i = 0; i < sq.size(); ++i) CHECK(sq.index_of(sq[i]) == i);
  CHECK_FALSE(sq.index_of(LatticePoint{3, 0}).has_value());
  CHECK_FALSE(sq.index_of(LatticePoint{0}).has_value());
  CHECK(oracle::error_code_of([&] { sq.require_index(LatticePoint{5, 5}); }) ==
        ErrorCode::kNotInDomain);
  const auto line = make_interval(-4, 9);
  CHECK(line.index_of(LatticePoint{-4}) == 0u);
  CHECK(line.index_of(LatticePoint{9}) == 13u);
  CHECK_FALSE(line.index_of(LatticePoint{10}).has_value());
}

TEST_CASE("neighbors") {
  const auto line = make_box(2, 1);
  CHECK(neighbors(line, LatticePoint{0}) == pts({{-1}, {1}}));
  CHECK(neighbors(line, LatticePoint{2}) == pts({{1}}));
  CHECK(neighbors(make_box(1, 2), LatticePoint{1, 1}) == pts({{0, 1}, {1, 0}}));
  CHECK(neighbors(make_box(1, 2), LatticePoint{0, 0}).size() == 4);
}

TEST_CASE("boundary_edges and outer_boundary") {
  const auto single = Domain::from_points(1, pts({{0}}));
  CHECK(boundary_edges(single) ==
        std::vector<EdgePair>{{LatticePoint{0}, LatticePoint{-1}}, {LatticePoint{0}, LatticePoint{1}}});
  CHECK(outer_boundary(single) == Domain::from_points(1, pts({{-1}, {1}})));

  const auto i13 = make_interval(1, 3);
  CHECK(boundary_edges(i13) ==
        std::vector<EdgePair>{{LatticePoint{1}, LatticePoint{0}}, {LatticePoint{3}, LatticePoint{4}}});
  CHECK(outer_boundary(i13) == Domain::from_points(1, pts({{0}, {4}})));

  const auto sq = make_box(1, 2);
  CHECK(boundary_edges(sq).size() == 12);
  const auto ring = outer_boundary(sq);
  // Each of the 12 outer edges ends at a distinct site: 3 per side.
  CHECK(ring.size() == 12);
  CHECK_FALSE(ring.contains(LatticePoint{2, 2}));
  CHECK(ring.contains(LatticePoint{2, 1}));
}

TEST_CASE("property: neighbor counts and boundary projections") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const auto dom = random_subdomain(rng, 200);
    for (const auto& x : dom.points()) {
      CHECK(neighbors(dom, x).size() <= static_cast<std::size_t>(2 * dom.dim()));
    }
    std::set<LatticePoint> inner, outer;
    for (const auto& e : boundary_edges(dom)) {
      inner.insert(e.inner);
      outer.insert(e.outer);
      CHECK(squared_distance(e.inner, e.outer) == 1);
    }
    for (const auto& p : inner) CHECK(dom.contains(p));
    const auto ob = outer_boundary(dom);
    CHECK(std::vector<LatticePoint>(outer.begin(), outer.end()) ==
          std::vector<LatticePoint>(ob.points().begin(), ob.points().end()));
    const auto edges = boundary_edges(dom);
    CHECK(std::is_sorted(edges.begin(), edges.end()));
  }
}

TEST_CASE("subset and box radius") {
  CHECK(make_interval(-1, 1).is_subset_of(make_box(2, 1)));
  CHECK_FALSE(make_box(2, 1).is_subset_of(make_interval(-1, 1)));
  CHECK(box_radius(make_box(4, 2)) == 4);
  CHECK_FALSE(box_radius(make_interval(1, 3)).has_value());
}

TEST_CASE("unit steps are ordered lexicographically after displacement") {
  for (int d = 1; d <= 4; ++d) {
    const auto steps = unit_steps(d);
    REQUIRE(steps.size() == static_cast<std::size_t>(2 * d));
    CHECK(std::is_sorted(steps.begin(), steps.end()));
  }
}

TEST_CASE("domain JSON round trip") {
  const auto dom = Domain::from_points(2, pts({{0, 1}, {-3, 2}}));
  const auto j = domain_to_json(dom);
  CHECK(j["d"] == 2);
  CHECK(j["points"][0] == nlohmann::json::array({-3, 2}));
  CHECK(domain_from_json(j) == dom);
}
