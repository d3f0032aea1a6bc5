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

#include "anderson/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "anderson/error.hpp"

namespace anderson {

namespace {

// Solves H x = rhs and verifies the residual before clamping negatives.
std::vector<double> checked_nonneg_solve(const SchrodingerOperator& op,
                                         std::span<const double> rhs, double tol) {
  auto x = solve_spd(op, rhs, tol);
  const auto hx = anderson::apply(op, x);
  double r2 = 0.0, b2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    r2 += (hx[i] - rhs[i]) * (hx[i] - rhs[i]);
    b2 += rhs[i] * rhs[i];
  }
  // Direct path solves are exact up to rounding, which can exceed very small
  // requested tolerances; allow a rounding floor scaled by the system size.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                       std::sqrt(static_cast<double>(x.size()));
  if (std::sqrt(r2) > std::max(tol, floor) * std::sqrt(b2)) {
    throw ConvergenceError("solution failed its residual check", std::sqrt(r2), 0, x);
  }
  for (double& v : x) v = std::max(v, 0.0);
  return x;
}

}  // namespace

LandscapeResult compute_landscape(const SchrodingerOperator& op, double tol) {
  require(tol > 0.0, ErrorCode::kInvalidArgument, "tolerance must be positive");
  const std::vector<double> ones(op.size(), 1.0);
  LandscapeResult result;
  result.values = checked_nonneg_solve(op, ones, tol);
  const auto it = std::max_element(result.values.begin(), result.values.end());
  result.sup_norm = *it;
  result.argmax = op.domain()[static_cast<std::size_t>(it - result.values.begin())];
  return result;
}

LandscapeResult compute_landscape(const Domain& dom, const PotentialField& w, double tol) {
  return compute_landscape(assemble(dom, w), tol);
}

GreenColumn green_column(const SchrodingerOperator& op, const LatticePoint& y, double tol) {
  require(tol > 0.0, ErrorCode::kInvalidArgument, "tolerance must be positive");
  const std::size_t j = op.domain().require_index(y);
  std::vector<double> delta(op.size(), 0.0);
  delta[j] = 1.0;
  return GreenColumn{y, checked_nonneg_solve(op, delta, tol)};
}

GreenColumn green_column(const Domain& dom, const PotentialField& w, const LatticePoint& y,
                         double tol) {
  return green_column(assemble(dom, w), y, tol);
}

double gri_defect(const Domain& sub, const Domain& ambient, const PotentialField& w,
                  double tol) {
  require(sub.is_subset_of(ambient), ErrorCode::kNotInDomain,
          "subdomain is not contained in the ambient domain");
  require(w.domain == ambient, ErrorCode::kDimensionMismatch,
          "potential must be defined on the ambient domain");

  const auto big = compute_landscape(ambient, w, tol);
  const auto sub_op = assemble(sub, restrict_field(w, sub));
  const auto small = compute_landscape(sub_op, tol);

  // One Green column per distinct inner boundary site; G_{A'}(x,i) = G_{A'}(i,x).
  std::map<LatticePoint, std::vector<double>> columns;
  std::vector<double> coupling(sub.size(), 0.0);
  for (const auto& edge : boundary_edges(sub)) {
    const auto j = ambient.index_of(edge.outer);
    if (!j) continue;  // L_A vanishes outside A
    auto [it, inserted] = columns.try_emplace(edge.inner);
    if (inserted) it->second = green_column(sub_op, edge.inner, tol).values;
    const double lj = big.values[*j];
    for (std::size_t x = 0; x < sub.size(); ++x) coupling[x] += it->second[x] * lj;
  }

  double defect = 0.0;
  for (std::size_t x = 0; x < sub.size(); ++x) {
    const double la = big.values[ambient.require_index(sub[x])];
    defect = std::max(defect, std::abs(la - small.values[x] - coupling[x]));
  }
  return defect;
}

GreenBoundRecord green_bound_d1(std::span<const double> w, Coord y, double tol) {
  const auto n = static_cast<Coord>(w.size());
  require(n >= 1, ErrorCode::kInvalidArgument, "potential on ⟦1,n⟧ needs n ≥ 1");
  require(y >= 1 && y <= n, ErrorCode::kNotInDomain,
          fmt::format("y = {} outside ⟦1,{}⟧", y, n));
  const auto dom = make_interval(1, n);
  const auto op = assemble(dom, w);
  const auto col = green_column(op, LatticePoint{y}, tol);
  const auto at = [&](Coord k) { return w[static_cast<std::size_t>(k - 1)]; };

  GreenBoundRecord rec;
  rec.g1y = col.values.front();
  rec.gyn = col.values.back();

  double s1 = 0.0;
  for (Coord j = 0; j <= y - 1; ++j) s1 += static_cast<double>(y - j) * at(y - j);
  double s2 = 0.0;
  for (Coord j = 0; j <= n - y; ++j) s2 += static_cast<double>(n - y + 1 - j) * at(y + j);
  constexpr double inf = std::numeric_limits<double>::infinity();
  rec.bound1 = s1 > 0.0 ? 1.0 / s1 : inf;
  rec.bound2 = s2 > 0.0 ? 1.0 / s2 : inf;
  return rec;
}

void write_site_csv(const Domain& dom, std::span<const double> values, std::ostream& out) {
  require(values.size() == dom.size(), ErrorCode::kDimensionMismatch,
          "value count differs from the domain size");
  for (int k = 1; k <= dom.dim(); ++k) fmt::print(out, "x{},", k);
  fmt::print(out, "value\n");
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (Coord c : dom[i].coords) fmt::print(out, "{},", c);
    fmt::print(out, "{:.17g}\n", values[i]);
  }
}

}  // namespace anderson
