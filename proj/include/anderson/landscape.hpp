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

// Landscape function L = (-Δ_A + W)^{-1} 1_A and Green function columns
// G(·, y) = (-Δ_A + W)^{-1} δ_y, both taken as zero outside A.

#ifndef ANDERSON_LANDSCAPE_HPP
#define ANDERSON_LANDSCAPE_HPP

#include <iosfwd>
#include <span>
#include <vector>

#include "anderson/lattice.hpp"
#include "anderson/operator.hpp"
#include "anderson/potential.hpp"

namespace anderson {

struct LandscapeResult {
  std::vector<double> values;
  double sup_norm = 0.0;
  LatticePoint argmax;  ///< lexicographically smallest maximizer
};

struct GreenColumn {
  LatticePoint source;
  std::vector<double> values;
};

/// Tiny negative solver noise is clamped to zero only after the residual
/// ‖H L - 1‖₂ ≤ tol ‖1‖₂ has been confirmed.
LandscapeResult compute_landscape(const Domain& dom, const PotentialField& w,
                                  double tol = kDefaultSolveTol);
LandscapeResult compute_landscape(const SchrodingerOperator& op, double tol = kDefaultSolveTol);

GreenColumn green_column(const Domain& dom, const PotentialField& w, const LatticePoint& y,
                         double tol = kDefaultSolveTol);
GreenColumn green_column(const SchrodingerOperator& op, const LatticePoint& y,
                         double tol = kDefaultSolveTol);

/// Largest violation over x ∈ sub of
///   L_A(x) = L_{A'}(x) + Σ_{(i,j)∈∂A'} G_{A'}(x,i) L_A(j),
/// with L_A(j) = 0 for j outside the ambient domain A. `w` lives on `ambient`.
double gri_defect(const Domain& sub, const Domain& ambient, const PotentialField& w,
                  double tol = 1e-13);

struct GreenBoundRecord {
  double g1y = 0.0;     ///< G(1, y)
  double bound1 = 0.0;  ///< (Σ_{j=0}^{y-1} (y-j) W(y-j))^{-1}, +inf if the sum vanishes
  double gyn = 0.0;     ///< G(y, n)
  double bound2 = 0.0;  ///< (Σ_{j=0}^{n-y} (n-y+1-j) W(y+j))^{-1}, +inf if the sum vanishes
};

/// Green bounds on ⟦1,n⟧ with w[k-1] = W(k), n = w.size(), 1 ≤ y ≤ n.
GreenBoundRecord green_bound_d1(std::span<const double> w, Coord y, double tol = 1e-13);

/// CSV rows "x_1,...,x_d,value" in site order; values at 17 significant digits.
void write_site_csv(const Domain& dom, std::span<const double> values, std::ostream& out);

}  // namespace anderson

#endif  // ANDERSON_LANDSCAPE_HPP
