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

// The Dirichlet Schrödinger operator -Δ_A + W on a finite domain A ⊂ Z^d.
//
// The diagonal is 2d + W(x) at every site, whatever the number of in-domain
// neighbors; each in-domain nearest-neighbor pair contributes -1. The
// resulting matrix is symmetric positive definite, so every solve below is
// an SPD solve: an LDLᵀ sweep on d = 1 paths and Jacobi-preconditioned
// conjugate gradients otherwise.

#ifndef ANDERSON_OPERATOR_HPP
#define ANDERSON_OPERATOR_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <concepts>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "anderson/lattice.hpp"
#include "anderson/potential.hpp"

namespace anderson {

class SchrodingerOperator {
 public:
  const Domain& domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return diag_.size(); }
  std::span<const double> diag() const noexcept { return diag_; }

  /// Neighbor indices of site i, ascending.
  std::span<const std::size_t> neighbors_of(std::size_t i) const {
    return {cols_.data() + row_ptr_[i], row_ptr_[i + 1] - row_ptr_[i]};
  }

  /// Uses the tridiagonal fast path.
  bool is_path() const noexcept { return domain_.is_path(); }

  /// out = H v. Lengths must equal size().
  void apply_into(std::span<const double> v, std::span<double> out) const;

  friend SchrodingerOperator assemble(const Domain& dom, std::span<const double> w);

 private:
  Domain domain_;
  std::vector<double> diag_;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> cols_;

  SchrodingerOperator(Domain dom) : domain_(std::move(dom)) {}
};

/// -Δ_A + W with W given per site in domain order.
SchrodingerOperator assemble(const Domain& dom, std::span<const double> w);

/// Throws kDimensionMismatch when the field lives on a different domain.
SchrodingerOperator assemble(const Domain& dom, const PotentialField& w);

std::vector<double> apply(const SchrodingerOperator& op, std::span<const double> v);

/// Constrained forwarding overload. It has the same shape as std::apply but
/// is more constrained, so unqualified calls with a std::vector argument are
/// not captured by std::apply through argument-dependent lookup.
template <class Op, class V>
  requires std::same_as<std::remove_cvref_t<Op>, SchrodingerOperator> &&
           std::convertible_to<V&&, std::span<const double>>
std::vector<double> apply(Op&& op, V&& v) {
  return apply(static_cast<const SchrodingerOperator&>(op),
               std::span<const double>(std::forward<V>(v)));
}

/// Coordinate-list rows "i j value", 0-based, sorted by (i, j), diagonal included.
void write_coordinate_list(const SchrodingerOperator& op, std::ostream& out);

inline constexpr double kDefaultSolveTol = 1e-10;
inline constexpr double kDefaultEigenTol = 1e-9;
inline constexpr std::size_t kDefaultSpectrumCap = 3000;
inline constexpr std::size_t kDefaultDenseCap = 2000;

/// x with ‖H x - rhs‖₂ ≤ tol ‖rhs‖₂. `max_iter` = 0 means 10 · size.
/// Throws ConvergenceError carrying the best iterate on failure.
std::vector<double> solve_spd(const SchrodingerOperator& op, std::span<const double> rhs,
                              double tol = kDefaultSolveTol, int max_iter = 0);

struct SpectralResult {
  double lambda = 0.0;
  std::vector<double> vector;  ///< unit ℓ² norm, nonnegative sum
  double residual = 0.0;       ///< ‖(H - λ) v‖₂
  int iterations = 0;
};

/// Smallest eigenvalue by shift-free block inverse iteration (block of four,
/// seeded with the all-ones vector) with Rayleigh-Ritz, run separately on each
/// connected component; stops once ‖(H - λ)v‖₂ ≤ tol · λ.
SpectralResult principal_eigpair(const SchrodingerOperator& op, double tol = kDefaultEigenTol,
                                 int max_iter = 0);

/// All eigenvalues, ascending, with multiplicity.
std::vector<double> full_spectrum(const SchrodingerOperator& op,
                                  std::size_t size_cap = kDefaultSpectrumCap);

/// det(-Δ_{⟦1,k⟧} + W) by the three-term recurrence; W empty means zero.
double det_path(int k, std::span<const double> w = {});

/// Exact integer version of det_path.
boost::multiprecision::cpp_int det_path_exact(int k, std::span<const std::int64_t> w = {});

/// exp(-t H) v through a dense eigendecomposition.
std::vector<double> semigroup_apply(const SchrodingerOperator& op, double t,
                                    std::span<const double> v,
                                    std::size_t dense_cap = kDefaultDenseCap);

struct SemigroupBoundReport {
  double max_ratio = 0.0;     ///< max_t ‖e^{-tH}1‖∞ / ((1 + (λt)^{d/2}) e^{-λt})
  double t_at_max = 0.0;
  double max_sup_norm = 0.0;  ///< max_t ‖e^{-tH}1‖∞
  bool nonincreasing = true;  ///< sup norm nonincreasing along the sorted grid
  double lambda = 0.0;
};

SemigroupBoundReport semigroup_bound_ratio(const SchrodingerOperator& op,
                                           std::span<const double> t_grid,
                                           std::size_t dense_cap = kDefaultDenseCap);

}  // namespace anderson

#endif  // ANDERSON_OPERATOR_HPP
