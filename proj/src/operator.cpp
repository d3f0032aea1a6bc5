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

#include "anderson/operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>

#include <Eigen/Dense>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "anderson/error.hpp"

namespace anderson {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void check_length(const SchrodingerOperator& op, std::size_t n, const char* what) {
  require(n == op.size(), ErrorCode::kDimensionMismatch,
          fmt::format("{} has length {} but the operator has {} sites", what, n, op.size()));
}

// LDLᵀ of a tridiagonal SPD matrix with unit off-diagonal -1.
class PathFactor {
 public:
  explicit PathFactor(std::span<const double> diag) : pivots_(diag.size()) {
    pivots_[0] = diag[0];
    for (std::size_t i = 1; i < diag.size(); ++i) pivots_[i] = diag[i] - 1.0 / pivots_[i - 1];
  }

  void solve(std::span<const double> rhs, std::span<double> x) const {
    const std::size_t n = pivots_.size();
    double carry = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double y = rhs[i] + carry;
      carry = y / pivots_[i];
      x[i] = y;
    }
    double next = 0.0;
    for (std::size_t i = n; i-- > 0;) {
      next = (x[i] + next) / pivots_[i];
      x[i] = next;
    }
  }

 private:
  std::vector<double> pivots_;
};

// Jacobi-preconditioned CG. `x` holds the initial guess on entry.
// Returns (converged, iterations, residual norm).
struct CgOutcome {
  bool converged;
  int iterations;
  double residual;
};

CgOutcome conjugate_gradient(const SchrodingerOperator& op, std::span<const double> rhs,
                             std::span<double> x, double tol, int max_iter) {
  const std::size_t n = op.size();
  const auto diag = op.diag();
  const double target = tol * norm2(rhs);

  std::vector<double> r(n), z(n), p(n), q(n);
  op.apply_into(x, q);
  for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - q[i];
  double rnorm = norm2(r);
  if (rnorm <= target) return {true, 0, rnorm};

  for (std::size_t i = 0; i < n; ++i) z[i] = r[i] / diag[i];
  p = z;
  double rz = dot(r, z);
  for (int it = 1; it <= max_iter; ++it) {
    op.apply_into(p, q);
    const double alpha = rz / dot(p, q);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * q[i];
    }
    rnorm = norm2(r);
    if (rnorm <= target) {
      // Recurrence drift: confirm with a true residual.
      op.apply_into(x, q);
      for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - q[i];
      rnorm = norm2(r);
      if (rnorm <= target) return {true, it, rnorm};
    }
    for (std::size_t i = 0; i < n; ++i) z[i] = r[i] / diag[i];
    const double rz_next = dot(r, z);
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  return {false, max_iter, rnorm};
}

int default_cap(const SchrodingerOperator& op, int max_iter) {
  return max_iter > 0 ? max_iter : static_cast<int>(std::max<std::size_t>(10 * op.size(), 50));
}

Eigen::MatrixXd dense_matrix(const SchrodingerOperator& op) {
  const auto n = static_cast<Eigen::Index>(op.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = op.diag()[static_cast<std::size_t>(i)];
    for (std::size_t j : op.neighbors_of(static_cast<std::size_t>(i))) {
      m(i, static_cast<Eigen::Index>(j)) = -1.0;
    }
  }
  return m;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense_eigensystem(const SchrodingerOperator& op,
                                                                 bool vectors) {
  const int options = vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  if (op.is_path()) {
    const auto n = static_cast<Eigen::Index>(op.size());
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(op.diag().data(), n);
    Eigen::VectorXd sub = Eigen::VectorXd::Constant(std::max<Eigen::Index>(n - 1, 0), -1.0);
    solver.computeFromTridiagonal(diag, sub, options);
  } else {
    solver.compute(dense_matrix(op), options);
  }
  require(solver.info() == Eigen::Success, ErrorCode::kNotConverged,
          "dense symmetric eigensolver failed");
  return solver;
}

}  // namespace

void SchrodingerOperator::apply_into(std::span<const double> v, std::span<double> out) const {
  const std::size_t n = diag_.size();
  if (is_path()) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = diag_[i] * v[i];
      if (i > 0) s -= v[i - 1];
      if (i + 1 < n) s -= v[i + 1];
      out[i] = s;
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag_[i] * v[i];
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) s -= v[cols_[k]];
    out[i] = s;
  }
}

SchrodingerOperator assemble(const Domain& dom, std::span<const double> w) {
  require(w.size() == dom.size(), ErrorCode::kDimensionMismatch,
          fmt::format("potential has {} values for {} sites", w.size(), dom.size()));
  SchrodingerOperator op(dom);
  const double base = 2.0 * dom.dim();
  op.diag_.resize(dom.size());
  op.row_ptr_.assign(dom.size() + 1, 0);
  const auto steps = unit_steps(dom.dim());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    require(w[i] >= 0.0, ErrorCode::kInvalidArgument, "potential must be nonnegative");
    op.diag_[i] = base + w[i];
    for (const auto& step : steps) {
      LatticePoint y = dom[i];
      for (std::size_t k = 0; k < y.coords.size(); ++k) y.coords[k] += step.coords[k];
      if (auto j = dom.index_of(y)) op.cols_.push_back(*j);
    }
    op.row_ptr_[i + 1] = op.cols_.size();
  }
  return op;
}

SchrodingerOperator assemble(const Domain& dom, const PotentialField& w) {
  require(w.domain == dom, ErrorCode::kDimensionMismatch,
          "potential field is defined on a different domain");
  return assemble(dom, std::span<const double>(w.values));
}

std::vector<double> apply(const SchrodingerOperator& op, std::span<const double> v) {
  check_length(op, v.size(), "vector");
  std::vector<double> out(v.size());
  op.apply_into(v, out);
  return out;
}

void write_coordinate_list(const SchrodingerOperator& op, std::ostream& out) {
  for (std::size_t i = 0; i < op.size(); ++i) {
    bool diag_written = false;
    for (std::size_t j : op.neighbors_of(i)) {
      if (!diag_written && j > i) {
        fmt::print(out, "{} {} {:.17g}\n", i, i, op.diag()[i]);
        diag_written = true;
      }
      fmt::print(out, "{} {} {:.17g}\n", i, j, -1.0);
    }
    if (!diag_written) fmt::print(out, "{} {} {:.17g}\n", i, i, op.diag()[i]);
  }
}

std::vector<double> solve_spd(const SchrodingerOperator& op, std::span<const double> rhs,
                              double tol, int max_iter) {
  require(tol > 0.0, ErrorCode::kInvalidArgument, "tolerance must be positive");
  check_length(op, rhs.size(), "right-hand side");
  std::vector<double> x(rhs.size(), 0.0);
  if (op.is_path()) {
    PathFactor(op.diag()).solve(rhs, x);
    return x;
  }
  const auto outcome = conjugate_gradient(op, rhs, x, tol, default_cap(op, max_iter));
  if (!outcome.converged) {
    throw ConvergenceError(
        fmt::format("conjugate gradients stopped at residual {:.3e} after {} iterations",
                    outcome.residual, outcome.iterations),
        outcome.residual, outcome.iterations, std::move(x));
  }
  return x;
}

namespace {

// Connected components of the neighbor graph, each as ascending site indices.
std::vector<std::vector<std::size_t>> components(const SchrodingerOperator& op) {
  const std::size_t n = op.size();
  if (op.is_path()) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return {std::move(all)};
  }
  std::vector<int> seen(n, 0);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      comp.push_back(i);
      for (std::size_t j : op.neighbors_of(i)) {
        if (!seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

SchrodingerOperator restrict_operator(const SchrodingerOperator& op,
                                      const std::vector<std::size_t>& sites) {
  const Domain& dom = op.domain();
  std::vector<LatticePoint> pts;
  std::vector<double> w;
  pts.reserve(sites.size());
  w.reserve(sites.size());
  const double base = 2.0 * dom.dim();
  for (std::size_t i : sites) {
    pts.push_back(dom[i]);
    w.push_back(std::max(0.0, op.diag()[i] - base));
  }
  const auto sub = Domain::from_points(dom.dim(), std::move(pts));
  return assemble(sub, w);
}

// Block inverse iteration with Rayleigh-Ritz on a connected operator. The
// block makes the rate λ₁/λ_{b+1} rather than λ₁/λ₂, which matters when
// the ground state is nearly degenerate (well-separated low-potential wells).
SpectralResult block_inverse_iteration(const SchrodingerOperator& op, double tol, int cap) {
  using Eigen::Index;
  const std::size_t n = op.size();
  const Index b = static_cast<Index>(std::min<std::size_t>(4, n));
  const double inner_tol = std::max(1e-13, tol * 1e-3);

  std::optional<PathFactor> factor;
  if (op.is_path()) factor.emplace(op.diag());

  // Start from the normalized all-ones vector plus smooth deterministic modes.
  Eigen::MatrixXd v(static_cast<Index>(n), b);
  for (Index i = 0; i < static_cast<Index>(n); ++i) {
    v(i, 0) = 1.0;
    for (Index k = 1; k < b; ++k) {
      v(i, k) = std::cos(static_cast<double>(k) * (static_cast<double>(i) + 0.5) * 0.7548776662);
    }
  }
  Eigen::VectorXd theta = Eigen::VectorXd::Constant(b, 2.0 * op.domain().dim());

  Eigen::MatrixXd x(static_cast<Index>(n), b), hq(static_cast<Index>(n), b);
  SpectralResult best;
  best.residual = std::numeric_limits<double>::infinity();

  for (int it = 1; it <= cap; ++it) {
    for (Index k = 0; k < b; ++k) {
      std::span<const double> rhs(v.col(k).data(), n);
      std::span<double> out(x.col(k).data(), n);
      if (factor) {
        factor->solve(rhs, out);
      } else {
        for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i] / theta(k);
        const auto outcome = conjugate_gradient(op, rhs, out, inner_tol, default_cap(op, 0));
        if (!outcome.converged) {
          throw ConvergenceError("inner solve of inverse iteration did not converge",
                                 best.residual, it, best.vector);
        }
      }
    }
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(x.rows(), b);
    for (Index k = 0; k < b; ++k) {
      op.apply_into(std::span<const double>(q.col(k).data(), n),
                    std::span<double>(hq.col(k).data(), n));
    }
    Eigen::MatrixXd t = q.transpose() * hq;
    t = 0.5 * (t + t.transpose()).eval();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz(t);
    theta = ritz.eigenvalues();
    v = q * ritz.eigenvectors();
    const Eigen::VectorXd r = hq * ritz.eigenvectors().col(0) - theta(0) * v.col(0);
    const double residual = r.norm();
    if (residual < best.residual) {
      best.lambda = theta(0);
      best.vector.assign(v.col(0).data(), v.col(0).data() + n);
      best.residual = residual;
      best.iterations = it;
    }
    if (residual <= tol * theta(0)) return best;
  }
  throw ConvergenceError(
      fmt::format("inverse iteration stopped at residual {:.3e} after {} iterations",
                  best.residual, cap),
      best.residual, cap, best.vector);
}

}  // namespace

SpectralResult principal_eigpair(const SchrodingerOperator& op, double tol, int max_iter) {
  require(tol > 0.0, ErrorCode::kInvalidArgument, "tolerance must be positive");
  const std::size_t n = op.size();
  const int cap = default_cap(op, max_iter);

  // The operator is block diagonal over connected components; the ground
  // state lives on whichever component has the smallest eigenvalue.
  const auto comps = components(op);
  SpectralResult best;
  best.lambda = std::numeric_limits<double>::infinity();
  for (const auto& comp : comps) {
    SpectralResult local;
    try {
      local = comps.size() == 1 ? block_inverse_iteration(op, tol, cap)
                                : block_inverse_iteration(restrict_operator(op, comp), tol, cap);
    } catch (const ConvergenceError& e) {
      std::vector<double> embedded(n, 0.0);
      for (std::size_t k = 0; k < comp.size() && k < e.best_iterate().size(); ++k) {
        embedded[comp[k]] = e.best_iterate()[k];
      }
      throw ConvergenceError(e.what(), e.residual(), e.iterations(), std::move(embedded));
    }
    if (local.lambda < best.lambda) {
      best.lambda = local.lambda;
      best.residual = local.residual;
      best.iterations = local.iterations;
      best.vector.assign(n, 0.0);
      for (std::size_t k = 0; k < comp.size(); ++k) best.vector[comp[k]] = local.vector[k];
    }
  }
  if (std::accumulate(best.vector.begin(), best.vector.end(), 0.0) < 0.0) {
    for (double& e : best.vector) e = -e;
  }
  return best;
}

std::vector<double> full_spectrum(const SchrodingerOperator& op, std::size_t size_cap) {
  require(op.size() <= size_cap, ErrorCode::kSizeCapExceeded,
          fmt::format("{} sites exceed the dense spectrum cap of {}", op.size(), size_cap));
  const auto solver = dense_eigensystem(op, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double det_path(int k, std::span<const double> w) {
  require(k >= 1, ErrorCode::kInvalidArgument, "path length must be positive");
  require(w.empty() || w.size() == static_cast<std::size_t>(k), ErrorCode::kDimensionMismatch,
          "potential length differs from the path length");
  double prev = 1.0;  // determinant of the empty matrix
  double cur = 2.0 + (w.empty() ? 0.0 : w[0]);
  for (int j = 1; j < k; ++j) {
    const double next = (2.0 + (w.empty() ? 0.0 : w[static_cast<std::size_t>(j)])) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

boost::multiprecision::cpp_int det_path_exact(int k, std::span<const std::int64_t> w) {
  using boost::multiprecision::cpp_int;
  require(k >= 1, ErrorCode::kInvalidArgument, "path length must be positive");
  require(w.empty() || w.size() == static_cast<std::size_t>(k), ErrorCode::kDimensionMismatch,
          "potential length differs from the path length");
  cpp_int prev = 1;
  cpp_int cur = 2 + (w.empty() ? 0 : w[0]);
  for (int j = 1; j < k; ++j) {
    cpp_int next = (2 + (w.empty() ? 0 : w[static_cast<std::size_t>(j)])) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

std::vector<double> semigroup_with(const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es,
                                   const Eigen::VectorXd& coeffs, double t) {
  const Eigen::VectorXd damped =
      (coeffs.array() * (-t * es.eigenvalues().array()).exp()).matrix();
  const Eigen::VectorXd out = es.eigenvectors() * damped;
  return {out.data(), out.data() + out.size()};
}

}  // namespace

std::vector<double> semigroup_apply(const SchrodingerOperator& op, double t,
                                    std::span<const double> v, std::size_t dense_cap) {
  require(t >= 0.0, ErrorCode::kInvalidArgument, "semigroup time must be nonnegative");
  check_length(op, v.size(), "vector");
  require(op.size() <= dense_cap, ErrorCode::kSizeCapExceeded,
          fmt::format("{} sites exceed the dense cap of {}", op.size(), dense_cap));
  if (t == 0.0) return {v.begin(), v.end()};
  const auto es = dense_eigensystem(op, true);
  const Eigen::VectorXd coeffs =
      es.eigenvectors().transpose() *
      Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
  return semigroup_with(es, coeffs, t);
}

SemigroupBoundReport semigroup_bound_ratio(const SchrodingerOperator& op,
                                           std::span<const double> t_grid,
                                           std::size_t dense_cap) {
  require(!t_grid.empty(), ErrorCode::kInvalidArgument, "time grid is empty");
  require(op.size() <= dense_cap, ErrorCode::kSizeCapExceeded,
          fmt::format("{} sites exceed the dense cap of {}", op.size(), dense_cap));
  std::vector<double> grid(t_grid.begin(), t_grid.end());
  for (double t : grid) {
    require(t >= 0.0, ErrorCode::kInvalidArgument, "semigroup time must be nonnegative");
  }
  std::sort(grid.begin(), grid.end());

  SemigroupBoundReport report;
  report.lambda = principal_eigpair(op).lambda;
  const auto es = dense_eigensystem(op, true);
  const Eigen::VectorXd coeffs =
      es.eigenvectors().transpose() * Eigen::VectorXd::Ones(static_cast<Eigen::Index>(op.size()));
  const double half_d = op.domain().dim() / 2.0;

  double previous = std::numeric_limits<double>::infinity();
  for (double t : grid) {
    double sup = 1.0;
    if (t > 0.0) {
      const auto k = semigroup_with(es, coeffs, t);
      sup = 0.0;
      for (double e : k) sup = std::max(sup, std::abs(e));
    }
    const double lt = report.lambda * t;
    const double ratio = sup / ((1.0 + std::pow(lt, half_d)) * std::exp(-lt));
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.t_at_max = t;
    }
    report.max_sup_norm = std::max(report.max_sup_norm, sup);
    // Equal times may differ by eigensolver rounding only.
    if (sup > previous * (1.0 + 1e-12) + 1e-15) report.nonincreasing = false;
    previous = sup;
  }
  return report;
}

}  // namespace anderson
