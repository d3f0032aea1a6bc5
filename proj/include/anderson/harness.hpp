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

// Seeded Monte Carlo experiments on boxes Λ_n.
//
// Every trial draws its potential from the counter-based site hash keyed on
// (seed, trial), so results do not depend on how trials are scheduled across
// workers. Records are stored by trial index and reduced in that order.

#ifndef ANDERSON_HARNESS_HPP
#define ANDERSON_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anderson/lattice.hpp"
#include "anderson/potential.hpp"

namespace anderson {

enum class ExperimentKind { kFig1, kFig2, kIds, kYRatio, kEvlfScan };

ExperimentKind parse_experiment_kind(std::string_view text);
std::string_view to_string(ExperimentKind kind);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kFig2;
  DistributionSpec spec = Bernoulli{0.3};
  int d = 1;
  std::vector<std::int64_t> n_list;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  int bins = 60;
  double tol = 1e-9;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Replaces the classification of `spec` in eigenvalue normalizers; lets a
  /// deterministic potential be scaled like a random one.
  std::optional<ConditionTag> tag_override;
  /// Replaces Λ_n as the trial domain (n still enters normalizers).
  std::optional<Domain> domain_override;
};

/// Throws kInvalidArgument for inconsistent configurations.
void validate(const ExperimentConfig& cfg);

struct TrialRecord {
  std::int64_t trial = 0;
  std::int64_t n = 0;
  double lambda = 0.0;
  double sup_l = 0.0;
  double statistic = 0.0;
  bool ok = true;
};

struct Histogram {
  std::vector<double> edges;  ///< bins + 1 equal-width edges over [min, max]
  std::vector<std::int64_t> counts;
};

struct SummaryStats {
  std::int64_t count = 0;
  double mean = 0.0;
  double std = 0.0;  ///< unbiased; 0 for a single sample
  double min = 0.0;
  double max = 0.0;
  Histogram histogram;
};

/// Sums in input order, so identical inputs give bit-identical output.
SummaryStats summarize(std::span<const double> samples, int bins);

struct ExperimentResult {
  std::int64_t n = 0;
  std::vector<TrialRecord> records;  ///< successful trials, by trial index
  std::int64_t failed = 0;
  SummaryStats stats;
};

/// λ_n / eig_normalizer − μ_d per trial.
std::vector<ExperimentResult> run_fig1(const ExperimentConfig& cfg);

/// λ_n ‖L_n‖∞ − μ_d/(2d) per trial.
std::vector<ExperimentResult> run_fig2(const ExperimentConfig& cfg);

/// Y_n / y_n per trial, Y_n from the largest ball with V ≤ ε_n.
std::vector<ExperimentResult> run_yratio(const ExperimentConfig& cfg);

/// Raw product λ_n ‖L_n‖∞ per trial.
std::vector<ExperimentResult> run_evlf_scan(const ExperimentConfig& cfg);

/// Dispatches on cfg.kind; the IDS kind is not a per-trial statistic and is
/// rejected here.
std::vector<ExperimentResult> run_experiment(const ExperimentConfig& cfg);

struct IdsResult {
  std::int64_t n = 0;
  std::vector<double> t_grid;
  std::vector<double> ids;  ///< trial-averaged fraction of eigenvalues ≤ t
};

std::vector<IdsResult> estimate_ids(const ExperimentConfig& cfg, std::span<const double> t_grid,
                                    std::size_t size_cap = 3000);

/// Runs body(i) for i in [0, count) on `workers` threads. Exceptions from the
/// body propagate after all workers finish.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& body);

/// Writes trials_n<N>.csv and summary_n<N>.json per result into `dir`.
void write_experiment(const std::vector<ExperimentResult>& results,
                      const std::filesystem::path& dir);

/// Writes ids_n<N>.csv ("t,ids") and ids_n<N>.json per result into `dir`.
void write_ids(const std::vector<IdsResult>& results, std::int64_t trials,
               const std::filesystem::path& dir);

}  // namespace anderson

#endif  // ANDERSON_HARNESS_HPP
