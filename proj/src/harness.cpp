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

#include "anderson/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "anderson/error.hpp"
#include "anderson/extremes.hpp"
#include "anderson/json_io.hpp"
#include "anderson/landscape.hpp"
#include "anderson/operator.hpp"
#include "anderson/scales.hpp"

namespace anderson {

ExperimentKind parse_experiment_kind(std::string_view text) {
  if (text == "fig1") return ExperimentKind::kFig1;
  if (text == "fig2") return ExperimentKind::kFig2;
  if (text == "ids") return ExperimentKind::kIds;
  if (text == "yratio") return ExperimentKind::kYRatio;
  if (text == "evlf_scan" || text == "evlf-scan") return ExperimentKind::kEvlfScan;
  fail(ErrorCode::kParse, fmt::format("unknown experiment kind '{}'", text));
}

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kFig1: return "fig1";
    case ExperimentKind::kFig2: return "fig2";
    case ExperimentKind::kIds: return "ids";
    case ExperimentKind::kYRatio: return "yratio";
    case ExperimentKind::kEvlfScan: return "evlf_scan";
  }
  return "unknown";
}

void validate(const ExperimentConfig& cfg) {
  validate(cfg.spec);
  require(cfg.d >= 1, ErrorCode::kInvalidArgument, "dimension must be at least 1");
  require(!cfg.n_list.empty(), ErrorCode::kInvalidArgument, "n list is empty");
  require(cfg.trials >= 1, ErrorCode::kInvalidArgument, "trials must be at least 1");
  require(cfg.bins >= 1, ErrorCode::kInvalidArgument, "bins must be at least 1");
  require(cfg.tol > 0.0, ErrorCode::kInvalidArgument, "tolerance must be positive");
  for (auto n : cfg.n_list) {
    require(n >= 0, ErrorCode::kInvalidArgument, "box radius must be nonnegative");
  }
  if (cfg.domain_override) {
    require(cfg.domain_override->dim() == cfg.d, ErrorCode::kDimensionMismatch,
            "override domain has the wrong dimension");
  }
}

SummaryStats summarize(std::span<const double> samples, int bins) {
  require(!samples.empty(), ErrorCode::kInvalidArgument, "cannot summarize an empty sample");
  require(bins >= 1, ErrorCode::kInvalidArgument, "bins must be at least 1");
  SummaryStats s;
  s.count = static_cast<std::int64_t>(samples.size());
  s.min = samples[0];
  s.max = samples[0];
  double sum = 0.0;
  for (double x : samples) {
    sum += x;
    s.min = std::min(s.min, x);
    s.max = std::max(s.max, x);
  }
  s.mean = sum / static_cast<double>(s.count);
  if (s.count > 1) {
    double ss = 0.0;
    for (double x : samples) ss += (x - s.mean) * (x - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(s.count - 1));
  }

  auto& h = s.histogram;
  h.edges.resize(static_cast<std::size_t>(bins) + 1);
  const double width = (s.max - s.min) / bins;
  for (int b = 0; b <= bins; ++b) h.edges[static_cast<std::size_t>(b)] = s.min + b * width;
  h.edges.back() = s.max;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double x : samples) {
    int b = width > 0.0 ? static_cast<int>((x - s.min) / width) : 0;
    b = std::clamp(b, 0, bins - 1);
    ++h.counts[static_cast<std::size_t>(b)];
  }
  return s;
}

void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& body) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

using TrialFn = std::function<TrialRecord(const PotentialField&, std::int64_t n)>;

ConditionTag normalizer_tag(const ExperimentConfig& cfg) {
  return cfg.tag_override ? *cfg.tag_override : classify(cfg.spec);
}

std::vector<ExperimentResult> run_trials(const ExperimentConfig& cfg, const TrialFn& trial_fn) {
  validate(cfg);
  std::vector<ExperimentResult> results;
  for (auto n : cfg.n_list) {
    const Domain dom = cfg.domain_override ? *cfg.domain_override : make_box(n, cfg.d);
    std::vector<TrialRecord> records(static_cast<std::size_t>(cfg.trials));
    parallel_for(records.size(), cfg.workers, [&](std::size_t t) {
      const auto field = sample_potential(cfg.spec, dom, cfg.seed, t);
      try {
        records[t] = trial_fn(field, n);
      } catch (const ConvergenceError&) {
        records[t].ok = false;
      }
      records[t].trial = static_cast<std::int64_t>(t);
      records[t].n = n;
    });

    ExperimentResult result;
    result.n = n;
    std::vector<double> stats;
    for (auto& r : records) {
      if (!r.ok) {
        ++result.failed;
        continue;
      }
      stats.push_back(r.statistic);
      result.records.push_back(r);
    }
    require(!stats.empty(), ErrorCode::kNotConverged,
            fmt::format("every trial failed for n = {}", n));
    result.stats = summarize(stats, cfg.bins);
    results.push_back(std::move(result));
  }
  return results;
}

// λ and ‖L‖∞ for one trial.
TrialRecord eigen_and_landscape(const PotentialField& field, double tol, bool need_landscape) {
  const auto op = assemble(field.domain, field);
  TrialRecord r;
  r.lambda = principal_eigpair(op, tol).lambda;
  r.sup_l = need_landscape ? compute_landscape(op).sup_norm
                           : std::numeric_limits<double>::quiet_NaN();
  return r;
}

}  // namespace

std::vector<ExperimentResult> run_fig1(const ExperimentConfig& cfg) {
  const auto tag = normalizer_tag(cfg);
  const double mu_d = mu(cfg.d);
  return run_trials(cfg, [&](const PotentialField& field, std::int64_t n) {
    auto r = eigen_and_landscape(field, cfg.tol, false);
    r.statistic = r.lambda / eig_normalizer(tag, n, cfg.d) - mu_d;
    return r;
  });
}

std::vector<ExperimentResult> run_fig2(const ExperimentConfig& cfg) {
  const double target = conjecture_constant(cfg.d);
  return run_trials(cfg, [&](const PotentialField& field, std::int64_t) {
    auto r = eigen_and_landscape(field, cfg.tol, true);
    r.statistic = r.lambda * r.sup_l - target;
    return r;
  });
}

std::vector<ExperimentResult> run_evlf_scan(const ExperimentConfig& cfg) {
  return run_trials(cfg, [&](const PotentialField& field, std::int64_t) {
    auto r = eigen_and_landscape(field, cfg.tol, true);
    r.statistic = r.lambda * r.sup_l;
    return r;
  });
}

std::vector<ExperimentResult> run_yratio(const ExperimentConfig& cfg) {
  const auto tag = normalizer_tag(cfg);
  return run_trials(cfg, [&](const PotentialField& field, std::int64_t n) {
    const double threshold = epsilon_n(tag, n, cfg.d);
    TrialRecord r;
    r.lambda = std::numeric_limits<double>::quiet_NaN();
    r.sup_l = std::numeric_limits<double>::quiet_NaN();
    try {
      const auto ball = largest_clear_ball(field, threshold);
      r.statistic = static_cast<double>(ball.radius) / y_n(cfg.spec, n, cfg.d);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoBall) throw;
      r.statistic = 0.0;
    }
    return r;
  });
}

std::vector<ExperimentResult> run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
    case ExperimentKind::kFig1: return run_fig1(cfg);
    case ExperimentKind::kFig2: return run_fig2(cfg);
    case ExperimentKind::kYRatio: return run_yratio(cfg);
    case ExperimentKind::kEvlfScan: return run_evlf_scan(cfg);
    case ExperimentKind::kIds: break;
  }
  fail(ErrorCode::kInvalidArgument, "the ids kind is run through estimate_ids");
}

std::vector<IdsResult> estimate_ids(const ExperimentConfig& cfg, std::span<const double> t_grid,
                                    std::size_t size_cap) {
  validate(cfg);
  require(!t_grid.empty(), ErrorCode::kInvalidArgument, "t grid is empty");
  std::vector<double> grid(t_grid.begin(), t_grid.end());
  std::sort(grid.begin(), grid.end());

  std::vector<IdsResult> out;
  for (auto n : cfg.n_list) {
    const Domain dom = cfg.domain_override ? *cfg.domain_override : make_box(n, cfg.d);
    require(dom.size() <= size_cap, ErrorCode::kSizeCapExceeded,
            fmt::format("{} sites exceed the spectrum cap of {}", dom.size(), size_cap));
    // counts[t][k]: eigenvalues ≤ grid[k] in trial t.
    std::vector<std::vector<std::int64_t>> counts(static_cast<std::size_t>(cfg.trials));
    parallel_for(counts.size(), cfg.workers, [&](std::size_t t) {
      const auto field = sample_potential(cfg.spec, dom, cfg.seed, t);
      const auto spectrum = full_spectrum(assemble(dom, field), size_cap);
      auto& c = counts[t];
      c.resize(grid.size());
      for (std::size_t k = 0; k < grid.size(); ++k) {
        c[k] = std::upper_bound(spectrum.begin(), spectrum.end(), grid[k]) - spectrum.begin();
      }
    });

    IdsResult r;
    r.n = n;
    r.t_grid = grid;
    r.ids.assign(grid.size(), 0.0);
    for (const auto& c : counts) {
      for (std::size_t k = 0; k < grid.size(); ++k) r.ids[k] += static_cast<double>(c[k]);
    }
    const double norm = static_cast<double>(cfg.trials) * static_cast<double>(dom.size());
    for (double& v : r.ids) v /= norm;
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream f(path);
  require(f.good(), ErrorCode::kInvalidArgument,
          fmt::format("cannot open '{}' for writing", path.string()));
  return f;
}

}  // namespace

void write_experiment(const std::vector<ExperimentResult>& results,
                      const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& r : results) {
    auto csv = open_output(dir / fmt::format("trials_n{}.csv", r.n));
    csv << "trial,n,lambda,sup_l,statistic\n";
    for (const auto& t : r.records) {
      fmt::print(csv, "{},{},{:.17g},{:.17g},{:.17g}\n", t.trial, t.n, t.lambda, t.sup_l,
                 t.statistic);
    }
    auto js = open_output(dir / fmt::format("summary_n{}.json", r.n));
    js << dump_json(summary_to_json(r), 2) << '\n';
  }
}

void write_ids(const std::vector<IdsResult>& results, std::int64_t trials,
               const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& r : results) {
    auto csv = open_output(dir / fmt::format("ids_n{}.csv", r.n));
    csv << "t,ids\n";
    for (std::size_t k = 0; k < r.t_grid.size(); ++k) {
      fmt::print(csv, "{:.17g},{:.17g}\n", r.t_grid[k], r.ids[k]);
    }
    auto js = open_output(dir / fmt::format("ids_n{}.json", r.n));
    js << dump_json({{"n", r.n}, {"trials", trials}, {"t", r.t_grid}, {"ids", r.ids}}, 2) << '\n';
  }
}

}  // namespace anderson
