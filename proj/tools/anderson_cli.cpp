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

// Command-line front end: eig, landscape, yn, experiment, constants, verify.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "anderson/error.hpp"
#include "anderson/extremes.hpp"
#include "anderson/harness.hpp"
#include "anderson/json_io.hpp"
#include "anderson/landscape.hpp"
#include "anderson/operator.hpp"
#include "anderson/potential.hpp"
#include "anderson/scales.hpp"
#include "anderson/verify.hpp"

using nlohmann::json;
namespace an = anderson;

namespace {

struct CommonArgs {
  std::string spec = "bernoulli:0.3";
  int d = 1;
  std::int64_t n = 100;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_seed) {
  cmd->add_option("--spec", a.spec, "Potential law: bernoulli:P, uniform01, pointmass:V")
      ->capture_default_str();
  cmd->add_option("--d", a.d, "Dimension")->capture_default_str();
  cmd->add_option("--n", a.n, "Box radius n of [-n,n]^d")->capture_default_str();
  if (with_seed) {
    cmd->add_option("--seed", a.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--trial", a.trial, "Trial index")->capture_default_str();
  }
}

an::PotentialField sample(const CommonArgs& a) {
  const auto spec = an::parse_distribution(a.spec);
  return an::sample_potential(spec, an::make_box(a.n, a.d), a.seed, a.trial);
}

json cmd_eig(const CommonArgs& a) {
  const auto field = sample(a);
  const auto res = an::principal_eigpair(an::assemble(field.domain, field));
  return {{"lambda", res.lambda}, {"residual", res.residual}, {"iterations", res.iterations}};
}

json cmd_landscape(const CommonArgs& a, const std::string& csv_path) {
  const auto field = sample(a);
  const auto op = an::assemble(field.domain, field);
  const auto land = an::compute_landscape(op);
  const double lambda = an::principal_eigpair(op).lambda;
  if (csv_path == "-") {
    an::write_site_csv(field.domain, land.values, std::cout);
  } else if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    an::require(out.good(), an::ErrorCode::kInvalidArgument, "cannot open CSV output");
    an::write_site_csv(field.domain, land.values, out);
  }
  return {{"sup_norm", land.sup_norm},
          {"argmax", an::point_to_json(land.argmax)},
          {"lambda", lambda},
          {"product", lambda * land.sup_norm}};
}

json cmd_yn(const CommonArgs& a) {
  const auto field = sample(a);
  const auto spec = an::parse_distribution(a.spec);
  const double eps = an::epsilon_n(an::classify(spec), a.n, a.d);
  const double yn = an::y_n(spec, a.n, a.d);
  json out = {{"n", a.n}, {"epsilon", eps}, {"y_n", yn}};
  try {
    const auto ball = an::largest_clear_ball(field, eps);
    out["Y"] = ball.radius;
    out["center"] = an::point_to_json(ball.center);
    out["ratio"] = static_cast<double>(ball.radius) / yn;
  } catch (const an::Error& e) {
    if (e.code() != an::ErrorCode::kNoBall) throw;
    out["Y"] = 0;
    out["center"] = nullptr;
    out["ratio"] = 0.0;
  }
  return out;
}

json cmd_constants(const CommonArgs& a) {
  const auto spec = an::parse_distribution(a.spec);
  const auto tag = an::classify(spec);
  const int d = a.d;
  json out = {
      {"spec", an::to_string(spec)},
      {"d", d},
      {"n", a.n},
      {"omega", an::omega(d)},
      {"mu", an::mu(d)},
      {"conjecture_constant", an::conjecture_constant(d)},
      {"naive_constant", an::naive_constant(d)},
      {"epsilon_n", an::epsilon_n(tag, a.n, d)},
      {"y_n", an::y_n(spec, a.n, d)},
      {"h_tilde", an::h_tilde(tag, d)},
      {"chi", an::chi(tag, d)},
      {"f_domain_start", an::f_domain_start(tag, d)},
  };
  if (std::holds_alternative<an::AtomAtZero>(tag)) {
    out["condition"] = {{"kind", "atom_at_zero"}, {"F0", std::get<an::AtomAtZero>(tag).f0}};
  } else {
    const auto& p = std::get<an::PowerLawAtZero>(tag);
    out["condition"] = {{"kind", "power_law"}, {"c", p.c}, {"eta", p.eta}};
  }
  if (a.n >= 3 || std::holds_alternative<an::AtomAtZero>(tag)) {
    out["eig_normalizer"] = an::eig_normalizer(tag, a.n, d);
  }
  return out;
}

std::vector<std::int64_t> parse_n_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      an::require(used == item.size(), an::ErrorCode::kParse, "bad n list");
    } catch (const std::logic_error&) {
      an::fail(an::ErrorCode::kParse, "cannot parse n list '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

json verify_to_json(const an::VerifyReport& r) {
  return {{"suite", r.suite},
          {"passed", r.passed},
          {"instances", r.instances},
          {"failures", r.failures},
          {"extremes", r.metrics}};
}

void print_error(const std::string& code, const std::string& message) {
  std::cout << an::dump_json({{"error", code}, {"message", message}}) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal eigenvalues and landscape functions of the Anderson model"};
  app.require_subcommand(1);

  CommonArgs common;

  auto* eig = app.add_subcommand("eig", "Principal eigenvalue on a sampled box");
  add_common(eig, common, true);

  std::string csv_path;
  auto* land = app.add_subcommand("landscape", "Landscape function on a sampled box");
  add_common(land, common, true);
  land->add_option("--csv", csv_path, "Write landscape values as CSV ('-' for stdout)");

  auto* yn = app.add_subcommand("yn", "Largest low-potential ball versus y_n");
  add_common(yn, common, true);

  auto* constants = app.add_subcommand("constants", "Scaling constants as JSON");
  add_common(constants, common, false);

  an::ExperimentConfig cfg;
  std::string kind = "fig2", n_list = "100", out_dir = "out", t_grid_text;
  auto* exp = app.add_subcommand("experiment", "Seeded Monte Carlo experiment");
  exp->add_option("--kind", kind, "fig1 | fig2 | ids | yratio | evlf_scan")->capture_default_str();
  exp->add_option("--spec", common.spec, "Potential law")->capture_default_str();
  exp->add_option("--d", cfg.d, "Dimension")->capture_default_str();
  exp->add_option("--n", n_list, "Comma-separated box radii")->capture_default_str();
  exp->add_option("--trials", cfg.trials, "Trials per n")->capture_default_str();
  exp->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  exp->add_option("--bins", cfg.bins, "Histogram bins")->capture_default_str();
  exp->add_option("--tol", cfg.tol, "Eigen tolerance")->capture_default_str();
  exp->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)")
      ->capture_default_str();
  exp->add_option("--t-grid", t_grid_text, "IDS grid 'start:stop:count'");
  exp->add_option("--out", out_dir, "Output directory")->capture_default_str();

  std::string suite;
  an::VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Randomized inequality and identity checks");
  verify->add_option("--suite", suite, "gri | green-bound | evlf | semigroup | detpath | ball-limits")
      ->required();
  verify->add_option("--seed", vopts.seed, "RNG seed")->capture_default_str();
  verify->add_option("--instances", vopts.instances, "Override the instance count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("parse_error", e.what());
    return 2;
  }

  try {
    json out;
    if (*eig) {
      out = cmd_eig(common);
    } else if (*land) {
      out = cmd_landscape(common, csv_path);
    } else if (*yn) {
      out = cmd_yn(common);
    } else if (*constants) {
      out = cmd_constants(common);
    } else if (*exp) {
      cfg.kind = an::parse_experiment_kind(kind);
      cfg.spec = an::parse_distribution(common.spec);
      cfg.n_list = parse_n_list(n_list);
      if (cfg.kind == an::ExperimentKind::kIds) {
        double lo = 0.0, hi = 4.0 * cfg.d + 1.0;
        int count = 51;
        if (!t_grid_text.empty()) {
          char c1 = 0, c2 = 0;
          std::istringstream in(t_grid_text);
          in >> lo >> c1 >> hi >> c2 >> count;
          an::require(in && c1 == ':' && c2 == ':' && count >= 1, an::ErrorCode::kParse,
                      "t grid must look like start:stop:count");
        }
        std::vector<double> grid;
        for (int i = 0; i < count; ++i) {
          grid.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
        }
        const auto res = an::estimate_ids(cfg, grid);
        an::write_ids(res, cfg.trials, out_dir);
        json items = json::array();
        for (const auto& r : res) items.push_back({{"n", r.n}, {"t", r.t_grid}, {"ids", r.ids}});
        out = {{"kind", "ids"}, {"out", out_dir}, {"results", items}};
      } else {
        const auto res = an::run_experiment(cfg);
        an::write_experiment(res, out_dir);
        json items = json::array();
        for (const auto& r : res) items.push_back(an::summary_to_json(r));
        out = {{"kind", an::to_string(cfg.kind)}, {"out", out_dir}, {"results", items}};
      }
    } else if (*verify) {
      const auto report = an::run_verify_suite(suite, vopts);
      std::cout << an::dump_json(verify_to_json(report)) << '\n';
      return report.passed ? 0 : 1;
    }
    std::cout << an::dump_json(out) << '\n';
  } catch (const an::ConvergenceError& e) {
    std::cout << an::dump_json({{"error", std::string(an::to_string(e.code()))},
                                {"message", e.what()},
                                {"residual", e.residual()},
                                {"iterations", e.iterations()}})
              << '\n';
    return 1;
  } catch (const an::Error& e) {
    print_error(std::string(an::to_string(e.code())), e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 1;
  }
  return 0;
}
