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

#include "anderson/potential.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "anderson/error.hpp"

namespace anderson {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double parse_double(std::string_view s) {
  double value = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    fail(ErrorCode::kParse, fmt::format("cannot parse number '{}'", s));
  }
  return value;
}

}  // namespace

void validate(const DistributionSpec& spec) {
  std::visit(overloaded{
                 [](const Bernoulli& b) {
                   require(b.p > 0.0 && b.p < 1.0, ErrorCode::kInvalidArgument,
                           "bernoulli parameter must lie in (0, 1)");
                 },
                 [](const Uniform01&) {},
                 [](const PointMass& m) {
                   require(m.v >= 0.0 && std::isfinite(m.v), ErrorCode::kInvalidArgument,
                           "point mass must be nonnegative and finite");
                 },
             },
             spec);
}

DistributionSpec parse_distribution(std::string_view text) {
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  DistributionSpec spec;
  if (name == "bernoulli" && !arg.empty()) {
    spec = Bernoulli{parse_double(arg)};
  } else if (name == "uniform01" && colon == std::string_view::npos) {
    spec = Uniform01{};
  } else if (name == "pointmass" && !arg.empty()) {
    spec = PointMass{parse_double(arg)};
  } else {
    fail(ErrorCode::kParse, fmt::format("unknown distribution '{}'", text));
  }
  validate(spec);
  return spec;
}

std::string to_string(const DistributionSpec& spec) {
  return std::visit(overloaded{
                        [](const Bernoulli& b) { return fmt::format("bernoulli:{}", b.p); },
                        [](const Uniform01&) { return std::string("uniform01"); },
                        [](const PointMass& m) { return fmt::format("pointmass:{}", m.v); },
                    },
                    spec);
}

PotentialField make_field(const Domain& dom, std::vector<double> values) {
  require(values.size() == dom.size(), ErrorCode::kDimensionMismatch,
          fmt::format("{} potential values for a domain of {} sites", values.size(), dom.size()));
  for (double v : values) {
    require(v >= 0.0 && std::isfinite(v), ErrorCode::kInvalidArgument,
            "potential values must be finite and nonnegative");
  }
  return PotentialField{dom, std::move(values), std::nullopt, 0, 0};
}

PotentialField restrict_field(const PotentialField& field, const Domain& sub) {
  std::vector<double> values;
  values.reserve(sub.size());
  for (const auto& x : sub.points()) {
    auto idx = field.domain.index_of(x);
    require(idx.has_value(), ErrorCode::kNotInDomain,
            "restriction target is not contained in the field's domain");
    values.push_back(field.values[*idx]);
  }
  return PotentialField{sub, std::move(values), field.spec, field.seed, field.trial};
}

double site_uniform(std::uint64_t seed, std::uint64_t trial, const LatticePoint& x) {
  std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc909ULL);
  h = mix64(h ^ trial);
  for (Coord c : x.coords) h = mix64(h ^ static_cast<std::uint64_t>(c));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

PotentialField sample_potential(const DistributionSpec& spec, const Domain& dom,
                                std::uint64_t seed, std::uint64_t trial) {
  validate(spec);
  std::vector<double> values(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    const double u = site_uniform(seed, trial, dom[i]);
    values[i] = std::visit(overloaded{
                               [u](const Bernoulli& b) { return u < b.p ? 1.0 : 0.0; },
                               [u](const Uniform01&) { return u; },
                               [](const PointMass& m) { return m.v; },
                           },
                           spec);
  }
  return PotentialField{dom, std::move(values), spec, seed, trial};
}

double cdf(const DistributionSpec& spec, double t) {
  return std::visit(overloaded{
                        [t](const Bernoulli& b) {
                          if (t < 0.0) return 0.0;
                          return t < 1.0 ? 1.0 - b.p : 1.0;
                        },
                        [t](const Uniform01&) { return std::clamp(t, 0.0, 1.0); },
                        [t](const PointMass& m) { return t < m.v ? 0.0 : 1.0; },
                    },
                    spec);
}

double cgf(const DistributionSpec& spec, double t) {
  require(t > 0.0, ErrorCode::kInvalidArgument, "cgf argument must be positive");
  return std::visit(overloaded{
                        // ln(1 - p + p e^{-t}) = log1p(p (e^{-t} - 1))
                        [t](const Bernoulli& b) { return std::log1p(b.p * std::expm1(-t)); },
                        [t](const Uniform01&) {
                          if (t < 1e-6) return -t / 2.0 + t * t / 24.0;
                          return std::log(-std::expm1(-t)) - std::log(t);
                        },
                        [t](const PointMass& m) { return -t * m.v; },
                    },
                    spec);
}

ConditionTag classify(const DistributionSpec& spec) {
  validate(spec);
  return std::visit(overloaded{
                        [](const Bernoulli& b) -> ConditionTag { return AtomAtZero{1.0 - b.p}; },
                        [](const Uniform01&) -> ConditionTag { return PowerLawAtZero{1.0, 1.0}; },
                        [](const PointMass&) -> ConditionTag {
                          fail(ErrorCode::kUnclassifiable,
                               "a point mass has neither an atom in (0,1) at zero nor a power law");
                        },
                    },
                    spec);
}

}  // namespace anderson
