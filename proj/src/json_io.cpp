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

#include "anderson/json_io.hpp"

#include <cmath>

#include <fmt/format.h>

#include "anderson/error.hpp"

namespace anderson {

namespace {

void write(const nlohmann::json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int level) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += nlohmann::json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write(e, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? fmt::format("{:.17g}", v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  return out;
}

nlohmann::json point_to_json(const LatticePoint& p) { return p.coords; }

nlohmann::json domain_to_json(const Domain& dom) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : dom.points()) pts.push_back(point_to_json(p));
  return {{"d", dom.dim()}, {"points", std::move(pts)}};
}

Domain domain_from_json(const nlohmann::json& j) {
  try {
    const int d = j.at("d").get<int>();
    std::vector<LatticePoint> pts;
    for (const auto& p : j.at("points")) pts.emplace_back(p.get<std::vector<Coord>>());
    return Domain::from_points(d, std::move(pts));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, fmt::format("malformed domain JSON: {}", e.what()));
  }
}

nlohmann::json summary_to_json(const ExperimentResult& result) {
  const auto& s = result.stats;
  return {
      {"n", result.n},
      {"count", s.count},
      {"failed", result.failed},
      {"mean", s.mean},
      {"std", s.std},
      {"min", s.min},
      {"max", s.max},
      {"histogram", {{"edges", s.histogram.edges}, {"counts", s.histogram.counts}}},
  };
}

}  // namespace anderson
