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

#ifndef ANDERSON_JSON_IO_HPP
#define ANDERSON_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "anderson/harness.hpp"
#include "anderson/lattice.hpp"

namespace anderson {

/// Serializes with every float at 17 significant digits. Non-finite floats
/// become null.
std::string dump_json(const nlohmann::json& j, int indent = -1);

/// {"d": int, "points": [[int, ...], ...]} in stored order.
nlohmann::json domain_to_json(const Domain& dom);
Domain domain_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const LatticePoint& p);

/// {n, count, failed, mean, std, min, max, histogram: {edges, counts}}.
nlohmann::json summary_to_json(const ExperimentResult& result);

}  // namespace anderson

#endif  // ANDERSON_JSON_IO_HPP
