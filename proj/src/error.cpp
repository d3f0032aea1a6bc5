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

#include "anderson/error.hpp"

namespace anderson {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kNotInDomain: return "not_in_domain";
    case ErrorCode::kEmptyDomain: return "empty_domain";
    case ErrorCode::kNotConverged: return "not_converged";
    case ErrorCode::kSizeCapExceeded: return "size_cap_exceeded";
    case ErrorCode::kUnclassifiable: return "unclassifiable";
    case ErrorCode::kDegenerate: return "degenerate";
    case ErrorCode::kNoBall: return "no_ball";
    case ErrorCode::kAllNotReached: return "all_not_reached";
    case ErrorCode::kParse: return "parse_error";
  }
  return "unknown";
}

}  // namespace anderson
