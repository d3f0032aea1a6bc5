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

#ifndef ANDERSON_ERROR_HPP
#define ANDERSON_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace anderson {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kNotInDomain,
  kEmptyDomain,
  kNotConverged,
  kSizeCapExceeded,
  kUnclassifiable,
  kDegenerate,
  kNoBall,
  kAllNotReached,
  kParse,
};

/// Stable machine-readable name, used in CLI error JSON.
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown by iterative solvers that hit their iteration cap. Carries the best
/// iterate so callers can inspect or report it.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double residual, int iterations,
                   std::vector<double> best_iterate)
      : Error(ErrorCode::kNotConverged, message),
        residual_(residual),
        iterations_(iterations),
        best_(std::move(best_iterate)) {}

  double residual() const noexcept { return residual_; }
  int iterations() const noexcept { return iterations_; }
  const std::vector<double>& best_iterate() const noexcept { return best_; }

 private:
  double residual_;
  int iterations_;
  std::vector<double> best_;
};

/// Raised when every site of a window is excluded from a Z-sum maximum.
class AllNotReachedError : public Error {
 public:
  AllNotReachedError(const std::string& message, std::size_t excluded)
      : Error(ErrorCode::kAllNotReached, message), excluded_(excluded) {}

  std::size_t excluded() const noexcept { return excluded_; }

 private:
  std::size_t excluded_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace anderson

#endif  // ANDERSON_ERROR_HPP
