// Copyright 2026 The bjapprox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BJAPPROX_COMMON_HPP_
#define BJAPPROX_COMMON_HPP_

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bjapprox {

// Points, functionals and kernel vectors all live in R^n with the canonical
// pairing <x, z> = sum x_i z_i.
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Numeric values match the C API status codes (and the CLI exit codes where
// they overlap).
enum class ErrorCode {
  kInvalidArgument = 1,
  kParse = 2,
  kDimensionMismatch = 3,
  kNotConverged = 4,
  kUnsupported = 6,
  kOracleLimit = 7,
  kInternal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void CheckDimension(Eigen::Index actual, Eigen::Index expected,
                           const char* what) {
  if (actual != expected) {
    Fail(ErrorCode::kDimensionMismatch,
         std::string(what) + ": expected length " + std::to_string(expected) +
             ", got " + std::to_string(actual));
  }
}

}  // namespace bjapprox

#endif  // BJAPPROX_COMMON_HPP_
