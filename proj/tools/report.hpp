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

// Problem files, report documents and the handle wrappers the command-line
// tool uses on top of the C API.

#ifndef BJAPPROX_TOOLS_REPORT_HPP_
#define BJAPPROX_TOOLS_REPORT_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bjapprox/bjapprox.h"

namespace bjcli {

using json = nlohmann::json;

// Exit codes of the tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDimension = 3;
inline constexpr int kExitNotConverged = 4;
inline constexpr int kExitCheckFailed = 5;

// Carries a library status (or a file-format problem) up to main.
class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

// Throws CliError mapped from status unless it is BJA_OK.
void Check(bja_status status);

struct SpaceDeleter {
  void operator()(bja_space* s) const { bja_space_free(s); }
};
struct SubspaceDeleter {
  void operator()(bja_subspace* y) const { bja_subspace_free(y); }
};
struct ResultDeleter {
  void operator()(bja_result* r) const { bja_result_free(r); }
};
using SpacePtr = std::unique_ptr<bja_space, SpaceDeleter>;
using SubspacePtr = std::unique_ptr<bja_subspace, SubspaceDeleter>;
using ResultPtr = std::unique_ptr<bja_result, ResultDeleter>;

SpacePtr MakeSpace(const json& spec);
SpacePtr MakeDual(const bja_space* space);
SubspacePtr MakeSubspace(const std::vector<std::vector<double>>& rows, int n);

struct Problem {
  json raw;  // the parsed document, embedded in reports
  json space;
  std::vector<double> x0;
  std::vector<std::vector<double>> basis;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
};

std::string ReadFile(const std::string& path);

// Parses and validates a problem document. Row lengths are checked against
// the space dimension (exit code 3); structural problems are parse errors.
Problem ParseProblem(const std::string& text, bool require_basis);

// Hex SHA-256 of the given bytes.
std::string Sha256Hex(const std::string& bytes);

std::string UtcTimestamp();

std::vector<double> ParseList(const std::string& text);

// Serializes with sorted keys and round-trip number formatting, so equal
// documents give equal bytes.
std::string Dump(const json& doc);

}  // namespace bjcli

#endif  // BJAPPROX_TOOLS_REPORT_HPP_
