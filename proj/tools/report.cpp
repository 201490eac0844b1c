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

#include "report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace bjcli {
namespace {

int ExitCodeOf(bja_status status) {
  switch (status) {
    case BJA_ERR_PARSE:
    case BJA_ERR_INVALID_ARGUMENT:
      return kExitParse;
    case BJA_ERR_DIMENSION:
      return kExitDimension;
    case BJA_ERR_NOT_CONVERGED:
      return kExitNotConverged;
    default:
      return kExitFailure;
  }
}

[[noreturn]] void ParseFail(const std::string& what) {
  throw CliError(kExitParse, what);
}

std::vector<double> NumberArray(const json& node, const char* what) {
  if (!node.is_array()) ParseFail(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(node.size());
  for (const json& v : node) {
    if (!v.is_number()) ParseFail(std::string(what) + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

void Check(bja_status status) {
  if (status == BJA_OK) return;
  std::string message = bja_last_error();
  if (message.empty()) message = bja_status_string(status);
  throw CliError(ExitCodeOf(status), message);
}

SpacePtr MakeSpace(const json& spec) {
  bja_space* raw = nullptr;
  Check(bja_space_from_json(spec.dump().c_str(), &raw));
  return SpacePtr(raw);
}

SpacePtr MakeDual(const bja_space* space) {
  bja_space* raw = nullptr;
  Check(bja_space_dual(space, &raw));
  return SpacePtr(raw);
}

SubspacePtr MakeSubspace(const std::vector<std::vector<double>>& rows, int n) {
  std::vector<double> flat;
  flat.reserve(rows.size() * static_cast<size_t>(n));
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  bja_subspace* raw = nullptr;
  Check(bja_subspace_create(flat.data(), static_cast<int>(rows.size()), n, &raw));
  return SubspacePtr(raw);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitParse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Problem ParseProblem(const std::string& text, bool require_basis) {
  Problem p;
  try {
    p.raw = json::parse(text);
  } catch (const json::parse_error& e) {
    ParseFail(std::string("malformed JSON: ") + e.what());
  }
  if (!p.raw.is_object()) ParseFail("problem file must be a JSON object");
  if (!p.raw.contains("space")) ParseFail("missing \"space\"");
  if (!p.raw.contains("x0")) ParseFail("missing \"x0\"");
  p.space = p.raw["space"];
  p.x0 = NumberArray(p.raw["x0"], "x0");
  if (p.raw.contains("basis")) {
    const json& basis = p.raw["basis"];
    if (!basis.is_array()) ParseFail("basis must be an array of rows");
    for (const json& row : basis) p.basis.push_back(NumberArray(row, "basis row"));
  }
  if (require_basis && p.basis.empty()) ParseFail("basis must be nonempty");
  if (p.raw.contains("tolerance")) {
    if (!p.raw["tolerance"].is_number()) ParseFail("tolerance must be a number");
    p.tolerance = p.raw["tolerance"].get<double>();
  }
  if (p.raw.contains("seed")) {
    if (!p.raw["seed"].is_number_unsigned()) ParseFail("seed must be an unsigned integer");
    p.seed = p.raw["seed"].get<std::uint64_t>();
  }
  const SpacePtr space = MakeSpace(p.space);
  const size_t n = static_cast<size_t>(bja_space_dim(space.get()));
  if (p.x0.size() != n) {
    throw CliError(kExitDimension, "x0 has length " + std::to_string(p.x0.size()) +
                                       ", space dimension is " + std::to_string(n));
  }
  for (size_t i = 0; i < p.basis.size(); ++i) {
    if (p.basis[i].size() != n) {
      throw CliError(kExitDimension, "basis row " + std::to_string(i) +
                                         " has length " +
                                         std::to_string(p.basis[i].size()));
    }
  }
  return p;
}

std::string Sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw CliError(kExitFailure, "SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<double> ParseList(const std::string& text) {
  std::string trimmed = text;
  if (!trimmed.empty() && trimmed.front() != '[') trimmed = "[" + trimmed + "]";
  try {
    return NumberArray(json::parse(trimmed), "vector");
  } catch (const json::parse_error&) {
    ParseFail("cannot parse vector \"" + text + "\"");
  }
}

std::string Dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace bjcli
