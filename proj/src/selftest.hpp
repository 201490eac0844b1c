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

// The acceptance suite: worked examples with known answers plus randomized
// property checks against the brute-force oracles.

#ifndef BJAPPROX_SELFTEST_HPP_
#define BJAPPROX_SELFTEST_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bjapprox {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

using CriterionCallback = std::function<void(const CriterionResult&)>;

int SelfTestCount();

// Runs every criterion in order, reporting each through `on_result` as soon
// as it finishes. Randomized criteria derive their streams from `seed`.
std::vector<CriterionResult> RunSelfTest(const CriterionCallback& on_result = {},
                                         std::uint64_t seed = 0);

}  // namespace bjapprox

#endif  // BJAPPROX_SELFTEST_HPP_
