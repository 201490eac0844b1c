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

// Linear-programming encodings of polyhedral mixed norms.

#ifndef BJAPPROX_POLYHEDRAL_HPP_
#define BJAPPROX_POLYHEDRAL_HPP_

#include <optional>
#include <vector>

#include "simplex.hpp"
#include "space.hpp"

namespace bjapprox {

// sum(terms) + constant, over the variables of a LinearProgram.
struct AffineExpr {
  std::vector<LinearProgram::Term> terms;
  double constant = 0.0;
};

// Adds auxiliary variables and constraints that enforce
//   Norm(spec, (e_1, ..., e_n)) <= bound
// where e_j is the value of exprs[j] and bound is the LP variable bound_var
// if given, otherwise bound_constant. spec must be polyhedral.
void AddNormBound(LinearProgram& lp, const SpaceSpec& spec,
                  const std::vector<AffineExpr>& exprs,
                  std::optional<int> bound_var, double bound_constant = 0.0);

}  // namespace bjapprox

#endif  // BJAPPROX_POLYHEDRAL_HPP_
