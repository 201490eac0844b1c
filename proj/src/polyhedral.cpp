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

#include "polyhedral.hpp"

namespace bjapprox {
namespace {

using Term = LinearProgram::Term;

// |expr| <= var, as two rows.
void AddAbsBound(LinearProgram& lp, const AffineExpr& expr, int var) {
  std::vector<Term> plus = expr.terms;
  plus.push_back({var, -1.0});
  lp.AddConstraint(std::move(plus), Relation::kLessEqual, -expr.constant);
  std::vector<Term> minus;
  minus.reserve(expr.terms.size() + 1);
  for (const Term& t : expr.terms) minus.push_back({t.var, -t.coeff});
  minus.push_back({var, -1.0});
  lp.AddConstraint(std::move(minus), Relation::kLessEqual, expr.constant);
}

}  // namespace

void AddNormBound(LinearProgram& lp, const SpaceSpec& spec,
                  const std::vector<AffineExpr>& exprs,
                  std::optional<int> bound_var, double bound_constant) {
  if (!spec.is_polyhedral()) {
    Fail(ErrorCode::kUnsupported, "LP encoding needs a polyhedral norm");
  }
  CheckDimension(static_cast<Eigen::Index>(exprs.size()), spec.dimension(),
                 "norm bound expressions");
  std::vector<int> block_norms;
  int offset = 0;
  for (const Block& block : spec.blocks()) {
    const int n_i = lp.AddVariable();
    block_norms.push_back(n_i);
    if (block.dim == 1 || block.p.is_infinite()) {
      for (int j = 0; j < block.dim; ++j) {
        AddAbsBound(lp, exprs[static_cast<size_t>(offset + j)], n_i);
      }
    } else {
      const int first = lp.AddVariables(block.dim);
      std::vector<Term> sum;
      for (int j = 0; j < block.dim; ++j) {
        AddAbsBound(lp, exprs[static_cast<size_t>(offset + j)], first + j);
        sum.push_back({first + j, 1.0});
      }
      sum.push_back({n_i, -1.0});
      lp.AddConstraint(std::move(sum), Relation::kLessEqual, 0.0);
    }
    offset += block.dim;
  }
  auto close = [&](std::vector<Term> terms) {
    double rhs = bound_constant;
    if (bound_var) {
      terms.push_back({*bound_var, -1.0});
      rhs = 0.0;
    }
    lp.AddConstraint(std::move(terms), Relation::kLessEqual, rhs);
  };
  if (block_norms.size() == 1 || spec.outer().is_infinite()) {
    for (int n_i : block_norms) close({{n_i, 1.0}});
  } else {
    std::vector<Term> sum;
    for (int n_i : block_norms) sum.push_back({n_i, 1.0});
    close(std::move(sum));
  }
}

}  // namespace bjapprox
