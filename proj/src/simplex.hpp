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

// Small dense two-phase tableau simplex with Bland's anti-cycling rule.
//
// Intended for desk-scale problems (a few hundred rows at most). Besides a
// single objective it supports a lexicographic sequence: objective k+1 is
// maximized over the optimal face of objectives 0..k, which is how the
// solvers make tie-breaking among equal-value vertices deterministic.

#ifndef BJAPPROX_SIMPLEX_HPP_
#define BJAPPROX_SIMPLEX_HPP_

#include <utility>
#include <vector>

#include "common.hpp"

namespace bjapprox {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* ToString(LpStatus status);

class LinearProgram {
 public:
  struct Term {
    int var;
    double coeff;
  };
  struct Constraint {
    std::vector<Term> terms;
    Relation relation;
    double rhs;
  };

  // Variables are nonnegative unless declared free.
  int AddVariable(bool free = false);
  int AddVariables(int count, bool free = false);  // returns the first index

  void AddConstraint(std::vector<Term> terms, Relation relation, double rhs);

  int num_variables() const { return static_cast<int>(free_.size()); }
  bool is_free(int var) const { return free_[static_cast<size_t>(var)]; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

 private:
  std::vector<bool> free_;
  std::vector<Constraint> constraints_;
};

struct SimplexOptions {
  double pivot_tol = 1e-10;
  // Reduced costs below -face_tol * scale exclude a column from the optimal
  // face handed to the next lexicographic objective.
  double face_tol = 1e-9;
  int max_pivots = 200000;
};

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Vector x;                       // one entry per LinearProgram variable
  std::vector<double> objectives;  // optimal value of each stage
  int pivots = 0;
};

// Maximizes objectives[0]; each later objective is maximized over the
// optimal face of all earlier ones. Every objective has one coefficient per
// variable.
LpResult SolveLexicographic(const LinearProgram& lp,
                            const std::vector<Vector>& objectives,
                            const SimplexOptions& options = {});

inline LpResult Maximize(const LinearProgram& lp, const Vector& objective,
                         const SimplexOptions& options = {}) {
  return SolveLexicographic(lp, {objective}, options);
}

}  // namespace bjapprox

#endif  // BJAPPROX_SIMPLEX_HPP_
