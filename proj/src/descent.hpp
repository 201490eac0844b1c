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

// Minimization of  s -> ||v0 + A s||  for a mixed l_p-sum norm.
//
// Both the primal problem (min over coefficients of ||x0 - Q a||) and the
// dual slice problem (min ||B t|| subject to <g, t> = 1) have this shape.

#ifndef BJAPPROX_DESCENT_HPP_
#define BJAPPROX_DESCENT_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "space.hpp"

namespace bjapprox {

struct DescentOptions {
  // Converged once the relative objective decrease stays below rel_tol for
  // stall_window consecutive iterations.
  double rel_tol = 1e-11;
  int stall_window = 5;
  int max_iterations = 50000;
  double armijo = 1e-4;
};

struct DescentResult {
  Vector s;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Damped Newton iteration (Hessian by central differences of the analytic
// gradient, eigenvalues clamped positive) with Armijo backtracking, falling
// back to steepest descent when the Newton direction fails.
DescentResult MinimizeAffineNorm(const SpaceSpec& spec, const Vector& v0,
                                 const Matrix& a, const Vector& start,
                                 const DescentOptions& options = {});

// Runs MinimizeAffineNorm from each start and keeps the smallest value; ties
// go to the earliest start, so the reduction is order-deterministic.
DescentResult MinimizeAffineNormMultiStart(const SpaceSpec& spec,
                                           const Vector& v0, const Matrix& a,
                                           const std::vector<Vector>& starts,
                                           const DescentOptions& options = {});

// `count` Gaussian starting points of dimension `dim` scaled by `scale`,
// drawn from a generator seeded with `seed`.
std::vector<Vector> RandomStarts(int count, int dim, double scale,
                                 std::uint64_t seed);

struct ScalarMinimum {
  double argmin = 0.0;
  double value = 0.0;
};

// Golden-section search for a convex function on [lo, hi].
ScalarMinimum MinimizeConvex1D(const std::function<double(double)>& f,
                               double lo, double hi, double rel_tol = 1e-14);

}  // namespace bjapprox

#endif  // BJAPPROX_DESCENT_HPP_
