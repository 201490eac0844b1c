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

// Maximization of |<c, z>| over z in a subspace W with norm(spec, z) = 1.
//
// Every solver works in kernel coordinates z = B t, B the orthonormal basis
// of W. Polyhedral norms go through the simplex solver over the unit ball;
// smooth and mixed norms minimize ||B t|| on the slice <B^T c, t> = 1, whose
// optimum m gives the maximum 1/m.

#ifndef BJAPPROX_DUALOPT_HPP_
#define BJAPPROX_DUALOPT_HPP_

#include <cstdint>

#include "descent.hpp"
#include "linalg.hpp"
#include "space.hpp"

namespace bjapprox {

enum class SphereMaxMethod { kLpVertex, kSmoothAscent, kMixedAscent, kClosedForm };

const char* ToString(SphereMaxMethod method);

struct SphereMaxResult {
  double value = 0.0;
  Vector maximizer;  // unit vector of W; <c, maximizer> = value >= 0
  SphereMaxMethod method = SphereMaxMethod::kClosedForm;
  int iterations = 0;
  bool converged = true;
  // c is Euclidean-orthogonal to W; the maximizer is an arbitrary unit vector.
  bool degenerate = false;
};

struct DualOptOptions {
  std::uint64_t seed = 0;
  int random_starts = 16;
  DescentOptions descent;
};

// Dispatches on the norm: one-dimensional W in closed form, polyhedral specs
// to PolytopeLinMax, plain smooth l_q to SmoothSphereMax, the rest to
// MixedAscent. Throws kInvalidArgument for an empty W.
SphereMaxResult SphereMax(const Vector& c, const KernelBasis& w,
                          const SpaceSpec& spec,
                          const DualOptOptions& options = {});

enum class PolytopeBall { kBox, kCrossPolytope };

// Exact LP maximum of <c, z> over W intersected with the unit ball of a
// polyhedral norm. Among maximizing vertices the lexicographically largest
// z is returned.
SphereMaxResult PolytopeLinMax(const Vector& c, const KernelBasis& w,
                               const SpaceSpec& spec);
SphereMaxResult PolytopeLinMax(const Vector& c, const KernelBasis& w,
                               PolytopeBall ball);

// Plain l_q with 1 < q < inf.
SphereMaxResult SmoothSphereMax(const Vector& c, const KernelBasis& w,
                                Exponent q,
                                const DualOptOptions& options = {});

// Any spec: the projection start plus options.random_starts seeded starts.
// The result is marked unconverged if it violates weak duality or its own
// feasibility checks.
SphereMaxResult MixedAscent(const Vector& c, const KernelBasis& w,
                            const SpaceSpec& spec,
                            const DualOptOptions& options = {});

}  // namespace bjapprox

#endif  // BJAPPROX_DUALOPT_HPP_
