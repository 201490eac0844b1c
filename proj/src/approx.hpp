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

// Best approximation of a point by a finite-dimensional subspace, with dual
// certificates and optimality diagnostics.

#ifndef BJAPPROX_APPROX_HPP_
#define BJAPPROX_APPROX_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dualopt.hpp"
#include "linalg.hpp"
#include "space.hpp"

namespace bjapprox {

// A unit vector z of the dual space annihilating Y. |<x0, z>| bounds the
// distance from below and equals it at the optimum.
struct DualCertificate {
  Vector z;
  double dual_norm = 0.0;
  double pairing = 0.0;
  double kernel_residual = 0.0;  // max_i |<y_i, z>| / |y_i|_2
  bool degenerate = false;
};

enum class Uniqueness { kYes, kNo, kUnknown };
const char* ToString(Uniqueness u);

struct ApproxOptions {
  std::uint64_t seed = 0;
  double tol = 1e-9;  // span membership
  // Settle uniqueness of polyhedral minimizers by probing the optimal face.
  bool probe_uniqueness = true;
  DualOptOptions dual;
};

struct DistanceResult {
  double value = 0.0;
  DualCertificate certificate;
  SphereMaxMethod method = SphereMaxMethod::kClosedForm;
  int iterations = 0;
  bool converged = true;
  std::vector<std::string> warnings;
};

struct ApproxResult {
  double distance = 0.0;
  Vector best_approx;
  Vector residual;
  DualCertificate certificate;
  double duality_gap = 0.0;  // primal value - |pairing|
  Uniqueness unique = Uniqueness::kUnknown;
  bool converged = false;
  std::string primal_method;
  std::string dual_method;
  int iterations = 0;
  std::vector<std::string> warnings;
};

inline constexpr char kDegenerateWarning[] = "degenerate: x0 in Y";

// Maximum of |<x0, z>| over unit vectors z of the dual norm annihilating Y.
DistanceResult Distance(const Vector& x0, const SubspaceBasis& y,
                        const SpaceSpec& spec, const ApproxOptions& options = {});

// Solves the primal problem min ||x0 - y|| over y in Y and attaches the dual
// certificate from Distance. Never throws for non-convergence; check
// `converged`.
ApproxResult BestApproximation(const Vector& x0, const SubspaceBasis& y,
                               const SpaceSpec& spec,
                               const ApproxOptions& options = {});

struct OrthogonalityResult {
  bool orthogonal = false;
  double lambda = 0.0;     // minimizer of ||x + lambda y||
  double min_value = 0.0;  // the minimum itself
  double norm_x = 0.0;
};

// x is orthogonal to y in the sense of Birkhoff and James when
// ||x + lambda y|| >= ||x|| for every real lambda. Throws for x = 0.
OrthogonalityResult BirkhoffJamesOrthogonal(const Vector& x, const Vector& y,
                                            const SpaceSpec& spec,
                                            double tol = 1e-9);

// The residual is orthogonal to every spanning vector of Y. A zero residual
// passes. Necessary for optimality; sufficient only in smooth spaces.
bool ResidualOrthogonalityCheck(const ApproxResult& result,
                                const SubspaceBasis& y, const SpaceSpec& spec,
                                double tol = 1e-9);

enum class UniquenessVerdict { kSufficient, kInconclusive };
const char* ToString(UniquenessVerdict v);

// For plain l_1^n or l_inf^n: Sufficient when every unit vector of the dual
// annihilating Y is a smooth point of the dual ball, which forces a unique
// best approximation. Throws kUnsupported for other specs.
UniquenessVerdict UniquenessCertificate(const Vector& x0, const SubspaceBasis& y,
                                        const SpaceSpec& spec);

// One minimizer per seed: polyhedral specs optimize a seeded random
// direction over the optimal face, other specs start the descent at a seeded
// random point.
std::vector<Vector> SampleMinimizers(const Vector& x0, const SubspaceBasis& y,
                                     const SpaceSpec& spec, int count,
                                     std::uint64_t base_seed);

struct EqualDistanceResult {
  bool equal = false;
  double distance1 = 0.0;
  double distance2 = 0.0;
  Vector residual1;
  Vector residual2;
  // Set when equal and both residuals equal lambda e_j (0-based j).
  std::optional<double> lambda;
  std::optional<int> index;
  // The residuals are multiples of one coordinate vector.
  bool axis_aligned = false;
  // Every spanning vector of Y has zero j-th coordinate.
  bool basis_in_hyperplane = false;
  // Equal distances come with the coordinate-aligned structure they force.
  bool consistent = false;
};

// Compares the distances from x to Y under plain l_p1 and l_p2, both
// exponents in (1, inf) and distinct. Throws kInvalidArgument for x in Y and
// kNotConverged if either solve fails.
EqualDistanceResult EqualDistanceDiagnose(const Vector& x, const SubspaceBasis& y,
                                          Exponent p1, Exponent p2,
                                          const ApproxOptions& options = {});

// True when the norm of x0 - y0 restricted to the annihilator of Y equals
// its full norm, i.e. y0 is a best approximation. Throws kInvalidArgument
// when y0 is not in Y.
bool RestrictionNormEquality(const Vector& x0, const Vector& y0,
                             const SubspaceBasis& y, const SpaceSpec& spec,
                             const ApproxOptions& options = {});

}  // namespace bjapprox

#endif  // BJAPPROX_APPROX_HPP_
