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

// Brute-force reference computations, independent of the LP and descent
// solvers, used to check them.

#ifndef BJAPPROX_ORACLE_HPP_
#define BJAPPROX_ORACLE_HPP_

#include <cstdint>

#include "linalg.hpp"
#include "space.hpp"

namespace bjapprox {

struct OracleConfig {
  int grid_points_per_dim = 41;  // odd, so the centre is a grid point
  int refine_rounds = 6;         // each round shrinks the search window ~10x
  std::uint64_t seed = 0;
  int trials = 1000;
};

// Throws kInvalidArgument for an even or too-small grid or negative counts.
void Validate(const OracleConfig& cfg);

inline constexpr int kOracleMaxDim = 4;

// Grid search with zooming over the coefficients of an orthonormal basis of
// Y. Throws kOracleLimit when rank(Y) > 4.
double BruteForceDistance(const Vector& x0, const SubspaceBasis& y,
                          const SpaceSpec& spec, const OracleConfig& cfg = {});

// Max of |<c, z>| / norm(spec, z) over z in W, by low-discrepancy sampling
// of directions followed by a local grid search. Throws kOracleLimit when
// dim W > 4.
double BruteForceSphereMax(const Vector& c, const KernelBasis& w,
                           const SpaceSpec& spec, const OracleConfig& cfg = {});

// ||x0 - y|| >= |<x0, z>| / ||z||_* for cfg.trials random y in Y, z in W.
bool CheckWeakDuality(const Vector& x0, const SubspaceBasis& y,
                      const SpaceSpec& spec, const OracleConfig& cfg = {});

struct HolderReport {
  bool holds = false;
  double classical_lhs = 0.0;  // sum |u_j v_j|
  double classical_rhs = 0.0;  // ||u||_p ||v||_q
  double mixed_lhs = 0.0;      // ||u - 0 a|| ||b||_*
  double mixed_rhs = 0.0;      // |<u, b>|
  int blocks = 0;
};

// Builds b_j = sgn(u_j v_j) v_j, an a orthogonal to b and a seeded block
// partition with every exponent p, then checks the mixed-norm inequality at
// lambda = 0 and the classical Hoelder bound it implies.
HolderReport HolderCheck(const Vector& u, const Vector& v, Exponent p,
                         const OracleConfig& cfg = {});

struct MixedInequalityReport {
  bool holds = false;
  double left = 0.0;     // norm(spec, x - lambda a)
  double right = 0.0;    // dual norm of b
  double pairing = 0.0;  // |<x, b>|
  // Optimality: min over lambda against max over the hyperplane a^perp.
  double primal_min = 0.0;
  double dual_max = 0.0;
  double relative_gap = 0.0;
  bool tight = false;
};

// The inequality norm(x - lambda a) * ||b||_* >= |<x, b>| for b orthogonal to
// a, plus its optimality. Throws kInvalidArgument when <a, b> != 0 or b = 0.
MixedInequalityReport MixedInequalityCheck(const Vector& x, const Vector& a,
                                           const SpaceSpec& spec, double lambda,
                                           const Vector& b,
                                           const OracleConfig& cfg = {});

}  // namespace bjapprox

#endif  // BJAPPROX_ORACLE_HPP_
