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

#include <cmath>
#include <random>
#include <limits>

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace bjapprox {
namespace {

constexpr double kInfP = std::numeric_limits<double>::infinity();

Vector RandomVector(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  Vector v(n);
  for (auto& x : v) x = normal(gen);
  return v;
}

Matrix RandomRows(int m, int n, std::mt19937_64& gen) {
  Matrix rows(m, n);
  for (int i = 0; i < m; ++i) rows.row(i) = RandomVector(n, gen);
  return rows;
}

TEST(OracleConfigTest, Validation) {
  EXPECT_NO_THROW(Validate(OracleConfig{}));
  EXPECT_THROW(Validate(OracleConfig{40, 6, 0, 10}), Error);
  EXPECT_THROW(Validate(OracleConfig{1, 6, 0, 10}), Error);
  EXPECT_THROW(Validate(OracleConfig{41, -1, 0, 10}), Error);
  EXPECT_THROW(Validate(OracleConfig{41, 6, 0, -5}), Error);
}

TEST(BruteForceDistanceTest, EuclideanProjection) {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix rows = RandomRows(1 + trial % 2, 4, gen);
    const Vector x0 = RandomVector(4, gen);
    const Vector coeff = rows.transpose().colPivHouseholderQr().solve(x0);
    const double expected = (x0 - rows.transpose() * coeff).norm();
    EXPECT_NEAR(BruteForceDistance(x0, SubspaceBasis(rows, 4), SpaceSpec::Plain(4, Exponent(2))),
                expected, 1e-7);
  }
}

TEST(BruteForceDistanceTest, HalfRangeUnderLinf) {
  const Vector x0{{1, -2, 0.5, 3}};
  EXPECT_NEAR(BruteForceDistance(x0, SubspaceBasis(Matrix::Ones(1, 4), 4),
                                 SpaceSpec::Plain(4, Exponent::Infinity())),
              2.5, 1e-8);
}

TEST(BruteForceDistanceTest, RefusesLargeSubspaces) {
  try {
    BruteForceDistance(Vector::Ones(6), SubspaceBasis(Matrix::Identity(5, 6), 6),
                       SpaceSpec::Plain(6, Exponent(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleLimit);
  }
}

TEST(BruteForceSphereMaxTest, EuclideanProjectionNorm) {
  std::mt19937_64 gen(42);
  for (int trial = 0; trial < 10; ++trial) {
    const KernelBasis w = NullSpace(RandomRows(2, 4 + trial % 2, gen));
    const Vector c = RandomVector(static_cast<int>(w.ambient_dim), gen);
    EXPECT_NEAR(BruteForceSphereMax(c, w, SpaceSpec::Plain(w.ambient_dim, Exponent(2))),
                (w.vectors.transpose() * c).norm(), 1e-7);
  }
}

TEST(BruteForceSphereMaxTest, L14ExampleAndLimit) {
  const KernelBasis w = NullSpace(Matrix{{1, 2, 0, 0}, {-1, 0, 2, 0}});
  EXPECT_NEAR(BruteForceSphereMax(Vector::Ones(4), w, SpaceSpec::Plain(4, Exponent::Infinity())),
              2.0, 1e-8);
  EXPECT_THROW(BruteForceSphereMax(Vector::Ones(5), NullSpace(Matrix::Zero(1, 5)),
                                   SpaceSpec::Plain(5, Exponent(2))),
               Error);
}

TEST(WeakDualityTest, HoldsOnRandomProblems) {
  std::mt19937_64 gen(43);
  const SpaceSpec spec({{2, Exponent(1.5)}, {3, Exponent::Infinity()}}, Exponent(3));
  for (int trial = 0; trial < 5; ++trial) {
    const SubspaceBasis y(RandomRows(2, 5, gen), 5);
    EXPECT_TRUE(CheckWeakDuality(RandomVector(5, gen), y, spec, OracleConfig{41, 6, 7, 300}));
  }
}

TEST(HolderCheckTest, ClassicalSidesMatchDirectFormulas) {
  std::mt19937_64 gen(44);
  for (double p : {1.05, 1.5, 2.0, 7.0, 40.0}) {
    const Vector u = RandomVector(6, gen);
    const Vector v = RandomVector(6, gen);
    const HolderReport r = HolderCheck(u, v, Exponent(p));
    EXPECT_TRUE(r.holds) << p;
    EXPECT_NEAR(r.classical_lhs, (u.array() * v.array()).abs().sum(), 1e-12);
    const Exponent e(p);
    EXPECT_NEAR(r.classical_rhs, LpNorm(u, e) * LpNorm(v, ConjugateExponent(e)), 1e-10);
    EXPECT_LE(r.classical_lhs, r.classical_rhs * (1 + 1e-12));
  }
}

TEST(HolderCheckTest, RejectsPolyhedralExponents) {
  EXPECT_THROW(HolderCheck(Vector::Ones(3), Vector::Ones(3), Exponent(1)), Error);
  EXPECT_THROW(HolderCheck(Vector::Ones(3), Vector::Ones(3), Exponent(kInfP)), Error);
}

TEST(MixedInequalityTest, HoldsAndIsTight) {
  std::mt19937_64 gen(45);
  const SpaceSpec spec({{2, Exponent(1.5)}, {2, Exponent(4)}}, Exponent(2));
  for (int trial = 0; trial < 10; ++trial) {
    const Vector x = RandomVector(4, gen);
    const Vector a = RandomVector(4, gen);
    Vector b = RandomVector(4, gen);
    b -= a * (a.dot(b) / a.squaredNorm());
    const MixedInequalityReport r = MixedInequalityCheck(x, a, spec, 0.37, b);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.tight) << r.relative_gap;
    EXPECT_GE(r.left * r.right, r.pairing * (1 - 1e-12));
  }
}

TEST(MixedInequalityTest, RejectsNonOrthogonalPairs) {
  const SpaceSpec spec = SpaceSpec::Plain(2, Exponent(3));
  EXPECT_THROW(MixedInequalityCheck(Vector{{1, 2}}, Vector{{1, 0}}, spec, 0, Vector{{1, 1}}),
               Error);
  EXPECT_THROW(MixedInequalityCheck(Vector{{1, 2}}, Vector{{1, 0}}, spec, 0, Vector::Zero(2)),
               Error);
}

}  // namespace
}  // namespace bjapprox
