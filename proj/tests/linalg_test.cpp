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

#include <random>

#include <gtest/gtest.h>

#include "linalg.hpp"

namespace bjapprox {
namespace {

// Largest Euclidean residual of projecting the columns of a onto span(b).
double ProjectionResidual(const Matrix& a, const Matrix& b) {
  const Matrix q = b.householderQr().householderQ() * Matrix::Identity(b.rows(), b.cols());
  return (a - q * (q.transpose() * a)).cwiseAbs().maxCoeff();
}

bool SameSubspace(const Matrix& a, const Matrix& b) {
  return a.cols() == b.cols() && ProjectionResidual(a, b) < 1e-10 &&
         ProjectionResidual(b, a) < 1e-10;
}

Matrix L14Rows() {
  Matrix rows(2, 4);
  rows << 1, 2, 0, 0, -1, 0, 2, 0;
  return rows;
}

TEST(NullSpaceTest, L14Kernel) {
  const KernelBasis w = NullSpace(L14Rows());
  Matrix expected(4, 2);
  expected << 1, 0, -0.5, 0, 0.5, 0, 0, 1;
  EXPECT_TRUE(SameSubspace(w.vectors, expected));
  EXPECT_EQ(w.ambient_dim, 4);
}

TEST(NullSpaceTest, TenByTenKernel) {
  Matrix rows(10, 10);
  rows << -9, 1, 1, 3, 6, 8, 0, 7, 9, 12, 7, 0, 5, 9, 5, 3, 2, 7, 1, 6.5, 9, -4, 3,
      -4, 7, 8, 8, 1, 9, 13, 9, 1, 6, 3, -1, -1, -7, 0, 5, -1.5, 8, 3, 4, 8, 6, 0,
      3, 5, -3, 2.5, 9, 3, -8, 2, 1, 2, 0, 2, 7, 5.5, 6, -2, 9, 5, 8, 1, 4, 1, 5,
      5.5, 7, 6, 7, 9, 8, 3, 2, 1, 3, 4.5, -8, 0, 0, 1, -6, 9, 0, 4, 9, 11, 8, 9,
      2, 7, 5, 5, 6, 9, 8, 14;
  const KernelBasis w = NullSpace(rows);
  ASSERT_EQ(w.dim(), 1);
  Vector k(10);
  k << 0, 0, 0, 0, 0, 1, 1, 1, 1, -2;
  EXPECT_TRUE(SameSubspace(w.vectors, k));
  EXPECT_NEAR(w.vectors.col(0).norm(), 1.0, 1e-12);
}

TEST(NullSpaceTest, IdentityHasEmptyKernel) {
  EXPECT_TRUE(NullSpace(Matrix::Identity(5, 5)).empty());
}

TEST(NullSpaceTest, RankNullityAndAnnihilation) {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 9;
    const int m = 1 + trial % n;
    Matrix rows(m, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) rows(i, j) = normal(gen);
    }
    const KernelBasis w = NullSpace(rows);
    EXPECT_EQ(NumericalRank(rows) + w.dim(), n);
    if (w.empty()) continue;
    EXPECT_LT((w.vectors.transpose() * w.vectors - Matrix::Identity(w.dim(), w.dim()))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-10);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < w.dim(); ++k) {
        EXPECT_LE(std::abs(rows.row(i).dot(w.vectors.col(k))),
                  1e-9 * rows.row(i).norm());
      }
    }
  }
}

TEST(InSpanTest, WorkedCases) {
  const Matrix rows = L14Rows();
  EXPECT_FALSE(InSpan(Vector::Ones(4), rows));
  Vector x(4);
  x << 0, 2, 2, 0;
  EXPECT_TRUE(InSpan(x, rows));
  EXPECT_TRUE(InSpan(Vector::Zero(4), rows));
  EXPECT_THROW(InSpan(Vector::Ones(3), rows), Error);
}

TEST(InSpanTest, AgreesWithEuclideanDistance) {
  std::mt19937_64 gen(12);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 200; ++trial) {
    Matrix rows(2, 4);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 4; ++j) rows(i, j) = normal(gen);
    }
    Vector x = rows.transpose() * Vector::Random(2);
    if (trial % 2) x += 1e-3 * Vector::Random(4);
    // Oracle: least-squares residual from a QR solve.
    const Vector coeff = rows.transpose().colPivHouseholderQr().solve(x);
    const double dist = (x - rows.transpose() * coeff).norm();
    EXPECT_EQ(InSpan(x, rows), dist <= 1e-9 * (1 + x.norm())) << trial;
  }
}

TEST(SubspaceBasisTest, DependentRowsAreReducedWithWarning) {
  Matrix rows(3, 4);
  rows << 1, 2, 0, 0, -1, 0, 2, 0, 0, 2, 2, 0;
  const SubspaceBasis y(rows, 4);
  EXPECT_EQ(y.count(), 3);
  EXPECT_EQ(y.rank(), 2);
  EXPECT_EQ(y.kernel().dim(), 2);
  ASSERT_EQ(y.warnings().size(), 1u);
  EXPECT_NE(y.warnings()[0].find("dependent"), std::string::npos);
}

TEST(SubspaceBasisTest, EmptyBasisHasFullKernel) {
  const SubspaceBasis y(Matrix(0, 3), 3);
  EXPECT_EQ(y.rank(), 0);
  EXPECT_EQ(y.kernel().dim(), 3);
  EXPECT_TRUE(y.Contains(Vector::Zero(3)));
  EXPECT_FALSE(y.Contains(Vector::Ones(3)));
}

TEST(SubspaceBasisTest, RangeAndKernelAreComplementary) {
  const SubspaceBasis y(L14Rows(), 4);
  Matrix both(4, 4);
  both << y.range(), y.kernel().vectors;
  EXPECT_LT((both.transpose() * both - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(SubspaceBasisTest, WrongRowLengthThrows) {
  EXPECT_THROW(SubspaceBasis(Matrix::Ones(2, 3), 4), Error);
}

}  // namespace
}  // namespace bjapprox
