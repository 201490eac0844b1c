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

#ifndef BJAPPROX_LINALG_HPP_
#define BJAPPROX_LINALG_HPP_

#include <string>
#include <vector>

#include "common.hpp"

namespace bjapprox {

inline constexpr double kDefaultRankTol = 1e-10;

// Euclidean-orthonormal basis (as columns) of the numerical kernel of a
// matrix whose rows are the spanning vectors of a subspace. In the dual
// picture this is the annihilator  {z : <y_i, z> = 0 for all i}.
struct KernelBasis {
  Matrix vectors;  // ambient_dim x dim()
  int ambient_dim = 0;
  double tol_used = kDefaultRankTol;

  int dim() const { return static_cast<int>(vectors.cols()); }
  bool empty() const { return vectors.cols() == 0; }
};

// Singular values above tol * sigma_max count towards the rank.
int NumericalRank(const Matrix& m, double tol = kDefaultRankTol);

KernelBasis NullSpace(const Matrix& m, double tol = kDefaultRankTol);

// Orthonormal basis (as columns) of the row space of m.
Matrix RowSpaceBasis(const Matrix& m, double tol = kDefaultRankTol);

// Euclidean distance from x to the span of the rows of basis_rows.
double DistanceToSpan(const Vector& x, const Matrix& basis_rows,
                      double tol = kDefaultRankTol);

// ||x - P x||_2 <= tol * (1 + ||x||_2), P the orthogonal projector onto the
// span of the rows.
bool InSpan(const Vector& x, const Matrix& basis_rows, double tol = 1e-9);

// The subspace Y = span{y_1, ..., y_m} of R^n with its derived data. The
// spanning vectors need not be independent; a dependent input is reduced by
// numerical rank and a warning is recorded.
class SubspaceBasis {
 public:
  // rows: m x n, one spanning vector per row. m may be zero.
  SubspaceBasis(Matrix rows, int ambient_dim, double tol = kDefaultRankTol);
  static SubspaceBasis FromVectors(const std::vector<Vector>& vectors,
                                   int ambient_dim);

  const Matrix& rows() const { return rows_; }
  int ambient_dim() const { return ambient_dim_; }
  int count() const { return static_cast<int>(rows_.rows()); }
  int rank() const { return static_cast<int>(range_.cols()); }
  // Orthonormal basis of Y as columns (n x rank).
  const Matrix& range() const { return range_; }
  // W = annihilator of Y (n x (n - rank)).
  const KernelBasis& kernel() const { return kernel_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  bool Contains(const Vector& x, double tol = 1e-9) const;

 private:
  Matrix rows_;
  int ambient_dim_;
  Matrix range_;
  KernelBasis kernel_;
  std::vector<std::string> warnings_;
};

}  // namespace bjapprox

#endif  // BJAPPROX_LINALG_HPP_
