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

#include "linalg.hpp"

#include <Eigen/SVD>

namespace bjapprox {
namespace {

struct Decomposition {
  Matrix u;  // full left singular vectors
  Matrix v;  // full right singular vectors
  int rank = 0;
};

Decomposition Decompose(const Matrix& m, double tol) {
  Decomposition d;
  if (m.rows() == 0 || m.cols() == 0) {
    d.u = Matrix::Identity(m.rows(), m.rows());
    d.v = Matrix::Identity(m.cols(), m.cols());
    return d;
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vector& s = svd.singularValues();
  const double cutoff = tol * s[0];
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > cutoff && s[i] > 0.0) ++d.rank;
  }
  d.u = svd.matrixU();
  d.v = svd.matrixV();
  return d;
}

}  // namespace

int NumericalRank(const Matrix& m, double tol) { return Decompose(m, tol).rank; }

KernelBasis NullSpace(const Matrix& m, double tol) {
  const Decomposition d = Decompose(m, tol);
  KernelBasis k;
  k.ambient_dim = static_cast<int>(m.cols());
  k.tol_used = tol;
  k.vectors = d.v.rightCols(m.cols() - d.rank);
  return k;
}

Matrix RowSpaceBasis(const Matrix& m, double tol) {
  const Decomposition d = Decompose(m, tol);
  return d.v.leftCols(d.rank);
}

double DistanceToSpan(const Vector& x, const Matrix& basis_rows, double tol) {
  CheckDimension(x.size(), basis_rows.cols(), "span membership");
  const Matrix q = RowSpaceBasis(basis_rows, tol);
  return (x - q * (q.transpose() * x)).norm();
}

bool InSpan(const Vector& x, const Matrix& basis_rows, double tol) {
  return DistanceToSpan(x, basis_rows) <= tol * (1.0 + x.norm());
}

SubspaceBasis::SubspaceBasis(Matrix rows, int ambient_dim, double tol)
    : rows_(std::move(rows)), ambient_dim_(ambient_dim) {
  if (ambient_dim_ < 1) {
    Fail(ErrorCode::kInvalidArgument, "ambient dimension must be positive");
  }
  if (rows_.rows() > 0) {
    CheckDimension(rows_.cols(), ambient_dim_, "basis vector");
  } else {
    rows_.resize(0, ambient_dim_);
  }
  if (!rows_.allFinite()) {
    Fail(ErrorCode::kInvalidArgument, "basis vectors must be finite");
  }
  const Decomposition d = Decompose(rows_, tol);
  range_ = d.v.leftCols(d.rank);
  kernel_.ambient_dim = ambient_dim_;
  kernel_.tol_used = tol;
  kernel_.vectors = d.v.rightCols(ambient_dim_ - d.rank);
  if (d.rank < rows_.rows()) {
    warnings_.push_back("dependent basis: " + std::to_string(rows_.rows()) +
                        " vectors span a subspace of rank " +
                        std::to_string(d.rank));
  }
}

SubspaceBasis SubspaceBasis::FromVectors(const std::vector<Vector>& vectors,
                                         int ambient_dim) {
  Matrix rows(static_cast<Eigen::Index>(vectors.size()), ambient_dim);
  for (size_t i = 0; i < vectors.size(); ++i) {
    CheckDimension(vectors[i].size(), ambient_dim, "basis vector");
    rows.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  return SubspaceBasis(std::move(rows), ambient_dim);
}

bool SubspaceBasis::Contains(const Vector& x, double tol) const {
  CheckDimension(x.size(), ambient_dim_, "span membership");
  const Vector residual = x - range_ * (range_.transpose() * x);
  return residual.norm() <= tol * (1.0 + x.norm());
}

}  // namespace bjapprox
