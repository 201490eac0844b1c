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

#include "simplex.hpp"

#include <algorithm>
#include <cmath>

namespace bjapprox {

const char* ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration limit";
  }
  return "unknown";
}

int LinearProgram::AddVariable(bool free) {
  free_.push_back(free);
  return num_variables() - 1;
}

int LinearProgram::AddVariables(int count, bool free) {
  const int first = num_variables();
  for (int i = 0; i < count; ++i) free_.push_back(free);
  return first;
}

void LinearProgram::AddConstraint(std::vector<Term> terms, Relation relation,
                                  double rhs) {
  for (const Term& t : terms) {
    if (t.var < 0 || t.var >= num_variables()) {
      Fail(ErrorCode::kInternal, "constraint references unknown variable");
    }
  }
  constraints_.push_back({std::move(terms), relation, rhs});
}

namespace {

enum class ColumnKind { kPlus, kMinus, kSlack, kArtificial };

// Standard-form tableau: rows are kept in canonical form with respect to the
// current basis; the last column holds the right-hand side.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, const SimplexOptions& options)
      : options_(options) {
    const int nv = lp.num_variables();
    var_plus_.assign(static_cast<size_t>(nv), -1);
    var_minus_.assign(static_cast<size_t>(nv), -1);
    for (int v = 0; v < nv; ++v) {
      var_plus_[static_cast<size_t>(v)] = AddColumn(ColumnKind::kPlus, v);
      if (lp.is_free(v)) {
        var_minus_[static_cast<size_t>(v)] = AddColumn(ColumnKind::kMinus, v);
      }
    }
    const auto& cons = lp.constraints();
    const int m = static_cast<int>(cons.size());
    // Column layout is fixed before filling: count slacks and artificials.
    std::vector<int> slack_col(static_cast<size_t>(m), -1);
    std::vector<int> art_col(static_cast<size_t>(m), -1);
    std::vector<double> sign(static_cast<size_t>(m), 1.0);
    for (int i = 0; i < m; ++i) {
      const auto& c = cons[static_cast<size_t>(i)];
      Relation rel = c.relation;
      if (c.rhs < 0) {
        sign[static_cast<size_t>(i)] = -1.0;
        if (rel == Relation::kLessEqual) {
          rel = Relation::kGreaterEqual;
        } else if (rel == Relation::kGreaterEqual) {
          rel = Relation::kLessEqual;
        }
      }
      if (rel != Relation::kEqual) {
        slack_col[static_cast<size_t>(i)] = AddColumn(ColumnKind::kSlack, -1);
      }
      if (rel != Relation::kLessEqual) {
        art_col[static_cast<size_t>(i)] =
            AddColumn(ColumnKind::kArtificial, -1);
      }
      relations_.push_back(rel);
    }
    const int nc = num_columns();
    t_ = Matrix::Zero(m, nc + 1);
    basis_.assign(static_cast<size_t>(m), -1);
    for (int i = 0; i < m; ++i) {
      const auto& c = cons[static_cast<size_t>(i)];
      const double s = sign[static_cast<size_t>(i)];
      for (const auto& term : c.terms) {
        t_(i, var_plus_[static_cast<size_t>(term.var)]) += s * term.coeff;
        const int minus = var_minus_[static_cast<size_t>(term.var)];
        if (minus >= 0) t_(i, minus) -= s * term.coeff;
      }
      t_(i, nc) = s * c.rhs;
      const Relation rel = relations_[static_cast<size_t>(i)];
      const int sc = slack_col[static_cast<size_t>(i)];
      if (sc >= 0) t_(i, sc) = rel == Relation::kLessEqual ? 1.0 : -1.0;
      const int ac = art_col[static_cast<size_t>(i)];
      if (ac >= 0) {
        t_(i, ac) = 1.0;
        basis_[static_cast<size_t>(i)] = ac;
      } else {
        basis_[static_cast<size_t>(i)] = sc;
      }
    }
    allowed_.assign(static_cast<size_t>(nc), true);
    basic_.assign(static_cast<size_t>(nc), false);
    for (int b : basis_) basic_[static_cast<size_t>(b)] = true;
  }

  int num_columns() const { return static_cast<int>(kinds_.size()); }
  int rows() const { return static_cast<int>(t_.rows()); }
  int pivots() const { return pivots_; }

  bool HasArtificials() const {
    return std::find(kinds_.begin(), kinds_.end(), ColumnKind::kArtificial) !=
           kinds_.end();
  }

  // Phase I. Leaves a feasible basis free of artificial columns.
  LpStatus RemoveArtificials() {
    Vector cost = Vector::Zero(num_columns());
    for (int j = 0; j < num_columns(); ++j) {
      if (kinds_[static_cast<size_t>(j)] == ColumnKind::kArtificial) {
        cost[j] = -1.0;
      }
    }
    const LpStatus st = Optimize(cost);
    if (st != LpStatus::kOptimal) return st;
    double infeasibility = 0.0;
    double scale = 1.0;
    for (int i = 0; i < rows(); ++i) {
      scale = std::max(scale, std::abs(t_(i, num_columns())));
      if (IsArtificial(basis_[static_cast<size_t>(i)])) {
        infeasibility += t_(i, num_columns());
      }
    }
    if (infeasibility > 1e-9 * scale) return LpStatus::kInfeasible;
    // Drive remaining (zero-valued) artificials out of the basis; rows where
    // that is impossible are linearly redundant and dropped.
    for (int i = rows() - 1; i >= 0; --i) {
      if (!IsArtificial(basis_[static_cast<size_t>(i)])) continue;
      int best = -1;
      double best_abs = options_.pivot_tol;
      for (int j = 0; j < num_columns(); ++j) {
        if (IsArtificial(j)) continue;
        if (std::abs(t_(i, j)) > best_abs) {
          best_abs = std::abs(t_(i, j));
          best = j;
        }
      }
      if (best >= 0) {
        Pivot(i, best);
      } else {
        DropRow(i);
      }
    }
    for (int j = 0; j < num_columns(); ++j) {
      if (IsArtificial(j)) allowed_[static_cast<size_t>(j)] = false;
    }
    return LpStatus::kOptimal;
  }

  // Expands a per-variable objective to tableau columns.
  Vector ColumnCost(const Vector& objective) const {
    Vector cost = Vector::Zero(num_columns());
    for (int j = 0; j < num_columns(); ++j) {
      const int v = owner_[static_cast<size_t>(j)];
      if (kinds_[static_cast<size_t>(j)] == ColumnKind::kPlus) cost[j] = objective[v];
      if (kinds_[static_cast<size_t>(j)] == ColumnKind::kMinus) cost[j] = -objective[v];
    }
    return cost;
  }

  // Primal simplex over allowed columns from the current feasible basis.
  LpStatus Optimize(const Vector& cost) {
    const double scale = std::max(1.0, cost.cwiseAbs().maxCoeff());
    const double cost_tol = 1e-11 * scale;
    const int nc = num_columns();
    while (true) {
      if (pivots_ >= options_.max_pivots) return LpStatus::kIterationLimit;
      const Vector reduced = ReducedCosts(cost);
      int entering = -1;
      for (int j = 0; j < nc; ++j) {
        if (allowed_[static_cast<size_t>(j)] && !IsBasic(j) &&
            reduced[j] > cost_tol) {
          entering = j;  // Bland: lowest index with positive reduced cost.
          break;
        }
      }
      if (entering < 0) return LpStatus::kOptimal;
      int leaving = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < rows(); ++i) {
        const double a = t_(i, entering);
        if (a <= options_.pivot_tol) continue;
        const double ratio = std::max(0.0, t_(i, nc)) / a;
        const double tie = 1e-12 * (1.0 + best_ratio);
        if (leaving < 0 || ratio < best_ratio - tie) {
          leaving = i;
          best_ratio = ratio;
        } else if (ratio <= best_ratio + tie &&
                   basis_[static_cast<size_t>(i)] <
                       basis_[static_cast<size_t>(leaving)]) {
          // Bland: among tied rows, the lowest basic index leaves.
          leaving = i;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
      if (leaving < 0) return LpStatus::kUnbounded;
      Pivot(leaving, entering);
    }
  }

  // Restricts later stages to the optimal face of cost.
  void FixNonOptimalColumns(const Vector& cost) {
    const double scale = std::max(1.0, cost.cwiseAbs().maxCoeff());
    const Vector reduced = ReducedCosts(cost);
    for (int j = 0; j < num_columns(); ++j) {
      if (!IsBasic(j) && reduced[j] < -options_.face_tol * scale) {
        allowed_[static_cast<size_t>(j)] = false;
      }
    }
  }

  double Value(const Vector& cost) const {
    double v = 0.0;
    for (int i = 0; i < rows(); ++i) {
      v += cost[basis_[static_cast<size_t>(i)]] * t_(i, num_columns());
    }
    return v;
  }

  Vector Solution(int num_vars) const {
    Vector col = Vector::Zero(num_columns());
    for (int i = 0; i < rows(); ++i) {
      col[basis_[static_cast<size_t>(i)]] = std::max(0.0, t_(i, num_columns()));
    }
    Vector x = Vector::Zero(num_vars);
    for (int v = 0; v < num_vars; ++v) {
      x[v] = col[var_plus_[static_cast<size_t>(v)]];
      const int minus = var_minus_[static_cast<size_t>(v)];
      if (minus >= 0) x[v] -= col[minus];
    }
    return x;
  }

 private:
  int AddColumn(ColumnKind kind, int owner) {
    kinds_.push_back(kind);
    owner_.push_back(owner);
    return num_columns() - 1;
  }

  bool IsArtificial(int j) const {
    return kinds_[static_cast<size_t>(j)] == ColumnKind::kArtificial;
  }

  bool IsBasic(int j) const { return basic_[static_cast<size_t>(j)]; }

  Vector ReducedCosts(const Vector& cost) const {
    Vector cb(rows());
    for (int i = 0; i < rows(); ++i) cb[i] = cost[basis_[static_cast<size_t>(i)]];
    Vector reduced = cost - (cb.transpose() * t_.leftCols(num_columns())).transpose();
    for (int i = 0; i < rows(); ++i) reduced[basis_[static_cast<size_t>(i)]] = 0.0;
    return reduced;
  }

  void Pivot(int row, int col) {
    const double p = t_(row, col);
    t_.row(row) /= p;
    for (int i = 0; i < rows(); ++i) {
      if (i == row) continue;
      const double f = t_(i, col);
      if (f != 0.0) t_.row(i) -= f * t_.row(row);
    }
    basic_[static_cast<size_t>(basis_[static_cast<size_t>(row)])] = false;
    basic_[static_cast<size_t>(col)] = true;
    basis_[static_cast<size_t>(row)] = col;
    ++pivots_;
  }

  void DropRow(int row) {
    const int m = rows();
    Matrix next(m - 1, t_.cols());
    for (int i = 0, k = 0; i < m; ++i) {
      if (i != row) next.row(k++) = t_.row(i);
    }
    t_ = std::move(next);
    basic_[static_cast<size_t>(basis_[static_cast<size_t>(row)])] = false;
    basis_.erase(basis_.begin() + row);
  }

  SimplexOptions options_;
  std::vector<ColumnKind> kinds_;
  std::vector<int> owner_;
  std::vector<int> var_plus_;
  std::vector<int> var_minus_;
  std::vector<Relation> relations_;
  std::vector<bool> allowed_;
  std::vector<int> basis_;
  std::vector<bool> basic_;
  Matrix t_;
  int pivots_ = 0;
};

}  // namespace

LpResult SolveLexicographic(const LinearProgram& lp,
                            const std::vector<Vector>& objectives,
                            const SimplexOptions& options) {
  if (objectives.empty()) {
    Fail(ErrorCode::kInternal, "linear program without objective");
  }
  for (const Vector& c : objectives) {
    CheckDimension(c.size(), lp.num_variables(), "LP objective");
  }
  LpResult result;
  Tableau tableau(lp, options);
  if (tableau.HasArtificials()) {
    result.status = tableau.RemoveArtificials();
    if (result.status != LpStatus::kOptimal) {
      result.pivots = tableau.pivots();
      return result;
    }
  }
  for (size_t k = 0; k < objectives.size(); ++k) {
    const Vector cost = tableau.ColumnCost(objectives[k]);
    result.status = tableau.Optimize(cost);
    if (result.status != LpStatus::kOptimal) break;
    result.objectives.push_back(tableau.Value(cost));
    if (k + 1 < objectives.size()) tableau.FixNonOptimalColumns(cost);
  }
  result.x = tableau.Solution(lp.num_variables());
  result.pivots = tableau.pivots();
  return result;
}

}  // namespace bjapprox
