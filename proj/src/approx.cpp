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

#include "approx.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "descent.hpp"
#include "polyhedral.hpp"
#include "simplex.hpp"

namespace bjapprox {
namespace {

void CheckProblem(const Vector& x0, const SubspaceBasis& y, const SpaceSpec& spec) {
  CheckDimension(x0.size(), spec.dimension(), "x0");
  CheckDimension(y.ambient_dim(), spec.dimension(), "basis vectors");
  if (!x0.allFinite()) Fail(ErrorCode::kInvalidArgument, "non-finite x0");
}

double KernelResidual(const SubspaceBasis& y, const Vector& z) {
  double worst = 0.0;
  for (int i = 0; i < y.count(); ++i) {
    const double len = y.rows().row(i).norm();
    if (len > 0.0) worst = std::max(worst, std::abs(y.rows().row(i).dot(z)) / len);
  }
  return worst;
}

DualCertificate MakeCertificate(const Vector& x0, const SubspaceBasis& y,
                                const SpaceSpec& dual, const Vector& z,
                                bool degenerate) {
  DualCertificate cert;
  cert.z = z;
  cert.dual_norm = z.size() ? Norm(dual, z) : 0.0;
  cert.pairing = x0.dot(z);
  cert.kernel_residual = KernelResidual(y, z);
  cert.degenerate = degenerate;
  return cert;
}

// Primal LP: minimize s subject to ||x0 - Q a|| <= s, then maximize each
// secondary direction d (given on y = Q a) over the optimal face.
Vector SolvePrimalLp(const Vector& x0, const Matrix& q, const SpaceSpec& spec,
                     const std::vector<Vector>& secondary, int* pivots) {
  const int n = static_cast<int>(x0.size());
  const int r = static_cast<int>(q.cols());
  LinearProgram lp;
  const int a = lp.AddVariables(r, /*free=*/true);
  const int s = lp.AddVariable();
  std::vector<AffineExpr> exprs(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    AffineExpr& e = exprs[static_cast<size_t>(j)];
    e.constant = x0[j];
    for (int l = 0; l < r; ++l) {
      if (q(j, l) != 0.0) e.terms.push_back({a + l, -q(j, l)});
    }
  }
  AddNormBound(lp, spec, exprs, s);
  std::vector<Vector> objectives;
  Vector obj = Vector::Zero(lp.num_variables());
  obj[s] = -1.0;
  objectives.push_back(obj);
  for (const Vector& d : secondary) {
    obj.setZero();
    obj.segment(a, r) = q.transpose() * d;
    objectives.push_back(obj);
  }
  const LpResult res = SolveLexicographic(lp, objectives);
  if (res.status != LpStatus::kOptimal) {
    Fail(ErrorCode::kInternal,
         std::string("best-approximation LP ended ") + ToString(res.status));
  }
  if (pivots) *pivots += res.pivots;
  return q * res.x.segment(a, r);
}

std::vector<Vector> CoordinateDirections(int n) {
  std::vector<Vector> dirs;
  for (int j = 0; j < n; ++j) dirs.push_back(Vector::Unit(n, j));
  return dirs;
}

Vector RandomDirection(int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector d(n);
  for (int j = 0; j < n; ++j) d[j] = normal(gen);
  return d;
}

struct PrimalSolution {
  Vector y;
  bool converged = true;
  int iterations = 0;
  std::string method;
};

PrimalSolution SolvePrimal(const Vector& x0, const SubspaceBasis& y,
                           const SpaceSpec& spec, const ApproxOptions& options) {
  PrimalSolution sol;
  const Matrix& q = y.range();
  if (spec.is_polyhedral()) {
    sol.method = "lp_vertex";
    sol.y = SolvePrimalLp(x0, q, spec,
                          CoordinateDirections(static_cast<int>(x0.size())),
                          &sol.iterations);
    return sol;
  }
  const Vector start = q.transpose() * x0;
  DescentResult d;
  if (spec.plain_exponent()) {
    sol.method = "smooth_descent";
    d = MinimizeAffineNorm(spec, x0, -q, start, options.dual.descent);
  } else {
    sol.method = "mixed_descent";
    std::vector<Vector> starts{start};
    for (Vector& s : RandomStarts(options.dual.random_starts,
                                  static_cast<int>(q.cols()),
                                  std::max(x0.norm(), 1.0), options.seed)) {
      starts.push_back(start + s);
    }
    d = MinimizeAffineNormMultiStart(spec, x0, -q, starts, options.dual.descent);
  }
  sol.y = q * d.s;
  sol.converged = d.converged;
  sol.iterations = d.iterations;
  return sol;
}

double MaxDeviation(const std::vector<Vector>& points, const Vector& base) {
  double spread = 0.0;
  for (const Vector& p : points) {
    spread = std::max(spread, (p - base).cwiseAbs().maxCoeff());
  }
  return spread;
}

}  // namespace

const char* ToString(Uniqueness u) {
  switch (u) {
    case Uniqueness::kYes: return "yes";
    case Uniqueness::kNo: return "no";
    case Uniqueness::kUnknown: return "unknown";
  }
  return "unknown";
}

const char* ToString(UniquenessVerdict v) {
  return v == UniquenessVerdict::kSufficient ? "sufficient" : "inconclusive";
}

DistanceResult Distance(const Vector& x0, const SubspaceBasis& y,
                        const SpaceSpec& spec, const ApproxOptions& options) {
  CheckProblem(x0, y, spec);
  DistanceResult result;
  result.warnings = y.warnings();
  const SpaceSpec dual = DualSpec(spec);
  const KernelBasis& w = y.kernel();
  if (w.empty() || y.Contains(x0, options.tol)) {
    result.warnings.push_back(kDegenerateWarning);
    Vector z = Vector::Zero(x0.size());
    if (!w.empty()) z = w.vectors.col(0) / Norm(dual, w.vectors.col(0));
    result.certificate = MakeCertificate(x0, y, dual, z, true);
    return result;
  }
  const SphereMaxResult sm = SphereMax(x0, w, dual, options.dual);
  result.value = sm.value;
  result.method = sm.method;
  result.iterations = sm.iterations;
  result.converged = sm.converged;
  result.certificate = MakeCertificate(x0, y, dual, sm.maximizer, sm.degenerate);
  return result;
}

ApproxResult BestApproximation(const Vector& x0, const SubspaceBasis& y,
                               const SpaceSpec& spec,
                               const ApproxOptions& options) {
  const DistanceResult dist = Distance(x0, y, spec, options);
  ApproxResult result;
  result.certificate = dist.certificate;
  result.warnings = dist.warnings;
  result.dual_method = ToString(dist.method);

  if (dist.certificate.degenerate && dist.value == 0.0 &&
      (y.kernel().empty() || y.Contains(x0, options.tol))) {
    // x0 already lies in Y: its least-squares coefficients reproduce it.
    result.best_approx = y.range() * (y.range().transpose() * x0);
    result.residual = x0 - result.best_approx;
    result.distance = 0.0;
    result.duality_gap = 0.0;
    result.unique = Uniqueness::kYes;
    result.converged = true;
    result.primal_method = "least_squares";
    return result;
  }

  const PrimalSolution primal = SolvePrimal(x0, y, spec, options);
  result.best_approx = primal.y;
  result.residual = x0 - primal.y;
  result.distance = Norm(spec, result.residual);
  result.primal_method = primal.method;
  result.iterations = primal.iterations + dist.iterations;
  result.duality_gap = result.distance - std::abs(result.certificate.pairing);
  result.converged =
      primal.converged && dist.converged &&
      std::abs(result.duality_gap) <= 1e-7 * (1.0 + result.distance);

  const auto plain = spec.plain_exponent();
  if (spec.is_strictly_convex()) {
    result.unique = Uniqueness::kYes;
  } else if (spec.is_polyhedral()) {
    result.unique = Uniqueness::kUnknown;
    if (plain && UniquenessCertificate(x0, y, spec) ==
                     UniquenessVerdict::kSufficient) {
      result.unique = Uniqueness::kYes;
    } else if (options.probe_uniqueness) {
      // The optimal face is a single point iff every coordinate of y is
      // constant on it; the seeded directions are a cross-check.
      const int n = static_cast<int>(x0.size());
      std::vector<Vector> others;
      for (int j = 0; j < n; ++j) {
        for (double sign : {1.0, -1.0}) {
          others.push_back(SolvePrimalLp(x0, y.range(), spec,
                                         {sign * Vector::Unit(n, j)}, nullptr));
        }
      }
      for (Vector& p : SampleMinimizers(x0, y, spec, 8, options.seed)) {
        others.push_back(std::move(p));
      }
      result.unique = MaxDeviation(others, result.best_approx) > 1e-6
                          ? Uniqueness::kNo
                          : Uniqueness::kYes;
    }
  }
  return result;
}

OrthogonalityResult BirkhoffJamesOrthogonal(const Vector& x, const Vector& y,
                                            const SpaceSpec& spec, double tol) {
  CheckDimension(x.size(), spec.dimension(), "x");
  CheckDimension(y.size(), spec.dimension(), "y");
  OrthogonalityResult r;
  r.norm_x = Norm(spec, x);
  if (r.norm_x == 0.0) Fail(ErrorCode::kInvalidArgument, "x must be nonzero");
  const double norm_y = Norm(spec, y);
  r.min_value = r.norm_x;
  if (norm_y > 0.0) {
    // Any minimizer satisfies |lambda| ||y|| <= 2 ||x||.
    const double radius = 2.0 * r.norm_x / norm_y;
    const ScalarMinimum m = MinimizeConvex1D(
        [&](double lambda) { return Norm(spec, x + lambda * y); }, -radius,
        radius);
    if (m.value < r.min_value) {
      r.min_value = m.value;
      r.lambda = m.argmin;
    }
  }
  r.orthogonal = r.min_value >= r.norm_x - tol * (1.0 + r.norm_x);
  return r;
}

bool ResidualOrthogonalityCheck(const ApproxResult& result,
                                const SubspaceBasis& y, const SpaceSpec& spec,
                                double tol) {
  if (Norm(spec, result.residual) == 0.0) return true;
  for (int i = 0; i < y.count(); ++i) {
    const Vector yi = y.rows().row(i).transpose();
    if (!BirkhoffJamesOrthogonal(result.residual, yi, spec, tol).orthogonal) {
      return false;
    }
  }
  return true;
}

UniquenessVerdict UniquenessCertificate(const Vector& x0, const SubspaceBasis& y,
                                        const SpaceSpec& spec) {
  CheckProblem(x0, y, spec);
  const auto plain = spec.plain_exponent();
  if (!plain || !plain->is_polyhedral()) {
    Fail(ErrorCode::kUnsupported,
         "uniqueness certificate needs plain l_1 or l_inf");
  }
  const KernelBasis& w = y.kernel();
  const int n = w.ambient_dim;
  const int k = w.dim();
  if (k == 0) return UniquenessVerdict::kSufficient;

  if (plain->is_infinite()) {
    // Dual ball l_1: non-smooth exactly where a coordinate vanishes, which
    // some unit vector of W achieves as soon as dim W >= 2.
    if (k >= 2) return UniquenessVerdict::kInconclusive;
    const Vector v = w.vectors.col(0);
    const double scale = v.cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i) {
      if (std::abs(v[i]) <= 1e-9 * scale) return UniquenessVerdict::kInconclusive;
    }
    return UniquenessVerdict::kSufficient;
  }

  // Dual ball l_inf: non-smooth where two coordinates reach |z_i| = 1. Test
  // each pair and sign pattern for feasibility within W and the unit box.
  const Matrix& b = w.vectors;
  auto row_terms = [&](int i, int t) {
    std::vector<LinearProgram::Term> terms;
    for (int l = 0; l < k; ++l) terms.push_back({t + l, b(i, l)});
    return terms;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (double sigma : {1.0, -1.0}) {
        LinearProgram lp;
        const int t = lp.AddVariables(k, /*free=*/true);
        lp.AddConstraint(row_terms(i, t), Relation::kEqual, 1.0);
        lp.AddConstraint(row_terms(j, t), Relation::kEqual, sigma);
        for (int l = 0; l < n; ++l) {
          if (l == i || l == j) continue;
          lp.AddConstraint(row_terms(l, t), Relation::kLessEqual, 1.0);
          lp.AddConstraint(row_terms(l, t), Relation::kGreaterEqual, -1.0);
        }
        const LpResult res = Maximize(lp, Vector::Zero(k));
        if (res.status == LpStatus::kOptimal) {
          return UniquenessVerdict::kInconclusive;
        }
      }
    }
  }
  return UniquenessVerdict::kSufficient;
}

std::vector<Vector> SampleMinimizers(const Vector& x0, const SubspaceBasis& y,
                                     const SpaceSpec& spec, int count,
                                     std::uint64_t base_seed) {
  CheckProblem(x0, y, spec);
  const int n = static_cast<int>(x0.size());
  std::vector<Vector> points;
  if (y.rank() == 0) {
    points.assign(static_cast<size_t>(count), Vector::Zero(n));
    return points;
  }
  const Matrix& q = y.range();
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = base_seed + 0x9e3779b97f4a7c15ULL * (i + 1);
    if (spec.is_polyhedral()) {
      points.push_back(
          SolvePrimalLp(x0, q, spec, {RandomDirection(n, seed)}, nullptr));
    } else {
      const Vector start =
          q.transpose() * x0 +
          RandomStarts(1, static_cast<int>(q.cols()), std::max(x0.norm(), 1.0),
                       seed)[0];
      points.push_back(q * MinimizeAffineNorm(spec, x0, -q, start).s);
    }
  }
  return points;
}

EqualDistanceResult EqualDistanceDiagnose(const Vector& x, const SubspaceBasis& y,
                                          Exponent p1, Exponent p2,
                                          const ApproxOptions& options) {
  if (!p1.is_smooth() || !p2.is_smooth() || p1 == p2) {
    Fail(ErrorCode::kInvalidArgument,
         "equal-distance diagnosis needs two distinct exponents in (1, inf)");
  }
  const int n = static_cast<int>(x.size());
  CheckDimension(y.ambient_dim(), n, "basis vectors");
  if (y.Contains(x, options.tol)) {
    Fail(ErrorCode::kInvalidArgument, "x lies in the subspace");
  }
  const ApproxResult r1 = BestApproximation(x, y, SpaceSpec::Plain(n, p1), options);
  const ApproxResult r2 = BestApproximation(x, y, SpaceSpec::Plain(n, p2), options);
  if (!r1.converged || !r2.converged) {
    Fail(ErrorCode::kNotConverged, "equal-distance solve did not converge");
  }
  EqualDistanceResult out;
  out.distance1 = r1.distance;
  out.distance2 = r2.distance;
  out.residual1 = r1.residual;
  out.residual2 = r2.residual;
  out.equal = std::abs(r1.distance - r2.distance) <=
              1e-7 * std::max(r1.distance, r2.distance);

  Eigen::Index j = 0;
  r1.residual.cwiseAbs().maxCoeff(&j);
  const double lambda = r1.residual[j];
  auto off_axis = [&](const Vector& r) {
    Vector rest = r;
    rest[j] = 0.0;
    return rest.cwiseAbs().maxCoeff();
  };
  out.axis_aligned = off_axis(r1.residual) <= 1e-7 &&
                     off_axis(r2.residual) <= 1e-7 &&
                     std::abs(r2.residual[j] - lambda) <= 1e-7;
  out.basis_in_hyperplane = true;
  for (int i = 0; i < y.count(); ++i) {
    const double len = y.rows().row(i).norm();
    if (std::abs(y.rows()(i, j)) > 1e-9 * std::max(len, 1.0)) {
      out.basis_in_hyperplane = false;
    }
  }
  if (out.equal && out.axis_aligned) {
    out.lambda = lambda;
    out.index = static_cast<int>(j);
  }
  out.consistent = !out.equal || (out.axis_aligned && out.basis_in_hyperplane);
  return out;
}

bool RestrictionNormEquality(const Vector& x0, const Vector& y0,
                             const SubspaceBasis& y, const SpaceSpec& spec,
                             const ApproxOptions& options) {
  CheckProblem(x0, y, spec);
  CheckDimension(y0.size(), spec.dimension(), "y0");
  if (!y.Contains(y0, options.tol)) {
    Fail(ErrorCode::kInvalidArgument, "y0 is not in the subspace");
  }
  const Vector r = x0 - y0;
  const double full = Norm(spec, r);
  const KernelBasis& w = y.kernel();
  const double restricted =
      w.empty() ? 0.0 : SphereMax(r, w, DualSpec(spec), options.dual).value;
  const double floor = 1e-12 * (1.0 + Norm(spec, x0));
  return std::abs(full - restricted) <=
         1e-7 * std::max(full, restricted) + floor;
}

}  // namespace bjapprox
