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

#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "descent.hpp"
#include "dualopt.hpp"

namespace bjapprox {
namespace {

using Objective = std::function<double(const Vector&)>;

struct GridPoint {
  Vector point;
  double value;
  bool on_boundary;
};

// Evaluates f on a points^m grid spanning centre +- half and returns the
// best point, preferring the earliest in scan order on ties.
GridPoint ScanGrid(const Objective& f, const Vector& centre, double half,
                   int points) {
  const Eigen::Index m = centre.size();
  const double step = 2.0 * half / (points - 1);
  std::vector<int> idx(static_cast<size_t>(m), 0);
  Vector p(m);
  GridPoint best{centre, f(centre), false};
  while (true) {
    bool edge = false;
    for (Eigen::Index d = 0; d < m; ++d) {
      const int i = idx[static_cast<size_t>(d)];
      p[d] = centre[d] - half + step * i;
      edge = edge || i == 0 || i == points - 1;
    }
    const double v = f(p);
    if (v < best.value) best = {p, v, edge};
    Eigen::Index d = 0;
    while (d < m && ++idx[static_cast<size_t>(d)] == points) {
      idx[static_cast<size_t>(d)] = 0;
      ++d;
    }
    if (d == m) break;
  }
  return best;
}

// Exact-by-convexity refinement: minimizes f over the box centre +- half by
// nested golden-section searches, one coordinate per level. Partial
// minimization of a convex function is convex, so every level is a convex
// one-dimensional problem.
GridPoint NestedMinimize(const Objective& f, const Vector& centre, double half,
                         double rel_tol) {
  const Eigen::Index m = centre.size();
  Vector p = centre;
  std::function<double(Eigen::Index)> level = [&](Eigen::Index d) -> double {
    if (d == m) return f(p);
    const ScalarMinimum best = MinimizeConvex1D(
        [&](double v) {
          p[d] = v;
          return level(d + 1);
        },
        centre[d] - half, centre[d] + half, rel_tol);
    return best.value;
  };
  GridPoint out{centre, level(0), false};
  return out;
}

double RefineTolerance(const OracleConfig& cfg) {
  return std::pow(10.0, -(cfg.refine_rounds + 3));
}

double RadicalInverse(std::uint64_t i, int base) {
  double inv = 1.0 / base;
  double scale = inv;
  double result = 0.0;
  while (i > 0) {
    result += static_cast<double>(i % static_cast<std::uint64_t>(base)) * scale;
    i /= static_cast<std::uint64_t>(base);
    scale *= inv;
  }
  return result;
}

// Maps a point of [0,1)^(k-1) to the Euclidean unit sphere of R^k (k <= 4)
// with the uniform measure (up to the antipodal symmetry we do not need).
Vector SpherePoint(const std::vector<double>& u, int k) {
  const double two_pi = 2.0 * std::numbers::pi;
  Vector t(k);
  switch (k) {
    case 1:
      t[0] = 1.0;
      break;
    case 2:
      t << std::cos(std::numbers::pi * u[0]), std::sin(std::numbers::pi * u[0]);
      break;
    case 3: {
      const double z = 2.0 * u[0] - 1.0;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      t << r * std::cos(two_pi * u[1]), r * std::sin(two_pi * u[1]), z;
      break;
    }
    default: {
      const double r1 = std::sqrt(1.0 - u[0]);
      const double r2 = std::sqrt(u[0]);
      t << r1 * std::sin(two_pi * u[1]), r1 * std::cos(two_pi * u[1]),
          r2 * std::sin(two_pi * u[2]), r2 * std::cos(two_pi * u[2]);
      break;
    }
  }
  return t;
}

bool WithinSlack(double lhs, double rhs) {
  return lhs >= rhs - 1e-10 * (1.0 + std::abs(rhs));
}

}  // namespace

void Validate(const OracleConfig& cfg) {
  if (cfg.grid_points_per_dim < 3 || cfg.grid_points_per_dim % 2 == 0) {
    Fail(ErrorCode::kInvalidArgument, "grid_points_per_dim must be odd and >= 3");
  }
  if (cfg.refine_rounds < 0 || cfg.trials < 0) {
    Fail(ErrorCode::kInvalidArgument, "negative oracle round or trial count");
  }
}

double BruteForceDistance(const Vector& x0, const SubspaceBasis& y,
                          const SpaceSpec& spec, const OracleConfig& cfg) {
  Validate(cfg);
  CheckDimension(x0.size(), spec.dimension(), "x0");
  CheckDimension(y.ambient_dim(), spec.dimension(), "basis vectors");
  const int m = y.rank();
  if (m > kOracleMaxDim) {
    Fail(ErrorCode::kOracleLimit, "brute-force distance limited to dim(Y) <= 4");
  }
  if (m == 0) return Norm(spec, x0);
  const Matrix& q = y.range();
  // A minimizer y satisfies ||y||_2 <= ||x0||_2 + ||x0 - y||_2 and
  // ||x0 - y||_2 <= sqrt(n) ||x0 - y||_inf <= sqrt(n) ||x0||, since every
  // supported norm dominates l_inf. Orthonormal Q makes |a|_2 = |y|_2.
  const double radius =
      x0.norm() + std::sqrt(static_cast<double>(x0.size())) * Norm(spec, x0);
  if (radius == 0.0) return 0.0;
  const Objective f = [&](const Vector& a) { return Norm(spec, x0 - q * a); };
  const GridPoint coarse =
      ScanGrid(f, Vector::Zero(m), radius, cfg.grid_points_per_dim);
  const GridPoint refined =
      NestedMinimize(f, Vector::Zero(m), radius, RefineTolerance(cfg));
  return std::min(coarse.value, refined.value);
}

double BruteForceSphereMax(const Vector& c, const KernelBasis& w,
                           const SpaceSpec& spec, const OracleConfig& cfg) {
  Validate(cfg);
  CheckDimension(c.size(), w.ambient_dim, "functional");
  CheckDimension(spec.dimension(), w.ambient_dim, "space");
  const int k = w.dim();
  if (k == 0) Fail(ErrorCode::kInvalidArgument, "empty kernel");
  if (k > kOracleMaxDim) {
    Fail(ErrorCode::kOracleLimit, "brute-force sphere max limited to dim(W) <= 4");
  }
  const Matrix& b = w.vectors;
  const Vector g = b.transpose() * c;
  auto ratio = [&](const Vector& t) {
    const double n = Norm(spec, b * t);
    return n > 0.0 ? std::abs(g.dot(t)) / n : 0.0;
  };
  if (k == 1) return ratio(Vector::Ones(1));
  if (g.norm() <= 1e-13 * c.norm()) return 0.0;

  // Low-discrepancy directions: Halton in bases 2, 3, 5 with a seeded
  // Cranley-Patterson shift.
  const int bases[] = {2, 3, 5};
  std::vector<double> shift(static_cast<size_t>(k - 1));
  for (int d = 0; d < k - 1; ++d) {
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    shift[static_cast<size_t>(d)] =
        std::fmod(static_cast<double>(cfg.seed % 1000003) * golden * (d + 1), 1.0);
  }
  const double g_pts = cfg.grid_points_per_dim;
  const long samples = std::min<long>(
      20000, 4L * static_cast<long>(std::pow(g_pts, k - 1)));
  Vector best_t = b.transpose() * c;
  double best = ratio(best_t);
  std::vector<double> u(static_cast<size_t>(k - 1));
  for (long i = 1; i <= samples; ++i) {
    for (int d = 0; d < k - 1; ++d) {
      u[static_cast<size_t>(d)] = std::fmod(
          RadicalInverse(static_cast<std::uint64_t>(i), bases[d]) +
              shift[static_cast<size_t>(d)],
          1.0);
    }
    const Vector t = SpherePoint(u, k);
    const double r = ratio(t);
    if (r > best) {
      best = r;
      best_t = t;
    }
  }

  // Local search on the slice <g, t> = 1, where the ratio is 1 / ||B t||.
  const Vector t0 = g / g.squaredNorm();
  Matrix row(1, k);
  row.row(0) = g.transpose();
  const Matrix null = NullSpace(row).vectors;
  const Vector start_t = best_t / g.dot(best_t);
  const Objective f = [&](const Vector& s) { return Norm(spec, b * (t0 + null * s)); };
  // Any slice point beating the incumbent m* has |s|_2 <= |t|_2 = |B t|_2
  // <= sqrt(n) |B t|_inf <= sqrt(n) m*, which bounds the search box.
  const double incumbent = Norm(spec, b * start_t);
  const double half = std::sqrt(static_cast<double>(c.size())) * incumbent;
  const GridPoint refined =
      NestedMinimize(f, Vector::Zero(k - 1), half, RefineTolerance(cfg));
  return std::max(best, 1.0 / refined.value);
}

bool CheckWeakDuality(const Vector& x0, const SubspaceBasis& y,
                      const SpaceSpec& spec, const OracleConfig& cfg) {
  Validate(cfg);
  CheckDimension(x0.size(), spec.dimension(), "x0");
  CheckDimension(y.ambient_dim(), spec.dimension(), "basis vectors");
  const KernelBasis& w = y.kernel();
  if (w.empty()) return true;
  const SpaceSpec dual = DualSpec(spec);
  std::mt19937_64 gen(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double scale = std::max(x0.norm(), 1.0);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    Vector a(y.rank());
    for (Eigen::Index i = 0; i < a.size(); ++i) a[i] = scale * normal(gen);
    Vector t(w.dim());
    for (Eigen::Index i = 0; i < t.size(); ++i) t[i] = normal(gen);
    const Vector yv = y.range() * a;
    const Vector z = w.vectors * t;
    const double nz = Norm(dual, z);
    if (nz == 0.0) continue;
    const double lhs = Norm(spec, x0 - yv);
    const double rhs = std::abs(x0.dot(z)) / nz;
    if (lhs < rhs - 1e-10 * (1.0 + lhs)) return false;
  }
  return true;
}

HolderReport HolderCheck(const Vector& u, const Vector& v, Exponent p,
                         const OracleConfig& cfg) {
  if (u.size() != v.size()) {
    CheckDimension(v.size(), u.size(), "holder v");
  }
  if (u.size() < 2) Fail(ErrorCode::kInvalidArgument, "holder needs length >= 2");
  if (!p.is_smooth()) Fail(ErrorCode::kInvalidArgument, "holder needs 1 < p < inf");
  if (u.isZero(0.0) || v.isZero(0.0)) {
    Fail(ErrorCode::kInvalidArgument, "holder inputs must be nonzero");
  }
  const int m = static_cast<int>(u.size());
  Vector b(m);
  for (int j = 0; j < m; ++j) {
    b[j] = u[j] * v[j] < 0.0 ? -v[j] : v[j];
  }
  if (b.isZero(0.0)) Fail(ErrorCode::kInvalidArgument, "degenerate b = 0");

  Matrix row(1, m);
  row.row(0) = b.transpose();
  const Vector a = NullSpace(row).vectors.col(0);

  // Seeded partition of the m coordinates into consecutive blocks.
  std::mt19937_64 gen(cfg.seed ^ 0x5851f42d4c957f2dULL);
  std::uniform_int_distribution<int> count_dist(1, std::min(m, 4));
  const int nblocks = count_dist(gen);
  std::vector<int> cuts;
  for (int c = 1; c < m; ++c) cuts.push_back(c);
  std::shuffle(cuts.begin(), cuts.end(), gen);
  cuts.resize(static_cast<size_t>(nblocks - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Block> blocks;
  int prev = 0;
  for (int c : cuts) {
    blocks.push_back({c - prev, p});
    prev = c;
  }
  blocks.push_back({m - prev, p});
  const SpaceSpec spec(blocks, p);

  HolderReport r;
  r.blocks = nblocks;
  const double lambda = 0.0;
  r.mixed_lhs = Norm(spec, u - lambda * a) * Norm(DualSpec(spec), b);
  r.mixed_rhs = std::abs(u.dot(b));
  r.classical_lhs = u.cwiseProduct(v).cwiseAbs().sum();
  r.classical_rhs = LpNorm(u, p) * LpNorm(v, ConjugateExponent(p));
  // The mixed instance implies the classical bound because |<u, b>| is the
  // classical left side and ||b||_q = ||v||_q.
  const double q_gap = std::abs(LpNorm(b, ConjugateExponent(p)) -
                                LpNorm(v, ConjugateExponent(p)));
  const double pair_gap = std::abs(r.mixed_rhs - r.classical_lhs);
  r.holds = WithinSlack(r.mixed_lhs, r.mixed_rhs) &&
            WithinSlack(r.classical_rhs, r.classical_lhs) &&
            q_gap <= 1e-10 * (1.0 + LpNorm(v, ConjugateExponent(p))) &&
            pair_gap <= 1e-10 * (1.0 + r.classical_lhs);
  return r;
}

MixedInequalityReport MixedInequalityCheck(const Vector& x, const Vector& a,
                                           const SpaceSpec& spec, double lambda,
                                           const Vector& b,
                                           const OracleConfig& cfg) {
  Validate(cfg);
  CheckDimension(x.size(), spec.dimension(), "x");
  CheckDimension(a.size(), spec.dimension(), "a");
  CheckDimension(b.size(), spec.dimension(), "b");
  if (b.isZero(0.0)) Fail(ErrorCode::kInvalidArgument, "b must be nonzero");
  if (a.isZero(0.0)) Fail(ErrorCode::kInvalidArgument, "a must be nonzero");
  if (std::abs(a.dot(b)) > 1e-10 * std::max(1.0, a.norm() * b.norm())) {
    Fail(ErrorCode::kInvalidArgument, "b is not orthogonal to a");
  }
  const SpaceSpec dual = DualSpec(spec);
  MixedInequalityReport r;
  r.left = Norm(spec, x - lambda * a);
  r.right = Norm(dual, b);
  r.pairing = std::abs(x.dot(b));
  r.holds = WithinSlack(r.left * r.right, r.pairing);

  // Optimality: min over lambda of the left factor equals the max of the
  // ratio |<x, b>| / ||b||_* over the hyperplane orthogonal to a.
  const double radius = 2.0 * Norm(spec, x) / Norm(spec, a);
  r.primal_min = MinimizeConvex1D(
                     [&](double l) { return Norm(spec, x - l * a); }, -radius,
                     radius)
                     .value;
  Matrix row(1, a.size());
  row.row(0) = a.transpose();
  const KernelBasis w = NullSpace(row);
  DualOptOptions options;
  options.seed = cfg.seed;
  r.dual_max = w.empty() ? 0.0 : SphereMax(x, w, dual, options).value;
  const double scale = std::max(r.primal_min, r.dual_max);
  r.relative_gap = scale > 0.0 ? std::abs(r.primal_min - r.dual_max) / scale : 0.0;
  r.tight = r.relative_gap <= 1e-5;
  return r;
}

}  // namespace bjapprox
