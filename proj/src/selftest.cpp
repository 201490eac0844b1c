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

#include "selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "approx.hpp"
#include "oracle.hpp"

namespace bjapprox {
namespace {

struct SuiteContext {
  std::uint64_t seed = 0;
  // Every best-approximation result produced by the worked examples and the
  // oracle comparison, for the duality-gap sweep.
  std::vector<ApproxResult> results;
};

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double Normal() { return normal_(gen_); }
  double Uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  int Int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Vector NormalVector(int n) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = Normal();
    return v;
  }
  Matrix NormalMatrix(int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m(i, j) = Normal();
    }
    return m;
  }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// The plain exponents of the randomized sweeps plus one two-block mixed
// space; index 5 selects the mixed one.
constexpr int kSpecKinds = 6;

SpaceSpec RandomSweepSpec(int kind, int n, Rng& rng) {
  static const double kPlain[] = {1.0, 1.5, 2.0, 3.0, INFINITY};
  if (kind < 5 || n < 2) {
    return SpaceSpec::Plain(n, Exponent(kPlain[std::min(kind, 4)]));
  }
  const int first = rng.Int(1, n - 1);
  return SpaceSpec({{first, Exponent(1.5)}, {n - first, Exponent(3.0)}},
                   Exponent(4.0));
}

Matrix L14Rows() {
  Matrix rows(2, 4);
  rows << 1, 2, 0, 0, -1, 0, 2, 0;
  return rows;
}

CriterionResult L14Example(SuiteContext& ctx) {
  CriterionResult c{1, "l1^4 worked example", false, 0.0, ""};
  const auto start = Clock::now();
  const SpaceSpec spec = SpaceSpec::Plain(4, Exponent(1.0));
  const SubspaceBasis y(L14Rows(), 4);
  const Vector x0 = Vector::Ones(4);
  const ApproxResult r = BestApproximation(x0, y, spec);
  c.seconds = Since(start);
  ctx.results.push_back(r);

  Vector expected(4);
  expected << 0, 1, 1, 0;
  const bool dist_ok = std::abs(r.distance - 2.0) <= 1e-9;
  const bool expected_point = (r.best_approx - expected).cwiseAbs().maxCoeff() <= 1e-7;
  const bool other_point = std::abs(Norm(spec, x0 - r.best_approx) - 2.0) <= 1e-9 &&
                           ResidualOrthogonalityCheck(r, y, spec);
  const bool cert_ok =
      std::abs(r.certificate.z.cwiseAbs().maxCoeff() - 1.0) <= 1e-9 &&
      std::abs(std::abs(x0.dot(r.certificate.z)) - 2.0) <= 1e-9 &&
      r.certificate.kernel_residual <= 1e-9;
  c.passed = dist_ok && (expected_point || other_point) && cert_ok && c.seconds < 0.1;
  std::ostringstream os;
  const Eigen::IOFormat inline_fmt(6, Eigen::DontAlignCols, ", ", ", ", "", "", "(", ")");
  const Vector shown = (r.best_approx.array().abs() < 1e-12).select(0.0, r.best_approx);
  os << "distance " << r.distance << ", minimizer " << shown.transpose().format(inline_fmt)
     << ", pairing " << r.certificate.pairing;
  c.detail = os.str();
  return c;
}

CriterionResult L13Example(SuiteContext& ctx) {
  CriterionResult c{2, "l1^3 worked example", false, 0.0, ""};
  const auto start = Clock::now();
  const SpaceSpec spec = SpaceSpec::Plain(3, Exponent(1.0));
  Matrix rows(1, 3);
  rows << 0, 0, 1;
  const SubspaceBasis y(rows, 3);
  Vector x0(3);
  x0 << 0, 0.5, 0.5;
  const ApproxResult r = BestApproximation(x0, y, spec);
  const std::vector<Vector> sampled = SampleMinimizers(x0, y, spec, 8, ctx.seed);
  const UniquenessVerdict verdict = UniquenessCertificate(x0, y, spec);
  c.seconds = Since(start);
  ctx.results.push_back(r);

  Vector expected(3);
  expected << 0, 0, 0.5;
  double spread = 0.0;
  for (const Vector& p : sampled) {
    spread = std::max(spread, (p - r.best_approx).cwiseAbs().maxCoeff());
  }
  c.passed = std::abs(r.distance - 0.5) <= 1e-9 &&
             (r.best_approx - expected).cwiseAbs().maxCoeff() <= 1e-7 &&
             r.unique == Uniqueness::kYes && spread <= 1e-6 &&
             verdict == UniquenessVerdict::kInconclusive && c.seconds < 0.1;
  c.detail = Format("distance %.12g, unique %s, probe spread %.2e, certificate %s",
                    r.distance, ToString(r.unique), spread, ToString(verdict));
  return c;
}

CriterionResult MinimizationExample(SuiteContext& ctx) {
  CriterionResult c{3, "ten-dimensional minimization example", false, 0.0, ""};
  const auto start = Clock::now();
  Matrix rows(10, 10);
  rows << -9, 1, 1, 3, 6, 8, 0, 7, 9, 12,
          7, 0, 5, 9, 5, 3, 2, 7, 1, 6.5,
          9, -4, 3, -4, 7, 8, 8, 1, 9, 13,
          9, 1, 6, 3, -1, -1, -7, 0, 5, -1.5,
          8, 3, 4, 8, 6, 0, 3, 5, -3, 2.5,
          9, 3, -8, 2, 1, 2, 0, 2, 7, 5.5,
          6, -2, 9, 5, 8, 1, 4, 1, 5, 5.5,
          7, 6, 7, 9, 8, 3, 2, 1, 3, 4.5,
          -8, 0, 0, 1, -6, 9, 0, 4, 9, 11,
          8, 9, 2, 7, 5, 5, 6, 9, 8, 14;
  const SpaceSpec spec({{1, Exponent(5.0)},
                        {2, Exponent(7.0)},
                        {3, Exponent(3.0)},
                        {2, Exponent(11.0)},
                        {2, Exponent(9.0)}},
                       Exponent(5.0));
  const SubspaceBasis y(rows, 10);
  Vector kernel(10);
  kernel << 0, 0, 0, 0, 0, 1, 1, 1, 1, -2;
  kernel.normalize();
  bool kernel_ok = y.kernel().dim() == 1;
  if (kernel_ok) {
    const Vector v = y.kernel().vectors.col(0);
    kernel_ok = (v - v.dot(kernel) * kernel).norm() <= 1e-9;
  }
  const double k_const = std::pow(
      1.0 + std::pow(2.0, 25.0 / 22.0) +
          std::pow(1.0 + std::pow(2.0, 9.0 / 8.0), 10.0 / 9.0),
      4.0 / 5.0);
  Rng rng(ctx.seed + 3);
  double worst = 0.0;
  bool all_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    const Vector alpha = rng.NormalVector(10);
    const double expected =
        std::abs(alpha[5] + alpha[6] + alpha[7] + alpha[8] - 2.0 * alpha[9]) / k_const;
    const ApproxResult r = BestApproximation(alpha, y, spec);
    ctx.results.push_back(r);
    const double err = std::abs(r.distance - expected) / std::max(expected, 1e-300);
    const double dual_err =
        std::abs(std::abs(r.certificate.pairing) - expected) / std::max(expected, 1e-300);
    worst = std::max({worst, err, dual_err});
    all_ok = all_ok && err <= 1e-6 && dual_err <= 1e-6;
  }
  c.seconds = Since(start);
  c.passed = kernel_ok && all_ok && c.seconds < 2.0;
  c.detail = Format("constant %.6f, worst relative error %.2e, kernel %s", k_const,
                    worst, kernel_ok ? "matches" : "differs");
  return c;
}

CriterionResult PlanarClosedForms(SuiteContext& ctx) {
  CriterionResult c{4, "planar closed forms", false, 0.0, ""};
  const auto start = Clock::now();
  Rng rng(ctx.seed + 4);
  const double exponents[] = {1.0, 1.5, 2.0, 3.0, INFINITY};
  double worst = 0.0;
  double worst_forms = 0.0;
  int checked = 0;
  bool ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    double a, b, cc, d;
    do {
      a = rng.Normal();
      b = rng.Normal();
      cc = rng.Normal();
      d = rng.Normal();
    } while (std::abs(a * d - b * cc) <= 1e-3);
    const double det = std::abs(a * d - b * cc);
    Vector x0(2);
    x0 << a, b;
    Matrix rows(1, 2);
    rows << cc, d;
    const SubspaceBasis y(rows, 2);
    Vector line(2);
    line << cc, d;
    for (double pv : exponents) {
      const Exponent p(pv);
      const double expected = det / LpNorm(line, ConjugateExponent(p));
      const ApproxResult r = BestApproximation(x0, y, SpaceSpec::Plain(2, p));
      const double err = std::abs(r.distance - expected) / expected;
      worst = std::max(worst, err);
      ok = ok && err <= 1e-8 && r.converged;
      ++checked;
      if (p.is_one()) {
        const double ad = std::abs(d);
        const double ac = std::abs(cc);
        const double alt = 2.0 * det / (ad + ac + std::abs(ad - ac));
        const double forms = std::abs(alt - expected) / expected;
        worst_forms = std::max(worst_forms, forms);
        ok = ok && forms <= 1e-12;
      }
    }
  }
  c.seconds = Since(start);
  c.passed = ok && c.seconds < 5.0;
  c.detail = Format("%d solves, worst relative error %.2e, l1 forms agree to %.2e",
                    checked, worst, worst_forms);
  return c;
}

CriterionResult OracleEquivalence(SuiteContext& ctx) {
  CriterionResult c{5, "brute-force oracle equivalence", false, 0.0, ""};
  const auto start = Clock::now();
  Rng rng(ctx.seed + 5);
  OracleConfig cfg;
  cfg.seed = ctx.seed;
  double worst_solver = 0.0;
  double worst_oracles = 0.0;
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.Int(2, 6);
    const int m = rng.Int(std::max(1, n - 4), std::min(3, n - 1));
    const SpaceSpec spec = RandomSweepSpec(trial % kSpecKinds, n, rng);
    const SubspaceBasis y(rng.NormalMatrix(m, n), n);
    const Vector x0 = rng.NormalVector(n);
    const ApproxResult r = BestApproximation(x0, y, spec);
    ctx.results.push_back(r);
    const double primal = BruteForceDistance(x0, y, spec, cfg);
    const double dual = BruteForceSphereMax(x0, y.kernel(), DualSpec(spec), cfg);
    const double solver_err = std::abs(r.distance - primal) / (1.0 + r.distance);
    const double oracle_gap = std::abs(primal - dual);
    worst_solver = std::max(worst_solver, solver_err);
    worst_oracles = std::max(worst_oracles, oracle_gap);
    if (solver_err > 1e-4 || oracle_gap > 2e-4) ++failures;
  }
  c.seconds = Since(start);
  c.passed = failures == 0 && c.seconds < 60.0;
  c.detail = Format("200 instances, %d failures, worst solver error %.2e, "
                    "worst oracle gap %.2e",
                    failures, worst_solver, worst_oracles);
  return c;
}

CriterionResult DualityGaps(SuiteContext& ctx) {
  CriterionResult c{6, "duality gap of converged results", false, 0.0, ""};
  const auto start = Clock::now();
  int converged = 0;
  int violations = 0;
  double worst = 0.0;
  for (const ApproxResult& r : ctx.results) {
    if (!r.converged) continue;
    ++converged;
    const double scaled = std::abs(r.duality_gap) / (1.0 + r.distance);
    worst = std::max(worst, scaled);
    if (scaled > 1e-7) ++violations;
  }
  const int unconverged = static_cast<int>(ctx.results.size()) - converged;
  c.seconds = Since(start);
  c.passed = violations == 0 && unconverged == 0 && converged > 0;
  c.detail = Format("%d converged, %d unconverged, worst scaled gap %.2e",
                    converged, unconverged, worst);
  return c;
}

CriterionResult HolderStrengthening(SuiteContext& ctx) {
  CriterionResult c{7, "Hoelder strengthening and optimality", false, 0.0, ""};
  const auto start = Clock::now();
  Rng rng(ctx.seed + 7);
  int holder_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = rng.Int(2, 8);
    Vector u, v;
    do {
      u = rng.NormalVector(m);
      v = rng.NormalVector(m);
    } while (u.cwiseProduct(v).isZero(0.0));
    const Exponent p(std::exp(rng.Uniform(std::log(1.05), std::log(20.0))));
    OracleConfig cfg;
    cfg.seed = ctx.seed + static_cast<std::uint64_t>(trial);
    if (!HolderCheck(u, v, p, cfg).holds) ++holder_failures;
  }
  int mixed_failures = 0;
  int loose = 0;
  double worst_gap = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int nblocks = rng.Int(1, 3);
    std::vector<Block> blocks;
    int m = 0;
    for (int i = 0; i < nblocks; ++i) {
      const int dim = rng.Int(1, std::max(1, (8 - m) - (nblocks - 1 - i)));
      blocks.push_back({dim, Exponent(rng.Uniform(1.2, 8.0))});
      m += dim;
    }
    if (m < 2) {
      blocks.push_back({1, Exponent(2.0)});
      m += 1;
    }
    const SpaceSpec spec(blocks, Exponent(rng.Uniform(1.2, 8.0)));
    const Vector x = rng.NormalVector(m);
    const Vector a = rng.NormalVector(m);
    Vector b = rng.NormalVector(m);
    b -= (a.dot(b) / a.squaredNorm()) * a;
    OracleConfig cfg;
    cfg.seed = ctx.seed + static_cast<std::uint64_t>(trial);
    const MixedInequalityReport r =
        MixedInequalityCheck(x, a, spec, rng.Normal(), b, cfg);
    if (!r.holds) ++mixed_failures;
    if (!r.tight) ++loose;
    worst_gap = std::max(worst_gap, r.relative_gap);
  }
  c.seconds = Since(start);
  c.passed = holder_failures == 0 && mixed_failures == 0 && loose == 0 &&
             c.seconds < 30.0;
  c.detail = Format("Hoelder failures %d/1000, mixed failures %d/500, "
                    "not tight %d, worst optimality gap %.2e",
                    holder_failures, mixed_failures, loose, worst_gap);
  return c;
}

CriterionResult CharacterizationConsistency(SuiteContext& ctx) {
  CriterionResult c{8, "optimality characterizations agree", false, 0.0, ""};
  const auto start = Clock::now();
  Rng rng(ctx.seed + 8);
  int disagreements = 0;
  int optimal = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.Int(2, 6);
    const int m = rng.Int(1, n - 1);
    const SpaceSpec spec = RandomSweepSpec(trial % kSpecKinds, n, rng);
    const SubspaceBasis y(rng.NormalMatrix(m, n), n);
    const Vector x0 = rng.NormalVector(n);
    ApproxResult r = BestApproximation(x0, y, spec);
    Vector y0 = r.best_approx;
    if (trial % 2 == 1) {
      // Move off the minimizer along one spanning vector.
      const double delta = (rng.Int(0, 1) ? 1.0 : -1.0) * rng.Uniform(0.05, 0.5);
      y0 += delta * y.rows().row(rng.Int(0, m - 1)).transpose();
    }
    r.residual = x0 - y0;
    const bool restricted = RestrictionNormEquality(x0, y0, y, spec);
    const bool orthogonal = ResidualOrthogonalityCheck(r, y, spec, 1e-7);
    if (restricted != orthogonal) ++disagreements;
    if (restricted) ++optimal;
  }
  c.seconds = Since(start);
  c.passed = disagreements == 0;
  c.detail = Format("300 instances, %d judged optimal, %d disagreements", optimal,
                    disagreements);
  return c;
}

CriterionResult EqualDistance(SuiteContext& ctx) {
  CriterionResult c{9, "equal-distance diagnosis", false, 0.0, ""};
  const auto start = Clock::now();
  Rng rng(ctx.seed + 9);
  int aligned_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.Int(2, 6);
    const int m = rng.Int(1, n - 1);
    const int j = rng.Int(0, n - 1);
    Matrix rows = rng.NormalMatrix(m, n);
    rows.col(j).setZero();
    const double lambda = (rng.Int(0, 1) ? 1.0 : -1.0) * rng.Uniform(0.5, 2.0);
    const SubspaceBasis y(rows, n);
    const Vector x = lambda * Vector::Unit(n, j) + rows.transpose() * rng.NormalVector(m);
    const double p1 = rng.Uniform(1.2, 6.0);
    double p2 = rng.Uniform(1.2, 6.0);
    if (p2 == p1) p2 += 0.5;
    const EqualDistanceResult r = EqualDistanceDiagnose(x, y, Exponent(p1), Exponent(p2));
    const bool ok = r.equal && r.index && *r.index == j && r.lambda &&
                    std::abs(*r.lambda - lambda) <= 1e-7 && r.consistent;
    if (!ok) ++aligned_failures;
  }
  int generic_failures = 0;
  int generic_equal = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.Int(2, 6);
    const int m = rng.Int(1, n - 1);
    const SubspaceBasis y(rng.NormalMatrix(m, n), n);
    const Vector x = rng.NormalVector(n);
    const EqualDistanceResult r =
        EqualDistanceDiagnose(x, y, Exponent(1.5), Exponent(3.0));
    if (r.equal) ++generic_equal;
    if (r.equal && !r.axis_aligned) ++generic_failures;
  }
  c.seconds = Since(start);
  c.passed = aligned_failures == 0 && generic_failures == 0;
  c.detail = Format("aligned failures %d/100, generic equal %d/100 "
                    "(%d without aligned residual)",
                    aligned_failures, generic_equal, generic_failures);
  return c;
}

using CriterionFn = CriterionResult (*)(SuiteContext&);

constexpr CriterionFn kCriteria[] = {
    L14Example,      L13Example,          MinimizationExample,
    PlanarClosedForms, OracleEquivalence, DualityGaps,
    HolderStrengthening, CharacterizationConsistency, EqualDistance,
};

}  // namespace

int SelfTestCount() { return static_cast<int>(std::size(kCriteria)); }

std::vector<CriterionResult> RunSelfTest(const CriterionCallback& on_result,
                                         std::uint64_t seed) {
  SuiteContext ctx;
  ctx.seed = seed;
  std::vector<CriterionResult> results;
  for (int i = 0; i < SelfTestCount(); ++i) {
    CriterionResult r;
    try {
      r = kCriteria[i](ctx);
    } catch (const std::exception& e) {
      r.id = i + 1;
      r.title = "criterion " + std::to_string(i + 1);
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace bjapprox
