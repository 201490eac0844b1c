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

#include <algorithm>
#include <cmath>
#include <random>
#include <limits>

#include <gtest/gtest.h>

#include "approx.hpp"
#include "descent.hpp"

namespace bjapprox {
namespace {

constexpr double kInfP = std::numeric_limits<double>::infinity();

const Exponent kInf = Exponent::Infinity();

Matrix L14Rows() { return Matrix{{1, 2, 0, 0}, {-1, 0, 2, 0}}; }

Vector RandomVector(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  Vector v(n);
  for (auto& x : v) x = normal(gen);
  return v;
}

// Oracle for a one-dimensional Y = span(d): the distance is a convex
// function of the coefficient, minimized by golden section on a bracket
// that must contain the minimizer (|t| <= 2 N(x0) / N(d)).
double LineDistance(const Vector& x0, const Vector& d, const SpaceSpec& spec) {
  const double r = 2 * Norm(spec, x0) / Norm(spec, d);
  return MinimizeConvex1D([&](double t) { return Norm(spec, x0 - t * d); }, -r, r).value;
}

// Oracle for a two-dimensional Y: nested golden sections.
double PlaneDistance(const Vector& x0, const Vector& d1, const Vector& d2,
                     const SpaceSpec& spec) {
  const double r = 4 * Norm(spec, x0) * (1 / Norm(spec, d1) + 1 / Norm(spec, d2));
  auto inner = [&](double a) { return LineDistance(x0 - a * d1, d2, spec); };
  return MinimizeConvex1D(inner, -r, r).value;
}

void ExpectOptimalityIdentities(const ApproxResult& r, const Vector& x0,
                                const SubspaceBasis& y, const SpaceSpec& spec) {
  ASSERT_TRUE(r.converged);
  EXPECT_TRUE(y.Contains(r.best_approx));
  EXPECT_LE((x0 - r.best_approx - r.residual).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(Norm(spec, r.residual), r.distance, 1e-8 * (1 + r.distance));
  EXPECT_NEAR(std::abs(r.certificate.pairing), r.distance, 1e-7 * (1 + r.distance));
  EXPECT_NEAR(r.certificate.dual_norm, 1.0, 1e-9);
  EXPECT_LE(r.certificate.kernel_residual, 1e-9);
  EXPECT_LE(std::abs(r.duality_gap), 1e-7 * (1 + r.distance));
}

TEST(BestApproximationTest, L14Example) {
  const SubspaceBasis y(L14Rows(), 4);
  const SpaceSpec spec = SpaceSpec::Plain(4, Exponent(1));
  const ApproxResult r = BestApproximation(Vector::Ones(4), y, spec);
  ExpectOptimalityIdentities(r, Vector::Ones(4), y, spec);
  EXPECT_NEAR(r.distance, 2.0, 1e-12);
  EXPECT_LE((r.best_approx - Vector{{0, 1, 1, 0}}).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((r.certificate.z - Vector{{1, -0.5, 0.5, 1}}).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(r.primal_method, "lp_vertex");
  EXPECT_EQ(r.dual_method, "lp_vertex");
  // Any move (a, b) away from (1/2, 1/2) raises |1-a+b| + |1-2a| + |1-2b| + 1.
  EXPECT_EQ(r.unique, Uniqueness::kYes);
}

TEST(BestApproximationTest, L13ExampleAndCertificate) {
  const SubspaceBasis y(Matrix{{0, 0, 1}}, 3);
  const SpaceSpec spec = SpaceSpec::Plain(3, Exponent(1));
  const Vector x0{{0, 0.5, 0.5}};
  const ApproxResult r = BestApproximation(x0, y, spec);
  ExpectOptimalityIdentities(r, x0, y, spec);
  EXPECT_NEAR(r.distance, 0.5, 1e-12);
  EXPECT_LE((r.best_approx - Vector{{0, 0, 0.5}}).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(r.unique, Uniqueness::kYes);
  EXPECT_EQ(UniquenessCertificate(x0, y, spec), UniquenessVerdict::kInconclusive);
}

TEST(BestApproximationTest, DegenerateInputIsItsOwnApproximation) {
  const SubspaceBasis y(L14Rows(), 4);
  const Vector x0{{0, 2, 2, 0}};
  const ApproxResult r = BestApproximation(x0, y, SpaceSpec::Plain(4, Exponent(1)));
  EXPECT_EQ(r.distance, 0.0);
  EXPECT_TRUE(r.certificate.degenerate);
  EXPECT_LE((r.best_approx - x0).norm(), 1e-12);
  EXPECT_NE(std::find(r.warnings.begin(), r.warnings.end(), kDegenerateWarning),
            r.warnings.end());
  EXPECT_EQ(r.unique, Uniqueness::kYes);
  EXPECT_TRUE(r.converged);
}

TEST(BestApproximationTest, EuclideanIsOrthogonalProjection) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 4;
    Matrix rows(1 + trial % (n - 1), n);
    for (int i = 0; i < rows.rows(); ++i) rows.row(i) = RandomVector(n, gen);
    const Vector x0 = RandomVector(n, gen);
    const SubspaceBasis y(rows, n);
    const ApproxResult r = BestApproximation(x0, y, SpaceSpec::Plain(n, Exponent(2)));
    const Vector coeff = rows.transpose().colPivHouseholderQr().solve(x0);
    const Vector projection = rows.transpose() * coeff;
    EXPECT_LE((r.best_approx - projection).norm(), 1e-8);
    EXPECT_NEAR(r.distance, (x0 - projection).norm(), 1e-10);
    EXPECT_EQ(r.unique, Uniqueness::kYes);
  }
  const ApproxResult simple = BestApproximation(Vector{{2, 1}}, SubspaceBasis(Matrix{{1, 1}}, 2),
                                                SpaceSpec::Plain(2, Exponent(2)));
  EXPECT_NEAR(simple.distance, 1 / std::sqrt(2.0), 1e-12);
}

TEST(BestApproximationTest, ConstantsUnderLinfAndL1) {
  // Distance to the constants: half the range under l_inf, the sum of
  // absolute deviations from a median under l_1.
  std::mt19937_64 gen(32);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 5;
    const Vector x0 = RandomVector(n, gen);
    const SubspaceBasis y(Matrix::Ones(1, n), n);
    const ApproxResult cheb = BestApproximation(x0, y, SpaceSpec::Plain(n, kInf));
    EXPECT_NEAR(cheb.distance, (x0.maxCoeff() - x0.minCoeff()) / 2, 1e-10);
    std::vector<double> sorted(x0.begin(), x0.end());
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[static_cast<size_t>(n / 2)];
    const ApproxResult l1 = BestApproximation(x0, y, SpaceSpec::Plain(n, Exponent(1)));
    EXPECT_NEAR(l1.distance, (x0.array() - median).abs().sum(), 1e-10);
    EXPECT_EQ(l1.unique, n % 2 ? Uniqueness::kYes : Uniqueness::kNo);
  }
  const ApproxResult fixed = BestApproximation(
      Vector{{1, -2, 0.5}}, SubspaceBasis(Matrix::Ones(1, 3), 3), SpaceSpec::Plain(3, kInf));
  EXPECT_NEAR(fixed.distance, 1.5, 1e-12);
}

TEST(BestApproximationTest, MatchesGoldenSectionOracle) {
  std::mt19937_64 gen(33);
  const std::vector<SpaceSpec> specs = {
      SpaceSpec::Plain(4, Exponent(1)), SpaceSpec::Plain(4, Exponent(1.5)),
      SpaceSpec::Plain(4, Exponent(3)), SpaceSpec::Plain(4, kInf),
      SpaceSpec({{2, Exponent(1.5)}, {2, Exponent(3)}}, Exponent(4)),
      SpaceSpec({{1, Exponent(1)}, {3, Exponent(1)}}, kInf),
      SpaceSpec({{2, Exponent(1)}, {2, Exponent(2)}}, Exponent(1))};
  for (const SpaceSpec& spec : specs) {
    for (int trial = 0; trial < 8; ++trial) {
      const Vector x0 = RandomVector(4, gen);
      const Vector d1 = RandomVector(4, gen);
      const Vector d2 = RandomVector(4, gen);
      const bool plane = trial % 2;
      Matrix rows = plane ? Matrix(2, 4) : Matrix(1, 4);
      rows.row(0) = d1;
      if (plane) rows.row(1) = d2;
      const SubspaceBasis y(rows, 4);
      const ApproxResult r = BestApproximation(x0, y, spec);
      ExpectOptimalityIdentities(r, x0, y, spec);
      const double expected = plane ? PlaneDistance(x0, d1, d2, spec) : LineDistance(x0, d1, spec);
      EXPECT_NEAR(r.distance, expected, 1e-6 * (1 + expected)) << spec.ToJson();
      EXPECT_TRUE(ResidualOrthogonalityCheck(r, y, spec, 1e-7));
    }
  }
}

TEST(BestApproximationTest, NonUniqueMinimizersAreDetected) {
  const SubspaceBasis y(Matrix{{0, 1}}, 2);
  const SpaceSpec spec = SpaceSpec::Plain(2, kInf);
  const Vector x0{{1, 0}};
  const ApproxResult r = BestApproximation(x0, y, spec);
  EXPECT_NEAR(r.distance, 1.0, 1e-12);
  EXPECT_EQ(r.unique, Uniqueness::kNo);
  const std::vector<Vector> samples = SampleMinimizers(x0, y, spec, 6, 5);
  ASSERT_EQ(samples.size(), 6u);
  double spread = 0.0;
  for (const Vector& s : samples) {
    EXPECT_TRUE(y.Contains(s));
    EXPECT_NEAR(Norm(spec, x0 - s), 1.0, 1e-9);
    spread = std::max(spread, (s - samples[0]).norm());
  }
  EXPECT_GT(spread, 1e-3);
}

TEST(BestApproximationTest, StrictlyConvexIsUniqueAndMixedKinkIsUnknown) {
  const SubspaceBasis y(Matrix{{1, 2, 3}}, 3);
  const Vector x0{{1, 0, -1}};
  EXPECT_EQ(BestApproximation(x0, y, SpaceSpec::Plain(3, Exponent(1.7))).unique,
            Uniqueness::kYes);
  const SpaceSpec mixed({{1, Exponent(2)}, {2, Exponent(1)}}, Exponent(3));
  EXPECT_EQ(BestApproximation(x0, y, mixed).unique, Uniqueness::kUnknown);
}

TEST(BestApproximationTest, DeterministicAndDimensionChecked) {
  const SpaceSpec spec({{2, Exponent(1.5)}, {2, Exponent(1)}}, Exponent(2));
  const SubspaceBasis y(L14Rows(), 4);
  ApproxOptions options;
  options.seed = 17;
  const ApproxResult a = BestApproximation(Vector::Ones(4), y, spec, options);
  const ApproxResult b = BestApproximation(Vector::Ones(4), y, spec, options);
  EXPECT_EQ(a.distance, b.distance);
  EXPECT_EQ(a.best_approx, b.best_approx);
  try {
    BestApproximation(Vector::Ones(3), y, spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(DistanceTest, AgreesWithPrimal) {
  const SubspaceBasis y(L14Rows(), 4);
  for (double p : {1.0, 1.5, 2.0, 6.0, kInfP}) {
    const SpaceSpec spec = SpaceSpec::Plain(4, Exponent(p));
    const DistanceResult d = Distance(Vector::Ones(4), y, spec);
    const ApproxResult r = BestApproximation(Vector::Ones(4), y, spec);
    EXPECT_NEAR(d.value, r.distance, 1e-8);
  }
}

TEST(DistanceTest, EmptyBasisGivesTheNorm) {
  const SubspaceBasis y(Matrix(0, 3), 3);
  const SpaceSpec spec = SpaceSpec::Plain(3, Exponent(3));
  const Vector x0{{1, -2, 0.5}};
  EXPECT_NEAR(Distance(x0, y, spec).value, Norm(spec, x0), 1e-10);
}

TEST(DistanceTest, FullBasisGivesZero) {
  const SubspaceBasis y(Matrix::Identity(3, 3), 3);
  const DistanceResult d = Distance(Vector::Ones(3), y, SpaceSpec::Plain(3, Exponent(1)));
  EXPECT_EQ(d.value, 0.0);
  EXPECT_TRUE(d.certificate.degenerate);
}

TEST(OrthogonalityTest, EuclideanMeansZeroInnerProduct) {
  std::mt19937_64 gen(34);
  const SpaceSpec spec = SpaceSpec::Plain(3, Exponent(2));
  for (int i = 0; i < 50; ++i) {
    const Vector x = RandomVector(3, gen);
    Vector y = RandomVector(3, gen);
    if (i % 2) y -= x * (x.dot(y) / x.squaredNorm());
    const OrthogonalityResult r = BirkhoffJamesOrthogonal(x, y, spec);
    EXPECT_EQ(r.orthogonal, i % 2 == 1);
    EXPECT_NEAR(r.lambda, -x.dot(y) / y.squaredNorm(), 1e-6);
  }
}

TEST(OrthogonalityTest, L1ExamplesAndAsymmetry) {
  const SpaceSpec spec = SpaceSpec::Plain(4, Exponent(1));
  const Vector x{{1, 0, 0, 1}};
  // |1 + l| + 2|l| + 1 is minimized at l = 0.
  EXPECT_TRUE(BirkhoffJamesOrthogonal(x, Vector{{1, 2, 0, 0}}, spec).orthogonal);
  // |1 + l| + 1 reaches 1 at l = -1.
  const OrthogonalityResult no = BirkhoffJamesOrthogonal(x, Vector{{1, 0, 0, 0}}, spec);
  EXPECT_FALSE(no.orthogonal);
  EXPECT_NEAR(no.min_value, 1.0, 1e-9);
  // The relation is not symmetric: in l_inf, (1, 1) is orthogonal to (1, 0)
  // but (1, 0) - (1, 1) / 2 has norm 1/2.
  const SpaceSpec linf = SpaceSpec::Plain(2, kInf);
  EXPECT_TRUE(BirkhoffJamesOrthogonal(Vector{{1, 1}}, Vector{{1, 0}}, linf).orthogonal);
  EXPECT_FALSE(BirkhoffJamesOrthogonal(Vector{{1, 0}}, Vector{{1, 1}}, linf).orthogonal);
  EXPECT_THROW(BirkhoffJamesOrthogonal(Vector::Zero(4), x, spec), Error);
}

TEST(UniquenessCertificateTest, LinfAndL1Cases) {
  // l_inf with a one-dimensional kernel: the l_1 dual vector is smooth iff
  // it has no zero coordinate.
  const SpaceSpec linf = SpaceSpec::Plain(3, kInf);
  EXPECT_EQ(UniquenessCertificate(Vector{{1, 0, 0}}, SubspaceBasis(Matrix{{1, -1, 0}, {0, 1, -1}}, 3), linf),
            UniquenessVerdict::kSufficient);
  EXPECT_EQ(UniquenessCertificate(Vector{{1, 0, 0}}, SubspaceBasis(Matrix{{0, 0, 1}, {0, 1, 0}}, 3), linf),
            UniquenessVerdict::kInconclusive);
  EXPECT_EQ(UniquenessCertificate(Vector{{1, 0, 0}}, SubspaceBasis(Matrix{{0, 0, 1}}, 3), linf),
            UniquenessVerdict::kInconclusive);
  EXPECT_THROW(UniquenessCertificate(Vector{{1, 0}}, SubspaceBasis(Matrix{{0, 1}}, 2),
                                     SpaceSpec::Plain(2, Exponent(2))),
               Error);
}

TEST(EqualDistanceTest, CoordinateResidualIsConsistent) {
  const SubspaceBasis y(Matrix{{1, 0, 0}, {0, 1, 0}}, 3);
  const EqualDistanceResult r =
      EqualDistanceDiagnose(Vector{{0.3, -1, 2}}, y, Exponent(1.5), Exponent(4));
  EXPECT_TRUE(r.equal);
  EXPECT_NEAR(r.distance1, 2.0, 1e-9);
  ASSERT_TRUE(r.index.has_value());
  EXPECT_EQ(*r.index, 2);
  EXPECT_NEAR(*r.lambda, 2.0, 1e-8);
  EXPECT_TRUE(r.axis_aligned);
  EXPECT_TRUE(r.basis_in_hyperplane);
  EXPECT_TRUE(r.consistent);
}

TEST(EqualDistanceTest, GenericDistancesDiffer) {
  const SubspaceBasis y(Matrix{{1, 1, 0}}, 3);
  const EqualDistanceResult r =
      EqualDistanceDiagnose(Vector{{1, 2, 3}}, y, Exponent(1.5), Exponent(3));
  EXPECT_FALSE(r.equal);
  EXPECT_GT(r.distance1, r.distance2);
  EXPECT_TRUE(r.consistent);
  EXPECT_THROW(EqualDistanceDiagnose(Vector{{1, 1, 0}}, y, Exponent(1.5), Exponent(3)), Error);
}

TEST(RestrictionNormTest, HoldsExactlyAtBestApproximations) {
  const SubspaceBasis y(L14Rows(), 4);
  const SpaceSpec spec = SpaceSpec::Plain(4, Exponent(1));
  EXPECT_TRUE(RestrictionNormEquality(Vector::Ones(4), Vector{{0, 1, 1, 0}}, y, spec));
  EXPECT_FALSE(RestrictionNormEquality(Vector::Ones(4), Vector::Zero(4), y, spec));
  EXPECT_THROW(RestrictionNormEquality(Vector::Ones(4), Vector::Ones(4), y, spec), Error);
}

}  // namespace
}  // namespace bjapprox
