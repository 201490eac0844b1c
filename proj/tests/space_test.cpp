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

#include "space.hpp"

namespace bjapprox {
namespace {

constexpr double kInfP = std::numeric_limits<double>::infinity();

const Exponent kInf = Exponent::Infinity();

SpaceSpec ExampleSpace() {
  return SpaceSpec({{1, Exponent(5)}, {2, Exponent(7)}, {3, Exponent(3)},
                    {2, Exponent(11)}, {2, Exponent(9)}},
                   Exponent(5));
}

Vector Vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

TEST(ExponentTest, RejectsValuesBelowOneAndNan) {
  EXPECT_THROW(Exponent(0.5), Error);
  EXPECT_THROW(Exponent(std::nan("")), Error);
  EXPECT_TRUE(Exponent(kInfP).is_infinite());
}

TEST(ExponentTest, ConjugatePairs) {
  EXPECT_EQ(ConjugateExponent(Exponent(2)), Exponent(2));
  EXPECT_EQ(ConjugateExponent(Exponent(1)), kInf);
  EXPECT_EQ(ConjugateExponent(kInf), Exponent(1));
  EXPECT_NEAR(ConjugateExponent(Exponent(7)).value(), 7.0 / 6.0, 1e-15);
}

TEST(ExponentTest, ConjugateIsAnInvolution) {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> dist(1.0001, 50.0);
  for (int i = 0; i < 200; ++i) {
    const double p = dist(gen);
    const double back = ConjugateExponent(ConjugateExponent(Exponent(p))).value();
    EXPECT_NEAR(back, p, 1e-12 * p);
  }
}

TEST(SpaceSpecTest, ParsesFullAndShorthandForms) {
  const SpaceSpec full = SpaceSpec::FromJson(
      R"({"outer_p": 5, "blocks": [{"dim": 1, "p": 5}, {"dim": 2, "p": "inf"}]})");
  EXPECT_EQ(full.dimension(), 3);
  EXPECT_TRUE(full.blocks()[1].p.is_infinite());
  const SpaceSpec plain = SpaceSpec::FromJson(R"({"p": "INF", "dim": 4})");
  EXPECT_EQ(plain, SpaceSpec::Plain(4, kInf));
  EXPECT_EQ(SpaceSpec::FromJson(full.ToJson()), full);
}

TEST(SpaceSpecTest, MalformedJsonIsAParseError) {
  for (const char* bad : {"{", R"({"p": 2})",
                          R"({"blocks": [{"dim": 1, "p": 2}, {"dim": 1, "p": 2}]})",
                          R"({"p": "two", "dim": 2})", R"({"p": 2, "dim": 0})"}) {
    try {
      SpaceSpec::FromJson(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(SpaceSpecTest, OutOfRangeExponentIsInvalid) {
  try {
    SpaceSpec::FromJson(R"({"p": 0.5, "dim": 2})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(NormTest, WorkedValues) {
  EXPECT_DOUBLE_EQ(Norm(SpaceSpec::Plain(4, Exponent(1)), Vector::Ones(4)), 4.0);
  EXPECT_DOUBLE_EQ(Norm(SpaceSpec::Plain(2, Exponent(2)), Vec({3, 4})), 5.0);
  const double expected = std::pow(1.0 + std::pow(2.0, 9.0 / 8.0), 8.0 / 9.0);
  EXPECT_NEAR(Norm(SpaceSpec::Plain(2, Exponent(9.0 / 8.0)), Vec({1, -2})), expected,
              1e-14);
  EXPECT_NEAR(expected, 2.79721, 1e-5);
}

TEST(NormTest, SingleBlockMatchesPlainNorm) {
  std::mt19937_64 gen(2);
  std::normal_distribution<double> normal;
  for (double p : {1.0, 1.5, 3.0, kInfP}) {
    const SpaceSpec single({{5, Exponent(p)}}, Exponent(2.0));
    for (int i = 0; i < 20; ++i) {
      Vector x(5);
      for (auto& v : x) v = normal(gen);
      EXPECT_NEAR(Norm(single, x), LpNorm(x, Exponent(p)), 1e-14);
    }
  }
}

TEST(NormTest, MixedNormIsOuterNormOfBlockNorms) {
  const SpaceSpec spec = ExampleSpace();
  Vector x(10);
  x << 1, -2, 3, 0.5, -1, 2, 4, -3, 0.25, 1;
  double acc = std::pow(std::abs(x[0]), 5.0);
  acc += std::pow(std::pow(std::pow(2.0, 7) + std::pow(3.0, 7), 1.0 / 7), 5.0);
  acc += std::pow(std::pow(std::pow(0.5, 3) + 1.0 + 8.0, 1.0 / 3), 5.0);
  acc += std::pow(std::pow(std::pow(4.0, 11) + std::pow(3.0, 11), 1.0 / 11), 5.0);
  acc += std::pow(std::pow(std::pow(0.25, 9) + 1.0, 1.0 / 9), 5.0);
  EXPECT_NEAR(Norm(spec, x), std::pow(acc, 0.2), 1e-12);
}

TEST(NormTest, DimensionMismatchThrows) {
  try {
    Norm(SpaceSpec::Plain(3, Exponent(2)), Vector::Ones(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(NormTest, HomogeneityTriangleAndHolderPairing) {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> normal;
  const std::vector<SpaceSpec> specs = {
      SpaceSpec::Plain(6, Exponent(1)), SpaceSpec::Plain(6, Exponent(1.5)),
      SpaceSpec::Plain(6, kInf),
      SpaceSpec({{2, Exponent(1.5)}, {4, Exponent(3)}}, Exponent(4)),
      SpaceSpec({{3, Exponent(1)}, {3, kInf}}, Exponent(1))};
  for (const SpaceSpec& spec : specs) {
    const SpaceSpec dual = DualSpec(spec);
    for (int i = 0; i < 1000; ++i) {
      Vector x(6), y(6);
      for (auto& v : x) v = normal(gen);
      for (auto& v : y) v = normal(gen);
      const double alpha = 10.0 * normal(gen);
      const double nx = Norm(spec, x);
      EXPECT_NEAR(Norm(spec, alpha * x), std::abs(alpha) * nx,
                  1e-12 * std::abs(alpha) * nx);
      EXPECT_LE(Norm(spec, x + y), nx + Norm(spec, y) + 1e-10);
      EXPECT_LE(std::abs(x.dot(y)), nx * Norm(dual, y) * (1 + 1e-12));
    }
  }
}

TEST(NormTest, ZeroOnlyAtZero) {
  const SpaceSpec spec = ExampleSpace();
  EXPECT_EQ(Norm(spec, Vector::Zero(10)), 0.0);
  EXPECT_GT(Norm(spec, Vector::Unit(10, 9) * 1e-200), 0.0);
}

TEST(NormTest, ExtremeMagnitudesDoNotOverflow) {
  const Vector big = Vector::Constant(3, 1e300);
  EXPECT_NEAR(LpNorm(big, Exponent(2)) / 1e300, std::sqrt(3.0), 1e-12);
  const Vector tiny = Vector::Constant(3, 1e-300);
  EXPECT_NEAR(LpNorm(tiny, Exponent(3)) / 1e-300, std::cbrt(3.0), 1e-12);
}

TEST(DualSpecTest, ConjugatesEveryExponent) {
  EXPECT_EQ(DualSpec(SpaceSpec::Plain(4, Exponent(1))), SpaceSpec::Plain(4, kInf));
  const SpaceSpec dual = DualSpec(ExampleSpace());
  EXPECT_NEAR(dual.outer().value(), 1.25, 1e-15);
  const double expected[] = {1.25, 7.0 / 6, 1.5, 1.1, 9.0 / 8};
  for (size_t i = 0; i < 5; ++i) {
    EXPECT_NEAR(dual.blocks()[i].p.value(), expected[i], 1e-15);
    EXPECT_EQ(dual.blocks()[i].dim, ExampleSpace().blocks()[i].dim);
  }
  EXPECT_EQ(DualSpec(SpaceSpec::Plain(3, Exponent(2))), SpaceSpec::Plain(3, Exponent(2)));
}

TEST(DualityMapTest, WorkedValues) {
  const Vector c = DualityMap(Vec({3, 4}), Exponent(2));
  EXPECT_NEAR(c[0], 0.6, 1e-15);
  EXPECT_NEAR(c[1], 0.8, 1e-15);

  // Oracle: the closed formula sgn(a)|a|^{p-1} / |a|_p^{p-1}, evaluated here.
  const Vector a = Vec({1, 1});
  const double norm3 = std::cbrt(2.0);
  const double coord = 1.0 / std::pow(norm3, 2.0);
  const Vector d = DualityMap(a, Exponent(3));
  EXPECT_NEAR(d[0], coord, 1e-14);
  EXPECT_NEAR(d[0], 0.62996, 1e-5);
  EXPECT_NEAR(LpNorm(d, Exponent(1.5)), 1.0, 1e-12);
  EXPECT_NEAR(d.dot(a), LpNorm(a, Exponent(3)), 1e-12);

  for (double p : {1.3, 2.0, 5.0}) {
    const Vector e = DualityMap(Vector::Unit(4, 2), Exponent(p));
    EXPECT_NEAR((e - Vector::Unit(4, 2)).norm(), 0.0, 1e-15);
  }
}

TEST(DualityMapTest, RejectsZeroAndPolyhedralExponents) {
  EXPECT_THROW(DualityMap(Vector::Zero(3), Exponent(2)), Error);
  EXPECT_THROW(DualityMap(Vector::Ones(3), Exponent(1)), Error);
  EXPECT_THROW(DualityMap(Vector::Ones(3), kInf), Error);
}

TEST(DualityMapTest, UnitDualNormAndNormingPairing) {
  std::mt19937_64 gen(4);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> pick(1.05, 12.0);
  for (int i = 0; i < 500; ++i) {
    Vector a(5);
    for (auto& v : a) v = normal(gen);
    const Exponent p(pick(gen));
    const Vector c = DualityMap(a, p);
    EXPECT_NEAR(LpNorm(c, ConjugateExponent(p)), 1.0, 1e-10);
    EXPECT_NEAR(c.dot(a), LpNorm(a, p), 1e-10 * (1 + LpNorm(a, p)));
  }
  Vector a(3);
  a << 0.3, -1.7, 2.2;
  EXPECT_LE((DualityMap(a, Exponent(2)) - a / a.norm()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(SupportFunctionalTest, NormsTheArgument) {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> normal;
  const SpaceSpec spec({{2, Exponent(1)}, {3, Exponent(2.5)}, {1, kInf}}, kInf);
  for (int i = 0; i < 200; ++i) {
    Vector x(6);
    for (auto& v : x) v = normal(gen);
    const Vector z = SupportFunctional(spec, x);
    EXPECT_NEAR(Norm(DualSpec(spec), z), 1.0, 1e-12);
    EXPECT_NEAR(z.dot(x), Norm(spec, x), 1e-12);
  }
}

TEST(SmoothPointTest, LinfExamples) {
  const SpaceSpec linf = SpaceSpec::Plain(3, kInf);
  EXPECT_TRUE(IsSmoothPoint(linf, Vec({1, 0.5, 0.3})).smooth);
  const SmoothnessReport tied = IsSmoothPoint(linf, Vec({1, 1, 0}));
  EXPECT_FALSE(tied.smooth);
  EXPECT_EQ(tied.tight, (std::vector<int>{0, 1}));
}

// Oracle: a unit vector of l_1^n is smooth iff exactly one sign vector s
// (an extreme point of the dual ball) satisfies <s, z> = 1.
bool SmoothBySignEnumeration(const Vector& z) {
  const int n = static_cast<int>(z.size());
  int norming = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    double pairing = 0.0;
    for (int i = 0; i < n; ++i) pairing += ((mask >> i) & 1 ? 1.0 : -1.0) * z[i];
    if (std::abs(pairing - 1.0) <= 1e-12) ++norming;
  }
  return norming == 1;
}

TEST(SmoothPointTest, L1AgreesWithSignEnumeration) {
  const SpaceSpec l1 = SpaceSpec::Plain(3, Exponent(1));
  const Vector z = Vec({0.5, 0.3, 0.2});
  EXPECT_TRUE(SmoothBySignEnumeration(z));
  EXPECT_TRUE(IsSmoothPoint(l1, z).smooth);
  const Vector corner = Vec({0.5, 0.5, 0.0});
  EXPECT_FALSE(SmoothBySignEnumeration(corner));
  EXPECT_FALSE(IsSmoothPoint(l1, corner).smooth);
}

TEST(SmoothPointTest, RejectsOffSphereAndOtherSpaces) {
  try {
    IsSmoothPoint(SpaceSpec::Plain(2, kInf), Vec({2, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  try {
    IsSmoothPoint(SpaceSpec::Plain(2, Exponent(2)), Vec({1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
}

TEST(SpaceSpecTest, ClassifiesPolyhedralAndStrictlyConvex) {
  EXPECT_TRUE(SpaceSpec::Plain(3, Exponent(1)).is_polyhedral());
  EXPECT_TRUE(SpaceSpec({{2, Exponent(1)}, {2, kInf}}, kInf).is_polyhedral());
  EXPECT_TRUE(ExampleSpace().is_strictly_convex());
  EXPECT_FALSE(SpaceSpec({{2, Exponent(1)}, {2, Exponent(3)}}, Exponent(2)).is_strictly_convex());
  // A one-dimensional block's inner exponent does not affect the norm.
  EXPECT_TRUE(SpaceSpec({{1, Exponent(1)}, {2, Exponent(3)}}, Exponent(2)).is_strictly_convex());
  EXPECT_EQ(SpaceSpec({{2, Exponent(3)}, {1, Exponent(1)}}, Exponent(3)).plain_exponent(),
            Exponent(3));
}

}  // namespace
}  // namespace bjapprox
