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

// Mixed l_p-sum norms  ||x|| = || (||x_1||_{p_1}, ..., ||x_n||_{p_n}) ||_p
// over a block decomposition of R^m, together with their duals.

#ifndef BJAPPROX_SPACE_HPP_
#define BJAPPROX_SPACE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "common.hpp"

namespace bjapprox {

// A norm exponent: a finite real >= 1 or infinity.
class Exponent {
 public:
  // Throws kInvalidArgument for NaN or values below 1. +inf maps to
  // Infinity().
  explicit Exponent(double value);

  static Exponent Infinity();

  bool is_infinite() const { return infinite_; }
  bool is_one() const { return !infinite_ && value_ == 1.0; }
  // Strictly between 1 and infinity: the norm is smooth and strictly convex.
  bool is_smooth() const { return !infinite_ && value_ > 1.0; }
  bool is_polyhedral() const { return infinite_ || value_ == 1.0; }

  // +inf for the infinite exponent.
  double value() const;

  std::string ToString() const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  Exponent() = default;

  double value_ = 1.0;
  bool infinite_ = false;
};

// 1/p + 1/q = 1, with conj(1) = inf and conj(inf) = 1.
Exponent ConjugateExponent(Exponent p);

struct Block {
  int dim;
  Exponent p;
};

class SpaceSpec {
 public:
  SpaceSpec(std::vector<Block> blocks, Exponent outer);

  static SpaceSpec Plain(int dim, Exponent p);

  // Accepts {"outer_p": e, "blocks": [{"dim": d, "p": e}, ...]} or the plain
  // shorthand {"p": e, "dim": d}; e is a number or the string "inf".
  static SpaceSpec FromJson(const std::string& text);
  std::string ToJson() const;

  const std::vector<Block>& blocks() const { return blocks_; }
  Exponent outer() const { return outer_; }
  int dimension() const { return dimension_; }

  // Set when the norm coincides with a plain l_p norm on R^dimension: a
  // single block, or every block of dimension > 1 using the outer exponent.
  std::optional<Exponent> plain_exponent() const;

  // Every exponent that affects the norm is 1 or infinity.
  bool is_polyhedral() const;
  // Every exponent that affects the norm lies strictly in (1, inf).
  bool is_strictly_convex() const;

  friend bool operator==(const SpaceSpec& a, const SpaceSpec& b);

 private:
  std::vector<Block> blocks_;
  Exponent outer_;
  int dimension_ = 0;
};

// Plain l_p norm of a contiguous coordinate range.
double LpNorm(const double* x, int n, Exponent p);
inline double LpNorm(const Vector& x, Exponent p) {
  return LpNorm(x.data(), static_cast<int>(x.size()), p);
}

double Norm(const SpaceSpec& spec, const Vector& x);

// Same block dimensions; every exponent conjugated.
SpaceSpec DualSpec(const SpaceSpec& spec);

// The unique support functional of l_p at a / ||a||_p for 1 < p < inf:
// c_k = sgn(a_k) |a_k|^{p-1} / ||a||_p^{p-1}.
Vector DualityMap(const Vector& a, Exponent p);

// One element z of the dual unit sphere with <z, x> = ||x||. Coincides with
// the gradient of the norm wherever it is differentiable; at kinks it picks
// the first maximal coordinate / block. Zero for x = 0.
Vector SupportFunctional(const SpaceSpec& spec, const Vector& x);

struct SmoothnessReport {
  bool smooth = false;
  // l_inf: coordinates with |z_i| = 1; l_1: coordinates with |z_i| <= tol.
  std::vector<int> tight;
};

// Smoothness of a unit vector of plain l_1^n or l_inf^n. Throws
// kInvalidArgument when z is off the sphere and kUnsupported otherwise.
SmoothnessReport IsSmoothPoint(const SpaceSpec& spec, const Vector& z,
                               double tol = 1e-9);

}  // namespace bjapprox

#endif  // BJAPPROX_SPACE_HPP_
