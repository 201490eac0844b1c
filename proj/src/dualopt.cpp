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

#include "dualopt.hpp"

#include <cmath>
#include <vector>

#include "polyhedral.hpp"
#include "simplex.hpp"

namespace bjapprox {
namespace {

void CheckInputs(const Vector& c, const KernelBasis& w, const SpaceSpec& spec) {
  if (w.empty()) {
    Fail(ErrorCode::kInvalidArgument,
         "empty kernel: the point lies in the subspace");
  }
  CheckDimension(c.size(), w.ambient_dim, "functional");
  CheckDimension(spec.dimension(), w.ambient_dim, "space");
  if (!c.allFinite()) Fail(ErrorCode::kInvalidArgument, "non-finite functional");
}

// Projection of c onto W in kernel coordinates is negligible.
bool Orthogonal(const Vector& g, const Vector& c) {
  return g.norm() <= 1e-13 * c.norm() || g.norm() == 0.0;
}

SphereMaxResult Degenerate(const KernelBasis& w, const SpaceSpec& spec,
                           SphereMaxMethod method) {
  SphereMaxResult r;
  r.method = method;
  r.degenerate = true;
  r.maximizer = w.vectors.col(0) / Norm(spec, w.vectors.col(0));
  return r;
}

// Points the maximizer so that the pairing is nonnegative and recomputes the
// value from it, so value and maximizer are consistent to rounding.
void Finish(const Vector& c, const SpaceSpec& spec, SphereMaxResult& r) {
  const double n = Norm(spec, r.maximizer);
  if (n > 0.0) r.maximizer /= n;
  double pairing = c.dot(r.maximizer);
  if (pairing < 0.0) {
    r.maximizer = -r.maximizer;
    pairing = -pairing;
  }
  r.value = pairing;
}

SphereMaxResult ClosedForm(const Vector& c, const KernelBasis& w,
                           const SpaceSpec& spec) {
  SphereMaxResult r;
  r.method = SphereMaxMethod::kClosedForm;
  const Vector b = w.vectors.col(0);
  if (Orthogonal(w.vectors.transpose() * c, c)) {
    r = Degenerate(w, spec, r.method);
    // Sign tie: keep the lexicographically larger of +-b.
    for (Eigen::Index i = 0; i < b.size(); ++i) {
      if (r.maximizer[i] != 0.0) {
        if (r.maximizer[i] < 0.0) r.maximizer = -r.maximizer;
        break;
      }
    }
    return r;
  }
  r.maximizer = b;
  Finish(c, spec, r);
  return r;
}

// Slice problem: minimize ||B (t0 + N s)|| over s, where t0 = g / |g|^2 and
// N spans g^perp. Returns the descent result and fills in the maximizer.
struct Slice {
  Vector t0;
  Matrix null;  // k x (k - 1)
};

Slice MakeSlice(const Vector& g) {
  Slice slice;
  slice.t0 = g / g.squaredNorm();
  Matrix row(1, g.size());
  row.row(0) = g.transpose();
  slice.null = NullSpace(row).vectors;
  return slice;
}

SphereMaxResult FromSlice(const Vector& c, const KernelBasis& w,
                          const SpaceSpec& spec, const Slice& slice,
                          const DescentResult& d, SphereMaxMethod method) {
  SphereMaxResult r;
  r.method = method;
  r.iterations = d.iterations;
  r.converged = d.converged;
  r.maximizer = w.vectors * (slice.t0 + slice.null * d.s);
  Finish(c, spec, r);
  return r;
}

}  // namespace

const char* ToString(SphereMaxMethod method) {
  switch (method) {
    case SphereMaxMethod::kLpVertex: return "lp_vertex";
    case SphereMaxMethod::kSmoothAscent: return "smooth_ascent";
    case SphereMaxMethod::kMixedAscent: return "mixed_ascent";
    case SphereMaxMethod::kClosedForm: return "closed_form";
  }
  return "unknown";
}

SphereMaxResult SphereMax(const Vector& c, const KernelBasis& w,
                          const SpaceSpec& spec, const DualOptOptions& options) {
  CheckInputs(c, w, spec);
  if (w.dim() == 1) return ClosedForm(c, w, spec);
  if (spec.is_polyhedral()) return PolytopeLinMax(c, w, spec);
  const auto plain = spec.plain_exponent();
  if (plain && plain->is_smooth()) return SmoothSphereMax(c, w, *plain, options);
  return MixedAscent(c, w, spec, options);
}

SphereMaxResult PolytopeLinMax(const Vector& c, const KernelBasis& w,
                               const SpaceSpec& spec) {
  CheckInputs(c, w, spec);
  const int n = w.ambient_dim;
  const int k = w.dim();
  const Matrix& b = w.vectors;
  LinearProgram lp;
  const int t = lp.AddVariables(k, /*free=*/true);
  std::vector<AffineExpr> exprs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < k; ++l) {
      if (b(i, l) != 0.0) exprs[static_cast<size_t>(i)].terms.push_back({t + l, b(i, l)});
    }
  }
  AddNormBound(lp, spec, exprs, std::nullopt, 1.0);

  // Objective 0 is the pairing; then each coordinate of z in turn, which
  // selects the lexicographically largest maximizer.
  const Vector g = b.transpose() * c;
  std::vector<Vector> objectives;
  objectives.reserve(static_cast<size_t>(n) + 1);
  Vector obj = Vector::Zero(lp.num_variables());
  obj.segment(t, k) = g;
  objectives.push_back(obj);
  for (int i = 0; i < n; ++i) {
    obj.setZero();
    obj.segment(t, k) = b.row(i).transpose();
    objectives.push_back(obj);
  }
  const LpResult lp_result = SolveLexicographic(lp, objectives);
  if (lp_result.status != LpStatus::kOptimal) {
    Fail(ErrorCode::kInternal,
         std::string("unit-ball LP ended ") + ToString(lp_result.status));
  }
  SphereMaxResult r;
  r.method = SphereMaxMethod::kLpVertex;
  r.iterations = lp_result.pivots;
  r.degenerate = Orthogonal(g, c);
  r.maximizer = b * lp_result.x.segment(t, k);
  const double nz = Norm(spec, r.maximizer);
  if (nz > 0.0) r.maximizer /= nz;
  r.value = std::abs(c.dot(r.maximizer));
  if (r.degenerate) r.value = 0.0;
  return r;
}

SphereMaxResult PolytopeLinMax(const Vector& c, const KernelBasis& w,
                               PolytopeBall ball) {
  const Exponent p =
      ball == PolytopeBall::kBox ? Exponent::Infinity() : Exponent(1.0);
  return PolytopeLinMax(c, w, SpaceSpec::Plain(w.ambient_dim, p));
}

SphereMaxResult SmoothSphereMax(const Vector& c, const KernelBasis& w,
                                Exponent q, const DualOptOptions& options) {
  if (!q.is_smooth()) {
    Fail(ErrorCode::kInvalidArgument, "smooth ascent needs 1 < q < inf");
  }
  const SpaceSpec spec = SpaceSpec::Plain(w.ambient_dim, q);
  CheckInputs(c, w, spec);
  if (w.dim() == 1) return ClosedForm(c, w, spec);
  const Vector g = w.vectors.transpose() * c;
  if (Orthogonal(g, c)) return Degenerate(w, spec, SphereMaxMethod::kSmoothAscent);
  const Slice slice = MakeSlice(g);
  const DescentResult d =
      MinimizeAffineNorm(spec, w.vectors * slice.t0, w.vectors * slice.null,
                         Vector::Zero(w.dim() - 1), options.descent);
  return FromSlice(c, w, spec, slice, d, SphereMaxMethod::kSmoothAscent);
}

SphereMaxResult MixedAscent(const Vector& c, const KernelBasis& w,
                            const SpaceSpec& spec, const DualOptOptions& options) {
  CheckInputs(c, w, spec);
  const Vector g = w.vectors.transpose() * c;
  if (Orthogonal(g, c)) return Degenerate(w, spec, SphereMaxMethod::kMixedAscent);
  const Slice slice = MakeSlice(g);
  const int free_dim = w.dim() - 1;
  std::vector<Vector> starts{Vector::Zero(free_dim)};
  if (free_dim > 0) {
    for (Vector& s : RandomStarts(options.random_starts, free_dim,
                                  slice.t0.norm(), options.seed)) {
      starts.push_back(std::move(s));
    }
  }
  const DescentResult d = MinimizeAffineNormMultiStart(
      spec, w.vectors * slice.t0, w.vectors * slice.null, starts,
      options.descent);
  SphereMaxResult r =
      FromSlice(c, w, spec, slice, d, SphereMaxMethod::kMixedAscent);

  // Validation: the value can never exceed the dual norm of the projection
  // of c onto W, and the maximizer must be a unit vector of W.
  const Vector projected = w.vectors * g;
  const double bound = Norm(DualSpec(spec), projected);
  const double residual =
      (r.maximizer - w.vectors * (w.vectors.transpose() * r.maximizer)).norm();
  if (r.value > bound * (1.0 + 1e-9) + 1e-12 ||
      std::abs(Norm(spec, r.maximizer) - 1.0) > 1e-9 || residual > 1e-9) {
    r.converged = false;
  }
  return r;
}

}  // namespace bjapprox
