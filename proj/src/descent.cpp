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

#include "descent.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

namespace bjapprox {
namespace {

class AffineNorm {
 public:
  AffineNorm(const SpaceSpec& spec, const Vector& v0, const Matrix& a)
      : spec_(spec), v0_(v0), a_(a) {}

  double Value(const Vector& s) const { return Norm(spec_, v0_ + a_ * s); }

  Vector Gradient(const Vector& s) const {
    return a_.transpose() * SupportFunctional(spec_, v0_ + a_ * s);
  }

  Matrix Hessian(const Vector& s, double h) const {
    const Eigen::Index d = s.size();
    Matrix hess(d, d);
    Vector e = Vector::Zero(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      e[j] = h;
      hess.col(j) = (Gradient(s + e) - Gradient(s - e)) / (2.0 * h);
      e[j] = 0.0;
    }
    return 0.5 * (hess + hess.transpose());
  }

 private:
  const SpaceSpec& spec_;
  const Vector& v0_;
  const Matrix& a_;
};

// The same norm with every kink rounded off at scale mu: |t| becomes
// sqrt(t^2 + mu^2), a maximum becomes a log-sum-exp, and a smooth block norm
// r becomes sqrt(r^2 + mu^2). Exceeds the true norm by O(n mu).
class SmoothedAffineNorm {
 public:
  SmoothedAffineNorm(const SpaceSpec& spec, const Vector& v0, const Matrix& a,
                     double mu)
      : spec_(spec), v0_(v0), a_(a), mu_(mu) {}

  double Value(const Vector& s) const { return Evaluate(v0_ + a_ * s, nullptr); }

  Vector Gradient(const Vector& s) const {
    Vector g(v0_.size());
    Evaluate(v0_ + a_ * s, &g);
    return a_.transpose() * g;
  }

  Matrix Hessian(const Vector& s, double h) const {
    const Eigen::Index d = s.size();
    Matrix hess(d, d);
    Vector e = Vector::Zero(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      e[j] = h;
      hess.col(j) = (Gradient(s + e) - Gradient(s - e)) / (2.0 * h);
      e[j] = 0.0;
    }
    return 0.5 * (hess + hess.transpose());
  }

 private:
  // mu * log(sum exp(v_i / mu)) and, if weights is set, its gradient.
  double SoftMax(const Vector& v, Vector* weights) const {
    const double top = v.maxCoeff();
    const Vector w = ((v.array() - top) / mu_).exp();
    const double total = w.sum();
    if (weights != nullptr) *weights = w / total;
    return top + mu_ * std::log(total);
  }

  double Evaluate(const Vector& x, Vector* grad) const {
    const auto& blocks = spec_.blocks();
    const size_t k = blocks.size();
    Vector inner(static_cast<Eigen::Index>(k));
    std::vector<Vector> partial(k);
    int offset = 0;
    for (size_t i = 0; i < k; ++i) {
      const int d = blocks[i].dim;
      const Exponent p = blocks[i].p;
      const Vector xb = x.segment(offset, d);
      const Vector soft_abs = (xb.array().square() + mu_ * mu_).sqrt();
      Vector& dn = partial[i];
      if (d == 1 || p.is_one()) {
        inner[static_cast<Eigen::Index>(i)] = soft_abs.sum();
        dn = xb.cwiseQuotient(soft_abs);
      } else if (p.is_infinite()) {
        Vector w;
        inner[static_cast<Eigen::Index>(i)] = SoftMax(soft_abs, &w);
        dn = w.cwiseProduct(xb.cwiseQuotient(soft_abs));
      } else {
        const double r = LpNorm(xb, p);
        const double n = std::sqrt(r * r + mu_ * mu_);
        inner[static_cast<Eigen::Index>(i)] = n;
        dn = r > 0.0 ? Vector((r / n) * SupportFunctional(SpaceSpec::Plain(d, p), xb))
                     : Vector::Zero(d);
      }
      offset += d;
    }
    double value = 0.0;
    Vector outer_weights(static_cast<Eigen::Index>(k));
    const Exponent q = spec_.outer();
    if (k == 1) {
      value = inner[0];
      outer_weights[0] = 1.0;
    } else if (q.is_one()) {
      value = inner.sum();
      outer_weights.setOnes();
    } else if (q.is_infinite()) {
      value = SoftMax(inner, &outer_weights);
    } else {
      value = LpNorm(inner, q);
      outer_weights = (inner / value).array().pow(q.value() - 1.0);
    }
    if (grad != nullptr) {
      offset = 0;
      for (size_t i = 0; i < k; ++i) {
        const int d = blocks[i].dim;
        grad->segment(offset, d) = outer_weights[static_cast<Eigen::Index>(i)] * partial[i];
        offset += d;
      }
    }
    return value;
  }

  const SpaceSpec& spec_;
  const Vector& v0_;
  const Matrix& a_;
  double mu_;
};

// Backtracking along dir from s; returns the accepted step or 0.
template <class Objective>
double Armijo(const Objective& f, const Vector& s, double value,
              const Vector& dir, double slope, double c1) {
  double t = 1.0;
  for (int k = 0; k < 60; ++k, t *= 0.5) {
    const double trial = f.Value(s + t * dir);
    if (trial <= value + c1 * t * slope && trial < value) return t;
  }
  return 0.0;
}

// One damped Newton run on f from result.s. hessian_step maps the current
// point and value to the finite-difference step.
template <class Objective, class StepFn>
void NewtonLoop(const Objective& f, const DescentOptions& options, int max_iterations,
                StepFn hessian_step, DescentResult& result) {
  int stalled = 0;
  result.value = f.Value(result.s);
  result.converged = false;
  for (int it = 0; it < max_iterations; ++it) {
    ++result.iterations;
    const Vector grad = f.Gradient(result.s);
    const double gnorm = grad.norm();
    if (gnorm == 0.0) {
      result.converged = true;
      return;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(
        f.Hessian(result.s, hessian_step(result.s, result.value)));
    Vector lambda = eig.eigenvalues();
    const double top = std::max(lambda.maxCoeff(), 0.0);
    Vector dir;
    if (top > 0.0) {
      lambda = lambda.cwiseMax(1e-12 * top);
      const Matrix& v = eig.eigenvectors();
      dir = -(v * (v.transpose() * grad).cwiseQuotient(lambda));
    }
    double slope = dir.size() ? grad.dot(dir) : 0.0;
    double step = 0.0;
    if (slope < 0.0) {
      step = Armijo(f, result.s, result.value, dir, slope, options.armijo);
    }
    if (step == 0.0) {
      // Steepest descent, scaled so the first trial would zero a linear model.
      dir = -grad * (result.value / (gnorm * gnorm));
      slope = grad.dot(dir);
      step = Armijo(f, result.s, result.value, dir, slope, options.armijo);
    }
    if (step == 0.0) {
      // No representable decrease left along either direction.
      result.converged = true;
      return;
    }
    const Vector next = result.s + step * dir;
    const double next_value = f.Value(next);
    const double rel = (result.value - next_value) / std::max(result.value, 1e-300);
    result.s = next;
    result.value = next_value;
    stalled = rel < options.rel_tol ? stalled + 1 : 0;
    if (stalled >= options.stall_window || result.value == 0.0) {
      result.converged = true;
      return;
    }
  }
}

}  // namespace

DescentResult MinimizeAffineNorm(const SpaceSpec& spec, const Vector& v0,
                                 const Matrix& a, const Vector& start,
                                 const DescentOptions& options) {
  CheckDimension(v0.size(), spec.dimension(), "descent offset");
  CheckDimension(a.rows(), spec.dimension(), "descent matrix");
  CheckDimension(start.size(), a.cols(), "descent start");
  const AffineNorm f(spec, v0, a);
  DescentResult result;
  result.s = start;
  result.value = f.Value(start);
  if (a.cols() == 0 || result.value == 0.0) {
    result.converged = true;
    return result;
  }
  if (!spec.is_strictly_convex()) {
    // Follow the minimizers of ever sharper smoothings into the kink, then
    // let the exact objective have the last word.
    const double scale = result.value;
    const double col = std::max(a.colwise().norm().maxCoeff(), 1e-300);
    for (double mu = 0.1 * scale; mu >= 1e-12 * scale; mu *= 0.1) {
      const SmoothedAffineNorm smooth(spec, v0, a, mu);
      DescentOptions level = options;
      level.rel_tol = 1e-14;
      level.stall_window = 2;
      const int budget = std::min(200, options.max_iterations - result.iterations);
      if (budget <= 0) break;
      NewtonLoop(smooth, level, budget,
                 [&](const Vector&, double) { return 1e-4 * mu / col; }, result);
    }
    const double smoothed_end = f.Value(result.s);
    if (!(smoothed_end <= scale)) result.s = start;
  }
  NewtonLoop(f, options, options.max_iterations - result.iterations,
             [](const Vector& s, double value) {
               return 1e-6 * std::max(s.cwiseAbs().maxCoeff(), value) + 1e-300;
             },
             result);
  return result;
}

DescentResult MinimizeAffineNormMultiStart(const SpaceSpec& spec,
                                           const Vector& v0, const Matrix& a,
                                           const std::vector<Vector>& starts,
                                           const DescentOptions& options) {
  if (starts.empty()) Fail(ErrorCode::kInternal, "multi-start without starts");
  DescentResult best;
  bool have = false;
  for (const Vector& s : starts) {
    DescentResult r = MinimizeAffineNorm(spec, v0, a, s, options);
    if (!have || r.value < best.value) {
      const int iterations = best.iterations + r.iterations;
      best = std::move(r);
      best.iterations = iterations;
      have = true;
    } else {
      best.iterations += r.iterations;
    }
  }
  return best;
}

std::vector<Vector> RandomStarts(int count, int dim, double scale,
                                 std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Vector> starts;
  starts.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    Vector s(dim);
    for (int j = 0; j < dim; ++j) s[j] = scale * normal(gen);
    starts.push_back(std::move(s));
  }
  return starts;
}

ScalarMinimum MinimizeConvex1D(const std::function<double(double)>& f,
                               double lo, double hi, double rel_tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double width = hi - lo;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  // The second test stops once the bracket is down to a few ulps.
  while (b - a > rel_tol * std::max(width, 1e-300) && a < c && c < d && d < b) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  ScalarMinimum best{c, fc};
  if (fd < best.value) best = {d, fd};
  for (double x : {lo, hi, 0.5 * (a + b)}) {
    const double v = f(x);
    if (v < best.value) best = {x, v};
  }
  return best;
}

}  // namespace bjapprox
