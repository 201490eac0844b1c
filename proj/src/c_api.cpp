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

// extern "C" surface over the C++ core. Every entry point converts
// exceptions into status codes and records the message per thread.

#include "bjapprox/bjapprox.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "approx.hpp"
#include "oracle.hpp"
#include "selftest.hpp"

using namespace bjapprox;

struct bja_space {
  SpaceSpec spec;
};

struct bja_subspace {
  SubspaceBasis basis;
};

struct bja_result {
  int dim = 0;
  bool has_best_approx = false;
  ApproxResult result;
};

namespace {

thread_local std::string g_last_error;

bja_status StatusOf(ErrorCode code) { return static_cast<bja_status>(code); }

template <typename Fn>
bja_status Guard(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
    g_last_error.clear();
    return BJA_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return BJA_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BJA_ERR_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) Fail(ErrorCode::kInvalidArgument, what);
}

Vector Copy(const double* x, int n, int expected, const char* what) {
  Require(x != nullptr, "null vector argument");
  CheckDimension(n, expected, what);
  return Eigen::Map<const Vector>(x, n);
}

void Store(const Vector& v, double* out, int n) {
  Require(out != nullptr, "null output buffer");
  CheckDimension(n, v.size(), "output buffer");
  Eigen::Map<Vector>(out, n) = v;
}

ApproxOptions ToOptions(const bja_options* options) {
  ApproxOptions o;
  if (options) {
    o.seed = options->seed;
    o.tol = options->tol;
    o.dual.seed = options->seed;
  }
  return o;
}

OracleConfig ToConfig(const bja_oracle_config* cfg) {
  OracleConfig c;
  if (cfg) {
    c.grid_points_per_dim = cfg->grid_points_per_dim;
    c.refine_rounds = cfg->refine_rounds;
    c.seed = cfg->seed;
    c.trials = cfg->trials;
  }
  return c;
}

bja_method MethodOf(SphereMaxMethod m) {
  switch (m) {
    case SphereMaxMethod::kLpVertex: return BJA_METHOD_LP_VERTEX;
    case SphereMaxMethod::kSmoothAscent: return BJA_METHOD_SMOOTH_ASCENT;
    case SphereMaxMethod::kMixedAscent: return BJA_METHOD_MIXED_ASCENT;
    case SphereMaxMethod::kClosedForm: return BJA_METHOD_CLOSED_FORM;
  }
  return BJA_METHOD_CLOSED_FORM;
}

const bja_space& Deref(const bja_space* s) {
  Require(s != nullptr, "null space handle");
  return *s;
}

const bja_subspace& Deref(const bja_subspace* y) {
  Require(y != nullptr, "null subspace handle");
  return *y;
}

void CheckSameDim(const bja_space& s, const bja_subspace& y) {
  CheckDimension(y.basis.ambient_dim(), s.spec.dimension(), "subspace");
}

}  // namespace

extern "C" {

const char* bja_version(void) { return "0.1.0"; }

const char* bja_status_string(bja_status status) {
  switch (status) {
    case BJA_OK: return "ok";
    case BJA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BJA_ERR_PARSE: return "parse error";
    case BJA_ERR_DIMENSION: return "dimension mismatch";
    case BJA_ERR_NOT_CONVERGED: return "not converged";
    case BJA_ERR_UNSUPPORTED: return "unsupported";
    case BJA_ERR_ORACLE_LIMIT: return "oracle limit exceeded";
    case BJA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bja_last_error(void) { return g_last_error.c_str(); }

bja_status bja_space_from_json(const char* json, bja_space** out) {
  return Guard([&] {
    Require(json != nullptr && out != nullptr, "null argument");
    *out = new bja_space{SpaceSpec::FromJson(json)};
  });
}

bja_status bja_space_plain(int dim, double p, bja_space** out) {
  return Guard([&] {
    Require(out != nullptr, "null output handle");
    Require(dim >= 1, "dimension must be positive");
    *out = new bja_space{SpaceSpec::Plain(dim, Exponent(p))};
  });
}

bja_status bja_space_create(int block_count, const int* dims, const double* ps,
                            double outer_p, bja_space** out) {
  return Guard([&] {
    Require(out != nullptr, "null output handle");
    Require(block_count >= 1 && dims != nullptr && ps != nullptr,
            "at least one block is required");
    std::vector<Block> blocks;
    for (int i = 0; i < block_count; ++i) blocks.push_back({dims[i], Exponent(ps[i])});
    *out = new bja_space{SpaceSpec(std::move(blocks), Exponent(outer_p))};
  });
}

bja_status bja_space_dual(const bja_space* space, bja_space** out) {
  return Guard([&] {
    Require(out != nullptr, "null output handle");
    *out = new bja_space{DualSpec(Deref(space).spec)};
  });
}

int bja_space_dim(const bja_space* space) {
  return space ? space->spec.dimension() : 0;
}

bja_status bja_space_to_json(const bja_space* space, char* buf, size_t capacity,
                             size_t* needed) {
  return Guard([&] {
    const std::string json = Deref(space).spec.ToJson();
    if (needed) *needed = json.size() + 1;
    if (capacity == 0) return;
    Require(buf != nullptr, "null buffer");
    if (capacity < json.size() + 1) {
      Fail(ErrorCode::kInvalidArgument, "buffer too small");
    }
    std::memcpy(buf, json.c_str(), json.size() + 1);
  });
}

bja_status bja_norm(const bja_space* space, const double* x, int n, double* out) {
  return Guard([&] {
    const SpaceSpec& spec = Deref(space).spec;
    Require(out != nullptr, "null output");
    *out = Norm(spec, Copy(x, n, spec.dimension(), "x"));
  });
}

void bja_space_free(bja_space* space) { delete space; }

bja_status bja_conjugate_exponent(double p, double* q) {
  return Guard([&] {
    Require(q != nullptr, "null output");
    *q = ConjugateExponent(Exponent(p)).value();
  });
}

bja_status bja_duality_map(const double* a, int n, double p, double* out) {
  return Guard([&] {
    Require(n >= 1, "empty vector");
    Store(DualityMap(Copy(a, n, n, "a"), Exponent(p)), out, n);
  });
}

bja_status bja_is_smooth_point(const bja_space* space, const double* z, int n,
                               double tol, int* smooth, int* tight_count) {
  return Guard([&] {
    const SpaceSpec& spec = Deref(space).spec;
    Require(smooth != nullptr, "null output");
    const SmoothnessReport r =
        IsSmoothPoint(spec, Copy(z, n, spec.dimension(), "z"), tol);
    *smooth = r.smooth ? 1 : 0;
    if (tight_count) *tight_count = static_cast<int>(r.tight.size());
  });
}

bja_status bja_subspace_create(const double* rows, int m, int n,
                               bja_subspace** out) {
  return Guard([&] {
    Require(out != nullptr, "null output handle");
    Require(m >= 0 && n >= 1, "invalid subspace shape");
    Require(m == 0 || rows != nullptr, "null rows");
    Matrix mat(m, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) mat(i, j) = rows[static_cast<size_t>(i) * n + j];
    }
    Require(mat.allFinite(), "non-finite basis entry");
    *out = new bja_subspace{SubspaceBasis(std::move(mat), n)};
  });
}

int bja_subspace_ambient_dim(const bja_subspace* y) {
  return y ? y->basis.ambient_dim() : 0;
}
int bja_subspace_count(const bja_subspace* y) { return y ? y->basis.count() : 0; }
int bja_subspace_rank(const bja_subspace* y) { return y ? y->basis.rank() : 0; }
int bja_subspace_is_dependent(const bja_subspace* y) {
  return y && y->basis.rank() < y->basis.count() ? 1 : 0;
}
int bja_subspace_kernel_dim(const bja_subspace* y) {
  return y ? y->basis.kernel().dim() : 0;
}

bja_status bja_subspace_kernel_vector(const bja_subspace* y, int index,
                                      double* out, int n) {
  return Guard([&] {
    const KernelBasis& w = Deref(y).basis.kernel();
    Require(index >= 0 && index < w.dim(), "kernel index out of range");
    Store(w.vectors.col(index), out, n);
  });
}

bja_status bja_subspace_contains(const bja_subspace* y, const double* x, int n,
                                 double tol, int* contained) {
  return Guard([&] {
    const SubspaceBasis& basis = Deref(y).basis;
    Require(contained != nullptr, "null output");
    *contained = basis.Contains(Copy(x, n, basis.ambient_dim(), "x"), tol) ? 1 : 0;
  });
}

void bja_subspace_free(bja_subspace* y) { delete y; }

void bja_options_default(bja_options* options) {
  if (!options) return;
  options->seed = 0;
  options->tol = 1e-9;
}

bja_status bja_sphere_max(const bja_space* space, const bja_subspace* y,
                          const double* c, int n, const bja_options* options,
                          bja_sphere_max_info* info, double* maximizer) {
  return Guard([&] {
    const bja_space& s = Deref(space);
    const bja_subspace& sub = Deref(y);
    CheckSameDim(s, sub);
    Require(info != nullptr, "null output");
    const SphereMaxResult r =
        SphereMax(Copy(c, n, s.spec.dimension(), "c"), sub.basis.kernel(), s.spec,
                  ToOptions(options).dual);
    info->value = r.value;
    info->method = MethodOf(r.method);
    info->iterations = r.iterations;
    info->converged = r.converged ? 1 : 0;
    info->degenerate = r.degenerate ? 1 : 0;
    if (maximizer) Store(r.maximizer, maximizer, n);
  });
}

bja_status bja_distance(const bja_space* space, const bja_subspace* y,
                        const double* x0, int n, const bja_options* options,
                        bja_result** out) {
  return Guard([&] {
    const bja_space& s = Deref(space);
    const bja_subspace& sub = Deref(y);
    CheckSameDim(s, sub);
    Require(out != nullptr, "null output handle");
    const Vector x = Copy(x0, n, s.spec.dimension(), "x0");
    const DistanceResult d = Distance(x, sub.basis, s.spec, ToOptions(options));
    auto* r = new bja_result;
    r->dim = n;
    r->result.distance = d.value;
    r->result.certificate = d.certificate;
    r->result.converged = d.converged;
    r->result.dual_method = ToString(d.method);
    r->result.iterations = d.iterations;
    r->result.warnings = d.warnings;
    r->result.duality_gap = 0.0;
    *out = r;
  });
}

bja_status bja_best_approximation(const bja_space* space, const bja_subspace* y,
                                  const double* x0, int n,
                                  const bja_options* options, bja_result** out) {
  return Guard([&] {
    const bja_space& s = Deref(space);
    const bja_subspace& sub = Deref(y);
    CheckSameDim(s, sub);
    Require(out != nullptr, "null output handle");
    const Vector x = Copy(x0, n, s.spec.dimension(), "x0");
    auto* r = new bja_result;
    r->dim = n;
    r->has_best_approx = true;
    try {
      r->result = BestApproximation(x, sub.basis, s.spec, ToOptions(options));
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

int bja_result_dim(const bja_result* r) { return r ? r->dim : 0; }
double bja_result_distance(const bja_result* r) {
  return r ? r->result.distance : 0.0;
}
int bja_result_has_best_approx(const bja_result* r) {
  return r && r->has_best_approx ? 1 : 0;
}

bja_status bja_result_best_approx(const bja_result* r, double* out, int n) {
  return Guard([&] {
    Require(r != nullptr, "null result handle");
    Require(r->has_best_approx, "distance-only result has no best approximation");
    Store(r->result.best_approx, out, n);
  });
}

bja_status bja_result_residual(const bja_result* r, double* out, int n) {
  return Guard([&] {
    Require(r != nullptr, "null result handle");
    Require(r->has_best_approx, "distance-only result has no residual");
    Store(r->result.residual, out, n);
  });
}

bja_status bja_result_certificate(const bja_result* r, double* z, int n,
                                  bja_certificate_info* info) {
  return Guard([&] {
    Require(r != nullptr, "null result handle");
    const DualCertificate& c = r->result.certificate;
    if (z) Store(c.z, z, n);
    if (info) {
      info->dual_norm = c.dual_norm;
      info->pairing = c.pairing;
      info->kernel_residual = c.kernel_residual;
      info->degenerate = c.degenerate ? 1 : 0;
    }
  });
}

double bja_result_duality_gap(const bja_result* r) {
  return r ? r->result.duality_gap : 0.0;
}

bja_uniqueness bja_result_unique(const bja_result* r) {
  if (!r || !r->has_best_approx) return BJA_UNIQUE_UNKNOWN;
  switch (r->result.unique) {
    case Uniqueness::kYes: return BJA_UNIQUE_YES;
    case Uniqueness::kNo: return BJA_UNIQUE_NO;
    case Uniqueness::kUnknown: return BJA_UNIQUE_UNKNOWN;
  }
  return BJA_UNIQUE_UNKNOWN;
}

int bja_result_converged(const bja_result* r) {
  return r && r->result.converged ? 1 : 0;
}
int bja_result_iterations(const bja_result* r) {
  return r ? r->result.iterations : 0;
}
const char* bja_result_primal_method(const bja_result* r) {
  return r ? r->result.primal_method.c_str() : "";
}
const char* bja_result_dual_method(const bja_result* r) {
  return r ? r->result.dual_method.c_str() : "";
}
int bja_result_warning_count(const bja_result* r) {
  return r ? static_cast<int>(r->result.warnings.size()) : 0;
}
const char* bja_result_warning(const bja_result* r, int index) {
  if (!r || index < 0 || index >= bja_result_warning_count(r)) return nullptr;
  return r->result.warnings[static_cast<size_t>(index)].c_str();
}
void bja_result_free(bja_result* r) { delete r; }

bja_status bja_bj_orthogonal(const bja_space* space, const double* x,
                             const double* y, int n, double tol, int* orthogonal,
                             double* lambda, double* min_value) {
  return Guard([&] {
    const SpaceSpec& spec = Deref(space).spec;
    Require(orthogonal != nullptr, "null output");
    const OrthogonalityResult r =
        BirkhoffJamesOrthogonal(Copy(x, n, spec.dimension(), "x"),
                                Copy(y, n, spec.dimension(), "y"), spec, tol);
    *orthogonal = r.orthogonal ? 1 : 0;
    if (lambda) *lambda = r.lambda;
    if (min_value) *min_value = r.min_value;
  });
}

bja_status bja_residual_orthogonality(const bja_space* space,
                                      const bja_subspace* y, const double* x0,
                                      const double* y0, int n, double tol,
                                      int* orthogonal) {
  return Guard([&] {
    const bja_space& s = Deref(space);
    const bja_subspace& sub = Deref(y);
    CheckSameDim(s, sub);
    Require(orthogonal != nullptr, "null output");
    ApproxResult r;
    r.residual = Copy(x0, n, s.spec.dimension(), "x0") -
                 Copy(y0, n, s.spec.dimension(), "y0");
    *orthogonal = ResidualOrthogonalityCheck(r, sub.basis, s.spec, tol) ? 1 : 0;
  });
}

bja_status bja_uniqueness_certificate(const bja_space* space,
                                      const bja_subspace* y, const double* x0,
                                      int n, int* sufficient) {
  return Guard([&] {
    const bja_space& s = Deref(space);
    const bja_subspace& sub = Deref(y);
    CheckSameDim(s, sub);
    Require(sufficient != nullptr, "null output");
    *sufficient = UniquenessCertificate(Copy(x0, n, s.spec.dimension(), "x0"),
                                        sub.basis, s.spec) ==
                          UniquenessVerdict::kSufficient
                      ? 1
                      : 0;
  });
}

bja_status bja_equal_distance(const bja_subspace* y, const double* x, int n,
                              double p1, double p2, const bja_options* options,
                              bja_equal_distance_info* info) {
  return Guard([&] {
    const bja_subspace& sub = Deref(y);
    Require(info != nullptr, "null output");
    const EqualDistanceResult r = EqualDistanceDiagnose(
        Copy(x, n, sub.basis.ambient_dim(), "x"), sub.basis, Exponent(p1),
        Exponent(p2), ToOptions(options));
    info->equal = r.equal ? 1 : 0;
    info->distance1 = r.distance1;
    info->distance2 = r.distance2;
    info->has_witness = r.index ? 1 : 0;
    info->lambda = r.lambda.value_or(0.0);
    info->index = r.index.value_or(-1);
    info->axis_aligned = r.axis_aligned ? 1 : 0;
    info->basis_in_hyperplane = r.basis_in_hyperplane ? 1 : 0;
    info->consistent = r.consistent ? 1 : 0;
  });
}

bja_status bja_restriction_norm_equality(const bja_space* space,
                                         const bja_subspace* y, const double* x0,
                                         const double* y0, int n, int* equal) {
  return Guard([&] {
    const bja_space& s = Deref(space);
    const bja_subspace& sub = Deref(y);
    CheckSameDim(s, sub);
    Require(equal != nullptr, "null output");
    *equal = RestrictionNormEquality(Copy(x0, n, s.spec.dimension(), "x0"),
                                     Copy(y0, n, s.spec.dimension(), "y0"),
                                     sub.basis, s.spec)
                 ? 1
                 : 0;
  });
}

void bja_oracle_config_default(bja_oracle_config* cfg) {
  if (!cfg) return;
  const OracleConfig d;
  cfg->grid_points_per_dim = d.grid_points_per_dim;
  cfg->refine_rounds = d.refine_rounds;
  cfg->seed = d.seed;
  cfg->trials = d.trials;
}

bja_status bja_brute_force_distance(const bja_space* space, const bja_subspace* y,
                                    const double* x0, int n,
                                    const bja_oracle_config* cfg, double* out) {
  return Guard([&] {
    const bja_space& s = Deref(space);
    const bja_subspace& sub = Deref(y);
    CheckSameDim(s, sub);
    Require(out != nullptr, "null output");
    *out = BruteForceDistance(Copy(x0, n, s.spec.dimension(), "x0"), sub.basis,
                              s.spec, ToConfig(cfg));
  });
}

bja_status bja_brute_force_sphere_max(const bja_space* space,
                                      const bja_subspace* y, const double* c,
                                      int n, const bja_oracle_config* cfg,
                                      double* out) {
  return Guard([&] {
    const bja_space& s = Deref(space);
    const bja_subspace& sub = Deref(y);
    CheckSameDim(s, sub);
    Require(out != nullptr, "null output");
    *out = BruteForceSphereMax(Copy(c, n, s.spec.dimension(), "c"),
                               sub.basis.kernel(), s.spec, ToConfig(cfg));
  });
}

bja_status bja_check_weak_duality(const bja_space* space, const bja_subspace* y,
                                  const double* x0, int n,
                                  const bja_oracle_config* cfg, int* holds) {
  return Guard([&] {
    const bja_space& s = Deref(space);
    const bja_subspace& sub = Deref(y);
    CheckSameDim(s, sub);
    Require(holds != nullptr, "null output");
    *holds = CheckWeakDuality(Copy(x0, n, s.spec.dimension(), "x0"), sub.basis,
                              s.spec, ToConfig(cfg))
                 ? 1
                 : 0;
  });
}

bja_status bja_holder_check(const double* u, const double* v, int n, double p,
                            const bja_oracle_config* cfg, bja_holder_info* info) {
  return Guard([&] {
    Require(info != nullptr, "null output");
    const HolderReport r =
        HolderCheck(Copy(u, n, n, "u"), Copy(v, n, n, "v"), Exponent(p), ToConfig(cfg));
    info->holds = r.holds ? 1 : 0;
    info->classical_lhs = r.classical_lhs;
    info->classical_rhs = r.classical_rhs;
    info->mixed_lhs = r.mixed_lhs;
    info->mixed_rhs = r.mixed_rhs;
    info->blocks = r.blocks;
  });
}

bja_status bja_mixed_inequality_check(const bja_space* space, const double* x,
                                      const double* a, double lambda,
                                      const double* b, int n,
                                      const bja_oracle_config* cfg,
                                      bja_mixed_inequality_info* info) {
  return Guard([&] {
    const SpaceSpec& spec = Deref(space).spec;
    Require(info != nullptr, "null output");
    const int dim = spec.dimension();
    const MixedInequalityReport r =
        MixedInequalityCheck(Copy(x, n, dim, "x"), Copy(a, n, dim, "a"), spec,
                             lambda, Copy(b, n, dim, "b"), ToConfig(cfg));
    info->holds = r.holds ? 1 : 0;
    info->left = r.left;
    info->right = r.right;
    info->pairing = r.pairing;
    info->primal_min = r.primal_min;
    info->dual_max = r.dual_max;
    info->relative_gap = r.relative_gap;
    info->tight = r.tight ? 1 : 0;
  });
}

int bja_selftest_count(void) { return SelfTestCount(); }

bja_status bja_selftest_run(uint64_t seed, bja_selftest_callback cb, void* user,
                            int* failures) {
  return Guard([&] {
    int failed = 0;
    RunSelfTest(
        [&](const CriterionResult& r) {
          if (!r.passed) ++failed;
          if (cb) {
            cb(r.id, r.title.c_str(), r.passed ? 1 : 0, r.seconds,
               r.detail.c_str(), user);
          }
        },
        seed);
    if (failures) *failures = failed;
  });
}

}  // extern "C"
