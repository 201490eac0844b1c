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

#include "space.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace bjapprox {

Exponent::Exponent(double value) {
  if (std::isnan(value) || value < 1.0) {
    std::ostringstream os;
    os << "exponent must be >= 1 or inf, got " << value;
    Fail(ErrorCode::kInvalidArgument, os.str());
  }
  if (std::isinf(value)) {
    infinite_ = true;
  } else {
    value_ = value;
  }
}

Exponent Exponent::Infinity() {
  Exponent e;
  e.infinite_ = true;
  return e;
}

double Exponent::value() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

std::string Exponent::ToString() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << value_;
  return os.str();
}

Exponent ConjugateExponent(Exponent p) {
  if (p.is_infinite()) return Exponent(1.0);
  if (p.is_one()) return Exponent::Infinity();
  const double v = p.value();
  return Exponent(v / (v - 1.0));
}

SpaceSpec::SpaceSpec(std::vector<Block> blocks, Exponent outer)
    : blocks_(std::move(blocks)), outer_(outer) {
  if (blocks_.empty()) {
    Fail(ErrorCode::kInvalidArgument, "space needs at least one block");
  }
  for (const Block& b : blocks_) {
    if (b.dim < 1) {
      Fail(ErrorCode::kInvalidArgument, "block dimensions must be positive");
    }
    dimension_ += b.dim;
  }
}

SpaceSpec SpaceSpec::Plain(int dim, Exponent p) {
  return SpaceSpec({Block{dim, p}}, p);
}

namespace {

using nlohmann::json;

Exponent ParseExponent(const json& j, const char* field) {
  if (j.is_number()) return Exponent(j.get<double>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (s == "inf" || s == "infinity") return Exponent::Infinity();
  }
  Fail(ErrorCode::kParse,
       std::string("field '") + field + "' must be a number or \"inf\"");
}

int ParseDim(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    Fail(ErrorCode::kParse, "field 'dim' must be a positive integer");
  }
  return static_cast<int>(j.get<long long>());
}

json ExponentToJson(Exponent e) {
  if (e.is_infinite()) return "inf";
  return e.value();
}

}  // namespace

SpaceSpec SpaceSpec::FromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("space JSON: ") + e.what());
  }
  if (!j.is_object()) Fail(ErrorCode::kParse, "space must be a JSON object");
  if (j.contains("blocks")) {
    const json& arr = j["blocks"];
    if (!arr.is_array() || arr.empty()) {
      Fail(ErrorCode::kParse, "'blocks' must be a non-empty array");
    }
    std::vector<Block> blocks;
    for (const json& b : arr) {
      if (!b.is_object() || !b.contains("dim") || !b.contains("p")) {
        Fail(ErrorCode::kParse, "each block needs 'dim' and 'p'");
      }
      blocks.push_back({ParseDim(b["dim"]), ParseExponent(b["p"], "p")});
    }
    Exponent outer = blocks.front().p;
    if (j.contains("outer_p")) {
      outer = ParseExponent(j["outer_p"], "outer_p");
    } else if (blocks.size() > 1) {
      Fail(ErrorCode::kParse, "'outer_p' is required with several blocks");
    }
    return SpaceSpec(std::move(blocks), outer);
  }
  if (j.contains("p") && j.contains("dim")) {
    return Plain(ParseDim(j["dim"]), ParseExponent(j["p"], "p"));
  }
  Fail(ErrorCode::kParse, "space needs either 'blocks' or 'p' and 'dim'");
}

std::string SpaceSpec::ToJson() const {
  json blocks = json::array();
  for (const Block& b : blocks_) {
    blocks.push_back({{"dim", b.dim}, {"p", ExponentToJson(b.p)}});
  }
  json j = {{"outer_p", ExponentToJson(outer_)}, {"blocks", blocks}};
  return j.dump();
}

std::optional<Exponent> SpaceSpec::plain_exponent() const {
  if (blocks_.size() == 1) return blocks_.front().p;
  for (const Block& b : blocks_) {
    if (b.dim > 1 && !(b.p == outer_)) return std::nullopt;
  }
  return outer_;
}

bool SpaceSpec::is_polyhedral() const {
  if (blocks_.size() == 1) {
    return blocks_.front().dim == 1 || blocks_.front().p.is_polyhedral();
  }
  if (!outer_.is_polyhedral()) return false;
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) {
    return b.dim == 1 || b.p.is_polyhedral();
  });
}

bool SpaceSpec::is_strictly_convex() const {
  if (dimension_ == 1) return true;
  if (blocks_.size() == 1) return blocks_.front().p.is_smooth();
  if (!outer_.is_smooth()) return false;
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) {
    return b.dim == 1 || b.p.is_smooth();
  });
}

bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
  if (a.blocks_.size() != b.blocks_.size() || !(a.outer_ == b.outer_)) {
    return false;
  }
  for (size_t i = 0; i < a.blocks_.size(); ++i) {
    if (a.blocks_[i].dim != b.blocks_[i].dim ||
        !(a.blocks_[i].p == b.blocks_[i].p)) {
      return false;
    }
  }
  return true;
}

double LpNorm(const double* x, int n, Exponent p) {
  double max_abs = 0.0;
  for (int i = 0; i < n; ++i) max_abs = std::max(max_abs, std::abs(x[i]));
  if (max_abs == 0.0 || p.is_infinite()) return max_abs;
  double sum = 0.0;
  if (p.is_one()) {
    for (int i = 0; i < n; ++i) sum += std::abs(x[i]);
    return sum;
  }
  const double pv = p.value();
  if (pv == 2.0) {
    for (int i = 0; i < n; ++i) {
      const double r = x[i] / max_abs;
      sum += r * r;
    }
    return max_abs * std::sqrt(sum);
  }
  for (int i = 0; i < n; ++i) sum += std::pow(std::abs(x[i]) / max_abs, pv);
  return max_abs * std::pow(sum, 1.0 / pv);
}

double Norm(const SpaceSpec& spec, const Vector& x) {
  CheckDimension(x.size(), spec.dimension(), "norm");
  const auto& blocks = spec.blocks();
  if (blocks.size() == 1) {
    return LpNorm(x.data(), spec.dimension(), blocks.front().p);
  }
  Vector block_norms(static_cast<Eigen::Index>(blocks.size()));
  int offset = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    block_norms[static_cast<Eigen::Index>(i)] =
        LpNorm(x.data() + offset, blocks[i].dim, blocks[i].p);
    offset += blocks[i].dim;
  }
  return LpNorm(block_norms, spec.outer());
}

SpaceSpec DualSpec(const SpaceSpec& spec) {
  std::vector<Block> blocks;
  blocks.reserve(spec.blocks().size());
  for (const Block& b : spec.blocks()) {
    blocks.push_back({b.dim, ConjugateExponent(b.p)});
  }
  return SpaceSpec(std::move(blocks), ConjugateExponent(spec.outer()));
}

Vector DualityMap(const Vector& a, Exponent p) {
  if (!p.is_smooth()) {
    Fail(ErrorCode::kInvalidArgument,
         "duality map is set-valued for p = 1 and p = inf");
  }
  const double norm = LpNorm(a, p);
  if (norm == 0.0) {
    Fail(ErrorCode::kInvalidArgument, "duality map of the zero vector");
  }
  const double pv = p.value();
  if (pv == 2.0) return a / norm;
  Vector c(a.size());
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    const double u = a[k] / norm;
    c[k] = std::copysign(std::pow(std::abs(u), pv - 1.0), u);
    if (u == 0.0) c[k] = 0.0;
  }
  return c;
}

namespace {

// Inner support functional of a single l_p block, written into out.
void BlockSupport(const double* x, int n, Exponent p, double* out) {
  const double norm = LpNorm(x, n, p);
  std::fill(out, out + n, 0.0);
  if (norm == 0.0) return;
  if (p.is_infinite()) {
    int best = 0;
    for (int i = 1; i < n; ++i) {
      if (std::abs(x[i]) > std::abs(x[best])) best = i;
    }
    out[best] = x[best] > 0 ? 1.0 : -1.0;
    return;
  }
  if (p.is_one()) {
    for (int i = 0; i < n; ++i) {
      out[i] = x[i] > 0 ? 1.0 : (x[i] < 0 ? -1.0 : 0.0);
    }
    return;
  }
  const double pv = p.value();
  for (int i = 0; i < n; ++i) {
    const double u = x[i] / norm;
    out[i] = u == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(u), pv - 1.0), u);
  }
}

}  // namespace

Vector SupportFunctional(const SpaceSpec& spec, const Vector& x) {
  CheckDimension(x.size(), spec.dimension(), "support functional");
  const auto& blocks = spec.blocks();
  Vector z = Vector::Zero(x.size());
  if (blocks.size() == 1) {
    BlockSupport(x.data(), spec.dimension(), blocks.front().p, z.data());
    return z;
  }
  const auto nb = static_cast<int>(blocks.size());
  Vector block_norms(nb);
  int offset = 0;
  for (int i = 0; i < nb; ++i) {
    block_norms[i] = LpNorm(x.data() + offset, blocks[i].dim, blocks[i].p);
    offset += blocks[i].dim;
  }
  Vector weights(nb);
  BlockSupport(block_norms.data(), nb, spec.outer(), weights.data());
  offset = 0;
  for (int i = 0; i < nb; ++i) {
    if (weights[i] != 0.0) {
      BlockSupport(x.data() + offset, blocks[i].dim, blocks[i].p,
                   z.data() + offset);
      z.segment(offset, blocks[i].dim) *= weights[i];
    }
    offset += blocks[i].dim;
  }
  return z;
}

SmoothnessReport IsSmoothPoint(const SpaceSpec& spec, const Vector& z,
                               double tol) {
  CheckDimension(z.size(), spec.dimension(), "smoothness test");
  const auto p = spec.plain_exponent();
  if (!p || !p->is_polyhedral()) {
    Fail(ErrorCode::kUnsupported,
         "smoothness test needs a plain l_1 or l_inf space");
  }
  const double norm = Norm(spec, z);
  if (std::abs(norm - 1.0) > tol) {
    Fail(ErrorCode::kInvalidArgument, "point is not on the unit sphere");
  }
  SmoothnessReport report;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double a = std::abs(z[i]);
    if (p->is_infinite() ? a >= 1.0 - tol : a <= tol) {
      report.tight.push_back(static_cast<int>(i));
    }
  }
  report.smooth = p->is_infinite() ? report.tight.size() == 1
                                   : report.tight.empty();
  return report;
}

}  // namespace bjapprox
