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

// bjapprox: command-line front end.
//
//   bjapprox dist PROBLEM [--oracle] [--tol T] [--seed S] [--report PATH]
//   bjapprox approx PROBLEM ...
//   bjapprox ortho --space JSON --x LIST --y LIST   (or a file with space/x/y)
//   bjapprox certify REPORT
//   bjapprox holder --u LIST --v LIST --p P
//   bjapprox selftest

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"

namespace bjcli {
namespace {

struct CommonFlags {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string report_path;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

void AddCommon(CLI::App* cmd, CommonFlags& flags) {
  flags.tol_opt = cmd->add_option("--tol", flags.tol, "Span-membership tolerance")
                      ->capture_default_str();
  flags.seed_opt =
      cmd->add_option("--seed", flags.seed, "Seed for multi-start and probes")
          ->capture_default_str();
  cmd->add_option("--report", flags.report_path, "Write the report here, not stdout");
}

void Emit(const json& doc, const CommonFlags& flags) {
  const std::string text = Dump(doc);
  if (flags.report_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(flags.report_path, std::ios::binary);
  if (!out) throw CliError(kExitFailure, "cannot write " + flags.report_path);
  out << text;
}

json ToJson(const std::vector<double>& v) { return json(v); }

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double Euclid(const std::vector<double>& a) { return std::sqrt(Dot(a, a)); }

double NormOf(const bja_space* space, const std::vector<double>& x) {
  double out = 0.0;
  Check(bja_norm(space, x.data(), static_cast<int>(x.size()), &out));
  return out;
}

int Solve(bool with_primal, const std::string& path, bool oracle,
          const CommonFlags& flags) {
  const std::string text = ReadFile(path);
  const Problem problem = ParseProblem(text, /*require_basis=*/true);
  const SpacePtr space = MakeSpace(problem.space);
  const int n = static_cast<int>(problem.x0.size());
  const SubspacePtr sub = MakeSubspace(problem.basis, n);

  bja_options options;
  bja_options_default(&options);
  options.tol = flags.tol_opt->count() ? flags.tol : problem.tolerance.value_or(flags.tol);
  options.seed = flags.seed_opt->count() ? flags.seed : problem.seed.value_or(flags.seed);

  bja_result* raw = nullptr;
  if (with_primal) {
    Check(bja_best_approximation(space.get(), sub.get(), problem.x0.data(), n,
                                 &options, &raw));
  } else {
    Check(bja_distance(space.get(), sub.get(), problem.x0.data(), n, &options, &raw));
  }
  const ResultPtr result(raw);

  json report;
  report["command"] = with_primal ? "approx" : "dist";
  report["input_digest"] = Sha256Hex(text);
  report["problem"] = problem.raw;
  report["seed"] = options.seed;
  report["tolerance"] = options.tol;
  const double distance = bja_result_distance(result.get());
  report["distance"] = distance;

  std::vector<double> z(static_cast<size_t>(n));
  bja_certificate_info cert{};
  Check(bja_result_certificate(result.get(), z.data(), n, &cert));
  report["certificate"] = {{"z", ToJson(z)},
                           {"dual_norm", cert.dual_norm},
                           {"pairing", cert.pairing},
                           {"kernel_residual", cert.kernel_residual},
                           {"degenerate", cert.degenerate != 0}};
  report["dual_method"] = bja_result_dual_method(result.get());
  const bool converged = bja_result_converged(result.get()) != 0;
  report["converged"] = converged;

  if (with_primal) {
    std::vector<double> y(static_cast<size_t>(n)), r(static_cast<size_t>(n));
    Check(bja_result_best_approx(result.get(), y.data(), n));
    Check(bja_result_residual(result.get(), r.data(), n));
    report["best_approx"] = ToJson(y);
    report["residual"] = ToJson(r);
    report["duality_gap"] = bja_result_duality_gap(result.get());
    report["primal_method"] = bja_result_primal_method(result.get());
    static const char* kUnique[] = {"yes", "no", "unknown"};
    report["unique"] = kUnique[bja_result_unique(result.get())];
  } else {
    report["duality_gap"] = nullptr;
  }

  json warnings = json::array();
  for (int i = 0; i < bja_result_warning_count(result.get()); ++i) {
    warnings.push_back(bja_result_warning(result.get(), i));
  }
  report["warnings"] = warnings;

  if (oracle) {
    bja_oracle_config cfg;
    bja_oracle_config_default(&cfg);
    cfg.seed = options.seed;
    json o;
    double primal = 0.0;
    double dual = 0.0;
    bja_status st = bja_brute_force_distance(space.get(), sub.get(),
                                             problem.x0.data(), n, &cfg, &primal);
    if (st == BJA_OK) {
      if (bja_subspace_kernel_dim(sub.get()) > 0) {
        const SpacePtr dual_space = MakeDual(space.get());
        st = bja_brute_force_sphere_max(dual_space.get(), sub.get(),
                                        problem.x0.data(), n, &cfg, &dual);
      }
    }
    if (st == BJA_OK) {
      const double band = 1e-4 * (1.0 + distance);
      o["primal"] = primal;
      o["dual"] = dual;
      o["agree"] = std::abs(primal - distance) <= band &&
                   std::abs(dual - distance) <= band &&
                   std::abs(primal - dual) <= 2e-4;
    } else {
      o["primal"] = nullptr;
      o["dual"] = nullptr;
      o["agree"] = false;
      o["error"] = bja_last_error();
    }
    report["oracle"] = o;
  }
  report["timestamp"] = UtcTimestamp();
  Emit(report, flags);
  return converged ? kExitOk : kExitNotConverged;
}

struct OrthoArgs {
  std::string file;
  std::string space;
  std::string x;
  std::string y;
};

int Ortho(const OrthoArgs& args, const CommonFlags& flags) {
  json space_json;
  std::vector<double> x, y;
  if (!args.file.empty()) {
    json doc;
    try {
      doc = json::parse(ReadFile(args.file));
    } catch (const json::parse_error& e) {
      throw CliError(kExitParse, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("space") || !doc.contains("x") ||
        !doc.contains("y")) {
      throw CliError(kExitParse, "ortho file needs \"space\", \"x\" and \"y\"");
    }
    space_json = doc["space"];
    x = ParseList(doc["x"].dump());
    y = ParseList(doc["y"].dump());
  }
  if (!args.space.empty()) {
    try {
      space_json = json::parse(args.space);
    } catch (const json::parse_error& e) {
      throw CliError(kExitParse, std::string("malformed --space: ") + e.what());
    }
  }
  if (!args.x.empty()) x = ParseList(args.x);
  if (!args.y.empty()) y = ParseList(args.y);
  if (space_json.is_null() || x.empty() || y.empty()) {
    throw CliError(kExitParse, "ortho needs a space and both vectors");
  }
  const SpacePtr space = MakeSpace(space_json);
  const int n = bja_space_dim(space.get());
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
    throw CliError(kExitDimension, "vector lengths must equal the space dimension");
  }
  int orthogonal = 0;
  double lambda = 0.0;
  double min_value = 0.0;
  Check(bja_bj_orthogonal(space.get(), x.data(), y.data(), n, flags.tol,
                          &orthogonal, &lambda, &min_value));
  json report = {{"command", "ortho"},
                 {"space", space_json},
                 {"x", ToJson(x)},
                 {"y", ToJson(y)},
                 {"orthogonal", orthogonal != 0},
                 {"lambda", lambda},
                 {"min_value", min_value},
                 {"norm_x", NormOf(space.get(), x)},
                 {"tolerance", flags.tol}};
  Emit(report, flags);
  return kExitOk;
}

// Re-derives every certificate claim of a dist/approx report from its
// embedded problem, without trusting any solver output beyond the numbers
// being checked.
int Certify(const std::string& path, const CommonFlags& flags) {
  json rep;
  try {
    rep = json::parse(ReadFile(path));
  } catch (const json::parse_error& e) {
    throw CliError(kExitParse, std::string("malformed report: ") + e.what());
  }
  if (!rep.is_object() || !rep.contains("problem") || !rep.contains("certificate") ||
      !rep.contains("distance")) {
    throw CliError(kExitParse, "not a dist/approx report");
  }
  const Problem problem = ParseProblem(rep["problem"].dump(), true);
  const SpacePtr space = MakeSpace(problem.space);
  const SpacePtr dual = MakeDual(space.get());
  const int n = static_cast<int>(problem.x0.size());
  const SubspacePtr sub = MakeSubspace(problem.basis, n);

  const json& cert = rep["certificate"];
  std::vector<double> z;
  double distance = 0.0, pairing = 0.0, dual_norm = 0.0;
  bool degenerate = false;
  try {
    z = cert.at("z").get<std::vector<double>>();
    distance = rep.at("distance").get<double>();
    pairing = cert.at("pairing").get<double>();
    dual_norm = cert.at("dual_norm").get<double>();
    degenerate = cert.at("degenerate").get<bool>();
  } catch (const json::exception& e) {
    throw CliError(kExitParse, std::string("incomplete certificate: ") + e.what());
  }
  if (static_cast<int>(z.size()) != n) {
    throw CliError(kExitDimension, "certificate length differs from the space");
  }

  json checks = json::object();
  const double scale = 1.0 + std::abs(distance);
  const double z_norm = NormOf(dual.get(), z);
  const bool zero_z = Euclid(z) == 0.0;
  checks["dual_norm_is_one"] =
      (degenerate && zero_z) || std::abs(z_norm - 1.0) <= 1e-9;
  checks["dual_norm_reported"] = std::abs(z_norm - dual_norm) <= 1e-9;
  bool annihilates = true;
  for (const auto& row : problem.basis) {
    annihilates = annihilates && std::abs(Dot(row, z)) <= 1e-9 * std::max(Euclid(row), 1e-300);
  }
  checks["annihilates_basis"] = annihilates;
  checks["pairing_matches"] =
      std::abs(Dot(problem.x0, z) - pairing) <= 1e-9 * (1.0 + std::abs(pairing));
  checks["weak_duality"] = std::abs(pairing) <= distance + 1e-7 * scale;

  const bool converged = rep.value("converged", false);
  if (rep.contains("best_approx") && !rep["best_approx"].is_null()) {
    std::vector<double> y, r;
    double gap = 0.0;
    try {
      y = rep.at("best_approx").get<std::vector<double>>();
      r = rep.at("residual").get<std::vector<double>>();
      gap = rep.at("duality_gap").get<double>();
    } catch (const json::exception& e) {
      throw CliError(kExitParse, std::string("incomplete report: ") + e.what());
    }
    if (static_cast<int>(y.size()) != n || static_cast<int>(r.size()) != n) {
      throw CliError(kExitDimension, "best_approx length differs from the space");
    }
    int in_span = 0;
    Check(bja_subspace_contains(sub.get(), y.data(), n, 1e-9, &in_span));
    checks["best_approx_in_span"] = in_span != 0;
    double residual_err = 0.0;
    for (int i = 0; i < n; ++i) {
      residual_err = std::max(residual_err, std::abs(problem.x0[i] - y[i] - r[i]));
    }
    checks["residual_matches"] = residual_err <= 1e-9 * scale;
    checks["residual_norm_is_distance"] =
        std::abs(NormOf(space.get(), r) - distance) <= 1e-9 * scale;
    checks["gap_matches"] = std::abs(distance - std::abs(pairing) - gap) <= 1e-9 * scale;
    if (converged) checks["gap_within_tolerance"] = std::abs(gap) <= 1e-7 * scale;
  } else {
    checks["distance_is_pairing"] =
        std::abs(distance - std::abs(pairing)) <= 1e-9 * scale;
  }

  bool valid = true;
  json failures = json::array();
  for (const auto& [name, ok] : checks.items()) {
    if (!ok.get<bool>()) {
      valid = false;
      failures.push_back(name);
    }
  }
  json report = {{"command", "certify"},
                 {"report_digest", Sha256Hex(rep.dump())},
                 {"valid", valid},
                 {"checks", checks},
                 {"failures", failures}};
  Emit(report, flags);
  return valid ? kExitOk : kExitCheckFailed;
}

int Holder(const std::string& u_text, const std::string& v_text, double p,
           const CommonFlags& flags) {
  const std::vector<double> u = ParseList(u_text);
  const std::vector<double> v = ParseList(v_text);
  if (u.size() != v.size()) throw CliError(kExitDimension, "u and v differ in length");
  bja_oracle_config cfg;
  bja_oracle_config_default(&cfg);
  cfg.seed = flags.seed;
  bja_holder_info info{};
  Check(bja_holder_check(u.data(), v.data(), static_cast<int>(u.size()), p, &cfg,
                         &info));
  json report = {{"command", "holder"},
                 {"u", ToJson(u)},
                 {"v", ToJson(v)},
                 {"p", p},
                 {"holds", info.holds != 0},
                 {"classical_lhs", info.classical_lhs},
                 {"classical_rhs", info.classical_rhs},
                 {"mixed_lhs", info.mixed_lhs},
                 {"mixed_rhs", info.mixed_rhs},
                 {"blocks", info.blocks}};
  Emit(report, flags);
  return info.holds ? kExitOk : kExitCheckFailed;
}

void PrintRow(int id, const char* title, int passed, double seconds,
              const char* detail, void* /*user*/) {
  std::printf("[%s] %d. %s (%.3f s): %s\n", passed ? "PASS" : "FAIL", id, title,
              seconds, detail);
  std::fflush(stdout);
}

int SelfTest(std::uint64_t seed) {
  int failures = 0;
  Check(bja_selftest_run(seed, PrintRow, nullptr, &failures));
  const int total = bja_selftest_count();
  std::printf("%d/%d criteria passed\n", total - failures, total);
  return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace
}  // namespace bjcli

int main(int argc, char** argv) {
  using namespace bjcli;
  CLI::App app{"Distances, best approximations and dual certificates in mixed "
               "l_p-sum spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bja_version()));

  CommonFlags flags;
  std::string problem_path;
  bool oracle = false;

  CLI::App* dist = app.add_subcommand("dist", "Distance from x0 to the span of the basis");
  dist->add_option("problem", problem_path, "Problem file (JSON)")->required();
  dist->add_flag("--oracle", oracle, "Also run the brute-force oracles");
  AddCommon(dist, flags);

  CLI::App* approx = app.add_subcommand("approx", "Best approximation with certificate");
  approx->add_option("problem", problem_path, "Problem file (JSON)")->required();
  approx->add_flag("--oracle", oracle, "Also run the brute-force oracles");
  AddCommon(approx, flags);

  OrthoArgs ortho_args;
  CLI::App* ortho = app.add_subcommand("ortho", "Birkhoff-James orthogonality of x to y");
  ortho->add_option("file", ortho_args.file, "JSON file with space, x and y");
  ortho->add_option("--space", ortho_args.space, "Space as JSON");
  ortho->add_option("--x", ortho_args.x, "Comma-separated coordinates of x");
  ortho->add_option("--y", ortho_args.y, "Comma-separated coordinates of y");
  AddCommon(ortho, flags);

  std::string report_in;
  CLI::App* certify = app.add_subcommand("certify", "Recheck the certificate in a report");
  certify->add_option("report_file", report_in, "Report written by dist or approx")->required();
  AddCommon(certify, flags);

  std::string u_text, v_text;
  double p = 2.0;
  CLI::App* holder = app.add_subcommand("holder", "Hoelder inequality via the mixed-norm bound");
  holder->add_option("--u", u_text, "Comma-separated u")->required();
  holder->add_option("--v", v_text, "Comma-separated v")->required();
  holder->add_option("--p", p, "Exponent in (1, inf)")->capture_default_str();
  AddCommon(holder, flags);

  CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--seed", flags.seed, "Seed for the randomized criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*dist) return Solve(false, problem_path, oracle, flags);
    if (*approx) return Solve(true, problem_path, oracle, flags);
    if (*ortho) return Ortho(ortho_args, flags);
    if (*certify) return Certify(report_in, flags);
    if (*holder) return Holder(u_text, v_text, p, flags);
    if (*selftest) return SelfTest(flags.seed);
  } catch (const CliError& e) {
    std::fprintf(stderr, "bjapprox: %s\n", e.what());
    return e.exit_code();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "bjapprox: %s\n", e.what());
    return kExitFailure;
  }
  return kExitFailure;
}
