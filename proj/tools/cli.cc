// Copyright 2026 The dplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "dplab/csv.h"
#include "dplab/detector.h"
#include "dplab/dp_metrics.h"
#include "dplab/errors.h"
#include "dplab/info_bounds.h"
#include "dplab/mechanism.h"
#include "dplab/monte_carlo.h"
#include "json.hpp"
#include "manifest.h"

namespace dplab::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 1;
constexpr std::uint64_t kLowPowerTrials = 10000;

struct Options {
  std::string config;
  std::vector<double> eps;
  std::optional<double> delta;
  std::string delta_rule;
  std::optional<double> s;
  std::optional<double> s2;
  std::optional<double> sigma_z;
  std::optional<double> sigma2_xa;
  std::vector<double> dmu;
  std::vector<double> multipliers;
  std::optional<std::uint64_t> n;
  std::optional<double> sum_var;
  std::vector<double> alpha_grid;
  std::uint64_t trials = 1000000;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string calibration_mode = "definition3";
  std::string units = "nats";
  unsigned workers = 0;
  std::string data;
  std::optional<double> record_var;
  double tamper_power = 0.0;
};

// Declares which options each subcommand accepts and binds them to `o`.
std::unique_ptr<CLI::App> BuildApp(Options& o) {
  auto app = std::make_unique<CLI::App>(
      "Gaussian-mechanism privacy calibration, attack detection thresholds, "
      "mutual-information bounds and divergence-based privacy metrics.",
      "dplab");
  app->require_subcommand(1);
  app->set_version_flag("--version", kVersion);

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--config", o.config,
                    "JSON config file; command-line flags override it");
    sub->add_option("--out", o.out, "Output path");
  };
  auto eps = [&o](CLI::App* sub) {
    sub->add_option("--eps", o.eps, "Privacy parameter epsilon (list)")
        ->delimiter(',');
  };
  auto budget = [&o, &eps](CLI::App* sub) {
    eps(sub);
    sub->add_option("--delta", o.delta, "Constant delta");
    sub->add_option("--delta-rule", o.delta_rule,
                    "eps/<divisor> (default eps/20) or constant");
    sub->add_option("--calibration-mode", o.calibration_mode,
                    "Noise calibration: definition3 or theorem1")
        ->check(CLI::IsMember({"definition3", "theorem1"}));
  };
  auto sens = [&o](CLI::App* sub) {
    sub->add_option("--s", o.s, "L2 sensitivity");
  };
  auto grids = [&o](CLI::App* sub) {
    sub->add_option("--dmu", o.dmu, "Attack impact delta_mu (list)")
        ->delimiter(',');
    sub->add_option("--alpha-grid", o.alpha_grid, "False-alarm levels (list)")
        ->delimiter(',');
  };

  CLI::App* calibrate =
      app->add_subcommand("calibrate", "Noise scale for an (eps, delta, s)");
  common(calibrate);
  budget(calibrate);
  sens(calibrate);

  CLI::App* roc = app->add_subcommand("roc", "Analytic ROC curves to CSV");
  common(roc);
  budget(roc);
  sens(roc);
  grids(roc);

  CLI::App* validate = app->add_subcommand(
      "validate", "Monte Carlo check of analytic size and power");
  common(validate);
  budget(validate);
  sens(validate);
  grids(validate);
  validate->add_option("--trials", o.trials, "Trials per hypothesis");
  validate->add_option("--seed", o.seed, "Seed (fallback: $DPLAB_SEED)");
  validate->add_option("--workers", o.workers, "Worker threads (0 = auto)");
  validate->add_option("--tamper-power", o.tamper_power)
      ->group("");  // harness self-check: offsets the analytic power

  CLI::App* bounds = app->add_subcommand(
      "bounds", "Mutual-information bounds and attack-variance ceiling");
  common(bounds);
  budget(bounds);
  sens(bounds);
  bounds->add_option("--s2", o.s2, "Squared L2 sensitivity");
  bounds->add_option("--sigma-z", o.sigma_z,
                     "Noise scale; s^2 derived with --eps/--delta");
  bounds->add_option("--n", o.n, "Dataset dimension");
  bounds->add_option("--sum-var", o.sum_var, "Sum of record variances");
  bounds->add_option("--sigma2-xa", o.sigma2_xa, "Attack variance to assess");
  bounds->add_option("--data", o.data, "One-column CSV dataset (header value)");
  bounds->add_option("--record-var", o.record_var,
                     "Generative variance of each record in --data");
  bounds->add_option("--units", o.units, "nats or bits")
      ->check(CLI::IsMember({"nats", "bits"}));

  CLI::App* metrics = app->add_subcommand(
      "metrics", "KL-DP vs Chernoff-DP compliance sweep");
  common(metrics);
  budget(metrics);
  sens(metrics);
  metrics->add_option("--dmu", o.dmu, "Absolute delta_mu values (list)")
      ->delimiter(',');
  metrics->add_option("--multipliers", o.multipliers,
                      "delta_mu as multiples of s (list, default 2,4)")
      ->delimiter(',');
  return app;
}

// Config keys are option names without the leading dashes; underscores are
// accepted in place of dashes.
std::vector<std::string> ConfigTokens(const std::string& path,
                                      const CLI::App& sub) {
  std::ifstream in(path);
  if (!in) throw DomainError("config", "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("config", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("config", "must be a JSON object");

  std::vector<std::string> tokens;
  for (const auto& [key, value] : j.items()) {
    std::string name = key;
    std::replace(name.begin(), name.end(), '_', '-');
    const CLI::Option* opt = sub.get_option_no_throw("--" + name);
    if (opt == nullptr || name == "config") {
      throw DomainError("config." + key,
                        "unknown option for " + sub.get_name());
    }
    if (opt->count() > 0) continue;  // flag given on the command line wins
    auto render = [&](const nlohmann::json& v) -> std::string {
      if (v.is_string()) return v.get<std::string>();
      if (v.is_number()) return v.dump();
      throw DomainError("config." + key, "values must be numbers or strings");
    };
    tokens.push_back("--" + name);
    if (value.is_array()) {
      if (value.empty()) throw DomainError("config." + key, "empty list");
      for (const auto& v : value) tokens.push_back(render(v));
    } else {
      tokens.push_back(render(value));
    }
  }
  return tokens;
}

std::uint64_t ResolveSeed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("DPLAB_SEED"); env && *env) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0' || env[0] == '-') {
      throw DomainError("DPLAB_SEED", "must be an unsigned integer");
    }
    return v;
  }
  return kDefaultSeed;
}

CalibrationMode ResolveMode(const Options& o) {
  return o.calibration_mode == "theorem1" ? CalibrationMode::kSquaredLog
                                          : CalibrationMode::kStandard;
}

std::string AlternateModeName(const Options& o) {
  return o.calibration_mode == "theorem1" ? "definition3" : "theorem1";
}

DeltaRule ResolveDeltaRule(const Options& o) {
  std::string rule = o.delta_rule;
  if (rule.empty()) rule = o.delta ? "constant" : "eps/20";
  if (rule == "constant") {
    if (!o.delta) {
      throw DomainError("delta", "required with --delta-rule constant");
    }
    const double d = *o.delta;
    return [d](double) { return d; };
  }
  if (rule.rfind("eps/", 0) == 0) {
    const std::string tail = rule.substr(4);
    std::size_t used = 0;
    double divisor = 0.0;
    try {
      divisor = std::stod(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tail.size() || !(divisor > 0.0) || !std::isfinite(divisor)) {
      throw DomainError("delta-rule", "divisor must be a positive number");
    }
    return [divisor](double e) { return e / divisor; };
  }
  throw DomainError("delta-rule", "must be 'constant' or 'eps/<divisor>'");
}

std::vector<double> EpsOrDefault(const Options& o,
                                 std::vector<double> fallback) {
  std::vector<double> eps = o.eps.empty() ? std::move(fallback) : o.eps;
  if (eps.empty()) throw DomainError("eps", "required");
  return eps;
}

std::vector<double> DefaultRocAlphas() {
  std::vector<double> a = {0.001, 0.002, 0.005};
  for (int i = 1; i <= 99; ++i) a.push_back(i / 100.0);
  a.push_back(0.995);
  a.push_back(0.999);
  return a;
}

void RequireOpenUnit(const std::vector<double>& values, const char* field) {
  for (double v : values) {
    if (!(v > 0.0 && v < 1.0)) {
      throw DomainError(field, "values must lie in the open interval (0, 1)");
    }
  }
}

ordered_json EchoConfig(const Options& o, const std::string& command) {
  ordered_json j;
  j["command"] = command;
  if (!o.eps.empty()) j["eps"] = o.eps;
  if (o.delta) j["delta"] = *o.delta;
  if (!o.delta_rule.empty()) j["delta-rule"] = o.delta_rule;
  if (o.s) j["s"] = *o.s;
  if (o.s2) j["s2"] = *o.s2;
  if (o.sigma_z) j["sigma-z"] = *o.sigma_z;
  if (o.sigma2_xa) j["sigma2-xa"] = *o.sigma2_xa;
  if (!o.dmu.empty()) j["dmu"] = o.dmu;
  if (!o.multipliers.empty()) j["multipliers"] = o.multipliers;
  if (o.n) j["n"] = *o.n;
  if (o.sum_var) j["sum-var"] = *o.sum_var;
  if (!o.alpha_grid.empty()) j["alpha-grid"] = o.alpha_grid;
  if (command == "validate") j["trials"] = o.trials;
  if (!o.data.empty()) j["data"] = o.data;
  if (o.record_var) j["record-var"] = *o.record_var;
  j["calibration-mode"] = o.calibration_mode;
  if (command == "bounds") j["units"] = o.units;
  if (!o.config.empty()) j["config"] = o.config;
  if (!o.out.empty()) j["out"] = o.out;
  return j;
}

// Writes a single data file plus `<file>.manifest.json` when --out is set;
// otherwise prints the data to `out`.
void Emit(const Options& o, const std::string& command, std::uint64_t seed,
          const std::string& contents, std::ostream& out) {
  if (o.out.empty()) {
    out << contents;
    return;
  }
  RunManifest manifest{command, EchoConfig(o, command), seed, {}};
  manifest.outputs.push_back(WriteOutput(o.out, contents));
  WriteManifest(o.out + ".manifest.json", manifest);
  out << "wrote " << o.out << '\n';
}

// Decimal rendering of exp(log_value) that stays meaningful beyond the double
// range, e.g. "4.0000000000e-369".
std::string FormatFromLog(double log_value) {
  const double abs_log = std::fabs(log_value);
  if (abs_log < 700.0) return FormatReal(std::exp(log_value));
  const double log10v = log_value / std::log(10.0);
  double exponent = std::floor(log10v);
  double mantissa = std::pow(10.0, log10v - exponent);
  if (mantissa >= 9.99999999995) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  return fmt::format("{:.10f}e{:+.0f}", mantissa, exponent);
}

int CmdCalibrate(const Options& o, std::ostream& out) {
  if (!o.s) throw DomainError("s", "required");
  const std::vector<double> eps = EpsOrDefault(o, {});
  const DeltaRule rule = ResolveDeltaRule(o);
  const Sensitivity s(*o.s);
  const CalibrationMode mode = ResolveMode(o);
  const CalibrationMode alternate = mode == CalibrationMode::kStandard
                                        ? CalibrationMode::kSquaredLog
                                        : CalibrationMode::kStandard;
  std::ostringstream csv;
  csv << "mode,epsilon,delta,s,sigma_z,sigma_z_squared\n";
  for (double e : eps) {
    const PrivacyBudget budget(e, rule(e));
    const NoiseScale primary = CalibrateNoise(budget, s, mode);
    const NoiseScale other = CalibrateNoise(budget, s, alternate);
    auto row = [&](const std::string& name, NoiseScale sz) {
      csv << name << ',' << FormatReal(e) << ',' << FormatReal(budget.delta())
          << ',' << FormatReal(s.value()) << ',' << FormatReal(sz.value())
          << ',' << FormatReal(sz.variance()) << '\n';
    };
    row(o.calibration_mode, primary);
    row(AlternateModeName(o), other);
  }
  Emit(o, "calibrate", 0, csv.str(), out);
  return kExitOk;
}

int CmdRoc(const Options& o, std::ostream& out) {
  const std::vector<double> eps = EpsOrDefault(o, {0.5, 1.0, 2.0, 4.0});
  const DeltaRule rule = ResolveDeltaRule(o);
  const Sensitivity s(o.s.value_or(4.0));
  const CalibrationMode mode = ResolveMode(o);
  const std::vector<double> alphas =
      o.alpha_grid.empty() ? DefaultRocAlphas() : o.alpha_grid;

  struct Scenario {
    std::string label;
    double delta_mu;
  };
  std::vector<Scenario> scenarios;
  if (o.dmu.empty()) {
    scenarios = {{"gt", 2.0 * s.value()},
                 {"eq", s.value()},
                 {"lt", 0.5 * s.value()}};
  } else {
    for (double d : o.dmu) {
      if (d == 0.0 || !std::isfinite(d)) {
        throw DomainError("dmu", "must be finite and non-zero");
      }
      scenarios.push_back({"dmu" + FormatReal(d), d});
    }
  }

  // Compute everything before writing so a bad grid leaves no partial output.
  std::vector<std::pair<std::string, std::string>> files;
  for (const Scenario& sc : scenarios) {
    for (double e : eps) {
      const PrivacyBudget budget(e, rule(e));
      const RocCurve curve =
          ComputeRocCurve(sc.delta_mu, budget, s, alphas, mode);
      std::ostringstream csv;
      WriteRocCsv(curve, csv);
      files.emplace_back("roc_" + sc.label + "_eps" + FormatReal(e) + ".csv",
                         csv.str());
    }
  }

  const fs::path dir = o.out.empty() ? fs::path("roc_curves") : fs::path(o.out);
  RunManifest manifest{"roc", EchoConfig(o, "roc"), 0, {}};
  for (const auto& [name, contents] : files) {
    manifest.outputs.push_back(WriteOutput(dir / name, contents));
    out << "wrote " << (dir / name).string() << '\n';
  }
  WriteManifest(dir / "manifest.json", manifest);
  return kExitOk;
}

int CmdValidate(const Options& o, std::ostream& out, std::ostream& err) {
  const std::vector<double> eps = EpsOrDefault(o, {0.5, 1.0, 2.0, 4.0});
  const DeltaRule rule = ResolveDeltaRule(o);
  const double s = Sensitivity(o.s.value_or(4.0)).value();
  const std::vector<double> dmu =
      o.dmu.empty() ? std::vector<double>{2.0, 4.0, 8.0, 16.0} : o.dmu;
  const std::vector<double> alphas =
      o.alpha_grid.empty() ? std::vector<double>{0.01, 0.05, 0.1, 0.3}
                           : o.alpha_grid;
  RequireOpenUnit(alphas, "alpha-grid");
  if (o.trials < 1) throw DomainError("trials", "must be >= 1");
  for (double d : dmu) {
    if (d == 0.0 || !std::isfinite(d)) {
      throw DomainError("dmu", "must be finite and non-zero");
    }
  }
  const std::uint64_t seed = ResolveSeed(o);

  std::vector<ValidationCase> cases;
  for (double e : eps) {
    const double delta = PrivacyBudget(e, rule(e)).delta();
    for (double d : dmu) {
      for (double a : alphas) cases.push_back({e, delta, s, d, a});
    }
  }

  if (o.trials < kLowPowerTrials) {
    err << "warning: trials: " << o.trials << " < " << kLowPowerTrials
        << ", low power; 3-sigma bands are wide (e.g. alpha=0.05 band "
        << FormatReal(BinomialBand(0.05, o.trials)) << ")\n";
  }

  PowerFunction power = Power;
  if (o.tamper_power != 0.0) {
    const double offset = o.tamper_power;
    power = [offset](Probability a, double d, NoiseScale sz) {
      return Probability(
          std::clamp(Power(a, d, sz).value() + offset, 0.0, 1.0));
    };
  }

  const std::vector<ValidationRow> rows = ValidateAgainstMonteCarlo(
      cases, o.trials, RandomStream(seed), o.workers, ResolveMode(o), power);

  std::ostringstream csv;
  csv << "epsilon,delta,s,delta_mu,alpha,sigma_z,beta_bar,alpha_hat,"
         "beta_bar_hat,alpha_band,beta_band,pass\n";
  std::size_t failures = 0;
  for (const ValidationRow& r : rows) {
    failures += !r.passed;
    csv << FormatReal(r.input.epsilon) << ',' << FormatReal(r.input.delta)
        << ',' << FormatReal(r.input.s) << ',' << FormatReal(r.input.delta_mu)
        << ',' << FormatReal(r.input.alpha) << ',' << FormatReal(r.sigma_z)
        << ',' << FormatReal(r.beta_bar) << ',' << FormatReal(r.alpha_hat)
        << ',' << FormatReal(r.beta_bar_hat) << ','
        << FormatReal(r.alpha_band) << ',' << FormatReal(r.beta_band) << ','
        << (r.passed ? "pass" : "FAIL") << '\n';
  }
  Emit(o, "validate", seed, csv.str(), out);
  out << "validated " << rows.size() << " cases with " << o.trials
      << " trials each: " << failures << " outside 3-sigma bands\n";
  return failures == 0 ? kExitOk : kExitAcceptanceFailure;
}

int CmdBounds(const Options& o, std::ostream& out) {
  const std::optional<PopulationStats> stats = [&] {
    if (!o.data.empty()) {
      if (!o.record_var) throw DomainError("record-var", "required with --data");
      return std::optional(
          PopulationStats::FromDataset(LoadDatasetCsv(o.data, *o.record_var)));
    }
    if (!o.n) throw DomainError("n", "required (or --data)");
    if (!o.sum_var) throw DomainError("sum-var", "required (or --data)");
    return std::optional(PopulationStats(*o.n, *o.sum_var));
  }();

  const int sources = (o.s ? 1 : 0) + (o.s2 ? 1 : 0) + (o.sigma_z ? 1 : 0);
  if (sources != 1) {
    throw DomainError("s",
                      "exactly one of --s, --s2, --sigma-z (with --eps and "
                      "--delta) is required");
  }
  double s2 = 0.0;
  if (o.s) {
    s2 = Sensitivity(*o.s).value() * *o.s;
  } else if (o.s2) {
    if (!(std::isfinite(*o.s2) && *o.s2 >= 0.0)) {
      throw DomainError("s2", "must be finite and >= 0");
    }
    s2 = *o.s2;
  } else {
    if (o.eps.size() != 1) throw DomainError("eps", "exactly one value required");
    const double e = o.eps.front();
    const PrivacyBudget budget(e, ResolveDeltaRule(o)(e));
    s2 = SensitivitySquaredFromNoise(NoiseScale(*o.sigma_z), budget,
                                     ResolveMode(o));
  }
  if (!(s2 > 0.0)) throw DomainError("s", "must be > 0");

  const double unit = o.units == "bits" ? std::log(2.0) : 1.0;
  const Sensitivity s(std::sqrt(s2));
  std::ostringstream csv;
  csv << "key,value\n";
  auto kv = [&csv](const std::string& k, const std::string& v) {
    csv << k << ',' << v << '\n';
  };
  kv("n", std::to_string(stats->n()));
  kv("sum_var", FormatReal(stats->sum_var()));
  kv("s2", FormatReal(s2));
  kv("units", o.units);
  kv("mi_second_expansion", FormatReal(MiSecondExpansion(*stats, s) / unit));

  const std::optional<AttackVariance> ceiling =
      AttackVarianceCeilingFromLogS2(*stats, std::log(s2));
  if (ceiling) {
    kv("attack_variance_ceiling", FormatFromLog(ceiling->log_value()));
    kv("log_attack_variance_ceiling", FormatReal(ceiling->log_value()));
    const LogQuantity back = SensitivityLowerBound(*stats, *ceiling);
    kv("sensitivity_lower_bound_at_ceiling", FormatFromLog(back.log_value));
  } else {
    kv("attack_variance_ceiling", "unbounded (infeasible constraint)");
  }

  if (o.sigma2_xa) {
    const AttackVariance attack = AttackVariance::FromVariance(*o.sigma2_xa);
    kv("sigma2_xa", FormatReal(*o.sigma2_xa));
    kv("mi_first_expansion", FormatReal(MiFirstExpansion(*stats, attack) / unit));
    const LogQuantity lower = SensitivityLowerBound(*stats, attack);
    kv("sensitivity_lower_bound", FormatFromLog(lower.log_value));
    kv("log_sensitivity_lower_bound", FormatReal(lower.log_value));
    const bool within = !ceiling || attack.log_value() <= ceiling->log_value();
    kv("attack_within_ceiling", within ? "true" : "false");
  }
  Emit(o, "bounds", 0, csv.str(), out);
  return kExitOk;
}

int CmdMetrics(const Options& o, std::ostream& out) {
  const std::vector<double> eps = EpsOrDefault(
      o, {0.1, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0, 6.0,
          8.0, 10.0});
  const DeltaRule rule = ResolveDeltaRule(o);
  const Sensitivity s(o.s.value_or(4.0));
  if (s.value() == 0.0) throw DomainError("s", "must be > 0");
  if (!o.dmu.empty() && !o.multipliers.empty()) {
    throw DomainError("dmu", "give either --dmu or --multipliers, not both");
  }
  std::vector<double> multipliers =
      o.multipliers.empty() ? std::vector<double>{2.0, 4.0} : o.multipliers;
  if (!o.dmu.empty()) {
    multipliers.clear();
    for (double d : o.dmu) multipliers.push_back(d / s.value());
  }
  const std::vector<SweepRow> rows =
      MetricSweep(s, rule, eps, multipliers, ResolveMode(o));
  std::ostringstream csv;
  WriteSweepCsv(rows, csv);
  Emit(o, "metrics", 0, csv.str(), out);
  return kExitOk;
}

std::string FormatParseError(const CLI::Error& e) {
  std::string msg = e.what();
  // CLI11 reports option problems as "--name: reason"; keep that shape.
  if (msg.rfind("--", 0) == 0 && msg.find(": ") != std::string::npos) {
    return "error: " + msg.substr(2);
  }
  return "error: args: " + msg;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  auto parse = [](CLI::App& app, const std::vector<std::string>& tokens) {
    std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
    app.parse(reversed);
  };

  Options o;
  std::unique_ptr<CLI::App> app = BuildApp(o);
  try {
    parse(*app, args);
  } catch (const CLI::CallForHelp&) {
    out << app->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app->help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::Error& e) {
    err << FormatParseError(e) << '\n';
    return kExitValidationFailure;
  }

  try {
    const CLI::App* sub = app->get_subcommands().front();
    const std::string command = sub->get_name();
    if (!o.config.empty()) {
      std::vector<std::string> merged = args;
      const std::vector<std::string> extra = ConfigTokens(o.config, *sub);
      merged.insert(merged.end(), extra.begin(), extra.end());
      o = Options{};
      app = BuildApp(o);
      try {
        parse(*app, merged);
      } catch (const CLI::Error& e) {
        err << FormatParseError(e) << '\n';
        return kExitValidationFailure;
      }
    }

    if (command == "calibrate") return CmdCalibrate(o, out);
    if (command == "roc") return CmdRoc(o, out);
    if (command == "validate") return CmdValidate(o, out, err);
    if (command == "bounds") return CmdBounds(o, out);
    if (command == "metrics") return CmdMetrics(o, out);
    err << "error: command: unknown '" << command << "'\n";
    return kExitValidationFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidationFailure;
  } catch (const std::exception& e) {
    err << "error: io: " << e.what() << '\n';
    return kExitValidationFailure;
  }
}

}  // namespace dplab::cli
