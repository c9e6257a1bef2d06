// Copyright 2026 The weave Authors
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

#include "cli/commands.h"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <CLI/CLI.hpp>

#include "cli/property_suite.h"
#include "cli/specs.h"
#include "cli/state_file.h"
#include "weave/closed_forms.h"
#include "weave/errors.h"
#include "weave/states.h"

#ifndef WEAVE_VERSION
#define WEAVE_VERSION "unknown"
#endif

namespace weave::cli {
namespace {

bool is_qudit_row(ClosedFormId id) {
  return id == ClosedFormId::qudit_classical || id == ClosedFormId::qudit_bell_product;
}

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double gap = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    gap = std::max(gap, std::abs(a[i] - b[i]));
  }
  return gap;
}

std::vector<std::string> argmin_strings(const CorrelationProfile& p) {
  std::vector<std::string> out;
  for (const SetPartition& part : p.argmin) out.push_back(part.to_string());
  return out;
}

WeightsInfo weights_info(const std::string& spec, const WeightScheme& w) {
  return {spec, w.omega_values()};
}

}  // namespace

TableReport build_table(const TableOptions& o) {
  if (o.n < 2) throw ArgumentError("table needs N >= 2");
  if (o.d < 2) throw ArgumentError("table needs d >= 2");
  if (!o.closed_form_only && o.n > o.matrix_max_n) {
    throw CapacityError("matrix pipeline is limited to N <= " + std::to_string(o.matrix_max_n) +
                        "; pass --closed-form-only or raise --matrix-max-n");
  }
  const WeightScheme w = parse_weights(o.weights, o.n);
  TableReport report;
  report.n = o.n;
  report.d = o.d;
  report.mode = mode_name(o.mode);
  report.weights = weights_info(o.weights, w);

  for (ClosedFormId id : all_closed_forms()) {
    if (id == ClosedFormId::a_family) continue;
    ClosedFormFamily f;
    f.id = id;
    f.n = o.n;
    f.d = is_qudit_row(id) ? o.d : 2;
    try {
      validate(f);
    } catch (const ArgumentError& e) {
      report.skipped.push_back(closed_form_name(id) + ": " + e.what());
      continue;
    }
    TableRow row;
    row.family = closed_form_name(id);
    row.n = f.n;
    row.d = f.d;
    row.dist = cf_dist_all(f);
    for (int k = 2; k <= f.n; ++k) row.genuine.push_back(cf_genuine(f, k));
    row.total = row.dist.front();
    row.weaving = cf_weaving(f, w);

    if (!o.closed_form_only) {
      const DensityState state = make_state(to_state_family(f), o.limits);
      const SubsetEntropyCache cache(state, CacheFill::automatic, o.workers, o.limits);
      ProfileOptions po;
      po.mode = o.mode;
      po.workers = o.workers;
      po.limits = o.limits;
      const CorrelationProfile p = profile(cache, po);
      MatrixCheck m;
      m.dist = p.dist;
      m.genuine = p.genuine;
      m.weaving = weaving(p, w);
      m.max_disagreement = std::max({max_gap(m.dist, row.dist), max_gap(m.genuine, row.genuine),
                                     std::abs(m.weaving - row.weaving)});
      row.matrix = std::move(m);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

ProfileRecord build_profile(const ProfileOptionsCli& o) {
  const StateSpec spec = parse_state_spec(o.state);
  const DensityState state =
      spec.family ? make_state(*spec.family, o.limits) : load_state_file(spec.path, o.limits);
  const int n = state.num_subsystems();
  const std::optional<WeightScheme> w =
      n >= 2 ? std::optional(parse_weights(o.weights, n)) : std::nullopt;

  MinimizationMode used = o.mode;
  if (used == MinimizationMode::automatic) {
    used = is_permutation_invariant(state, o.limits) ? MinimizationMode::symmetric_fast
                                                     : MinimizationMode::brute;
  }
  const SubsetEntropyCache cache(state, CacheFill::automatic, o.workers, o.limits);
  ProfileOptions po;
  po.mode = used;
  po.workers = o.workers;
  po.limits = o.limits;
  const CorrelationProfile p = profile(cache, po);

  ProfileRecord r;
  r.source = spec.label;
  r.from_file = !spec.family;
  r.dims = state.dims();
  r.mode = mode_name(used);
  r.dist = p.dist;
  r.genuine = p.genuine;
  r.total = p.total;
  r.weaving = w ? weaving(p, *w) : 0.0;
  r.weights = w ? weights_info(o.weights, *w) : WeightsInfo{o.weights, {}};
  try {
    r.neural_complexity = neural_complexity(cache, o.limits);
  } catch (const CapacityError&) {
    r.neural_complexity.reset();
  }
  r.argmin = argmin_strings(p);
  return r;
}

ScalingReport build_scaling(const ScalingOptions& o) {
  const auto id = closed_form_from_name(o.family);
  if (!id) {
    throw ArgumentError("scaling needs a closed-form family, got '" + o.family + "'");
  }
  if (o.n_min < 2 || o.n_max < o.n_min) throw ArgumentError("scaling needs 2 <= n-min <= n-max");
  if (o.step < 0) throw ArgumentError("scaling step must be >= 0");
  ClosedFormFamily prototype;
  prototype.id = *id;
  prototype.d = o.d;
  prototype.a = o.a;

  std::vector<int> ns;
  for (long long n = o.n_min; n <= o.n_max; n = o.step == 0 ? 2 * n : n + o.step) {
    ClosedFormFamily f = prototype;
    f.n = static_cast<int>(n);
    try {
      validate(f);
    } catch (const ArgumentError&) {
      continue;  // e.g. odd N for pair families
    }
    ns.push_back(f.n);
  }
  if (ns.empty()) throw ArgumentError("no valid N in the requested range for " + o.family);
  // Weight files are sized for one N, so check the spec up front at every N.
  for (int n : ns) parse_weights(o.weights, n);

  ScalingReport r;
  r.family = o.family;
  r.law = scaling_law_name(claimed_scaling(*id));
  r.weights = o.weights;
  r.points = cf_scaling_sweep(prototype, ns,
                              [&](int n) { return parse_weights(o.weights, n); });
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genuine multipartite correlations and weaving measures (all values in bits)",
               "weave"};
  app.set_version_flag("--version", std::string(WEAVE_VERSION));
  app.require_subcommand(1);

  std::string output = "json";
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", output, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };
  std::string mode_text;
  auto add_mode = [&](CLI::App* sub, const std::string& fallback) {
    mode_text = fallback;
    sub->add_option("--mode", mode_text, "Partition minimization: auto, brute, fast")
        ->check(CLI::IsMember({"auto", "brute", "fast"}))
        ->capture_default_str();
  };
  int workers = 1;
  auto add_parallel = [&](CLI::App* sub) {
    sub->add_option("--parallel", workers, "Worker threads")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
  };

  TableOptions table;
  CLI::App* table_cmd = app.add_subcommand("table", "Closed forms for every family at one N, "
                                                    "checked against the matrix pipeline");
  table_cmd->add_option("--n", table.n, "Number of subsystems")->required();
  table_cmd->add_option("--d", table.d, "Local dimension of the qudit rows")->capture_default_str();
  table_cmd->add_option("--weights", table.weights, "k-1, uniform, delta:K or file:PATH")
      ->capture_default_str();
  table_cmd->add_flag("--closed-form-only", table.closed_form_only, "Skip the matrix pipeline");
  table_cmd->add_option("--matrix-max-n", table.matrix_max_n,
                        "Largest N run through the matrix pipeline")
      ->capture_default_str();
  add_mode(table_cmd, "brute");
  add_parallel(table_cmd);
  add_output(table_cmd);

  ProfileOptionsCli prof;
  CLI::App* profile_cmd = app.add_subcommand("profile", "Correlation profile of one state");
  profile_cmd->add_option("--state", prof.state, "Family spec (e.g. ghz:4, dicke:6:3) or JSON file")
      ->required();
  profile_cmd->add_option("--weights", prof.weights, "k-1, uniform, delta:K or file:PATH")
      ->capture_default_str();
  std::string profile_mode = "auto";
  profile_cmd->add_option("--mode", profile_mode, "Partition minimization: auto, brute, fast")
      ->check(CLI::IsMember({"auto", "brute", "fast"}))
      ->capture_default_str();
  add_parallel(profile_cmd);
  add_output(profile_cmd);

  ScalingOptions scaling;
  CLI::App* scaling_cmd =
      app.add_subcommand("scaling", "Closed-form weaving over a range of N");
  scaling_cmd->add_option("--family", scaling.family, "Closed-form family name")->required();
  scaling_cmd->add_option("--n-min", scaling.n_min)->capture_default_str();
  scaling_cmd->add_option("--n-max", scaling.n_max)->capture_default_str();
  scaling_cmd->add_option("--step", scaling.step, "Additive step; 0 doubles N")
      ->capture_default_str();
  scaling_cmd->add_option("--d", scaling.d)->capture_default_str();
  scaling_cmd->add_option("--a", scaling.a, "a-family amplitude")->capture_default_str();
  scaling_cmd->add_option("--weights", scaling.weights, "k-1, uniform, delta:K or file:PATH")
      ->capture_default_str();
  add_output(scaling_cmd);

  SuiteOptions suite;
  CLI::App* check_cmd = app.add_subcommand("check", "Randomized property suite");
  check_cmd->add_option("--seed", suite.seed)->capture_default_str();
  check_cmd->add_option("--trials", suite.trials)->check(CLI::PositiveNumber)->capture_default_str();
  check_cmd->add_option("--max-n", suite.max_n, "Largest random state")
      ->check(CLI::Range(3, 6))
      ->capture_default_str();
  add_output(check_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitArgument;
  }

  const OutputFormat format = output == "csv" ? OutputFormat::csv : OutputFormat::json;
  try {
    if (*table_cmd) {
      table.mode = parse_mode(mode_text);
      table.workers = workers;
      const TableReport r = build_table(table);
      out << render(r, format);
      if (!r.agrees()) {
        err << "weave: closed form and matrix pipeline disagree beyond " << r.tolerance << "\n";
        return kExitNumeric;
      }
    } else if (*profile_cmd) {
      prof.mode = parse_mode(profile_mode);
      prof.workers = workers;
      out << render(build_profile(prof), format);
    } else if (*scaling_cmd) {
      out << render(build_scaling(scaling), format);
    } else if (*check_cmd) {
      const SuiteReport r = run_property_suite(suite);
      out << render(r, format);
      if (!r.all_passed()) {
        for (const PropertyResult& p : r.properties) {
          if (!p.passed) err << "weave: property " << p.name << " failed\n";
        }
        return kExitPropertyFailure;
      }
    }
  } catch (const ArgumentError& e) {
    err << "weave: " << e.what() << "\n";
    return kExitArgument;
  } catch (const CapacityError& e) {
    err << "weave: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const NumericError& e) {
    err << "weave: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "weave: unexpected error: " << e.what() << "\n";
    return kExitUnexpected;
  }
  return kExitOk;
}

}  // namespace weave::cli
