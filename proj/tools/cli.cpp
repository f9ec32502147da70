// Copyright 2026 The bellcc Authors
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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "bellcc/commands.hpp"

namespace bellcc::cli {

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
};

void add_common(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("--config", opts.config_path, "ExperimentConfig JSON file")
      ->check(CLI::ExistingFile);
  sub->add_option("--seed", opts.seed, "PRNG seed");
  sub->add_option("--tol", opts.tol, "tolerance override")
      ->check(CLI::PositiveNumber);
  sub->add_option("--out", opts.out_path, "write the JSON report here");
}

ExperimentConfig load_config(const CommonOptions& opts) {
  ExperimentConfig config;
  if (!opts.config_path.empty()) {
    config = config_from_json(load_json_file(opts.config_path));
  }
  if (opts.seed) config.seed = *opts.seed;
  return config;
}

void emit(const AnalysisReport& report, const CommonOptions& opts,
          std::ostream& out) {
  out << render_table(report);
  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path);
    if (!file) throw ConfigError("cannot write '" + opts.out_path + "'");
    file << to_json(report).dump(2) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"bellcc: Bell nonlocality and quantum common-cause checks",
               "bellcc"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string behavior_path;
  std::string partition = "product-grid";
  std::optional<std::size_t> trials;

  CLI::App* chsh =
      app.add_subcommand("chsh", "behavior, correlators and CHSH value");
  add_common(chsh, opts);

  CLI::App* lhv = app.add_subcommand(
      "lhv",
      "decide whether a local hidden-variable model exists (exit 0 "
      "local, 1 nonlocal)");
  add_common(lhv, opts);
  lhv->add_option("--behavior", behavior_path, "BehaviorTable JSON file")
      ->check(CLI::ExistingFile);

  CLI::App* ccs = app.add_subcommand(
      "ccs", "common-cause-system check (exit 0 satisfied, 1 violated)");
  add_common(ccs, opts);
  ccs->add_option("--partition", partition,
                  "product-grid | bell-basis | file:PATH");
  ccs->add_option("--trials", trials,
                  "run the random product-grid sweep with N trials")
      ->check(CLI::PositiveNumber);

  CLI::App* demo = app.add_subcommand(
      "demo",
      "CHSH violation, LHV infeasibility and a trivially satisfied "
      "product-grid common cause for one state");
  add_common(demo, opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "bellcc: " << e.what() << "\n";
    return kExitError;
  }

  try {
    ExperimentConfig config = load_config(opts);
    AnalysisReport report;
    if (chsh->parsed()) {
      report = cmd_chsh(config);
    } else if (lhv->parsed()) {
      if (opts.tol) config.lhv_tolerance = *opts.tol;
      if (!behavior_path.empty()) {
        report = cmd_lhv(behavior_from_json(load_json_file(behavior_path)),
                         config.lhv_tolerance, "file:" + behavior_path);
      } else {
        report = cmd_lhv(config);
      }
    } else if (ccs->parsed()) {
      if (opts.tol) config.tolerance = *opts.tol;
      if (trials) {
        config.trials = *trials;
        report = cmd_ccs_sweep(config);
      } else {
        report = cmd_ccs(config, parse_partition_spec(partition));
      }
    } else {
      if (opts.tol) config.tolerance = *opts.tol;
      report = cmd_demo(config);
    }
    emit(report, opts, out);
    return report.exit_code;
  } catch (const Error& e) {
    err << "bellcc: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "bellcc: internal error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace bellcc::cli
