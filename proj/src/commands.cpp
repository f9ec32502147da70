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

#include "bellcc/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace bellcc {

namespace {

const std::vector<std::string> kBellAssumptions = {"PCC", "FP", "RCS", "LTP"};

std::string state_label(const ExperimentConfig& config) {
  return config.state_matrix ? "matrix" : config.state;
}

void add_behavior_sections(AnalysisReport& report, const BehaviorTable& p) {
  report.behavior = p;
  report.correlators = correlators(p);
  report.chsh = chsh_value(*report.correlators);
  report.no_signalling = no_signalling_check(p);
  report.classification["behavior"] = {"RCS"};
  report.classification["chsh"] = kBellAssumptions;
}

void add_lhv_section(AnalysisReport& report, const BehaviorTable& p,
                     double tol) {
  report.lhv = lhv_feasible(p, tol);
  report.classification["lhv"] = {"FP", "LTP"};
  const double gap = signalling_gap(p);
  if (gap > kStructuralTol) {
    std::ostringstream os;
    os << "behavior signals (marginal gap " << gap
       << "); CHSH oracle cross-check skipped";
    report.warnings.push_back(os.str());
    return;
  }
  report.oracle_chsh = chsh_oracle(p);
  const bool oracle_local = *report.oracle_chsh <= 2.0 + 1e-6;
  if (oracle_local != report.lhv->feasible) {
    report.warnings.push_back(
        "LP verdict and CHSH oracle disagree near the local boundary");
  }
}

std::array<Ket, 2> rotated_basis(double theta) {
  return {Ket{std::cos(theta), std::sin(theta)},
          Ket{-std::sin(theta), std::cos(theta)}};
}

PartitionOfUnity build_partition(const ExperimentConfig& config,
                                 const PartitionSpec& spec) {
  switch (spec.kind) {
    case PartitionSpec::Kind::kProductGrid: {
      const auto basis_a = rotated_basis(config.grid_angles[0]);
      const auto basis_b = rotated_basis(config.grid_angles[1]);
      return product_grid_partition(basis_a, basis_b);
    }
    case PartitionSpec::Kind::kBellBasis:
      return bell_basis_partition();
    case PartitionSpec::Kind::kExplicit:
      if (spec.explicit_partition->dim() != 4) {
        throw ConfigError(
            "field 'projectors': expected 4x4 projectors for a "
            "two-qubit state");
      }
      return *spec.explicit_partition;
  }
  throw ConfigError("unknown partition kind");
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

PartitionSpec parse_partition_spec(const std::string& text) {
  PartitionSpec spec;
  spec.label = text;
  if (text == "product-grid") {
    spec.kind = PartitionSpec::Kind::kProductGrid;
  } else if (text == "bell-basis") {
    spec.kind = PartitionSpec::Kind::kBellBasis;
  } else if (text.rfind("file:", 0) == 0) {
    spec.kind = PartitionSpec::Kind::kExplicit;
    spec.explicit_partition =
        partition_from_json(load_json_file(text.substr(5)));
  } else {
    throw ConfigError(
        "--partition: expected product-grid, bell-basis or "
        "file:PATH, got '" +
        text + "'");
  }
  return spec;
}

MeasurementFamily alice_measurements(const ExperimentConfig& config) {
  return MeasurementFamily::from_angles(Party::kAlice, config.alice_angles[0],
                                        config.alice_angles[1]);
}

MeasurementFamily bob_measurements(const ExperimentConfig& config) {
  return MeasurementFamily::from_angles(Party::kBob, config.bob_angles[0],
                                        config.bob_angles[1]);
}

EventPair configured_events(const ExperimentConfig& config) {
  const auto& e = config.events;
  return EventPair(alice_measurements(config).projector(e.x, e.a),
                   bob_measurements(config).projector(e.y, e.b));
}

AnalysisReport cmd_chsh(const ExperimentConfig& config) {
  AnalysisReport report;
  report.command = "chsh";
  report.state = state_label(config);
  add_behavior_sections(
      report,
      behavior_from_quantum(config.density(), alice_measurements(config),
                            bob_measurements(config)));
  report.exit_code = kExitOk;
  return report;
}

AnalysisReport cmd_lhv(const ExperimentConfig& config) {
  const BehaviorTable p = behavior_from_quantum(
      config.density(), alice_measurements(config), bob_measurements(config));
  AnalysisReport report = cmd_lhv(p, config.lhv_tolerance, state_label(config));
  return report;
}

AnalysisReport cmd_lhv(const BehaviorTable& behavior, double tol,
                       const std::string& source_label) {
  AnalysisReport report;
  report.command = "lhv";
  report.state = source_label;
  add_behavior_sections(report, behavior);
  add_lhv_section(report, behavior, tol);
  report.exit_code = report.lhv->feasible ? kExitOk : kExitViolated;
  return report;
}

AnalysisReport cmd_ccs(const ExperimentConfig& config,
                       const PartitionSpec& partition) {
  AnalysisReport report;
  report.command = "ccs";
  report.state = state_label(config);
  const CcsReport ccs =
      ccs_check(config.density(), configured_events(config),
                build_partition(config, partition), config.tolerance);
  report.ccs.push_back({partition.label, ccs});
  report.classification["ccs"] = {"PCC", "FP"};
  report.exit_code = ccs.satisfied ? kExitOk : kExitViolated;
  return report;
}

AnalysisReport cmd_ccs_sweep(const ExperimentConfig& config) {
  AnalysisReport report;
  report.command = "ccs";
  report.state = "random";
  report.sweep = triviality_sweep(config.trials, config.seed, config.tolerance);
  report.classification["sweep"] = {"PCC", "FP"};
  report.exit_code =
      report.sweep->satisfied == report.sweep->trials ? kExitOk : kExitViolated;
  return report;
}

AnalysisReport cmd_demo(const ExperimentConfig& config) {
  AnalysisReport report;
  report.command = "demo";
  report.state = state_label(config);
  const DensityOperator rho = config.density();
  const BehaviorTable p = behavior_from_quantum(rho, alice_measurements(config),
                                                bob_measurements(config));
  add_behavior_sections(report, p);
  add_lhv_section(report, p, config.lhv_tolerance);
  PartitionSpec grid;
  const CcsReport ccs =
      ccs_check(rho, configured_events(config), build_partition(config, grid),
                config.tolerance);
  report.ccs.push_back({grid.label, ccs});
  report.classification["ccs"] = {"PCC", "FP"};
  report.exit_code = kExitOk;
  return report;
}

std::string render_table(const AnalysisReport& report) {
  std::ostringstream os;
  os << std::setprecision(10);
  os << "command: " << report.command << "   state: " << report.state << "\n";
  if (report.behavior) {
    os << "\nP(a,b|x,y)      ab=00        ab=01        ab=10        ab=11\n";
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        os << "  x=" << x << " y=" << y << "   ";
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            os << std::setw(12) << std::fixed << std::setprecision(8)
               << (*report.behavior)(a, b, x, y) << " ";
          }
        }
        os << "\n";
      }
    }
    os.unsetf(std::ios::fixed);
    os << std::setprecision(10);
  }
  if (report.correlators) {
    const auto& c = *report.correlators;
    os << "\ncorrelators: C00=" << c.c00 << " C01=" << c.c01 << " C10=" << c.c10
       << " C11=" << c.c11 << "\n";
  }
  if (report.chsh) os << "CHSH value: " << *report.chsh << "\n";
  if (report.no_signalling) {
    os << "no-signalling: " << (*report.no_signalling ? "yes" : "no") << "\n";
  }
  if (report.lhv) {
    const auto& v = *report.lhv;
    os << "\nLHV model: "
       << (v.feasible ? "feasible (local)" : "infeasible (nonlocal)")
       << "   residual=" << v.residual
       << "   LP infeasibility=" << v.lp_infeasibility << "\n";
    if (v.certificate) {
      os << "  certificate [" << to_string(v.certificate->source) << "] "
         << v.certificate->name << ": value " << v.certificate->achieved
         << " > local bound " << v.certificate->local_bound << "\n";
    }
    if (v.weights) {
      os << "  weights:";
      for (double w : *v.weights) os << " " << w;
      os << "\n";
    }
  }
  if (report.oracle_chsh) {
    os << "CHSH oracle (max of 8 variants): " << *report.oracle_chsh << "\n";
  }
  for (const auto& named : report.ccs) {
    os << "\ncommon-cause check [" << named.partition
       << "]: " << (named.report.satisfied ? "satisfied" : "violated")
       << "   max residual=" << named.report.max_residual << "\n";
    for (const auto& cell : named.report.cells) {
      os << "  k=" << cell.index << "  p=" << cell.p_ck;
      if (cell.skipped) {
        os << "  (null, skipped)\n";
      } else {
        os << "  lhs=" << cell.lhs << "  rhs=" << cell.rhs
           << "  residual=" << cell.residual << "\n";
      }
    }
  }
  if (report.sweep) {
    os << "\ntriviality sweep: " << report.sweep->satisfied << "/"
       << report.sweep->trials
       << " satisfied   max residual=" << report.sweep->max_residual << "\n";
  }
  for (const auto& w : report.warnings) os << "warning: " << w << "\n";
  if (!report.classification.empty()) {
    os << "\nassumptions touched:";
    for (const auto& [section, tags] : report.classification) {
      os << "  " << section << "=";
      for (std::size_t i = 0; i < tags.size(); ++i) {
        os << (i ? "+" : "") << tags[i];
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace bellcc
