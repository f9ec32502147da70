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

// The analysis pipelines behind the `bellcc` command-line tool. Each command
// returns an AnalysisReport whose exit_code is 0 (local / satisfied),
// 1 (nonlocal / violated) or 2 (input error, set only by the CLI layer).

#ifndef BELLCC_COMMANDS_HPP_
#define BELLCC_COMMANDS_HPP_

#include <optional>
#include <string>

#include "bellcc/report.hpp"

namespace bellcc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitError = 2;

struct PartitionSpec {
  enum class Kind { kProductGrid, kBellBasis, kExplicit };
  Kind kind = Kind::kProductGrid;
  std::optional<PartitionOfUnity> explicit_partition;
  std::string label = "product-grid";
};

// Accepts "product-grid", "bell-basis" or "file:PATH". Throws ConfigError for
// anything else, for unreadable files and for invalid partitions.
PartitionSpec parse_partition_spec(const std::string& text);

// Loads and parses a JSON document; throws ConfigError naming the path.
Json load_json_file(const std::string& path);

MeasurementFamily alice_measurements(const ExperimentConfig& config);
MeasurementFamily bob_measurements(const ExperimentConfig& config);

// A = Pi^a_x (x) I and B = I (x) Pi^b_y for the configured measurements.
EventPair configured_events(const ExperimentConfig& config);

AnalysisReport cmd_chsh(const ExperimentConfig& config);

AnalysisReport cmd_lhv(const ExperimentConfig& config);
AnalysisReport cmd_lhv(const BehaviorTable& behavior, double tol,
                       const std::string& source_label);

AnalysisReport cmd_ccs(const ExperimentConfig& config,
                       const PartitionSpec& partition);
// Triviality sweep over config.trials random instances.
AnalysisReport cmd_ccs_sweep(const ExperimentConfig& config);

// CHSH violation, LHV infeasibility and a satisfied product-grid
// common-cause check, all for the same state and events.
AnalysisReport cmd_demo(const ExperimentConfig& config);

// Human-readable summary of a report.
std::string render_table(const AnalysisReport& report);

}  // namespace bellcc

#endif  // BELLCC_COMMANDS_HPP_
