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

// JSON encodings for configs, behavior files, partition files and analysis
// reports. Complex numbers are [re, im] pairs; matrices are arrays of rows.
// Every decoder rejects unknown keys and reports the offending field.
// The schemas are documented in docs/formats.md.

#ifndef BELLCC_REPORT_HPP_
#define BELLCC_REPORT_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bellcc/bellscn.hpp"
#include "bellcc/ccs.hpp"
#include "bellcc/errors.hpp"
#include "bellcc/lhv.hpp"
#include "bellcc/matops.hpp"
#include "bellcc/qstate.hpp"
#include "json.hpp"

namespace bellcc {

using Json = nlohmann::json;

// Malformed input file; the message names the field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Which outcome/setting pair defines the events A = Pi^a_x (x) I and
// B = I (x) Pi^b_y.
struct EventSelection {
  int x = 0;
  int y = 0;
  int a = 0;
  int b = 0;

  friend bool operator==(const EventSelection&,
                         const EventSelection&) = default;
};

struct ExperimentConfig {
  // "bell-phi-plus", "maximally-mixed", or "matrix" when state_matrix is set.
  std::string state = "bell-phi-plus";
  std::optional<ComplexMatrix> state_matrix;
  std::array<double, 2> alice_angles = kCanonicalAliceAngles;
  std::array<double, 2> bob_angles = kCanonicalBobAngles;
  EventSelection events;
  // Rotation angles of the local bases for the product-grid partition.
  std::array<double, 2> grid_angles = {0.0, 0.0};
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  double tolerance = kCcsTol;
  double lhv_tolerance = kLhvTol;

  // Builds the two-qubit state; throws ConfigError if the matrix literal is
  // not a density operator.
  DensityOperator density() const;

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

struct NamedCcsReport {
  std::string partition;
  CcsReport report;

  friend bool operator==(const NamedCcsReport&,
                         const NamedCcsReport&) = default;
};

struct AnalysisReport {
  std::string command;
  std::string state;
  std::optional<BehaviorTable> behavior;
  std::optional<CorrelatorSet> correlators;
  std::optional<double> chsh;
  std::optional<bool> no_signalling;
  std::optional<LhvVerdict> lhv;
  std::optional<double> oracle_chsh;
  std::vector<NamedCcsReport> ccs;
  std::optional<SweepSummary> sweep;
  // Section name -> which of PCC, FP, RCS, LTP the section bears on.
  std::map<std::string, std::vector<std::string>> classification;
  std::vector<std::string> warnings;
  int exit_code = 0;

  friend bool operator==(const AnalysisReport&,
                         const AnalysisReport&) = default;
};

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& field);

Json to_json(const BehaviorTable& p);
BehaviorTable behavior_from_json(const Json& j);

Json to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const Json& j);

// {"projectors": [matrix, ...]}. Throws ConfigError on malformed JSON and on
// a family that fails validate_partition, naming the failed invariants.
PartitionOfUnity partition_from_json(const Json& j);

Json to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const Json& j);

}  // namespace bellcc

#endif  // BELLCC_REPORT_HPP_
