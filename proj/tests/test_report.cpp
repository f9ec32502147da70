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

#include <cmath>
#include <string>

#include "bellcc/commands.hpp"
#include "bellcc/report.hpp"
#include "catch2/catch_amalgamated.hpp"

using namespace bellcc;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

// Asserts that parsing throws ConfigError and the message names `field`.
template <typename F>
void expect_field_error(F&& parse, const std::string& field) {
  try {
    parse();
    FAIL("expected ConfigError for " << field);
  } catch (const ConfigError& e) {
    CHECK_THAT(e.what(), ContainsSubstring("'" + field + "'"));
  }
}

AnalysisReport round_trip(const AnalysisReport& r) {
  return report_from_json(Json::parse(to_json(r).dump()));
}

}  // namespace

TEST_CASE("matrix JSON encoding", "[report]") {
  const auto m =
      ComplexMatrix::from_rows({{1, Complex(0, -1)}, {Complex(0, 1), 2}});
  const Json j = matrix_to_json(m);
  CHECK(j.dump() == "[[[1.0,0.0],[0.0,-1.0]],[[0.0,1.0],[2.0,0.0]]]");
  CHECK(matrix_from_json(j, "m") == m);
  expect_field_error(
      [] { matrix_from_json(Json::parse("[[[1,0]],[[0,1],[1,0]]]"), "m"); },
      "m[1]");
  expect_field_error([] { matrix_from_json(Json::parse(R"([["1"]])"), "m"); },
                     "m[0][0]");
  expect_field_error([] { matrix_from_json(Json::parse("[]"), "m"); }, "m");
}

TEST_CASE("behavior JSON", "[report]") {
  const auto s = canonical_chsh_setup();
  const auto p = behavior_from_quantum(s.rho, s.alice, s.bob);
  CHECK(behavior_from_json(to_json(p)) == p);
  CHECK(behavior_from_json(Json::parse(to_json(p).dump())) == p);

  Json bad = to_json(BehaviorTable::uniform());
  bad["probabilities"][0] = 0.3;
  CHECK_THROWS_AS(behavior_from_json(bad), InvalidBehaviorError);
  expect_field_error([] { behavior_from_json(Json::parse("{}")); },
                     "probabilities");
  expect_field_error(
      [] {
        behavior_from_json(Json::parse(R"({"probabilities": [0.25, 0.25]})"));
      },
      "probabilities");
  Json extra = to_json(BehaviorTable::uniform());
  extra["note"] = "x";
  expect_field_error([&] { behavior_from_json(extra); }, "note");
}

TEST_CASE("config JSON", "[report]") {
  const ExperimentConfig defaults = config_from_json(Json::object());
  CHECK(defaults == ExperimentConfig{});

  ExperimentConfig c;
  c.state = "maximally-mixed";
  c.alice_angles = {0.1, 0.2};
  c.bob_angles = {-0.3, 0.4};
  c.events = {1, 0, 1, 1};
  c.grid_angles = {0.5, -0.5};
  c.seed = 99;
  c.trials = 7;
  c.tolerance = 1e-9;
  c.lhv_tolerance = 1e-6;
  CHECK(config_from_json(to_json(c)) == c);

  ExperimentConfig m;
  m.state = "matrix";
  m.state_matrix = random_density(4, 3).matrix();
  const auto back = config_from_json(Json::parse(to_json(m).dump()));
  CHECK(back == m);
  CHECK(back.density() == DensityOperator(*m.state_matrix));
}

TEST_CASE("config errors name the field", "[report]") {
  auto parse = [](const char* text) {
    return [text] { config_from_json(Json::parse(text)); };
  };
  expect_field_error(parse(R"({"state": "ghz"})"), "state");
  expect_field_error(parse(R"({"alice_angles": [0, "x"]})"), "alice_angles[1]");
  expect_field_error(parse(R"({"bob_angles": [0]})"), "bob_angles");
  expect_field_error(parse(R"({"trials": 0})"), "trials");
  expect_field_error(parse(R"({"trials": -3})"), "trials");
  expect_field_error(parse(R"({"seed": 1.5})"), "seed");
  expect_field_error(parse(R"({"tolerance": 0})"), "tolerance");
  expect_field_error(parse(R"({"events": {"x": 2}})"), "events.x");
  expect_field_error(parse(R"({"events": {"z": 0}})"), "events.z");
  expect_field_error(parse(R"({"colour": 1})"), "colour");
  expect_field_error(parse(R"({"state": [[[1,0],[0,0]],[[0,0],[1,0]]]})"),
                     "state");
  // A 4x4 matrix with trace 2.
  expect_field_error(
      [] {
        ExperimentConfig c;
        c.state = "matrix";
        c.state_matrix = ComplexMatrix::identity(4);
        config_from_json(to_json(c));
      },
      "state");
}

TEST_CASE("partition JSON", "[report]") {
  Json ok = {{"projectors",
              {matrix_to_json(ComplexMatrix::from_rows({{1, 0}, {0, 0}})),
               matrix_to_json(ComplexMatrix::from_rows({{0, 0}, {0, 1}}))}}};
  CHECK(partition_from_json(ok).size() == 2);

  Json overlap = {
      {"projectors",
       {matrix_to_json(ComplexMatrix::from_rows({{1, 0}, {0, 0}})),
        matrix_to_json(ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}))}}};
  try {
    partition_from_json(overlap);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK_THAT(e.what(), ContainsSubstring("not-orthogonal(0,1)"));
  }
  expect_field_error(
      [] { partition_from_json(Json::parse(R"({"projectors": []})")); },
      "projectors");
}

TEST_CASE("reports round-trip losslessly", "[report][property]") {
  ExperimentConfig config;
  CHECK(round_trip(cmd_chsh(config)) == cmd_chsh(config));
  CHECK(round_trip(cmd_lhv(config)) == cmd_lhv(config));
  CHECK(round_trip(cmd_lhv(BehaviorTable::uniform(), kLhvTol, "uniform")) ==
        cmd_lhv(BehaviorTable::uniform(), kLhvTol, "uniform"));
  CHECK(round_trip(cmd_demo(config)) == cmd_demo(config));
  const auto bell = parse_partition_spec("bell-basis");
  CHECK(round_trip(cmd_ccs(config, bell)) == cmd_ccs(config, bell));
  config.trials = 10;
  CHECK(round_trip(cmd_ccs_sweep(config)) == cmd_ccs_sweep(config));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ExperimentConfig c;
    c.state = "matrix";
    c.state_matrix = random_density(4, seed).matrix();
    c.alice_angles = {0.1 * seed, -0.2 * seed};
    c.grid_angles = {0.03 * seed, 0.7};
    const auto r = cmd_demo(c);
    CHECK(round_trip(r) == r);
    CHECK(config_from_json(to_json(c)) == c);
  }
}

TEST_CASE("report classification tags", "[report]") {
  const auto r = cmd_demo(ExperimentConfig{});
  for (const auto& [section, tags] : r.classification) {
    CHECK_FALSE(tags.empty());
    for (const auto& t : tags) {
      CHECK((t == "PCC" || t == "FP" || t == "RCS" || t == "LTP"));
    }
  }
  CHECK(r.classification.count("lhv") == 1);
  CHECK(r.classification.count("ccs") == 1);
}
