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

#include "bellcc/report.hpp"

#include <cmath>
#include <set>
#include <utility>

namespace bellcc {

namespace {

// Strict reader for a JSON object: every key must be consumed.
class ObjectReader {
 public:
  ObjectReader(const Json& j, std::string context)
      : json_(j), context_(std::move(context)) {
    if (!j.is_object()) fail(context_, "expected an object");
  }

  const Json* optional(const std::string& key) {
    seen_.insert(key);
    const auto it = json_.find(key);
    return it == json_.end() ? nullptr : &*it;
  }

  const Json& required(const std::string& key) {
    const Json* j = optional(key);
    if (j == nullptr) fail(path(key), "missing required field");
    return *j;
  }

  std::string path(const std::string& key) const {
    return context_.empty() ? key : context_ + "." + key;
  }

  void finish() const {
    for (const auto& item : json_.items()) {
      if (!seen_.count(item.key())) fail(path(item.key()), "unknown field");
    }
  }

  [[noreturn]] static void fail(const std::string& field,
                                const std::string& why) {
    throw ConfigError("field '" + field + "': " + why);
  }

 private:
  const Json& json_;
  std::string context_;
  std::set<std::string> seen_;
};

double read_double(const Json& j, const std::string& field) {
  if (!j.is_number()) ObjectReader::fail(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) ObjectReader::fail(field, "expected a finite number");
  return v;
}

bool read_bool(const Json& j, const std::string& field) {
  if (!j.is_boolean()) ObjectReader::fail(field, "expected a boolean");
  return j.get<bool>();
}

std::string read_string(const Json& j, const std::string& field) {
  if (!j.is_string()) ObjectReader::fail(field, "expected a string");
  return j.get<std::string>();
}

std::uint64_t read_unsigned(const Json& j, const std::string& field) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) {
    return static_cast<std::uint64_t>(j.get<long long>());
  }
  ObjectReader::fail(field, "expected a non-negative integer");
}

int read_bit(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) ObjectReader::fail(field, "expected 0 or 1");
  const auto v = j.get<long long>();
  if (v != 0 && v != 1) ObjectReader::fail(field, "expected 0 or 1");
  return static_cast<int>(v);
}

template <std::size_t N>
std::array<double, N> read_double_array(const Json& j,
                                        const std::string& field) {
  if (!j.is_array() || j.size() != N) {
    ObjectReader::fail(
        field, "expected an array of " + std::to_string(N) + " numbers");
  }
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = read_double(j[i], field + "[" + std::to_string(i) + "]");
  }
  return out;
}

Complex read_complex(const Json& j, const std::string& field) {
  if (j.is_number()) return {read_double(j, field), 0.0};
  if (!j.is_array() || j.size() != 2) {
    ObjectReader::fail(field, "expected a complex number [re, im]");
  }
  return {read_double(j[0], field + "[0]"), read_double(j[1], field + "[1]")};
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    ObjectReader::fail(field, "expected a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Complex> entries;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_field = field + "[" + std::to_string(r) + "]";
    const Json& row = j[r];
    if (!row.is_array() || row.empty()) {
      ObjectReader::fail(row_field, "expected a non-empty row");
    }
    if (r == 0) cols = row.size();
    if (row.size() != cols) ObjectReader::fail(row_field, "ragged row");
    for (std::size_t c = 0; c < cols; ++c) {
      entries.push_back(
          read_complex(row[c], row_field + "[" + std::to_string(c) + "]"));
    }
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

Json to_json(const BehaviorTable& p) {
  return Json{{"probabilities", p.entries()}};
}

BehaviorTable behavior_from_json(const Json& j) {
  ObjectReader reader(j, "");
  const auto entries =
      read_double_array<16>(reader.required("probabilities"), "probabilities");
  reader.finish();
  return BehaviorTable(entries);
}

DensityOperator ExperimentConfig::density() const {
  if (state_matrix) {
    if (state_matrix->rows() != 4 || state_matrix->cols() != 4) {
      throw ConfigError(
          "field 'state': expected a 4x4 two-qubit density "
          "matrix");
    }
    try {
      return DensityOperator(*state_matrix);
    } catch (const InvalidOperatorError& e) {
      throw ConfigError(std::string("field 'state': ") + e.what());
    }
  }
  if (state == "bell-phi-plus")
    return DensityOperator::pure(bell_phi_plus_ket());
  if (state == "maximally-mixed") return DensityOperator::maximally_mixed(4);
  throw ConfigError("field 'state': unknown preset '" + state + "'");
}

Json to_json(const ExperimentConfig& config) {
  Json j;
  if (config.state_matrix) {
    j["state"] = matrix_to_json(*config.state_matrix);
  } else {
    j["state"] = config.state;
  }
  j["alice_angles"] = config.alice_angles;
  j["bob_angles"] = config.bob_angles;
  j["events"] = {{"x", config.events.x},
                 {"y", config.events.y},
                 {"a", config.events.a},
                 {"b", config.events.b}};
  j["grid_angles"] = config.grid_angles;
  j["seed"] = config.seed;
  j["trials"] = config.trials;
  j["tolerance"] = config.tolerance;
  j["lhv_tolerance"] = config.lhv_tolerance;
  return j;
}

ExperimentConfig config_from_json(const Json& j) {
  ObjectReader reader(j, "");
  ExperimentConfig config;
  if (const Json* s = reader.optional("state")) {
    if (s->is_string()) {
      config.state = s->get<std::string>();
      if (config.state != "bell-phi-plus" &&
          config.state != "maximally-mixed") {
        ObjectReader::fail("state", "unknown preset '" + config.state + "'");
      }
    } else {
      config.state = "matrix";
      config.state_matrix = matrix_from_json(*s, "state");
      config.density();  // validates the literal
    }
  }
  if (const Json* a = reader.optional("alice_angles")) {
    config.alice_angles = read_double_array<2>(*a, "alice_angles");
  }
  if (const Json* b = reader.optional("bob_angles")) {
    config.bob_angles = read_double_array<2>(*b, "bob_angles");
  }
  if (const Json* g = reader.optional("grid_angles")) {
    config.grid_angles = read_double_array<2>(*g, "grid_angles");
  }
  if (const Json* e = reader.optional("events")) {
    ObjectReader events(*e, "events");
    auto bit = [&events](const char* key, int fallback) {
      const Json* v = events.optional(key);
      return v ? read_bit(*v, events.path(key)) : fallback;
    };
    config.events = {bit("x", 0), bit("y", 0), bit("a", 0), bit("b", 0)};
    events.finish();
  }
  if (const Json* s = reader.optional("seed")) {
    config.seed = read_unsigned(*s, "seed");
  }
  if (const Json* t = reader.optional("trials")) {
    config.trials = read_unsigned(*t, "trials");
    if (config.trials == 0) ObjectReader::fail("trials", "must be >= 1");
  }
  if (const Json* t = reader.optional("tolerance")) {
    config.tolerance = read_double(*t, "tolerance");
    if (!(config.tolerance > 0)) ObjectReader::fail("tolerance", "must be > 0");
  }
  if (const Json* t = reader.optional("lhv_tolerance")) {
    config.lhv_tolerance = read_double(*t, "lhv_tolerance");
    if (!(config.lhv_tolerance > 0)) {
      ObjectReader::fail("lhv_tolerance", "must be > 0");
    }
  }
  reader.finish();
  return config;
}

PartitionOfUnity partition_from_json(const Json& j) {
  ObjectReader reader(j, "");
  const Json& list = reader.required("projectors");
  reader.finish();
  if (!list.is_array() || list.empty()) {
    ObjectReader::fail("projectors", "expected a non-empty array of matrices");
  }
  std::vector<ComplexMatrix> members;
  for (std::size_t k = 0; k < list.size(); ++k) {
    members.push_back(
        matrix_from_json(list[k], "projectors[" + std::to_string(k) + "]"));
  }
  auto checked = validate_partition(std::move(members));
  if (!checked.ok()) {
    std::string msg = "field 'projectors': invalid partition of unity:";
    for (const auto& issue : checked.issues)
      msg += " " + issue.describe() + ";";
    throw ConfigError(msg);
  }
  return std::move(*checked.partition);
}

namespace {

Json to_json(const CorrelatorSet& c) {
  return {{"c00", c.c00}, {"c01", c.c01}, {"c10", c.c10}, {"c11", c.c11}};
}

CorrelatorSet correlators_from_json(const Json& j, const std::string& ctx) {
  ObjectReader r(j, ctx);
  CorrelatorSet c;
  c.c00 = read_double(r.required("c00"), r.path("c00"));
  c.c01 = read_double(r.required("c01"), r.path("c01"));
  c.c10 = read_double(r.required("c10"), r.path("c10"));
  c.c11 = read_double(r.required("c11"), r.path("c11"));
  r.finish();
  return c;
}

Json to_json(const BellFunctional& f) {
  return {{"coefficients", f.coefficients},
          {"local_bound", f.local_bound},
          {"achieved", f.achieved},
          {"source", to_string(f.source)},
          {"name", f.name}};
}

BellFunctional functional_from_json(const Json& j, const std::string& ctx) {
  ObjectReader r(j, ctx);
  BellFunctional f;
  f.coefficients =
      read_double_array<16>(r.required("coefficients"), r.path("coefficients"));
  f.local_bound = read_double(r.required("local_bound"), r.path("local_bound"));
  f.achieved = read_double(r.required("achieved"), r.path("achieved"));
  const std::string source =
      read_string(r.required("source"), r.path("source"));
  if (source == "lp-dual") {
    f.source = CertificateSource::kLpDual;
  } else if (source == "chsh-scan") {
    f.source = CertificateSource::kChshScan;
  } else {
    ObjectReader::fail(r.path("source"), "unknown certificate source");
  }
  f.name = read_string(r.required("name"), r.path("name"));
  r.finish();
  return f;
}

Json to_json(const LhvVerdict& v) {
  Json j{{"feasible", v.feasible},
         {"residual", v.residual},
         {"lp_infeasibility", v.lp_infeasibility}};
  if (v.weights) j["weights"] = *v.weights;
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  if (v.dual_certificate) j["dual_certificate"] = to_json(*v.dual_certificate);
  return j;
}

LhvVerdict verdict_from_json(const Json& j, const std::string& ctx) {
  ObjectReader r(j, ctx);
  LhvVerdict v;
  v.feasible = read_bool(r.required("feasible"), r.path("feasible"));
  v.residual = read_double(r.required("residual"), r.path("residual"));
  v.lp_infeasibility =
      read_double(r.required("lp_infeasibility"), r.path("lp_infeasibility"));
  if (const Json* w = r.optional("weights")) {
    v.weights = read_double_array<16>(*w, r.path("weights"));
  }
  if (const Json* c = r.optional("certificate")) {
    v.certificate = functional_from_json(*c, r.path("certificate"));
  }
  if (const Json* c = r.optional("dual_certificate")) {
    v.dual_certificate = functional_from_json(*c, r.path("dual_certificate"));
  }
  r.finish();
  return v;
}

Json to_json(const NamedCcsReport& named) {
  Json cells = Json::array();
  for (const auto& c : named.report.cells) {
    cells.push_back({{"index", c.index},
                     {"p_ck", c.p_ck},
                     {"lhs", c.lhs},
                     {"rhs", c.rhs},
                     {"residual", c.residual},
                     {"skipped", c.skipped},
                     {"path_gap", c.path_gap}});
  }
  return {{"partition", named.partition},
          {"satisfied", named.report.satisfied},
          {"max_residual", named.report.max_residual},
          {"max_path_gap", named.report.max_path_gap},
          {"cells", std::move(cells)}};
}

NamedCcsReport ccs_from_json(const Json& j, const std::string& ctx) {
  ObjectReader r(j, ctx);
  NamedCcsReport named;
  named.partition = read_string(r.required("partition"), r.path("partition"));
  named.report.satisfied =
      read_bool(r.required("satisfied"), r.path("satisfied"));
  named.report.max_residual =
      read_double(r.required("max_residual"), r.path("max_residual"));
  named.report.max_path_gap =
      read_double(r.required("max_path_gap"), r.path("max_path_gap"));
  const Json& cells = r.required("cells");
  if (!cells.is_array()) ObjectReader::fail(r.path("cells"), "expected array");
  for (std::size_t k = 0; k < cells.size(); ++k) {
    ObjectReader c(cells[k], r.path("cells[" + std::to_string(k) + "]"));
    CellCheck cell;
    cell.index = read_unsigned(c.required("index"), c.path("index"));
    cell.p_ck = read_double(c.required("p_ck"), c.path("p_ck"));
    cell.lhs = read_double(c.required("lhs"), c.path("lhs"));
    cell.rhs = read_double(c.required("rhs"), c.path("rhs"));
    cell.residual = read_double(c.required("residual"), c.path("residual"));
    cell.skipped = read_bool(c.required("skipped"), c.path("skipped"));
    cell.path_gap = read_double(c.required("path_gap"), c.path("path_gap"));
    c.finish();
    named.report.cells.push_back(cell);
  }
  r.finish();
  return named;
}

Json to_json(const SweepSummary& s) {
  return {{"trials", s.trials},
          {"satisfied", s.satisfied},
          {"max_residual", s.max_residual},
          {"skipped_cells", s.skipped_cells}};
}

SweepSummary sweep_from_json(const Json& j, const std::string& ctx) {
  ObjectReader r(j, ctx);
  SweepSummary s;
  s.trials = read_unsigned(r.required("trials"), r.path("trials"));
  s.satisfied = read_unsigned(r.required("satisfied"), r.path("satisfied"));
  s.max_residual =
      read_double(r.required("max_residual"), r.path("max_residual"));
  s.skipped_cells =
      read_unsigned(r.required("skipped_cells"), r.path("skipped_cells"));
  r.finish();
  return s;
}

std::vector<std::string> read_string_list(const Json& j,
                                          const std::string& field) {
  if (!j.is_array()) ObjectReader::fail(field, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(read_string(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

Json to_json(const AnalysisReport& report) {
  Json j;
  j["command"] = report.command;
  j["state"] = report.state;
  if (report.behavior) j["behavior"] = to_json(*report.behavior);
  if (report.correlators) j["correlators"] = to_json(*report.correlators);
  if (report.chsh) j["chsh"] = *report.chsh;
  if (report.no_signalling) j["no_signalling"] = *report.no_signalling;
  if (report.lhv) j["lhv"] = to_json(*report.lhv);
  if (report.oracle_chsh) j["oracle_chsh"] = *report.oracle_chsh;
  Json ccs = Json::array();
  for (const auto& named : report.ccs) ccs.push_back(to_json(named));
  j["ccs"] = std::move(ccs);
  if (report.sweep) j["sweep"] = to_json(*report.sweep);
  j["classification"] = report.classification;
  j["warnings"] = report.warnings;
  j["exit_code"] = report.exit_code;
  return j;
}

AnalysisReport report_from_json(const Json& j) {
  ObjectReader r(j, "");
  AnalysisReport report;
  report.command = read_string(r.required("command"), "command");
  report.state = read_string(r.required("state"), "state");
  if (const Json* b = r.optional("behavior")) {
    report.behavior = behavior_from_json(*b);
  }
  if (const Json* c = r.optional("correlators")) {
    report.correlators = correlators_from_json(*c, "correlators");
  }
  if (const Json* c = r.optional("chsh")) report.chsh = read_double(*c, "chsh");
  if (const Json* n = r.optional("no_signalling")) {
    report.no_signalling = read_bool(*n, "no_signalling");
  }
  if (const Json* l = r.optional("lhv"))
    report.lhv = verdict_from_json(*l, "lhv");
  if (const Json* o = r.optional("oracle_chsh")) {
    report.oracle_chsh = read_double(*o, "oracle_chsh");
  }
  if (const Json* c = r.optional("ccs")) {
    if (!c->is_array()) ObjectReader::fail("ccs", "expected an array");
    for (std::size_t k = 0; k < c->size(); ++k) {
      report.ccs.push_back(
          ccs_from_json((*c)[k], "ccs[" + std::to_string(k) + "]"));
    }
  }
  if (const Json* s = r.optional("sweep")) {
    report.sweep = sweep_from_json(*s, "sweep");
  }
  if (const Json* c = r.optional("classification")) {
    if (!c->is_object()) {
      ObjectReader::fail("classification", "expected an object");
    }
    for (const auto& item : c->items()) {
      report.classification[item.key()] =
          read_string_list(item.value(), "classification." + item.key());
    }
  }
  if (const Json* w = r.optional("warnings")) {
    report.warnings = read_string_list(*w, "warnings");
  }
  if (const Json* e = r.optional("exit_code")) {
    if (!e->is_number_integer()) {
      ObjectReader::fail("exit_code", "expected an integer");
    }
    report.exit_code = e->get<int>();
  }
  r.finish();
  return report;
}

}  // namespace bellcc
