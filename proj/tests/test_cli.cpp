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

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bellcc/commands.hpp"
#include "bellcc/report.hpp"
#include "catch2/catch_amalgamated.hpp"
#include "cli.hpp"

using namespace bellcc;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace fs = std::filesystem;

namespace {

const double kTsirelson = 2.0 * std::sqrt(2.0);

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("bellcc-cli-" + std::to_string(counter_++) + "-" +
             std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

AnalysisReport read_report(const std::string& path) {
  return report_from_json(load_json_file(path));
}

}  // namespace

TEST_CASE("chsh command", "[cli]") {
  TempDir dir;
  const auto out = dir.file("chsh.json");
  const auto r = run({"chsh", "--out", out});
  CHECK(r.code == 0);
  CHECK_THAT(r.out, ContainsSubstring("CHSH"));
  const auto report = read_report(out);
  CHECK_THAT(*report.chsh, WithinAbs(kTsirelson, 1e-9));

  const auto mixed = dir.write("mixed.json", R"({"state": "maximally-mixed"})");
  const auto r2 = run({"chsh", "--config", mixed, "--out", out});
  CHECK(r2.code == 0);
  CHECK_THAT(*read_report(out).chsh, WithinAbs(0.0, 1e-12));

  const auto zeros = dir.write(
      "zeros.json", R"({"alice_angles": [0, 0], "bob_angles": [0, 0]})");
  CHECK(run({"chsh", "--config", zeros, "--out", out}).code == 0);
  CHECK_THAT(*read_report(out).chsh, WithinAbs(2.0, 1e-12));
}

TEST_CASE("malformed config exits 2 naming the field", "[cli]") {
  TempDir dir;
  const auto bad = dir.write("bad.json", R"({"alice_angles": [0, "pi"]})");
  const auto r = run({"chsh", "--config", bad});
  CHECK(r.code == 2);
  CHECK_THAT(r.err, ContainsSubstring("alice_angles[1]"));

  const auto junk = dir.write("junk.json", "{not json");
  CHECK(run({"chsh", "--config", junk}).code == 2);
  CHECK(run({"chsh", "--config", dir.file("missing.json")}).code == 2);
}

TEST_CASE("lhv command", "[cli]") {
  TempDir dir;
  const auto out = dir.file("lhv.json");
  const auto r = run({"lhv", "--out", out});
  CHECK(r.code == 1);
  const auto report = read_report(out);
  REQUIRE(report.lhv.has_value());
  CHECK_FALSE(report.lhv->feasible);
  CHECK_THAT(report.lhv->certificate->achieved, WithinAbs(kTsirelson, 1e-9));
  CHECK(report.exit_code == 1);

  const auto uniform =
      dir.write("uniform.json", to_json(BehaviorTable::uniform()).dump());
  CHECK(run({"lhv", "--behavior", uniform, "--out", out}).code == 0);
  CHECK(read_report(out).lhv->weights.has_value());

  auto unnormalized = to_json(BehaviorTable::uniform());
  unnormalized["probabilities"][5] = 0.5;
  const auto bad = dir.write("bad.json", unnormalized.dump());
  const auto r3 = run({"lhv", "--behavior", bad});
  CHECK(r3.code == 2);
  CHECK_THAT(r3.err, ContainsSubstring("sums to"));
}

TEST_CASE("lhv on a signalling table warns but still decides", "[cli]") {
  TempDir dir;
  BehaviorTable::Entries e{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) e[BehaviorTable::index(y, 0, x, y)] = 1.0;
  const auto path = dir.write("sig.json", to_json(BehaviorTable(e)).dump());
  const auto out = dir.file("sig-report.json");
  const auto r = run({"lhv", "--behavior", path, "--out", out});
  CHECK(r.code == 1);
  const auto report = read_report(out);
  CHECK_FALSE(report.warnings.empty());
  CHECK_FALSE(report.oracle_chsh.has_value());
}

TEST_CASE("ccs command", "[cli]") {
  TempDir dir;
  const auto out = dir.file("ccs.json");
  const auto grid = run({"ccs", "--partition", "product-grid", "--out", out});
  CHECK(grid.code == 0);
  const auto report = read_report(out);
  REQUIRE(report.ccs.size() == 1);
  CHECK(report.ccs[0].report.max_residual <= 1e-10);

  CHECK(run({"ccs", "--partition", "bell-basis"}).code == 1);

  const auto sweep = run({"ccs", "--trials", "100", "--out", out});
  CHECK(sweep.code == 0);
  const auto summary = read_report(out).sweep;
  REQUIRE(summary.has_value());
  CHECK(summary->satisfied == 100);
  CHECK(summary->trials == 100);

  const auto partition = dir.write("overlap.json",
                                   R"({"projectors": [
            [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]],
             [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]],
            [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[1,0],[0,0],[0,0]],
             [[0,0],[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]]]})");
  const auto bad = run({"ccs", "--partition", "file:" + partition});
  CHECK(bad.code == 2);
  CHECK_THAT(bad.err, ContainsSubstring("not-orthogonal(0,1)"));

  Json computational = {{"projectors", Json::array()}};
  for (int k = 0; k < 4; ++k) {
    ComplexMatrix c(4, 4);
    c(k, k) = 1.0;
    computational["projectors"].push_back(matrix_to_json(c));
  }
  const auto good = dir.write("grid.json", computational.dump());
  CHECK(run({"ccs", "--partition", "file:" + good}).code == 0);

  CHECK(run({"ccs", "--partition", "diagonal"}).code == 2);
}

TEST_CASE("demo command", "[cli]") {
  TempDir dir;
  const auto out1 = dir.file("demo1.json");
  const auto out2 = dir.file("demo2.json");
  CHECK(run({"demo", "--out", out1}).code == 0);
  CHECK(run({"demo", "--out", out2}).code == 0);
  const auto a = read_report(out1);
  CHECK(a == read_report(out2));
  CHECK_THAT(*a.chsh, WithinAbs(kTsirelson, 1e-9));
  CHECK_FALSE(a.lhv->feasible);
  REQUIRE(a.ccs.size() == 1);
  CHECK(a.ccs[0].report.satisfied);

  const auto mixed = dir.write("mixed.json", R"({"state": "maximally-mixed"})");
  CHECK(run({"demo", "--config", mixed, "--out", out1}).code == 0);
  const auto m = read_report(out1);
  CHECK_THAT(*m.chsh, WithinAbs(0.0, 1e-12));
  CHECK(m.lhv->feasible);
  CHECK(m.ccs[0].report.satisfied);
}

TEST_CASE("exit codes are always 0, 1 or 2", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"teleport"}).code == 2);
  CHECK(run({"chsh", "--tol", "-1"}).code == 2);
  CHECK(run({"ccs", "--trials", "0"}).code == 2);
  CHECK(run({"lhv", "--behavior"}).code == 2);
  CHECK(run({"chsh", "--seed", "x"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK_THAT(help.out, ContainsSubstring("chsh"));
  const auto sub_help = run({"ccs", "--help"});
  CHECK(sub_help.code == 0);
  CHECK_THAT(sub_help.out, ContainsSubstring("--partition"));
}

TEST_CASE("table and JSON report agree", "[cli]") {
  TempDir dir;
  const auto out = dir.file("r.json");
  const auto r = run({"demo", "--out", out});
  CHECK(r.out == render_table(read_report(out)));
}
