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
#include <random>
#include <vector>

#include "bellcc/errors.hpp"
#include "bellcc/simplex.hpp"
#include "catch2/catch_amalgamated.hpp"

using namespace bellcc;
using Catch::Matchers::WithinAbs;

namespace {

LpMatrix make(std::size_t rows, std::size_t cols, std::vector<double> v) {
  return LpMatrix{rows, cols, std::move(v)};
}

std::vector<double> times(const LpMatrix& a, const std::vector<double>& x) {
  std::vector<double> out(a.rows, 0.0);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t c = 0; c < a.cols; ++c) out[r] += a(r, c) * x[c];
  return out;
}

// Checks the Farkas conditions y^T A <= 0 and y^T b = infeasibility.
void check_dual(const LpMatrix& a, const std::vector<double>& b,
                const PhaseOneResult& r) {
  REQUIRE(r.dual.size() == a.rows);
  for (std::size_t c = 0; c < a.cols; ++c) {
    double s = 0.0;
    for (std::size_t row = 0; row < a.rows; ++row) s += r.dual[row] * a(row, c);
    CHECK(s <= 1e-9);
  }
  double yb = 0.0;
  for (std::size_t row = 0; row < a.rows; ++row) yb += r.dual[row] * b[row];
  CHECK_THAT(yb, WithinAbs(r.infeasibility, 1e-9));
}

}  // namespace

TEST_CASE("feasible system", "[simplex]") {
  // x0 + x1 = 1, x0 - x1 = 0.
  const auto a = make(2, 2, {1, 1, 1, -1});
  const std::vector<double> b = {1, 0};
  const auto r = solve_phase_one(a, b);
  CHECK_THAT(r.infeasibility, WithinAbs(0.0, 1e-12));
  CHECK_THAT(r.x[0], WithinAbs(0.5, 1e-12));
  CHECK_THAT(r.x[1], WithinAbs(0.5, 1e-12));
  check_dual(a, b, r);
}

TEST_CASE("infeasible system yields a Farkas certificate", "[simplex]") {
  // x0 + x1 = 1 and x0 + x1 = 2 cannot both hold.
  const auto a = make(2, 2, {1, 1, 1, 1});
  const std::vector<double> b = {1, 2};
  const auto r = solve_phase_one(a, b);
  CHECK_THAT(r.infeasibility, WithinAbs(1.0, 1e-12));
  check_dual(a, b, r);

  // x0 = -1 with x0 >= 0.
  const auto neg = make(1, 1, {1});
  const std::vector<double> bn = {-1};
  const auto rn = solve_phase_one(neg, bn);
  CHECK_THAT(rn.infeasibility, WithinAbs(1.0, 1e-12));
  check_dual(neg, bn, rn);
}

TEST_CASE("shape errors", "[simplex]") {
  const auto a = make(2, 2, {1, 0, 0, 1});
  const std::vector<double> b = {1};
  CHECK_THROWS_AS(solve_phase_one(a, b), ShapeError);
  CHECK_THROWS_AS(
      solve_phase_one(make(2, 2, {1, 0, 0}), std::vector<double>{1, 1}),
      ShapeError);
}

TEST_CASE("random systems: primal and dual are consistent",
          "[simplex][property]") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 2 + trial % 5;
    const std::size_t cols = 1 + trial % 7;
    LpMatrix a{rows, cols, std::vector<double>(rows * cols)};
    for (auto& v : a.values) v = n(rng);
    std::vector<double> b(rows);
    const bool planted = trial % 2 == 0;
    if (planted) {
      std::vector<double> x(cols);
      for (auto& v : x) v = u(rng);
      b = times(a, x);
    } else {
      for (auto& v : b) v = n(rng);
    }
    const auto r = solve_phase_one(a, b);
    if (planted) CHECK(r.infeasibility <= 1e-9);
    for (double v : r.x) CHECK(v >= 0.0);
    const auto ax = times(a, r.x);
    double l1 = 0.0;
    for (std::size_t row = 0; row < rows; ++row) {
      const double gap = std::abs(ax[row] - b[row]);
      CHECK_THAT(r.row_residuals[row], WithinAbs(gap, 1e-9));
      l1 += gap;
    }
    CHECK_THAT(r.infeasibility, WithinAbs(l1, 1e-9));
    check_dual(a, b, r);
  }
}
