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

#ifndef BELLCC_SIMPLEX_HPP_
#define BELLCC_SIMPLEX_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace bellcc {

// Dense row-major real matrix for the LP layer.
struct LpMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double operator()(std::size_t r, std::size_t c) const {
    return values[r * cols + c];
  }
  double& operator()(std::size_t r, std::size_t c) {
    return values[r * cols + c];
  }
};

// Result of the phase-one problem
//
//   minimize  sum_i s_i   subject to  A x + D s = b,  x >= 0, s >= 0,
//
// where D = diag(sign(b_i)) so that the all-artificial basis is feasible.
struct PhaseOneResult {
  // Optimal sum of artificials: the L1 distance from b to the cone {A x}.
  double infeasibility = 0.0;
  std::vector<double> x;
  // Per-row |A x - b| at the optimum (the artificial values).
  std::vector<double> row_residuals;
  // Dual solution y at the optimum. It satisfies y^T A_j <= 0 for every
  // column j (to rounding) and y^T b = infeasibility, so whenever
  // infeasibility > 0 it is a Farkas certificate that A x = b has no
  // solution with x >= 0.
  std::vector<double> dual;
  int iterations = 0;
};

// Dense tableau simplex with Bland's anticycling rule. Intended for the small
// degenerate systems that arise from polytope membership (tens of rows and
// columns). Throws ShapeError on mismatched b and std::runtime_error if the
// iteration cap is hit.
PhaseOneResult solve_phase_one(const LpMatrix& a, std::span<const double> b,
                               int max_iterations = 10000);

}  // namespace bellcc

#endif  // BELLCC_SIMPLEX_HPP_
