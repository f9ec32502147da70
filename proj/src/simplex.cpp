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

#include "bellcc/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bellcc/errors.hpp"

namespace bellcc {

namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-12;

// Tableau layout: m constraint rows followed by the reduced-cost row. Columns
// are the n structural variables, then the m artificials, then the rhs.
class Tableau {
 public:
  Tableau(const LpMatrix& a, std::span<const double> b)
      : m_(a.rows),
        n_(a.cols),
        width_(a.cols + a.rows + 1),
        cells_((m_ + 1) * width_, 0.0),
        basis_(m_),
        flipped_(m_, false) {
    for (std::size_t i = 0; i < m_; ++i) {
      flipped_[i] = b[i] < 0.0;
      const double sign = flipped_[i] ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = sign * a(i, j);
      at(i, n_ + i) = 1.0;
      at(i, rhs()) = sign * b[i];
      basis_[i] = n_ + i;
    }
    // Reduced costs for c = (0, 1): d_j = -sum_i A_ij on structurals, 0 on
    // the basic artificials; the rhs cell holds -objective.
    for (std::size_t j = 0; j < n_; ++j) {
      double sum = 0.0;
      for (std::size_t i = 0; i < m_; ++i) sum += at(i, j);
      at(m_, j) = -sum;
    }
    double objective = 0.0;
    for (std::size_t i = 0; i < m_; ++i) objective += at(i, rhs());
    at(m_, rhs()) = -objective;
  }

  int run(int max_iterations) {
    for (int iter = 0; iter < max_iterations; ++iter) {
      const std::size_t entering = choose_entering();
      if (entering == kNone) return iter;
      const std::size_t row = choose_leaving(entering);
      // Phase one is bounded below by zero, so a ratio test always succeeds.
      if (row == kNone) throw std::logic_error("phase-one LP is unbounded");
      pivot(row, entering);
    }
    throw std::runtime_error("simplex iteration limit reached");
  }

  PhaseOneResult result(int iterations) const {
    PhaseOneResult r;
    r.iterations = iterations;
    r.x.assign(n_, 0.0);
    r.row_residuals.assign(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      const double value = std::max(0.0, at(i, rhs()));
      if (basis_[i] < n_) {
        r.x[basis_[i]] = value;
      } else {
        r.row_residuals[basis_[i] - n_] = value;
      }
    }
    for (double s : r.row_residuals) r.infeasibility += s;
    r.dual.assign(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      // y_i = c_art - d_art for the (possibly sign-flipped) row.
      const double y = 1.0 - at(m_, n_ + i);
      r.dual[i] = flipped_[i] ? -y : y;
    }
    return r;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::size_t rhs() const { return width_ - 1; }
  double& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  double at(std::size_t r, std::size_t c) const {
    return cells_[r * width_ + c];
  }

  // Bland: lowest-index column with a negative reduced cost.
  std::size_t choose_entering() const {
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      if (at(m_, j) < -kCostEps) return j;
    }
    return kNone;
  }

  // Minimum ratio, ties broken by the lowest basic variable index.
  std::size_t choose_leaving(std::size_t col) const {
    std::size_t best = kNone;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m_; ++i) {
      const double coef = at(i, col);
      if (coef <= kPivotEps) continue;
      const double ratio = std::max(0.0, at(i, rhs())) / coef;
      if (ratio < best_ratio - 1e-14 ||
          (std::abs(ratio - best_ratio) <= 1e-14 && best != kNone &&
           basis_[i] < basis_[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    const double inv = 1.0 / at(row, col);
    for (std::size_t j = 0; j < width_; ++j) at(row, j) *= inv;
    at(row, col) = 1.0;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double factor = at(i, col);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        at(i, j) -= factor * at(row, j);
      }
      at(i, col) = 0.0;
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<double> cells_;
  std::vector<std::size_t> basis_;
  std::vector<bool> flipped_;
};

}  // namespace

PhaseOneResult solve_phase_one(const LpMatrix& a, std::span<const double> b,
                               int max_iterations) {
  if (b.size() != a.rows || a.values.size() != a.rows * a.cols) {
    throw ShapeError("solve_phase_one: inconsistent constraint dimensions");
  }
  Tableau tableau(a, b);
  const int iterations = tableau.run(max_iterations);
  return tableau.result(iterations);
}

}  // namespace bellcc
