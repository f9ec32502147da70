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

// Common-cause systems in the non-commutative (Lüders) sense.
//
// A partition of unity {C_k} is a common-cause system for commuting events
// A, B in state rho when every non-null cell screens them off:
//
//   Tr[rho C_k A B C_k] / Tr[rho C_k]
//       = (Tr[rho C_k A C_k] / Tr[rho C_k]) * (Tr[rho C_k B C_k] / Tr[rho
//       C_k]).
//
// The same quantities can be computed through the conditional expectation
// E_c(X) = sum_k C_k X C_k, since E_c(X C_k) = C_k X C_k; ccs_check evaluates
// both forms and requires them to agree.
//
// Any grid of rank-one product projectors {|a_i><a_i| (x) |b_j><b_j|} passes
// this test for every state and every pair of tensor-split events, which is
// what triviality_sweep verifies numerically. higher_rank_probe shows the
// rank-one hypothesis cannot be dropped.

#ifndef BELLCC_CCS_HPP_
#define BELLCC_CCS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bellcc/matops.hpp"
#include "bellcc/qstate.hpp"

namespace bellcc {

inline constexpr double kCcsTol = 1e-10;
// Largest tolerated disagreement between the E_c route and the direct trace
// route.
inline constexpr double kPathAgreementTol = 1e-12;

// Events A = a (x) I_B and B = I_A (x) b on a bipartite space.
class EventPair {
 public:
  // Throws InvalidOperatorError unless both local operators are projectors.
  EventPair(ComplexMatrix a_local, ComplexMatrix b_local);

  const ComplexMatrix& a_local() const { return a_local_; }
  const ComplexMatrix& b_local() const { return b_local_; }
  std::size_t dim_a() const { return a_local_.rows(); }
  std::size_t dim_b() const { return b_local_.rows(); }
  const ComplexMatrix& a() const { return a_; }
  const ComplexMatrix& b() const { return b_; }

 private:
  ComplexMatrix a_local_;
  ComplexMatrix b_local_;
  ComplexMatrix a_;
  ComplexMatrix b_;
};

struct CellCheck {
  std::size_t index = 0;
  double p_ck = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  bool skipped = false;
  // |E_c route - trace route| over the three numerators.
  double path_gap = 0.0;

  friend bool operator==(const CellCheck&, const CellCheck&) = default;
};

struct CcsReport {
  std::vector<CellCheck> cells;
  bool satisfied = false;
  double max_residual = 0.0;
  double max_path_gap = 0.0;

  friend bool operator==(const CcsReport&, const CcsReport&) = default;
};

// sum_k C_k a C_k.
ComplexMatrix conditional_expectation(const ComplexMatrix& a,
                                      const PartitionOfUnity& partition);

// Screening-off test for tensor-split events. Cells with Tr[rho C_k] below
// kNullTol are skipped. Throws ShapeError on dimension mismatch and
// UncheckableError if the partition has fewer than two cells or every cell
// is null.
CcsReport ccs_check(const DensityOperator& rho, const EventPair& events,
                    const PartitionOfUnity& partition, double tol = kCcsTol);

// Same test for arbitrary commuting projectors on the joint space. Throws
// InvalidOperatorError if a and b are not commuting projectors.
CcsReport ccs_check_commuting(const DensityOperator& rho,
                              const ComplexMatrix& a, const ComplexMatrix& b,
                              const PartitionOfUnity& partition,
                              double tol = kCcsTol);

// {|a_i><a_i| (x) |b_j><b_j|} in row-major (i, j) order. Throws
// InvalidOperatorError unless each list is a complete orthonormal basis
// within 1e-10.
PartitionOfUnity product_grid_partition(std::span<const Ket> basis_a,
                                        std::span<const Ket> basis_b);

// Projectors onto |phi+>, |phi->, |psi+>, |psi->.
PartitionOfUnity bell_basis_partition();

struct SweepOptions {
  std::size_t dim_a = 2;
  std::size_t dim_b = 2;
  // Use this state in every trial instead of drawing a random one.
  std::optional<DensityOperator> fixed_state;
};

struct SweepSummary {
  std::size_t trials = 0;
  std::size_t satisfied = 0;
  double max_residual = 0.0;
  std::size_t skipped_cells = 0;

  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

// Each trial draws a state, random local orthonormal bases and random local
// event projectors, then runs ccs_check against the product grid.
SweepSummary triviality_sweep(std::size_t trials, std::uint64_t seed,
                              double tol = kCcsTol,
                              const SweepOptions& options = {});

struct HigherRankWitness {
  DensityOperator rho;
  PartitionOfUnity partition;
  EventPair events;
  CcsReport report;
  // Index of the rank-(2 x 2) cell P (x) Q and its residual.
  std::size_t cell = 0;
  double residual = 0.0;
  int attempts = 0;
};

// Searches for a state entangled inside the support of P (x) Q, with P and Q
// rank-2 projectors on C^local_dim, and local events for which that cell
// fails to screen off by more than 0.01. Deterministic given seed. Throws
// SearchExhaustedError after 1000 draws and ShapeError for local_dim < 3.
HigherRankWitness higher_rank_probe(std::uint64_t seed,
                                    std::size_t local_dim = 3);

}  // namespace bellcc

#endif  // BELLCC_CCS_HPP_
