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

// Quantum states, Born-rule probabilities and Lüders conditioning on a
// finite-dimensional Hilbert space.

#ifndef BELLCC_QSTATE_HPP_
#define BELLCC_QSTATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bellcc/matops.hpp"

namespace bellcc {

// Events with probability below this are treated as null and never
// conditioned on.
inline constexpr double kNullTol = 1e-12;

// A validated density matrix: Hermitian, unit trace, positive semidefinite.
class DensityOperator {
 public:
  // Validates rho; throws InvalidOperatorError naming the failed property.
  explicit DensityOperator(ComplexMatrix rho, double tol = kStructuralTol);

  static DensityOperator pure(std::span<const Complex> psi);
  static DensityOperator maximally_mixed(std::size_t dim);

  std::size_t dim() const { return rho_.rows(); }
  const ComplexMatrix& matrix() const { return rho_; }

  friend bool operator==(const DensityOperator&,
                         const DensityOperator&) = default;

 private:
  ComplexMatrix rho_;
};

// Positive semidefiniteness via pivoted LDL^dagger: every pivot must stay
// above -tol. Requires a Hermitian input.
bool is_positive_semidefinite(const ComplexMatrix& m, double tol);

struct PartitionValidation;
PartitionValidation validate_partition(std::vector<ComplexMatrix> members,
                                       double tol);

// A validated family of mutually orthogonal projectors summing to identity.
class PartitionOfUnity {
 public:
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<ComplexMatrix>& members() const { return members_; }
  const ComplexMatrix& operator[](std::size_t k) const { return members_[k]; }

 private:
  friend PartitionValidation validate_partition(std::vector<ComplexMatrix>,
                                                double);
  PartitionOfUnity(std::size_t dim, std::vector<ComplexMatrix> members)
      : dim_(dim), members_(std::move(members)) {}

  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> members_;
};

struct PartitionIssue {
  enum class Kind {
    kEmpty,
    kShape,
    kNotProjector,
    kNotOrthogonal,
    kIncomplete
  };
  Kind kind;
  // Member index for kShape / kNotProjector; the pair for kNotOrthogonal.
  std::size_t first = 0;
  std::size_t second = 0;
  double magnitude = 0.0;

  std::string describe() const;
};

// Outcome of validate_partition: either a partition or the list of every
// invariant that failed.
struct PartitionValidation {
  std::optional<PartitionOfUnity> partition;
  std::vector<PartitionIssue> issues;

  bool ok() const { return partition.has_value(); }
  // The partition, or throws InvalidOperatorError listing the issues.
  const PartitionOfUnity& value() const;
};

PartitionValidation validate_partition(std::vector<ComplexMatrix> members,
                                       double tol = kStructuralTol);

// Tr[rho e] for Hermitian e. Throws ShapeError on dimension mismatch and
// InvalidOperatorError when e is not Hermitian.
double born_prob(const DensityOperator& rho, const ComplexMatrix& e);

// Tr[rho c a c] / Tr[rho c]. Throws NullConditionError when Tr[rho c] is
// below kNullTol.
double luders_conditional(const DensityOperator& rho, const ComplexMatrix& a,
                          const ComplexMatrix& c);

// c rho c / Tr[rho c]. Throws NullConditionError as above.
DensityOperator luders_update(const DensityOperator& rho,
                              const ComplexMatrix& c);

// sum_k C_k rho C_k: the state after a non-selective measurement of the
// partition.
DensityOperator dephase(const DensityOperator& rho,
                        const PartitionOfUnity& partition);

// Ginibre ensemble: g g^dagger / Tr(g g^dagger) with i.i.d. standard complex
// Gaussian entries, from a PRNG seeded with `seed`. Throws ShapeError for
// dim == 0.
DensityOperator random_density(std::size_t dim, std::uint64_t seed);
DensityOperator random_density(std::size_t dim, std::mt19937_64& rng);

// Random unit vector (normalized complex Gaussian).
Ket random_unit_vector(std::size_t dim, std::mt19937_64& rng);

// Random orthonormal basis of C^dim (Gram-Schmidt on Gaussian vectors).
std::vector<Ket> random_orthonormal_basis(std::size_t dim,
                                          std::mt19937_64& rng);

}  // namespace bellcc

#endif  // BELLCC_QSTATE_HPP_
