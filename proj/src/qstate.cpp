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

#include "bellcc/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bellcc/errors.hpp"

namespace bellcc {

bool is_positive_semidefinite(const ComplexMatrix& m, double tol) {
  ComplexMatrix work = m;
  const std::size_t n = work.rows();
  std::vector<bool> eliminated(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (!eliminated[i] && work(i, i).real() > best) {
        best = work(i, i).real();
        pivot = i;
      }
    }
    if (best < -tol) return false;
    if (best <= tol) {
      // Remaining block has a numerically zero diagonal; a PSD block with a
      // zero diagonal is zero, so any sizeable off-diagonal entry means a
      // negative eigenvalue of about that magnitude.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && !eliminated[i] && !eliminated[j] &&
              std::abs(work(i, j)) > 2.0 * tol) {
            return false;
          }
        }
      }
      return true;
    }
    eliminated[pivot] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (eliminated[i]) continue;
      const Complex factor = work(i, pivot) / best;
      for (std::size_t j = 0; j < n; ++j) {
        if (eliminated[j]) continue;
        work(i, j) -= factor * work(pivot, j);
      }
    }
  }
  return true;
}

DensityOperator::DensityOperator(ComplexMatrix rho, double tol)
    : rho_(std::move(rho)) {
  if (!rho_.is_square() || rho_.rows() == 0) {
    throw InvalidOperatorError(
        "density operator must be a non-empty square "
        "matrix");
  }
  if (!is_hermitian(rho_, tol)) {
    throw InvalidOperatorError("density operator is not Hermitian");
  }
  const Complex tr = trace(rho_);
  if (std::abs(tr - Complex(1.0)) > tol) {
    std::ostringstream os;
    os << "density operator has trace " << tr.real() << ", expected 1";
    throw InvalidOperatorError(os.str());
  }
  if (!is_positive_semidefinite(rho_, tol)) {
    throw InvalidOperatorError(
        "density operator is not positive "
        "semidefinite");
  }
}

DensityOperator DensityOperator::pure(std::span<const Complex> psi) {
  return DensityOperator(projector_onto(psi));
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw ShapeError("maximally_mixed: dim must be >= 1");
  return DensityOperator((1.0 / static_cast<double>(dim)) *
                         ComplexMatrix::identity(dim));
}

std::string PartitionIssue::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kEmpty:
      os << "empty partition";
      break;
    case Kind::kShape:
      os << "shape(" << first << "): member is not square with the common "
         << "dimension";
      break;
    case Kind::kNotProjector:
      os << "not-projector(" << first << ")";
      break;
    case Kind::kNotOrthogonal:
      os << "not-orthogonal(" << first << "," << second
         << "): |C_j C_k| = " << magnitude;
      break;
    case Kind::kIncomplete:
      os << "incomplete-sum: |sum_k C_k - I| = " << magnitude;
      break;
  }
  return os.str();
}

const PartitionOfUnity& PartitionValidation::value() const {
  if (!partition) {
    std::string msg = "invalid partition of unity:";
    for (const auto& issue : issues) msg += " " + issue.describe() + ";";
    throw InvalidOperatorError(msg);
  }
  return *partition;
}

PartitionValidation validate_partition(std::vector<ComplexMatrix> members,
                                       double tol) {
  using Kind = PartitionIssue::Kind;
  PartitionValidation result;
  if (members.empty()) {
    result.issues.push_back({Kind::kEmpty});
    return result;
  }
  const std::size_t dim = members.front().rows();
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (!members[k].is_square() || members[k].rows() != dim) {
      result.issues.push_back({Kind::kShape, k});
    }
  }
  if (!result.issues.empty()) return result;

  for (std::size_t k = 0; k < members.size(); ++k) {
    if (!is_projector(members[k], tol)) {
      result.issues.push_back({Kind::kNotProjector, k});
    }
  }
  for (std::size_t j = 0; j < members.size(); ++j) {
    for (std::size_t k = j + 1; k < members.size(); ++k) {
      const double overlap = max_abs(matmul(members[j], members[k]));
      if (overlap > tol) {
        result.issues.push_back({Kind::kNotOrthogonal, j, k, overlap});
      }
    }
  }
  ComplexMatrix sum(dim, dim);
  for (const auto& c : members) sum += c;
  const double gap = max_abs_diff(sum, ComplexMatrix::identity(dim));
  if (gap > tol) {
    result.issues.push_back({Kind::kIncomplete, 0, 0, gap});
  }
  if (result.issues.empty()) {
    result.partition = PartitionOfUnity(dim, std::move(members));
  }
  return result;
}

double born_prob(const DensityOperator& rho, const ComplexMatrix& e) {
  if (e.rows() != rho.dim() || e.cols() != rho.dim()) {
    throw ShapeError("born_prob: effect dimension does not match the state");
  }
  if (!is_hermitian(e)) {
    throw InvalidOperatorError("born_prob: effect is not Hermitian");
  }
  return trace(matmul(rho.matrix(), e)).real();
}

namespace {

double condition_probability(const DensityOperator& rho,
                             const ComplexMatrix& c) {
  if (c.rows() != rho.dim() || c.cols() != rho.dim()) {
    throw ShapeError("condition dimension does not match the state");
  }
  if (!is_projector(c)) {
    throw InvalidOperatorError("condition is not a projector");
  }
  const double p = born_prob(rho, c);
  if (p < kNullTol) {
    std::ostringstream os;
    os << "conditioning on an event of probability " << p;
    throw NullConditionError(os.str());
  }
  return p;
}

}  // namespace

double luders_conditional(const DensityOperator& rho, const ComplexMatrix& a,
                          const ComplexMatrix& c) {
  if (a.rows() != rho.dim() || a.cols() != rho.dim()) {
    throw ShapeError(
        "luders_conditional: event dimension does not match the "
        "state");
  }
  if (!is_projector(a)) {
    throw InvalidOperatorError("luders_conditional: event is not a projector");
  }
  const double pc = condition_probability(rho, c);
  const ComplexMatrix cac = matmul(c, matmul(a, c));
  return trace(matmul(rho.matrix(), cac)).real() / pc;
}

DensityOperator luders_update(const DensityOperator& rho,
                              const ComplexMatrix& c) {
  const double pc = condition_probability(rho, c);
  ComplexMatrix updated = (1.0 / pc) * matmul(c, matmul(rho.matrix(), c));
  return DensityOperator(std::move(updated));
}

DensityOperator dephase(const DensityOperator& rho,
                        const PartitionOfUnity& partition) {
  if (partition.dim() != rho.dim()) {
    throw ShapeError("dephase: partition dimension does not match the state");
  }
  ComplexMatrix out(rho.dim(), rho.dim());
  for (const auto& c : partition.members()) {
    out += matmul(c, matmul(rho.matrix(), c));
  }
  return DensityOperator(std::move(out));
}

namespace {

Complex gaussian_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

}  // namespace

DensityOperator random_density(std::size_t dim, std::mt19937_64& rng) {
  if (dim == 0) throw ShapeError("random_density: dim must be >= 1");
  std::vector<Complex> entries(dim * dim);
  for (Complex& z : entries) z = gaussian_complex(rng);
  const ComplexMatrix g(dim, dim, std::move(entries));
  ComplexMatrix ggd = matmul(g, dagger(g));
  const double tr = trace(ggd).real();
  ggd *= 1.0 / tr;
  // Restore exact Hermiticity lost to rounding.
  ComplexMatrix sym = 0.5 * (ggd + dagger(ggd));
  return DensityOperator(std::move(sym));
}

DensityOperator random_density(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_density(dim, rng);
}

Ket random_unit_vector(std::size_t dim, std::mt19937_64& rng) {
  Ket v(dim);
  for (Complex& z : v) z = gaussian_complex(rng);
  const double norm = std::sqrt(inner(v, v).real());
  for (Complex& z : v) z /= norm;
  return v;
}

std::vector<Ket> random_orthonormal_basis(std::size_t dim,
                                          std::mt19937_64& rng) {
  std::vector<Ket> basis;
  basis.reserve(dim);
  while (basis.size() < dim) {
    Ket v = random_unit_vector(dim, rng);
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (const Ket& u : basis) {
        const Complex overlap = inner(u, v);
        for (std::size_t i = 0; i < dim; ++i) v[i] -= overlap * u[i];
      }
    }
    const double norm = std::sqrt(inner(v, v).real());
    if (norm < 1e-6) continue;
    for (Complex& z : v) z /= norm;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace bellcc
