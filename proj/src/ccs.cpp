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

#include "bellcc/ccs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bellcc/bellscn.hpp"
#include "bellcc/errors.hpp"

namespace bellcc {

EventPair::EventPair(ComplexMatrix a_local, ComplexMatrix b_local)
    : a_local_(std::move(a_local)), b_local_(std::move(b_local)) {
  if (!a_local_.is_square() || !b_local_.is_square()) {
    throw ShapeError("EventPair: local events must be square");
  }
  if (!is_projector(a_local_) || !is_projector(b_local_)) {
    throw InvalidOperatorError("EventPair: local events must be projectors");
  }
  a_ = tensor(a_local_, ComplexMatrix::identity(b_local_.rows()));
  b_ = tensor(ComplexMatrix::identity(a_local_.rows()), b_local_);
  if (!commutes(a_, b_, 1e-12)) {
    throw std::logic_error("EventPair: tensor-split events fail to commute");
  }
}

ComplexMatrix conditional_expectation(const ComplexMatrix& a,
                                      const PartitionOfUnity& partition) {
  if (a.rows() != partition.dim() || a.cols() != partition.dim()) {
    throw ShapeError(
        "conditional_expectation: operator and partition "
        "dimensions differ");
  }
  ComplexMatrix out(a.rows(), a.cols());
  for (const auto& c : partition.members()) out += matmul(c, matmul(a, c));
  return out;
}

namespace {

double expectation(const DensityOperator& rho, const ComplexMatrix& x) {
  return trace(matmul(rho.matrix(), x)).real();
}

CcsReport check_cells(const DensityOperator& rho, const ComplexMatrix& a,
                      const ComplexMatrix& b, const PartitionOfUnity& partition,
                      double tol) {
  if (rho.dim() != partition.dim() || a.rows() != rho.dim() ||
      b.rows() != rho.dim()) {
    throw ShapeError(
        "ccs_check: state, events and partition dimensions "
        "differ");
  }
  if (partition.size() < 2) {
    throw UncheckableError(
        "ccs_check: a common-cause system needs at least "
        "two cells");
  }
  const ComplexMatrix ab = matmul(a, b);
  CcsReport report;
  report.satisfied = true;
  std::size_t checked = 0;
  for (std::size_t k = 0; k < partition.size(); ++k) {
    const ComplexMatrix& c = partition[k];
    CellCheck cell;
    cell.index = k;
    cell.p_ck = expectation(rho, c);
    if (cell.p_ck < kNullTol) {
      cell.skipped = true;
      report.cells.push_back(cell);
      continue;
    }
    ++checked;
    // Direct trace form.
    const double t_ab = expectation(rho, matmul(c, matmul(ab, c)));
    const double t_a = expectation(rho, matmul(c, matmul(a, c)));
    const double t_b = expectation(rho, matmul(c, matmul(b, c)));
    // Through the conditional expectation.
    const double e_ab =
        expectation(rho, conditional_expectation(matmul(ab, c), partition));
    const double e_a =
        expectation(rho, conditional_expectation(matmul(a, c), partition));
    const double e_b =
        expectation(rho, conditional_expectation(matmul(b, c), partition));
    cell.path_gap = std::max(
        {std::abs(t_ab - e_ab), std::abs(t_a - e_a), std::abs(t_b - e_b)});
    if (cell.path_gap > kPathAgreementTol) {
      std::ostringstream os;
      os << "ccs_check: conditional-expectation and trace evaluations differ "
         << "by " << cell.path_gap << " at cell " << k;
      throw std::logic_error(os.str());
    }
    cell.lhs = t_ab / cell.p_ck;
    cell.rhs = (t_a / cell.p_ck) * (t_b / cell.p_ck);
    cell.residual = std::abs(cell.lhs - cell.rhs);
    report.max_residual = std::max(report.max_residual, cell.residual);
    report.max_path_gap = std::max(report.max_path_gap, cell.path_gap);
    if (cell.residual > tol) report.satisfied = false;
    report.cells.push_back(cell);
  }
  if (checked == 0) {
    throw UncheckableError("ccs_check: every cell has zero probability");
  }
  return report;
}

}  // namespace

CcsReport ccs_check(const DensityOperator& rho, const EventPair& events,
                    const PartitionOfUnity& partition, double tol) {
  if (events.dim_a() * events.dim_b() != rho.dim()) {
    throw ShapeError("ccs_check: events do not act on the state's space");
  }
  return check_cells(rho, events.a(), events.b(), partition, tol);
}

CcsReport ccs_check_commuting(const DensityOperator& rho,
                              const ComplexMatrix& a, const ComplexMatrix& b,
                              const PartitionOfUnity& partition, double tol) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw ShapeError(
        "ccs_check_commuting: events must be square with equal "
        "dimension");
  }
  if (!is_projector(a) || !is_projector(b) || !commutes(a, b)) {
    throw InvalidOperatorError(
        "ccs_check_commuting: events must be "
        "commuting projectors");
  }
  return check_cells(rho, a, b, partition, tol);
}

namespace {

void require_orthonormal_basis(std::span<const Ket> basis, const char* who) {
  const std::size_t dim = basis.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (basis[i].size() != dim) {
      throw InvalidOperatorError(std::string(who) +
                                 ": basis must contain dim vectors of length "
                                 "dim");
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const Complex expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(inner(basis[i], basis[j]) - expected) > kStructuralTol) {
        throw InvalidOperatorError(std::string(who) +
                                   ": basis is not orthonormal");
      }
    }
  }
}

}  // namespace

PartitionOfUnity product_grid_partition(std::span<const Ket> basis_a,
                                        std::span<const Ket> basis_b) {
  if (basis_a.empty() || basis_b.empty()) {
    throw InvalidOperatorError("product_grid_partition: empty basis");
  }
  require_orthonormal_basis(basis_a, "product_grid_partition (A)");
  require_orthonormal_basis(basis_b, "product_grid_partition (B)");
  std::vector<ComplexMatrix> cells;
  cells.reserve(basis_a.size() * basis_b.size());
  for (const Ket& u : basis_a) {
    const ComplexMatrix pa = outer(u, u);
    for (const Ket& v : basis_b) cells.push_back(tensor(pa, outer(v, v)));
  }
  auto checked = validate_partition(std::move(cells));
  return checked.value();
}

PartitionOfUnity bell_basis_partition() {
  std::vector<ComplexMatrix> cells;
  for (const Ket& k : bell_basis_kets()) cells.push_back(outer(k, k));
  return validate_partition(std::move(cells)).value();
}

namespace {

// Projector onto the span of the first `rank` vectors of a random basis.
ComplexMatrix random_local_projector(std::size_t dim, std::mt19937_64& rng) {
  const auto basis = random_orthonormal_basis(dim, rng);
  std::size_t rank = 1;
  if (dim > 2) {
    std::uniform_int_distribution<std::size_t> pick(1, dim - 1);
    rank = pick(rng);
  }
  ComplexMatrix p(dim, dim);
  for (std::size_t i = 0; i < rank; ++i) p += outer(basis[i], basis[i]);
  return p;
}

}  // namespace

SweepSummary triviality_sweep(std::size_t trials, std::uint64_t seed,
                              double tol, const SweepOptions& options) {
  if (trials == 0) throw std::invalid_argument("triviality_sweep: trials == 0");
  const std::size_t dim = options.dim_a * options.dim_b;
  if (options.fixed_state && options.fixed_state->dim() != dim) {
    throw ShapeError("triviality_sweep: fixed state has the wrong dimension");
  }
  std::mt19937_64 rng(seed);
  SweepSummary summary;
  summary.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const DensityOperator rho =
        options.fixed_state ? *options.fixed_state : random_density(dim, rng);
    const auto basis_a = random_orthonormal_basis(options.dim_a, rng);
    const auto basis_b = random_orthonormal_basis(options.dim_b, rng);
    const EventPair events(random_local_projector(options.dim_a, rng),
                           random_local_projector(options.dim_b, rng));
    const CcsReport report =
        ccs_check(rho, events, product_grid_partition(basis_a, basis_b), tol);
    if (report.satisfied) ++summary.satisfied;
    summary.max_residual = std::max(summary.max_residual, report.max_residual);
    for (const auto& cell : report.cells) {
      if (cell.skipped) ++summary.skipped_cells;
    }
  }
  return summary;
}

HigherRankWitness higher_rank_probe(std::uint64_t seed, std::size_t local_dim) {
  if (local_dim < 3) {
    throw ShapeError("higher_rank_probe: local dimension must be at least 3");
  }
  constexpr int kMaxAttempts = 1000;
  constexpr double kMinResidual = 0.01;
  // Pure-state weight; the rest is Ginibre noise on the whole space.
  constexpr double kSignalWeight = 0.95;
  std::mt19937_64 rng(seed);
  const std::size_t dim = local_dim * local_dim;

  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    const auto ua = random_orthonormal_basis(local_dim, rng);
    const auto vb = random_orthonormal_basis(local_dim, rng);
    ComplexMatrix p(local_dim, local_dim);
    ComplexMatrix q(local_dim, local_dim);
    for (std::size_t i = 0; i < 2; ++i) {
      p += outer(ua[i], ua[i]);
      q += outer(vb[i], vb[i]);
    }
    const ComplexMatrix p_perp = ComplexMatrix::identity(local_dim) - p;
    const ComplexMatrix q_perp = ComplexMatrix::identity(local_dim) - q;
    auto partition =
        validate_partition({tensor(p, q), tensor(p, q_perp), tensor(p_perp, q),
                            tensor(p_perp, q_perp)})
            .value();

    // psi = sum_ij m_ij |u_i>|v_j> with i, j < 2. Its Schmidt coefficients
    // are those of m; 2|det m| is the concurrence of the normalized m.
    const Ket m = random_unit_vector(4, rng);
    const double concurrence = 2.0 * std::abs(m[0] * m[3] - m[1] * m[2]);
    if (concurrence < 0.2) continue;
    Ket psi(dim);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        const Ket uv = tensor(ua[i], vb[j]);
        for (std::size_t n = 0; n < dim; ++n) psi[n] += m[2 * i + j] * uv[n];
      }
    }
    const DensityOperator noise = random_density(dim, rng);
    ComplexMatrix mixed = kSignalWeight * projector_onto(psi) +
                          (1.0 - kSignalWeight) * noise.matrix();
    const DensityOperator rho(0.5 * (mixed + dagger(mixed)));

    // Rank-one events inside the supports of P and Q.
    auto in_span = [&rng, local_dim](const std::vector<Ket>& basis) {
      const Ket c = random_unit_vector(2, rng);
      Ket v(local_dim);
      for (std::size_t n = 0; n < local_dim; ++n) {
        v[n] = c[0] * basis[0][n] + c[1] * basis[1][n];
      }
      return projector_onto(v);
    };
    EventPair events(in_span(ua), in_span(vb));

    CcsReport report = ccs_check(rho, events, partition, kCcsTol);
    const double residual = report.cells[0].residual;
    if (!report.cells[0].skipped && residual > kMinResidual) {
      return {rho,
              std::move(partition),
              std::move(events),
              std::move(report),
              0,
              residual,
              attempt};
    }
  }
  throw SearchExhaustedError(
      "higher_rank_probe: no violating draw in 1000 "
      "attempts");
}

}  // namespace bellcc
