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

#include "bellcc/lhv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bellcc/errors.hpp"
#include "bellcc/simplex.hpp"

namespace bellcc {

std::size_t DeterministicStrategy::index() const {
  return static_cast<std::size_t>(8 * alice[0] + 4 * alice[1] + 2 * bob[0] +
                                  bob[1]);
}

std::vector<DeterministicStrategy> enumerate_strategies() {
  std::vector<DeterministicStrategy> out;
  out.reserve(kNumStrategies);
  for (int a0 = 0; a0 < 2; ++a0) {
    for (int a1 = 0; a1 < 2; ++a1) {
      for (int b0 = 0; b0 < 2; ++b0) {
        for (int b1 = 0; b1 < 2; ++b1) {
          out.push_back({{a0, a1}, {b0, b1}});
        }
      }
    }
  }
  return out;
}

BehaviorTable behavior_of_strategy(const DeterministicStrategy& s) {
  BehaviorTable::Entries e{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      e[BehaviorTable::index(s.alice[x], s.bob[y], x, y)] = 1.0;
    }
  }
  return BehaviorTable(e);
}

BehaviorTable mix(std::span<const double> weights,
                  std::span<const DeterministicStrategy> strategies) {
  if (weights.size() != strategies.size()) {
    throw std::invalid_argument("mix: weights and strategies differ in size");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("mix: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "mix: weights sum to " << total;
    throw std::invalid_argument(os.str());
  }
  BehaviorTable::Entries e{};
  for (std::size_t k = 0; k < strategies.size(); ++k) {
    const auto& s = strategies[k];
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        e[BehaviorTable::index(s.alice[x], s.bob[y], x, y)] += weights[k];
      }
    }
  }
  return BehaviorTable(e);
}

int ChshVariant::sign(int x, int y) const {
  return ((x * y) ^ (alpha * x) ^ (beta * y) ^ gamma) ? -1 : 1;
}

std::string ChshVariant::name() const {
  std::ostringstream os;
  os << "CHSH(alpha=" << alpha << ",beta=" << beta << ",gamma=" << gamma << ")";
  return os.str();
}

std::array<ChshVariant, 8> chsh_variants() {
  std::array<ChshVariant, 8> out;
  std::size_t k = 0;
  for (int alpha = 0; alpha < 2; ++alpha) {
    for (int beta = 0; beta < 2; ++beta) {
      for (int gamma = 0; gamma < 2; ++gamma) out[k++] = {alpha, beta, gamma};
    }
  }
  return out;
}

double chsh_variant_value(const CorrelatorSet& c, const ChshVariant& v) {
  double sum = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) sum += v.sign(x, y) * c.at(x, y);
  }
  return sum;
}

const char* to_string(CertificateSource source) {
  switch (source) {
    case CertificateSource::kLpDual:
      return "lp-dual";
    case CertificateSource::kChshScan:
      return "chsh-scan";
  }
  return "unknown";
}

std::array<double, 16> chsh_coefficients(const ChshVariant& v) {
  std::array<double, 16> coef{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          const int parity = (a == b) ? 1 : -1;
          coef[BehaviorTable::index(a, b, x, y)] = v.sign(x, y) * parity;
        }
      }
    }
  }
  return coef;
}

double evaluate(std::span<const double, 16> coefficients,
                const BehaviorTable& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 16; ++i) sum += coefficients[i] * p.entries()[i];
  return sum;
}

double local_bound(std::span<const double, 16> coefficients) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& s : enumerate_strategies()) {
    best = std::max(best, evaluate(coefficients, behavior_of_strategy(s)));
  }
  return best;
}

namespace {

// Rows 0..15: behavior entries of each strategy; row 16: normalization.
LpMatrix local_polytope_constraints() {
  LpMatrix a{17, kNumStrategies, std::vector<double>(17 * kNumStrategies, 0.0)};
  const auto strategies = enumerate_strategies();
  for (std::size_t k = 0; k < strategies.size(); ++k) {
    const auto table = behavior_of_strategy(strategies[k]);
    for (std::size_t i = 0; i < 16; ++i) a(i, k) = table.entries()[i];
    a(16, k) = 1.0;
  }
  return a;
}

}  // namespace

LhvVerdict lhv_feasible(const BehaviorTable& p, double tol) {
  static const LpMatrix constraints = local_polytope_constraints();
  std::array<double, 17> rhs{};
  std::copy(p.entries().begin(), p.entries().end(), rhs.begin());
  rhs[16] = 1.0;

  const PhaseOneResult lp = solve_phase_one(constraints, rhs);
  LhvVerdict verdict;
  verdict.lp_infeasibility = lp.infeasibility;

  if (lp.infeasibility <= tol) {
    std::array<double, 16> weights{};
    double total = 0.0;
    for (std::size_t k = 0; k < kNumStrategies; ++k) {
      weights[k] = std::max(0.0, lp.x[k]);
      total += weights[k];
    }
    for (double& w : weights) w /= total;
    const auto strategies = enumerate_strategies();
    const BehaviorTable rebuilt = mix(weights, strategies);
    double residual = 0.0;
    for (std::size_t i = 0; i < 16; ++i) {
      residual =
          std::max(residual, std::abs(rebuilt.entries()[i] - p.entries()[i]));
    }
    verdict.feasible = true;
    verdict.weights = weights;
    verdict.residual = residual;
    return verdict;
  }

  verdict.feasible = false;
  verdict.residual =
      *std::max_element(lp.row_residuals.begin(), lp.row_residuals.end());

  BellFunctional dual;
  std::copy_n(lp.dual.begin(), 16, dual.coefficients.begin());
  dual.local_bound = local_bound(dual.coefficients);
  dual.achieved = evaluate(dual.coefficients, p);
  dual.source = CertificateSource::kLpDual;
  dual.name = "farkas-dual";
  verdict.dual_certificate = dual;

  const CorrelatorSet c = correlators(p);
  const auto variants = chsh_variants();
  const auto best = std::max_element(
      variants.begin(), variants.end(), [&c](const auto& l, const auto& r) {
        return chsh_variant_value(c, l) < chsh_variant_value(c, r);
      });
  const double best_value = chsh_variant_value(c, *best);
  if (best_value > 2.0 + tol) {
    BellFunctional chsh;
    chsh.coefficients = chsh_coefficients(*best);
    chsh.local_bound = local_bound(chsh.coefficients);
    chsh.achieved = evaluate(chsh.coefficients, p);
    chsh.source = CertificateSource::kChshScan;
    chsh.name = best->name();
    verdict.certificate = chsh;
  } else {
    verdict.certificate = dual;
  }
  return verdict;
}

double chsh_oracle(const BehaviorTable& p, double ns_tol) {
  const double gap = signalling_gap(p);
  if (gap > ns_tol) {
    std::ostringstream os;
    os << "chsh_oracle: behavior signals (gap " << gap << ")";
    throw OracleInapplicableError(os.str());
  }
  const CorrelatorSet c = correlators(p);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : chsh_variants()) {
    best = std::max(best, chsh_variant_value(c, v));
  }
  return best;
}

BehaviorTable pr_box(int alpha, int beta, int gamma) {
  BehaviorTable::Entries e{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          const int target = (x * y) ^ (alpha * x) ^ (beta * y) ^ gamma;
          e[BehaviorTable::index(a, b, x, y)] = ((a ^ b) == target) ? 0.5 : 0.0;
        }
      }
    }
  }
  return BehaviorTable(e);
}

double visibility_threshold(const BehaviorTable& signal,
                            const BehaviorTable& noise, double precision,
                            double tol) {
  if (!lhv_feasible(noise, tol).feasible) {
    throw std::invalid_argument("visibility_threshold: noise is not local");
  }
  if (lhv_feasible(signal, tol).feasible) return 1.0;
  double lo = 0.0;  // local
  double hi = 1.0;  // nonlocal
  while (hi - lo > precision) {
    const double mid = 0.5 * (lo + hi);
    if (lhv_feasible(blend(signal, noise, mid), tol).feasible) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace bellcc
