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

// Local-hidden-variable models for the CHSH scenario.
//
// A behavior is local iff it is a convex mixture of the 16 deterministic
// strategies. lhv_feasible decides this with a phase-one simplex over the
// strategy weights; chsh_oracle is the independent check via the eight CHSH
// inequalities, which cut out the local polytope among no-signalling
// behaviors.

#ifndef BELLCC_LHV_HPP_
#define BELLCC_LHV_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bellcc/bellscn.hpp"

namespace bellcc {

inline constexpr double kLhvTol = 1e-7;
inline constexpr std::size_t kNumStrategies = 16;

// Deterministic responses a(x), b(y).
struct DeterministicStrategy {
  std::array<int, 2> alice{};
  std::array<int, 2> bob{};

  // Position in enumerate_strategies(): 8 a(0) + 4 a(1) + 2 b(0) + b(1).
  std::size_t index() const;

  friend bool operator==(const DeterministicStrategy&,
                         const DeterministicStrategy&) = default;
};

// All 16 strategies in lexicographic order of (a(0), a(1), b(0), b(1)).
std::vector<DeterministicStrategy> enumerate_strategies();

BehaviorTable behavior_of_strategy(const DeterministicStrategy& s);

// Convex combination sum_k weights[k] * behavior_of_strategy(strategies[k]).
// Throws std::invalid_argument for negative weights, weights not summing to 1
// within 1e-10, or a size mismatch.
BehaviorTable mix(std::span<const double> weights,
                  std::span<const DeterministicStrategy> strategies);

// The eight CHSH symmetrizations sum_xy s_xy C_xy <= 2 with
// s_xy = (-1)^(xy + alpha x + beta y + gamma).
struct ChshVariant {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;

  int sign(int x, int y) const;
  std::string name() const;
};

std::array<ChshVariant, 8> chsh_variants();

double chsh_variant_value(const CorrelatorSet& c, const ChshVariant& v);

enum class CertificateSource { kLpDual, kChshScan };

const char* to_string(CertificateSource source);

// A linear functional sum_i coefficients[i] * P[i] on behavior tables
// (BehaviorTable index order) together with its maximum over the local
// polytope and its value on the behavior being certified.
struct BellFunctional {
  std::array<double, 16> coefficients{};
  double local_bound = 0.0;
  double achieved = 0.0;
  CertificateSource source = CertificateSource::kLpDual;
  std::string name;

  friend bool operator==(const BellFunctional&,
                         const BellFunctional&) = default;
};

// CHSH variant v written as a behavior functional; local bound 2.
std::array<double, 16> chsh_coefficients(const ChshVariant& v);

double evaluate(std::span<const double, 16> coefficients,
                const BehaviorTable& p);

// max over the 16 deterministic strategies.
double local_bound(std::span<const double, 16> coefficients);

struct LhvVerdict {
  bool feasible = false;
  // Present iff feasible; indexed like enumerate_strategies().
  std::optional<std::array<double, 16>> weights;
  // Present iff infeasible. Preferably the most violated CHSH variant; the
  // LP dual functional when no variant separates.
  std::optional<BellFunctional> certificate;
  // Present iff infeasible: the Farkas functional from the LP dual.
  std::optional<BellFunctional> dual_certificate;
  // Largest entrywise gap between the reconstructed and input behaviors.
  double residual = 0.0;
  // Optimal L1 infeasibility of the phase-one LP.
  double lp_infeasibility = 0.0;

  friend bool operator==(const LhvVerdict&, const LhvVerdict&) = default;
};

// Decides membership of p in the local polytope: feasible iff the phase-one
// L1 reconstruction error is at most tol.
LhvVerdict lhv_feasible(const BehaviorTable& p, double tol = kLhvTol);

// max over the eight CHSH variants. Throws OracleInapplicableError when p
// signals by more than ns_tol.
double chsh_oracle(const BehaviorTable& p, double ns_tol = kStructuralTol);

// Extremal no-signalling box: P(a,b|x,y) = 1/2 iff
// a xor b = xy xor alpha x xor beta y xor gamma.
BehaviorTable pr_box(int alpha, int beta, int gamma);

// Bisection for the largest v in [0, 1] such that v * signal + (1 - v) * noise
// is local according to lhv_feasible. `noise` must be local.
double visibility_threshold(const BehaviorTable& signal,
                            const BehaviorTable& noise, double precision,
                            double tol = kLhvTol);

}  // namespace bellcc

#endif  // BELLCC_LHV_HPP_
