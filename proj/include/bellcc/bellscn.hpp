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

// The two-party, two-setting, two-outcome Bell scenario: behaviors
// P(a,b|x,y), correlators and the CHSH functional.

#ifndef BELLCC_BELLSCN_HPP_
#define BELLCC_BELLSCN_HPP_

#include <array>
#include <cstddef>
#include <numbers>

#include "bellcc/matops.hpp"
#include "bellcc/qstate.hpp"

namespace bellcc {

enum class Party { kAlice, kBob };

// Outcome projectors {R(t)|0><0|R(t)^T, R(t)|1><1|R(t)^T} of a qubit
// measurement along real-plane angle t, R(t) = [[cos t, -sin t], [sin t, cos
// t]].
std::array<ComplexMatrix, 2> angle_projectors(double theta);

// One party's two measurement settings. projector(x, a) is the projector for
// outcome a of setting x on the party's qubit.
class MeasurementFamily {
 public:
  // Throws InvalidOperatorError unless each setting's pair of projectors is a
  // partition of unity on C^2.
  MeasurementFamily(Party party,
                    std::array<std::array<ComplexMatrix, 2>, 2> projectors);

  static MeasurementFamily from_angles(Party party, double theta0,
                                       double theta1);

  Party party() const { return party_; }
  const ComplexMatrix& projector(int x, int a) const {
    return projectors_[x][a];
  }

 private:
  Party party_;
  std::array<std::array<ComplexMatrix, 2>, 2> projectors_;
};

// P(a,b|x,y) for a, b, x, y in {0, 1}. Stored flat in the order
// index = 8a + 4b + 2x + y.
class BehaviorTable {
 public:
  using Entries = std::array<double, 16>;

  // Throws InvalidBehaviorError if an entry is outside [-tol, 1 + tol], not
  // finite, or some (x, y) block does not sum to 1 within tol.
  explicit BehaviorTable(const Entries& entries, double tol = kStructuralTol);

  static BehaviorTable uniform();

  static constexpr std::size_t index(int a, int b, int x, int y) {
    return static_cast<std::size_t>(8 * a + 4 * b + 2 * x + y);
  }

  double operator()(int a, int b, int x, int y) const {
    return entries_[index(a, b, x, y)];
  }
  const Entries& entries() const { return entries_; }

  friend bool operator==(const BehaviorTable&, const BehaviorTable&) = default;

 private:
  Entries entries_{};
};

// weight * p + (1 - weight) * q; weight in [0, 1].
BehaviorTable blend(const BehaviorTable& p, const BehaviorTable& q,
                    double weight);

struct CorrelatorSet {
  double c00 = 0.0;
  double c01 = 0.0;
  double c10 = 0.0;
  double c11 = 0.0;

  double at(int x, int y) const;

  friend bool operator==(const CorrelatorSet&, const CorrelatorSet&) = default;
};

// P(a,b|x,y) = Tr[rho (Pi^a_x (x) Pi^b_y)] for a two-qubit rho.
BehaviorTable behavior_from_quantum(const DensityOperator& rho,
                                    const MeasurementFamily& alice,
                                    const MeasurementFamily& bob);

// C_xy = P(a=b|x,y) - P(a!=b|x,y).
CorrelatorSet correlators(const BehaviorTable& p);

// C00 + C01 + C10 - C11.
double chsh_value(const CorrelatorSet& c);

// |phi+> = (|00> + |11>) / sqrt(2).
Ket bell_phi_plus_ket();

// |phi+>, |phi->, |psi+>, |psi->.
std::array<Ket, 4> bell_basis_kets();

inline constexpr std::array<double, 2> kCanonicalAliceAngles = {
    0.0, std::numbers::pi / 4.0};
inline constexpr std::array<double, 2> kCanonicalBobAngles = {
    std::numbers::pi / 8.0, -std::numbers::pi / 8.0};

struct ChshSetup {
  DensityOperator rho;
  MeasurementFamily alice;
  MeasurementFamily bob;
};

// |phi+><phi+| with Alice at angles {0, pi/4} and Bob at {pi/8, -pi/8};
// attains C = 2 sqrt(2).
ChshSetup canonical_chsh_setup();

// Largest deviation between a party's marginal under the two settings of the
// other party.
double signalling_gap(const BehaviorTable& p);

bool no_signalling_check(const BehaviorTable& p, double tol = kStructuralTol);

}  // namespace bellcc

#endif  // BELLCC_BELLSCN_HPP_
