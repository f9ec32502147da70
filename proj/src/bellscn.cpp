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

#include "bellcc/bellscn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bellcc/errors.hpp"

namespace bellcc {

std::array<ComplexMatrix, 2> angle_projectors(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Ket up = {c, s};     // R(theta)|0>
  const Ket down = {-s, c};  // R(theta)|1>
  return {outer(up, up), outer(down, down)};
}

MeasurementFamily::MeasurementFamily(
    Party party, std::array<std::array<ComplexMatrix, 2>, 2> projectors)
    : party_(party), projectors_(std::move(projectors)) {
  for (int x = 0; x < 2; ++x) {
    const auto check =
        validate_partition({projectors_[x][0], projectors_[x][1]});
    if (!check.ok() || check.partition->dim() != 2) {
      std::string msg = "measurement setting " + std::to_string(x) +
                        " is not a qubit partition of unity";
      for (const auto& issue : check.issues) msg += "; " + issue.describe();
      throw InvalidOperatorError(msg);
    }
  }
}

MeasurementFamily MeasurementFamily::from_angles(Party party, double theta0,
                                                 double theta1) {
  if (!std::isfinite(theta0) || !std::isfinite(theta1)) {
    throw InvalidOperatorError("measurement angles must be finite");
  }
  return MeasurementFamily(
      party, {angle_projectors(theta0), angle_projectors(theta1)});
}

BehaviorTable::BehaviorTable(const Entries& entries, double tol)
    : entries_(entries) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const double v = entries_[i];
    if (!std::isfinite(v) || v < -tol || v > 1.0 + tol) {
      std::ostringstream os;
      os << "behavior entry " << i << " = " << v << " outside [0, 1]";
      throw InvalidBehaviorError(os.str());
    }
  }
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      double sum = 0.0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) sum += (*this)(a, b, x, y);
      }
      if (std::abs(sum - 1.0) > tol) {
        std::ostringstream os;
        os << "behavior block (x=" << x << ", y=" << y << ") sums to " << sum;
        throw InvalidBehaviorError(os.str());
      }
    }
  }
}

BehaviorTable BehaviorTable::uniform() {
  Entries e;
  e.fill(0.25);
  return BehaviorTable(e);
}

BehaviorTable blend(const BehaviorTable& p, const BehaviorTable& q,
                    double weight) {
  BehaviorTable::Entries e;
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = weight * p.entries()[i] + (1.0 - weight) * q.entries()[i];
  }
  return BehaviorTable(e);
}

double CorrelatorSet::at(int x, int y) const {
  if (x == 0) return y == 0 ? c00 : c01;
  return y == 0 ? c10 : c11;
}

BehaviorTable behavior_from_quantum(const DensityOperator& rho,
                                    const MeasurementFamily& alice,
                                    const MeasurementFamily& bob) {
  if (rho.dim() != 4) {
    throw ShapeError(
        "behavior_from_quantum: expected a two-qubit state, got "
        "dimension " +
        std::to_string(rho.dim()));
  }
  if (alice.party() != Party::kAlice || bob.party() != Party::kBob) {
    throw InvalidOperatorError(
        "behavior_from_quantum: measurement families given for the wrong "
        "parties");
  }
  BehaviorTable::Entries e;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          const ComplexMatrix effect =
              tensor(alice.projector(x, a), bob.projector(y, b));
          e[BehaviorTable::index(a, b, x, y)] = born_prob(rho, effect);
        }
      }
    }
  }
  return BehaviorTable(e);
}

CorrelatorSet correlators(const BehaviorTable& p) {
  auto c = [&p](int x, int y) {
    return p(0, 0, x, y) + p(1, 1, x, y) - p(0, 1, x, y) - p(1, 0, x, y);
  };
  return {c(0, 0), c(0, 1), c(1, 0), c(1, 1)};
}

double chsh_value(const CorrelatorSet& c) {
  return c.c00 + c.c01 + c.c10 - c.c11;
}

Ket bell_phi_plus_ket() { return bell_basis_kets()[0]; }

std::array<Ket, 4> bell_basis_kets() {
  const double h = 1.0 / std::sqrt(2.0);
  return {Ket{h, 0.0, 0.0, h}, Ket{h, 0.0, 0.0, -h}, Ket{0.0, h, h, 0.0},
          Ket{0.0, h, -h, 0.0}};
}

ChshSetup canonical_chsh_setup() {
  return {
      DensityOperator::pure(bell_phi_plus_ket()),
      MeasurementFamily::from_angles(Party::kAlice, kCanonicalAliceAngles[0],
                                     kCanonicalAliceAngles[1]),
      MeasurementFamily::from_angles(Party::kBob, kCanonicalBobAngles[0],
                                     kCanonicalBobAngles[1])};
}

double signalling_gap(const BehaviorTable& p) {
  double gap = 0.0;
  for (int s = 0; s < 2; ++s) {
    for (int setting = 0; setting < 2; ++setting) {
      // Alice's marginal P(a=s|x=setting) under y = 0 vs y = 1.
      double alice[2] = {0.0, 0.0};
      double bob[2] = {0.0, 0.0};
      for (int other = 0; other < 2; ++other) {
        for (int t = 0; t < 2; ++t) {
          alice[other] += p(s, t, setting, other);
          bob[other] += p(t, s, other, setting);
        }
      }
      gap = std::max(
          {gap, std::abs(alice[0] - alice[1]), std::abs(bob[0] - bob[1])});
    }
  }
  return gap;
}

bool no_signalling_check(const BehaviorTable& p, double tol) {
  return signalling_gap(p) <= tol;
}

}  // namespace bellcc
