// Copyright 2026 The fullerene-gate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>

#include "fgate/quantities.hpp"
#include "fgate/state.hpp"

// Two spins with dipolar coupling g (in rad/s) along a unit vector n
// perpendicular to the field axis z, plus Zeeman terms -mu_B B_i sigma_z^i:
//
//   H/hbar = g [s1.s2 - 3 (s1.n)(s2.n)] - sum_i (mu_B/hbar) B_i(t) sigma_z^i
//
// With n = x the dipolar part is g (sx sx + sy sy + sz sz - 3 sx sx)
// = g (-2 sx sx + sy sy + sz sz). In the basis |00>,|01>,|10>,|11>
// (sigma_z|0> = +|0>):
//   sz sz  -> diag(1, -1, -1, 1)
//   sx sx  -> anti-diagonal ones
//   sy sy  -> -1 at (00,11) and (11,00), +1 at (01,10) and (10,01)
// so the (00,11) coupling is -2g - g = -3g and the (01,10) coupling is
// -2g + g = -g. With n along z instead, sx sx and sy sy enter with equal
// weight and the (00,11) element vanishes, so only n perpendicular to z
// produces the -3g(r) c4 term of the amplitude equations.
//
// The Zeeman part gives diagonal entries (m1, m2, -m2, -m1) with
//   m1 = -(mu_B/hbar) (B_1 + B_2),   m2 = -(mu_B/hbar) (B_1 - B_2),
//   B_1 = B_z(t) + B_g1,  B_2 = B_z(t) + B_g2,  B_z(t) = B_z + B_t cos(w t).
// The amplitude equations use m1 and m2 without defining them; these
// expressions follow from the Hamiltonian under the sign convention above.
// A global sign flip of (m1, m2) flips theta and leaves the concurrence
// unchanged.
//
// Result:
//   [ g+m1   0      0     -3g  ]
//   [ 0     -g+m2  -g      0   ]
//   [ 0     -g     -g-m2   0   ]
//   [ -3g    0      0     g-m1 ]

namespace fgate {

struct ZeemanDiagonals {
  double m1 = 0.0;  // rad/s
  double m2 = 0.0;  // rad/s
};

/// Row-major 4x4 matrix of H/hbar in rad/s.
struct HamiltonianMatrix {
  std::array<Complex, 16> entries{};

  Complex& operator()(int row, int col) { return entries[static_cast<std::size_t>(4 * row + col)]; }
  const Complex& operator()(int row, int col) const {
    return entries[static_cast<std::size_t>(4 * row + col)];
  }
};

/// Scalars of the model precomputed from a parameter set. All entries of
/// the Hamiltonian are real, so only these five numbers are needed.
struct ModelCoefficients {
  double g = 0.0;            // dipolar coupling, rad/s
  double m2 = 0.0;           // gradient-only Zeeman difference, rad/s
  double bias_T = 0.0;       // 2 B_z + B_g1 + B_g2
  double drive_T = 0.0;      // 2 B_t
  double omega = 0.0;        // rad/s
  double field_to_rate = 0.0;  // mu_B / hbar

  static ModelCoefficients from(const PhysicalParams& p);

  double m1_at(double t) const;
};

ZeemanDiagonals zeeman_diagonals(const PhysicalParams& p, double t);

HamiltonianMatrix build_hamiltonian(const PhysicalParams& p, double t);
HamiltonianMatrix build_hamiltonian(double g, ZeemanDiagonals z);

/// -i H s
TwoSpinState::Amplitudes schrodinger_rhs(const HamiltonianMatrix& h, const TwoSpinState::Amplitudes& s);

}  // namespace fgate
