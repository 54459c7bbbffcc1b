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

#include "fgate/hamiltonian.hpp"

#include <cmath>

namespace fgate {

ModelCoefficients ModelCoefficients::from(const PhysicalParams& p) {
  ModelCoefficients c;
  c.g = dipole_coupling_angular(p.r_m(), p.constants);
  c.field_to_rate = p.constants.mu_B / p.constants.hbar;
  c.m2 = -field_to_angular(p.Bg1_T - p.Bg2_T, p.constants);
  c.bias_T = 2.0 * p.Bz_T + p.Bg1_T + p.Bg2_T;
  c.drive_T = 2.0 * p.Bt_T;
  c.omega = p.omega_rad_per_s();
  return c;
}

double ModelCoefficients::m1_at(double t) const {
  const double field = drive_T == 0.0 ? bias_T : bias_T + drive_T * std::cos(omega * t);
  return -(field_to_rate * field);
}

ZeemanDiagonals zeeman_diagonals(const PhysicalParams& p, double t) {
  const auto c = ModelCoefficients::from(p);
  return {c.m1_at(t), c.m2};
}

HamiltonianMatrix build_hamiltonian(double g, ZeemanDiagonals z) {
  HamiltonianMatrix h;
  h(0, 0) = g + z.m1;
  h(1, 1) = -g + z.m2;
  h(2, 2) = -g - z.m2;
  h(3, 3) = g - z.m1;
  h(0, 3) = h(3, 0) = -3.0 * g;
  h(1, 2) = h(2, 1) = -g;
  return h;
}

HamiltonianMatrix build_hamiltonian(const PhysicalParams& p, double t) {
  const auto c = ModelCoefficients::from(p);
  return build_hamiltonian(c.g, {c.m1_at(t), c.m2});
}

TwoSpinState::Amplitudes schrodinger_rhs(const HamiltonianMatrix& h, const TwoSpinState::Amplitudes& s) {
  const Complex minus_i{0.0, -1.0};
  TwoSpinState::Amplitudes out{};
  for (int r = 0; r < 4; ++r) {
    Complex acc{};
    for (int c = 0; c < 4; ++c) acc += h(r, c) * s[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = minus_i * acc;
  }
  return out;
}

}  // namespace fgate
