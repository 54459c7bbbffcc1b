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

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace fgate {
namespace {

constexpr double kG114 = 220193453.91809035;
constexpr double kM1Static = -87941000.59190184;   // -mu_B (2 B_z) / hbar
constexpr double kM2Static = -6560398.644155877;   // -mu_B (B_g1 - B_g2) / hbar
constexpr double kM1PiGate0 = -35264341237.35264;  // -mu_B 2 (B_z + B_t) / hbar

// Amplitude equations typed in term by term, independent of the matrix.
TwoSpinState::Amplitudes hand_rhs(double g, double m1, double m2, const TwoSpinState::Amplitudes& c) {
  const Complex i{0.0, 1.0};
  return {-i * ((g + m1) * c[0] - 3.0 * g * c[3]), -i * ((-g + m2) * c[1] - g * c[2]),
          -i * (-g * c[1] + (-g - m2) * c[2]), -i * (-3.0 * g * c[0] + (g - m1) * c[3])};
}

TEST(Hamiltonian, ZeemanStatic) {
  const auto z = zeeman_diagonals(testing::static_params(), 0.0);
  EXPECT_NEAR(z.m1, kM1Static, 1e-12 * std::abs(kM1Static));
  EXPECT_NEAR(z.m2, kM2Static, 1e-12 * std::abs(kM2Static));
  const auto later = zeeman_diagonals(testing::static_params(), 7.3e-9);
  EXPECT_EQ(later.m1, z.m1);
}

TEST(Hamiltonian, ZeemanFieldFree) {
  const auto z = zeeman_diagonals(testing::free_params(), 1e-9);
  EXPECT_EQ(z.m1, 0.0);
  EXPECT_EQ(z.m2, 0.0);
}

TEST(Hamiltonian, ZeemanDriven) {
  const auto p = testing::pi_gate_params();
  const auto z0 = zeeman_diagonals(p, 0.0);
  EXPECT_NEAR(z0.m1, kM1PiGate0, 1e-12 * std::abs(kM1PiGate0));
  EXPECT_NEAR(z0.m2, kM2Static, 1e-12 * std::abs(kM2Static));
  // Quarter drive period: cos = 0 leaves the static bias.
  const double quarter = M_PI / 2 / p.omega_rad_per_s();
  EXPECT_NEAR(zeeman_diagonals(p, quarter).m1, kM1Static, 1e-6 * std::abs(kM1PiGate0));
  EXPECT_EQ(zeeman_diagonals(p, quarter).m2, z0.m2);
}

TEST(Hamiltonian, FieldFreeMatrix) {
  const auto h = build_hamiltonian(testing::free_params(), 0.0);
  const double g = kG114;
  const double expected[4][4] = {{g, 0, 0, -3 * g}, {0, -g, -g, 0}, {0, -g, -g, 0}, {-3 * g, 0, 0, g}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      EXPECT_NEAR(h(r, c).real(), expected[r][c], 1e-12 * g) << r << c;
      EXPECT_EQ(h(r, c).imag(), 0.0);
    }
}

TEST(Hamiltonian, StaticDiagonal) {
  const auto h = build_hamiltonian(testing::static_params(), 0.0);
  const double g = kG114;
  EXPECT_NEAR(h(0, 0).real(), g + kM1Static, 1e-12 * g);
  EXPECT_NEAR(h(1, 1).real(), -g + kM2Static, 1e-12 * g);
  EXPECT_NEAR(h(2, 2).real(), -g - kM2Static, 1e-12 * g);
  EXPECT_NEAR(h(3, 3).real(), g - kM1Static, 1e-12 * g);
}

TEST(Hamiltonian, StructuralInvariants) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> t(0.0, 20e-9);
  for (int i = 0; i < 100; ++i) {
    const auto p = testing::random_params(rng);
    const auto h = build_hamiltonian(p, t(rng));
    Complex trace{};
    for (int r = 0; r < 4; ++r) {
      trace += h(r, r);
      for (int c = 0; c < 4; ++c) {
        EXPECT_EQ(h(r, c), std::conj(h(c, r)));
      }
    }
    EXPECT_NEAR(std::abs(trace), 0.0, 1e-12 * std::abs(h(0, 0)) + 1e-3);
    for (auto [r, c] : {std::pair{0, 1}, {0, 2}, {1, 3}, {2, 3}}) {
      EXPECT_EQ(h(r, c), Complex{}) << r << c;
      EXPECT_EQ(h(c, r), Complex{}) << r << c;
    }
  }
}

TEST(Hamiltonian, ExpectationIsReal) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto h = build_hamiltonian(testing::random_params(rng), 1e-9 * i);
    const auto s = testing::random_state(rng);
    Complex e{};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) e += std::conj(s[r]) * h(r, c) * s[c];
    EXPECT_LE(std::abs(e.imag()), 1e-12 * std::abs(e.real()) + 1e-3);
  }
}

TEST(Hamiltonian, RhsMatchesAmplitudeEquations) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> t(0.0, 20e-9);
  for (int i = 0; i < 100; ++i) {
    const auto p = testing::random_params(rng);
    const double when = t(rng);
    const auto z = zeeman_diagonals(p, when);
    const double g = dipole_coupling_angular(p.r_m());
    const auto s = testing::random_state(rng).amplitudes();
    const auto got = schrodinger_rhs(build_hamiltonian(p, when), s);
    const auto want = hand_rhs(g, z.m1, z.m2, s);
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_NEAR(std::abs(got[k] - want[k]), 0.0, 1e-12 * (std::abs(z.m1) + 4 * g)) << i << k;
    }
  }
}

TEST(Hamiltonian, RhsColumns) {
  const double g = kG114;
  const auto free = build_hamiltonian(testing::free_params(), 0.0);
  const auto d00 = schrodinger_rhs(free, TwoSpinState::basis(0).amplitudes());
  EXPECT_NEAR(std::abs(d00[0] - Complex{0, -g}), 0.0, 1e-12 * g);
  EXPECT_NEAR(std::abs(d00[3] - Complex{0, 3 * g}), 0.0, 1e-12 * g);
  EXPECT_EQ(d00[1], Complex{});
  EXPECT_EQ(d00[2], Complex{});

  const auto st = build_hamiltonian(testing::static_params(), 0.0);
  const auto d01 = schrodinger_rhs(st, TwoSpinState::basis(1).amplitudes());
  EXPECT_NEAR(std::abs(d01[1] - Complex{0, -(-g + kM2Static)}), 0.0, 1e-12 * g);
  EXPECT_NEAR(std::abs(d01[2] - Complex{0, g}), 0.0, 1e-12 * g);
  EXPECT_EQ(d01[0], Complex{});
  EXPECT_EQ(d01[3], Complex{});

  const auto zero = schrodinger_rhs(st, TwoSpinState::Amplitudes{});
  for (const auto& c : zero) EXPECT_EQ(c, Complex{});
}

}  // namespace
}  // namespace fgate
