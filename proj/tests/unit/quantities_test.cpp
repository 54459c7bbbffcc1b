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

#include "fgate/quantities.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"

namespace fgate {
namespace {

// Reference values computed at 30 digits from the CODATA 2018 constants.
constexpr double kRate1T = 87941000591.90184;      // mu_B * 1 T / hbar
constexpr double kG114 = 220193453.91809035;       // g(1.14 nm) / hbar

TEST(Quantities, ConstantsInCodataBand) {
  const PhysicalConstants c;
  EXPECT_GT(c.mu_B / c.hbar, 8.79e10);
  EXPECT_LT(c.mu_B / c.hbar, 8.80e10);
  EXPECT_EQ(c.gamma_1, 2.0);
  EXPECT_EQ(c.gamma_2, 2.0);
}

TEST(Quantities, FieldToAngular) {
  EXPECT_NEAR(field_to_angular(1.0), kRate1T, 1e-12 * kRate1T);
  EXPECT_EQ(field_to_angular(0.0), 0.0);
  EXPECT_NEAR(field_to_angular(5e-4), 4.3970500295950920e7, 1e-12 * 4.4e7);
  EXPECT_LT(field_to_angular(-0.3), 0.0);
  EXPECT_THROW(field_to_angular(std::nan("")), std::invalid_argument);
  EXPECT_THROW(field_to_angular(INFINITY), std::invalid_argument);
}

TEST(Quantities, FieldToAngularIsLinear) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng);
    EXPECT_NEAR(field_to_angular(a * b), a * field_to_angular(b), 4e-16 * std::abs(a * field_to_angular(b)));
  }
}

TEST(Quantities, DipoleCoupling) {
  EXPECT_NEAR(dipole_coupling_angular(1.14e-9), kG114, 1e-12 * kG114);
  EXPECT_DOUBLE_EQ(dipole_coupling_angular(1.14e-9) / dipole_coupling_angular(2.28e-9), 8.0);

  PhysicalConstants c;
  c.gamma_1 = 2.0023;
  c.gamma_2 = 1.5;
  EXPECT_NEAR(dipole_coupling_angular(1.14e-9, c), kG114 * 2.0023 * 1.5 / 4.0, 1e-12 * kG114);

  EXPECT_THROW(dipole_coupling_angular(0.0), std::invalid_argument);
  EXPECT_THROW(dipole_coupling_angular(-1e-9), std::invalid_argument);
}

TEST(Quantities, DipoleCouplingCubicLaw) {
  const double ref = dipole_coupling_angular(1e-9) * 1e-27;
  for (double r : {0.3e-9, 0.7e-9, 1.14e-9, 2.5e-9, 10e-9, 100e-9}) {
    EXPECT_NEAR(dipole_coupling_angular(r) * r * r * r, ref, 1e-12 * ref) << r;
    EXPECT_GT(dipole_coupling_angular(r), dipole_coupling_angular(r * 1.01));
  }
}

TEST(Quantities, LoadStaticScenario) {
  const auto p = load_params("Bz_T = 5e-4\nBg1_T = 3.73e-5\nBg2_T = -3.73e-5\nBt_T = 0\nr_nm = 1.14\n");
  EXPECT_EQ(p.Bz_T, 5e-4);
  EXPECT_EQ(p.Bg1_T, 3.73e-5);
  EXPECT_EQ(p.Bg2_T, -3.73e-5);
  EXPECT_EQ(p.Bt_T, 0.0);
  EXPECT_EQ(p.r_nm, 1.14);
  EXPECT_EQ(p.initial_kind, InitialStateKind::kPlusPlus);
  EXPECT_EQ(p.dt_fs, 10.0);
  EXPECT_EQ(p.stride_steps(), 100);
  EXPECT_DOUBLE_EQ(p.t_end_s(), 20e-9);
}

TEST(Quantities, LoadPiGateScenario) {
  const auto p = load_params(
      "Bz_T = 5e-4\nBg1_T = 3.73e-5\nBg2_T = -3.73e-5\nr_nm = 1.14\n"
      "Bt_T = 0.2\nomega_GHz = 15.5\nomega_is_angular = true\n");
  EXPECT_EQ(p.Bt_T, 0.2);
  EXPECT_EQ(p.omega_rad_per_s(), 1.55e10);

  const auto q = load_params("Bt_T = 0.2\nomega_GHz = 15.5\nomega_is_angular = false\n");
  EXPECT_EQ(q.omega_convention, OmegaConvention::kOrdinary);
  EXPECT_NEAR(q.omega_rad_per_s(), 2 * M_PI * 15.5e9, 1e-6);
}

TEST(Quantities, ResolutionGuardRejectsCoarseStep) {
  try {
    load_params("Bt_T = 0.2\nomega_GHz = 15.5\ndt_fs = 2000\nstride_ps = 2\n");
    FAIL() << "expected rejection";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), "dt_fs");
    EXPECT_NE(std::string(e.what()).find("resolution guard"), std::string::npos);
  }
  // Just inside the guard: 0.2 T drive gives 2 mu_B (B_z + B_t)/hbar ~ 3.53e10 rad/s.
  EXPECT_NO_THROW(load_params("Bt_T = 0.2\nomega_GHz = 15.5\ndt_fs = 1000\n"));
}

TEST(Quantities, RejectionsNameTheKey) {
  auto key_of = [](const char* text) {
    try {
      load_params(text);
    } catch (const ConfigError& e) {
      return e.key();
    }
    return std::string("<accepted>");
  };
  EXPECT_EQ(key_of("Bz_mT = 3\n"), "Bz_mT");
  EXPECT_EQ(key_of("r_nm = -1\n"), "r_nm");
  EXPECT_EQ(key_of("r_nm = 1.14 nm\n"), "r_nm");
  EXPECT_EQ(key_of("dt_fs = 0\n"), "dt_fs");
  EXPECT_EQ(key_of("t_end_ns = -1\n"), "t_end_ns");
  EXPECT_EQ(key_of("t_end_ns = 1e-7\ndt_fs = 10\n"), "dt_fs");
  EXPECT_EQ(key_of("stride_ps = 0.015\n"), "stride_ps");
  EXPECT_EQ(key_of("omega_is_angular = maybe\n"), "omega_is_angular");
  EXPECT_EQ(key_of("initial_state = bell\n"), "initial_state");
  EXPECT_EQ(key_of("c1_re = 1\n"), "initial_state");
  EXPECT_EQ(key_of("r_nm = 1\nr_nm = 2\n"), "r_nm");
  EXPECT_EQ(key_of("t_end_ns = 0\n"), "<accepted>");
}

TEST(Quantities, CustomInitialStateIsNormalized) {
  const auto p = load_params("initial_state = custom\nc1_re = 3\nc2_im = 4\nc3_re = 0\nc4_re = 0\n");
  const auto s = p.initial_state();
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
  EXPECT_NEAR(s[0].real(), 0.6, 1e-15);
  EXPECT_NEAR(s[1].imag(), 0.8, 1e-15);
  EXPECT_THROW(load_params("initial_state = custom\nc1_re = 0\nc2_re = 0\nc3_re = 0\nc4_re = 0\n"),
               ConfigError);
}

TEST(Quantities, SerializeRoundTripIsBitExact) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    PhysicalParams p = testing::random_params(rng);
    p.r_nm = 0.9 + u(rng);
    p.t_end_ns = 1.0 + 30.0 * u(rng);
    p.dt_fs = 10.0 * (0.5 + 0.5 * u(rng));
    p.stride_ps = p.dt_fs * 1e-3 * 100.0;
    p.omega_convention = i % 2 ? OmegaConvention::kAngular : OmegaConvention::kOrdinary;
    p.norm_tolerance = 1e-9 * (1 + u(rng));
    if (i % 3 == 0) {
      p.initial_kind = InitialStateKind::kCustom;
      p.custom_amplitudes = testing::random_state(rng).amplitudes();
    } else if (i % 3 == 1) {
      p.initial_kind = InitialStateKind::kBasis00;
    }
    const auto text = serialize_params(p);
    const auto q = load_params(text);
    EXPECT_EQ(p, q) << text;
    EXPECT_EQ(text, serialize_params(q));
  }
}

}  // namespace
}  // namespace fgate
