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

#include "fgate/propagator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fgate/quantities.hpp"
#include "test_util.hpp"

namespace fgate {
namespace {

using testing::free_params;
using testing::pi_gate_params;
using testing::static_params;

Complex inner(const TwoSpinState& a, const TwoSpinState& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double max_error_static(double dt, double t_end) {
  const auto p = static_params();
  const auto traj = propagate_rk4(TwoSpinState::plus_plus(), p, t_end, dt);
  double worst = 0.0;
  for (const auto& s : traj.samples) {
    worst = std::max(worst, distance(s.state, static_analytic(TwoSpinState::plus_plus(), p, s.t)));
  }
  return worst;
}

TEST(Propagator, ZeroDurationReturnsInitialOnly) {
  const auto traj = propagate_rk4(TwoSpinState::basis(2), static_params(), 0.0, 1e-14);
  ASSERT_EQ(traj.samples.size(), 1u);
  EXPECT_EQ(traj.samples[0].t, 0.0);
  EXPECT_EQ(traj.samples[0].state, TwoSpinState::basis(2));
  EXPECT_EQ(traj.max_norm_drift, 0.0);
}

TEST(Propagator, RejectsNonPositiveStep) {
  EXPECT_THROW(propagate_rk4(TwoSpinState::plus_plus(), static_params(), 1e-9, 0.0), std::invalid_argument);
}

TEST(Propagator, ShortenedLastStepLandsOnEnd) {
  auto p = static_params();
  const double t_end = 0.10005e-9;  // not a multiple of dt
  const auto traj = propagate_rk4(TwoSpinState::plus_plus(), p, t_end, p.dt_s());
  EXPECT_EQ(traj.back().t, t_end);
  EXPECT_LT(distance(traj.back().state, static_analytic(TwoSpinState::plus_plus(), p, t_end)), 1e-12);
}

TEST(Propagator, SamplesFollowStride) {
  auto p = static_params();
  p.t_end_ns = 0.05;
  const auto traj = propagate_rk4(TwoSpinState::plus_plus(), p);
  ASSERT_EQ(traj.samples.size(), 51u);
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    EXPECT_NEAR(traj.samples[i].t, static_cast<double>(i) * 1e-12, 1e-24);
  }
}

TEST(Propagator, FreePlusPlusMatchesClosedForm) {
  const auto p = free_params();
  const double g = dipole_coupling_angular(p.r_m());
  const auto traj = propagate_rk4(TwoSpinState::plus_plus(), p);
  double worst = 0.0;
  for (const auto& s : traj.samples) worst = std::max(worst, distance(s.state, testing::free_from_plus_plus(g, s.t)));
  EXPECT_LT(worst, 1e-9);
}

TEST(Propagator, FreeBasis00MatchesClosedForm) {
  auto p = free_params();
  p.t_end_ns = 5.0;
  const double g = dipole_coupling_angular(p.r_m());
  const auto traj = propagate_rk4(TwoSpinState::basis(0), p);
  double worst = 0.0;
  for (const auto& s : traj.samples) worst = std::max(worst, distance(s.state, testing::free_from_00(g, s.t)));
  EXPECT_LT(worst, 1e-8);

  const auto exact = propagate_exponential_oracle(TwoSpinState::basis(0), p, p.t_end_s(), 1);
  EXPECT_LT(distance(exact.back().state, testing::free_from_00(g, p.t_end_s())), 1e-12);
}

TEST(Propagator, StaticOracleAgreesWithAnalytic) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    auto p = testing::random_params(rng);
    p.Bt_T = 0.0;
    const auto psi = testing::random_state(rng);
    const double t = 3e-9;
    const auto oracle = propagate_exponential_oracle(psi, p, t, 1);
    EXPECT_LT(distance(oracle.back().state, static_analytic(psi, p, t)), 1e-12);
  }
}

TEST(Propagator, StaticAnalyticRequiresStaticField) {
  EXPECT_THROW(static_analytic(TwoSpinState::plus_plus(), pi_gate_params(), 1e-9), std::invalid_argument);
}

TEST(Propagator, OracleSamplesCoverInterval) {
  const auto p = static_params();
  const auto traj = propagate_exponential_oracle(TwoSpinState::plus_plus(), p, 1e-10, 100);
  EXPECT_EQ(traj.samples.front().t, 0.0);
  EXPECT_NEAR(traj.back().t, 1e-10, 1e-24);
  EXPECT_EQ(traj.samples.size(), 101u);
}

TEST(Propagator, MidpointOracleIsSecondOrder) {
  auto p = pi_gate_params();
  const double t = 0.5e-9;
  const auto psi = TwoSpinState::plus_plus();
  const auto a = propagate_exponential_oracle(psi, p, t, 500).back().state;
  const auto b = propagate_exponential_oracle(psi, p, t, 1000).back().state;
  const auto c = propagate_exponential_oracle(psi, p, t, 2000).back().state;
  const double ratio = distance(a, b) / distance(b, c);
  EXPECT_NEAR(ratio, 4.0, 0.3);
}

TEST(Propagator, ConvergedOracleIsExactForStaticField) {
  const auto p = static_params();
  const auto conv = exponential_oracle_converged(TwoSpinState::plus_plus(), p, 2e-9, 1e-12);
  EXPECT_EQ(conv.n_slices, 1u);
  EXPECT_LT(distance(conv.state, static_analytic(TwoSpinState::plus_plus(), p, 2e-9)), 1e-12);
}

TEST(Propagator, Rk4AgreesWithConvergedOracleUnderDrive) {
  auto p = pi_gate_params();
  const double t = 1e-9;
  const auto conv = exponential_oracle_converged(TwoSpinState::plus_plus(), p, t, 1e-10);
  EXPECT_LT(conv.error_estimate, 1e-10);
  const auto traj = propagate_rk4(TwoSpinState::plus_plus(), p, t, p.dt_s());
  EXPECT_LT(distance(traj.back().state, conv.state), 1e-8);
}

TEST(Propagator, Rk4IsFourthOrder) {
  const double t_end = 20e-9;
  const double e20 = max_error_static(20e-12, t_end);
  const double e10 = max_error_static(10e-12, t_end);
  const double e5 = max_error_static(5e-12, t_end);
  EXPECT_NEAR(std::log2(e20 / e10), 4.0, 0.3);
  EXPECT_NEAR(std::log2(e10 / e5), 4.0, 0.3);
}

TEST(Propagator, EvolutionIsLinear) {
  std::mt19937_64 rng(32);
  const auto p = testing::random_params(rng);
  const auto c = ModelCoefficients::from(p);
  const auto x = testing::random_state(rng);
  const auto y = testing::random_state(rng);
  const Complex a{0.3, -0.7}, b{-1.1, 0.4};
  TwoSpinState::Amplitudes mix;
  for (std::size_t i = 0; i < 4; ++i) mix[i] = a * x[i] + b * y[i];
  const double t1 = 0.3e-9;
  const auto ux = advance_rk4(x, c, 0.0, t1, p.dt_s());
  const auto uy = advance_rk4(y, c, 0.0, t1, p.dt_s());
  const auto um = advance_rk4(TwoSpinState::unchecked(mix), c, 0.0, t1, p.dt_s());
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LT(std::abs(um[i] - (a * ux[i] + b * uy[i])), 1e-12);
}

TEST(Propagator, AdvanceComposes) {
  const auto p = pi_gate_params();
  const auto c = ModelCoefficients::from(p);
  const auto psi = TwoSpinState::plus_plus();
  const auto whole = advance_rk4(psi, c, 0.0, 0.4e-9, p.dt_s());
  const auto half = advance_rk4(advance_rk4(psi, c, 0.0, 0.2e-9, p.dt_s()), c, 0.2e-9, 0.4e-9, p.dt_s());
  EXPECT_LT(distance(whole, half), 1e-12);
}

TEST(Propagator, PreservesInnerProducts) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 10; ++i) {
    const auto p = testing::random_params(rng);
    const auto c = ModelCoefficients::from(p);
    const auto x = testing::random_state(rng);
    const auto y = testing::random_state(rng);
    const auto ux = advance_rk4(x, c, 0.0, 1e-9, p.dt_s());
    const auto uy = advance_rk4(y, c, 0.0, 1e-9, p.dt_s());
    EXPECT_LT(std::abs(inner(ux, uy) - inner(x, y)), 1e-10);
  }
}

// The Hamiltonian never couples {|00>,|11>} to {|01>,|10>}.
TEST(Propagator, ConservesBlockProbabilities) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 10; ++i) {
    auto p = testing::random_params(rng);
    p.t_end_ns = 2.0;
    const auto psi = testing::random_state(rng);
    const double outer0 = std::norm(psi[0]) + std::norm(psi[3]);
    const auto traj = propagate_rk4(psi, p);
    for (const auto& s : traj.samples) {
      ASSERT_NEAR(std::norm(s.state[0]) + std::norm(s.state[3]), outer0, 1e-10);
    }
  }
}

TEST(Propagator, NormDriftStaysSmall) {
  const auto traj = propagate_rk4(TwoSpinState::plus_plus(), pi_gate_params());
  EXPECT_LT(traj.max_norm_drift, 1e-9);
}

TEST(Propagator, CoarseStepReportsDivergence) {
  const auto p = pi_gate_params();
  EXPECT_THROW(propagate_rk4(TwoSpinState::plus_plus(), p, 20e-9, 5e-12), IntegrationDiverged);
}

TEST(Propagator, TightToleranceReportsDivergenceWithTime) {
  auto p = pi_gate_params();
  p.norm_tolerance = 1e-18;
  try {
    propagate_rk4(TwoSpinState::plus_plus(), p);
    FAIL() << "expected divergence";
  } catch (const IntegrationDiverged& e) {
    EXPECT_GT(e.time(), 0.0);
    EXPECT_LE(e.time(), p.t_end_s());
  }
}

}  // namespace
}  // namespace fgate
