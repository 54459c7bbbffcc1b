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

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fgate/hamiltonian.hpp"
#include "fgate/phase_tracking.hpp"
#include "fgate/propagator.hpp"
#include "fgate/state.hpp"

namespace fgate {

/// Output stride too coarse to unwrap the amplitude phases.
class SamplingTooCoarse : public std::runtime_error {
 public:
  SamplingTooCoarse(double t_s, double increment);
  double time() const { return time_; }

 private:
  double time_;
};

/// Largest admissible per-sample change of any Arg(c_i).
inline constexpr double kMaxPhaseIncrement = 1.5707963267948966;  // pi / 2

/// Pure-state concurrence 2 |c2 c3 - c1 c4| / |c|^2. Throws
/// std::invalid_argument for the zero vector.
double concurrence(const TwoSpinState& s);

struct PhasePoint {
  double t = 0.0;      // seconds
  double theta = 0.0;  // radians, unwrapped
  bool below_floor = false;
};

using PhaseSeries = std::vector<PhasePoint>;

/// theta(t) = Arg c1 - Arg c2 - Arg c3 + Arg c4, each argument unwrapped on
/// its own track. Throws SamplingTooCoarse if any track moves by pi/2 or
/// more between samples.
PhaseSeries phase_series(const Trajectory& traj);

std::vector<std::pair<double, double>> concurrence_series(const Trajectory& traj);

/// True when theta passes through `target` going from `before` to `after`.
bool crosses(double before, double after, double target);

/// First crossing of `target`, linearly interpolated between the bracketing
/// samples. nullopt when the series never reaches it.
std::optional<double> find_gate_time(const PhaseSeries& ps, double target);

struct GateTime {
  double tau = 0.0;  // seconds
  TwoSpinState state;
  double theta = 0.0;
  double concurrence = 0.0;
};

/// Default width of the final bisection bracket.
inline constexpr double kGateBracket = 1e-15;

/// Refines a crossing bracketed by the sample `before` and the time
/// `t_after` (where theta is `theta_after`) by linear interpolation and then
/// bisection, re-integrating from `before` with RK4 at step `dt` until the
/// bracket is narrower than `bracket`.
GateTime refine_gate_crossing(const ModelCoefficients& coeffs, double dt, const TrajectorySample& before,
                              double t_after, double theta_after, double target,
                              double bracket = kGateBracket);

/// First crossing of `target` in a trajectory, refined by re-integration.
std::optional<GateTime> find_gate_time(const Trajectory& traj, const PhaseSeries& ps,
                                       const PhysicalParams& p, double target,
                                       double bracket = kGateBracket);

/// Online crossing detector for a trajectory that is still being integrated.
class GateWatcher {
 public:
  GateWatcher(const TwoSpinState& initial, double target);

  /// Feeds the next sample; returns true once the target has been crossed.
  bool observe(double t, const TwoSpinState& s);

  bool crossed() const { return crossed_; }
  const TrajectorySample& before() const { return before_; }
  double t_after() const { return t_after_; }
  double theta_after() const { return theta_after_; }
  double max_norm_drift() const { return max_drift_; }
  /// theta value nearest the target among the samples seen so far.
  double closest_theta() const { return closest_theta_; }

 private:
  double target_;
  double norm0_;
  PhaseTracker tracker_;
  TrajectorySample before_;
  double t_after_ = 0.0;
  double theta_after_ = 0.0;
  double max_drift_ = 0.0;
  double closest_theta_ = 0.0;
  bool crossed_ = false;
};

}  // namespace fgate
