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
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fgate/hamiltonian.hpp"
#include "fgate/quantities.hpp"
#include "fgate/state.hpp"

namespace fgate {

/// The norm left its tolerance band; the trajectory is not trustworthy.
class IntegrationDiverged : public std::runtime_error {
 public:
  IntegrationDiverged(double t_s, double norm);
  double time() const { return time_; }
  double norm() const { return norm_; }

 private:
  double time_;
  double norm_;
};

struct TrajectorySample {
  double t = 0.0;  // seconds
  TwoSpinState state;
  double norm = 1.0;
  std::array<double, 4> phase{};  // unwrapped Arg c1..c4
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  double max_norm_drift = 0.0;

  const TrajectorySample& back() const { return samples.back(); }
};

/// Classical RK4 at fixed step over [0, p.t_end], sampled every
/// p.stride_steps() steps and at t_end exactly (the last step is shortened
/// when t_end is not a multiple of dt). The norm is never re-imposed; a
/// sample outside p.norm_tolerance throws IntegrationDiverged.
Trajectory propagate_rk4(const TwoSpinState& initial, const PhysicalParams& p);
Trajectory propagate_rk4(const TwoSpinState& initial, const PhysicalParams& p, double t_end_s,
                         double dt_s);

/// Advances `from` at time t0 to t1 with RK4 steps of dt, shortening the
/// last one. No sampling, no norm check.
TwoSpinState advance_rk4(const TwoSpinState& from, const ModelCoefficients& c, double t0, double t1,
                         double dt);

/// One independent trajectory in a batched RK4 run.
struct LaneJob {
  ModelCoefficients coeffs;
  TwoSpinState initial;
  double t0 = 0.0;
  double t_end = 0.0;
  double dt = 0.0;
  long stride_steps = 1;
};

/// Called with (lane, t, state) at t0 and at every sample; returning false
/// retires the lane.
using LaneObserver = std::function<bool(std::size_t, double, const TwoSpinState&)>;

/// Runs up to kernels::kLanes jobs through the dispatched SIMD kernel.
void integrate_lanes(std::span<const LaneJob> jobs, const LaneObserver& observe);

/// Piecewise-constant propagator: each slice applies the exact exponential
/// of H evaluated at the slice midpoint, via a Hermitian eigendecomposition.
/// Second order in the slice width for a driven Hamiltonian, exact for a
/// static one. Samples every `sample_every` slices plus the final time.
Trajectory propagate_exponential_oracle(const TwoSpinState& initial, const PhysicalParams& p,
                                        double t_end_s, std::size_t n_slices,
                                        std::size_t sample_every = 0);

struct ConvergedState {
  TwoSpinState state;
  std::size_t n_slices = 0;
  double error_estimate = 0.0;
};

/// Final state of the exponential oracle, Richardson-extrapolated from
/// n and 2n slices and doubled until successive extrapolations agree to
/// `tol` (state distance).
ConvergedState exponential_oracle_converged(const TwoSpinState& initial, const PhysicalParams& p,
                                            double t_end_s, double tol,
                                            std::size_t start_slices = 1000,
                                            std::size_t max_slices = std::size_t{1} << 23);

/// Closed-form evolution for a static field (B_t = 0): each 2x2 block
/// a I + b . sigma is exponentiated with the axis-angle formula.
/// Throws std::invalid_argument when the drive is on.
TwoSpinState static_analytic(const TwoSpinState& initial, const PhysicalParams& p, double t_s);

}  // namespace fgate
