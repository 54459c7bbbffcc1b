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

#include "fgate/state.hpp"

namespace fgate {

/// Below this modulus an amplitude's argument is treated as undefined.
inline constexpr double kAmplitudeFloor = 1e-8;

/// Continuous argument of each amplitude along a sampled trajectory.
///
/// Each update folds the change of Arg(c_i) into (-pi, pi] and adds it to the
/// running phase. An amplitude under the floor holds its phase and marks the
/// update as flagged.
class PhaseTracker {
 public:
  explicit PhaseTracker(const TwoSpinState& initial, double floor = kAmplitudeFloor);

  struct Update {
    double max_increment = 0.0;  // largest |folded increment| this update
    bool below_floor = false;
  };

  Update update(const TwoSpinState& s);

  const std::array<double, 4>& phases() const { return phase_; }
  bool initially_below_floor() const { return initial_flag_; }

  /// Arg c1 - Arg c2 - Arg c3 + Arg c4 on the unwrapped tracks.
  double theta() const { return combine(phase_); }
  static double combine(const std::array<double, 4>& phi) { return (phi[0] - phi[1]) - (phi[2] - phi[3]); }

 private:
  double floor_;
  std::array<double, 4> last_arg_{};
  std::array<double, 4> phase_{};
  std::array<bool, 4> seen_{};
  bool initial_flag_ = false;
};

/// Wraps an angle difference into (-pi, pi].
double fold_angle(double d);

}  // namespace fgate
