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

#include "fgate/phase_tracking.hpp"

#include <cmath>
#include <numbers>

namespace fgate {

double fold_angle(double d) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  d = std::remainder(d, two_pi);  // [-pi, pi]
  if (d <= -std::numbers::pi) d += two_pi;
  return d;
}

PhaseTracker::PhaseTracker(const TwoSpinState& initial, double floor) : floor_(floor) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(initial[i]) < floor_) {
      initial_flag_ = true;
      continue;
    }
    seen_[i] = true;
    last_arg_[i] = std::arg(initial[i]);
    phase_[i] = last_arg_[i];
  }
}

PhaseTracker::Update PhaseTracker::update(const TwoSpinState& s) {
  Update u;
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(s[i]) < floor_) {
      u.below_floor = true;
      continue;
    }
    const double a = std::arg(s[i]);
    if (!seen_[i]) {
      // first defined argument after starting under the floor
      seen_[i] = true;
      last_arg_[i] = a;
      phase_[i] = a;
      continue;
    }
    const double inc = fold_angle(a - last_arg_[i]);
    phase_[i] += inc;
    last_arg_[i] = a;
    u.max_increment = std::max(u.max_increment, std::abs(inc));
  }
  return u;
}

}  // namespace fgate
