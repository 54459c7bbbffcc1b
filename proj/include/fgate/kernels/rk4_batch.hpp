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

#include <cstddef>
#include <string_view>

// Fixed-step RK4 for the two-spin amplitude equations, advancing several
// independent trajectories ("lanes") at once in structure-of-arrays layout.
//
// Every variant performs the same IEEE operations in the same order per
// lane (no fused multiply-add), so results are bit-identical whichever
// variant runs. Unused lanes are harmless with dt = 0.

namespace fgate::kernels {

inline constexpr std::size_t kLanes = 4;

struct alignas(32) LaneStates {
  double re[4][kLanes] = {};
  double im[4][kLanes] = {};
};

/// Per-lane coefficients for one step from t to t + dt. m1 is sampled at
/// the start, midpoint and end of the step.
struct alignas(32) LaneStep {
  double g[kLanes] = {};
  double m2[kLanes] = {};
  double m1_start[kLanes] = {};
  double m1_mid[kLanes] = {};
  double m1_end[kLanes] = {};
  double dt[kLanes] = {};
};

using Rk4StepFn = void (*)(LaneStates&, const LaneStep&);

void rk4_step_scalar(LaneStates& s, const LaneStep& k);
#if defined(__x86_64__) || defined(_M_X64)
void rk4_step_avx2(LaneStates& s, const LaneStep& k);
#endif

enum class Isa { kScalar, kAvx2 };

std::string_view to_string(Isa isa);

/// True when the variant was compiled in and the CPU can run it.
bool isa_available(Isa isa);

/// Best available variant unless overridden by force_isa() or the
/// FGATE_KERNEL environment variable ("scalar" or "avx2").
Isa active_isa();
void force_isa(Isa isa);
void clear_forced_isa();

Rk4StepFn rk4_step(Isa isa);
inline Rk4StepFn rk4_step() { return rk4_step(active_isa()); }

}  // namespace fgate::kernels
