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
#include <string>
#include <string_view>

#include "fgate/gate_explorer.hpp"
#include "fgate/quantities.hpp"

namespace fgate::cli {

enum class Scenario {
  kStatic,  // static field plus gradients
  kPiGate,  // static scenario plus the microwave drive
  kFree,    // no applied field, dipolar coupling only
  kCustom,  // every field given explicitly
};

std::string_view to_string(Scenario s);
Scenario scenario_from_string(std::string_view s);

enum class OutputFormat { kCsv, kJson };

OutputFormat format_from_string(std::string_view s);

struct RunConfig {
  Scenario scenario = Scenario::kCustom;
  PhysicalParams params;
  std::string out_path;  // empty = stdout
  OutputFormat format = OutputFormat::kCsv;
};

inline constexpr double kPresetBz_T = 5e-4;
inline constexpr double kPresetBg1_T = 3.73e-5;
inline constexpr double kPresetBg2_T = -3.73e-5;
inline constexpr double kPresetBt_T = 0.2;
inline constexpr double kPresetOmega_GHz = 15.5;

/// Parameter set of a preset scenario. The inter-spin distance and the
/// omega convention come from the calibration when one is given.
PhysicalParams scenario_preset(Scenario s, const std::optional<CalibrationDocument>& calibration);

/// Reads a run configuration: `scenario` selects a preset whose field keys
/// are then pinned (setting them is an error); `custom` (the default)
/// requires r_nm, Bz_T, Bg1_T, Bg2_T, Bt_T and omega_GHz. Optional `out`
/// and `format` keys set the output.
RunConfig load_run_config(std::string_view text, const std::optional<CalibrationDocument>& calibration);

/// "pi", "-pi", "pi/2", "-pi/2", "pi/4", "-pi/4"
double parse_target_phase(std::string_view s);

/// Axes separated by ';', each `name=v1,v2,...` or `name=start:stop:count`
/// with name in {Bt_T, omega_GHz, r_nm}. Omitted axes take the base value.
SweepGrid parse_grid(std::string_view spec, const PhysicalParams& base);

}  // namespace fgate::cli
