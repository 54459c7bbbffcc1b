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

#include <string>
#include <string_view>

#include "fgate/config_text.hpp"
#include "fgate/state.hpp"

namespace fgate {

/// CODATA 2018 values in SI units.
struct PhysicalConstants {
  double mu_B = 9.2740100783e-24;   // J/T
  double hbar = 1.054571817e-34;    // J s
  double mu_0 = 1.25663706212e-6;   // T m/A
  double gamma_1 = 2.0;
  double gamma_2 = 2.0;

  bool operator==(const PhysicalConstants&) const = default;
};

/// How a configured `omega_GHz` value maps to the drive angular frequency.
enum class OmegaConvention {
  kAngular,   // omega = value * 1e9 rad/s
  kOrdinary,  // omega = 2 pi value * 1e9 rad/s
};

std::string_view to_string(OmegaConvention c);
OmegaConvention omega_convention_from_string(std::string_view s);

enum class InitialStateKind { kPlusPlus, kBasis00, kCustom };

std::string_view to_string(InitialStateKind k);

/// Experiment inputs.
///
/// Values are held in the units the configuration file uses (the key suffix
/// names the unit) so that a serialized parameter set reloads bit-exactly.
/// The `*_s`, `r_m` and `omega_rad_per_s` accessors give SI values.
struct PhysicalParams {
  double r_nm = 1.14;
  double Bz_T = 5e-4;
  double Bg1_T = 3.73e-5;
  double Bg2_T = -3.73e-5;
  double Bt_T = 0.0;
  double omega_GHz = 0.0;
  OmegaConvention omega_convention = OmegaConvention::kAngular;
  double t_end_ns = 20.0;
  double dt_fs = 10.0;
  double stride_ps = 1.0;
  InitialStateKind initial_kind = InitialStateKind::kPlusPlus;
  // As configured; normalized by initial_state().
  TwoSpinState::Amplitudes custom_amplitudes{0.5, 0.5, 0.5, 0.5};
  double norm_tolerance = 1e-9;
  PhysicalConstants constants{};

  double r_m() const { return r_nm * 1e-9; }
  double omega_rad_per_s() const;
  double t_end_s() const { return t_end_ns * 1e-9; }
  double dt_s() const { return dt_fs * 1e-15; }
  double stride_s() const { return stride_ps * 1e-12; }
  /// Integrator steps per output sample.
  long stride_steps() const;

  TwoSpinState initial_state() const;

  /// Largest angular rate appearing in the equations of motion; the
  /// resolution guard bounds dt times this.
  double max_rate() const;

  bool operator==(const PhysicalParams&) const = default;
};

/// Upper bound on dt * max_rate().
inline constexpr double kResolutionGuard = 0.05;

/// Throws ConfigError naming the violated key.
void validate(const PhysicalParams& p);

/// mu_B * B / hbar in rad/s.
double field_to_angular(double tesla, const PhysicalConstants& c = {});

/// Dipolar coupling g(r)/hbar = gamma_1 gamma_2 mu_0 mu_B^2 / (4 pi r^3 hbar).
double dipole_coupling_angular(double r_m, const PhysicalConstants& c = {});

/// Consumes the physical keys of `doc` onto `base`. Does not validate and
/// does not complain about keys it does not own.
PhysicalParams apply_param_keys(KeyValueDocument& doc, PhysicalParams base);

/// Parses a complete configuration holding physical keys only. Missing keys
/// keep the defaults of PhysicalParams{}; unknown keys are rejected.
PhysicalParams load_params(std::string_view config_text);

/// Inverse of load_params.
std::string serialize_params(const PhysicalParams& p);

}  // namespace fgate
