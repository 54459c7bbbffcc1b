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

#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgate/quantities.hpp"

namespace fgate {

/// Axes of a drive/geometry grid. Every axis must be non-empty; the omega
/// values are interpreted with the base parameter set's convention.
struct SweepGrid {
  std::vector<double> Bt_T;
  std::vector<double> omega_GHz;
  std::vector<double> r_nm;

  std::size_t size() const { return Bt_T.size() * omega_GHz.size() * r_nm.size(); }
};

struct SweepRecord {
  double Bt_T = 0.0;
  double omega_GHz = 0.0;
  double omega_rad_per_s = 0.0;
  double r_nm = 0.0;
  double dt_fs = 0.0;  // step actually used (may be tightened per point)
  std::optional<double> gate_time_s;
  std::optional<double> concurrence_at_gate;
  double max_norm_drift = 0.0;
  /// theta value closest to the target seen over the horizon.
  double closest_theta = 0.0;
  /// Non-empty when this point failed (invalid, diverged, under-sampled).
  std::string error;

  bool reached() const { return gate_time_s.has_value(); }
  bool operator==(const SweepRecord&) const = default;
};

struct SweepOptions {
  double target_phase = -std::numbers::pi;
  unsigned jobs = 1;  // 0 = hardware concurrency
};

/// Integrates every grid point of `base` with (B_t, omega, r) replaced, up to
/// base.t_end, stopping each trajectory at its first crossing of the target.
/// Records come back in lexicographic order (B_t, then omega, then r)
/// whatever the number of workers. Throws std::invalid_argument on an empty
/// grid.
std::vector<SweepRecord> sweep(const SweepGrid& grid, const PhysicalParams& base,
                               const SweepOptions& opt = {});

/// Single-point sweep.
SweepRecord evaluate_point(const PhysicalParams& p, double target_phase = -std::numbers::pi);

/// Fastest gate among records meeting the concurrence floor; ties go to the
/// smaller B_t, then the smaller omega. nullopt when nothing is feasible.
std::optional<SweepRecord> best_drive(const std::vector<SweepRecord>& records, double c_min);

struct DriveOptimum {
  std::vector<SweepRecord> records;
  std::optional<SweepRecord> best;  // nullopt = infeasible
};

/// Sweeps B_t x omega at base.r and selects with best_drive. c_min must lie
/// in [0, 1).
DriveOptimum optimize_drive(const std::vector<double>& Bt_T, const std::vector<double>& omega_GHz,
                            double c_min, const PhysicalParams& base, const SweepOptions& opt = {});

struct CalibrationOptions {
  double target_tau_s = 1.56e-9;
  double r_min_nm = 0.7;
  double r_max_nm = 3.0;
  int scan_points = 24;
  int bisection_steps = 40;
  std::vector<OmegaConvention> conventions{OmegaConvention::kAngular, OmegaConvention::kOrdinary};
  SweepOptions sweep{};
};

struct CalibrationCandidate {
  OmegaConvention convention = OmegaConvention::kAngular;
  double r_nm = 0.0;
  std::optional<double> tau_s;
  std::optional<double> concurrence;
  double closest_theta = 0.0;
};

struct CalibrationResult {
  bool ok = false;
  CalibrationCandidate best;
  /// Best candidate found under each convention, in option order.
  std::vector<CalibrationCandidate> per_convention;
  /// Log-spaced scan for each convention, in option order.
  std::vector<std::vector<SweepRecord>> scans;
};

/// Scans r (log-spaced) under each omega convention with the drive of
/// `base`, then bisects on r inside the first bracket of the target gate
/// time. Returns the (r, convention) whose gate time lies closest to the
/// target; ok = false when no scanned point reaches the target phase.
CalibrationResult calibrate_r(const PhysicalParams& base, const CalibrationOptions& opt = {});

/// Frozen result of a calibration run.
struct CalibrationDocument {
  double r_nm = 1.14;
  OmegaConvention omega_convention = OmegaConvention::kAngular;
  double achieved_tau_ns = 0.0;
  double target_tau_ns = 0.0;
  double concurrence_at_gate = 0.0;
  std::string tool_version;

  bool operator==(const CalibrationDocument&) const = default;
};

CalibrationDocument parse_calibration(std::string_view text);
std::string serialize_calibration(const CalibrationDocument& doc);
/// nullopt when the file does not exist.
std::optional<CalibrationDocument> read_calibration_file(const std::string& path);
void write_calibration_file(const std::string& path, const CalibrationDocument& doc);

}  // namespace fgate
