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

#include <iosfwd>
#include <optional>
#include <string>

#include "fgate/cli/run_config.hpp"
#include "fgate/gate_explorer.hpp"
#include "fgate/observables.hpp"

namespace fgate::cli {

/// Process exit codes of the fgate tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,           // unexpected error, or a sweep point failed
  kExitConfigError = 2,       // rejected configuration or arguments
  kExitDiverged = 3,          // norm left its tolerance band
  kExitNotReached = 4,        // target phase not reached within the horizon
  kExitCalibrationFailed = 5, // no scanned radius reached the target phase
};

std::string tool_version();

/// Calibration document used when none is named explicitly.
std::string default_calibration_path();

struct GateReport {
  Scenario scenario = Scenario::kCustom;
  double target_phase = 0.0;
  std::optional<GateTime> gate;
  double max_norm_drift = 0.0;
  PhysicalParams params;
};

GateReport run_gate_time(const RunConfig& cfg, double target_phase);
void write_gate_report(std::ostream& os, const GateReport& report, OutputFormat format);

/// Each command writes its product to cfg.out_path (stdout when empty) and
/// diagnostics to `diag`, and returns an ExitCode.
int cmd_simulate(const RunConfig& cfg, std::ostream& diag);
int cmd_gate_time(const RunConfig& cfg, double target_phase, std::ostream& diag);
int cmd_sweep(const RunConfig& cfg, const SweepGrid& grid, const SweepOptions& opt, std::ostream& diag);
/// Writes the calibration document to `document_path` on success; the scan
/// report goes to cfg.out_path.
int cmd_calibrate(const RunConfig& cfg, const CalibrationOptions& opt, const std::string& document_path,
                  std::ostream& diag);
/// Writes fig1_theta_static.csv, fig2_conc_static.csv, fig3_theta_gate.csv
/// and fig4_conc_gate.csv into `out_dir`.
int cmd_figures(const std::optional<CalibrationDocument>& calibration, const std::string& out_dir,
                std::ostream& diag);

}  // namespace fgate::cli
