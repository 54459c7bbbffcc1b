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
#include <string>
#include <utility>
#include <vector>

#include "fgate/cli/run_config.hpp"
#include "fgate/gate_explorer.hpp"
#include "fgate/propagator.hpp"

namespace fgate::cli {

/// One row of a trajectory file.
struct TrajectoryRow {
  double t_ns = 0.0;
  TwoSpinState state;
  double norm = 0.0;
  double theta_rad = 0.0;
  double concurrence = 0.0;
};

inline constexpr const char* kTrajectoryColumns[] = {"t_ns",  "c1_re", "c1_im", "c2_re",    "c2_im",      "c3_re",
                                                     "c3_im", "c4_re", "c4_im", "norm", "theta_rad", "concurrence"};

/// Writes t_ns, the eight amplitude components, norm, theta_rad and
/// concurrence per sample. Numbers use the shortest round-trip form, so
/// identical trajectories give identical bytes.
void write_trajectory(std::ostream& os, const Trajectory& traj, OutputFormat format);

/// Reads a CSV written by write_trajectory. Throws std::runtime_error on a
/// malformed header or row.
std::vector<TrajectoryRow> read_trajectory_csv(std::istream& is);

void write_sweep(std::ostream& os, const std::vector<SweepRecord>& records, OutputFormat format);

/// Two-column CSV (figure data).
void write_series_csv(std::ostream& os, const std::string& x_name, const std::string& y_name,
                      const std::vector<std::pair<double, double>>& rows);

}  // namespace fgate::cli
