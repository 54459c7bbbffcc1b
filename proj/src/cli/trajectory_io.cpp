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

#include "fgate/cli/trajectory_io.hpp"

#include <json.hpp>
#include <istream>
#include <ostream>
#include <sstream>

#include "fgate/observables.hpp"

namespace fgate::cli {
namespace {

std::vector<double> row_values(const TrajectorySample& s, double theta) {
  std::vector<double> v{s.t * 1e9};
  for (std::size_t i = 0; i < 4; ++i) {
    v.push_back(s.state[i].real());
    v.push_back(s.state[i].imag());
  }
  v.push_back(s.norm);
  v.push_back(theta);
  v.push_back(concurrence(s.state));
  return v;
}

std::string status_of(const SweepRecord& r) {
  if (!r.error.empty()) return "error: " + r.error;
  return r.reached() ? "reached" : "not_reached";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_trajectory(std::ostream& os, const Trajectory& traj, OutputFormat format) {
  const auto ps = phase_series(traj);
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["columns"] = kTrajectoryColumns;
    auto& rows = j["rows"] = nlohmann::json::array();
    for (std::size_t k = 0; k < traj.samples.size(); ++k) rows.push_back(row_values(traj.samples[k], ps[k].theta));
    j["max_norm_drift"] = traj.max_norm_drift;
    os << j.dump() << "\n";
    return;
  }
  for (std::size_t c = 0; c < std::size(kTrajectoryColumns); ++c) os << (c ? "," : "") << kTrajectoryColumns[c];
  os << "\n";
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    const auto v = row_values(traj.samples[k], ps[k].theta);
    for (std::size_t c = 0; c < v.size(); ++c) os << (c ? "," : "") << format_double(v[c]);
    os << "\n";
  }
}

std::vector<TrajectoryRow> read_trajectory_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("trajectory file is empty");
  std::string expected;
  for (std::size_t c = 0; c < std::size(kTrajectoryColumns); ++c) expected += (c ? "," : "") + std::string(kTrajectoryColumns[c]);
  if (line != expected) throw std::runtime_error("unexpected trajectory header: " + line);

  std::vector<TrajectoryRow> rows;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> v;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      auto d = parse_double(cell);
      if (!d) throw std::runtime_error("line " + std::to_string(line_no) + ": bad number '" + cell + "'");
      v.push_back(*d);
    }
    if (v.size() != std::size(kTrajectoryColumns)) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 12 columns");
    }
    TrajectoryRow r;
    r.t_ns = v[0];
    r.state = TwoSpinState::unchecked({Complex{v[1], v[2]}, {v[3], v[4]}, {v[5], v[6]}, {v[7], v[8]}});
    r.norm = v[9];
    r.theta_rad = v[10];
    r.concurrence = v[11];
    rows.push_back(r);
  }
  return rows;
}

void write_sweep(std::ostream& os, const std::vector<SweepRecord>& records, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      nlohmann::ordered_json j;
      j["Bt_T"] = r.Bt_T;
      j["omega_GHz"] = r.omega_GHz;
      j["omega_rad_per_s"] = r.omega_rad_per_s;
      j["r_nm"] = r.r_nm;
      j["dt_fs"] = r.dt_fs;
      j["gate_time_ns"] = r.gate_time_s ? nlohmann::ordered_json(*r.gate_time_s * 1e9) : nullptr;
      j["concurrence_at_gate"] = r.concurrence_at_gate ? nlohmann::ordered_json(*r.concurrence_at_gate) : nullptr;
      j["max_norm_drift"] = r.max_norm_drift;
      j["closest_theta_rad"] = r.closest_theta;
      j["status"] = status_of(r);
      arr.push_back(std::move(j));
    }
    os << arr.dump(1) << "\n";
    return;
  }
  os << "Bt_T,omega_GHz,omega_rad_per_s,r_nm,dt_fs,gate_time_ns,concurrence_at_gate,max_norm_drift,"
        "closest_theta_rad,status\n";
  for (const auto& r : records) {
    os << format_double(r.Bt_T) << ',' << format_double(r.omega_GHz) << ',' << format_double(r.omega_rad_per_s)
       << ',' << format_double(r.r_nm) << ',' << format_double(r.dt_fs) << ','
       << (r.gate_time_s ? format_double(*r.gate_time_s * 1e9) : "") << ','
       << (r.concurrence_at_gate ? format_double(*r.concurrence_at_gate) : "") << ','
       << format_double(r.max_norm_drift) << ',' << format_double(r.closest_theta) << ','
       << csv_escape(status_of(r)) << "\n";
  }
}

void write_series_csv(std::ostream& os, const std::string& x_name, const std::string& y_name,
                      const std::vector<std::pair<double, double>>& rows) {
  os << x_name << ',' << y_name << "\n";
  for (const auto& [x, y] : rows) os << format_double(x) << ',' << format_double(y) << "\n";
}

}  // namespace fgate::cli
