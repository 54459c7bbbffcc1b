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

#include "fgate/cli/commands.hpp"

#include <json.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "fgate/cli/trajectory_io.hpp"
#include "fgate/propagator.hpp"

namespace fgate::cli {
namespace {

// Runs `body` against the configured output (a file or stdout).
void with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  body(out);
  if (!out) throw std::runtime_error("failed writing " + path);
}

int guarded(std::ostream& diag, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    diag << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const SamplingTooCoarse& e) {
    diag << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const IntegrationDiverged& e) {
    diag << "error: " << e.what() << "\n";
    return kExitDiverged;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

std::string format_candidate(const CalibrationCandidate& c) {
  std::string s = "convention=" + std::string(to_string(c.convention)) + " r_nm=" + format_double(c.r_nm);
  if (c.tau_s) {
    s += " tau_ns=" + format_double(*c.tau_s * 1e9) + " concurrence=" + format_double(c.concurrence.value_or(0.0));
  } else {
    s += " not_reached closest_theta_rad=" + format_double(c.closest_theta);
  }
  return s;
}

}  // namespace

std::string tool_version() { return FGATE_VERSION; }

std::string default_calibration_path() { return FGATE_DEFAULT_CALIBRATION; }

GateReport run_gate_time(const RunConfig& cfg, double target_phase) {
  GateReport report;
  report.scenario = cfg.scenario;
  report.target_phase = target_phase;
  report.params = cfg.params;
  const auto traj = propagate_rk4(cfg.params.initial_state(), cfg.params);
  report.max_norm_drift = traj.max_norm_drift;
  report.gate = find_gate_time(traj, phase_series(traj), cfg.params, target_phase);
  return report;
}

void write_gate_report(std::ostream& os, const GateReport& r, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["scenario"] = to_string(r.scenario);
    j["target_phase_rad"] = r.target_phase;
    j["status"] = r.gate ? "reached" : "not_reached";
    j["tau_ns"] = r.gate ? nlohmann::ordered_json(r.gate->tau * 1e9) : nullptr;
    j["concurrence_at_gate"] = r.gate ? nlohmann::ordered_json(r.gate->concurrence) : nullptr;
    j["theta_at_gate_rad"] = r.gate ? nlohmann::ordered_json(r.gate->theta) : nullptr;
    j["max_norm_drift"] = r.max_norm_drift;
    auto params = KeyValueDocument::parse(serialize_params(r.params));
    auto& echo = j["params"] = nlohmann::ordered_json::object();
    for (const auto& key : params.remaining_keys()) echo[key] = *params.take(key);
    os << j.dump(1) << "\n";
    return;
  }
  os << "scenario = " << to_string(r.scenario) << "\n"
     << "target_phase_rad = " << format_double(r.target_phase) << "\n"
     << "status = " << (r.gate ? "reached" : "not_reached") << "\n";
  if (r.gate) {
    os << "tau_ns = " << format_double(r.gate->tau * 1e9) << "\n"
       << "concurrence_at_gate = " << format_double(r.gate->concurrence) << "\n"
       << "theta_at_gate_rad = " << format_double(r.gate->theta) << "\n";
  }
  os << "max_norm_drift = " << format_double(r.max_norm_drift) << "\n"
     << "# parameters\n"
     << serialize_params(r.params);
}

int cmd_simulate(const RunConfig& cfg, std::ostream& diag) {
  return guarded(diag, [&] {
    const auto traj = propagate_rk4(cfg.params.initial_state(), cfg.params);
    with_output(cfg.out_path, [&](std::ostream& os) { write_trajectory(os, traj, cfg.format); });
    return int{kExitOk};
  });
}

int cmd_gate_time(const RunConfig& cfg, double target_phase, std::ostream& diag) {
  return guarded(diag, [&] {
    const auto report = run_gate_time(cfg, target_phase);
    with_output(cfg.out_path, [&](std::ostream& os) { write_gate_report(os, report, cfg.format); });
    if (!report.gate) {
      diag << "target phase " << format_double(target_phase) << " rad not reached within "
           << format_double(cfg.params.t_end_ns) << " ns\n";
      return int{kExitNotReached};
    }
    return int{kExitOk};
  });
}

int cmd_sweep(const RunConfig& cfg, const SweepGrid& grid, const SweepOptions& opt, std::ostream& diag) {
  return guarded(diag, [&] {
    const auto records = sweep(grid, cfg.params, opt);
    with_output(cfg.out_path, [&](std::ostream& os) { write_sweep(os, records, cfg.format); });
    std::size_t failed = 0;
    for (const auto& r : records) failed += r.error.empty() ? 0 : 1;
    if (failed > 0) {
      diag << failed << " of " << records.size() << " sweep points failed\n";
      return int{kExitFailure};
    }
    return int{kExitOk};
  });
}

int cmd_calibrate(const RunConfig& cfg, const CalibrationOptions& opt, const std::string& document_path,
                  std::ostream& diag) {
  return guarded(diag, [&] {
    const auto result = calibrate_r(cfg.params, opt);
    with_output(cfg.out_path, [&](std::ostream& os) {
      os << "# calibration target tau_ns = " << format_double(opt.target_tau_s * 1e9) << ", r range "
         << format_double(opt.r_min_nm) << ".." << format_double(opt.r_max_nm) << " nm\n";
      for (std::size_t i = 0; i < result.per_convention.size(); ++i) {
        os << "best[" << to_string(result.per_convention[i].convention)
           << "]: " << format_candidate(result.per_convention[i]) << "\n";
      }
      for (std::size_t i = 0; i < result.scans.size(); ++i) {
        os << "# scan, omega convention " << to_string(opt.conventions[i]) << "\n";
        write_sweep(os, result.scans[i], OutputFormat::kCsv);
      }
      os << (result.ok ? "selected: " : "calibration failed; closest: ") << format_candidate(result.best) << "\n";
    });
    if (!result.ok) {
      diag << "calibration failed: no radius in range reached the target phase\n";
      return int{kExitCalibrationFailed};
    }
    CalibrationDocument doc;
    doc.r_nm = result.best.r_nm;
    doc.omega_convention = result.best.convention;
    doc.achieved_tau_ns = *result.best.tau_s * 1e9;
    doc.target_tau_ns = opt.target_tau_s * 1e9;
    doc.concurrence_at_gate = result.best.concurrence.value_or(0.0);
    doc.tool_version = tool_version();
    write_calibration_file(document_path, doc);
    diag << "calibration written to " << document_path << "\n";
    return int{kExitOk};
  });
}

int cmd_figures(const std::optional<CalibrationDocument>& calibration, const std::string& out_dir,
                std::ostream& diag) {
  return guarded(diag, [&] {
    const std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
    std::filesystem::create_directories(dir);
    auto emit = [&](Scenario s, const char* theta_file, const char* conc_file) {
      const auto p = scenario_preset(s, calibration);
      validate(p);
      const auto traj = propagate_rk4(p.initial_state(), p);
      const auto ps = phase_series(traj);
      std::vector<std::pair<double, double>> theta, conc;
      for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        theta.emplace_back(traj.samples[k].t * 1e9, ps[k].theta);
        conc.emplace_back(traj.samples[k].t * 1e9, concurrence(traj.samples[k].state));
      }
      with_output((dir / theta_file).string(),
                  [&](std::ostream& os) { write_series_csv(os, "t_ns", "theta_rad", theta); });
      with_output((dir / conc_file).string(),
                  [&](std::ostream& os) { write_series_csv(os, "t_ns", "concurrence", conc); });
    };
    emit(Scenario::kStatic, "fig1_theta_static.csv", "fig2_conc_static.csv");
    emit(Scenario::kPiGate, "fig3_theta_gate.csv", "fig4_conc_gate.csv");
    diag << "figure data written to " << dir.string() << "\n";
    return int{kExitOk};
  });
}

}  // namespace fgate::cli
