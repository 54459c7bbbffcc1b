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

// fgate: simulate the dipolar two-spin phase gate from the command line.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fgate/cli/commands.hpp"
#include "fgate/cli/run_config.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fgate::ConfigError("config", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fgate;
  using namespace fgate::cli;

  CLI::App app{"Two-spin dipolar phase gate simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  std::string config_path, out_path, format, target_phase = "-pi", grid_spec, calibration_path;
  unsigned jobs = 1;
  double target_tau_ns = 1.56;
  int scan_points = 24;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Configuration file (key = value)");
    sub->add_option("--out", out_path, "Output file (default: stdout)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--calibration", calibration_path, "Calibration document")
        ->default_str(default_calibration_path());
  };

  auto* simulate = app.add_subcommand("simulate", "Integrate one trajectory and write it");
  add_common(simulate);
  auto* gate = app.add_subcommand("gate-time", "Find the first time theta reaches the target phase");
  add_common(gate);
  gate->add_option("--target-phase", target_phase, "pi, -pi, pi/2, -pi/2, pi/4 or -pi/4");
  auto* sweep_cmd = app.add_subcommand("sweep", "Gate time over a grid of B_t, omega and r");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--grid", grid_spec, "e.g. 'Bt_T=0.1:0.3:3;omega_GHz=15.5;r_nm=1,1.1'");
  sweep_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  sweep_cmd->add_option("--target-phase", target_phase, "Target phase");
  auto* calibrate = app.add_subcommand("calibrate", "Fit r and the omega convention to a gate time");
  add_common(calibrate);
  calibrate->add_option("--target-tau-ns", target_tau_ns, "Gate time to reproduce");
  calibrate->add_option("--scan-points", scan_points, "Log-spaced radii per convention");
  calibrate->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  auto* figures = app.add_subcommand("figures", "Write the static and gate figure data");
  figures->add_option("--out", out_path, "Output directory")->default_str(".");
  figures->add_option("--calibration", calibration_path, "Calibration document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    const std::string cal_path = calibration_path.empty() ? default_calibration_path() : calibration_path;
    std::optional<CalibrationDocument> calibration;
    if (!calibrate->parsed()) {
      calibration = read_calibration_file(cal_path);
      if (!calibration) std::cerr << "note: no calibration at " << cal_path << "; using r = 1.14 nm, angular omega\n";
    }

    if (figures->parsed()) return cmd_figures(calibration, out_path, std::cerr);

    std::string config_text;
    if (!config_path.empty()) {
      config_text = read_file(config_path);
    } else if (calibrate->parsed()) {
      config_text = "scenario = pi_gate\n";
    } else {
      std::cerr << "config error: --config is required\n";
      return kExitConfigError;
    }
    RunConfig cfg = load_run_config(config_text, calibration);
    if (!out_path.empty()) cfg.out_path = out_path;
    if (!format.empty()) cfg.format = format_from_string(format);

    if (simulate->parsed()) return cmd_simulate(cfg, std::cerr);
    if (gate->parsed()) return cmd_gate_time(cfg, parse_target_phase(target_phase), std::cerr);
    if (sweep_cmd->parsed()) {
      const auto grid = parse_grid(grid_spec, cfg.params);
      return cmd_sweep(cfg, grid, {parse_target_phase(target_phase), jobs}, std::cerr);
    }
    CalibrationOptions opt;
    opt.target_tau_s = target_tau_ns * 1e-9;
    opt.scan_points = scan_points;
    opt.sweep.jobs = jobs;
    cfg.out_path = "";  // scan report on stdout; --out names the document
    return cmd_calibrate(cfg, opt, out_path.empty() ? cal_path : out_path, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
