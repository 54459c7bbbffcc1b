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

#include "fgate/cli/run_config.hpp"

#include <cmath>
#include <numbers>

namespace fgate::cli {
namespace {

constexpr const char* kFieldKeys[] = {"Bz_T", "Bg1_T", "Bg2_T", "Bt_T", "omega_GHz", "omega_is_angular"};

std::vector<double> parse_axis(std::string_view name, std::string_view values) {
  const std::string key(name);
  std::vector<double> out;
  auto number = [&](std::string_view s) {
    auto v = parse_double(s);
    if (!v || !std::isfinite(*v)) throw ConfigError(key, "malformed grid value '" + std::string(s) + "'");
    return *v;
  };
  if (values.find(':') != std::string_view::npos) {
    const auto c1 = values.find(':');
    const auto c2 = values.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw ConfigError(key, "range must be start:stop:count");
    const double a = number(values.substr(0, c1));
    const double b = number(values.substr(c1 + 1, c2 - c1 - 1));
    const double n = number(values.substr(c2 + 1));
    if (n < 1 || n != std::floor(n) || n > 1e6) throw ConfigError(key, "count must be a positive integer");
    const auto count = static_cast<int>(n);
    for (int i = 0; i < count; ++i) {
      out.push_back(count == 1 ? a : a + (b - a) * i / (count - 1));
    }
    return out;
  }
  while (true) {
    const auto comma = values.find(',');
    out.push_back(number(values.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    values.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::kStatic: return "static";
    case Scenario::kPiGate: return "pi_gate";
    case Scenario::kFree: return "free";
    case Scenario::kCustom: return "custom";
  }
  return "?";
}

Scenario scenario_from_string(std::string_view s) {
  if (s == "static") return Scenario::kStatic;
  if (s == "pi_gate") return Scenario::kPiGate;
  if (s == "free") return Scenario::kFree;
  if (s == "custom") return Scenario::kCustom;
  throw ConfigError("scenario", "expected static, pi_gate, free or custom, got '" + std::string(s) + "'");
}

OutputFormat format_from_string(std::string_view s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw ConfigError("format", "expected csv or json, got '" + std::string(s) + "'");
}

PhysicalParams scenario_preset(Scenario s, const std::optional<CalibrationDocument>& calibration) {
  PhysicalParams p;
  if (calibration) {
    p.r_nm = calibration->r_nm;
    p.omega_convention = calibration->omega_convention;
  }
  p.Bz_T = kPresetBz_T;
  p.Bg1_T = kPresetBg1_T;
  p.Bg2_T = kPresetBg2_T;
  p.Bt_T = 0.0;
  p.omega_GHz = 0.0;
  switch (s) {
    case Scenario::kFree:
      p.Bz_T = p.Bg1_T = p.Bg2_T = 0.0;
      break;
    case Scenario::kPiGate:
      p.Bt_T = kPresetBt_T;
      p.omega_GHz = kPresetOmega_GHz;
      break;
    case Scenario::kStatic:
    case Scenario::kCustom:
      break;
  }
  return p;
}

RunConfig load_run_config(std::string_view text, const std::optional<CalibrationDocument>& calibration) {
  auto doc = KeyValueDocument::parse(text);
  RunConfig cfg;
  if (auto s = doc.take("scenario")) cfg.scenario = scenario_from_string(*s);
  if (auto o = doc.take("out")) cfg.out_path = *o;
  if (auto f = doc.take("format")) cfg.format = format_from_string(*f);

  if (cfg.scenario == Scenario::kCustom) {
    for (const char* key : {"r_nm", "Bz_T", "Bg1_T", "Bg2_T", "Bt_T", "omega_GHz"}) {
      if (!doc.contains(key)) throw ConfigError(key, "required by scenario custom");
    }
  } else {
    for (const char* key : kFieldKeys) {
      if (doc.contains(key)) {
        throw ConfigError(key, "pinned by scenario " + std::string(to_string(cfg.scenario)));
      }
    }
  }
  cfg.params = apply_param_keys(doc, scenario_preset(cfg.scenario, calibration));
  doc.reject_remaining();
  validate(cfg.params);
  return cfg;
}

double parse_target_phase(std::string_view s) {
  constexpr double pi = std::numbers::pi;
  if (s == "pi") return pi;
  if (s == "-pi") return -pi;
  if (s == "pi/2") return pi / 2;
  if (s == "-pi/2") return -pi / 2;
  if (s == "pi/4") return pi / 4;
  if (s == "-pi/4") return -pi / 4;
  throw ConfigError("target-phase", "expected one of pi, -pi, pi/2, -pi/2, pi/4, -pi/4");
}

SweepGrid parse_grid(std::string_view spec, const PhysicalParams& base) {
  SweepGrid grid{{base.Bt_T}, {base.omega_GHz}, {base.r_nm}};
  bool seen[3] = {false, false, false};
  while (!spec.empty()) {
    const auto semi = spec.find(';');
    std::string_view axis = spec.substr(0, semi);
    spec = semi == std::string_view::npos ? std::string_view{} : spec.substr(semi + 1);
    if (axis.empty()) continue;
    const auto eq = axis.find('=');
    if (eq == std::string_view::npos) throw ConfigError("grid", "axis '" + std::string(axis) + "' lacks '='");
    const auto name = axis.substr(0, eq);
    const auto values = parse_axis(name, axis.substr(eq + 1));
    int slot = -1;
    if (name == "Bt_T") slot = 0, grid.Bt_T = values;
    else if (name == "omega_GHz") slot = 1, grid.omega_GHz = values;
    else if (name == "r_nm") slot = 2, grid.r_nm = values;
    else throw ConfigError(std::string(name), "unknown grid axis (expected Bt_T, omega_GHz or r_nm)");
    if (seen[slot]) throw ConfigError(std::string(name), "grid axis given twice");
    seen[slot] = true;
  }
  return grid;
}

}  // namespace fgate::cli
