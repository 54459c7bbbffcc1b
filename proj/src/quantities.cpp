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

#include "fgate/quantities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fgate {
namespace {

constexpr const char* kAmplitudeKeys[4][2] = {
    {"c1_re", "c1_im"}, {"c2_re", "c2_im"}, {"c3_re", "c3_im"}, {"c4_re", "c4_im"}};

void require(bool ok, const char* key, const std::string& what) {
  if (!ok) throw ConfigError(key, what);
}

}  // namespace

std::string_view to_string(OmegaConvention c) {
  return c == OmegaConvention::kAngular ? "angular" : "ordinary";
}

OmegaConvention omega_convention_from_string(std::string_view s) {
  if (s == "angular") return OmegaConvention::kAngular;
  if (s == "ordinary") return OmegaConvention::kOrdinary;
  throw ConfigError("omega_convention", "expected angular or ordinary, got '" + std::string(s) + "'");
}

std::string_view to_string(InitialStateKind k) {
  switch (k) {
    case InitialStateKind::kPlusPlus: return "plus_plus";
    case InitialStateKind::kBasis00: return "basis00";
    case InitialStateKind::kCustom: return "custom";
  }
  return "?";
}

double PhysicalParams::omega_rad_per_s() const {
  const double w = omega_GHz * 1e9;
  return omega_convention == OmegaConvention::kAngular ? w : 2.0 * std::numbers::pi * w;
}

long PhysicalParams::stride_steps() const {
  return std::max(1L, std::lround(stride_ps * 1e3 / dt_fs));
}

TwoSpinState PhysicalParams::initial_state() const {
  switch (initial_kind) {
    case InitialStateKind::kPlusPlus: return TwoSpinState::plus_plus();
    case InitialStateKind::kBasis00: return TwoSpinState::basis(0);
    case InitialStateKind::kCustom: return TwoSpinState::normalized(custom_amplitudes);
  }
  return TwoSpinState::plus_plus();
}

double PhysicalParams::max_rate() const {
  const double m1 =
      field_to_angular(2.0 * (std::abs(Bz_T) + std::abs(Bt_T)) + std::abs(Bg1_T + Bg2_T), constants);
  const double m2 = std::abs(field_to_angular(Bg1_T - Bg2_T, constants));
  const double g4 = r_nm > 0.0 ? 4.0 * std::abs(dipole_coupling_angular(r_m(), constants)) : 0.0;
  const double drive = std::abs(field_to_angular(Bt_T, constants));
  return std::max({m1, m2, g4, drive, std::abs(omega_rad_per_s())});
}

void validate(const PhysicalParams& p) {
  for (auto [v, key] : {std::pair{p.r_nm, "r_nm"}, {p.Bz_T, "Bz_T"}, {p.Bg1_T, "Bg1_T"},
                        {p.Bg2_T, "Bg2_T"}, {p.Bt_T, "Bt_T"}, {p.omega_GHz, "omega_GHz"},
                        {p.t_end_ns, "t_end_ns"}, {p.dt_fs, "dt_fs"}, {p.stride_ps, "stride_ps"},
                        {p.norm_tolerance, "norm_tol"}}) {
    require(std::isfinite(v), key, "must be finite");
  }
  require(p.r_nm > 0.0, "r_nm", "inter-spin distance must be positive");
  require(p.dt_fs > 0.0, "dt_fs", "time step must be positive");
  require(p.t_end_ns >= 0.0, "t_end_ns", "horizon must be non-negative");
  require(p.t_end_ns == 0.0 || p.dt_s() <= p.t_end_s(), "dt_fs", "time step exceeds the horizon");
  require(p.stride_ps > 0.0, "stride_ps", "output stride must be positive");
  const double steps = p.stride_ps * 1e3 / p.dt_fs;
  require(steps >= 1.0 - 1e-9 && std::abs(steps - std::round(steps)) <= 1e-9 * steps, "stride_ps",
          "output stride must be a whole number of time steps");
  require(p.norm_tolerance > 0.0, "norm_tol", "must be positive");
  require(p.constants.gamma_1 > 0.0 && p.constants.gamma_2 > 0.0, "gamma1",
          "gyromagnetic ratios must be positive");
  const double phase_per_step = p.dt_s() * p.max_rate();
  require(phase_per_step < kResolutionGuard, "dt_fs",
          "resolution guard violated: dt * max rate = " + format_double(phase_per_step) +
              " rad (must be < " + format_double(kResolutionGuard) + ")");
  if (p.initial_kind == InitialStateKind::kCustom) {
    double n2 = 0.0;
    for (const auto& c : p.custom_amplitudes) n2 += std::norm(c);
    require(n2 > 0.0 && std::isfinite(n2), "initial_state", "custom amplitudes must be non-zero");
  }
}

double field_to_angular(double tesla, const PhysicalConstants& c) {
  if (!std::isfinite(tesla)) throw std::invalid_argument("field must be finite");
  return c.mu_B * tesla / c.hbar;
}

double dipole_coupling_angular(double r_m, const PhysicalConstants& c) {
  if (!(r_m > 0.0) || !std::isfinite(r_m)) {
    throw std::invalid_argument("inter-spin distance must be positive and finite");
  }
  const double coupling_J =
      c.gamma_1 * c.gamma_2 * c.mu_0 * c.mu_B * c.mu_B / (4.0 * std::numbers::pi * r_m * r_m * r_m);
  return coupling_J / c.hbar;
}

PhysicalParams apply_param_keys(KeyValueDocument& doc, PhysicalParams p) {
  auto num = [&](const char* key, double& field) {
    if (auto v = doc.take_number(key)) field = *v;
  };
  num("r_nm", p.r_nm);
  num("Bz_T", p.Bz_T);
  num("Bg1_T", p.Bg1_T);
  num("Bg2_T", p.Bg2_T);
  num("Bt_T", p.Bt_T);
  num("omega_GHz", p.omega_GHz);
  if (auto a = doc.take_bool("omega_is_angular")) {
    p.omega_convention = *a ? OmegaConvention::kAngular : OmegaConvention::kOrdinary;
  }
  num("t_end_ns", p.t_end_ns);
  num("dt_fs", p.dt_fs);
  num("stride_ps", p.stride_ps);
  num("norm_tol", p.norm_tolerance);
  num("gamma1", p.constants.gamma_1);
  num("gamma2", p.constants.gamma_2);

  if (auto s = doc.take("initial_state")) {
    if (*s == "plus_plus") {
      p.initial_kind = InitialStateKind::kPlusPlus;
    } else if (*s == "basis00") {
      p.initial_kind = InitialStateKind::kBasis00;
    } else if (*s == "custom") {
      p.initial_kind = InitialStateKind::kCustom;
    } else {
      throw ConfigError("initial_state", "expected plus_plus, basis00 or custom, got '" + *s + "'");
    }
  }
  // Amplitude keys replace the whole vector; components not given are zero.
  bool any_amplitude = false;
  TwoSpinState::Amplitudes given{};
  for (std::size_t i = 0; i < 4; ++i) {
    double re = 0.0, im = 0.0;
    if (auto v = doc.take_number(kAmplitudeKeys[i][0])) re = *v, any_amplitude = true;
    if (auto v = doc.take_number(kAmplitudeKeys[i][1])) im = *v, any_amplitude = true;
    given[i] = {re, im};
  }
  if (any_amplitude) p.custom_amplitudes = given;
  if (any_amplitude && p.initial_kind != InitialStateKind::kCustom) {
    throw ConfigError("initial_state", "amplitude keys require initial_state = custom");
  }
  return p;
}

PhysicalParams load_params(std::string_view config_text) {
  auto doc = KeyValueDocument::parse(config_text);
  auto p = apply_param_keys(doc, PhysicalParams{});
  doc.reject_remaining();
  validate(p);
  return p;
}

std::string serialize_params(const PhysicalParams& p) {
  std::string out;
  auto put = [&](std::string_view key, std::string_view value) {
    out.append(key).append(" = ").append(value).append("\n");
  };
  auto num = [&](std::string_view key, double v) { put(key, format_double(v)); };
  num("r_nm", p.r_nm);
  num("Bz_T", p.Bz_T);
  num("Bg1_T", p.Bg1_T);
  num("Bg2_T", p.Bg2_T);
  num("Bt_T", p.Bt_T);
  num("omega_GHz", p.omega_GHz);
  put("omega_is_angular", p.omega_convention == OmegaConvention::kAngular ? "true" : "false");
  num("t_end_ns", p.t_end_ns);
  num("dt_fs", p.dt_fs);
  num("stride_ps", p.stride_ps);
  num("norm_tol", p.norm_tolerance);
  num("gamma1", p.constants.gamma_1);
  num("gamma2", p.constants.gamma_2);
  put("initial_state", to_string(p.initial_kind));
  if (p.initial_kind == InitialStateKind::kCustom) {
    for (std::size_t i = 0; i < 4; ++i) {
      num(kAmplitudeKeys[i][0], p.custom_amplitudes[i].real());
      num(kAmplitudeKeys[i][1], p.custom_amplitudes[i].imag());
    }
  }
  return out;
}

}  // namespace fgate
