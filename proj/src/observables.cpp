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

#include "fgate/observables.hpp"

#include <cmath>

#include "fgate/config_text.hpp"

namespace fgate {
namespace {

int side(double theta, double target) { return theta > target ? 1 : (theta < target ? -1 : 0); }

// Unwrapped phases at `s`, continuing the tracks of `ref`.
std::array<double, 4> continue_phases(const TrajectorySample& ref, const TwoSpinState& s) {
  auto phase = ref.phase;
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(s[i]) < kAmplitudeFloor || std::abs(ref.state[i]) < kAmplitudeFloor) continue;
    phase[i] += fold_angle(std::arg(s[i]) - std::arg(ref.state[i]));
  }
  return phase;
}

}  // namespace

SamplingTooCoarse::SamplingTooCoarse(double t_s, double increment)
    : std::runtime_error("amplitude phase moved " + format_double(increment) + " rad between samples at t = " +
                         format_double(t_s * 1e9) + " ns; reduce stride_ps"),
      time_(t_s) {}

double concurrence(const TwoSpinState& s) {
  const double n2 = s.norm_squared();
  if (!(n2 > 0.0)) throw std::invalid_argument("concurrence of the zero vector is undefined");
  // |conj(c2) conj(c3) - conj(c1) conj(c4)| = |c2 c3 - c1 c4|
  const Complex det = s[1] * s[2] - s[0] * s[3];
  return 2.0 * std::abs(det) / n2;
}

PhaseSeries phase_series(const Trajectory& traj) {
  PhaseSeries out;
  if (traj.samples.empty()) return out;
  out.reserve(traj.samples.size());
  PhaseTracker tracker(traj.samples.front().state);
  out.push_back({traj.samples.front().t, tracker.theta(), tracker.initially_below_floor()});
  for (std::size_t k = 1; k < traj.samples.size(); ++k) {
    const auto& sample = traj.samples[k];
    const auto u = tracker.update(sample.state);
    if (u.max_increment >= kMaxPhaseIncrement) throw SamplingTooCoarse(sample.t, u.max_increment);
    out.push_back({sample.t, tracker.theta(), u.below_floor});
  }
  return out;
}

std::vector<std::pair<double, double>> concurrence_series(const Trajectory& traj) {
  std::vector<std::pair<double, double>> out;
  out.reserve(traj.samples.size());
  for (const auto& s : traj.samples) out.emplace_back(s.t, concurrence(s.state));
  return out;
}

bool crosses(double before, double after, double target) {
  const int a = side(before, target);
  return a != 0 && side(after, target) != a;
}

std::optional<double> find_gate_time(const PhaseSeries& ps, double target) {
  for (std::size_t k = 1; k < ps.size(); ++k) {
    const auto& a = ps[k - 1];
    const auto& b = ps[k];
    if (!crosses(a.theta, b.theta, target)) continue;
    const double frac = (target - a.theta) / (b.theta - a.theta);
    return a.t + frac * (b.t - a.t);
  }
  return std::nullopt;
}

GateTime refine_gate_crossing(const ModelCoefficients& coeffs, double dt, const TrajectorySample& before,
                              double t_after, double theta_after, double target, double bracket) {
  const double theta_before = PhaseTracker::combine(before.phase);
  auto evaluate = [&](double t) {
    GateTime g;
    g.tau = t;
    g.state = advance_rk4(before.state, coeffs, before.t, t, dt);
    g.theta = PhaseTracker::combine(continue_phases(before, g.state));
    return g;
  };

  double lo = before.t, hi = t_after;
  const int lo_side = side(theta_before, target);
  std::optional<GateTime> at_hi;

  // Linear interpolation first, then bisection.
  double probe = lo + (target - theta_before) / (theta_after - theta_before) * (hi - lo);
  if (!(probe > lo && probe < hi)) probe = 0.5 * (lo + hi);
  while (hi - lo >= bracket) {
    auto g = evaluate(probe);
    const int s = side(g.theta, target);
    if (s == lo_side) {
      lo = probe;
    } else {
      hi = probe;
      at_hi = g;
      if (s == 0) break;
    }
    probe = 0.5 * (lo + hi);
    if (probe <= lo || probe >= hi) break;
  }
  GateTime best = at_hi ? *at_hi : evaluate(hi);
  best.concurrence = concurrence(best.state);
  return best;
}

std::optional<GateTime> find_gate_time(const Trajectory& traj, const PhaseSeries& ps,
                                       const PhysicalParams& p, double target, double bracket) {
  if (ps.size() != traj.samples.size()) throw std::invalid_argument("phase series does not match trajectory");
  const auto coeffs = ModelCoefficients::from(p);
  for (std::size_t k = 1; k < ps.size(); ++k) {
    if (!crosses(ps[k - 1].theta, ps[k].theta, target)) continue;
    TrajectorySample before = traj.samples[k - 1];
    // Align the sample's tracks with the series so theta agrees exactly.
    PhaseTracker retrack(traj.samples.front().state);
    for (std::size_t j = 1; j < k; ++j) retrack.update(traj.samples[j].state);
    before.phase = retrack.phases();
    return refine_gate_crossing(coeffs, p.dt_s(), before, ps[k].t, ps[k].theta, target, bracket);
  }
  return std::nullopt;
}

GateWatcher::GateWatcher(const TwoSpinState& initial, double target)
    : target_(target), norm0_(initial.norm()), tracker_(initial) {
  before_ = {0.0, initial, norm0_, tracker_.phases()};
  closest_theta_ = tracker_.theta();
}

bool GateWatcher::observe(double t, const TwoSpinState& s) {
  if (crossed_) return true;
  max_drift_ = std::max(max_drift_, std::abs(s.norm() / norm0_ - 1.0));
  if (t == before_.t) return false;  // initial sample
  const double theta_before = tracker_.theta();
  const auto u = tracker_.update(s);
  if (u.max_increment >= kMaxPhaseIncrement) throw SamplingTooCoarse(t, u.max_increment);
  const double theta = tracker_.theta();
  if (std::abs(theta - target_) < std::abs(closest_theta_ - target_)) closest_theta_ = theta;
  if (crosses(theta_before, theta, target_)) {
    crossed_ = true;
    t_after_ = t;
    theta_after_ = theta;
    return true;
  }
  before_ = {t, s, s.norm(), tracker_.phases()};
  return false;
}

}  // namespace fgate
