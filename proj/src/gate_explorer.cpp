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

#include "fgate/gate_explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "fgate/hamiltonian.hpp"
#include "fgate/kernels/rk4_batch.hpp"
#include "fgate/observables.hpp"
#include "fgate/propagator.hpp"

namespace fgate {
namespace {

struct Point {
  PhysicalParams params;
  SweepRecord record;
  bool runnable = false;
};

// Halve dt until the resolution guard holds; the stride stays a whole number
// of steps.
void tighten_dt(PhysicalParams& p) {
  for (int i = 0; i < 20 && p.dt_s() * p.max_rate() >= kResolutionGuard; ++i) p.dt_fs *= 0.5;
}

Point prepare(const PhysicalParams& base, double Bt, double omega, double r) {
  Point pt;
  pt.params = base;
  pt.params.Bt_T = Bt;
  pt.params.omega_GHz = omega;
  pt.params.r_nm = r;
  pt.record.Bt_T = Bt;
  pt.record.omega_GHz = omega;
  pt.record.r_nm = r;
  try {
    if (r > 0.0) tighten_dt(pt.params);
    validate(pt.params);
    pt.record.omega_rad_per_s = pt.params.omega_rad_per_s();
    pt.record.dt_fs = pt.params.dt_fs;
    pt.runnable = true;
  } catch (const std::exception& e) {
    pt.record.error = e.what();
  }
  return pt;
}

// Integrates up to kLanes prepared points side by side.
void run_batch(std::span<Point> batch, double target) {
  std::vector<LaneJob> jobs;
  std::vector<std::size_t> lane_to_point;
  std::vector<GateWatcher> watchers;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    auto& pt = batch[i];
    if (!pt.runnable) continue;
    const auto init = pt.params.initial_state();
    jobs.push_back({ModelCoefficients::from(pt.params), init, 0.0, pt.params.t_end_s(), pt.params.dt_s(),
                    pt.params.stride_steps()});
    lane_to_point.push_back(i);
    watchers.emplace_back(init, target);
  }
  if (jobs.empty()) return;

  integrate_lanes(jobs, [&](std::size_t lane, double t, const TwoSpinState& s) {
    auto& pt = batch[lane_to_point[lane]];
    auto& w = watchers[lane];
    try {
      if (w.observe(t, s)) return false;
    } catch (const std::exception& e) {
      pt.record.error = e.what();
      return false;
    }
    if (w.max_norm_drift() > pt.params.norm_tolerance) {
      pt.record.error = IntegrationDiverged(t, s.norm()).what();
      return false;
    }
    return true;
  });

  for (std::size_t lane = 0; lane < jobs.size(); ++lane) {
    auto& pt = batch[lane_to_point[lane]];
    const auto& w = watchers[lane];
    pt.record.max_norm_drift = w.max_norm_drift();
    pt.record.closest_theta = w.closest_theta();
    if (!pt.record.error.empty() || !w.crossed()) continue;
    const auto gate = refine_gate_crossing(jobs[lane].coeffs, jobs[lane].dt, w.before(), w.t_after(),
                                           w.theta_after(), target);
    pt.record.gate_time_s = gate.tau;
    pt.record.concurrence_at_gate = gate.concurrence;
    pt.record.closest_theta = gate.theta;
  }
}

void run_points(std::vector<Point>& points, const SweepOptions& opt) {
  const std::size_t n_batches = (points.size() + kernels::kLanes - 1) / kernels::kLanes;
  unsigned jobs = opt.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n_batches));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b; (b = next.fetch_add(1)) < n_batches;) {
      const std::size_t lo = b * kernels::kLanes;
      const std::size_t hi = std::min(points.size(), lo + kernels::kLanes);
      run_batch(std::span(points).subspan(lo, hi - lo), opt.target_phase);
    }
  };
  if (jobs <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
}

CalibrationCandidate candidate_from(const SweepRecord& r, OmegaConvention c) {
  return {c, r.r_nm, r.gate_time_s, r.concurrence_at_gate, r.closest_theta};
}

double miss(const CalibrationCandidate& c, double target) {
  return c.tau_s ? std::abs(*c.tau_s - target) : std::numeric_limits<double>::infinity();
}

}  // namespace

std::vector<SweepRecord> sweep(const SweepGrid& grid, const PhysicalParams& base, const SweepOptions& opt) {
  if (grid.size() == 0) throw std::invalid_argument("sweep grid is empty");
  std::vector<Point> points;
  points.reserve(grid.size());
  for (double bt : grid.Bt_T)
    for (double w : grid.omega_GHz)
      for (double r : grid.r_nm) points.push_back(prepare(base, bt, w, r));
  run_points(points, opt);

  std::vector<SweepRecord> out;
  out.reserve(points.size());
  for (auto& p : points) out.push_back(std::move(p.record));
  return out;
}

SweepRecord evaluate_point(const PhysicalParams& p, double target_phase) {
  return sweep({{p.Bt_T}, {p.omega_GHz}, {p.r_nm}}, p, {target_phase, 1}).front();
}

std::optional<SweepRecord> best_drive(const std::vector<SweepRecord>& records, double c_min) {
  const SweepRecord* best = nullptr;
  for (const auto& r : records) {
    if (!r.reached() || !r.error.empty() || *r.concurrence_at_gate < c_min) continue;
    if (!best) {
      best = &r;
      continue;
    }
    const auto key = [](const SweepRecord& x) { return std::tuple(*x.gate_time_s, x.Bt_T, x.omega_rad_per_s); };
    if (key(r) < key(*best)) best = &r;
  }
  if (!best) return std::nullopt;
  return *best;
}

DriveOptimum optimize_drive(const std::vector<double>& Bt_T, const std::vector<double>& omega_GHz,
                            double c_min, const PhysicalParams& base, const SweepOptions& opt) {
  if (!(c_min >= 0.0 && c_min < 1.0)) throw std::invalid_argument("C_min must lie in [0, 1)");
  DriveOptimum out;
  out.records = sweep({Bt_T, omega_GHz, {base.r_nm}}, base, opt);
  out.best = best_drive(out.records, c_min);
  return out;
}

CalibrationResult calibrate_r(const PhysicalParams& base, const CalibrationOptions& opt) {
  if (!(opt.r_min_nm > 0.0 && opt.r_max_nm > opt.r_min_nm) || opt.scan_points < 2) {
    throw std::invalid_argument("calibration needs 0 < r_min < r_max and at least two scan points");
  }
  const double target = opt.target_tau_s;
  std::vector<double> radii;
  for (int i = 0; i < opt.scan_points; ++i) {
    const double f = static_cast<double>(i) / (opt.scan_points - 1);
    radii.push_back(opt.r_min_nm * std::pow(opt.r_max_nm / opt.r_min_nm, f));
  }

  CalibrationResult result;
  for (const auto convention : opt.conventions) {
    PhysicalParams p = base;
    p.omega_convention = convention;
    auto scan = sweep({{p.Bt_T}, {p.omega_GHz}, radii}, p, opt.sweep);

    // Best evaluated point so far; earlier evaluations win ties.
    CalibrationCandidate best = candidate_from(scan.front(), convention);
    auto consider = [&](const SweepRecord& r) {
      const auto c = candidate_from(r, convention);
      const bool better = miss(c, target) < miss(best, target) ||
                          (!best.tau_s && !c.tau_s &&
                           std::abs(c.closest_theta - opt.sweep.target_phase) <
                               std::abs(best.closest_theta - opt.sweep.target_phase));
      if (better) best = c;
    };
    for (std::size_t i = 1; i < scan.size(); ++i) consider(scan[i]);

    for (std::size_t i = 0; i + 1 < scan.size(); ++i) {
      const auto& a = scan[i];
      const auto& b = scan[i + 1];
      if (!a.reached() || !b.reached()) continue;
      if ((*a.gate_time_s - target) * (*b.gate_time_s - target) > 0.0) continue;
      double lo = a.r_nm, hi = b.r_nm;
      const bool lo_below = *a.gate_time_s < target;
      for (int k = 0; k < opt.bisection_steps; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        p.r_nm = mid;
        const auto rec = evaluate_point(p, opt.sweep.target_phase);
        consider(rec);
        if (!rec.reached()) break;
        if ((*rec.gate_time_s < target) == lo_below) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      break;
    }
    result.per_convention.push_back(best);
    result.scans.push_back(std::move(scan));
  }

  result.best = result.per_convention.front();
  for (const auto& c : result.per_convention) {
    if (miss(c, target) < miss(result.best, target)) result.best = c;
  }
  result.ok = result.best.tau_s.has_value();
  return result;
}

CalibrationDocument parse_calibration(std::string_view text) {
  auto doc = KeyValueDocument::parse(text);
  CalibrationDocument out;
  const auto r = doc.take_number("r_nm");
  if (!r) throw ConfigError("r_nm", "missing from calibration document");
  out.r_nm = *r;
  const auto conv = doc.take("omega_convention");
  if (!conv) throw ConfigError("omega_convention", "missing from calibration document");
  out.omega_convention = omega_convention_from_string(*conv);
  if (auto v = doc.take_number("achieved_tau_ns")) out.achieved_tau_ns = *v;
  if (auto v = doc.take_number("target_tau_ns")) out.target_tau_ns = *v;
  if (auto v = doc.take_number("concurrence_at_gate")) out.concurrence_at_gate = *v;
  if (auto v = doc.take("tool_version")) out.tool_version = *v;
  doc.reject_remaining();
  if (!(out.r_nm > 0.0)) throw ConfigError("r_nm", "must be positive");
  return out;
}

std::string serialize_calibration(const CalibrationDocument& doc) {
  std::ostringstream os;
  os << "# inter-spin distance and drive-frequency convention fitted to the target gate time\n"
     << "r_nm = " << format_double(doc.r_nm) << "\n"
     << "omega_convention = " << to_string(doc.omega_convention) << "\n"
     << "achieved_tau_ns = " << format_double(doc.achieved_tau_ns) << "\n"
     << "target_tau_ns = " << format_double(doc.target_tau_ns) << "\n"
     << "concurrence_at_gate = " << format_double(doc.concurrence_at_gate) << "\n"
     << "tool_version = " << doc.tool_version << "\n";
  return os.str();
}

std::optional<CalibrationDocument> read_calibration_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_calibration(ss.str());
}

void write_calibration_file(const std::string& path, const CalibrationDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write calibration document " + path);
  out << serialize_calibration(doc);
}

}  // namespace fgate
