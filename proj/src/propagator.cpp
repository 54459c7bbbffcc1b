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

#include "fgate/propagator.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "fgate/kernels/rk4_batch.hpp"
#include "fgate/phase_tracking.hpp"

namespace fgate {
namespace {

long steps_for(double t0, double t_end, double dt) {
  const double span = t_end - t0;
  if (!(span > 0.0)) return 0;
  return std::max(1L, static_cast<long>(std::ceil(span / dt - 1e-9)));
}

TwoSpinState extract(const kernels::LaneStates& s, std::size_t lane) {
  TwoSpinState::Amplitudes a;
  for (std::size_t i = 0; i < 4; ++i) a[i] = {s.re[i][lane], s.im[i][lane]};
  return TwoSpinState::unchecked(a);
}

using Vec4 = Eigen::Vector4cd;

Eigen::Matrix4cd to_eigen(const HamiltonianMatrix& h) {
  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = h(r, c);
  return m;
}

/// exp(-i H h) as V diag(exp(-i lambda h)) V^dagger.
Eigen::Matrix4cd unitary_step(const HamiltonianMatrix& h, double width) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(to_eigen(h));
  Vec4 phases;
  for (int k = 0; k < 4; ++k) phases(k) = std::polar(1.0, -es.eigenvalues()(k) * width);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Vec4 to_vec(const TwoSpinState& s) {
  Vec4 v;
  for (int i = 0; i < 4; ++i) v(i) = s[static_cast<std::size_t>(i)];
  return v;
}

TwoSpinState from_vec(const Vec4& v) {
  return TwoSpinState::unchecked({v(0), v(1), v(2), v(3)});
}

// Final state of the oracle without keeping samples.
Vec4 oracle_final(const TwoSpinState& initial, const PhysicalParams& p, double t_end, std::size_t n) {
  const auto coeffs = ModelCoefficients::from(p);
  const double width = t_end / static_cast<double>(n);
  Vec4 c = to_vec(initial);
  if (coeffs.drive_T == 0.0) {
    const auto u = unitary_step(build_hamiltonian(coeffs.g, {coeffs.m1_at(0.0), coeffs.m2}), width);
    for (std::size_t i = 0; i < n; ++i) c = u * c;
    return c;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double mid = (static_cast<double>(i) + 0.5) * width;
    c = unitary_step(build_hamiltonian(coeffs.g, {coeffs.m1_at(mid), coeffs.m2}), width) * c;
  }
  return c;
}

}  // namespace

IntegrationDiverged::IntegrationDiverged(double t_s, double norm)
    : std::runtime_error("integration diverged at t = " + format_double(t_s * 1e9) +
                         " ns (norm = " + format_double(norm) + ")"),
      time_(t_s),
      norm_(norm) {}

void integrate_lanes(std::span<const LaneJob> jobs, const LaneObserver& observe) {
  if (jobs.size() > kernels::kLanes) throw std::invalid_argument("too many lanes for one batch");

  struct Run {
    long n_steps = 0;
    long n = 0;
    bool active = false;
    double m1_start = 0.0;
  };
  std::array<Run, kernels::kLanes> runs{};
  kernels::LaneStates st;
  kernels::LaneStep step;

  for (std::size_t l = 0; l < jobs.size(); ++l) {
    const auto& job = jobs[l];
    for (std::size_t i = 0; i < 4; ++i) {
      st.re[i][l] = job.initial[i].real();
      st.im[i][l] = job.initial[i].imag();
    }
    step.g[l] = job.coeffs.g;
    step.m2[l] = job.coeffs.m2;
    runs[l].n_steps = steps_for(job.t0, job.t_end, job.dt);
    runs[l].m1_start = job.coeffs.m1_at(job.t0);
    runs[l].active = observe(l, job.t0, job.initial) && runs[l].n_steps > 0;
  }

  const auto kernel = kernels::rk4_step();
  std::array<double, kernels::kLanes> t_next{};
  for (;;) {
    bool any = false;
    for (std::size_t l = 0; l < jobs.size(); ++l) {
      auto& run = runs[l];
      if (!run.active) {
        step.dt[l] = 0.0;
        continue;
      }
      any = true;
      const auto& job = jobs[l];
      const double t = job.t0 + static_cast<double>(run.n) * job.dt;
      t_next[l] = run.n + 1 == run.n_steps ? job.t_end : job.t0 + static_cast<double>(run.n + 1) * job.dt;
      const double h = t_next[l] - t;
      step.dt[l] = h;
      step.m1_start[l] = run.m1_start;
      step.m1_mid[l] = job.coeffs.m1_at(t + 0.5 * h);
      step.m1_end[l] = job.coeffs.m1_at(t_next[l]);
      run.m1_start = step.m1_end[l];
    }
    if (!any) break;
    kernel(st, step);
    for (std::size_t l = 0; l < jobs.size(); ++l) {
      auto& run = runs[l];
      if (!run.active) continue;
      ++run.n;
      const bool last = run.n == run.n_steps;
      if (last || run.n % jobs[l].stride_steps == 0) {
        if (!observe(l, t_next[l], extract(st, l))) run.active = false;
      }
      if (last) run.active = false;
    }
  }
}

Trajectory propagate_rk4(const TwoSpinState& initial, const PhysicalParams& p) {
  return propagate_rk4(initial, p, p.t_end_s(), p.dt_s());
}

Trajectory propagate_rk4(const TwoSpinState& initial, const PhysicalParams& p, double t_end_s,
                         double dt_s) {
  if (!(dt_s > 0.0)) throw std::invalid_argument("dt must be positive");
  LaneJob job{ModelCoefficients::from(p), initial, 0.0, t_end_s, dt_s,
              std::max(1L, std::lround(p.stride_s() / dt_s))};

  Trajectory traj;
  const double norm0 = initial.norm();
  PhaseTracker tracker(initial);
  integrate_lanes(std::span(&job, 1), [&](std::size_t, double t, const TwoSpinState& s) {
    TrajectorySample sample{t, s, s.norm(), {}};
    if (!traj.samples.empty()) tracker.update(s);
    sample.phase = tracker.phases();
    const double drift = std::abs(sample.norm / norm0 - 1.0);
    traj.max_norm_drift = std::max(traj.max_norm_drift, drift);
    traj.samples.push_back(sample);
    if (!(drift <= p.norm_tolerance)) throw IntegrationDiverged(t, sample.norm);
    return true;
  });
  return traj;
}

TwoSpinState advance_rk4(const TwoSpinState& from, const ModelCoefficients& c, double t0, double t1,
                         double dt) {
  LaneJob job{c, from, t0, t1, dt, std::numeric_limits<long>::max()};
  TwoSpinState out = from;
  integrate_lanes(std::span(&job, 1), [&](std::size_t, double, const TwoSpinState& s) {
    out = s;
    return true;
  });
  return out;
}

Trajectory propagate_exponential_oracle(const TwoSpinState& initial, const PhysicalParams& p,
                                        double t_end_s, std::size_t n_slices,
                                        std::size_t sample_every) {
  if (n_slices == 0) throw std::invalid_argument("n_slices must be at least 1");
  const double width = t_end_s / static_cast<double>(n_slices);
  if (sample_every == 0) {
    sample_every = width > 0.0 ? static_cast<std::size_t>(std::max(1.0, std::floor(p.stride_s() / width)))
                               : 1;
  }
  const auto coeffs = ModelCoefficients::from(p);
  const bool is_static = coeffs.drive_T == 0.0;
  Eigen::Matrix4cd fixed;
  if (is_static) fixed = unitary_step(build_hamiltonian(coeffs.g, {coeffs.m1_at(0.0), coeffs.m2}), width);

  Trajectory traj;
  const double norm0 = initial.norm();
  PhaseTracker tracker(initial);
  traj.samples.push_back({0.0, initial, norm0, tracker.phases()});
  Vec4 c = to_vec(initial);
  for (std::size_t i = 0; i < n_slices; ++i) {
    if (is_static) {
      c = fixed * c;
    } else {
      const double mid = (static_cast<double>(i) + 0.5) * width;
      c = unitary_step(build_hamiltonian(coeffs.g, {coeffs.m1_at(mid), coeffs.m2}), width) * c;
    }
    const bool last = i + 1 == n_slices;
    if (last || (i + 1) % sample_every == 0) {
      const auto s = from_vec(c);
      tracker.update(s);
      const double t = last ? t_end_s : static_cast<double>(i + 1) * width;
      traj.samples.push_back({t, s, s.norm(), tracker.phases()});
      traj.max_norm_drift = std::max(traj.max_norm_drift, std::abs(s.norm() / norm0 - 1.0));
    }
  }
  return traj;
}

ConvergedState exponential_oracle_converged(const TwoSpinState& initial, const PhysicalParams& p,
                                            double t_end_s, double tol, std::size_t start_slices,
                                            std::size_t max_slices) {
  if (p.Bt_T == 0.0) return {from_vec(oracle_final(initial, p, t_end_s, 1)), 1, 0.0};

  std::size_t n = std::max<std::size_t>(1, start_slices);
  Vec4 coarse = oracle_final(initial, p, t_end_s, n);
  Vec4 fine = oracle_final(initial, p, t_end_s, 2 * n);
  Vec4 extrapolated = (4.0 * fine - coarse) / 3.0;
  double err = std::numeric_limits<double>::infinity();
  while (2 * n < max_slices) {
    n *= 2;
    coarse = fine;
    fine = oracle_final(initial, p, t_end_s, 2 * n);
    const Vec4 next = (4.0 * fine - coarse) / 3.0;
    err = (next - extrapolated).norm();
    extrapolated = next;
    if (err <= tol) break;
  }
  return {from_vec(extrapolated), 2 * n, err};
}

TwoSpinState static_analytic(const TwoSpinState& initial, const PhysicalParams& p, double t) {
  if (p.Bt_T != 0.0) throw std::invalid_argument("static_analytic requires B_t = 0");
  const double g = dipole_coupling_angular(p.r_m(), p.constants);
  const double rate = p.constants.mu_B / p.constants.hbar;
  const double m1 = -rate * (2.0 * p.Bz_T + p.Bg1_T + p.Bg2_T);
  const double m2 = -rate * (p.Bg1_T - p.Bg2_T);

  // exp(-i (a I + bx sx + bz sz) t) applied to (u, v)
  auto block = [t](double a, double bx, double bz, Complex u, Complex v) {
    const double omega = std::hypot(bx, bz);
    const double cs = std::cos(omega * t);
    const double s = omega > 0.0 ? std::sin(omega * t) / omega : t;
    const Complex phase = std::polar(1.0, -a * t);
    const Complex i{0.0, 1.0};
    const Complex uu = cs - i * s * bz;
    const Complex vv = cs + i * s * bz;
    const Complex off = -i * s * bx;
    return std::pair{phase * (uu * u + off * v), phase * (off * u + vv * v)};
  };

  const auto [c1, c4] = block(g, -3.0 * g, m1, initial[0], initial[3]);
  const auto [c2, c3] = block(-g, -g, m2, initial[1], initial[2]);
  return TwoSpinState::unchecked({c1, c2, c3, c4});
}

}  // namespace fgate
