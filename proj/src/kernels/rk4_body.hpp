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

// Shared RK4 body. `V` is a lane vector providing load/store, +, - and *.
// Included only by the per-ISA translation units, each with its own V.

#include "fgate/kernels/rk4_batch.hpp"

namespace fgate::kernels::detail {

template <class V>
struct Amp {
  V re[4];
  V im[4];
};

// k = -i H c for the real Hamiltonian
//   [[g+m1, 0, 0, -3g], [0, m2-g, -g, 0], [0, -g, -g-m2, 0], [-3g, 0, 0, g-m1]]
template <class V>
inline Amp<V> rhs(const Amp<V>& c, V g, V g3, V m1, V m2) {
  const V a = g + m1;
  const V d = g - m1;
  const V b = m2 - g;
  const V e = V::zero() - g - m2;
  Amp<V> k;
  // -i (x + i y) = y - i x
  k.im[0] = V::zero() - (a * c.re[0] - g3 * c.re[3]);
  k.re[0] = a * c.im[0] - g3 * c.im[3];
  k.im[3] = V::zero() - (d * c.re[3] - g3 * c.re[0]);
  k.re[3] = d * c.im[3] - g3 * c.im[0];
  k.im[1] = V::zero() - (b * c.re[1] - g * c.re[2]);
  k.re[1] = b * c.im[1] - g * c.im[2];
  k.im[2] = V::zero() - (e * c.re[2] - g * c.re[1]);
  k.re[2] = e * c.im[2] - g * c.im[1];
  return k;
}

template <class V>
inline Amp<V> axpy(const Amp<V>& c, V h, const Amp<V>& k) {
  Amp<V> out;
  for (int i = 0; i < 4; ++i) {
    out.re[i] = c.re[i] + h * k.re[i];
    out.im[i] = c.im[i] + h * k.im[i];
  }
  return out;
}

template <class V>
inline void rk4_step_lanes(LaneStates& s, const LaneStep& k, std::size_t lane) {
  const V g = V::load(k.g + lane);
  const V g3 = V::broadcast(3.0) * g;
  const V m2 = V::load(k.m2 + lane);
  const V h = V::load(k.dt + lane);
  const V half_h = V::broadcast(0.5) * h;
  const V sixth_h = h / V::broadcast(6.0);
  const V two = V::broadcast(2.0);

  Amp<V> c;
  for (int i = 0; i < 4; ++i) {
    c.re[i] = V::load(s.re[i] + lane);
    c.im[i] = V::load(s.im[i] + lane);
  }

  const V m1_mid = V::load(k.m1_mid + lane);
  const Amp<V> k1 = rhs(c, g, g3, V::load(k.m1_start + lane), m2);
  const Amp<V> k2 = rhs(axpy(c, half_h, k1), g, g3, m1_mid, m2);
  const Amp<V> k3 = rhs(axpy(c, half_h, k2), g, g3, m1_mid, m2);
  const Amp<V> k4 = rhs(axpy(c, h, k3), g, g3, V::load(k.m1_end + lane), m2);

  for (int i = 0; i < 4; ++i) {
    V sum_re = k1.re[i] + two * k2.re[i];
    V sum_im = k1.im[i] + two * k2.im[i];
    sum_re = sum_re + two * k3.re[i];
    sum_im = sum_im + two * k3.im[i];
    sum_re = sum_re + k4.re[i];
    sum_im = sum_im + k4.im[i];
    (c.re[i] + sixth_h * sum_re).store(s.re[i] + lane);
    (c.im[i] + sixth_h * sum_im).store(s.im[i] + lane);
  }
}

}  // namespace fgate::kernels::detail
