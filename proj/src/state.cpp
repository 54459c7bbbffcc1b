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

#include "fgate/state.hpp"

#include <cmath>
#include <stdexcept>

namespace fgate {

TwoSpinState TwoSpinState::normalized(const Amplitudes& a) {
  double n2 = 0.0;
  for (const auto& c : a) n2 += std::norm(c);
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw std::invalid_argument("two-spin state must be a finite non-zero vector");
  }
  const double inv = 1.0 / std::sqrt(n2);
  Amplitudes out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = a[i] * inv;
  return TwoSpinState(out);
}

TwoSpinState TwoSpinState::basis(int index) {
  if (index < 0 || index > 3) throw std::out_of_range("basis index must be in [0, 3]");
  Amplitudes a{};
  a[static_cast<std::size_t>(index)] = 1.0;
  return TwoSpinState(a);
}

TwoSpinState TwoSpinState::plus_plus() {
  return TwoSpinState(Amplitudes{0.5, 0.5, 0.5, 0.5});
}

double TwoSpinState::norm_squared() const {
  double n2 = 0.0;
  for (const auto& c : amp_) n2 += std::norm(c);
  return n2;
}

double TwoSpinState::norm() const { return std::sqrt(norm_squared()); }

double distance(const TwoSpinState& a, const TwoSpinState& b) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d2 += std::norm(a.amp_[i] - b.amp_[i]);
  return std::sqrt(d2);
}

}  // namespace fgate
