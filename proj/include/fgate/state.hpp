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

#include <array>
#include <complex>
#include <span>

namespace fgate {

using Complex = std::complex<double>;

/// Amplitudes (c1, c2, c3, c4) over the basis |00>, |01>, |10>, |11>.
///
/// Construction through `normalized` enforces unit norm; `unchecked` keeps the
/// amplitudes exactly as given, which is what integrators need when the norm
/// itself is the diagnostic being measured.
class TwoSpinState {
 public:
  using Amplitudes = std::array<Complex, 4>;

  TwoSpinState() : amp_{Complex{1.0, 0.0}, {}, {}, {}} {}

  /// Rescales to unit norm. Throws std::invalid_argument for a zero or
  /// non-finite vector.
  static TwoSpinState normalized(const Amplitudes& a);
  static TwoSpinState unchecked(const Amplitudes& a) { return TwoSpinState(a); }

  static TwoSpinState basis(int index);
  /// |+>|+> = (|00> + |01> + |10> + |11>) / 2
  static TwoSpinState plus_plus();

  const Complex& operator[](std::size_t i) const { return amp_[i]; }
  const Amplitudes& amplitudes() const { return amp_; }
  std::span<const Complex, 4> span() const { return amp_; }

  double norm_squared() const;
  double norm() const;

  /// Euclidean distance between amplitude vectors (no phase alignment).
  friend double distance(const TwoSpinState& a, const TwoSpinState& b);

  friend bool operator==(const TwoSpinState&, const TwoSpinState&) = default;

 private:
  explicit TwoSpinState(const Amplitudes& a) : amp_(a) {}
  Amplitudes amp_;
};

}  // namespace fgate
