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

#include "rk4_body.hpp"

namespace fgate::kernels {
namespace {

struct ScalarLane {
  double v;

  static ScalarLane zero() { return {0.0}; }
  static ScalarLane broadcast(double x) { return {x}; }
  static ScalarLane load(const double* p) { return {*p}; }
  void store(double* p) const { *p = v; }

  friend ScalarLane operator+(ScalarLane a, ScalarLane b) { return {a.v + b.v}; }
  friend ScalarLane operator-(ScalarLane a, ScalarLane b) { return {a.v - b.v}; }
  friend ScalarLane operator*(ScalarLane a, ScalarLane b) { return {a.v * b.v}; }
  friend ScalarLane operator/(ScalarLane a, ScalarLane b) { return {a.v / b.v}; }
};

}  // namespace

void rk4_step_scalar(LaneStates& s, const LaneStep& k) {
  for (std::size_t lane = 0; lane < kLanes; ++lane) {
    detail::rk4_step_lanes<ScalarLane>(s, k, lane);
  }
}

}  // namespace fgate::kernels
