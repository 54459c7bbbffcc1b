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

// Compiled with -mavx2 only; callers must check isa_available(Isa::kAvx2).

#include <immintrin.h>

#include "rk4_body.hpp"

namespace fgate::kernels {
namespace {

struct Avx2Lanes {
  __m256d v;

  static Avx2Lanes zero() { return {_mm256_setzero_pd()}; }
  static Avx2Lanes broadcast(double x) { return {_mm256_set1_pd(x)}; }
  static Avx2Lanes load(const double* p) { return {_mm256_load_pd(p)}; }
  void store(double* p) const { _mm256_store_pd(p, v); }

  friend Avx2Lanes operator+(Avx2Lanes a, Avx2Lanes b) { return {_mm256_add_pd(a.v, b.v)}; }
  friend Avx2Lanes operator-(Avx2Lanes a, Avx2Lanes b) { return {_mm256_sub_pd(a.v, b.v)}; }
  friend Avx2Lanes operator*(Avx2Lanes a, Avx2Lanes b) { return {_mm256_mul_pd(a.v, b.v)}; }
  friend Avx2Lanes operator/(Avx2Lanes a, Avx2Lanes b) { return {_mm256_div_pd(a.v, b.v)}; }
};

static_assert(kLanes == 4, "AVX2 variant holds exactly four doubles per register");

}  // namespace

void rk4_step_avx2(LaneStates& s, const LaneStep& k) {
  detail::rk4_step_lanes<Avx2Lanes>(s, k, 0);
}

}  // namespace fgate::kernels
