// Copyright 2026 The Tuplepack Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TUPLEPACK_KERNELS_HPP_
#define TUPLEPACK_KERNELS_HPP_

#include <cstddef>
#include <cstdint>

namespace tuplepack::kernels {

// Flat int64 kernels behind the histogram-scale loops: batch heuristic keys,
// per-component maxima and count-weighted sums. All kernels use wraparound
// (two's complement) arithmetic; callers establish no-overflow preconditions
// before picking the fast path. Scalar is the reference semantics; the AVX2
// variants must be bit-identical on every input, overflow included.
struct Ops {
  const char* name;

  // max over x[0..n), n >= 1
  std::int64_t (*reduce_max)(const std::int64_t* x, std::size_t n);
  // sum over x[0..n)
  std::int64_t (*reduce_sum)(const std::int64_t* x, std::size_t n);
  // sum of a[i]*b[i]
  std::int64_t (*dot)(const std::int64_t* a, const std::int64_t* b, std::size_t n);

  // out[i] = w*x[i]
  void (*scale)(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out);
  // out[i] += w*x[i]
  void (*scale_add)(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out);
  // out[i] = min(out[i], w*x[i])
  void (*scale_min)(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out);
  // out[i] = max(out[i], w*x[i])
  void (*scale_max)(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out);
  // out[i] *= w*x[i]
  void (*scale_mul)(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out);
};

const Ops& scalar_ops();

// True when the AVX2 backend is compiled in and the CPU reports AVX2.
bool avx2_available();
const Ops& avx2_ops();  // only valid when compiled in; guard with avx2_available()

// Backend picked once per process: best available, unless the environment
// variable TUPLEPACK_KERNELS (scalar|avx2) forces one.
const Ops& active_ops();

}  // namespace tuplepack::kernels

#endif  // TUPLEPACK_KERNELS_HPP_
