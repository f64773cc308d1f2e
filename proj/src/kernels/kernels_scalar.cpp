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

// Scalar reference kernels. Multiplication and addition go through uint64 so
// overflow wraps instead of being undefined, matching the SIMD lanes exactly.

#include "tuplepack/kernels.hpp"

namespace tuplepack::kernels {
namespace {

inline std::int64_t wrap_mul(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b));
}

inline std::int64_t wrap_add(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}

std::int64_t reduce_max(const std::int64_t* x, std::size_t n) {
  std::int64_t m = x[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (x[i] > m) m = x[i];
  }
  return m;
}

std::int64_t reduce_sum(const std::int64_t* x, std::size_t n) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s = wrap_add(s, x[i]);
  return s;
}

std::int64_t dot(const std::int64_t* a, const std::int64_t* b, std::size_t n) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s = wrap_add(s, wrap_mul(a[i], b[i]));
  return s;
}

void scale(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = wrap_mul(w, x[i]);
}

void scale_add(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = wrap_add(out[i], wrap_mul(w, x[i]));
}

void scale_min(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t v = wrap_mul(w, x[i]);
    if (v < out[i]) out[i] = v;
  }
}

void scale_max(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t v = wrap_mul(w, x[i]);
    if (v > out[i]) out[i] = v;
  }
}

void scale_mul(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = wrap_mul(out[i], wrap_mul(w, x[i]));
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {
      "scalar", reduce_max, reduce_sum, dot, scale, scale_add, scale_min, scale_max, scale_mul,
  };
  return ops;
}

}  // namespace tuplepack::kernels
