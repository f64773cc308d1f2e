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

// AVX2 kernels, 4 x int64 lanes. This translation unit is compiled with
// -mavx2 and only referenced after a runtime CPU check. AVX2 has no 64-bit
// multiply or max, so both are composed from 32-bit pieces and compares;
// results wrap mod 2^64 exactly like the scalar reference.

#include "tuplepack/kernels.hpp"

#ifdef TUPLEPACK_HAVE_AVX2

#include <immintrin.h>

namespace tuplepack::kernels {
namespace {

// low 64 bits of a*b per lane: al*bl + ((al*bh + ah*bl) << 32)
inline __m256i mul64(__m256i a, __m256i b) {
  __m256i bswap = _mm256_shuffle_epi32(b, 0xB1);   // (bh, bl) per lane
  __m256i prodlh = _mm256_mullo_epi32(a, bswap);   // al*bh, ah*bl (32-bit)
  __m256i zero = _mm256_setzero_si256();
  __m256i prodlh2 = _mm256_hadd_epi32(prodlh, zero);
  __m256i prodlh3 = _mm256_shuffle_epi32(prodlh2, 0x73);  // sums into high halves
  __m256i prodll = _mm256_mul_epu32(a, b);                // al*bl (full 64-bit)
  return _mm256_add_epi64(prodll, prodlh3);
}

inline __m256i max64(__m256i a, __m256i b) {
  return _mm256_blendv_epi8(b, a, _mm256_cmpgt_epi64(a, b));
}

inline __m256i min64(__m256i a, __m256i b) {
  return _mm256_blendv_epi8(a, b, _mm256_cmpgt_epi64(a, b));
}

inline std::int64_t hsum64(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i s = _mm_add_epi64(lo, hi);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(_mm_extract_epi64(s, 0)) +
                                   static_cast<std::uint64_t>(_mm_extract_epi64(s, 1)));
}

inline std::int64_t hmax64(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  std::int64_t a = _mm_extract_epi64(lo, 0);
  std::int64_t b = _mm_extract_epi64(lo, 1);
  std::int64_t c = _mm_extract_epi64(hi, 0);
  std::int64_t d = _mm_extract_epi64(hi, 1);
  std::int64_t m = a > b ? a : b;
  if (c > m) m = c;
  if (d > m) m = d;
  return m;
}

std::int64_t reduce_max(const std::int64_t* x, std::size_t n) {
  std::size_t i = 0;
  std::int64_t m;
  if (n >= 4) {
    __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x));
    for (i = 4; i + 4 <= n; i += 4) {
      acc = max64(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i)));
    }
    m = hmax64(acc);
  } else {
    m = x[0];
    i = 1;
  }
  for (; i < n; ++i) {
    if (x[i] > m) m = x[i];
  }
  return m;
}

std::int64_t reduce_sum(const std::int64_t* x, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_epi64(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i)));
  }
  std::uint64_t s = static_cast<std::uint64_t>(hsum64(acc));
  for (; i < n; ++i) s += static_cast<std::uint64_t>(x[i]);
  return static_cast<std::int64_t>(s);
}

std::int64_t dot(const std::int64_t* a, const std::int64_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, mul64(va, vb));
  }
  std::uint64_t s = static_cast<std::uint64_t>(hsum64(acc));
  for (; i < n; ++i) {
    s += static_cast<std::uint64_t>(a[i]) * static_cast<std::uint64_t>(b[i]);
  }
  return static_cast<std::int64_t>(s);
}

void scale(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out) {
  __m256i vw = _mm256_set1_epi64x(w);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), mul64(vw, vx));
  }
  for (; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(w) *
                                       static_cast<std::uint64_t>(x[i]));
  }
}

void scale_add(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out) {
  __m256i vw = _mm256_set1_epi64x(w);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                        _mm256_add_epi64(vo, mul64(vw, vx)));
  }
  for (; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(
        static_cast<std::uint64_t>(out[i]) +
        static_cast<std::uint64_t>(w) * static_cast<std::uint64_t>(x[i]));
  }
}

void scale_min(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out) {
  __m256i vw = _mm256_set1_epi64x(w);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), min64(vo, mul64(vw, vx)));
  }
  for (; i < n; ++i) {
    std::int64_t v = static_cast<std::int64_t>(static_cast<std::uint64_t>(w) *
                                               static_cast<std::uint64_t>(x[i]));
    if (v < out[i]) out[i] = v;
  }
}

void scale_max(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out) {
  __m256i vw = _mm256_set1_epi64x(w);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), max64(vo, mul64(vw, vx)));
  }
  for (; i < n; ++i) {
    std::int64_t v = static_cast<std::int64_t>(static_cast<std::uint64_t>(w) *
                                               static_cast<std::uint64_t>(x[i]));
    if (v > out[i]) out[i] = v;
  }
}

void scale_mul(const std::int64_t* x, std::size_t n, std::int64_t w, std::int64_t* out) {
  __m256i vw = _mm256_set1_epi64x(w);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), mul64(vo, mul64(vw, vx)));
  }
  for (; i < n; ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(w) * static_cast<std::uint64_t>(x[i]);
    out[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(out[i]) * v);
  }
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops = {
      "avx2", reduce_max, reduce_sum, dot, scale, scale_add, scale_min, scale_max, scale_mul,
  };
  return ops;
}

}  // namespace tuplepack::kernels

#endif  // TUPLEPACK_HAVE_AVX2
