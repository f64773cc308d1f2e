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

// Overflow-safe reductions over non-negative int64 data. A cheap bound check
// routes the common case onto the unchecked kernel backend; inputs that might
// overflow fall back to a checked scalar loop that throws instead of wrapping.

#ifndef TUPLEPACK_SRC_CHECKED_REDUCE_HPP_
#define TUPLEPACK_SRC_CHECKED_REDUCE_HPP_

#include <cstdint>
#include <limits>
#include <vector>

#include "tuplepack/errors.hpp"
#include "tuplepack/kernels.hpp"

namespace tuplepack::detail {

inline std::int64_t max_of(const std::vector<std::int64_t>& x) {
  return x.empty() ? 0 : kernels::active_ops().reduce_max(x.data(), x.size());
}

// sum of x, all x[i] >= 0
inline std::int64_t safe_sum(const std::vector<std::int64_t>& x) {
  if (x.empty()) return 0;
  const __int128 bound = static_cast<__int128>(max_of(x)) * static_cast<__int128>(x.size());
  if (bound <= std::numeric_limits<std::int64_t>::max()) {
    return kernels::active_ops().reduce_sum(x.data(), x.size());
  }
  std::int64_t s = 0;
  for (std::int64_t v : x) {
    if (__builtin_add_overflow(s, v, &s)) throw OverflowError("sum exceeds 64 bits");
  }
  return s;
}

// sum of a[i]*b[i], all values >= 0
inline std::int64_t safe_dot(const std::vector<std::int64_t>& a,
                             const std::vector<std::int64_t>& b) {
  if (a.empty()) return 0;
  const __int128 bound = static_cast<__int128>(max_of(a)) * static_cast<__int128>(max_of(b)) *
                         static_cast<__int128>(a.size());
  if (bound <= std::numeric_limits<std::int64_t>::max()) {
    return kernels::active_ops().dot(a.data(), b.data(), a.size());
  }
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += static_cast<__int128>(a[i]) * static_cast<__int128>(b[i]);
    if (s > std::numeric_limits<std::int64_t>::max()) {
      throw OverflowError("dot product exceeds 64 bits");
    }
  }
  return static_cast<std::int64_t>(s);
}

}  // namespace tuplepack::detail

#endif  // TUPLEPACK_SRC_CHECKED_REDUCE_HPP_
