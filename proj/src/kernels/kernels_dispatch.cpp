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

#include <cstdlib>
#include <cstring>

#include "tuplepack/kernels.hpp"

namespace tuplepack::kernels {

bool avx2_available() {
#ifdef TUPLEPACK_HAVE_AVX2
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

#ifndef TUPLEPACK_HAVE_AVX2
const Ops& avx2_ops() { return scalar_ops(); }
#endif

namespace {

const Ops& pick_backend() {
  const char* forced = std::getenv("TUPLEPACK_KERNELS");
  if (forced != nullptr) {
    if (std::strcmp(forced, "scalar") == 0) return scalar_ops();
    if (std::strcmp(forced, "avx2") == 0 && avx2_available()) return avx2_ops();
  }
  return avx2_available() ? avx2_ops() : scalar_ops();
}

}  // namespace

const Ops& active_ops() {
  static const Ops& ops = pick_backend();
  return ops;
}

}  // namespace tuplepack::kernels
