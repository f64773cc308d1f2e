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

#ifndef TUPLEPACK_ORACLE_HPP_
#define TUPLEPACK_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "tuplepack/packer.hpp"

namespace tuplepack {

// Exact minimum pack count for a toy instance, by exhaustive search with
// branch-and-bound pruning. Intended as a validation oracle: instances above
// cap_items throw InstanceTooLargeError.
std::int64_t exact_min_packs(const std::vector<SizeTuple>& items, const Limits& limits,
                             std::optional<std::int64_t> max_tuples_per_pack = {},
                             std::size_t cap_items = 10);

// Item-level first-fit-decreasing: items sorted by (heuristic value,
// components) descending, each placed into the first open pack (creation
// order) that fits. An independent cross-check for the histogram packer;
// unlike it, identical items do combine with each other here.
PackingResult ffd_items(const std::vector<SizeTuple>& items, const Limits& limits,
                        const HeuristicSpec& heuristic,
                        std::optional<std::int64_t> max_tuples_per_pack = {});

}  // namespace tuplepack

#endif  // TUPLEPACK_ORACLE_HPP_
