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

#ifndef TUPLEPACK_ASSIGNMENT_HPP_
#define TUPLEPACK_ASSIGNMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tuplepack/packer.hpp"

namespace tuplepack {

struct PackAssignment {
  struct Pack {
    std::vector<std::string> ids;
    std::vector<std::int64_t> sums;
  };
  std::vector<Pack> packs;
};

// Maps a strategy set back onto concrete item ids so a dataloader can
// materialize packs. Per size tuple, ids queue up in input order; strategies
// are consumed in order, each expanded count times, drawing ids in the
// strategy's tuple order. A seed shuffles each queue (same pack shapes,
// randomized membership). The items' histogram must equal the strategies'
// implied histogram (MismatchError lists surplus and deficit); ids must be
// unique (DuplicateIdError).
PackAssignment assign(const std::vector<std::pair<std::string, SizeTuple>>& items,
                      const std::vector<Strategy>& strategies,
                      std::optional<std::uint64_t> shuffle_seed = {});

}  // namespace tuplepack

#endif  // TUPLEPACK_ASSIGNMENT_HPP_
