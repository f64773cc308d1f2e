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

#include "tuplepack/assignment.hpp"

#include <deque>
#include <map>
#include <unordered_set>

namespace tuplepack {
namespace {

// splitmix64; fixed algorithm so seeded shuffles reproduce across platforms.
std::uint64_t next_random(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

template <typename T>
void shuffle_queue(std::deque<T>& queue, std::uint64_t& state) {
  for (std::size_t i = queue.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(next_random(state) % i);
    std::swap(queue[i - 1], queue[j]);
  }
}

}  // namespace

PackAssignment assign(const std::vector<std::pair<std::string, SizeTuple>>& items,
                      const std::vector<Strategy>& strategies,
                      std::optional<std::uint64_t> shuffle_seed) {
  std::map<SizeTuple, std::deque<std::string>> queues;
  std::unordered_set<std::string> seen;
  seen.reserve(items.size());
  for (const auto& [id, tuple] : items) {
    if (!seen.insert(id).second) throw DuplicateIdError("'" + id + "'");
    queues[tuple].push_back(id);
  }

  // The strategies' implied histogram must match the items exactly.
  std::map<SizeTuple, std::int64_t> deficit;
  for (const Strategy& strategy : strategies) {
    for (const SizeTuple& tuple : strategy.tuples) deficit[tuple] += strategy.count;
  }
  std::string surplus_msg;
  std::string deficit_msg;
  for (const auto& [tuple, queue] : queues) {
    const std::int64_t have = static_cast<std::int64_t>(queue.size());
    const std::int64_t need = deficit.count(tuple) ? deficit.at(tuple) : 0;
    if (have > need) {
      surplus_msg += " " + tuple.to_string() + "x" + std::to_string(have - need);
    }
  }
  for (const auto& [tuple, need] : deficit) {
    const std::int64_t have =
        queues.count(tuple) ? static_cast<std::int64_t>(queues.at(tuple).size()) : 0;
    if (need > have) {
      deficit_msg += " " + tuple.to_string() + "x" + std::to_string(need - have);
    }
  }
  if (!surplus_msg.empty() || !deficit_msg.empty()) {
    throw MismatchError("items vs strategies; surplus:" +
                        (surplus_msg.empty() ? " none" : surplus_msg) + ", deficit:" +
                        (deficit_msg.empty() ? " none" : deficit_msg));
  }

  if (shuffle_seed) {
    std::uint64_t state = *shuffle_seed;
    for (auto& [tuple, queue] : queues) shuffle_queue(queue, state);
  }

  PackAssignment assignment;
  for (const Strategy& strategy : strategies) {
    for (std::int64_t repeat = 0; repeat < strategy.count; ++repeat) {
      PackAssignment::Pack pack;
      pack.sums.assign(strategy.tuples.empty() ? 0 : strategy.tuples[0].dimension(), 0);
      for (const SizeTuple& tuple : strategy.tuples) {
        std::deque<std::string>& queue = queues.at(tuple);
        pack.ids.push_back(std::move(queue.front()));
        queue.pop_front();
        for (std::size_t c = 0; c < tuple.dimension(); ++c) pack.sums[c] += tuple[c];
      }
      assignment.packs.push_back(std::move(pack));
    }
  }
  return assignment;
}

}  // namespace tuplepack
