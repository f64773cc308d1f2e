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

#ifndef TUPLEPACK_IO_HPP_
#define TUPLEPACK_IO_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tuplepack/assignment.hpp"
#include "tuplepack/packer.hpp"

namespace tuplepack {

// Strategy-set JSON:
//   { "k": 2, "requested_limits": [..], "realized_limits": [..],
//     "efficiency": [..], "strategies": [ { "tuples": [[a,b],..], "count": n }, .. ] }
std::string write_strategies_json(const PackingResult& result);

struct StrategySet {
  std::size_t dimension = 0;
  std::vector<Strategy> strategies;
};

StrategySet read_strategies_json(std::string_view text);

// Items CSV: header row, then id,c1,...,ck per line. Ids are opaque strings.
std::vector<std::pair<std::string, SizeTuple>> parse_items_csv(std::string_view text);

// Assignment JSON: {"packs": [{"ids": [...], "sums": [...]}, ...]}
std::string write_assignment_json(const PackAssignment& assignment);

std::string slurp_file(const std::string& path);
void spit_file(const std::string& path, std::string_view content);

}  // namespace tuplepack

#endif  // TUPLEPACK_IO_HPP_
