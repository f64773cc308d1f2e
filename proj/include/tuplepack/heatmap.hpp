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

#ifndef TUPLEPACK_HEATMAP_HPP_
#define TUPLEPACK_HEATMAP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tuplepack/sweep.hpp"

namespace tuplepack {

// A rectangular sweep grid reduced to plain numbers, as exchanged through
// the grid CSV (header limit_1..limit_k,eff_1..eff_k,objective,num_packs).
struct GridTable {
  struct Cell {
    std::vector<std::int64_t> limits;
    std::vector<double> efficiency;
    double objective = 0;
    std::int64_t num_packs = 0;
  };
  std::size_t dimension = 0;
  std::vector<std::vector<std::int64_t>> axes;  // ascending per component
  std::vector<Cell> cells;                      // lexicographic by limits
};

GridTable to_grid_table(const SweepGrid& grid);

// Throws ShapeError unless every axis combination appears exactly once.
GridTable read_grid_csv(std::string_view text);
std::string write_grid_csv(const GridTable& table);

// Plain PGM ("P2") rendering of a 2-component grid: one row per component-0
// value (ascending top to bottom), one column per component-1 value, maxval
// 100, pixel = round(value). Values below clamp_floor are raised to it
// first. Byte-identical output for equal inputs on every platform.
std::string write_heatmap(const GridTable& table,
                          std::optional<std::size_t> efficiency_component = {},
                          std::optional<double> clamp_floor = {});

}  // namespace tuplepack

#endif  // TUPLEPACK_HEATMAP_HPP_
