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

#include "tuplepack/heatmap.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "csv.hpp"

namespace tuplepack {
namespace {

// Shortest round-trip representation; deterministic across runs.
std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

GridTable to_grid_table(const SweepGrid& grid) {
  GridTable table;
  table.dimension = grid.dimension();
  table.axes = grid.axes;
  table.cells.reserve(grid.cells.size());
  for (const SweepCell& cell : grid.cells) {
    GridTable::Cell out;
    out.limits = cell.limits;
    out.efficiency.reserve(cell.efficiency.size());
    for (const Rational& e : cell.efficiency) out.efficiency.push_back(e.to_double());
    out.objective = cell.objective.to_double();
    out.num_packs = cell.num_packs;
    table.cells.push_back(std::move(out));
  }
  return table;
}

std::string write_grid_csv(const GridTable& table) {
  std::string out;
  const std::size_t k = table.dimension;
  for (std::size_t c = 0; c < k; ++c) out += "limit_" + std::to_string(c + 1) + ",";
  for (std::size_t c = 0; c < k; ++c) out += "eff_" + std::to_string(c + 1) + ",";
  out += "objective,num_packs\n";
  for (const GridTable::Cell& cell : table.cells) {
    for (std::int64_t limit : cell.limits) out += std::to_string(limit) + ",";
    for (double e : cell.efficiency) out += format_double(e) + ",";
    out += format_double(cell.objective) + "," + std::to_string(cell.num_packs) + "\n";
  }
  return out;
}

GridTable read_grid_csv(std::string_view text) {
  GridTable table;
  std::size_t arity = 0;
  std::size_t k = 0;
  detail::for_each_csv_line(text, [&](std::size_t line_no, std::string_view line) {
    auto fields = detail::split_fields(line);
    if (arity == 0) {
      while (k < fields.size() && fields[k].substr(0, 6) == "limit_") ++k;
      if (k == 0 || fields.size() != 2 * k + 2) {
        throw ParseError("line " + std::to_string(line_no) + ": bad grid header");
      }
      arity = fields.size();
      return;
    }
    if (fields.size() != arity) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(arity) + " fields, got " + std::to_string(fields.size()));
    }
    GridTable::Cell cell;
    cell.limits.reserve(k);
    cell.efficiency.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
      cell.limits.push_back(detail::parse_int(fields[c], line_no));
    }
    for (std::size_t c = 0; c < k; ++c) {
      cell.efficiency.push_back(detail::parse_double(fields[k + c], line_no));
    }
    cell.objective = detail::parse_double(fields[2 * k], line_no);
    cell.num_packs = detail::parse_int(fields[2 * k + 1], line_no);
    table.cells.push_back(std::move(cell));
  });
  if (arity == 0) throw ParseError("no grid header found");
  table.dimension = k;

  std::sort(table.cells.begin(), table.cells.end(),
            [](const GridTable::Cell& a, const GridTable::Cell& b) { return a.limits < b.limits; });
  table.axes.assign(k, {});
  for (const GridTable::Cell& cell : table.cells) {
    for (std::size_t c = 0; c < k; ++c) table.axes[c].push_back(cell.limits[c]);
  }
  std::size_t expected = 1;
  for (auto& axis : table.axes) {
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    expected *= axis.size();
  }
  if (expected != table.cells.size()) {
    throw ShapeError("grid is ragged: " + std::to_string(table.cells.size()) +
                     " cells for " + std::to_string(expected) + " axis combinations");
  }
  for (std::size_t i = 1; i < table.cells.size(); ++i) {
    if (table.cells[i].limits == table.cells[i - 1].limits) {
      throw ShapeError("duplicate grid cell at limits " +
                       SizeTuple(table.cells[i].limits).to_string());
    }
  }
  return table;
}

std::string write_heatmap(const GridTable& table,
                          std::optional<std::size_t> efficiency_component,
                          std::optional<double> clamp_floor) {
  if (table.dimension != 2) {
    throw ShapeError("heatmap needs a 2-component grid, got dimension " +
                     std::to_string(table.dimension));
  }
  if (efficiency_component && *efficiency_component >= 2) {
    throw ShapeError("efficiency component out of range");
  }
  const std::size_t height = table.axes[0].size();
  const std::size_t width = table.axes[1].size();
  if (height * width != table.cells.size()) {
    throw ShapeError("grid is ragged");
  }
  std::string out = "P2\n" + std::to_string(width) + " " + std::to_string(height) + "\n100\n";
  for (std::size_t row = 0; row < height; ++row) {
    for (std::size_t col = 0; col < width; ++col) {
      const GridTable::Cell& cell = table.cells[row * width + col];
      double value = efficiency_component ? cell.efficiency[*efficiency_component]
                                          : cell.objective;
      if (clamp_floor && value < *clamp_floor) value = *clamp_floor;
      long pixel = std::lround(value);
      if (pixel < 0) pixel = 0;
      if (pixel > 100) pixel = 100;
      if (col > 0) out += ' ';
      out += std::to_string(pixel);
    }
    out += '\n';
  }
  return out;
}

}  // namespace tuplepack
