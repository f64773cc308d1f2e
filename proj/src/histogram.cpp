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

#include "tuplepack/histogram.hpp"

#include "checked_reduce.hpp"
#include "csv.hpp"

namespace tuplepack {

void Histogram::add(const SizeTuple& tuple, std::int64_t count) {
  if (count <= 0) {
    throw NegativeCountError("count " + std::to_string(count) + " for " + tuple.to_string());
  }
  if (bins_.empty()) {
    dimension_ = tuple.dimension();
  } else if (tuple.dimension() != dimension_) {
    throw DimensionError("tuple " + tuple.to_string() + " has dimension " +
                         std::to_string(tuple.dimension()) + ", histogram has " +
                         std::to_string(dimension_));
  }
  std::int64_t& slot = bins_[tuple];
  if (__builtin_add_overflow(slot, count, &slot)) {
    throw OverflowError("count for " + tuple.to_string() + " exceeds 64 bits");
  }
}

Histogram Histogram::from_items(const std::vector<SizeTuple>& items) {
  Histogram h;
  for (const SizeTuple& item : items) h.add(item, 1);
  return h;
}

Histogram Histogram::from_bins(const std::vector<std::pair<SizeTuple, std::int64_t>>& bins) {
  Histogram h;
  for (const auto& [tuple, count] : bins) h.add(tuple, count);
  return h;
}

std::int64_t Histogram::total_items() const {
  std::vector<std::int64_t> counts;
  counts.reserve(bins_.size());
  for (const auto& [tuple, count] : bins_) counts.push_back(count);
  return detail::safe_sum(counts);
}

std::vector<std::int64_t> Histogram::component_max() const {
  if (bins_.empty()) throw EmptyInputError("component_max of empty histogram");
  std::vector<std::int64_t> max(dimension_, 0);
  for (const auto& [tuple, count] : bins_) {
    for (std::size_t c = 0; c < dimension_; ++c) {
      if (tuple[c] > max[c]) max[c] = tuple[c];
    }
  }
  return max;
}

std::vector<std::int64_t> Histogram::component_total() const {
  std::vector<std::int64_t> counts;
  std::vector<std::vector<std::int64_t>> columns(dimension_);
  counts.reserve(bins_.size());
  for (auto& col : columns) col.reserve(bins_.size());
  for (const auto& [tuple, count] : bins_) {
    counts.push_back(count);
    for (std::size_t c = 0; c < dimension_; ++c) columns[c].push_back(tuple[c]);
  }
  std::vector<std::int64_t> totals(dimension_, 0);
  for (std::size_t c = 0; c < dimension_; ++c) {
    totals[c] = detail::safe_dot(counts, columns[c]);
  }
  return totals;
}

Histogram parse_histogram_csv(std::string_view text) {
  Histogram h;
  std::size_t arity = 0;  // header fields, k + 1
  detail::for_each_csv_line(text, [&](std::size_t line_no, std::string_view line) {
    auto fields = detail::split_fields(line);
    if (arity == 0) {
      if (fields.size() < 2) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": header needs at least two columns");
      }
      arity = fields.size();
      return;
    }
    if (fields.size() != arity) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(arity) + " fields, got " + std::to_string(fields.size()));
    }
    std::vector<std::int64_t> components(arity - 1);
    for (std::size_t i = 0; i + 1 < arity; ++i) {
      components[i] = detail::parse_int(fields[i], line_no);
      if (components[i] < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": negative component " +
                         std::to_string(components[i]));
      }
    }
    std::int64_t count = detail::parse_int(fields[arity - 1], line_no);
    if (count <= 0) {
      throw NegativeCountError("line " + std::to_string(line_no) + ": count " +
                               std::to_string(count));
    }
    h.add(SizeTuple(std::move(components)), count);
  });
  if (arity == 0 && !detail::trim(text).empty()) {
    throw ParseError("no header row found");
  }
  return h;
}

std::string serialize_histogram_csv(const Histogram& histogram) {
  std::string out;
  const std::size_t k = histogram.dimension();
  if (k == 1) {
    out += "length,count\n";
  } else if (k == 2 || k == 0) {
    out += "nodes,edges,count\n";
  } else {
    for (std::size_t c = 0; c < k; ++c) out += "c" + std::to_string(c + 1) + ",";
    out += "count\n";
  }
  for (const auto& [tuple, count] : histogram.bins()) {
    for (std::size_t c = 0; c < tuple.dimension(); ++c) {
      out += std::to_string(tuple[c]);
      out += ',';
    }
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

DatasetStats stats(const Histogram& histogram) {
  if (histogram.empty()) throw EmptyInputError("stats of empty histogram");
  DatasetStats s;
  s.total_items = histogram.total_items();
  s.distinct_bins = static_cast<std::int64_t>(histogram.distinct_bins());
  s.max = histogram.component_max();
  const std::vector<std::int64_t> totals = histogram.component_total();
  const std::size_t k = histogram.dimension();
  s.mean.reserve(k);
  s.no_packing_efficiency.reserve(k);
  s.potential_speedup.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    s.mean.push_back(Rational::make(totals[c], s.total_items));
    if (s.max[c] == 0) {
      // Degenerate all-zero component: nothing to pad, nothing to gain.
      s.no_packing_efficiency.push_back(Rational(100));
      s.potential_speedup.push_back(Rational(1));
      continue;
    }
    Rational eff = Rational::make(static_cast<__int128>(100) * totals[c],
                                  static_cast<__int128>(s.total_items) * s.max[c]);
    s.no_packing_efficiency.push_back(eff);
    s.potential_speedup.push_back(Rational(100) / eff);
  }
  return s;
}

}  // namespace tuplepack
