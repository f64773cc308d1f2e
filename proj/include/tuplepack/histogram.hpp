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

#ifndef TUPLEPACK_HISTOGRAM_HPP_
#define TUPLEPACK_HISTOGRAM_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tuplepack/rational.hpp"
#include "tuplepack/types.hpp"

namespace tuplepack {

// Occurrence counts per distinct size tuple. Bins iterate in lexicographic
// tuple order; zero-count bins are never stored. Immutable once built.
class Histogram {
 public:
  Histogram() = default;

  static Histogram from_items(const std::vector<SizeTuple>& items);
  static Histogram from_bins(const std::vector<std::pair<SizeTuple, std::int64_t>>& bins);

  bool empty() const { return bins_.empty(); }
  // 0 while empty, otherwise the common dimension of all keys.
  std::size_t dimension() const { return dimension_; }
  std::size_t distinct_bins() const { return bins_.size(); }
  std::int64_t total_items() const;

  const std::map<SizeTuple, std::int64_t>& bins() const { return bins_; }

  // Componentwise maximum over all keys; histogram must be non-empty.
  std::vector<std::int64_t> component_max() const;
  // Sum of count * component over all bins.
  std::vector<std::int64_t> component_total() const;

  bool operator==(const Histogram& o) const { return bins_ == o.bins_; }

 private:
  friend Histogram parse_histogram_csv(std::string_view text);

  void add(const SizeTuple& tuple, std::int64_t count);

  std::size_t dimension_ = 0;
  std::map<SizeTuple, std::int64_t> bins_;
};

// CSV exchange format: one required header row (names are not interpreted,
// arity is), every later row is k tuple components followed by a positive
// count. `#` starts a comment line; blank lines and \r\n endings are fine.
// Rows repeating a tuple have their counts summed.
Histogram parse_histogram_csv(std::string_view text);
std::string serialize_histogram_csv(const Histogram& histogram);

// The no-packing baseline numbers: what a dataset costs when every item is
// padded to the componentwise dataset maximum.
struct DatasetStats {
  std::int64_t total_items = 0;
  std::int64_t distinct_bins = 0;
  std::vector<std::int64_t> max;
  std::vector<Rational> mean;
  std::vector<Rational> no_packing_efficiency;  // percent, 100*mean/max
  std::vector<Rational> potential_speedup;      // 100/efficiency
};

DatasetStats stats(const Histogram& histogram);

}  // namespace tuplepack

#endif  // TUPLEPACK_HISTOGRAM_HPP_
