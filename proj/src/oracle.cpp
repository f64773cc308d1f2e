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

#include "tuplepack/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace tuplepack {
namespace {

void validate_items(const std::vector<SizeTuple>& items, const Limits& limits) {
  const SizeTuple limit_tuple(limits.capacities());
  for (const SizeTuple& item : items) {
    if (item.dimension() != limits.dimension()) {
      throw DimensionError("item " + item.to_string() + " vs limits " + limits.to_string());
    }
    if (!item.fits_within(limit_tuple)) {
      throw OversizedItemError("item " + item.to_string() + " exceeds limits " +
                               limits.to_string());
    }
  }
}

// ceil(total_c / limit_c), maxed over components, plus the tuple-cap bound.
std::int64_t pack_lower_bound(const std::vector<const SizeTuple*>& items, const Limits& limits,
                              std::int64_t max_tuples) {
  const std::size_t k = limits.dimension();
  std::int64_t bound = (static_cast<std::int64_t>(items.size()) + max_tuples - 1) / max_tuples;
  for (std::size_t c = 0; c < k; ++c) {
    std::int64_t total = 0;
    for (const SizeTuple* item : items) total += (*item)[c];
    bound = std::max(bound, (total + limits[c] - 1) / limits[c]);
  }
  return bound;
}

struct SearchState {
  const std::vector<const SizeTuple*>* items;
  const Limits* limits;
  std::int64_t max_tuples;
  std::int64_t best;
  // per open pack: componentwise sums and item count
  std::vector<std::vector<std::int64_t>> sums;
  std::vector<std::int64_t> pack_sizes;
  // suffix totals per component for the dynamic bound
  std::vector<std::vector<std::int64_t>> suffix_totals;
};

// Extra packs needed for the unplaced suffix even if all open space is used.
std::int64_t dynamic_bound(const SearchState& st, std::size_t next_item) {
  const std::size_t k = st.limits->dimension();
  std::int64_t extra = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::int64_t open_space = 0;
    for (const auto& sums : st.sums) open_space += (*st.limits)[c] - sums[c];
    const std::int64_t rest = st.suffix_totals[c][next_item];
    if (rest > open_space) {
      const std::int64_t deficit = rest - open_space;
      extra = std::max(extra, (deficit + (*st.limits)[c] - 1) / (*st.limits)[c]);
    }
  }
  return extra;
}

void search(SearchState& st, std::size_t next_item) {
  const std::int64_t used = static_cast<std::int64_t>(st.sums.size());
  if (next_item == st.items->size()) {
    st.best = std::min(st.best, used);
    return;
  }
  if (used + dynamic_bound(st, next_item) >= st.best) return;

  const SizeTuple& item = *(*st.items)[next_item];
  const std::size_t k = st.limits->dimension();
  for (std::size_t p = 0; p < st.sums.size(); ++p) {
    if (st.pack_sizes[p] >= st.max_tuples) continue;
    bool fits = true;
    for (std::size_t c = 0; c < k && fits; ++c) {
      fits = st.sums[p][c] + item[c] <= (*st.limits)[c];
    }
    if (!fits) continue;
    for (std::size_t c = 0; c < k; ++c) st.sums[p][c] += item[c];
    ++st.pack_sizes[p];
    search(st, next_item + 1);
    --st.pack_sizes[p];
    for (std::size_t c = 0; c < k; ++c) st.sums[p][c] -= item[c];
  }
  // Opening a pack is only ever tried as the last one, which orders packs by
  // their first item and prunes permuted duplicates.
  if (used + 1 < st.best) {
    st.sums.push_back(item.components());
    st.pack_sizes.push_back(1);
    search(st, next_item + 1);
    st.sums.pop_back();
    st.pack_sizes.pop_back();
  }
}

}  // namespace

std::int64_t exact_min_packs(const std::vector<SizeTuple>& items, const Limits& limits,
                             std::optional<std::int64_t> max_tuples_per_pack,
                             std::size_t cap_items) {
  if (items.size() > cap_items) {
    throw InstanceTooLargeError(std::to_string(items.size()) + " items, cap is " +
                                std::to_string(cap_items));
  }
  if (items.empty()) return 0;
  validate_items(items, limits);
  const std::int64_t max_tuples = max_tuples_per_pack.value_or(limits.min_capacity());

  std::vector<const SizeTuple*> sorted;
  sorted.reserve(items.size());
  for (const SizeTuple& item : items) sorted.push_back(&item);
  std::sort(sorted.begin(), sorted.end(), [](const SizeTuple* a, const SizeTuple* b) {
    const std::int64_t sa = std::accumulate(a->components().begin(), a->components().end(),
                                            static_cast<std::int64_t>(0));
    const std::int64_t sb = std::accumulate(b->components().begin(), b->components().end(),
                                            static_cast<std::int64_t>(0));
    if (sa != sb) return sa > sb;
    return *a > *b;
  });

  SearchState st;
  st.items = &sorted;
  st.limits = &limits;
  st.max_tuples = max_tuples;
  st.best = static_cast<std::int64_t>(items.size());
  const std::size_t k = limits.dimension();
  st.suffix_totals.assign(k, std::vector<std::int64_t>(items.size() + 1, 0));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = items.size(); i-- > 0;) {
      st.suffix_totals[c][i] = st.suffix_totals[c][i + 1] + (*sorted[i])[c];
    }
  }
  const std::int64_t lb = pack_lower_bound(sorted, limits, max_tuples);
  if (lb >= st.best) return st.best;
  search(st, 0);
  return st.best;
}

PackingResult ffd_items(const std::vector<SizeTuple>& items, const Limits& limits,
                        const HeuristicSpec& heuristic,
                        std::optional<std::int64_t> max_tuples_per_pack) {
  if (items.empty()) throw EmptyInputError("ffd of empty item list");
  validate_items(items, limits);
  const std::int64_t max_tuples = max_tuples_per_pack.value_or(limits.min_capacity());
  if (max_tuples < 1) {
    throw ParseError("max tuples per pack must be >= 1, got " + std::to_string(max_tuples));
  }

  struct Keyed {
    std::int64_t key;
    const SizeTuple* item;
  };
  std::vector<Keyed> order;
  order.reserve(items.size());
  for (const SizeTuple& item : items) order.push_back({evaluate(heuristic, item), &item});
  std::sort(order.begin(), order.end(), [](const Keyed& a, const Keyed& b) {
    if (a.key != b.key) return a.key > b.key;
    return *a.item > *b.item;
  });

  struct OpenPack {
    std::vector<SizeTuple> tuples;
    std::vector<std::int64_t> sums;
  };
  std::vector<OpenPack> packs;
  const std::size_t k = limits.dimension();
  for (const Keyed& keyed : order) {
    const SizeTuple& item = *keyed.item;
    bool placed = false;
    for (OpenPack& pack : packs) {
      if (static_cast<std::int64_t>(pack.tuples.size()) >= max_tuples) continue;
      bool fits = true;
      for (std::size_t c = 0; c < k && fits; ++c) fits = pack.sums[c] + item[c] <= limits[c];
      if (!fits) continue;
      pack.tuples.push_back(item);
      for (std::size_t c = 0; c < k; ++c) pack.sums[c] += item[c];
      placed = true;
      break;
    }
    if (!placed) packs.push_back(OpenPack{{item}, item.components()});
  }

  // Aggregate identical pack contents, keeping first-creation order.
  std::vector<Strategy> strategies;
  for (OpenPack& pack : packs) {
    auto match = std::find_if(strategies.begin(), strategies.end(), [&](const Strategy& s) {
      return s.tuples == pack.tuples;
    });
    if (match != strategies.end()) {
      ++match->count;
    } else {
      strategies.push_back(Strategy{std::move(pack.tuples), 1});
    }
  }

  EfficiencyReport report = efficiency(strategies, limits);
  return PackingResult{std::move(strategies), limits,
                       std::move(report.realized_limits), report.num_packs,
                       std::move(report.empty_slots), std::move(report.efficiency)};
}

}  // namespace tuplepack
