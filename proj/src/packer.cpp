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

#include "tuplepack/packer.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "checked_reduce.hpp"

namespace tuplepack {
namespace {

using Clock = std::chrono::steady_clock;

struct Bin {
  std::int64_t key = 0;
  const SizeTuple* tuple = nullptr;
  std::int64_t count = 0;
};

// An open or finalized pack: which bins it holds (in insertion order), the
// componentwise sums, and how many identical packs it stands for.
struct Pack {
  std::vector<std::uint32_t> members;
  std::vector<std::int64_t> sums;
  std::int64_t count = 0;
};

bool fits(const std::vector<std::int64_t>& sums, const SizeTuple& tuple, const Limits& limits) {
  for (std::size_t c = 0; c < sums.size(); ++c) {
    std::int64_t next = 0;
    if (__builtin_add_overflow(sums[c], tuple[c], &next) || next > limits[c]) return false;
  }
  return true;
}

std::vector<std::int64_t> remaining(const Limits& limits, const std::vector<std::int64_t>& sums) {
  std::vector<std::int64_t> rest(sums.size());
  for (std::size_t c = 0; c < sums.size(); ++c) rest[c] = limits[c] - sums[c];
  return rest;
}

class Packer {
 public:
  Packer(const Histogram& histogram, const Limits& limits, const HeuristicSpec& heuristic,
         const PackOptions& options)
      : limits_(limits), heuristic_(heuristic), options_(options) {
    if (histogram.empty()) throw EmptyInputError("pack of empty histogram");
    if (histogram.dimension() != limits.dimension() ||
        heuristic.dimension() != limits.dimension()) {
      throw DimensionError("histogram dimension " + std::to_string(histogram.dimension()) +
                           ", limits dimension " + std::to_string(limits.dimension()) +
                           ", heuristic dimension " + std::to_string(heuristic.dimension()));
    }
    max_tuples_ = options.max_tuples_per_pack.value_or(limits.min_capacity());
    if (max_tuples_ < 1) {
      throw ParseError("max tuples per pack must be >= 1, got " + std::to_string(max_tuples_));
    }
    if (options.time_budget) deadline_ = Clock::now() + *options.time_budget;

    // Checked key of the limits; every bin fits the limits componentwise, so
    // by monotonicity all bin and remainder keys below are overflow-free.
    evaluate(heuristic, SizeTuple(limits.capacities()));

    const std::size_t k = limits.dimension();
    const SizeTuple limit_tuple(limits.capacities());
    std::vector<std::vector<std::int64_t>> columns(k);
    bins_.reserve(histogram.distinct_bins());
    for (const auto& [tuple, count] : histogram.bins()) {
      if (!tuple.fits_within(limit_tuple)) {
        throw OversizedItemError("bin " + tuple.to_string() + " exceeds limits " +
                                 limits.to_string());
      }
      bins_.push_back(Bin{0, &tuple, count});
      for (std::size_t c = 0; c < k; ++c) columns[c].push_back(tuple[c]);
    }
    const std::vector<std::int64_t> keys = evaluate_batch_unchecked(heuristic, columns);
    for (std::size_t i = 0; i < bins_.size(); ++i) bins_[i].key = keys[i];

    std::sort(bins_.begin(), bins_.end(), [](const Bin& a, const Bin& b) {
      if (a.key != b.key) return a.key > b.key;
      if (*a.tuple != *b.tuple) return *a.tuple > *b.tuple;
      return a.count > b.count;
    });
  }

  PackingResult run() {
    for (std::uint32_t i = 0; i < bins_.size(); ++i) distribute(i);
    return flatten();
  }

 private:
  void check_deadline() {
    if (deadline_ && Clock::now() > *deadline_) {
      throw TimeoutError("packing exceeded the time budget");
    }
  }

  void distribute(std::uint32_t bin_index) {
    const Bin& bin = bins_[bin_index];
    std::int64_t remaining_count = bin.count;
    std::int64_t floor = bin.key;
    while (remaining_count > 0) {
      check_deadline();
      bool merged = false;
      if (options_.mode == PackMode::kLongestPackFirst) {
        for (auto it = open_.lower_bound(floor); it != open_.end(); ++it) {
          if (try_merge(it, bin_index, remaining_count)) {
            merged = true;
            break;
          }
        }
      } else {
        for (auto it = open_.rbegin(); it != open_.rend() && it->first >= bin.key; ++it) {
          if (try_merge(std::prev(it.base()), bin_index, remaining_count)) {
            merged = true;
            break;
          }
        }
      }
      if (!merged) {
        open_singleton(bin_index, remaining_count);
        return;
      }
      // Restart convention of the reference scan: after a merge the upward
      // scan resumes at keys >= s+1, not s.
      floor = bin.key + 1;
    }
  }

  // First-fit within the bucket at `it`; on success splits off any residual
  // count and re-buckets or finalizes the merged pack.
  bool try_merge(std::map<std::int64_t, std::vector<Pack>>::iterator it,
                 std::uint32_t bin_index, std::int64_t& remaining_count) {
    const SizeTuple& tuple = *bins_[bin_index].tuple;
    std::vector<Pack>& bucket = it->second;
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      if (!fits(bucket[i].sums, tuple, limits_)) continue;
      Pack merged = std::move(bucket[i]);
      bucket.erase(bucket.begin() + static_cast<std::ptrdiff_t>(i));
      const std::int64_t absorbed = std::min(merged.count, remaining_count);
      if (merged.count > absorbed) {
        Pack residual = merged;
        residual.count = merged.count - absorbed;
        bucket.push_back(std::move(residual));
      }
      if (bucket.empty()) open_.erase(it);
      merged.count = absorbed;
      merged.members.push_back(bin_index);
      for (std::size_t c = 0; c < merged.sums.size(); ++c) merged.sums[c] += tuple[c];
      place(std::move(merged));
      remaining_count -= absorbed;
      return true;
    }
    return false;
  }

  void open_singleton(std::uint32_t bin_index, std::int64_t count) {
    const SizeTuple& tuple = *bins_[bin_index].tuple;
    Pack pack;
    pack.members.push_back(bin_index);
    pack.sums = tuple.components();
    pack.count = count;
    place(std::move(pack));  // finalizes at max_tuples == 1 or a zero remainder
  }

  void place(Pack pack) {
    const std::int64_t key = evaluate_unchecked(heuristic_, remaining(limits_, pack.sums));
    if (key == 0 || static_cast<std::int64_t>(pack.members.size()) == max_tuples_) {
      finalized_.push_back(std::move(pack));
    } else {
      open_[key].push_back(std::move(pack));
    }
  }

  PackingResult flatten() {
    std::vector<Strategy> strategies;
    strategies.reserve(finalized_.size() + open_.size());
    auto emit = [&](const Pack& pack) {
      Strategy s;
      s.tuples.reserve(pack.members.size());
      for (std::uint32_t m : pack.members) s.tuples.push_back(*bins_[m].tuple);
      s.count = pack.count;
      strategies.push_back(std::move(s));
    };
    for (const Pack& pack : finalized_) emit(pack);
    for (auto it = open_.rbegin(); it != open_.rend(); ++it) {
      for (const Pack& pack : it->second) emit(pack);
    }

    EfficiencyReport report = efficiency(strategies, limits_);
    PackingResult result{std::move(strategies), limits_,        std::move(report.realized_limits),
                         report.num_packs,      std::move(report.empty_slots),
                         std::move(report.efficiency)};
    return result;
  }

  Limits limits_;
  HeuristicSpec heuristic_;
  PackOptions options_;
  std::int64_t max_tuples_ = 1;
  std::optional<Clock::time_point> deadline_;
  std::vector<Bin> bins_;
  std::map<std::int64_t, std::vector<Pack>> open_;
  std::vector<Pack> finalized_;
};

}  // namespace

PackingResult pack(const Histogram& histogram, const Limits& limits,
                   const HeuristicSpec& heuristic, const PackOptions& options) {
  return Packer(histogram, limits, heuristic, options).run();
}

EfficiencyReport efficiency(const std::vector<Strategy>& strategies, const Limits& requested) {
  if (strategies.empty()) throw EmptyInputError("efficiency of empty strategy list");
  const std::size_t k = requested.dimension();
  std::vector<std::int64_t> counts;
  std::vector<std::vector<std::int64_t>> sum_columns(k);
  counts.reserve(strategies.size());
  for (const Strategy& strategy : strategies) {
    if (strategy.count < 1) {
      throw NegativeCountError("strategy count " + std::to_string(strategy.count));
    }
    if (strategy.tuples.empty()) throw EmptyInputError("strategy without tuples");
    std::vector<std::int64_t> sums(k, 0);
    for (const SizeTuple& tuple : strategy.tuples) {
      if (tuple.dimension() != k) {
        throw DimensionError("strategy tuple " + tuple.to_string() + " vs limits " +
                             requested.to_string());
      }
      for (std::size_t c = 0; c < k; ++c) {
        if (__builtin_add_overflow(sums[c], tuple[c], &sums[c])) {
          throw OverflowError("pack sum exceeds 64 bits");
        }
      }
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (sums[c] > requested[c]) {
        throw OversizedItemError("pack sum " + std::to_string(sums[c]) + " exceeds limit " +
                                 std::to_string(requested[c]) + " in component " +
                                 std::to_string(c));
      }
      sum_columns[c].push_back(sums[c]);
    }
    counts.push_back(strategy.count);
  }

  EfficiencyReport report;
  report.num_packs = detail::safe_sum(counts);
  report.realized_limits.resize(k);
  report.empty_slots.resize(k);
  report.efficiency.reserve(k);
  const auto& ops = kernels::active_ops();
  for (std::size_t c = 0; c < k; ++c) {
    const std::int64_t realized = ops.reduce_max(sum_columns[c].data(), sum_columns[c].size());
    report.realized_limits[c] = realized;
    const std::int64_t used = detail::safe_dot(counts, sum_columns[c]);
    std::int64_t total = 0;
    if (__builtin_mul_overflow(realized, report.num_packs, &total)) {
      throw OverflowError("total capacity exceeds 64 bits");
    }
    report.empty_slots[c] = total - used;
    // All slots of a zero-size component count as used: no padding exists.
    report.efficiency.push_back(
        total == 0 ? Rational(100)
                   : Rational::make(static_cast<__int128>(100) * used, total));
  }
  return report;
}

PackingResult baseline(const Histogram& histogram, BaselineMode mode, std::size_t component,
                       std::int64_t component_limit, const PackOptions& options) {
  if (histogram.empty()) throw EmptyInputError("baseline of empty histogram");
  const std::size_t k = histogram.dimension();

  if (mode == BaselineMode::kNone) {
    std::vector<Strategy> strategies;
    strategies.reserve(histogram.distinct_bins());
    for (const auto& [tuple, count] : histogram.bins()) {
      strategies.push_back(Strategy{{tuple}, count});
    }
    std::vector<std::int64_t> caps = histogram.component_max();
    for (std::int64_t& cap : caps) cap = std::max<std::int64_t>(cap, 1);
    Limits requested(caps);
    EfficiencyReport report = efficiency(strategies, requested);
    return PackingResult{std::move(strategies), requested,
                         std::move(report.realized_limits), report.num_packs,
                         std::move(report.empty_slots), std::move(report.efficiency)};
  }

  if (component >= k) {
    throw DimensionError("baseline component " + std::to_string(component) +
                         " out of range for dimension " + std::to_string(k));
  }
  std::vector<std::int64_t> caps = histogram.component_total();
  for (std::int64_t& cap : caps) cap = std::max<std::int64_t>(cap, 1);
  caps[component] = component_limit;
  return pack(histogram, Limits(caps), HeuristicSpec::projection(component, k), options);
}

}  // namespace tuplepack
