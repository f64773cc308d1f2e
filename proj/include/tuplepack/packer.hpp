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

#ifndef TUPLEPACK_PACKER_HPP_
#define TUPLEPACK_PACKER_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "tuplepack/heuristic.hpp"
#include "tuplepack/histogram.hpp"
#include "tuplepack/rational.hpp"
#include "tuplepack/types.hpp"

namespace tuplepack {

// One pack content: the tuples combined into a single pack, plus how many
// identical packs repeat this combination.
struct Strategy {
  std::vector<SizeTuple> tuples;
  std::int64_t count = 0;

  bool operator==(const Strategy&) const = default;
};

struct PackingResult {
  std::vector<Strategy> strategies;
  Limits requested_limits;
  // Componentwise maximum pack sum. At most the requested limits; the
  // efficiency denominator after discrepancy reduction.
  std::vector<std::int64_t> realized_limits;
  std::int64_t num_packs = 0;
  std::vector<std::int64_t> empty_slots;
  std::vector<Rational> efficiency;  // percent, exact
};

// longest-pack-first scans the fullest open packs first (best-fit style),
// shortest-pack-first scans the emptiest first (first-fit style).
enum class PackMode { kLongestPackFirst, kShortestPackFirst };

struct PackOptions {
  // Upper bound on tuples combined per pack; nullopt derives it from the
  // smallest limit component.
  std::optional<std::int64_t> max_tuples_per_pack;
  PackMode mode = PackMode::kLongestPackFirst;
  // Hard wall-clock budget for one run; exceeded -> TimeoutError.
  std::optional<std::chrono::milliseconds> time_budget;
};

// Tuple longest-pack-first histogram-packing.
//
// Bins are sorted by (heuristic key, components, count) descending and
// distributed one at a time. Open packs live in buckets keyed by the
// heuristic value of their remaining capacity. For an incoming bin with key s
// and remaining count c, bucket keys are scanned upward from the smallest
// existing key >= s (downward from the largest in shortest-pack-first mode);
// at each key the first pack the bin fits into componentwise absorbs
// min(pack.count, c) copies, any residual pack count is split off, and the
// merged pack is re-bucketed under its new remainder key (packs with
// remainder key 0 or max_tuples_per_pack tuples are finalized). While c > 0
// the scan restarts from the bottom; a restart lands on keys >= s+1, so a
// second perfect-fit bucket at exactly s is not revisited. If no open pack
// fits, one strategy with the bin alone carries the entire remaining count --
// copies of a bin never merge with each other at this point.
//
// Efficiency uses the realized limits (componentwise maximum pack sum) as
// denominator. Deterministic for equal inputs.
//
// Throws EmptyInputError, DimensionError, OversizedItemError (a bin exceeds
// the limits), OverflowError (heuristic key of the limits), TimeoutError.
PackingResult pack(const Histogram& histogram, const Limits& limits,
                   const HeuristicSpec& heuristic, const PackOptions& options = {});

struct EfficiencyReport {
  std::vector<std::int64_t> realized_limits;
  std::vector<std::int64_t> empty_slots;
  std::vector<Rational> efficiency;
  std::int64_t num_packs = 0;
};

// Realized limits, padding and per-component efficiency of an existing
// strategy set against requested limits.
EfficiencyReport efficiency(const std::vector<Strategy>& strategies, const Limits& requested);

enum class BaselineMode {
  kNone,             // every item alone in its own pack
  kSingleComponent,  // classic 1D packing on one component, others uncapped
};

// Comparison baselines. kNone ignores component/component_limit. For
// kSingleComponent the chosen component is packed with a projection
// heuristic against component_limit while every other component's capacity
// is set to the histogram's total sum of that component, a finite stand-in
// for "no limit" that can never bind; ignored components may therefore
// exceed the dataset maximum.
PackingResult baseline(const Histogram& histogram, BaselineMode mode, std::size_t component,
                       std::int64_t component_limit, const PackOptions& options = {});

}  // namespace tuplepack

#endif  // TUPLEPACK_PACKER_HPP_
