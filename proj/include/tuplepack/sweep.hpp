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

#ifndef TUPLEPACK_SWEEP_HPP_
#define TUPLEPACK_SWEEP_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tuplepack/packer.hpp"

namespace tuplepack {

// Balance-sensitive aggregate of per-component efficiencies: k / sum(1/e_i),
// defined as 0 when any e_i is 0. Throws EmptyInputError on an empty list.
Rational harmonic_mean(const std::vector<Rational>& efficiencies);

enum class SweepObjective { kHarmonicMean, kMinComponent, kArithmeticMean };

// Inclusive integer range from, from+step, ..., <= to.
struct AxisRange {
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t step = 1;
};

struct SweepCell {
  std::vector<std::int64_t> limits;
  std::vector<Rational> efficiency;
  Rational objective;
  std::int64_t num_packs = 0;
  std::string failure;  // non-empty when the pack run failed; never skipped

  bool failed() const { return !failure.empty(); }
};

// Every limit combination of the axes with its packing outcome. Cells are
// stored in lexicographic order of their limits.
struct SweepGrid {
  HeuristicSpec heuristic;
  SweepObjective objective_kind = SweepObjective::kHarmonicMean;
  std::vector<std::vector<std::int64_t>> axes;
  std::vector<SweepCell> cells;
  std::optional<std::size_t> best_index;  // max objective among non-failed cells

  std::size_t dimension() const { return axes.size(); }
};

struct SweepOptions {
  std::optional<std::int64_t> max_tuples_per_pack;
  SweepObjective objective = SweepObjective::kHarmonicMean;
  // 0 = available hardware parallelism. Cell results are independent of the
  // worker count.
  unsigned workers = 0;
  std::optional<std::chrono::milliseconds> per_cell_time_budget;
};

// One pack run per limit combination. Every `from` must be at least the
// histogram's componentwise maximum (smaller cells would reject the
// histogram); failed cells are recorded with their cause.
SweepGrid sweep(const Histogram& histogram, const std::vector<AxisRange>& ranges,
                const HeuristicSpec& heuristic, const SweepOptions& options = {});

enum class SelectRule { kMaxObjective, kSmallestMeetingTarget };

// kMaxObjective: the grid's best cell (ties: smaller heuristic value of the
// limits, then lexicographically smaller limits). kSmallestMeetingTarget:
// the cell with minimal heuristic value of its limits among cells whose
// every component efficiency >= target. Throws NoFeasibleCellError.
std::pair<std::vector<std::int64_t>, SweepCell> select_best(const SweepGrid& grid,
                                                            SelectRule rule,
                                                            Rational target = Rational(0));

struct ScaleProbeResult {
  Rational factor;
  std::vector<std::int64_t> limits;
  std::vector<Rational> efficiency;
};

// Scans factors 1, 1+step, 1+2*step, ... with limits ceil(factor * base) and
// returns the first factor at which at least one component reaches the
// target efficiency -- a cheap bound for a focused sweep. Factors above
// `ceiling` give up with NoFeasibleCellError.
ScaleProbeResult scale_probe(const Histogram& histogram, const Limits& base_limits,
                             const Rational& factor_step, const Rational& target,
                             const HeuristicSpec& heuristic, const SweepOptions& options = {},
                             const Rational& ceiling = Rational(4));

}  // namespace tuplepack

#endif  // TUPLEPACK_SWEEP_HPP_
