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

#include "tuplepack/sweep.hpp"

#include <atomic>
#include <thread>

namespace tuplepack {

Rational harmonic_mean(const std::vector<Rational>& efficiencies) {
  if (efficiencies.empty()) throw EmptyInputError("harmonic mean of empty list");
  Rational reciprocal_sum(0);
  for (const Rational& e : efficiencies) {
    if (e.is_zero()) return Rational(0);
    reciprocal_sum = reciprocal_sum + Rational(1) / e;
  }
  return Rational(static_cast<std::int64_t>(efficiencies.size())) / reciprocal_sum;
}

namespace {

Rational objective_of(SweepObjective kind, const std::vector<Rational>& eff) {
  switch (kind) {
    case SweepObjective::kHarmonicMean:
      return harmonic_mean(eff);
    case SweepObjective::kMinComponent: {
      Rational m = eff.front();
      for (const Rational& e : eff) {
        if (e < m) m = e;
      }
      return m;
    }
    case SweepObjective::kArithmeticMean: {
      Rational s(0);
      for (const Rational& e : eff) s = s + e;
      return s / Rational(static_cast<std::int64_t>(eff.size()));
    }
  }
  return Rational(0);
}

std::int64_t limits_key(const HeuristicSpec& heuristic, const std::vector<std::int64_t>& limits) {
  return evaluate(heuristic, SizeTuple(limits));
}

}  // namespace

SweepGrid sweep(const Histogram& histogram, const std::vector<AxisRange>& ranges,
                const HeuristicSpec& heuristic, const SweepOptions& options) {
  if (histogram.empty()) throw EmptyInputError("sweep of empty histogram");
  const std::size_t k = histogram.dimension();
  if (ranges.size() != k || heuristic.dimension() != k) {
    throw DimensionError("sweep over " + std::to_string(ranges.size()) +
                         " ranges, histogram dimension " + std::to_string(k));
  }
  const std::vector<std::int64_t> dataset_max = histogram.component_max();

  SweepGrid grid{heuristic, options.objective, {}, {}, std::nullopt};
  grid.axes.resize(k);
  std::size_t cell_count = 1;
  for (std::size_t c = 0; c < k; ++c) {
    const AxisRange& r = ranges[c];
    if (r.step < 1) {
      throw ParseError("step " + std::to_string(r.step) + " for component " + std::to_string(c));
    }
    if (r.from > r.to) {
      throw EmptyInputError("empty range for component " + std::to_string(c));
    }
    if (r.from < dataset_max[c]) {
      throw OversizedItemError("component " + std::to_string(c) + ": from " +
                               std::to_string(r.from) + " is below the dataset maximum " +
                               std::to_string(dataset_max[c]));
    }
    for (std::int64_t v = r.from; v <= r.to; v += r.step) grid.axes[c].push_back(v);
    cell_count *= grid.axes[c].size();
  }

  grid.cells.resize(cell_count);
  // Odometer in lexicographic order; cell i owns slot i, so assembly does
  // not depend on evaluation order.
  auto limits_at = [&](std::size_t index) {
    std::vector<std::int64_t> limits(k);
    for (std::size_t c = k; c-- > 0;) {
      limits[c] = grid.axes[c][index % grid.axes[c].size()];
      index /= grid.axes[c].size();
    }
    return limits;
  };

  PackOptions pack_options;
  pack_options.max_tuples_per_pack = options.max_tuples_per_pack;
  pack_options.time_budget = options.per_cell_time_budget;

  auto evaluate_cell = [&](std::size_t index) {
    SweepCell cell;
    cell.limits = limits_at(index);
    try {
      PackingResult result = pack(histogram, Limits(cell.limits), heuristic, pack_options);
      cell.efficiency = std::move(result.efficiency);
      cell.objective = objective_of(options.objective, cell.efficiency);
      cell.num_packs = result.num_packs;
    } catch (const Error& e) {
      cell.failure = e.what();
      cell.efficiency.assign(k, Rational(0));
      cell.objective = Rational(0);
      cell.num_packs = 0;
    }
    grid.cells[index] = std::move(cell);
  };

  unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(cell_count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cell_count; ++i) evaluate_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < cell_count; i = next.fetch_add(1)) {
          evaluate_cell(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  for (std::size_t i = 0; i < cell_count; ++i) {
    const SweepCell& cell = grid.cells[i];
    if (cell.failed()) continue;
    if (!grid.best_index) {
      grid.best_index = i;
      continue;
    }
    const SweepCell& best = grid.cells[*grid.best_index];
    if (best.objective < cell.objective) {
      grid.best_index = i;
    } else if (cell.objective == best.objective) {
      const std::int64_t cell_key = limits_key(heuristic, cell.limits);
      const std::int64_t best_key = limits_key(heuristic, best.limits);
      if (cell_key < best_key || (cell_key == best_key && cell.limits < best.limits)) {
        grid.best_index = i;
      }
    }
  }
  return grid;
}

std::pair<std::vector<std::int64_t>, SweepCell> select_best(const SweepGrid& grid,
                                                            SelectRule rule, Rational target) {
  if (grid.cells.empty()) throw EmptyInputError("selection from empty grid");
  if (rule == SelectRule::kMaxObjective) {
    if (!grid.best_index) throw NoFeasibleCellError("every cell failed");
    const SweepCell& best = grid.cells[*grid.best_index];
    return {best.limits, best};
  }
  const SweepCell* chosen = nullptr;
  std::int64_t chosen_key = 0;
  for (const SweepCell& cell : grid.cells) {
    if (cell.failed()) continue;
    bool meets = true;
    for (const Rational& e : cell.efficiency) {
      if (e < target) {
        meets = false;
        break;
      }
    }
    if (!meets) continue;
    const std::int64_t key = limits_key(grid.heuristic, cell.limits);
    if (chosen == nullptr || key < chosen_key ||
        (key == chosen_key && cell.limits < chosen->limits)) {
      chosen = &cell;
      chosen_key = key;
    }
  }
  if (chosen == nullptr) {
    throw NoFeasibleCellError("no cell reaches efficiency " + target.format_fixed(1) +
                              " in every component");
  }
  return {chosen->limits, *chosen};
}

ScaleProbeResult scale_probe(const Histogram& histogram, const Limits& base_limits,
                             const Rational& factor_step, const Rational& target,
                             const HeuristicSpec& heuristic, const SweepOptions& options,
                             const Rational& ceiling) {
  if (histogram.empty()) throw EmptyInputError("scale probe of empty histogram");
  if (!(Rational(0) < factor_step)) throw ParseError("factor step must be > 0");
  const std::vector<std::int64_t> dataset_max = histogram.component_max();
  for (std::size_t c = 0; c < dataset_max.size(); ++c) {
    if (base_limits[c] < dataset_max[c]) {
      throw OversizedItemError("component " + std::to_string(c) + ": base limit " +
                               std::to_string(base_limits[c]) +
                               " is below the dataset maximum " +
                               std::to_string(dataset_max[c]));
    }
  }

  PackOptions pack_options;
  pack_options.max_tuples_per_pack = options.max_tuples_per_pack;
  pack_options.time_budget = options.per_cell_time_budget;

  for (Rational factor(1); factor <= ceiling; factor = factor + factor_step) {
    std::vector<std::int64_t> limits(base_limits.dimension());
    for (std::size_t c = 0; c < limits.size(); ++c) {
      const Rational scaled = factor * Rational(base_limits[c]);
      limits[c] = (scaled.numerator() + scaled.denominator() - 1) / scaled.denominator();
    }
    PackingResult result = pack(histogram, Limits(limits), heuristic, pack_options);
    for (const Rational& e : result.efficiency) {
      if (e >= target) {
        return ScaleProbeResult{factor, std::move(limits), std::move(result.efficiency)};
      }
    }
  }
  throw NoFeasibleCellError("no factor up to " + ceiling.format_fixed(2) +
                            " reaches efficiency " + target.format_fixed(1));
}

}  // namespace tuplepack
