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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "testutil.hpp"
#include "tuplepack/heatmap.hpp"
#include "tuplepack/io.hpp"
#include "tuplepack/oracle.hpp"
#include "tuplepack/sweep.hpp"

using namespace tuplepack;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  std::function<std::string()> run;  // returns detail; throws on failure
  bool failed = false;
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

// ---- criterion 1: conservation & capacity over randomized histograms ----

std::string criterion_conservation() {
  const auto start = Clock::now();
  tptest::Rng rng(0xACC1);
  const std::vector<HeuristicKind> kinds = {HeuristicKind::kMin, HeuristicKind::kMax,
                                            HeuristicKind::kSum, HeuristicKind::kProduct};
  int runs = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = static_cast<std::size_t>(rng.range(1, 3));
    const Histogram h = tptest::random_histogram(rng, k, 50, 30, 100);
    const auto max = h.component_max();
    std::vector<std::int64_t> caps(k);
    for (std::size_t c = 0; c < k; ++c) {
      caps[c] = std::max<std::int64_t>(1, max[c]) + rng.range(0, 10);
    }
    const Limits limits(caps);
    const std::int64_t max_tuples = rng.range(1, 8);
    HeuristicSpec heuristic = i % 5 == 4
                                  ? HeuristicSpec::projection(
                                        static_cast<std::size_t>(rng.range(0, k - 1)), k)
                                  : HeuristicSpec::reduce(kinds[i % 4], k);
    PackOptions options;
    options.max_tuples_per_pack = max_tuples;
    options.mode = i % 2 == 0 ? PackMode::kLongestPackFirst : PackMode::kShortestPackFirst;
    const PackingResult r = pack(h, limits, heuristic, options);
    expect(tptest::conserves(h, r), "conservation violated at trial " + std::to_string(i));
    expect(tptest::respects_capacity(r, limits, max_tuples),
           "capacity violated at trial " + std::to_string(i));
    ++runs;
  }
  const double elapsed = seconds_since(start);
  expect(elapsed < 60.0, "took " + fmt_seconds(elapsed) + ", budget 60s");
  return std::to_string(runs) + " histograms, zero violations, " + fmt_seconds(elapsed);
}

// ---- criterion 2: oracle dominance & exact efficiency recomputation ----

// independent of EfficiencyReport: plain arithmetic over the strategy set
void recheck_efficiency(const PackingResult& r) {
  const std::size_t k = r.requested_limits.dimension();
  std::int64_t packs = 0;
  std::vector<std::int64_t> realized(k, 0);
  for (const Strategy& s : r.strategies) {
    packs += s.count;
    for (std::size_t c = 0; c < k; ++c) {
      std::int64_t sum = 0;
      for (const SizeTuple& t : s.tuples) sum += t[c];
      realized[c] = std::max(realized[c], sum);
    }
  }
  expect(packs == r.num_packs, "pack count mismatch");
  expect(realized == r.realized_limits, "realized limits mismatch");
  for (std::size_t c = 0; c < k; ++c) {
    std::int64_t empty = 0;
    for (const Strategy& s : r.strategies) {
      std::int64_t sum = 0;
      for (const SizeTuple& t : s.tuples) sum += t[c];
      empty += s.count * (realized[c] - sum);
    }
    expect(empty == r.empty_slots[c], "empty slot recount mismatch");
    const std::int64_t total = realized[c] * packs;
    const Rational expected =
        total == 0 ? Rational(100)
                   : Rational::make(static_cast<__int128>(100) * (total - empty), total);
    expect(expected == r.efficiency[c], "efficiency recount mismatch");
  }
}

std::string criterion_oracle() {
  tptest::Rng rng(0xACC2);
  int trials = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = static_cast<std::size_t>(rng.range(1, 3));
    std::vector<std::int64_t> caps(k);
    for (std::size_t c = 0; c < k; ++c) caps[c] = rng.range(3, 12);
    const Limits limits(caps);
    std::vector<SizeTuple> items;
    const int n = static_cast<int>(rng.range(1, 8));
    for (int j = 0; j < n; ++j) {
      std::vector<std::int64_t> comps(k);
      bool nonzero = false;
      for (std::size_t c = 0; c < k; ++c) {
        comps[c] = rng.range(0, caps[c]);
        nonzero = nonzero || comps[c] > 0;
      }
      if (!nonzero) comps[0] = 1;
      items.push_back(SizeTuple(comps));
    }
    const std::int64_t max_tuples = rng.range(1, 6);
    const HeuristicSpec heuristic =
        HeuristicSpec::reduce(i % 2 == 0 ? HeuristicKind::kProduct : HeuristicKind::kSum, k);
    const std::int64_t optimum = exact_min_packs(items, limits, max_tuples);
    PackOptions options;
    options.max_tuples_per_pack = max_tuples;
    const PackingResult histo = pack(Histogram::from_items(items), limits, heuristic, options);
    const PackingResult ffd = ffd_items(items, limits, heuristic, max_tuples);
    expect(histo.num_packs >= optimum, "histogram packer beat the exact optimum");
    expect(ffd.num_packs >= optimum, "ffd beat the exact optimum");
    recheck_efficiency(histo);
    recheck_efficiency(ffd);
    ++trials;
  }
  return std::to_string(trials) + " instances, optimum never undercut, efficiencies exact";
}

// ---- criterion 3: heuristic monotonicity ----

std::string criterion_monotonicity() {
  tptest::Rng rng(0xACC3);
  long checked = 0;
  for (std::size_t k : {1u, 2u, 3u}) {
    std::vector<HeuristicSpec> specs = {
        HeuristicSpec::reduce(HeuristicKind::kMin, k),
        HeuristicSpec::reduce(HeuristicKind::kMax, k),
        HeuristicSpec::reduce(HeuristicKind::kSum, k),
        HeuristicSpec::reduce(HeuristicKind::kProduct, k),
        HeuristicSpec::projection(0, k),
    };
    for (const auto& spec : specs) {
      for (int i = 0; i < 10000; ++i) {
        std::vector<std::int64_t> lo(k), hi(k);
        for (std::size_t c = 0; c < k; ++c) {
          lo[c] = rng.range(0, 2000);
          hi[c] = lo[c] + rng.range(0, 2000);
        }
        expect(evaluate(spec, SizeTuple(hi)) >= evaluate(spec, SizeTuple(lo)),
               "monotonicity violated for " + spec.name());
        ++checked;
      }
    }
  }
  // strict variants
  const HeuristicSpec sum2 = HeuristicSpec::reduce(HeuristicKind::kSum, 2);
  const HeuristicSpec prod2 = HeuristicSpec::reduce(HeuristicKind::kProduct, 2);
  for (int i = 0; i < 10000; ++i) {
    std::vector<std::int64_t> lo = {rng.range(1, 2000), rng.range(1, 2000)};
    std::vector<std::int64_t> hi = lo;
    hi[static_cast<std::size_t>(rng.range(0, 1))] += rng.range(1, 50);
    expect(evaluate(sum2, SizeTuple(hi)) > evaluate(sum2, SizeTuple(lo)),
           "sum not strictly monotone");
    expect(evaluate(prod2, SizeTuple(hi)) > evaluate(prod2, SizeTuple(lo)),
           "product not strictly monotone on positive tuples");
    checked += 2;
  }
  return std::to_string(checked) + " dominated pairs";
}

// ---- criterion 4: paper arithmetic anchors ----

std::string criterion_anchors() {
  std::string detail;
  const double hm1 = harmonic_mean({Rational(761, 10), Rational(58)}).to_double();
  expect(std::abs(hm1 - 65.8) <= 0.05,
         "harmonic_mean(76.1, 58.0) = " + std::to_string(hm1) + ", want 65.8 +- 0.05");
  const double hm2 = harmonic_mean({Rational(493, 5), Rational(99)}).to_double();
  expect(std::abs(hm2 - 98.8) <= 0.05,
         "harmonic_mean(98.6, 99.0) = " + std::to_string(hm2) + ", want 98.8 +- 0.05");
  expect(evaluate(HeuristicSpec::reduce(HeuristicKind::kProduct, 2), {41, 21}) == 861,
         "product key of (41, 21) is not 861");

  // speedup column from the efficiency column, five datasets
  struct Row {
    const char* name;
    const char* eff[2];
    double speedup[2];
  };
  const std::vector<Row> table = {
      {"molhiv", {"11.4", "10.8"}, {8.8, 9.3}},
      {"molpcba", {"8.21", "8.71"}, {12.2, 11.5}},
      {"code2", {"0.35", "0.34"}, {288.8, 291.2}},
      {"pcqm4mv2", {"27.7", "24.7"}, {3.6, 4.1}},
      {"ppa", {"81.1", "12.6"}, {1.23, 7.95}},
  };
  std::string drift;
  for (const Row& row : table) {
    for (int c = 0; c < 2; ++c) {
      const Rational eff = Rational::from_decimal(row.eff[c]);
      const double computed = (Rational(100) / eff).to_double();
      const double delta = std::abs(computed - row.speedup[c]);
      if (delta > 0.1) {
        drift += std::string(drift.empty() ? "" : "; ") + row.name + "[" +
                 std::to_string(c) + "]: 100/" + row.eff[c] + " = " +
                 std::to_string(computed) + " vs table " + std::to_string(row.speedup[c]) +
                 " (off by " + std::to_string(delta) + ")";
      }
    }
  }
  expect(drift.empty(),
         "speedup = 100/efficiency drifts beyond +-0.1: " + drift +
             " -- the table's 2-significant-digit efficiency entries cannot reproduce a "
             "speedup near 290 at this tolerance");
  return "harmonic means, product key and all five speedup rows within tolerance";
}

// ---- criterion 5: deterministic goldens ----

std::string criterion_goldens() {
  struct Example {
    Histogram histogram;
    Limits limits;
    HeuristicSpec heuristic;
    std::int64_t max_tuples;
  };
  const std::vector<Example> examples = {
      {Histogram::from_bins({{SizeTuple{3, 4}, 2}, {SizeTuple{2, 2}, 1}}), Limits{6, 8},
       HeuristicSpec::reduce(HeuristicKind::kProduct, 2), 3},
      {Histogram::from_bins({{SizeTuple{3, 4}, 1}}), Limits{3, 4},
       HeuristicSpec::reduce(HeuristicKind::kProduct, 2), 1},
      {Histogram::from_bins({{SizeTuple{2, 2}, 4}}), Limits{4, 4},
       HeuristicSpec::reduce(HeuristicKind::kProduct, 2), 2},
      {Histogram::from_bins(
           {{SizeTuple{1, 1}, 1}, {SizeTuple{2, 2}, 1}, {SizeTuple{3, 3}, 1}}),
       Limits{6, 6}, HeuristicSpec::reduce(HeuristicKind::kSum, 2), 3},
  };
  // frozen from the hand-derived executions
  const std::vector<std::vector<std::int64_t>> expected_realized = {
      {5, 6}, {3, 4}, {2, 2}, {6, 6}};
  const std::vector<std::int64_t> expected_packs = {2, 1, 4, 1};

  for (std::size_t i = 0; i < examples.size(); ++i) {
    const Example& e = examples[i];
    PackOptions options;
    options.max_tuples_per_pack = e.max_tuples;
    const PackingResult first = pack(e.histogram, e.limits, e.heuristic, options);
    const PackingResult second = pack(e.histogram, e.limits, e.heuristic, options);
    const std::string json_first = write_strategies_json(first);
    const std::string json_second = write_strategies_json(second);
    expect(json_first == json_second, "example " + std::to_string(i) +
                                          " not byte-identical across two runs");
    expect(first.realized_limits == expected_realized[i],
           "example " + std::to_string(i) + " realized limits drifted");
    expect(first.num_packs == expected_packs[i],
           "example " + std::to_string(i) + " pack count drifted");
  }

  // serial vs parallel sweep execution must serialize identically
  const Histogram h = examples[0].histogram;
  SweepOptions serial;
  serial.workers = 1;
  serial.max_tuples_per_pack = 3;
  SweepOptions parallel = serial;
  parallel.workers = 8;
  const std::string csv_serial =
      write_grid_csv(to_grid_table(sweep(h, {{6, 9, 1}, {8, 11, 1}},
                                         examples[0].heuristic, serial)));
  const std::string csv_parallel =
      write_grid_csv(to_grid_table(sweep(h, {{6, 9, 1}, {8, 11, 1}},
                                         examples[0].heuristic, parallel)));
  expect(csv_serial == csv_parallel, "serial and parallel sweeps serialize differently");
  return "4 pack goldens and serial/parallel sweep CSV byte-identical";
}

// ---- criterion 6: 1D equivalence ----

std::string criterion_1d() {
  tptest::Rng rng(0xACC6);
  const std::vector<HeuristicSpec> specs = {
      HeuristicSpec::reduce(HeuristicKind::kProduct, std::vector<std::int64_t>{1}),
      HeuristicSpec::reduce(HeuristicKind::kSum, std::vector<std::int64_t>{2}),
      HeuristicSpec::reduce(HeuristicKind::kMax, std::vector<std::int64_t>{3}),
      HeuristicSpec::projection(0, std::vector<std::int64_t>{1}),
  };
  int trials = 0;
  for (int i = 0; i < 120; ++i) {
    const Histogram h = tptest::random_histogram(rng, 1, 40, 60, 50);
    const std::int64_t limit = h.component_max()[0] + rng.range(0, 30);
    const std::int64_t max_tuples = rng.range(1, 10);
    std::map<std::int64_t, std::int64_t> hist1d;
    for (const auto& [tuple, count] : h.bins()) hist1d[tuple[0]] = count;
    const tptest::Ref1DResult expected =
        tptest::ref1d_longest_pack_first(hist1d, limit, max_tuples);
    PackOptions options;
    options.max_tuples_per_pack = max_tuples;
    const PackingResult actual =
        pack(h, Limits{limit}, specs[static_cast<std::size_t>(i) % specs.size()], options);
    expect(actual.num_packs == expected.num_packs,
           "pack count diverged from the direct 1D implementation at trial " +
               std::to_string(i));
    expect(actual.efficiency[0] == expected.efficiency,
           "efficiency diverged from the direct 1D implementation at trial " +
               std::to_string(i));
    ++trials;
  }
  return std::to_string(trials) + " random 1D histograms, identical packs and efficiency";
}

// ---- criterion 7: performance ceilings ----

Histogram synthetic_molecule_histogram() {
  // 19 node values x 8 edge offsets = 152 bins
  std::vector<std::pair<SizeTuple, std::int64_t>> bins;
  for (std::int64_t n = 4; n <= 22; ++n) {
    for (std::int64_t e = n; e <= n + 7; ++e) {
      bins.emplace_back(SizeTuple{n, e}, 1 + (n * 7 + e) % 97);
    }
  }
  return Histogram::from_bins(bins);
}

std::string criterion_performance() {
  tptest::Rng rng(0xACC7);
  std::vector<std::pair<SizeTuple, std::int64_t>> bins;
  while (bins.size() < 200) {
    bins.emplace_back(SizeTuple{rng.range(1, 64), rng.range(0, 128)}, rng.range(1, 50));
  }
  const Histogram big = Histogram::from_bins(bins);
  PackOptions options;
  options.max_tuples_per_pack = 256;
  const auto pack_start = Clock::now();
  const PackingResult r =
      pack(big, Limits{64, 128}, HeuristicSpec::reduce(HeuristicKind::kProduct, 2), options);
  const double pack_elapsed = seconds_since(pack_start);
  expect(r.num_packs > 0, "empty packing");
  expect(pack_elapsed < 1.0, "pack took " + fmt_seconds(pack_elapsed) + ", budget 1s");

  const Histogram mol = synthetic_molecule_histogram();
  expect(mol.distinct_bins() == 152, "synthetic histogram is not 152 bins");
  SweepOptions sweep_options;
  sweep_options.max_tuples_per_pack = 256;
  const auto sweep_start = Clock::now();
  const SweepGrid grid = sweep(mol, {{22, 61, 1}, {29, 88, 1}},
                               HeuristicSpec::reduce(HeuristicKind::kProduct, 2),
                               sweep_options);
  const double sweep_elapsed = seconds_since(sweep_start);
  expect(grid.cells.size() == 40 * 60, "grid is not 40x60");
  for (const SweepCell& cell : grid.cells) {
    expect(!cell.failed(), "cell failed: " + cell.failure);
  }
  expect(sweep_elapsed < 60.0, "sweep took " + fmt_seconds(sweep_elapsed) + ", budget 60s");
  return "pack " + fmt_seconds(pack_elapsed) + " (<1s), 40x60 sweep " +
         fmt_seconds(sweep_elapsed) + " (<60s)";
}

// ---- criterion 8: optional OGB integration ----

std::string ogb_dir() {
  if (const char* env = std::getenv("TUPLEPACK_OGB_DIR")) return env;
  return "data/ogb";
}

bool file_exists(const std::string& path) {
  std::error_code ec;
  return std::filesystem::exists(path, ec);
}

std::string criterion_ogb() {
  const std::string dir = ogb_dir();
  const std::string pcqm = dir + "/pcqm4mv2.csv";
  const std::string molhiv = dir + "/molhiv.csv";
  if (!file_exists(pcqm) || !file_exists(molhiv)) {
    return std::string("SKIP");
  }
  std::string detail;
  {
    const Histogram h = parse_histogram_csv(slurp_file(pcqm));
    PackOptions options;
    options.max_tuples_per_pack = 256;
    const PackingResult r =
        pack(h, Limits{20, 54}, HeuristicSpec::reduce(HeuristicKind::kProduct, 2), options);
    const double e0 = r.efficiency[0].to_double();
    const double e1 = r.efficiency[1].to_double();
    expect(std::abs(e0 - 76.1) <= 0.2 && std::abs(e1 - 58.0) <= 0.2,
           "pcqm4mv2 (20,54) efficiency (" + std::to_string(e0) + ", " + std::to_string(e1) +
               "), want (76.1, 58.0) +- 0.2");

    SweepOptions sweep_options;
    sweep_options.max_tuples_per_pack = 256;
    const SweepGrid grid = sweep(h, {{20, 60, 1}, {54, 120, 1}},
                                 HeuristicSpec::reduce(HeuristicKind::kProduct, 2),
                                 sweep_options);
    const auto [limits, cell] = select_best(grid, SelectRule::kMaxObjective);
    expect(limits == std::vector<std::int64_t>{30, 62},
           "sweep optimum at (" + std::to_string(limits[0]) + ", " +
               std::to_string(limits[1]) + "), want (30, 62)");
    const double b0 = cell.efficiency[0].to_double();
    const double b1 = cell.efficiency[1].to_double();
    expect(std::abs(b0 - 98.6) <= 0.2 && std::abs(b1 - 99.0) <= 0.2,
           "optimum efficiency (" + std::to_string(b0) + ", " + std::to_string(b1) +
               "), want (98.6, 99.0) +- 0.2");
    const double hm = cell.objective.to_double();
    expect(std::abs(hm - 98.8) <= 0.2,
           "optimum harmonic mean " + std::to_string(hm) + ", want 98.8 +- 0.2");
    detail += "pcqm4mv2 ok";
  }
  {
    const Histogram h = parse_histogram_csv(slurp_file(molhiv));
    PackOptions options;
    options.max_tuples_per_pack = 256;
    const PackingResult r = baseline(h, BaselineMode::kSingleComponent, 0, 222, options);
    const double e0 = r.efficiency[0].to_double();
    const double e1 = r.efficiency[1].to_double();
    expect(std::abs(e0 - 98.7) <= 0.2 && std::abs(e1 - 85.9) <= 0.2,
           "molhiv node base (" + std::to_string(e0) + ", " + std::to_string(e1) +
               "), want (98.7, 85.9) +- 0.2");
    detail += ", molhiv node base ok";
  }
  return detail;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 conservation & capacity", criterion_conservation},
      {"2 oracle dominance & exact efficiency", criterion_oracle},
      {"3 heuristic monotonicity", criterion_monotonicity},
      {"4 paper arithmetic anchors", criterion_anchors},
      {"5 deterministic goldens", criterion_goldens},
      {"6 1D equivalence", criterion_1d},
      {"7 performance", criterion_performance},
      {"8 OGB integration (optional)", criterion_ogb},
  };

  bool any_failed = false;
  for (Criterion& criterion : criteria) {
    std::string detail;
    try {
      detail = criterion.run();
    } catch (const std::exception& e) {
      criterion.failed = true;
      detail = e.what();
    }
    if (criterion.failed) {
      any_failed = true;
      std::cout << "[FAIL] criterion " << criterion.name << ": " << detail << "\n";
    } else if (detail == "SKIP") {
      std::cout << "[SKIP] criterion " << criterion.name
                << ": histogram files not present (set TUPLEPACK_OGB_DIR)\n";
    } else {
      std::cout << "[PASS] criterion " << criterion.name << ": " << detail << "\n";
    }
  }
  return any_failed ? 1 : 0;
}
