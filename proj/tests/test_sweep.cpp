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

#include <cmath>

#include "doctest.h"
#include "testutil.hpp"
#include "tuplepack/sweep.hpp"

using namespace tuplepack;

namespace {

const HeuristicSpec kProduct2 = HeuristicSpec::reduce(HeuristicKind::kProduct, 2);

Histogram crossed_pairs() {
  return Histogram::from_bins({{SizeTuple{2, 3}, 2}, {SizeTuple{3, 2}, 2}});
}

SweepOptions serial(std::int64_t max_tuples) {
  SweepOptions o;
  o.max_tuples_per_pack = max_tuples;
  o.workers = 1;
  return o;
}

}  // namespace

TEST_CASE("harmonic mean") {
  CHECK(std::abs(harmonic_mean({Rational(761, 10), Rational(58)}).to_double() - 65.8) < 0.05);
  CHECK(std::abs(harmonic_mean({Rational(493, 5), Rational(99)}).to_double() - 98.8) < 0.05);
  CHECK(harmonic_mean({Rational(37), Rational(37)}) == Rational(37));
  CHECK(harmonic_mean({Rational(50), Rational(0)}) == Rational(0));
  CHECK_THROWS_AS(harmonic_mean({}), EmptyInputError);
}

TEST_CASE("sweep over a 2x2 grid") {
  const SweepGrid grid = sweep(crossed_pairs(), {{4, 5, 1}, {4, 5, 1}}, kProduct2, serial(2));
  REQUIRE(grid.cells.size() == 4);
  REQUIRE(grid.axes[0] == std::vector<std::int64_t>{4, 5});

  // lexicographic cell order: (4,4), (4,5), (5,4), (5,5)
  CHECK(grid.cells[0].limits == std::vector<std::int64_t>{4, 4});
  CHECK(grid.cells[0].objective == Rational(250, 3));  // 83.33..
  CHECK(grid.cells[0].objective.format_fixed(1) == "83.3");
  CHECK(grid.cells[0].num_packs == 4);
  CHECK(grid.cells[3].limits == std::vector<std::int64_t>{5, 5});
  CHECK(grid.cells[3].efficiency[0] == Rational(100));
  CHECK(grid.cells[3].efficiency[1] == Rational(100));
  CHECK(grid.cells[3].num_packs == 2);
  REQUIRE(grid.best_index.has_value());
  CHECK(*grid.best_index == 3);

  SUBCASE("select best") {
    const auto [limits, cell] = select_best(grid, SelectRule::kMaxObjective);
    CHECK(limits == std::vector<std::int64_t>{5, 5});
    const auto [tlimits, tcell] =
        select_best(grid, SelectRule::kSmallestMeetingTarget, Rational(95));
    CHECK(tlimits == std::vector<std::int64_t>{5, 5});
    CHECK_THROWS_AS(select_best(grid, SelectRule::kSmallestMeetingTarget, Rational(101)),
                    NoFeasibleCellError);
  }
}

TEST_CASE("1x1 grid equals a single pack run") {
  const Histogram h = crossed_pairs();
  const SweepGrid grid = sweep(h, {{5, 5, 1}, {5, 5, 1}}, kProduct2, serial(2));
  REQUIRE(grid.cells.size() == 1);
  const PackingResult direct = pack(h, Limits{5, 5}, kProduct2,
                                    PackOptions{2, PackMode::kLongestPackFirst, {}});
  CHECK(grid.cells[0].efficiency == direct.efficiency);
  CHECK(grid.cells[0].num_packs == direct.num_packs);
}

TEST_CASE("sweep validation errors") {
  const Histogram h = crossed_pairs();
  CHECK_THROWS_AS(sweep(h, {{5, 4, 1}, {4, 5, 1}}, kProduct2, serial(2)), EmptyInputError);
  CHECK_THROWS_AS(sweep(h, {{4, 5, 0}, {4, 5, 1}}, kProduct2, serial(2)), ParseError);
  CHECK_THROWS_AS(sweep(Histogram(), {{4, 5, 1}}, kProduct2, serial(2)), EmptyInputError);
  try {
    sweep(h, {{4, 5, 1}, {2, 5, 1}}, kProduct2, serial(2));
    FAIL("expected OversizedItemError");
  } catch (const OversizedItemError& e) {
    CHECK(std::string(e.what()).find("component 1") != std::string::npos);
  }
}

TEST_CASE("serial and parallel sweeps agree cell for cell") {
  tptest::Rng rng(0x9A9A);
  const Histogram h = tptest::random_histogram(rng, 2, 40, 12, 30);
  const auto max = h.component_max();
  const std::vector<AxisRange> ranges = {{max[0], max[0] + 7, 1}, {max[1], max[1] + 5, 2}};
  SweepOptions par = serial(3);
  par.workers = 8;
  const SweepGrid a = sweep(h, ranges, kProduct2, serial(3));
  const SweepGrid b = sweep(h, ranges, kProduct2, par);
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CHECK(a.cells[i].limits == b.cells[i].limits);
    CHECK(a.cells[i].efficiency == b.cells[i].efficiency);
    CHECK(a.cells[i].objective == b.cells[i].objective);
    CHECK(a.cells[i].num_packs == b.cells[i].num_packs);
  }
  CHECK(a.best_index == b.best_index);
}

TEST_CASE("extending an axis never changes shared cells") {
  tptest::Rng rng(0x600D);
  const Histogram h = tptest::random_histogram(rng, 2, 25, 10, 20);
  const auto max = h.component_max();
  const SweepGrid small =
      sweep(h, {{max[0], max[0] + 2, 1}, {max[1], max[1] + 2, 1}}, kProduct2, serial(2));
  const SweepGrid large =
      sweep(h, {{max[0], max[0] + 4, 1}, {max[1], max[1] + 3, 1}}, kProduct2, serial(2));
  for (const SweepCell& cell : small.cells) {
    const auto match = std::find_if(large.cells.begin(), large.cells.end(),
                                    [&](const SweepCell& c) { return c.limits == cell.limits; });
    REQUIRE(match != large.cells.end());
    CHECK(match->efficiency == cell.efficiency);
    CHECK(match->objective == cell.objective);
    CHECK(match->num_packs == cell.num_packs);
  }
}

TEST_CASE("select_best(max) agrees with an exhaustive scan") {
  tptest::Rng rng(0xE5C4);
  const Histogram h = tptest::random_histogram(rng, 2, 20, 8, 15);
  const auto max = h.component_max();
  const SweepGrid grid =
      sweep(h, {{max[0], max[0] + 3, 1}, {max[1], max[1] + 3, 1}}, kProduct2, serial(3));
  const auto [limits, cell] = select_best(grid, SelectRule::kMaxObjective);
  for (const SweepCell& other : grid.cells) {
    if (other.failed()) continue;
    CHECK(other.objective <= cell.objective);
  }
}

TEST_CASE("alternative objectives") {
  const SweepGrid grid = sweep(crossed_pairs(), {{4, 4, 1}, {5, 5, 1}}, kProduct2, [] {
    SweepOptions o;
    o.max_tuples_per_pack = 2;
    o.workers = 1;
    o.objective = SweepObjective::kMinComponent;
    return o;
  }());
  REQUIRE(grid.cells.size() == 1);
  // cell (4,5): packs [(3,2)]x2 and [(2,3)]x2, realized (3,3): eff (83.3, 83.3)
  CHECK(grid.cells[0].objective == Rational(250, 3));
}

TEST_CASE("scale probe") {
  const Histogram h = crossed_pairs();
  SUBCASE("finds the first workable factor") {
    const ScaleProbeResult r = scale_probe(h, Limits{4, 4}, Rational(1, 4), Rational(95),
                                           kProduct2, serial(2));
    CHECK(r.factor == Rational(5, 4));
    CHECK(r.limits == std::vector<std::int64_t>{5, 5});
    CHECK(r.efficiency[0] == Rational(100));
    CHECK(r.efficiency[1] == Rational(100));
  }
  SUBCASE("target zero is satisfied by the base limits") {
    const ScaleProbeResult r =
        scale_probe(h, Limits{4, 4}, Rational(1, 4), Rational(0), kProduct2, serial(2));
    CHECK(r.factor == Rational(1));
    CHECK(r.limits == std::vector<std::int64_t>{4, 4});
  }
  SUBCASE("unreachable target") {
    CHECK_THROWS_AS(scale_probe(h, Limits{4, 4}, Rational(1, 4), Rational(101), kProduct2,
                                serial(2)),
                    NoFeasibleCellError);
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(scale_probe(h, Limits{2, 4}, Rational(1, 4), Rational(95), kProduct2,
                                serial(2)),
                    OversizedItemError);
    CHECK_THROWS_AS(scale_probe(h, Limits{4, 4}, Rational(0), Rational(95), kProduct2,
                                serial(2)),
                    ParseError);
  }
}

TEST_CASE("overflowing cells are recorded as failed, not skipped") {
  const Histogram h = Histogram::from_bins({{SizeTuple{2, 2}, 1}});
  const std::int64_t big = std::int64_t(1) << 40;  // big*big overflows the key
  const SweepGrid grid = sweep(h, {{big, big, 1}, {big, big + 1, 1}}, kProduct2, serial(2));
  REQUIRE(grid.cells.size() == 2);
  CHECK(grid.cells[0].failed());
  CHECK(grid.cells[1].failed());
  CHECK(grid.cells[0].objective == Rational(0));
  CHECK(!grid.best_index.has_value());
  CHECK_THROWS_AS(select_best(grid, SelectRule::kMaxObjective), NoFeasibleCellError);
}
