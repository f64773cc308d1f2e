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

#include "tuplepack/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "tuplepack/assignment.hpp"
#include "tuplepack/heatmap.hpp"
#include "tuplepack/histogram.hpp"
#include "tuplepack/io.hpp"
#include "tuplepack/oracle.hpp"
#include "tuplepack/packer.hpp"
#include "tuplepack/sweep.hpp"

namespace tuplepack {
namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> values;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::string_view field(text.data() + start, i - start);
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
        throw ParseError(std::string(what) + ": '" + std::string(field) +
                         "' is not an integer");
      }
      values.push_back(v);
      start = i + 1;
    }
  }
  return values;
}

std::optional<std::int64_t> parse_max_per_pack(const std::string& text) {
  if (text == "max") return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v < 1) {
    throw ParseError("--max-per-pack: expected a positive integer or 'max', got '" + text +
                     "'");
  }
  return v;
}

std::string component_label(std::size_t k, std::size_t c) {
  if (k == 1) return "length";
  if (k == 2) return c == 0 ? "nodes" : "edges";
  return "c" + std::to_string(c + 1);
}

std::string fmt_ints(const std::vector<std::int64_t>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

std::string fmt_percents(const std::vector<Rational>& values, int decimals = 1) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += values[i].format_fixed(decimals);
  }
  return out + ")";
}

unsigned default_workers() {
  if (const char* env = std::getenv("TUPLEPACK_WORKERS")) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), v);
    if (ec == std::errc() && *ptr == '\0' && v > 0) return v;
  }
  return 0;  // let the sweep pick hardware parallelism
}

nlohmann::ordered_json packing_json(const PackingResult& result) {
  nlohmann::ordered_json j;
  j["k"] = result.requested_limits.dimension();
  j["requested_limits"] = result.requested_limits.capacities();
  j["realized_limits"] = result.realized_limits;
  nlohmann::ordered_json eff = nlohmann::ordered_json::array();
  for (const Rational& e : result.efficiency) eff.push_back(e.to_double());
  j["efficiency"] = std::move(eff);
  j["empty_slots"] = result.empty_slots;
  j["num_packs"] = result.num_packs;
  nlohmann::ordered_json strategies = nlohmann::ordered_json::array();
  for (const Strategy& strategy : result.strategies) {
    nlohmann::ordered_json s;
    nlohmann::ordered_json tuples = nlohmann::ordered_json::array();
    for (const SizeTuple& tuple : strategy.tuples) tuples.push_back(tuple.components());
    s["tuples"] = std::move(tuples);
    s["count"] = strategy.count;
    strategies.push_back(std::move(s));
  }
  j["strategies"] = std::move(strategies);
  return j;
}

nlohmann::ordered_json cell_json(const SweepCell& cell) {
  nlohmann::ordered_json c;
  c["limits"] = cell.limits;
  nlohmann::ordered_json eff = nlohmann::ordered_json::array();
  for (const Rational& e : cell.efficiency) eff.push_back(e.to_double());
  c["efficiency"] = std::move(eff);
  c["objective"] = cell.objective.to_double();
  c["num_packs"] = cell.num_packs;
  if (cell.failed()) c["failure"] = cell.failure;
  return c;
}

void report_packing(const PackingResult& result, bool json, std::ostream& out) {
  if (json) {
    out << packing_json(result).dump(2) << "\n";
    return;
  }
  out << "packs:            " << result.num_packs << "\n"
      << "strategies:       " << result.strategies.size() << "\n"
      << "requested limits: " << fmt_ints(result.requested_limits.capacities()) << "\n"
      << "realized limits:  " << fmt_ints(result.realized_limits) << "\n"
      << "empty slots:      " << fmt_ints(result.empty_slots) << "\n"
      << "efficiency (%):   " << fmt_percents(result.efficiency) << "\n";
}

struct StatsArgs {
  std::string histogram_path;
};

int run_stats(const StatsArgs& args, bool json, std::ostream& out) {
  const Histogram h = parse_histogram_csv(slurp_file(args.histogram_path));
  const DatasetStats s = stats(h);
  const std::size_t k = h.dimension();
  if (json) {
    nlohmann::ordered_json j;
    j["total_items"] = s.total_items;
    j["distinct_bins"] = s.distinct_bins;
    j["max"] = s.max;
    nlohmann::ordered_json mean = nlohmann::ordered_json::array();
    nlohmann::ordered_json eff = nlohmann::ordered_json::array();
    nlohmann::ordered_json speedup = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < k; ++c) {
      mean.push_back(s.mean[c].to_double());
      eff.push_back(s.no_packing_efficiency[c].to_double());
      speedup.push_back(s.potential_speedup[c].to_double());
    }
    j["mean"] = std::move(mean);
    j["efficiency"] = std::move(eff);
    j["speedup"] = std::move(speedup);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "items:          " << s.total_items << "\n"
      << "distinct bins:  " << s.distinct_bins << "\n";
  for (std::size_t c = 0; c < k; ++c) {
    out << component_label(k, c) << ":\n"
        << "  max:          " << s.max[c] << "\n"
        << "  mean:         " << s.mean[c].format_fixed(1) << "\n"
        << "  efficiency:   " << s.no_packing_efficiency[c].format_fixed(1) << " %\n"
        << "  speedup:      " << s.potential_speedup[c].format_fixed(2) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tuple histogram packing: pack variable-size items described by "
               "k-component size tuples into fixed-capacity packs with minimal padding"};
  app.name("tuplepack");
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  // stats
  StatsArgs stats_args;
  CLI::App* cmd_stats = app.add_subcommand("stats", "dataset padding statistics");
  cmd_stats->add_option("histogram", stats_args.histogram_path, "histogram CSV")->required();

  // pack
  std::string pack_hist, pack_limits, pack_heuristic = "product", pack_weights;
  std::string pack_max = "max", pack_mode = "lpf", pack_baseline, pack_emit;
  std::int64_t pack_budget_s = 600;
  CLI::App* cmd_pack = app.add_subcommand("pack", "pack a histogram against capacity limits");
  cmd_pack->add_option("histogram", pack_hist, "histogram CSV")->required();
  cmd_pack->add_option("--limits", pack_limits, "per-component capacities a,b,...")->required();
  cmd_pack->add_option("--heuristic", pack_heuristic,
                       "min|max|sum|product|node|edge (default product)");
  cmd_pack->add_option("--weights", pack_weights, "per-component weights w1,w2,...");
  cmd_pack->add_option("--max-per-pack", pack_max, "tuples per pack cap, integer or 'max'");
  cmd_pack->add_option("--mode", pack_mode, "lpf (longest-pack-first) or spf (shortest)");
  cmd_pack->add_option("--baseline", pack_baseline,
                       "none|node|edge: comparison baselines instead of tuple packing");
  cmd_pack->add_option("--emit-strategies", pack_emit, "write the strategy set JSON here");
  cmd_pack->add_option("--time-budget", pack_budget_s, "seconds before the run aborts");

  // sweep
  std::string sweep_hist, sweep_from, sweep_to, sweep_step;
  std::string sweep_heuristic = "product", sweep_weights, sweep_max = "max";
  std::string sweep_objective = "harmonic", sweep_out;
  std::string sweep_target;
  unsigned sweep_workers = default_workers();
  std::int64_t sweep_budget_s = 600;
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "grid-search capacity limits");
  cmd_sweep->add_option("histogram", sweep_hist, "histogram CSV")->required();
  cmd_sweep->add_option("--from", sweep_from, "smallest limits a,b,...")->required();
  cmd_sweep->add_option("--to", sweep_to, "largest limits c,d,...")->required();
  cmd_sweep->add_option("--step", sweep_step, "per-component steps (default 1,1,...)");
  cmd_sweep->add_option("--heuristic", sweep_heuristic, "packing heuristic (default product)");
  cmd_sweep->add_option("--weights", sweep_weights, "heuristic weights");
  cmd_sweep->add_option("--max-per-pack", sweep_max, "tuples per pack cap, integer or 'max'");
  cmd_sweep->add_option("--objective", sweep_objective, "harmonic|min|mean");
  cmd_sweep->add_option("--target", sweep_target,
                        "also report the smallest cell meeting this efficiency everywhere");
  cmd_sweep->add_option("--workers", sweep_workers, "parallel cell workers");
  cmd_sweep->add_option("--time-budget", sweep_budget_s, "seconds per cell");
  cmd_sweep->add_option("-o,--output", sweep_out, "grid CSV path")->required();

  // assign
  std::string assign_items, assign_strategies, assign_out;
  std::int64_t assign_seed = -1;
  CLI::App* cmd_assign = app.add_subcommand("assign", "map item ids onto a strategy set");
  cmd_assign->add_option("items", assign_items, "items CSV (id,c1,...,ck)")->required();
  cmd_assign->add_option("strategies", assign_strategies, "strategy set JSON")->required();
  cmd_assign->add_option("-o,--output", assign_out, "packs JSON path")->required();
  cmd_assign->add_option("--seed", assign_seed, "shuffle id queues with this seed");

  // heatmap
  std::string heatmap_grid, heatmap_out, heatmap_emit_csv;
  double heatmap_clamp = -1;
  CLI::App* cmd_heatmap = app.add_subcommand("heatmap", "render a grid CSV as plain PGM");
  cmd_heatmap->add_option("grid", heatmap_grid, "grid CSV from sweep")->required();
  cmd_heatmap->add_option("-o,--output", heatmap_out, "PGM path")->required();
  cmd_heatmap->add_option("--clamp-floor", heatmap_clamp,
                          "raise smaller values to this percentage");
  cmd_heatmap->add_option("--emit-csv", heatmap_emit_csv, "re-emit the parsed grid CSV here");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("tuplepack");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "tuplepack: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_stats)) return run_stats(stats_args, json, out);

    if (app.got_subcommand(cmd_pack)) {
      const Histogram h = parse_histogram_csv(slurp_file(pack_hist));
      if (h.empty()) throw EmptyInputError("histogram '" + pack_hist + "' has no bins");
      const std::vector<std::int64_t> limit_values = parse_int_list(pack_limits, "--limits");
      PackOptions options;
      options.max_tuples_per_pack = parse_max_per_pack(pack_max);
      options.time_budget = std::chrono::milliseconds(pack_budget_s * 1000);
      if (pack_mode == "spf") {
        options.mode = PackMode::kShortestPackFirst;
      } else if (pack_mode != "lpf") {
        throw ParseError("--mode must be lpf or spf, got '" + pack_mode + "'");
      }

      PackingResult result = [&] {
        if (pack_baseline.empty()) {
          std::vector<std::int64_t> weights;
          if (!pack_weights.empty()) weights = parse_int_list(pack_weights, "--weights");
          const HeuristicSpec heuristic =
              HeuristicSpec::named(pack_heuristic, h.dimension(), std::move(weights));
          return pack(h, Limits(limit_values), heuristic, options);
        }
        if (limit_values.size() != h.dimension()) {
          throw DimensionError("--limits has " + std::to_string(limit_values.size()) +
                               " components, histogram has " + std::to_string(h.dimension()));
        }
        if (pack_baseline == "none") return baseline(h, BaselineMode::kNone, 0, 0, options);
        std::size_t component = 0;
        if (pack_baseline == "edge") {
          component = 1;
        } else if (pack_baseline != "node") {
          throw ParseError("--baseline must be none, node or edge, got '" + pack_baseline +
                           "'");
        }
        if (component >= h.dimension()) {
          throw DimensionError("baseline '" + pack_baseline + "' needs dimension >= " +
                               std::to_string(component + 1));
        }
        return baseline(h, BaselineMode::kSingleComponent, component,
                        limit_values[component], options);
      }();

      if (!pack_emit.empty()) spit_file(pack_emit, write_strategies_json(result));
      report_packing(result, json, out);
      return 0;
    }

    if (app.got_subcommand(cmd_sweep)) {
      const Histogram h = parse_histogram_csv(slurp_file(sweep_hist));
      if (h.empty()) throw EmptyInputError("histogram '" + sweep_hist + "' has no bins");
      const std::size_t k = h.dimension();
      const std::vector<std::int64_t> from = parse_int_list(sweep_from, "--from");
      const std::vector<std::int64_t> to = parse_int_list(sweep_to, "--to");
      std::vector<std::int64_t> step(k, 1);
      if (!sweep_step.empty()) step = parse_int_list(sweep_step, "--step");
      if (from.size() != k || to.size() != k || step.size() != k) {
        throw DimensionError("--from/--to/--step need " + std::to_string(k) +
                             " components each");
      }
      std::vector<AxisRange> ranges(k);
      for (std::size_t c = 0; c < k; ++c) ranges[c] = AxisRange{from[c], to[c], step[c]};

      std::vector<std::int64_t> weights;
      if (!sweep_weights.empty()) weights = parse_int_list(sweep_weights, "--weights");
      const HeuristicSpec heuristic =
          HeuristicSpec::named(sweep_heuristic, k, std::move(weights));

      SweepOptions options;
      options.max_tuples_per_pack = parse_max_per_pack(sweep_max);
      options.workers = sweep_workers;
      options.per_cell_time_budget = std::chrono::milliseconds(sweep_budget_s * 1000);
      if (sweep_objective == "harmonic") {
        options.objective = SweepObjective::kHarmonicMean;
      } else if (sweep_objective == "min") {
        options.objective = SweepObjective::kMinComponent;
      } else if (sweep_objective == "mean") {
        options.objective = SweepObjective::kArithmeticMean;
      } else {
        throw ParseError("--objective must be harmonic, min or mean, got '" + sweep_objective +
                         "'");
      }

      const SweepGrid grid = sweep(h, ranges, heuristic, options);
      spit_file(sweep_out, write_grid_csv(to_grid_table(grid)));

      std::size_t failed = 0;
      for (const SweepCell& cell : grid.cells) failed += cell.failed() ? 1 : 0;

      std::optional<std::pair<std::vector<std::int64_t>, SweepCell>> target_cell;
      if (!sweep_target.empty()) {
        target_cell = select_best(grid, SelectRule::kSmallestMeetingTarget,
                                  Rational::from_decimal(sweep_target));
      }

      if (json) {
        nlohmann::ordered_json j;
        j["k"] = k;
        j["axes"] = grid.axes;
        j["cells_total"] = grid.cells.size();
        j["cells_failed"] = failed;
        if (grid.best_index) {
          j["best"] = cell_json(grid.cells[*grid.best_index]);
        } else {
          j["best"] = nullptr;
        }
        if (target_cell) j["target_cell"] = cell_json(target_cell->second);
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (const SweepCell& cell : grid.cells) cells.push_back(cell_json(cell));
        j["cells"] = std::move(cells);
        out << j.dump(2) << "\n";
      } else {
        std::string shape;
        for (std::size_t c = 0; c < k; ++c) {
          if (c > 0) shape += " x ";
          shape += std::to_string(grid.axes[c].size());
        }
        out << "grid:           " << shape << " cells (" << grid.cells.size() << " total, "
            << failed << " failed)\n";
        if (grid.best_index) {
          const SweepCell& best = grid.cells[*grid.best_index];
          out << "best cell:      limits " << fmt_ints(best.limits) << ", efficiency "
              << fmt_percents(best.efficiency) << ", objective "
              << best.objective.format_fixed(1) << ", packs " << best.num_packs << "\n";
        }
        if (target_cell) {
          out << "target cell:    limits " << fmt_ints(target_cell->first) << ", efficiency "
              << fmt_percents(target_cell->second.efficiency) << "\n";
        }
        out << "wrote " << sweep_out << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(cmd_assign)) {
      const auto items = parse_items_csv(slurp_file(assign_items));
      const StrategySet set = read_strategies_json(slurp_file(assign_strategies));
      std::optional<std::uint64_t> seed;
      if (assign_seed >= 0) seed = static_cast<std::uint64_t>(assign_seed);
      const PackAssignment assignment = assign(items, set.strategies, seed);
      const std::string payload = write_assignment_json(assignment);
      spit_file(assign_out, payload);
      if (json) {
        out << payload;
      } else {
        out << "assigned " << items.size() << " items into " << assignment.packs.size()
            << " packs\nwrote " << assign_out << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(cmd_heatmap)) {
      const GridTable table = read_grid_csv(slurp_file(heatmap_grid));
      std::optional<double> clamp;
      if (heatmap_clamp >= 0) clamp = heatmap_clamp;
      const std::string pgm = write_heatmap(table, std::nullopt, clamp);
      spit_file(heatmap_out, pgm);
      if (!heatmap_emit_csv.empty()) spit_file(heatmap_emit_csv, write_grid_csv(table));
      out << "wrote " << table.axes[1].size() << "x" << table.axes[0].size() << " heatmap to "
          << heatmap_out << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "tuplepack: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "tuplepack: internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace tuplepack
