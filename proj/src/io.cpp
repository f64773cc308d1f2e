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

#include "tuplepack/io.hpp"

#include <fstream>
#include <sstream>

#include "csv.hpp"
#include "json.hpp"

namespace tuplepack {

std::string write_strategies_json(const PackingResult& result) {
  nlohmann::ordered_json j;
  j["k"] = result.requested_limits.dimension();
  j["requested_limits"] = result.requested_limits.capacities();
  j["realized_limits"] = result.realized_limits;
  nlohmann::ordered_json eff = nlohmann::ordered_json::array();
  for (const Rational& e : result.efficiency) eff.push_back(e.to_double());
  j["efficiency"] = std::move(eff);
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
  return j.dump(2) + "\n";
}

StrategySet read_strategies_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("strategy JSON: ") + e.what());
  }
  StrategySet set;
  try {
    set.dimension = j.at("k").get<std::size_t>();
    for (const auto& s : j.at("strategies")) {
      Strategy strategy;
      strategy.count = s.at("count").get<std::int64_t>();
      if (strategy.count < 1) {
        throw NegativeCountError("strategy count " + std::to_string(strategy.count));
      }
      for (const auto& t : s.at("tuples")) {
        std::vector<std::int64_t> components = t.get<std::vector<std::int64_t>>();
        if (components.size() != set.dimension) {
          throw DimensionError("strategy tuple of dimension " +
                               std::to_string(components.size()) + " in a k=" +
                               std::to_string(set.dimension) + " strategy set");
        }
        strategy.tuples.push_back(SizeTuple(std::move(components)));
      }
      if (strategy.tuples.empty()) throw EmptyInputError("strategy without tuples");
      set.strategies.push_back(std::move(strategy));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("strategy JSON: ") + e.what());
  }
  return set;
}

std::vector<std::pair<std::string, SizeTuple>> parse_items_csv(std::string_view text) {
  std::vector<std::pair<std::string, SizeTuple>> items;
  std::size_t arity = 0;
  detail::for_each_csv_line(text, [&](std::size_t line_no, std::string_view line) {
    auto fields = detail::split_fields(line);
    if (arity == 0) {
      if (fields.size() < 2) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": items header needs at least two columns");
      }
      arity = fields.size();
      return;
    }
    if (fields.size() != arity) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(arity) + " fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": empty item id");
    }
    std::vector<std::int64_t> components(arity - 1);
    for (std::size_t i = 1; i < arity; ++i) {
      components[i - 1] = detail::parse_int(fields[i], line_no);
      if (components[i - 1] < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": negative component " +
                         std::to_string(components[i - 1]));
      }
    }
    items.emplace_back(std::string(fields[0]), SizeTuple(std::move(components)));
  });
  if (arity == 0 && !detail::trim(text).empty()) throw ParseError("no header row found");
  return items;
}

std::string write_assignment_json(const PackAssignment& assignment) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json packs = nlohmann::ordered_json::array();
  for (const PackAssignment::Pack& pack : assignment.packs) {
    nlohmann::ordered_json p;
    p["ids"] = pack.ids;
    p["sums"] = pack.sums;
    packs.push_back(std::move(p));
  }
  j["packs"] = std::move(packs);
  return j.dump(2) + "\n";
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path + "'");
  return std::move(buffer).str();
}

void spit_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace tuplepack
