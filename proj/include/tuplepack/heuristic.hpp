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

#ifndef TUPLEPACK_HEURISTIC_HPP_
#define TUPLEPACK_HEURISTIC_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tuplepack/types.hpp"

namespace tuplepack {

// Monotone reductions of a size tuple (or of a pack's remaining capacity) to
// one integer priority key. All are zero at the all-zero tuple and
// monotonically increasing componentwise; sum is strictly monotone, product
// is strictly monotone while no factor is zero.
enum class HeuristicKind { kMin, kMax, kSum, kProduct, kProjection };

// A reduction kind plus per-component positive integer weights. Weighted
// variants apply the base function to weights[i]*t[i], which keeps keys
// exact and totally ordered.
class HeuristicSpec {
 public:
  static HeuristicSpec reduce(HeuristicKind kind, std::vector<std::int64_t> weights);
  static HeuristicSpec projection(std::size_t component, std::vector<std::int64_t> weights);
  // Unit weights of the given dimension.
  static HeuristicSpec reduce(HeuristicKind kind, std::size_t dimension);
  static HeuristicSpec projection(std::size_t component, std::size_t dimension);

  // CLI spelling: min, max, sum, product, node (projection 0), edge
  // (projection 1). Empty weights mean all ones.
  static HeuristicSpec named(std::string_view name, std::size_t dimension,
                             std::vector<std::int64_t> weights = {});

  HeuristicKind kind() const { return kind_; }
  std::size_t projection_index() const { return projection_index_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::size_t dimension() const { return weights_.size(); }
  std::string name() const;

 private:
  HeuristicSpec(HeuristicKind kind, std::size_t projection_index,
                std::vector<std::int64_t> weights);

  HeuristicKind kind_;
  std::size_t projection_index_;  // meaningful for kProjection only
  std::vector<std::int64_t> weights_;
};

// Exact heuristic value of a tuple; throws DimensionError on mismatched
// dimension and OverflowError when the exact value would not fit int64.
std::int64_t evaluate(const HeuristicSpec& heuristic, const SizeTuple& tuple);

// Unchecked variant for values already known to be bounded by a previously
// checked evaluate() (e.g. remainders of validated limits).
std::int64_t evaluate_unchecked(const HeuristicSpec& heuristic,
                                const std::vector<std::int64_t>& components);

// Keys for n tuples stored column-major (columns[c][i] = component c of
// tuple i). Same precondition as evaluate_unchecked for every row; runs on
// the active kernel backend.
std::vector<std::int64_t> evaluate_batch_unchecked(
    const HeuristicSpec& heuristic, const std::vector<std::vector<std::int64_t>>& columns);

}  // namespace tuplepack

#endif  // TUPLEPACK_HEURISTIC_HPP_
