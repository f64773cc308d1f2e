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

#include "tuplepack/heuristic.hpp"

#include <algorithm>

#include "tuplepack/kernels.hpp"

namespace tuplepack {

HeuristicSpec::HeuristicSpec(HeuristicKind kind, std::size_t projection_index,
                             std::vector<std::int64_t> weights)
    : kind_(kind), projection_index_(projection_index), weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw DimensionError("heuristic needs at least one weight");
  }
  for (std::int64_t w : weights_) {
    if (w < 1) throw ParseError("heuristic weight " + std::to_string(w) + " must be >= 1");
  }
  if (kind_ == HeuristicKind::kProjection && projection_index_ >= weights_.size()) {
    throw DimensionError("projection index " + std::to_string(projection_index_) +
                         " out of range for dimension " + std::to_string(weights_.size()));
  }
}

HeuristicSpec HeuristicSpec::reduce(HeuristicKind kind, std::vector<std::int64_t> weights) {
  return HeuristicSpec(kind, 0, std::move(weights));
}

HeuristicSpec HeuristicSpec::projection(std::size_t component,
                                        std::vector<std::int64_t> weights) {
  return HeuristicSpec(HeuristicKind::kProjection, component, std::move(weights));
}

HeuristicSpec HeuristicSpec::reduce(HeuristicKind kind, std::size_t dimension) {
  return reduce(kind, std::vector<std::int64_t>(dimension, 1));
}

HeuristicSpec HeuristicSpec::projection(std::size_t component, std::size_t dimension) {
  return projection(component, std::vector<std::int64_t>(dimension, 1));
}

HeuristicSpec HeuristicSpec::named(std::string_view name, std::size_t dimension,
                                   std::vector<std::int64_t> weights) {
  if (weights.empty()) weights.assign(dimension, 1);
  if (name == "min") return reduce(HeuristicKind::kMin, std::move(weights));
  if (name == "max") return reduce(HeuristicKind::kMax, std::move(weights));
  if (name == "sum") return reduce(HeuristicKind::kSum, std::move(weights));
  if (name == "product") return reduce(HeuristicKind::kProduct, std::move(weights));
  if (name == "node") return projection(0, std::move(weights));
  if (name == "edge") {
    if (dimension < 2) throw DimensionError("heuristic 'edge' needs dimension >= 2");
    return projection(1, std::move(weights));
  }
  throw ParseError("unknown heuristic '" + std::string(name) + "'");
}

std::string HeuristicSpec::name() const {
  switch (kind_) {
    case HeuristicKind::kMin: return "min";
    case HeuristicKind::kMax: return "max";
    case HeuristicKind::kSum: return "sum";
    case HeuristicKind::kProduct: return "product";
    case HeuristicKind::kProjection:
      return "projection(" + std::to_string(projection_index_) + ")";
  }
  return "?";
}

std::int64_t evaluate(const HeuristicSpec& heuristic, const SizeTuple& tuple) {
  const auto& weights = heuristic.weights();
  if (tuple.dimension() != weights.size()) {
    throw DimensionError("tuple dimension " + std::to_string(tuple.dimension()) +
                         " vs heuristic dimension " + std::to_string(weights.size()));
  }
  auto weighted = [&](std::size_t i) {
    std::int64_t v;
    if (__builtin_mul_overflow(weights[i], tuple[i], &v)) {
      throw OverflowError("heuristic value exceeds 64 bits at " + tuple.to_string());
    }
    return v;
  };
  switch (heuristic.kind()) {
    case HeuristicKind::kProjection:
      return weighted(heuristic.projection_index());
    case HeuristicKind::kMin: {
      std::int64_t m = weighted(0);
      for (std::size_t i = 1; i < weights.size(); ++i) m = std::min(m, weighted(i));
      return m;
    }
    case HeuristicKind::kMax: {
      std::int64_t m = weighted(0);
      for (std::size_t i = 1; i < weights.size(); ++i) m = std::max(m, weighted(i));
      return m;
    }
    case HeuristicKind::kSum: {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (__builtin_add_overflow(s, weighted(i), &s)) {
          throw OverflowError("heuristic value exceeds 64 bits at " + tuple.to_string());
        }
      }
      return s;
    }
    case HeuristicKind::kProduct: {
      std::int64_t p = 1;
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (__builtin_mul_overflow(p, weighted(i), &p)) {
          throw OverflowError("heuristic value exceeds 64 bits at " + tuple.to_string());
        }
      }
      return p;
    }
  }
  return 0;
}

std::int64_t evaluate_unchecked(const HeuristicSpec& heuristic,
                                const std::vector<std::int64_t>& components) {
  const auto& w = heuristic.weights();
  switch (heuristic.kind()) {
    case HeuristicKind::kProjection: {
      std::size_t j = heuristic.projection_index();
      return w[j] * components[j];
    }
    case HeuristicKind::kMin: {
      std::int64_t m = w[0] * components[0];
      for (std::size_t i = 1; i < w.size(); ++i) m = std::min(m, w[i] * components[i]);
      return m;
    }
    case HeuristicKind::kMax: {
      std::int64_t m = w[0] * components[0];
      for (std::size_t i = 1; i < w.size(); ++i) m = std::max(m, w[i] * components[i]);
      return m;
    }
    case HeuristicKind::kSum: {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * components[i];
      return s;
    }
    case HeuristicKind::kProduct: {
      std::int64_t p = 1;
      for (std::size_t i = 0; i < w.size(); ++i) p *= w[i] * components[i];
      return p;
    }
  }
  return 0;
}

std::vector<std::int64_t> evaluate_batch_unchecked(
    const HeuristicSpec& heuristic, const std::vector<std::vector<std::int64_t>>& columns) {
  const auto& w = heuristic.weights();
  if (columns.size() != w.size()) {
    throw DimensionError("column count " + std::to_string(columns.size()) +
                         " vs heuristic dimension " + std::to_string(w.size()));
  }
  const std::size_t n = columns.empty() ? 0 : columns[0].size();
  std::vector<std::int64_t> keys(n);
  if (n == 0) return keys;
  const auto& ops = kernels::active_ops();
  switch (heuristic.kind()) {
    case HeuristicKind::kProjection:
      ops.scale(columns[heuristic.projection_index()].data(), n,
                w[heuristic.projection_index()], keys.data());
      break;
    case HeuristicKind::kMin:
      ops.scale(columns[0].data(), n, w[0], keys.data());
      for (std::size_t c = 1; c < columns.size(); ++c) {
        ops.scale_min(columns[c].data(), n, w[c], keys.data());
      }
      break;
    case HeuristicKind::kMax:
      ops.scale(columns[0].data(), n, w[0], keys.data());
      for (std::size_t c = 1; c < columns.size(); ++c) {
        ops.scale_max(columns[c].data(), n, w[c], keys.data());
      }
      break;
    case HeuristicKind::kSum:
      ops.scale(columns[0].data(), n, w[0], keys.data());
      for (std::size_t c = 1; c < columns.size(); ++c) {
        ops.scale_add(columns[c].data(), n, w[c], keys.data());
      }
      break;
    case HeuristicKind::kProduct:
      ops.scale(columns[0].data(), n, w[0], keys.data());
      for (std::size_t c = 1; c < columns.size(); ++c) {
        ops.scale_mul(columns[c].data(), n, w[c], keys.data());
      }
      break;
  }
  return keys;
}

}  // namespace tuplepack
