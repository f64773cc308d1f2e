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

#include "tuplepack/types.hpp"

#include <algorithm>

namespace tuplepack {
namespace {

std::string join(const std::vector<std::int64_t>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  out += ")";
  return out;
}

}  // namespace

SizeTuple::SizeTuple(std::vector<std::int64_t> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw DimensionError("size tuple needs at least one component");
  }
  for (std::int64_t c : components_) {
    if (c < 0) {
      throw ParseError("size tuple component " + std::to_string(c) + " is negative");
    }
  }
}

bool SizeTuple::fits_within(const SizeTuple& b) const {
  if (dimension() != b.dimension()) return false;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i] > b.components_[i]) return false;
  }
  return true;
}

std::string SizeTuple::to_string() const { return join(components_); }

Limits::Limits(std::vector<std::int64_t> capacities)
    : capacities_(std::move(capacities)) {
  if (capacities_.empty()) {
    throw DimensionError("limits need at least one component");
  }
  for (std::int64_t c : capacities_) {
    if (c < 1) {
      throw ParseError("capacity " + std::to_string(c) + " must be >= 1");
    }
  }
}

std::int64_t Limits::min_capacity() const {
  return *std::min_element(capacities_.begin(), capacities_.end());
}

std::string Limits::to_string() const { return join(capacities_); }

}  // namespace tuplepack
