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

#ifndef TUPLEPACK_TYPES_HPP_
#define TUPLEPACK_TYPES_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tuplepack/errors.hpp"

namespace tuplepack {

// One item's size per component, e.g. (node count, edge count) for a graph.
// Components are non-negative; the dimension k >= 1 is fixed per dataset.
// Immutable after construction.
class SizeTuple {
 public:
  explicit SizeTuple(std::vector<std::int64_t> components);
  SizeTuple(std::initializer_list<std::int64_t> components)
      : SizeTuple(std::vector<std::int64_t>(components)) {}

  std::size_t dimension() const { return components_.size(); }
  std::int64_t operator[](std::size_t i) const { return components_[i]; }
  const std::vector<std::int64_t>& components() const { return components_; }

  // Componentwise a[i] <= b[i].
  bool fits_within(const SizeTuple& b) const;

  std::string to_string() const;  // "(a, b)"

  auto operator<=>(const SizeTuple&) const = default;  // lexicographic

 private:
  std::vector<std::int64_t> components_;
};

// Per-component pack capacities; every capacity >= 1.
class Limits {
 public:
  explicit Limits(std::vector<std::int64_t> capacities);
  Limits(std::initializer_list<std::int64_t> capacities)
      : Limits(std::vector<std::int64_t>(capacities)) {}

  std::size_t dimension() const { return capacities_.size(); }
  std::int64_t operator[](std::size_t i) const { return capacities_[i]; }
  const std::vector<std::int64_t>& capacities() const { return capacities_; }
  std::int64_t min_capacity() const;

  std::string to_string() const;

  auto operator<=>(const Limits&) const = default;

 private:
  std::vector<std::int64_t> capacities_;
};

}  // namespace tuplepack

#endif  // TUPLEPACK_TYPES_HPP_
