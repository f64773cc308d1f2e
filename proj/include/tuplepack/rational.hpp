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

#ifndef TUPLEPACK_RATIONAL_HPP_
#define TUPLEPACK_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "tuplepack/errors.hpp"

namespace tuplepack {

// Exact rational with int64 numerator/denominator, always reduced, den > 0.
// Intermediates run in 128-bit; a reduced value outside int64 throws
// OverflowError. Efficiencies, means and harmonic means stay exact so that
// identities like speedup * efficiency == 100 hold with no rounding.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(runtime/explicit)
  Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

  static Rational make(__int128 num, __int128 den);

  // Parses "12", "-3.25", "95.5" exactly (plain decimal, no exponent).
  static Rational from_decimal(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Fixed-point rendering with round-half-away-from-zero, e.g. 66.666... -> "66.7".
  std::string format_fixed(int decimals) const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws on division by zero

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace tuplepack

#endif  // TUPLEPACK_RATIONAL_HPP_
