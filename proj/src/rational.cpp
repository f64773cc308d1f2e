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

#include "tuplepack/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>

namespace tuplepack {
namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kInt64Max = std::numeric_limits<std::int64_t>::max();

}  // namespace

Rational Rational::make(__int128 num, __int128 den) {
  if (den == 0) throw OverflowError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (abs128(num) > kInt64Max || den > kInt64Max) {
    throw OverflowError("rational does not fit 64-bit after reduction");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::from_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  __int128 num = 0;
  __int128 den = 1;
  bool seen_digit = false;
  bool seen_dot = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_dot) throw ParseError("malformed number '" + std::string(text) + "'");
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9') {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    seen_digit = true;
    num = num * 10 + (c - '0');
    if (seen_dot) den *= 10;
    if (num > kInt64Max || den > kInt64Max) {
      throw OverflowError("number '" + std::string(text) + "' out of range");
    }
  }
  if (!seen_digit) throw ParseError("malformed number '" + std::string(text) + "'");
  return make(negative ? -num : num, den);
}

std::string Rational::format_fixed(int decimals) const {
  __int128 scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  __int128 scaled = static_cast<__int128>(num_) * scale;
  __int128 d = den_;
  // round half away from zero
  __int128 q = scaled >= 0 ? (2 * scaled + d) / (2 * d) : (2 * scaled - d) / (2 * d);
  bool negative = q < 0;
  if (negative) q = -q;
  __int128 whole = q / scale;
  __int128 frac = q % scale;
  std::string out;
  if (negative) out += '-';
  char buf[48];
  auto append128 = [&](__int128 v, int min_width) {
    char tmp[48];
    int n = 0;
    if (v == 0) tmp[n++] = '0';
    while (v > 0) {
      tmp[n++] = static_cast<char>('0' + static_cast<int>(v % 10));
      v /= 10;
    }
    while (n < min_width) tmp[n++] = '0';
    for (int i = n - 1; i >= 0; --i) out += tmp[i];
  };
  (void)buf;
  append128(whole, 1);
  if (decimals > 0) {
    out += '.';
    append128(frac, decimals);
  }
  return out;
}

Rational Rational::operator+(const Rational& o) const {
  return make(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
              static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
              static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw OverflowError("rational division by zero");
  return make(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

}  // namespace tuplepack
