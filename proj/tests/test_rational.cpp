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

#include "doctest.h"
#include "tuplepack/rational.hpp"

using tuplepack::Rational;

TEST_CASE("rational reduces and normalizes sign") {
  Rational r(200, 300);
  CHECK(r.numerator() == 2);
  CHECK(r.denominator() == 3);
  Rational n(1, -2);
  CHECK(n.numerator() == -1);
  CHECK(n.denominator() == 2);
  CHECK_THROWS_AS(Rational(1, 0), tuplepack::OverflowError);
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3);
  Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(a < Rational(1, 2));
  CHECK(Rational(100) / (Rational(100) / a) == a);
}

TEST_CASE("fixed-point formatting rounds half away from zero") {
  CHECK(Rational(200, 3).format_fixed(1) == "66.7");
  CHECK(Rational(1, 20).format_fixed(1) == "0.1");  // 0.05 -> 0.1
  CHECK(Rational(3, 2).format_fixed(2) == "1.50");
  CHECK(Rational(100).format_fixed(1) == "100.0");
  CHECK(Rational(0).format_fixed(1) == "0.0");
  CHECK(Rational(-1, 20).format_fixed(1) == "-0.1");
  CHECK(Rational(861).format_fixed(0) == "861");
}

TEST_CASE("decimal parsing is exact") {
  CHECK(Rational::from_decimal("95") == Rational(95));
  CHECK(Rational::from_decimal("95.5") == Rational(191, 2));
  CHECK(Rational::from_decimal("0.25") == Rational(1, 4));
  CHECK(Rational::from_decimal("-3.25") == Rational(-13, 4));
  CHECK_THROWS_AS(Rational::from_decimal("abc"), tuplepack::ParseError);
  CHECK_THROWS_AS(Rational::from_decimal(""), tuplepack::ParseError);
  CHECK_THROWS_AS(Rational::from_decimal("1.2.3"), tuplepack::ParseError);
}
