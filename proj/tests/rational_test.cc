// Copyright 2026 The typereg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "typereg/rational.h"

#include "doctest.h"
#include "typereg/errors.h"

namespace typereg {
namespace {

TEST_CASE("rational parses exact literals and prints canonically") {
  CHECK(Rational::Parse("3").ToString() == "3");
  CHECK(Rational::Parse("-7").ToString() == "-7");
  CHECK(Rational::Parse("6/8").ToString() == "3/4");
  CHECK(Rational::Parse("-2/4").ToString() == "-1/2");
  CHECK(Rational::Parse("0/5").IsZero());
}

TEST_CASE("rational rejects inexact or malformed text") {
  CHECK_THROWS_AS(Rational::Parse("0.5"), InputError);
  CHECK_THROWS_AS(Rational::Parse("1e3"), InputError);
  CHECK_THROWS_AS(Rational::Parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::Parse(""), InputError);
  CHECK_THROWS_AS(Rational::Parse("a/b"), InputError);
  CHECK_THROWS_AS(Rational::Parse("2/-4"), InputError);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(7, 4) - Rational(9, 4) == Rational(-1, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(7, 4) / Rational(9, 4) == Rational(7, 9));
  CHECK(3 * third == Rational(1));
  CHECK(-third < Rational(0));
  CHECK(Rational(-5, 3).Abs() == Rational(5, 3));
  CHECK_THROWS_AS(third / Rational(0), InputError);
}

TEST_CASE("rational handles values beyond 64 bits") {
  Rational big = 1;
  for (int k = 0; k < 40; ++k) big *= 1000;
  CHECK(big.ToString().size() == 121);
  CHECK((big + 1) - big == Rational(1));
  CHECK(Rational(1) / big * big == Rational(1));
}

}  // namespace
}  // namespace typereg
