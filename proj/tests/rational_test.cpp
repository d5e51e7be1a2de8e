// Copyright 2026 The densub Authors
//
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

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "densub/errors.hpp"
#include "densub/rational.hpp"

namespace densub {
namespace {

TEST(Rational, LowestTerms) {
  Rational r(10, -4);
  EXPECT_EQ(r.num(), -5);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, 7), Rational(0));
  EXPECT_EQ(Rational(0, 7).den(), 1);
}

TEST(Rational, PrintsAsFraction) {
  EXPECT_EQ(Rational(15, 7).str(), "15/7");
  EXPECT_EQ(Rational(3).str(), "3/1");
  EXPECT_EQ(Rational(-6, 4).str(), "-3/2");
  std::ostringstream os;
  os << Rational(8, 3);
  EXPECT_EQ(os.str(), "8/3");
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("15/7"), Rational(15, 7));
  EXPECT_EQ(Rational::parse("4"), Rational(4));
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
  EXPECT_THROW(Rational::parse("x/2"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, ZeroDenominator) { EXPECT_THROW(Rational(1, 0), std::domain_error); }

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(2, 3), Rational(-2, 3));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, OrderMatchesCrossMultiplication) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-50, 50);
  std::uniform_int_distribution<std::int64_t> den(1, 50);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x(a, b), y(c, d);
    EXPECT_EQ(x < y, a * d < c * b);
    EXPECT_EQ(x == y, a * d == c * b);
  }
}

TEST(Rational, LargeValuesCompareExactly) {
  const std::int64_t big = std::int64_t{1} << 62;
  EXPECT_LT(Rational(big - 1, big), Rational(big, big + 1));
  EXPECT_THROW(Rational(big) + Rational(big), std::overflow_error);
}

}  // namespace
}  // namespace densub
