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

#ifndef DENSUB_RATIONAL_HPP_
#define DENSUB_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace densub {

__extension__ using Wide = __int128;

/// Exact fraction with 64-bit numerator and positive 64-bit denominator,
/// always kept in lowest terms. Arithmetic throws std::overflow_error if a
/// reduced result does not fit.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// "p/q", also for integers ("3/1") so that output is uniform.
  std::string str() const;

  /// Accepts "p/q" or "p"; throws ParseError on anything else.
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(Wide num, Wide den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace densub

#endif  // DENSUB_RATIONAL_HPP_
