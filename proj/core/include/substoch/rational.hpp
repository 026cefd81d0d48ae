// Copyright 2026 The substoch authors
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

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace substoch {

/// Exact arbitrary-precision rational. GMP keeps values in lowest terms
/// with a positive denominator as long as they are constructed through
/// the helpers below or through arithmetic on canonical values.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p/q", "-3", "0.35" or ".5". Decimal literals convert exactly
/// (0.6 becomes 3/5). Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q"; integral values are printed without the "/q" part.
std::string to_fraction_string(const Rational& value);

/// Exact decimal expansion, or nullopt when the expansion does not
/// terminate (denominator has a prime factor other than 2 and 5).
std::optional<std::string> to_decimal_string(const Rational& value);

bool is_integral(const Rational& value);
long floor_to_long(const Rational& value);
long ceil_to_long(const Rational& value);

/// value^exponent with exponent >= 0.
Rational pow_rational(const Rational& value, unsigned long exponent);

}  // namespace substoch
