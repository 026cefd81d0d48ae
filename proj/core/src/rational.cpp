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

#include "substoch/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace substoch {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_literal(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_literal(text);

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class{std::string(num)}, d);
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (!whole.empty() && !all_digits(whole)) bad_literal(text);
    if (!frac.empty() && !all_digits(frac)) bad_literal(text);
    std::string digits = std::string(whole) + std::string(frac);
    if (digits.empty()) bad_literal(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(mpz_class{digits}, scale);
    value.canonicalize();
  } else {
    if (!all_digits(s)) bad_literal(text);
    value = Rational(mpz_class{std::string(s)});
  }
  return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_str();
}

std::optional<std::string> to_decimal_string(const Rational& value) {
  mpz_class den = value.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 2);
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5);
    ++fives;
  }
  if (den != 1) return std::nullopt;

  unsigned long places = std::max(twos, fives);
  mpz_class scale_two, scale_five;
  mpz_ui_pow_ui(scale_two.get_mpz_t(), 2, places - twos);
  mpz_ui_pow_ui(scale_five.get_mpz_t(), 5, places - fives);
  mpz_class digits = abs(value.get_num()) * scale_two * scale_five;

  std::string text = digits.get_str();
  if (places > 0) {
    if (text.size() <= places) text.insert(0, places + 1 - text.size(), '0');
    text.insert(text.size() - places, ".");
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  if (sgn(value) < 0) text.insert(0, "-");
  return text;
}

bool is_integral(const Rational& value) {
  return value.get_den() == 1;
}

long floor_to_long(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("floor does not fit in long");
  return q.get_si();
}

long ceil_to_long(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("ceiling does not fit in long");
  return q.get_si();
}

Rational pow_rational(const Rational& value, unsigned long exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), exponent);
  Rational result(num, den);
  result.canonicalize();
  return result;
}

}  // namespace substoch
