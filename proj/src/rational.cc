/*
 * Copyright 2026 The otplab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "otplab/rational.h"

#include <cctype>
#include <cmath>

#include "otplab/errors.h"

namespace otplab {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int's string constructor reads a leading 0 as an octal prefix.
Integer DecimalDigits(std::string_view s) {
  const std::size_t first = s.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return Integer{std::string(s.substr(first))};
}

Integer ParseInteger(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) {
    throw ParseError("not an integer: '" + std::string(s) + "'");
  }
  return negative ? Integer(-DecimalDigits(s)) : DecimalDigits(s);
}

Integer Pow10(long exponent) {
  Integer p = 1;
  for (long i = 0; i < exponent; ++i) p *= 10;
  return p;
}

Rational ParseDecimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Integer exp = ParseInteger(s.substr(e + 1));
    if (abs(exp) > 4096) throw ParseError("exponent out of range");
    exponent = exp.convert_to<long>();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !AllDigits(whole)) ||
        (!frac.empty() && !AllDigits(frac))) {
      throw ParseError("malformed decimal");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!AllDigits(s)) throw ParseError("malformed decimal");
    digits = std::string(s);
  }
  Rational value{DecimalDigits(digits)};
  if (exponent > 0) value *= Pow10(exponent);
  if (exponent < 0) value /= Pow10(-exponent);
  return negative ? Rational(-value) : value;
}

}  // namespace

std::string ToString(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = ParseInteger(text.substr(0, slash));
    Integer den = ParseInteger(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  return ParseDecimal(text);
}

Rational FromDouble(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value");
  return Rational(value);
}

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

bool IsProbability(const Rational& value) { return value >= 0 && value <= 1; }

}  // namespace otplab
