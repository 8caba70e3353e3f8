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

#ifndef OTPLAB_RATIONAL_H_
#define OTPLAB_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace otplab {

// Arbitrary-precision exact rational. Always stored in lowest terms with a
// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using Bit = std::uint8_t;

inline Rational Half() { return Rational(1, 2); }

// Canonical "num/den" form, e.g. "3/8", "0/1", "1/1".
std::string ToString(const Rational& value);

// Accepts "num/den", a bare integer "3", or a finite decimal "0.75" /
// "-1.5e-2". Throws ParseError on anything else or a zero denominator.
Rational ParseRational(std::string_view text);

// Exact value of a finite double (every double is a dyadic rational).
Rational FromDouble(double value);

double ToDouble(const Rational& value);

// True iff value is in [0, 1].
bool IsProbability(const Rational& value);

}  // namespace otplab

#endif  // OTPLAB_RATIONAL_H_
