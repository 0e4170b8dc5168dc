//------------------------------------------------------------------------------
//
//   Copyright 2026 The epol-sim Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace epol {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt Binomial(long long n, long long k);

/// Parses "3", "-2/7", "0.19" or "1e-3" into an exact rational.
Rational ParseRational(std::string const &text);

/// Comma separated list of rationals ("0.25,0.75" or "1/3,2/3").
std::vector<Rational> ParseRationalList(std::string const &text);

/// Decimal rendering with the given number of significant digits.
std::string ToDecimal(Rational const &x, int significant_digits = 12);

/// Exact "p/q" form, or "p" when the denominator is one.
std::string ToFraction(Rational const &x);

double ToDouble(Rational const &x);

std::vector<double> ToDoubles(std::vector<Rational> const &xs);

}  // namespace epol
