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

#include "epol/rational.hpp"
#include "epol/types.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cctype>

namespace epol {

namespace mp = boost::multiprecision;

BigInt Binomial(long long n, long long k)
{
  if (k < 0 || n < 0 || k > n)
  {
    return 0;
  }
  k          = std::min(k, n - k);
  BigInt acc = 1;
  for (long long j = 1; j <= k; ++j)
  {
    acc *= n - k + j;
    acc /= j;
  }
  return acc;
}

namespace {

BigInt Pow10(long long e)
{
  BigInt p = 1;
  for (long long i = 0; i < e; ++i)
  {
    p *= 10;
  }
  return p;
}

BigInt ParseInteger(std::string const &digits)
{
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
  {
    throw InvalidParameter("not a number: '" + digits + "'");
  }
  auto const first = digits.find_first_not_of('0');
  return first == std::string::npos ? BigInt{0} : BigInt{digits.substr(first)};  // no octal
}

Rational ParseDecimal(std::string text)
{
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+'))
  {
    negative = text[0] == '-';
    text.erase(0, 1);
  }
  long long exponent = 0;
  auto      epos     = text.find_first_of("eE");
  if (epos != std::string::npos)
  {
    exponent = std::stoll(text.substr(epos + 1));
    text.resize(epos);
  }
  auto        dot      = text.find('.');
  std::string integral = text.substr(0, dot);
  std::string fraction = dot == std::string::npos ? "" : text.substr(dot + 1);
  if (integral.empty())
  {
    integral = "0";
  }
  BigInt   mantissa = ParseInteger(integral + fraction);
  exponent -= static_cast<long long>(fraction.size());
  Rational value = exponent >= 0 ? Rational{mantissa * Pow10(exponent)}
                                 : Rational{mantissa, Pow10(-exponent)};
  return negative ? Rational{-value} : value;
}

}  // namespace

Rational ParseRational(std::string const &raw)
{
  std::string text = boost::algorithm::trim_copy(raw);
  if (text.empty())
  {
    throw InvalidParameter("empty number");
  }
  auto slash = text.find('/');
  if (slash != std::string::npos)
  {
    Rational num = ParseDecimal(text.substr(0, slash));
    Rational den = ParseDecimal(text.substr(slash + 1));
    if (den == 0)
    {
      throw InvalidParameter("zero denominator in '" + text + "'");
    }
    return num / den;
  }
  return ParseDecimal(text);
}

std::vector<Rational> ParseRationalList(std::string const &text)
{
  std::vector<std::string> parts;
  boost::algorithm::split(parts, text, boost::algorithm::is_any_of(","));
  std::vector<Rational> out;
  out.reserve(parts.size());
  for (auto const &p : parts)
  {
    out.push_back(ParseRational(p));
  }
  return out;
}

std::string ToDecimal(Rational const &x, int significant_digits)
{
  if (x == 0)
  {
    return "0";
  }
  using Float = mp::cpp_bin_float_100;
  Float f     = Float{mp::numerator(x)} / Float{mp::denominator(x)};
  return f.str(significant_digits, std::ios_base::fmtflags{});
}

std::string ToFraction(Rational const &x)
{
  if (mp::denominator(x) == 1)
  {
    return mp::numerator(x).str();
  }
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

double ToDouble(Rational const &x)
{
  return x.convert_to<double>();
}

std::vector<double> ToDoubles(std::vector<Rational> const &xs)
{
  std::vector<double> out;
  out.reserve(xs.size());
  for (auto const &x : xs)
  {
    out.push_back(ToDouble(x));
  }
  return out;
}

}  // namespace epol
