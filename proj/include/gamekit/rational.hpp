// Copyright 2026 The GameKit Authors
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

#ifndef GAMEKIT_RATIONAL_HPP_
#define GAMEKIT_RATIONAL_HPP_

// Exact rational arithmetic for the enumeration-based results (power indices,
// jury probabilities), so they can be reported as fractions.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "gamekit/common.hpp"

namespace gamekit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "0.6", "-1.25", "3/5", "6e-1" into an exact rational. Returns false
// on malformed input.
inline bool try_parse_rational(std::string_view s, Rational& out) {
  if (s.empty()) return false;
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    Rational num, den;
    if (!try_parse_rational(s.substr(0, slash), num) ||
        !try_parse_rational(s.substr(slash + 1), den) || den == 0)
      return false;
    out = num / den;
    return true;
  }
  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  BigInt digits = 0;
  long long scale = 0;
  bool any_digit = false, seen_point = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (ch >= '0' && ch <= '9') {
      digits = digits * 10 + (ch - '0');
      any_digit = true;
      if (seen_point) --scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) return false;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') return false;
    ++i;
    bool exp_negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) exp_negative = s[i++] == '-';
    if (i == s.size()) return false;
    long long exp = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9' || exp > 100000) return false;
      exp = exp * 10 + (s[i] - '0');
    }
    scale += exp_negative ? -exp : exp;
  }
  BigInt ten_pow = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
  Rational r = scale < 0 ? Rational(digits, ten_pow) : Rational(digits * ten_pow);
  out = negative ? Rational(-r) : r;
  return true;
}

inline Rational parse_rational(std::string_view s) {
  Rational r;
  if (!try_parse_rational(s, r)) throw ParseError("not an exact decimal: '" + std::string(s) + "'");
  return r;
}

// "81/125", or "1" for integers.
inline std::string to_fraction_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_fraction_string(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return "0/0";
  std::uint64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num /= g;
  den /= g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace gamekit

#endif  // GAMEKIT_RATIONAL_HPP_
