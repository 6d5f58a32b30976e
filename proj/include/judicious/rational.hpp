// Copyright 2026 The Judicious Authors
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

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "judicious/error.hpp"

namespace judicious {

/// Exact rational arithmetic. All bounds, thresholds and certificates are
/// evaluated in this type; binary floating point never decides a verdict.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline Rational frac(std::int64_t num, std::int64_t den = 1) {
  require(den != 0, ErrorCode::kDomain, "zero denominator");
  return Rational(num, den);
}

/// Parses a decimal literal ("0.02959", "-1.4175", "1e-5", "37/500") exactly.
inline Rational dec(std::string_view text) {
  require(!text.empty(), ErrorCode::kParse, "empty decimal literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = dec(text.substr(0, slash));
    Rational den = dec(text.substr(slash + 1));
    require(den != 0, ErrorCode::kParse, "zero denominator in literal");
    return num / den;
  }
  bool negative = false;
  std::size_t pos = 0;
  if (text[pos] == '-' || text[pos] == '+') {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt digits = 0;
  int scale = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (ch >= '0' && ch <= '9') {
      digits = digits * 10 + (ch - '0');
      if (seen_point) ++scale;
      seen_digit = true;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (ch == 'e' || ch == 'E') {
      break;
    } else {
      fail(ErrorCode::kParse, "bad decimal literal '" + std::string(text) + "'");
    }
  }
  require(seen_digit, ErrorCode::kParse, "bad decimal literal '" + std::string(text) + "'");
  int exponent = -scale;
  if (pos < text.size()) {
    std::string exp_text(text.substr(pos + 1));
    require(!exp_text.empty(), ErrorCode::kParse, "bad exponent in '" + std::string(text) + "'");
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(exp_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == exp_text.size(), ErrorCode::kParse, "bad exponent in '" + std::string(text) + "'");
    exponent += e;
  }
  Rational value(digits);
  BigInt power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    value /= Rational(power);
  } else {
    value *= Rational(power);
  }
  return negative ? Rational(-value) : value;
}

inline BigInt floor_big(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

inline BigInt ceil_big(const Rational& r) {
  BigInt f = floor_big(r);
  return Rational(f) == r ? f : BigInt(f + 1);
}

inline std::int64_t floor_int(const Rational& r) { return static_cast<std::int64_t>(floor_big(r)); }
inline std::int64_t ceil_int(const Rational& r) { return static_cast<std::int64_t>(ceil_big(r)); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) {
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

/// Rounds half away from zero to `digits` decimal places.
inline Rational round_decimal(const Rational& r, int digits) {
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
  Rational scaled = r * Rational(scale);
  Rational half(1, 2);
  BigInt rounded = r >= 0 ? floor_big(scaled + half) : BigInt(-floor_big(-scaled + half));
  return Rational(rounded) / Rational(scale);
}

/// Fixed-point rendering with `digits` decimals (rounded half away from zero).
inline std::string format_decimal(const Rational& r, int digits) {
  Rational rounded = round_decimal(r, digits);
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
  BigInt scaled = boost::multiprecision::numerator(rounded * Rational(scale));
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string body = scaled.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

}  // namespace judicious
