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

#include <algorithm>
#include <string>

#include "judicious/error.hpp"
#include "judicious/rational.hpp"

namespace judicious {

/// Closed interval with exact rational endpoints. Every operation returns an
/// enclosure of the exact range.
class Interval {
 public:
  Interval() = default;
  Interval(const Rational& x) : lo_(x), hi_(x) {}  // NOLINT(google-explicit-constructor)
  Interval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
    require(lo <= hi, ErrorCode::kDomain, "interval endpoints out of order");
  }

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  Rational width() const { return hi_ - lo_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo_ + b.lo_, a.hi_ + b.hi_}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo_ - b.hi_, a.hi_ - b.lo_}; }
  friend Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo_ * b.lo_;
    Rational p2 = a.lo_ * b.hi_;
    Rational p3 = a.hi_ * b.lo_;
    Rational p4 = a.hi_ * b.hi_;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    require(!b.contains_zero(), ErrorCode::kDomain, "interval division by a range containing zero");
    return a * Interval(1 / b.hi_, 1 / b.lo_);
  }
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  friend Interval intersect(const Interval& a, const Interval& b) {
    Rational lo = std::max(a.lo_, b.lo_);
    Rational hi = std::min(a.hi_, b.hi_);
    require(lo <= hi, ErrorCode::kContractViolation, "disjoint enclosures of the same quantity");
    return {lo, hi};
  }

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

 private:
  Rational lo_;
  Rational hi_;
};

/// Tight square (x*x overestimates when the interval straddles zero).
inline Interval sqr(const Interval& x) {
  Rational a = x.lo() * x.lo();
  Rational b = x.hi() * x.hi();
  if (x.contains_zero()) return {Rational(0), std::max(a, b)};
  return {std::min(a, b), std::max(a, b)};
}
inline Rational sqr(const Rational& x) { return x * x; }

inline std::string to_string(const Interval& x) { return "[" + to_string(x.lo()) + ", " + to_string(x.hi()) + "]"; }

/// Forward-mode dual number; nest Dual<Dual<T>> for second derivatives.
template <typename T>
struct Dual {
  T v;
  T d;

  Dual() = default;
  Dual(const Rational& x) : v(x), d(Rational(0)) {}  // NOLINT(google-explicit-constructor)
  Dual(T value, T slope) : v(std::move(value)), d(std::move(slope)) {}

  friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
  friend Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
  friend Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
  friend Dual operator/(const Dual& a, const Dual& b) {
    T q = a.v / b.v;
    return {q, (a.d - q * b.d) / b.v};
  }
};

template <typename T>
Dual<T> sqr(const Dual<T>& x) {
  return x * x;
}

/// Positive square root enclosure with rational endpoints, tightened by
/// bisection until its width is at most `width`.
inline Interval sqrt_enclosure(const Rational& x, const Rational& width) {
  require(x >= 0, ErrorCode::kDomain, "square root of a negative number");
  require(width > 0, ErrorCode::kDomain, "width must be positive");
  Rational lo(0);
  Rational hi = x > 1 ? x : Rational(1);
  while (hi - lo > width) {
    Rational m = (lo + hi) / 2;
    if (m * m <= x) lo = m;
    else hi = m;
  }
  return {lo, hi};
}

}  // namespace judicious
