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
#include <array>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "judicious/error.hpp"
#include "judicious/interval.hpp"
#include "judicious/parallel.hpp"
#include "judicious/rational.hpp"

namespace judicious {

enum class Relation { kLess, kLessEq, kGreater, kGreaterEq, kEqual };

inline std::string to_string(Relation r) {
  switch (r) {
    case Relation::kLess: return "<";
    case Relation::kLessEq: return "<=";
    case Relation::kGreater: return ">";
    case Relation::kGreaterEq: return ">=";
    case Relation::kEqual: return "==";
  }
  return "?";
}

inline bool holds(const Rational& value, Relation r, const Rational& bound) {
  switch (r) {
    case Relation::kLess: return value < bound;
    case Relation::kLessEq: return value <= bound;
    case Relation::kGreater: return value > bound;
    case Relation::kGreaterEq: return value >= bound;
    case Relation::kEqual: return value == bound;
  }
  return false;
}

/// True when every point of the enclosure satisfies the relation.
inline bool holds(const Interval& e, Relation r, const Rational& bound) {
  switch (r) {
    case Relation::kLess: return e.hi() < bound;
    case Relation::kLessEq: return e.hi() <= bound;
    case Relation::kGreater: return e.lo() > bound;
    case Relation::kGreaterEq: return e.lo() >= bound;
    case Relation::kEqual: return e.lo() == bound && e.hi() == bound;
  }
  return false;
}

/// Whether `a` is a worse (closer to violating) value than `b`.
inline bool worse(Relation r, const Rational& a, const Rational& b) {
  return (r == Relation::kGreater || r == Relation::kGreaterEq) ? a < b : a > b;
}

/// One function of one variable, evaluable exactly at a point, as a range
/// enclosure over an interval, and as an enclosure of its derivative.
struct UnivariateFn {
  std::function<Rational(const Rational&)> at;
  std::function<Interval(const Interval&)> enclose;
  std::function<Interval(const Interval&)> enclose_slope;
};

struct BivariateFn {
  std::function<Rational(const Rational&, const Rational&)> at;
  std::function<Interval(const Interval&, const Interval&)> enclose;
};

template <typename F>
UnivariateFn univariate(F f) {
  return {[f](const Rational& x) { return Rational(f(x)); }, [f](const Interval& x) { return Interval(f(x)); },
          [f](const Interval& x) { return f(Dual<Interval>(x, Interval(Rational(1)))).d; }};
}

template <typename F>
UnivariateFn derivative_of(F f) {
  using D = Dual<Interval>;
  return {[f](const Rational& x) { return f(Dual<Rational>(x, Rational(1))).d; },
          [f](const Interval& x) { return f(D(x, Interval(Rational(1)))).d; },
          [f](const Interval& x) {
            auto y = f(Dual<D>(D(x, Interval(Rational(1))), D(Interval(Rational(1)), Interval(Rational(0)))));
            return y.d.d;
          }};
}

/// Partial derivative in the first argument.
template <typename F>
BivariateFn partial_x(F f) {
  using D = Dual<Interval>;
  return {[f](const Rational& x, const Rational& y) {
            return f(Dual<Rational>(x, Rational(1)), Dual<Rational>(y, Rational(0))).d;
          },
          [f](const Interval& x, const Interval& y) {
            return f(D(x, Interval(Rational(1))), D(y, Interval(Rational(0)))).d;
          }};
}

enum class Verdict { kVerified, kRefuted, kUndecided };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kVerified: return "verified";
    case Verdict::kRefuted: return "refuted";
    case Verdict::kUndecided: return "undecided";
  }
  return "?";
}

enum class ClaimKind { kCubic, kGrid, kGrid2, kIdentity, kMonotoneEndpoint };

inline std::string to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::kCubic: return "critical-points";
    case ClaimKind::kGrid: return "grid";
    case ClaimKind::kGrid2: return "grid2";
    case ClaimKind::kIdentity: return "identity";
    case ClaimKind::kMonotoneEndpoint: return "monotone-endpoint";
  }
  return "?";
}

/// A fixed claim "f(x) REL bound for all x in the domain" (or an identity).
struct ClaimSpec {
  std::string id;
  std::string statement;
  ClaimKind kind = ClaimKind::kGrid;
  Relation relation = Relation::kLess;
  Rational bound;
  Rational x_lo;
  Rational x_hi;
  Rational y_lo;
  Rational y_hi;
  bool expected_verified = true;
  bool control = false;
  std::array<Rational, 4> cubic{};  // t^3, t^2, t, 1
  UnivariateFn f;                   // grid, identity residual, endpoint function
  BivariateFn g;                    // grid2
  UnivariateFn slope;               // monotone-endpoint: derivative of f
  Relation slope_relation = Relation::kGreater;
  int degree = 0;                   // identity: residual is a polynomial of at most this degree
};

struct Cell {
  Rational x_lo;
  Rational x_hi;
  Rational y_lo;
  Rational y_hi;
  Interval enclosure;
};

struct CertifyOptions {
  Rational initial_width = dec("0.001");
  Rational min_width = dec("0.000001");
  bool keep_cells = true;
  int workers = 1;
};

struct ClaimResult {
  std::string id;
  std::string statement;
  ClaimKind kind = ClaimKind::kGrid;
  Relation relation = Relation::kLess;
  Rational bound;
  Rational x_lo;
  Rational x_hi;
  std::optional<std::pair<Rational, Rational>> y_domain;
  bool expected_verified = true;
  bool control = false;
  Verdict verdict = Verdict::kUndecided;
  std::optional<Rational> worst_x;
  std::optional<Rational> worst_y;
  std::optional<Rational> worst_value;
  std::size_t evaluations = 0;
  std::vector<Cell> cells;
  std::string detail;

  bool passed() const {
    if (verdict == Verdict::kUndecided) return false;
    return (verdict == Verdict::kVerified) == expected_verified;
  }
};

namespace detail {

inline int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

/// Sign of x + y sqrt(d), d >= 0, decided exactly.
inline int sign_with_root(const Rational& x, const Rational& y, const Rational& d) {
  int sx = sign(x);
  int sy = d == 0 ? 0 : sign(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  Rational lhs = x * x;
  Rational rhs = y * y * d;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sx : sy;
}

inline Rational eval_cubic(const std::array<Rational, 4>& p, const Rational& t) {
  return ((p[0] * t + p[1]) * t + p[2]) * t + p[3];
}

class Recorder {
 public:
  Recorder(ClaimResult& r) : r_(r) {}  // NOLINT(google-explicit-constructor)
  /// Records an exact sample; returns false if it violates the claim.
  bool sample(const Rational& x, const Rational& value, const std::optional<Rational>& y = std::nullopt) {
    ++r_.evaluations;
    if (!r_.worst_value || worse(r_.relation, value, *r_.worst_value)) {
      r_.worst_value = value;
      r_.worst_x = x;
      r_.worst_y = y;
    }
    if (!holds(value, r_.relation, r_.bound)) {
      r_.verdict = Verdict::kRefuted;
      r_.worst_value = value;
      r_.worst_x = x;
      r_.worst_y = y;
      return false;
    }
    return true;
  }

 private:
  ClaimResult& r_;
};

inline Interval mean_value_enclosure(const UnivariateFn& f, const Interval& x) {
  Rational m = x.mid();
  Interval offset(x.lo() - m, x.hi() - m);
  return Interval(f.at(m)) + f.enclose_slope(x) * offset;
}

/// Cells of width at most `width` covering [lo, hi], left to right.
inline std::vector<Interval> initial_cells(const Rational& lo, const Rational& hi, const Rational& width) {
  std::vector<Interval> cells;
  if (lo == hi) {
    cells.emplace_back(lo, hi);
    return cells;
  }
  std::int64_t count = ceil_int((hi - lo) / width);
  for (std::int64_t k = 0; k < count; ++k) {
    Rational a = lo + (hi - lo) * Rational(k) / Rational(count);
    Rational b = lo + (hi - lo) * Rational(k + 1) / Rational(count);
    cells.emplace_back(a, b);
  }
  return cells;
}

inline void run_grid(const ClaimSpec& spec, const UnivariateFn& f, Relation relation, const Rational& bound,
                     const CertifyOptions& opt, ClaimResult& r) {
  Recorder rec(r);
  if (!rec.sample(spec.x_lo, f.at(spec.x_lo))) return;
  for (const Interval& start : initial_cells(spec.x_lo, spec.x_hi, opt.initial_width)) {
    if (!rec.sample(start.hi(), f.at(start.hi()))) return;
    std::vector<Interval> stack{start};
    while (!stack.empty()) {
      Interval x = stack.back();
      stack.pop_back();
      Interval e = f.enclose(x);
      if (!holds(e, relation, bound)) e = intersect(e, mean_value_enclosure(f, x));
      if (holds(e, relation, bound)) {
        if (opt.keep_cells) r.cells.push_back({x.lo(), x.hi(), Rational(0), Rational(0), e});
        continue;
      }
      Rational m = x.mid();
      if (!rec.sample(m, f.at(m))) return;
      if (x.width() <= opt.min_width) {
        r.verdict = Verdict::kUndecided;
        r.detail = "cell " + to_string(x) + " undecided at the width floor";
        return;
      }
      stack.emplace_back(m, x.hi());
      stack.emplace_back(x.lo(), m);
    }
  }
  r.verdict = Verdict::kVerified;
}

inline void run_grid2(const ClaimSpec& spec, const CertifyOptions& opt, ClaimResult& r) {
  Recorder rec(r);
  struct Box {
    Interval x;
    Interval y;
  };
  for (const Interval& xs : initial_cells(spec.x_lo, spec.x_hi, opt.initial_width)) {
    for (const Interval& ys : initial_cells(spec.y_lo, spec.y_hi, opt.initial_width)) {
      std::vector<Box> stack{{xs, ys}};
      while (!stack.empty()) {
        Box b = stack.back();
        stack.pop_back();
        Rational mx = b.x.mid();
        Rational my = b.y.mid();
        if (!rec.sample(mx, spec.g.at(mx, my), my)) return;
        Interval e = spec.g.enclose(b.x, b.y);
        if (holds(e, spec.relation, spec.bound)) {
          if (opt.keep_cells) r.cells.push_back({b.x.lo(), b.x.hi(), b.y.lo(), b.y.hi(), e});
          continue;
        }
        if (b.x.width() <= opt.min_width && b.y.width() <= opt.min_width) {
          r.verdict = Verdict::kUndecided;
          r.detail = "box " + to_string(b.x) + " x " + to_string(b.y) + " undecided at the width floor";
          return;
        }
        stack.push_back({Interval(b.x.lo(), mx), Interval(b.y.lo(), my)});
        stack.push_back({Interval(b.x.lo(), mx), Interval(my, b.y.hi())});
        stack.push_back({Interval(mx, b.x.hi()), Interval(b.y.lo(), my)});
        stack.push_back({Interval(mx, b.x.hi()), Interval(my, b.y.hi())});
      }
    }
  }
  r.verdict = Verdict::kVerified;
}

inline void run_identity(const ClaimSpec& spec, ClaimResult& r) {
  // A polynomial of degree <= d vanishing at d + 1 distinct points is zero;
  // one extra point is checked for good measure.
  int points = spec.degree + 2;
  for (int k = 0; k < points; ++k) {
    Rational x = spec.x_lo + (spec.x_hi - spec.x_lo) * Rational(k) / Rational(points - 1);
    Rational v = spec.f.at(x);
    ++r.evaluations;
    if (v != 0) {
      r.verdict = Verdict::kRefuted;
      r.worst_x = x;
      r.worst_value = v;
      return;
    }
  }
  r.worst_value = Rational(0);
  r.verdict = Verdict::kVerified;
}

inline void run_cubic(const ClaimSpec& spec, ClaimResult& r) {
  std::array<Rational, 4> p = spec.cubic;
  p[3] -= spec.bound;  // claim becomes p(t) REL 0
  require(p[0] != 0, ErrorCode::kDomain, "leading coefficient must be nonzero");
  Recorder rec(r);
  bool ok = rec.sample(spec.x_lo, eval_cubic(spec.cubic, spec.x_lo));
  ok = ok && rec.sample(spec.x_hi, eval_cubic(spec.cubic, spec.x_hi));
  if (!ok) return;
  // p'(t) = 3a t^2 + 2b t + c; roots u +- v sqrt(disc).
  const Rational& a = p[0];
  const Rational& b = p[1];
  const Rational& c = p[2];
  const Rational& d = p[3];
  Rational disc = b * b - 3 * a * c;
  std::string detail;
  if (disc >= 0) {
    Rational u = -b / (3 * a);
    Rational v = 1 / (3 * a);
    // p = (t/3 + b/(9a)) p' + (alpha t + beta).
    Rational alpha = c * 2 / 3 - b * b * 2 / (9 * a);
    Rational beta = d - b * c / (9 * a);
    for (int s : {-1, 1}) {
      Rational vs = v * s;
      bool inside = sign_with_root(u - spec.x_lo, vs, disc) > 0 && sign_with_root(spec.x_hi - u, -vs, disc) > 0;
      if (!inside) continue;
      int value_sign = sign_with_root(alpha * u + beta, alpha * vs, disc);
      Interval root = sqrt_enclosure(disc, dec("1e-30"));
      Rational approx = u + vs * root.mid();
      Rational approx_value = eval_cubic(spec.cubic, approx);
      detail += "critical point ~" + format_decimal(approx, 12) + " value sign " + std::to_string(value_sign) + "; ";
      bool violates = false;
      switch (spec.relation) {
        case Relation::kLess: violates = value_sign >= 0; break;
        case Relation::kLessEq: violates = value_sign > 0; break;
        case Relation::kGreater: violates = value_sign <= 0; break;
        case Relation::kGreaterEq: violates = value_sign < 0; break;
        case Relation::kEqual: violates = value_sign != 0; break;
      }
      ++r.evaluations;
      if (violates) {
        r.verdict = Verdict::kRefuted;
        r.worst_x = approx;
        r.worst_value = approx_value;
        r.detail = detail;
        return;
      }
      if (worse(spec.relation, approx_value, *r.worst_value)) {
        r.worst_x = approx;
        r.worst_value = approx_value;
      }
    }
  }
  if (detail.empty()) detail = "no interior critical point";
  r.detail = detail;
  r.verdict = Verdict::kVerified;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Functions of the catalog. Decimal constants are exact rationals.

namespace fns {

inline const Rational& k(const char* text) {
  // Small fixed set of literals; parsed once per call site.
  thread_local std::deque<std::pair<const char*, Rational>> cache;
  for (const auto& [p, v] : cache) {
    if (p == text) return v;
  }
  cache.emplace_back(text, dec(text));
  return cache.back().second;
}

/// Upper bound on e(A)/n^2 in the split around a heavy edge, sub-case i,
/// as a function of c = |N1 ∩ N2|/n and t = a2 + c.
template <typename T>
T f_split(int i, const T& c, const T& t) {
  Rational r = frac(i, 100);
  Rational s = Rational(1, 2) - r;
  T u = T(s) - t;
  return T(k("0.28")) * c * u / (T(k("1.18")) - t - c) + (t - c) * u + (t - c) * c + u * u / T(Rational(4)) +
         T(s * r + r * r / 3);
}

inline Rational split_c(int i) { return k("0.22") + frac(i, 100); }

/// The printed closed form of f_split(i, 0.22 + 0.01i, t).
template <typename T>
T f_split_printed(int i, const T& t) {
  static const std::array<std::array<const char*, 5>, 5> rows{{
      {"141/200", "-12077/120000", "161/2500", "-7889/250000", "19/20"},
      {"18/25", "-791/7500", "42/625", "-504/15625", "47/50"},
      {"147/200", "-883/8000", "7/100", "-329/10000", "93/100"},
      {"3/4", "-3461/30000", "91/1250", "-2093/62500", "23/25"},
      {"153/200", "-14453/120000", "189/2500", "-1701/50000", "91/100"},
  }};
  const auto& row = rows[static_cast<std::size_t>(i - 1)];
  return T(Rational(-3, 4)) * t * t + T(k(row[0])) * t + T(k(row[1])) + (T(k(row[2])) * t + T(k(row[3]))) / (t - T(k(row[4])));
}

inline std::array<Rational, 4> split_cubic(int i) {
  static const std::array<std::array<const char*, 4>, 5> rows{{
      {"0.75", "-1.4175", "0.77990", "-0.13416"},
      {"0.75", "-1.425", "0.78898", "-0.13625"},
      {"0.75", "-1.4325", "0.79783", "-0.13838"},
      {"0.75", "-1.44", "0.80648", "-0.14054"},
      {"0.75", "-1.4475", "0.81490", "-0.14273"},
  }};
  const auto& row = rows[static_cast<std::size_t>(i - 1)];
  return {k(row[0]), k(row[1]), k(row[2]), k(row[3])};
}

template <typename T>
T cubic_at(const std::array<Rational, 4>& p, const T& t) {
  return ((T(p[0]) * t + T(p[1])) * t + T(p[2])) * t + T(p[3]);
}

/// (F - 0.0739)(0.96 - 0.01i - t): the sign-equivalent polynomial form.
template <typename T>
T g_split(int i, const T& t) {
  T fv = f_split(i, T(split_c(i)), t);
  return (fv - T(k("0.0739"))) * (T(k("0.96") - frac(i, 100)) - t);
}

/// Density bound in the sparse-neighbourhood case, x = |N1|/n.
template <typename T>
T case31_quadratic(const T& x) {
  return T(Rational(-2, 3)) * x * x + T(Rational(1, 3) + k("0.14")) * x + T(Rational(1, 3));
}

template <typename T>
T case31_sum(const T& x) {
  T y = T(Rational(1)) - x;
  return T(k("0.14")) * x + x * y + y * y / T(Rational(3));
}

/// e(A)/n^2 bound after maximising over c, as a function of t.
template <typename T>
T case331_f(const T& t) {
  return T(k("0.18")) * (T(k("0.28")) / (T(Rational(1)) - t) - T(Rational(1))) * (T(Rational(1, 2)) - t) -
         t * t / T(Rational(2)) + t / T(Rational(4)) + T(Rational(1, 16));
}

template <typename T>
T case331_f_prime_printed(const T& t) {
  T w = t - T(Rational(1));
  return T(k("0.43")) - t - T(k("0.0252")) / (w * w);
}

/// (0.28/(1.18 - t - c) - 1) c.
template <typename T>
T g_t(const T& c, const T& t) {
  return (T(k("0.28")) / (T(k("1.18")) - t - c) - T(Rational(1))) * c;
}

/// 1/16 + e - 4e^2/(1 - alpha)^2.
template <typename T>
T g_alpha(const Rational& alpha, const T& e) {
  Rational w = (1 - alpha) * (1 - alpha);
  return T(Rational(1, 16)) + e - T(Rational(4)) * e * e / T(w);
}

template <typename T>
T case3_threshold(const T& a) {
  return T(Rational(5, 72)) - (T(Rational(1)) - a) * (a - T(Rational(1, 2)));
}

template <typename T>
T f_alpha(const T& a) {
  T one(Rational(1));
  T half(Rational(1, 2));
  T w = one - a;
  return T(Rational(5, 72)) + (a - one) * (a - half) - T(Rational(25, 1296)) / (w * w) -
         T(Rational(5, 9)) * (half - a) / w - T(Rational(4)) * (a - half) * (a - half);
}

template <typename T>
T f_alpha_prime_printed(const T& a) {
  T one(Rational(1));
  T w = a - one;
  return T(Rational(5, 18)) / (w * w) * (one - T(Rational(5, 36)) / (one - a)) - T(Rational(6)) * a + T(Rational(5, 2));
}

template <typename T>
T bracket15(const T& a) {
  T w = a - T(Rational(1));
  return (T(Rational(6)) * a - T(Rational(5, 2))) * w * w - T(Rational(5, 27));
}

template <typename T>
T case2_edges(const T& a) {
  T w = T(Rational(1)) - a;
  return a * w + T(k("0.16")) * w * w;
}

}  // namespace fns

// ---------------------------------------------------------------------------

inline const std::vector<ClaimSpec>& claim_catalog() {
  static const std::vector<ClaimSpec> catalog = [] {
    std::vector<ClaimSpec> c;
    const Rational t_lo = dec("0.39");
    const Rational t_hi = dec("0.45");
    auto grid = [&](std::string id, std::string statement, UnivariateFn f, Relation rel, Rational bound, Rational lo,
                    Rational hi) {
      ClaimSpec s;
      s.id = std::move(id);
      s.statement = std::move(statement);
      s.kind = ClaimKind::kGrid;
      s.f = std::move(f);
      s.relation = rel;
      s.bound = std::move(bound);
      s.x_lo = std::move(lo);
      s.x_hi = std::move(hi);
      return s;
    };
    auto identity = [&](std::string id, std::string statement, std::function<Rational(const Rational&)> residual,
                        int degree, Rational lo, Rational hi) {
      ClaimSpec s;
      s.id = std::move(id);
      s.statement = std::move(statement);
      s.kind = ClaimKind::kIdentity;
      s.relation = Relation::kEqual;
      s.bound = Rational(0);
      s.f.at = std::move(residual);
      s.degree = degree;
      s.x_lo = std::move(lo);
      s.x_hi = std::move(hi);
      return s;
    };
    for (int i = 1; i <= 5; ++i) {
      std::string is = std::to_string(i);
      auto p = fns::split_cubic(i);
      ClaimSpec cubic;
      cubic.id = "CUBIC" + is;
      cubic.statement = format_decimal(p[0], 2) + "t^3 " + format_decimal(p[1], 4) + "t^2 + " + format_decimal(p[2], 5) +
                        "t " + format_decimal(p[3], 5) + " < 0 on [0.39, 0.45]";
      cubic.kind = ClaimKind::kCubic;
      cubic.cubic = p;
      cubic.relation = Relation::kLess;
      cubic.bound = Rational(0);
      cubic.x_lo = t_lo;
      cubic.x_hi = t_hi;
      c.push_back(cubic);
    }
    for (int i = 1; i <= 5; ++i) {
      std::string is = std::to_string(i);
      auto p = fns::split_cubic(i);
      c.push_back(grid("G" + is, "(F_" + is + "(c_" + is + ", t) - 0.0739)(" + format_decimal(dec("0.96") - frac(i, 100), 2) +
                                     " - t) - cubic_" + is + "(t) <= 0 on [0.39, 0.45]",
                       univariate([i, p](const auto& t) {
                         return fns::g_split(i, t) - fns::cubic_at(p, t);
                       }),
                       Relation::kLessEq, Rational(0), t_lo, t_hi));
    }
    for (int i = 1; i <= 5; ++i) {
      std::string is = std::to_string(i);
      c.push_back(grid("F" + is + "_AT_C",
                       "F_" + is + "(" + format_decimal(fns::split_c(i), 2) + ", t) < 0.0739 on [0.39, 0.45]",
                       univariate([i](const auto& t) {
                         using T = std::decay_t<decltype(t)>;
                         return fns::f_split(i, T(fns::split_c(i)), t);
                       }),
                       Relation::kLess, dec("0.0739"), t_lo, t_hi));
    }
    for (int i = 1; i <= 5; ++i) {
      std::string is = std::to_string(i);
      Rational pole = fns::k("0.96") - frac(i, 100);
      c.push_back(identity("F" + is + "_TRANSCRIPTION",
                           "printed closed form of F_" + is + "(c_" + is + ", t) equals the definition",
                           [i, pole](const Rational& t) {
                             return (fns::f_split(i, fns::split_c(i), t) - fns::f_split_printed(i, t)) * (t - pole);
                           },
                           3, t_lo, t_hi));
    }
    for (int i = 1; i <= 5; ++i) {
      std::string is = std::to_string(i);
      ClaimSpec s;
      s.id = "DFDC" + is;
      s.statement = "dF_" + is + "/dc < 0 on c in [" + format_decimal(fns::split_c(i), 2) + ", " +
                    format_decimal(fns::split_c(i) + frac(1, 100), 2) + "], t in [0.39, 0.45]";
      s.kind = ClaimKind::kGrid2;
      s.g = partial_x([i](const auto& cc, const auto& t) { return fns::f_split(i, cc, t); });
      s.relation = Relation::kLess;
      s.bound = Rational(0);
      s.x_lo = fns::split_c(i);
      s.x_hi = fns::split_c(i) + frac(1, 100);
      s.y_lo = t_lo;
      s.y_hi = t_hi;
      c.push_back(std::move(s));
    }
    c.push_back(identity("CASE31_IDENTITY", "0.14x + x(1-x) + (1-x)^2/3 = -2x^2/3 + (1/3 + 0.14)x + 1/3",
                         [](const Rational& x) { return fns::case31_sum(x) - fns::case31_quadratic(x); }, 2, dec("0.79"),
                         Rational(1)));
    c.push_back(grid("CASE31_QUAD", "d/dx(-2x^2/3 + (1/3 + 0.14)x + 1/3) < 0 on [0.79, 1]",
                     derivative_of([](const auto& x) { return fns::case31_quadratic(x); }), Relation::kLess, Rational(0),
                     dec("0.79"), Rational(1)));
    c.push_back(grid("CASE331", "0.43 - t - 0.0252/(t-1)^2 < 0 on [0.39, 0.45]",
                     univariate([](const auto& t) { return fns::case331_f_prime_printed(t); }), Relation::kLess,
                     Rational(0), t_lo, t_hi));
    c.push_back(identity("CASE331_IDENTITY", "0.43 - t - 0.0252/(t-1)^2 is the derivative of f(t)",
                         [](const Rational& t) {
                           Rational w = Rational(1) - t;
                           Rational derived = fns::case331_f(Dual<Rational>(t, Rational(1))).d;
                           return (derived - fns::case331_f_prime_printed(t)) * w * w;
                         },
                         4, t_lo, t_hi));
    {
      ClaimSpec s;
      s.id = "GT_DC";
      s.statement = "d/dc[(0.28/(1.18-t-c) - 1)c] < 0 on c in [0.18, 0.23], t in [0.39, 0.45]";
      s.kind = ClaimKind::kGrid2;
      s.g = partial_x([](const auto& cc, const auto& t) { return fns::g_t(cc, t); });
      s.relation = Relation::kLess;
      s.bound = Rational(0);
      s.x_lo = dec("0.18");
      s.x_hi = dec("0.23");
      s.y_lo = t_lo;
      s.y_hi = t_hi;
      c.push_back(std::move(s));
    }
    {
      Rational alpha = dec("0.55");
      Rational lo = (1 - alpha) * (1 - alpha) / 8;
      c.push_back(grid("G_ALPHA", "d/de[1/16 + e - 4e^2/(1-a)^2] <= 0 on e in [(1-a)^2/8, 1], a = 0.55",
                       derivative_of([alpha](const auto& e) { return fns::g_alpha(alpha, e); }), Relation::kLessEq,
                       Rational(0), lo, Rational(1)));
    }
    c.push_back(identity("CASE3_GAP_IDENTITY", "5/72 - (1-a)(a-1/2) - (1-a)^2/8 = (21a-16)(3a-2)/72",
                         [](const Rational& a) {
                           return fns::case3_threshold(a) - (1 - a) * (1 - a) / 8 - (21 * a - 16) * (3 * a - 2) / 72;
                         },
                         2, Rational(1, 2), Rational(7, 12)));
    c.push_back(grid("CASE3_GAP", "(21a-16)(3a-2)/72 > 0 on [1/2, 7/12]",
                     univariate([](const auto& a) {
                       using T = std::decay_t<decltype(a)>;
                       return (T(Rational(21)) * a - T(Rational(16))) * (T(Rational(3)) * a - T(Rational(2))) / T(Rational(72));
                     }),
                     Relation::kGreater, Rational(0), Rational(1, 2), Rational(7, 12)));
    c.push_back(identity("F_ALPHA_DEF", "g_a(5/72 - (1-a)(a-1/2)) - 1/16 = f(a)",
                         [](const Rational& a) {
                           Rational w = 1 - a;
                           return (fns::g_alpha(a, fns::case3_threshold(a)) - Rational(1, 16) - fns::f_alpha(a)) * w * w;
                         },
                         4, Rational(1, 2), Rational(7, 12)));
    c.push_back(identity("F_PRIME_IDENTITY", "printed f'(a) is the derivative of f(a)",
                         [](const Rational& a) {
                           Rational w = 1 - a;
                           Rational derived = fns::f_alpha(Dual<Rational>(a, Rational(1))).d;
                           return (derived - fns::f_alpha_prime_printed(a)) * w * w * w;
                         },
                         4, Rational(1, 2), Rational(7, 12)));
    c.push_back(grid("F_PRIME_ALPHA", "f'(a) < 0 on [1/2, 7/12]",
                     univariate([](const auto& a) { return fns::f_alpha_prime_printed(a); }), Relation::kLess, Rational(0),
                     Rational(1, 2), Rational(7, 12)));
    c.push_back(grid("F_PRIME_ALPHA_POS", "f'(a) > 0 on [1/2, 7/12]",
                     univariate([](const auto& a) { return fns::f_alpha_prime_printed(a); }), Relation::kGreater,
                     Rational(0), Rational(1, 2), Rational(7, 12)));
    c.push_back(grid("BRACKET_SIGN", "(6a - 5/2)(a-1)^2 - 5/27 < 0 on [1/2, 7/12]",
                     univariate([](const auto& a) { return fns::bracket15(a); }), Relation::kLess, Rational(0),
                     Rational(1, 2), Rational(7, 12)));
    {
      ClaimSpec s;
      s.id = "F_ALPHA";
      s.statement = "f(a) <= 1/144 on [1/2, 7/12] (f increasing, value 1/144 at 7/12)";
      s.kind = ClaimKind::kMonotoneEndpoint;
      s.f = univariate([](const auto& a) { return fns::f_alpha(a); });
      s.slope = derivative_of([](const auto& a) { return fns::f_alpha(a); });
      s.slope_relation = Relation::kGreater;
      s.relation = Relation::kLessEq;
      s.bound = Rational(1, 144);
      s.x_lo = Rational(1, 2);
      s.x_hi = Rational(7, 12);
      c.push_back(std::move(s));
    }
    c.push_back(grid("CASE2_EDGES", "a(1-a) + 0.16(1-a)^2 < 0.271 on [7/12, 0.62]",
                     univariate([](const auto& a) { return fns::case2_edges(a); }), Relation::kLess, dec("0.271"),
                     Rational(7, 12), dec("0.62")));
    {
      ClaimSpec s;
      s.id = "CONTROL_CUBIC";
      s.statement = "0.75t^3 - 1.4175t^2 + 0.77990t + 0.2 < 0 on [0.39, 0.45] (falsification control)";
      s.kind = ClaimKind::kCubic;
      s.cubic = fns::split_cubic(1);
      s.cubic[3] = dec("0.2");
      s.relation = Relation::kLess;
      s.bound = Rational(0);
      s.x_lo = t_lo;
      s.x_hi = t_hi;
      s.expected_verified = false;
      s.control = true;
      c.push_back(std::move(s));
    }
    {
      ClaimSpec s = grid("CONTROL_CASE331", "0.43 - t - 0.0252/(t-1)^2 < -0.05 on [0.39, 0.45] (falsification control)",
                         univariate([](const auto& t) { return fns::case331_f_prime_printed(t); }), Relation::kLess,
                         dec("-0.05"), t_lo, t_hi);
      s.expected_verified = false;
      s.control = true;
      c.push_back(std::move(s));
    }
    return c;
  }();
  return catalog;
}

inline std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& s : claim_catalog()) ids.push_back(s.id);
  return ids;
}

inline const ClaimSpec& find_claim(const std::string& id) {
  for (const auto& s : claim_catalog()) {
    if (s.id == id) return s;
  }
  fail(ErrorCode::kUnknownId, "unknown claim id '" + id + "'");
}

inline ClaimResult verify_claim(const ClaimSpec& spec, const CertifyOptions& opt = {}) {
  ClaimResult r;
  r.id = spec.id;
  r.statement = spec.statement;
  r.kind = spec.kind;
  r.relation = spec.relation;
  r.bound = spec.bound;
  r.x_lo = spec.x_lo;
  r.x_hi = spec.x_hi;
  if (spec.kind == ClaimKind::kGrid2) r.y_domain = std::make_pair(spec.y_lo, spec.y_hi);
  r.expected_verified = spec.expected_verified;
  r.control = spec.control;
  switch (spec.kind) {
    case ClaimKind::kCubic: detail::run_cubic(spec, r); break;
    case ClaimKind::kGrid: detail::run_grid(spec, spec.f, spec.relation, spec.bound, opt, r); break;
    case ClaimKind::kGrid2: detail::run_grid2(spec, opt, r); break;
    case ClaimKind::kIdentity: detail::run_identity(spec, r); break;
    case ClaimKind::kMonotoneEndpoint: {
      // Certify the slope sign, then evaluate at the extremal endpoint.
      ClaimResult slope = r;
      slope.relation = spec.slope_relation;
      slope.bound = Rational(0);
      detail::run_grid(spec, spec.slope, spec.slope_relation, Rational(0), opt, slope);
      r.evaluations = slope.evaluations;
      r.cells = std::move(slope.cells);
      if (slope.verdict != Verdict::kVerified) {
        r.verdict = Verdict::kUndecided;
        r.detail = "slope sign not certified: " + to_string(slope.verdict) + " " + slope.detail;
        break;
      }
      bool increasing = spec.slope_relation == Relation::kGreater || spec.slope_relation == Relation::kGreaterEq;
      bool upper = spec.relation == Relation::kLess || spec.relation == Relation::kLessEq;
      Rational x = increasing == upper ? spec.x_hi : spec.x_lo;
      Rational v = spec.f.at(x);
      ++r.evaluations;
      r.worst_x = x;
      r.worst_value = v;
      r.verdict = holds(v, spec.relation, spec.bound) ? Verdict::kVerified : Verdict::kRefuted;
      r.detail = std::string("slope ") + to_string(spec.slope_relation) + " 0 certified; extremum at " + to_string(x);
      break;
    }
  }
  return r;
}

inline ClaimResult verify_claim(const std::string& id, const CertifyOptions& opt = {}) {
  return verify_claim(find_claim(id), opt);
}

inline ClaimResult verify_cubic_negativity(int i, const CertifyOptions& opt = {}) {
  require(i >= 1 && i <= 5, ErrorCode::kIndex, "cubic index must be in 1..5");
  return verify_claim("CUBIC" + std::to_string(i), opt);
}

inline ClaimResult verify_rational_bound(const std::string& id, const CertifyOptions& opt = {}) {
  return verify_claim(id, opt);
}

/// Re-evaluates every recorded cell (or the exact points of identity and
/// cubic claims) and checks that the verdict is reproduced.
inline bool replay(const ClaimResult& r) {
  const ClaimSpec& spec = find_claim(r.id);
  if (r.verdict != Verdict::kVerified) return verify_claim(spec).verdict == r.verdict;
  switch (spec.kind) {
    case ClaimKind::kGrid:
    case ClaimKind::kMonotoneEndpoint: {
      const UnivariateFn& f = spec.kind == ClaimKind::kGrid ? spec.f : spec.slope;
      Relation rel = spec.kind == ClaimKind::kGrid ? spec.relation : spec.slope_relation;
      Rational bound = spec.kind == ClaimKind::kGrid ? spec.bound : Rational(0);
      Rational covered = spec.x_lo;
      std::vector<Cell> cells = r.cells;
      std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.x_lo < b.x_lo; });
      for (const auto& c : cells) {
        if (c.x_lo != covered) return false;
        Interval x(c.x_lo, c.x_hi);
        Interval e = f.enclose(x);
        if (!holds(e, rel, bound)) e = intersect(e, detail::mean_value_enclosure(f, x));
        if (!holds(e, rel, bound)) return false;
        covered = c.x_hi;
      }
      if (covered != spec.x_hi) return false;
      if (spec.kind == ClaimKind::kMonotoneEndpoint) return verify_claim(spec).verdict == Verdict::kVerified;
      return true;
    }
    case ClaimKind::kGrid2: {
      Rational area(0);
      for (const auto& c : r.cells) {
        if (!holds(spec.g.enclose(Interval(c.x_lo, c.x_hi), Interval(c.y_lo, c.y_hi)), spec.relation, spec.bound)) return false;
        area += (c.x_hi - c.x_lo) * (c.y_hi - c.y_lo);
      }
      return area == (spec.x_hi - spec.x_lo) * (spec.y_hi - spec.y_lo);
    }
    default: return verify_claim(spec).verdict == r.verdict;
  }
}

/// Evaluates the claim's function at an exact point (the second coordinate
/// is used by two-variable claims only).
inline Rational claim_value(const std::string& id, const Rational& x, const Rational& y = Rational(0)) {
  const ClaimSpec& spec = find_claim(id);
  switch (spec.kind) {
    case ClaimKind::kCubic: return detail::eval_cubic(spec.cubic, x);
    case ClaimKind::kGrid2: return spec.g.at(x, y);
    case ClaimKind::kMonotoneEndpoint: return spec.slope.at(x);
    default: return spec.f.at(x);
  }
}

// ---------------------------------------------------------------------------
// Printed constants.

enum class ConstantCheck { kRounds, kExact, kAtLeast, kAtMost, kBelow };

struct ConstantSpec {
  std::string id;
  std::string expression;
  std::string printed;
  ConstantCheck check = ConstantCheck::kRounds;
  int digits = 4;
  std::function<Interval()> compute;  // exact value, or an enclosure for irrational ones
};

struct ConstantResult {
  std::string id;
  std::string expression;
  std::string printed;
  Rational expected;
  Interval computed;
  std::string computed_text;
  ConstantCheck check = ConstantCheck::kRounds;
  bool match = false;
};

inline std::string to_string(ConstantCheck c) {
  switch (c) {
    case ConstantCheck::kRounds: return "rounds-to";
    case ConstantCheck::kExact: return "equals";
    case ConstantCheck::kAtLeast: return ">=";
    case ConstantCheck::kAtMost: return "<=";
    case ConstantCheck::kBelow: return "<";
  }
  return "?";
}

inline const std::vector<ConstantSpec>& constant_catalog() {
  static const std::vector<ConstantSpec> catalog = [] {
    using fns::k;
    std::vector<ConstantSpec> c;
    auto exact = [](Rational v) { return [v] { return Interval(v); }; };
    c.push_back({"CASE31", "-(2/3)0.79^2 + (1/3 + 0.14)0.79 + 1/3", "0.2912", ConstantCheck::kRounds, 4,
                 exact(fns::case31_quadratic(dec("0.79")))});
    c.push_back({"L41_C11", "0.45 * 0.64", "0.288", ConstantCheck::kRounds, 3, exact(dec("0.45") * dec("0.64"))});
    c.push_back({"L41_C12_EA", "(1/4)(0.5 - 0.28)(0.5 + 3 * 0.28)", "0.0737", ConstantCheck::kRounds, 4,
                 exact((dec("0.5") - dec("0.28")) * (dec("0.5") + 3 * dec("0.28")) / 4)});
    c.push_back({"L41_C12_EAC", "0.45(0.5 - (3/4)0.45)", "0.073125", ConstantCheck::kRounds, 6,
                 exact(dec("0.45") * (dec("0.5") - dec("0.45") * 3 / 4))});
    c.push_back({"JOIN_C1", "(1/4)(0.5 - 0.31)(0.5 + 3 * 0.31)", "0.067925", ConstantCheck::kRounds, 6,
                 exact((dec("0.5") - dec("0.31")) * (dec("0.5") + 3 * dec("0.31")) / 4)});
    c.push_back({"JOIN_C4", "0.486(0.5 - (3/4)0.486)", "0.065853", ConstantCheck::kRounds, 6,
                 exact(dec("0.486") * (dec("0.5") - dec("0.486") * 3 / 4))});
    c.push_back({"F_AT_7_12", "f(7/12)", "1/144", ConstantCheck::kExact, 0, exact(fns::f_alpha(Rational(7, 12)))});
    c.push_back({"SQRT_0553", "2 sqrt(0.553) - 1", "0.486", ConstantCheck::kAtLeast, 3, [] {
                   Interval r = sqrt_enclosure(dec("0.553"), dec("1e-20"));
                   return Interval(2 * r.lo() - 1, 2 * r.hi() - 1);
                 }});
    c.push_back({"CASE331_F039", "f(0.39)", "0.0733", ConstantCheck::kBelow, 4, exact(fns::case331_f(dec("0.39")))});
    c.push_back({"CASE2_MAX", "(7/12)(5/12) + 0.16(5/12)^2", "0.270833", ConstantCheck::kRounds, 6,
                 exact(fns::case2_edges(Rational(7, 12)))});
    c.push_back({"CASE2_COR36", "0.271 vs 4(5/72) - 0.001", "5/18 - 0.001", ConstantCheck::kBelow, 0,
                 exact(dec("0.271"))});
    c.push_back({"JOIN_C2_BOUND", "(5/12)^2/25 + 1/16", "5/72", ConstantCheck::kExact, 0,
                 exact(Rational(25, 144) / 25 + Rational(1, 16))});
    c.push_back({"DFDC_CHAIN", "0.28/0.45 + 0.28^2/0.45^2 - 1", "0.01", ConstantCheck::kBelow, 2,
                 exact(dec("0.28") / dec("0.45") + dec("0.28") * dec("0.28") / (dec("0.45") * dec("0.45")) - 1)});
    c.push_back({"HEAVY_COMMON_ALPHA", "4 * 0.2959 - 1", "0.1836", ConstantCheck::kRounds, 4, exact(4 * dec("0.2959") - 1)});
    c.push_back({"COR36_K4", "0.2959 vs 4 * 0.074 - 0.00001", "0.29599", ConstantCheck::kAtMost, 5,
                 exact(dec("0.2959"))});
    return c;
  }();
  return catalog;
}

inline std::vector<std::string> constant_ids() {
  std::vector<std::string> ids;
  for (const auto& s : constant_catalog()) ids.push_back(s.id);
  return ids;
}

inline ConstantResult verify_constant(const std::string& id) {
  const ConstantSpec* spec = nullptr;
  for (const auto& s : constant_catalog()) {
    if (s.id == id) spec = &s;
  }
  require(spec != nullptr, ErrorCode::kUnknownId, "unknown constant id '" + id + "'");
  ConstantResult r;
  r.id = spec->id;
  r.expression = spec->expression;
  r.printed = spec->printed;
  r.check = spec->check;
  // Printed values like "5/18 - 0.001" are evaluated exactly.
  if (auto minus = spec->printed.find(" - "); minus != std::string::npos) {
    r.expected = dec(spec->printed.substr(0, minus)) - dec(spec->printed.substr(minus + 3));
  } else {
    r.expected = dec(spec->printed);
  }
  r.computed = spec->compute();
  const Interval& v = r.computed;
  switch (spec->check) {
    case ConstantCheck::kRounds:
      r.match = v.lo() == v.hi() && round_decimal(v.lo(), spec->digits) == r.expected;
      break;
    case ConstantCheck::kExact: r.match = v.lo() == v.hi() && v.lo() == r.expected; break;
    case ConstantCheck::kAtLeast: r.match = v.lo() >= r.expected; break;
    case ConstantCheck::kAtMost: r.match = v.hi() <= r.expected; break;
    case ConstantCheck::kBelow: r.match = v.hi() < r.expected; break;
  }
  r.computed_text = v.lo() == v.hi() ? to_string(v.lo()) + " (" + format_decimal(v.lo(), 8) + ")"
                                     : "[" + format_decimal(v.lo(), 12) + ", " + format_decimal(v.hi(), 12) + "]";
  return r;
}

struct CertifyReport {
  std::vector<ClaimResult> claims;
  std::vector<ConstantResult> constants;

  bool all_passed() const {
    for (const auto& c : claims) {
      if (!c.passed()) return false;
    }
    for (const auto& c : constants) {
      if (!c.match) return false;
    }
    return true;
  }
};

inline CertifyReport certify_all(const CertifyOptions& opt = {}) {
  CertifyReport report;
  const auto& specs = claim_catalog();
  report.claims = parallel_map<ClaimResult>(specs.size(), opt.workers, [&](std::size_t i) { return verify_claim(specs[i], opt); });
  for (const auto& id : constant_ids()) report.constants.push_back(verify_constant(id));
  return report;
}

}  // namespace judicious
