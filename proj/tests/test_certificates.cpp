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


#include <gtest/gtest.h>

#include "oracles.hpp"

namespace judicious {
namespace {

/// A rational strictly inside [lo, hi], drawn from a 2^20 grid.
Rational interior(Rng& rng, const Rational& lo, const Rational& hi) {
  std::int64_t k = 1 + static_cast<std::int64_t>(rng.below((1U << 20) - 1));
  return lo + (hi - lo) * frac(k, 1 << 20);
}

const CertifyReport& report() {
  static const CertifyReport r = certify_all();
  return r;
}

TEST(Certificates, CatalogSize) {
  EXPECT_GE(claim_ids().size(), 20U);
  EXPECT_GE(constant_ids().size(), 8U);
  EXPECT_THROW(find_claim("NOPE"), Error);
}

TEST(Certificates, CubicsAreNegative) {
  for (int i = 1; i <= 5; ++i) {
    ClaimResult r = verify_cubic_negativity(i);
    EXPECT_EQ(r.verdict, Verdict::kVerified) << i << " " << r.detail;
    ASSERT_TRUE(r.worst_value.has_value());
    EXPECT_LT(*r.worst_value, 0);
  }
  EXPECT_THROW(verify_cubic_negativity(6), Error);
}

TEST(Certificates, FirstCubicEndpointValue) {
  Rational t = dec("0.39");
  Rational direct = dec("0.75") * t * t * t - dec("1.4175") * t * t + dec("0.7799") * t - dec("0.13416");
  EXPECT_EQ(claim_value("CUBIC1", t), direct);
  EXPECT_LT(direct, 0);
}

TEST(Certificates, ControlsAreRefuted) {
  ClaimResult cubic = verify_claim("CONTROL_CUBIC");
  EXPECT_EQ(cubic.verdict, Verdict::kRefuted);
  EXPECT_TRUE(cubic.passed());
  ASSERT_TRUE(cubic.worst_x.has_value());
  EXPECT_GT(claim_value("CONTROL_CUBIC", *cubic.worst_x), 0);
  EXPECT_EQ(verify_claim("CONTROL_CASE331").verdict, Verdict::kRefuted);
}

TEST(Certificates, NamedBounds) {
  EXPECT_EQ(verify_rational_bound("G_ALPHA").verdict, Verdict::kVerified);
  EXPECT_EQ(verify_rational_bound("CASE331").verdict, Verdict::kVerified);
  EXPECT_EQ(verify_rational_bound("F_ALPHA").verdict, Verdict::kVerified);
  EXPECT_EQ(verify_rational_bound("F_PRIME_ALPHA_POS").verdict, Verdict::kVerified);
}

TEST(Certificates, DerivativeSignClaimIsRefuted) {
  // The derivative is positive on the whole interval; the printed sign is wrong.
  ClaimResult r = verify_rational_bound("F_PRIME_ALPHA");
  EXPECT_EQ(r.verdict, Verdict::kRefuted);
  EXPECT_FALSE(r.passed());
  Rational at_half = claim_value("F_PRIME_ALPHA", frac(1, 2));
  EXPECT_GT(at_half, dec("0.30"));
  EXPECT_LT(at_half, dec("0.31"));
}

TEST(Certificates, EveryClaimExceptOneSignClaimPasses) {
  std::vector<std::string> failed;
  for (const auto& c : report().claims) {
    if (!c.passed()) failed.push_back(c.id);
  }
  EXPECT_EQ(failed, (std::vector<std::string>{"F_PRIME_ALPHA"}));
  EXPECT_FALSE(report().all_passed());
}

TEST(Certificates, ConstantsReproduce) {
  for (const auto& c : report().constants) EXPECT_TRUE(c.match) << c.id << " " << c.computed_text;
  ConstantResult f = verify_constant("F_AT_7_12");
  EXPECT_EQ(f.computed.lo(), frac(1, 144));
  EXPECT_EQ(f.computed.hi(), frac(1, 144));
  ConstantResult root = verify_constant("SQRT_0553");
  EXPECT_GE(root.computed.lo(), dec("0.486"));
  EXPECT_LT(root.computed.hi(), dec("0.4873"));
  ConstantResult case31 = verify_constant("CASE31");
  EXPECT_EQ(round_decimal(case31.computed.lo(), 4), dec("0.2912"));
}

TEST(Certificates, VerifiedCellsHoldAtInteriorPoints) {
  Rng rng(2026, 0);
  std::size_t sampled = 0;
  for (const auto& c : report().claims) {
    if (c.verdict != Verdict::kVerified) continue;
    const ClaimSpec& spec = find_claim(c.id);
    if (spec.kind != ClaimKind::kGrid && spec.kind != ClaimKind::kGrid2 && spec.kind != ClaimKind::kMonotoneEndpoint) continue;
    Relation rel = spec.kind == ClaimKind::kMonotoneEndpoint ? spec.slope_relation : spec.relation;
    Rational bound = spec.kind == ClaimKind::kMonotoneEndpoint ? Rational(0) : spec.bound;
    // Every 41st cell keeps the run short while touching the whole domain.
    for (std::size_t k = 0; k < c.cells.size(); k += 41) {
      const Cell& cell = c.cells[k];
      for (int s = 0; s < 3; ++s) {
        Rational x = interior(rng, cell.x_lo, cell.x_hi);
        Rational y = spec.kind == ClaimKind::kGrid2 ? interior(rng, cell.y_lo, cell.y_hi) : Rational(0);
        Rational v = claim_value(c.id, x, y);
        EXPECT_TRUE(holds(v, rel, bound)) << c.id << " at " << to_string(x);
        EXPECT_TRUE(cell.enclosure.lo() <= v && v <= cell.enclosure.hi()) << c.id;
        ++sampled;
      }
    }
  }
  EXPECT_GT(sampled, 300U);
}

TEST(Certificates, ReplayReproducesVerdicts) {
  for (const auto& c : report().claims) EXPECT_TRUE(replay(c)) << c.id;
}

TEST(Certificates, CoarserGridGivesSameVerdicts) {
  CertifyOptions coarse;
  coarse.initial_width = dec("0.01");
  coarse.keep_cells = false;
  for (const auto& c : report().claims) EXPECT_EQ(verify_claim(c.id, coarse).verdict, c.verdict) << c.id;
}

TEST(Certificates, WorkerCountDoesNotChangeReport) {
  CertifyOptions two;
  two.workers = 2;
  CertifyReport r = certify_all(two);
  ASSERT_EQ(r.claims.size(), report().claims.size());
  for (std::size_t k = 0; k < r.claims.size(); ++k) {
    EXPECT_EQ(r.claims[k].verdict, report().claims[k].verdict);
    EXPECT_EQ(r.claims[k].evaluations, report().claims[k].evaluations);
    EXPECT_EQ(r.claims[k].worst_x, report().claims[k].worst_x);
  }
}

TEST(Interval, ArithmeticEnclosesPointValues) {
  Interval x(frac(-1, 2), frac(3, 4));
  Interval y(frac(1, 3), Rational(2));
  Rng rng(1, 0);
  for (int k = 0; k < 200; ++k) {
    Rational a = interior(rng, x.lo(), x.hi());
    Rational b = interior(rng, y.lo(), y.hi());
    auto inside = [](const Interval& i, const Rational& v) { return i.lo() <= v && v <= i.hi(); };
    EXPECT_TRUE(inside(x + y, a + b));
    EXPECT_TRUE(inside(x - y, a - b));
    EXPECT_TRUE(inside(x * y, a * b));
    EXPECT_TRUE(inside(x / y, a / b));
    EXPECT_TRUE(inside(sqr(x), a * a));
  }
  EXPECT_THROW(x / x, Error);
}

TEST(Interval, SquareRootEnclosure) {
  Interval r = sqrt_enclosure(dec("0.553"), dec("1e-12"));
  EXPECT_LE(r.lo() * r.lo(), dec("0.553"));
  EXPECT_GE(r.hi() * r.hi(), dec("0.553"));
  EXPECT_LE(r.hi() - r.lo(), dec("1e-12"));
}

TEST(Rational, DecimalParsing) {
  EXPECT_EQ(dec("0.074"), frac(74, 1000));
  EXPECT_EQ(dec("-1.5e-2"), frac(-15, 1000));
  EXPECT_EQ(dec("5/72"), frac(5, 72));
  EXPECT_THROW(dec("0.07x"), Error);
  EXPECT_EQ(format_decimal(frac(1, 3), 4), "0.3333");
}

}  // namespace
}  // namespace judicious
