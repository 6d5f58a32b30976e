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

TEST(Profiles, Examples) {
  EXPECT_EQ(s_value({1, 1, 1, 1, 1}), 5);
  EXPECT_EQ(t_value({1, 1, 1, 1, 1}), 5);
  EXPECT_EQ(t_value({3, 3, 2, 0, 0}), 6);
  EXPECT_EQ(s_value({3, 0, 2, 1, 0}), 2);
  EXPECT_EQ(t_value({3, 2, 1, 0, 0}), 2);
  FiveProfile p = FiveProfile::from_counts({3, 0, 2, 1, 0});
  EXPECT_EQ(p.b, (Five{3, 2, 1, 0, 0}));
  EXPECT_EQ(s_a(p), oracle::cyclic_products(p.a));
}

TEST(Profiles, SortedProfileMinimisesCyclicProducts) {
  // T(b) is the minimum of S over all arrangements of b.
  Rng rng(3, 0);
  for (int k = 0; k < 2000; ++k) {
    Five a{};
    for (auto& x : a) x = static_cast<std::int64_t>(rng.below(6));
    FiveProfile p = FiveProfile::from_counts(a);
    Five perm = p.b;
    std::sort(perm.begin(), perm.end());
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
      best = std::min(best, oracle::cyclic_products(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(t_b(p), best);
    EXPECT_GE(s_a(p), t_b(p));
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(f_closed_form(2, 3, 1), 8);
  EXPECT_EQ(f_closed_form(5, 1, 4), 0);
  EXPECT_EQ(f_closed_form(2, 2, 1), 2);
  EXPECT_THROW(f_closed_form(2, 2, 2), Error);
  EXPECT_THROW(f_closed_form(2, 5, 0), Error);
}

TEST(ClosedForm, MatchesProfileMinimum) {
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t total = 0; total < 5 * n; ++total) {
      ProfileMinimum m = min_edges_profile(n, total);
      EXPECT_EQ(m.value, f_closed_form(n, total / n, total % n)) << n << " " << total;
    }
  }
}

TEST(ProfileMinimum, Examples) {
  ProfileMinimum a = min_edges_profile(2, 5);
  EXPECT_EQ(a.value, 2);
  ASSERT_EQ(a.minimizers.size(), 1U);
  EXPECT_EQ(a.minimizers[0], (Five{2, 2, 1, 0, 0}));
  EXPECT_EQ(min_edges_profile(2, 10).value, 20);
  EXPECT_EQ(min_edges_profile(3, 3).value, 0);
  EXPECT_THROW(min_edges_profile(2, 11), Error);
}

TEST(ProfileMinimum, UniqueMinimiserForTwoFullClasses) {
  for (std::int64_t n = 2; n <= 5; ++n) {
    for (std::int64_t q = 1; q < n; ++q) {
      ProfileMinimum m = min_edges_profile(n, 2 * n + q);
      ASSERT_EQ(m.minimizers.size(), 1U);
      EXPECT_EQ(m.minimizers[0], (Five{n, n, q, 0, 0}));
    }
  }
}

TEST(Algorithm1, Examples) {
  Algorithm1Result a = algorithm1_min_t({3, 2, 1, 0, 0}, 3, 2, 0);
  EXPECT_EQ(a.b_star, (Five{3, 3, 0, 0, 0}));
  EXPECT_EQ(a.final_t, 0);
  EXPECT_EQ(a.iterations, 1);
  EXPECT_EQ(a.iterations, a.expected_iterations);
  Algorithm1Result b = algorithm1_min_t({3, 3, 0, 0, 0}, 3, 2, 0);
  EXPECT_EQ(b.iterations, 0);
  EXPECT_EQ(b.final_t, 0);
  Algorithm1Result c = algorithm1_min_t({2, 2, 2, 2, 1}, 2, 4, 1);
  EXPECT_EQ(c.final_t, 16);
  EXPECT_EQ(c.final_t, f_closed_form(2, 4, 1));
  EXPECT_THROW(algorithm1_min_t({1, 2, 0, 0, 0}, 3, 1, 0), Error);
}

TEST(Algorithm1, TraceIsMonotone) {
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t total = 0; total < 5 * n; ++total) {
      // Every sorted profile with this total.
      for (std::int64_t b1 = n; b1 >= 0; --b1)
        for (std::int64_t b2 = b1; b2 >= 0; --b2)
          for (std::int64_t b3 = b2; b3 >= 0; --b3)
            for (std::int64_t b4 = b3; b4 >= 0; --b4) {
              std::int64_t b5 = total - b1 - b2 - b3 - b4;
              if (b5 < 0 || b5 > b4) continue;
              Algorithm1Result r = algorithm1_min_t({b1, b2, b3, b4, b5}, n, total / n, total % n);
              EXPECT_EQ(r.iterations, r.expected_iterations);
              EXPECT_EQ(r.final_t, f_closed_form(n, total / n, total % n));
              for (std::size_t k = 1; k < r.trace.size(); ++k) EXPECT_LE(r.trace[k].t, r.trace[k - 1].t);
            }
    }
  }
}

TEST(Table1, Examples) {
  EXPECT_EQ(table1_delta({3, 2, 2, 1, 0}, 1, 2), -1);
  EXPECT_EQ(table1_delta({2, 2, 2, 2, 2}, 4, 5), 0);
  EXPECT_EQ(table1_delta({3, 3, 1, 1, 0}, 2, 3), -4);
  EXPECT_THROW(table1_delta({3, 3, 1, 1, 0}, 3, 3), Error);
}

TEST(Table1, FormulaMatchesDirectDifference) {
  Rng rng(17, 0);
  for (int k = 0; k < 3000; ++k) {
    Five b{};
    for (auto& x : b) x = static_cast<std::int64_t>(rng.below(9));
    std::sort(b.begin(), b.end(), std::greater<>());
    for (int i = 1; i <= 5; ++i) {
      for (int j = i + 1; j <= 5; ++j) EXPECT_EQ(table1_delta(b, i, j), table1_formula(b, i, j));
    }
  }
}

TEST(CountVectors, Examples) {
  EXPECT_EQ(blowup_edges_from_counts(blowup(cycle(5), 1), {1, 1, 1, 1, 1}), 5);
  EXPECT_EQ(blowup_edges_from_counts(blowup(cycle(5), 2), {2, 0, 2, 1, 0}), 2);
  std::vector<std::int64_t> counts(12, 0);
  for (int v = 0; v < 7; ++v) counts[static_cast<std::size_t>(v)] = 2;
  EXPECT_EQ(blowup_edges_from_counts(blowup(paper_h(), 2), counts), 0);
}

TEST(CountVectors, MatchExpandedSubsets) {
  Rng rng(8, 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BlowupGraph bg = blowup(oracle::random_small(6, 0.5, seed), 3);
    Graph g = bg.expand();
    std::vector<std::int64_t> c(6);
    for (auto& x : c) x = static_cast<std::int64_t>(rng.below(4));
    EXPECT_EQ(blowup_edges_from_counts(bg, c), e_subset(g, bg.realize(c)));
  }
}

TEST(TwinClasses, PaperGraph) {
  auto classes = twin_classes(paper_h());
  // I7 is one class of false twins; the C5 vertices have distinct neighbourhoods.
  EXPECT_EQ(classes.size(), 6U);
  EXPECT_EQ(classes[0].size(), 7U);
}

TEST(BlowupSolver, Examples) {
  EXPECT_EQ(exact_min_max_blowup(paper_h_blowup(1)).value, 37);
  BlowupResult c5 = exact_min_max_blowup(blowup(cycle(5), 2));
  EXPECT_EQ(c5.value, 2);
  EXPECT_EQ(exact_min_max_blowup(paper_h_blowup(2)).value, 148);
  EXPECT_THROW(exact_min_max_blowup(blowup(cycle(5), 1)), Error);
}

TEST(BlowupSolver, SeriesAndWitness) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    BlowupGraph bg = paper_h_blowup(n);
    BlowupResult r = exact_min_max_blowup(bg);
    EXPECT_EQ(r.value, theorem16_value(n));
    Graph g = bg.expand();
    VertexSet a = r.witness(bg);
    EXPECT_EQ(static_cast<std::int64_t>(a.size()) * 2, bg.total());
    EXPECT_EQ(e_subset(g, a), r.e_a);
    EXPECT_EQ(e_subset(g, a.complement()), r.e_ac);
    EXPECT_EQ(std::max(r.e_a, r.e_ac), r.value);
  }
}

TEST(BlowupSolver, AgreesWithExpandedExactSolve) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph base = oracle::random_small(4 + seed % 4, 0.5, seed);
    std::int64_t mult = base.n() * 2 <= 12 ? 2 : 1;
    if ((static_cast<std::int64_t>(base.n()) * mult) % 2 != 0) continue;
    BlowupGraph bg = blowup(base, mult);
    EXPECT_EQ(exact_min_max_blowup(bg).value, oracle::best_split(bg.expand(), oracle::Objective::kMax)) << seed;
  }
}

TEST(BlowupSolver, AllOptimalCollection) {
  BlowupOptions o;
  o.collect_all = true;
  BlowupResult r = exact_min_max_blowup(paper_h_blowup(1), o);
  ASSERT_FALSE(r.all_optimal.empty());
  for (const auto& v : r.all_optimal) EXPECT_EQ(v.size(), r.aggregated_classes.size());
}

TEST(BlowupSolver, WorkerCountDoesNotChangeOutput) {
  BlowupResult one = exact_min_max_blowup(paper_h_blowup(2));
  for (int w : {2, 8}) {
    BlowupOptions o;
    o.workers = w;
    BlowupResult many = exact_min_max_blowup(paper_h_blowup(2), o);
    EXPECT_EQ(one.value, many.value);
    EXPECT_EQ(one.count_vector, many.count_vector);
    EXPECT_EQ(one.nodes_explored, many.nodes_explored);
  }
}

TEST(Piecewise, Examples) {
  EXPECT_EQ(piecewise_case_values(1, 2, 1), 37);
  EXPECT_EQ(piecewise_case_values(1, 3, 0), 40);
  EXPECT_EQ(theorem16_value(3), 333);
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t p = 2; p <= 4; ++p) {
      for (std::int64_t q = p == 2 ? n : 0; q < 2 * n; ++q) {
        EXPECT_EQ(piecewise_case_values(n, p, q), piecewise_display(n, p, q)) << n << p << q;
      }
    }
    PiecewiseMinimum m = piecewise_minimum(n);
    EXPECT_EQ(m.value, theorem16_value(n));
    EXPECT_EQ(m.p, 2);
    EXPECT_EQ(m.q, n);
  }
}

TEST(Dihedral, Images) {
  Five pattern{2, 0, 1, 2, 0};
  EXPECT_TRUE(is_dihedral_image({0, 2, 0, 1, 2}, pattern));
  EXPECT_TRUE(is_dihedral_image({2, 1, 0, 2, 0}, pattern));
  EXPECT_FALSE(is_dihedral_image({2, 2, 1, 0, 0}, pattern));
}

}  // namespace
}  // namespace judicious
