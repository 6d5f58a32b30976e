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

ExactOptions with(ExactMethod method, int workers = 1) {
  ExactOptions o;
  o.method = method;
  o.workers = workers;
  return o;
}

void expect_witness_consistent(const Graph& g, const ExactResult& r) {
  EXPECT_TRUE(r.proven_optimal);
  EXPECT_TRUE(r.witness.contains(0) || g.n() == 0);
  EXPECT_EQ(r.e_a, e_subset(g, r.witness));
  EXPECT_EQ(r.e_ac, e_subset(g, r.witness.complement()));
  switch (r.objective) {
    case ExactObjective::kMinMaxBalanced:
      EXPECT_EQ(r.witness.size() * 2, g.n());
      EXPECT_EQ(r.value, std::max(r.e_a, r.e_ac));
      break;
    case ExactObjective::kMinSumBalanced:
      EXPECT_EQ(r.witness.size() * 2, g.n());
      EXPECT_EQ(r.value, r.e_a + r.e_ac);
      break;
    case ExactObjective::kMinSum: EXPECT_EQ(r.value, r.e_a + r.e_ac); break;
  }
}

TEST(ExactMinMax, Examples) {
  ExactResult h = exact_min_max_balanced(paper_h());
  EXPECT_EQ(h.value, 10);
  expect_witness_consistent(paper_h(), h);
  EXPECT_EQ(exact_min_max_balanced(cycle(4)).value, 0);
  EXPECT_EQ(exact_min_max_balanced(complete_multipartite({4, 2, 2})).value, 4);
  EXPECT_EQ(exact_min_max_balanced(complete_multipartite({6, 3, 3})).value, 9);
}

TEST(ExactMinSum, Examples) {
  EXPECT_EQ(exact_min_sum_balanced(cycle(4)).value, 0);
  EXPECT_EQ(exact_min_sum_balanced(complete(4)).value, 2);
  ExactResult h = exact_min_sum_balanced(paper_h());
  EXPECT_LE(h.value, 20);
  EXPECT_EQ(h.value, oracle::best_split(paper_h(), oracle::Objective::kSum));
}

TEST(ExactD2, Examples) {
  EXPECT_EQ(exact_d2(cycle(5)).value, 1);
  EXPECT_EQ(exact_d2(complete(4)).value, 2);
  EXPECT_EQ(exact_d2(cycle(4)).value, 0);
  EXPECT_EQ(exact_d2(petersen()).value, 3);
}

struct Case {
  ExactObjective objective;
  oracle::Objective brute;
};

class ExactAgainstOracle : public ::testing::TestWithParam<Case> {};

TEST_P(ExactAgainstOracle, RandomGraphs) {
  const Case c = GetParam();
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    std::size_t n = 6 + 2 * (seed % 5);
    if (c.objective == ExactObjective::kMinSum) n -= seed % 2;
    Graph g = oracle::random_small(n, 0.2 + 0.03 * static_cast<double>(seed), seed);
    std::int64_t expected = oracle::best_split(g, c.brute);
    for (ExactMethod method : {ExactMethod::kBranchAndBound, ExactMethod::kEnumerate}) {
      ExactResult r = solve_exact(g, c.objective, with(method));
      EXPECT_EQ(r.value, expected) << "seed " << seed;
      expect_witness_consistent(g, r);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Objectives, ExactAgainstOracle,
                         ::testing::Values(Case{ExactObjective::kMinMaxBalanced, oracle::Objective::kMax},
                                           Case{ExactObjective::kMinSumBalanced, oracle::Objective::kSum},
                                           Case{ExactObjective::kMinSum, oracle::Objective::kUnbalanced}));

TEST(ExactSolver, MethodsAgreeOnWitness) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = oracle::random_small(14, 0.4, seed + 50);
    ExactResult bnb = exact_min_max_balanced(g, with(ExactMethod::kBranchAndBound));
    ExactResult all = exact_min_max_balanced(g, with(ExactMethod::kEnumerate));
    EXPECT_EQ(bnb.value, all.value);
    EXPECT_EQ(bnb.witness, all.witness) << "witness must be the lexicographically first optimum";
  }
}

TEST(ExactSolver, WorkerCountDoesNotChangeOutput) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = oracle::random_small(18, 0.35, seed);
    ExactResult one = exact_min_max_balanced(g, with(ExactMethod::kBranchAndBound, 1));
    for (int w : {2, 8}) {
      ExactResult many = exact_min_max_balanced(g, with(ExactMethod::kBranchAndBound, w));
      EXPECT_EQ(one.value, many.value);
      EXPECT_EQ(one.witness, many.witness);
      EXPECT_EQ(one.nodes_explored, many.nodes_explored);
    }
  }
}

TEST(ExactSolver, BranchAndBoundPrunes) {
  std::uint64_t bnb = 0;
  std::uint64_t all = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = oracle::random_small(20, 0.5, seed);
    bnb += exact_min_max_balanced(g, with(ExactMethod::kBranchAndBound)).nodes_explored;
    all += exact_min_max_balanced(g, with(ExactMethod::kEnumerate)).nodes_explored;
  }
  EXPECT_LT(bnb, all);
}

TEST(ExactSolver, Contracts) {
  try {
    exact_min_max_balanced(cycle(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParity);
  }
  ExactOptions capped;
  capped.cap = 10;
  try {
    exact_min_max_balanced(paper_h(), capped);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeLimit);
  }
  EXPECT_THROW(exact_d2(cycle(70)), Error);
  EXPECT_EQ(exact_min_max_balanced(Graph(0)).value, 0);
}

TEST(ExactSolver, SubsetEnumerationCountsBinomial) {
  std::size_t count = 0;
  for_each_subset_of_size(12, 6, [&](std::uint64_t m) {
    EXPECT_EQ(__builtin_popcountll(m), 6);
    ++count;
  });
  EXPECT_EQ(count, 924U);
}

}  // namespace
}  // namespace judicious
