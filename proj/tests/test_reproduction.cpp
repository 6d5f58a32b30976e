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

#include <filesystem>

#include "oracles.hpp"

namespace judicious {
namespace {

TEST(Reproduction, CatalogHasFourteenChecks) {
  const auto& checks = reproduction_checks();
  ASSERT_EQ(checks.size(), 14U);
  for (std::size_t k = 0; k < checks.size(); ++k) {
    EXPECT_EQ(checks[k].number, static_cast<int>(k + 1));
    EXPECT_FALSE(checks[k].key.empty());
    EXPECT_EQ(check_number(checks[k].key), checks[k].number);
  }
  EXPECT_EQ(check_number("7"), 7);
  EXPECT_THROW(check_number("nope"), Error);
  EXPECT_THROW(run_check(15), Error);
}

class FastCheck : public ::testing::TestWithParam<int> {};

TEST_P(FastCheck, Passes) {
  CheckResult r = run_check(GetParam());
  EXPECT_TRUE(r.passed) << r.key << ": " << r.detail;
}

INSTANTIATE_TEST_SUITE_P(Checks, FastCheck, ::testing::Values(1, 2, 4, 5, 6, 7, 9));

TEST(Reproduction, BrokenProfileFormulaIsCaught) {
  ReproductionOptions o;
  o.f = [](std::int64_t n, std::int64_t p, std::int64_t q) {
    return p == 2 ? q * n + 1 : f_closed_form(n, p, q);
  };
  CheckResult r = run_check(check_number("profile-minimum"), o);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.detail.find("first mismatch"), std::string::npos);
  auto all = run_reproduction(o, {"profile-minimum", "h-value"});
  ASSERT_EQ(all.size(), 2U);
  EXPECT_FALSE(all[0].passed);
  EXPECT_TRUE(all[1].passed);
}

TEST(Reproduction, FilterSelectsRows) {
  auto rows = run_reproduction({}, {"tripartite-equality"});
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_EQ(rows[0].number, 7);
}

TEST(Reproduction, CorporaAreSeeded) {
  auto a = corpus::k4free_corpus(6, 1);
  auto b = corpus::k4free_corpus(6, 1);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].family, b[k].family);
    EXPECT_EQ(a[k].graph, b[k].graph);
    EXPECT_TRUE(is_k4_free(a[k].graph));
    EXPECT_EQ(a[k].graph.n() % 2, 0U);
  }
  for (const auto& j : corpus::join_corpus(6, 2)) {
    EXPECT_TRUE(is_independent(j.graph, j.i_set));
    EXPECT_TRUE(induces_triangle_free(j.graph, j.i_set.complement()));
  }
}

TEST(Reproduction, CandidatesArePersisted) {
  auto dir = std::filesystem::temp_directory_path() / "judicious-candidates-test";
  std::filesystem::remove_all(dir);
  ReproductionOptions o;
  o.artifact_dir = dir.string();
  Graph g = cycle(5);
  CaseTrace t;
  t.case_label = "L41_C11";
  t.achieved = 3;
  t.set("z", frac(1, 2));
  detail::persist_candidate(o, "x", g, t);
  EXPECT_EQ(read_graph_file((dir / "x.el").string()), g);
  EXPECT_TRUE(std::filesystem::exists(dir / "x.trace"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace judicious
