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

TEST(Families, Sizes) {
  Graph c5 = cycle(5);
  EXPECT_EQ(c5.n(), 5U);
  EXPECT_EQ(c5.m(), 5);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2U);
  EXPECT_EQ(complete_multipartite({4, 2, 2}).n(), 8U);
  EXPECT_EQ(complete_multipartite({4, 2, 2}).m(), 20);
  EXPECT_EQ(independent_set(7).n(), 7U);
  EXPECT_EQ(independent_set(7).m(), 0);
  EXPECT_EQ(path(4).m(), 3);
  EXPECT_EQ(star(3).m(), 3);
  EXPECT_EQ(complete(6).m(), 15);
}

TEST(Families, Petersen) {
  Graph p = petersen();
  EXPECT_EQ(p.n(), 10U);
  EXPECT_EQ(p.m(), 15);
  EXPECT_TRUE(is_triangle_free(p));
  EXPECT_EQ(oracle::alpha(p), 4U);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3U);
}

TEST(Families, IcosahedronAndComplement) {
  Graph ico = icosahedron();
  EXPECT_EQ(ico.n(), 12U);
  EXPECT_EQ(ico.m(), 30);
  for (int v = 0; v < 12; ++v) EXPECT_EQ(ico.degree(v), 5U);
  EXPECT_TRUE(is_k4_free(ico));
  EXPECT_EQ(oracle::alpha(ico), 3U);
  Graph co = complement(ico);
  EXPECT_EQ(co.m(), 66 - 30);
  EXPECT_TRUE(is_k4_free(co));
  EXPECT_EQ(oracle::alpha(co), 3U);
}

TEST(Join, Examples) {
  Graph h = join(independent_set(7), cycle(5));
  EXPECT_EQ(h.n(), 12U);
  EXPECT_EQ(h.m(), 40);
  EXPECT_EQ(join(independent_set(1), independent_set(1)), complete(2));
  Graph c4 = join(independent_set(2), independent_set(2));
  EXPECT_EQ(c4.m(), 4);
  EXPECT_TRUE(is_triangle_free(c4));
  EXPECT_EQ(paper_h(), h);
}

TEST(Blowup, ExpansionMatchesDefinition) {
  EXPECT_EQ(blowup(cycle(5), 1).expand(), cycle(5));
  EXPECT_EQ(blowup(cycle(5), 2).expand().m(), 20);
  EXPECT_EQ(blowup(paper_h(), 2).expand().n(), 24U);
  EXPECT_EQ(blowup(paper_h(), 2).expand().m(), 160);
  EXPECT_EQ(paper_h_blowup(1).total(), 24);
  EXPECT_EQ(paper_h_blowup(2).total(), 48);
  EXPECT_EQ(paper_h_blowup(2).expanded_edges(), 640);
  EXPECT_EQ(paper_h_blowup(2).expand().m(), 640);
  EXPECT_THROW(blowup(cycle(5), 0), Error);
}

TEST(Blowup, EdgesOnlyBetweenAdjacentClasses) {
  Graph base = oracle::random_small(7, 0.5, 11);
  BlowupGraph bg = blowup(base, 3);
  Graph g = bg.expand();
  EXPECT_EQ(static_cast<std::int64_t>(g.n()), bg.total());
  for (std::size_t u = 0; u < g.n(); ++u) {
    for (std::size_t v = 0; v < g.n(); ++v) {
      Vertex bu = bg.base_of(static_cast<Vertex>(u));
      Vertex bv = bg.base_of(static_cast<Vertex>(v));
      EXPECT_EQ(g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)), bu != bv && base.has_edge(bu, bv));
    }
  }
}

TEST(Blowup, RealizeHonoursCounts) {
  BlowupGraph bg = blowup(cycle(5), 2);
  VertexSet s = bg.realize({2, 0, 2, 1, 0});
  EXPECT_EQ(s.size(), 5U);
  EXPECT_EQ(e_subset(bg.expand(), s), 2);
  EXPECT_THROW(bg.realize({3, 0, 0, 0, 0}), Error);
}

TEST(Random, Extremes) {
  EXPECT_EQ(random_graph(RandomKind::kErdosRenyi, 10, {0.0}, 1).m(), 0);
  EXPECT_EQ(random_graph(RandomKind::kErdosRenyi, 10, {1.0}, 1), complete(10));
  EXPECT_THROW(random_graph(RandomKind::kErdosRenyi, 10, {1.5}, 1), Error);
}

TEST(Random, FamiliesHaveTheirProperties) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_TRUE(is_k4_free(random_graph(RandomKind::kTripartite, 12, {0.5}, seed)));
    Graph tri = random_graph(RandomKind::kTripartite, 30, {0.7}, seed);
    for (const auto& part : tripartite_blocks(30)) EXPECT_TRUE(is_independent(tri, part));
    EXPECT_TRUE(is_k4_free(random_graph(RandomKind::kK4Free, 40, {0.6}, seed)));
    EXPECT_TRUE(is_triangle_free(random_graph(RandomKind::kTriangleFree, 40, {0.6}, seed)));
  }
}

TEST(Random, SeedDeterminesGraph) {
  EXPECT_EQ(random_graph(RandomKind::kK4Free, 50, {0.4}, 9), random_graph(RandomKind::kK4Free, 50, {0.4}, 9));
  EXPECT_NE(random_graph(RandomKind::kErdosRenyi, 50, {0.4}, 9), random_graph(RandomKind::kErdosRenyi, 50, {0.4}, 10));
}

TEST(Rng, StreamsAreIndependentAndStable) {
  Rng a(42, 0);
  Rng b(42, 0);
  Rng c(42, 1);
  int same = 0;
  for (int k = 0; k < 100; ++k) {
    std::uint64_t x = a.below(1000000);
    EXPECT_EQ(x, b.below(1000000));
    same += x == c.below(1000000) ? 1 : 0;
  }
  EXPECT_LT(same, 3);
}

TEST(TripartiteBlocks, CoverAndBalance) {
  auto parts = tripartite_blocks(10);
  EXPECT_EQ(parts[0].size() + parts[1].size() + parts[2].size(), 10U);
  EXPECT_FALSE(parts[0].intersects(parts[1]));
  EXPECT_LE(parts[0].size() - parts[2].size(), 1U);
}

}  // namespace
}  // namespace judicious
