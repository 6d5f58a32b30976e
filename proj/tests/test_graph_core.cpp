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

Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

VertexSet h_independent() { return VertexSet::from_range(12, 0, 7); }
VertexSet h_cycle() { return VertexSet::from_range(12, 7, 12); }

TEST(VertexSet, BasicOperations) {
  VertexSet s(130, {0, 64, 129});
  EXPECT_EQ(s.size(), 3U);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(63));
  EXPECT_EQ(s.complement().size(), 127U);
  EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 64, 129}));
  VertexSet t = VertexSet::from_range(130, 60, 70);
  EXPECT_EQ(s.intersection_size(t), 1U);
  EXPECT_TRUE(VertexSet(130, {64}).is_subset_of(t));
  s -= t;
  EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 129}));
  EXPECT_THROW(s.insert(130), Error);
}

TEST(VertexSet, LexicographicOrder) {
  EXPECT_TRUE(lex_less(VertexSet(4, {0, 3}), VertexSet(4, {1, 2})));
  EXPECT_FALSE(lex_less(VertexSet(4, {1, 2}), VertexSet(4, {0, 3})));
  EXPECT_FALSE(lex_less(VertexSet(4, {1}), VertexSet(4, {1})));
}

TEST(Graph, RejectsMalformedEdges) {
  try {
    Graph::from_edges(3, {{0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kContractViolation);
  }
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), Error);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), Error);
}

TEST(Graph, AdjacencyIsSymmetric) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = oracle::random_small(15, 0.4, seed);
    for (std::size_t u = 0; u < g.n(); ++u) {
      EXPECT_FALSE(g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(u)));
      for (std::size_t v = 0; v < g.n(); ++v) {
        EXPECT_EQ(g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)),
                  g.has_edge(static_cast<Vertex>(v), static_cast<Vertex>(u)));
      }
    }
  }
}

TEST(EdgeCounts, SubsetExamples) {
  EXPECT_EQ(e_subset(path3(), VertexSet(3, {0, 1})), 1);
  EXPECT_EQ(e_subset(complete(4), VertexSet::full(4)), 6);
  EXPECT_EQ(e_subset(paper_h(), h_cycle()), 5);
}

TEST(EdgeCounts, CrossExamples) {
  EXPECT_EQ(e_cross(path3(), VertexSet(3, {0}), VertexSet(3, {2})), 0);
  EXPECT_EQ(e_cross(paper_h(), h_independent(), h_cycle()), 35);
  EXPECT_EQ(e_cross(paper_h(), VertexSet(12, {7, 8, 9}), h_independent()), 21);
}

TEST(EdgeCounts, MatchOracleOnRandomSubsets) {
  Rng rng(5, 0);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = oracle::random_small(14, 0.5, seed);
    auto a = oracle::adjacency_matrix(g);
    std::uint64_t mask = rng.below(1U << 14);
    VertexSet s(14);
    for (int v = 0; v < 14; ++v) {
      if (mask >> v & 1U) s.insert(v);
    }
    EXPECT_EQ(e_subset(g, s), oracle::edges_inside(a, mask));
    EdgeCount cross = g.m() - e_subset(g, s) - e_subset(g, s.complement());
    EXPECT_EQ(e_cross(g, s, s.complement()), cross);
  }
}

TEST(DegreeStats, Examples) {
  DegreeStats c5 = degree_stats(cycle(5));
  EXPECT_EQ(c5.max_degree, 2U);
  EXPECT_EQ(c5.min_degree, 2U);
  DegreeStats h = degree_stats(paper_h());
  EXPECT_EQ(h.max_degree, 9U);
  EXPECT_EQ(h.min_degree, 5U);
  EXPECT_EQ(paper_h().m(), 40);
  DegreeStats one = degree_stats(Graph(1));
  EXPECT_EQ(one.max_degree, 0U);
  EXPECT_EQ(one.min_degree, 0U);
}

TEST(CliqueDetection, Examples) {
  EXPECT_TRUE(is_triangle_free(cycle(5)));
  EXPECT_FALSE(is_triangle_free(paper_h()));
  EXPECT_TRUE(is_k4_free(paper_h()));
  EXPECT_FALSE(is_k4_free(complete(4)));
}

TEST(CliqueDetection, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = oracle::random_small(11, 0.45, seed);
    EXPECT_EQ(is_triangle_free(g), !oracle::has_clique(g, 3)) << seed;
    EXPECT_EQ(is_k4_free(g), !oracle::has_clique(g, 4)) << seed;
    if (auto t = find_triangle(g)) {
      EXPECT_TRUE(g.has_edge((*t)[0], (*t)[1]) && g.has_edge((*t)[1], (*t)[2]) && g.has_edge((*t)[0], (*t)[2]));
    }
  }
}

TEST(Independence, Examples) {
  EXPECT_EQ(independence_number(cycle(5)).alpha, 2U);
  EXPECT_EQ(independence_number(complete(4)).alpha, 1U);
  IndependenceResult h = independence_number(paper_h());
  EXPECT_EQ(h.alpha, 7U);
  EXPECT_TRUE(h.exact);
  EXPECT_EQ(h.witness, h_independent());
}

TEST(Independence, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = oracle::random_small(13, 0.1 + 0.02 * static_cast<double>(seed), seed);
    IndependenceResult r = independence_number(g);
    EXPECT_EQ(r.alpha, oracle::alpha(g)) << seed;
    EXPECT_TRUE(is_independent(g, r.witness));
    EXPECT_EQ(r.witness.size(), r.alpha);
  }
}

TEST(Independence, FallsBackAboveCap) {
  Graph g = cycle(60);
  IndependenceResult r = independence_number(g, 40);
  EXPECT_FALSE(r.exact);
  EXPECT_TRUE(is_independent(g, r.witness));
  EXPECT_LE(r.alpha, 30U);
}

TEST(TriangleFreeInduced, Examples) {
  EXPECT_EQ(max_triangle_free_induced(complete(4)).set.size(), 2U);
  EXPECT_EQ(max_triangle_free_induced(paper_h()).set.size(), 9U);
  EXPECT_EQ(max_triangle_free_induced(cycle(5)).set.size(), 5U);
}

TEST(TriangleFreeInduced, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = oracle::random_small(12, 0.5, seed + 100);
    TriangleFreeResult r = max_triangle_free_induced(g);
    EXPECT_TRUE(r.exact);
    EXPECT_TRUE(induces_triangle_free(g, r.set));
    EXPECT_EQ(r.set.size(), oracle::max_triangle_free(g)) << seed;
  }
}

TEST(HeavyEdge, Examples) {
  HeavyEdgeDecomposition c5 = heavy_edge(cycle(5));
  EXPECT_EQ(c5.degree_sum, 4U);
  HeavyEdgeDecomposition star3 = heavy_edge(star(3));
  EXPECT_EQ(star3.degree_sum, 4U);
  HeavyEdgeDecomposition h = heavy_edge(paper_h());
  EXPECT_EQ(h.degree_sum, 18U);
  EXPECT_GE(h.v1, 7);
  EXPECT_GE(h.v2, 7);
  EXPECT_TRUE(h_independent().is_subset_of(h.common));
  EXPECT_THROW(heavy_edge(Graph(3)), Error);
}

TEST(HeavyEdge, Invariants) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = oracle::random_small(16, 0.3, seed);
    if (g.m() == 0) continue;
    HeavyEdgeDecomposition h = heavy_edge(g);
    EXPECT_TRUE(g.has_edge(h.v1, h.v2));
    std::size_t best = 0;
    for (auto [u, v] : g.edges()) best = std::max(best, g.degree(u) + g.degree(v));
    EXPECT_EQ(h.degree_sum, best);
    EXPECT_FALSE(h.n1_only.intersects(h.n2_only));
    EXPECT_FALSE(h.n1_only.intersects(h.common));
    EXPECT_FALSE(h.n2_only.intersects(h.common));
    EXPECT_FALSE(h.n1_only.contains(h.v2));
    EXPECT_FALSE(h.n2_only.contains(h.v1));
    EXPECT_GE(h.a1, h.a2);
    EXPECT_EQ(h.n1_only.size() + h.common.size() + 1, g.degree(h.v1));
  }
}

TEST(EdgeUpperBounds, CycleWithFullZ) {
  BoundReport r = edge_upper_bounds(cycle(5), VertexSet::full(5), std::nullopt);
  const BoundEntry* cap = r.find("degree_cap");
  const BoundEntry* turan = r.find("turan_split");
  ASSERT_NE(cap, nullptr);
  ASSERT_NE(turan, nullptr);
  EXPECT_TRUE(cap->applicable);
  EXPECT_EQ(cap->value, dec("12.5"));
  EXPECT_EQ(turan->value, dec("6.25"));
  EXPECT_GE(std::min(cap->value, turan->value), Rational(5));
}

TEST(EdgeUpperBounds, ClosedForms) {
  EXPECT_EQ(large_independent_bound(100, 28), Rational(3312));
  EXPECT_EQ(bipartite_independent_bound(10, 4), Rational(24));
}

TEST(EdgeUpperBounds, SingleEdgeIndependentEndpoint) {
  // |I| = 1 = |G|/2, so the triangle-free gate holds and the bound is tight.
  BoundReport r = edge_upper_bounds(complete(2), std::nullopt, VertexSet(2, {0}));
  const BoundEntry* b = r.find("bipartite_independent");
  ASSERT_NE(b, nullptr);
  EXPECT_TRUE(b->applicable);
  EXPECT_EQ(b->value, Rational(1));
  BoundReport small = edge_upper_bounds(path3(), std::nullopt, VertexSet(3, {0}));
  EXPECT_FALSE(small.find("bipartite_independent")->applicable);
}

TEST(EdgeUpperBounds, ApplicableEntriesHold) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_graph(RandomKind::kK4Free, 20, {0.5}, seed);
    VertexSet z = max_triangle_free_induced(g).set;
    VertexSet i = independence_number(g).witness;
    for (const auto& e : edge_upper_bounds(g, z, i).entries) {
      if (e.applicable) {
        EXPECT_LE(Rational(g.m()), e.value) << e.name << " seed " << seed;
      }
    }
  }
  EXPECT_THROW(edge_upper_bounds(complete(3), VertexSet::full(3), std::nullopt), Error);
}

TEST(BalancedPartition, CachesAndRejects) {
  Graph h = paper_h();
  BalancedPartition p = BalancedPartition::from_side(h, VertexSet::from_range(12, 3, 9));
  EXPECT_TRUE(p.consistent_with(h));
  EXPECT_EQ(p.e_a(), e_subset(h, p.side_a()));
  EXPECT_EQ(p.e_ac(), e_subset(h, p.side_ac()));
  EXPECT_THROW(BalancedPartition::from_side(h, VertexSet::from_range(12, 0, 5)), Error);
  try {
    BalancedPartition::from_side(cycle(5), VertexSet(5, {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParity);
  }
}

TEST(Io, EdgeListRoundTrip) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = oracle::random_small(30, 0.3, seed);
    EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
    EXPECT_EQ(parse_graph(write_graph6(g)), g);
  }
  Graph big = random_graph(RandomKind::kErdosRenyi, 100, {0.1}, 3);
  EXPECT_EQ(parse_graph6(write_graph6(big)), big);
}

TEST(Io, KnownGraph6Strings) {
  EXPECT_EQ(write_graph6(complete(4)), "C~\n");
  EXPECT_EQ(write_graph6(cycle(5)), "Dhc\n");
  EXPECT_EQ(parse_graph6(">>graph6<<Dhc"), cycle(5));
}

TEST(Io, ParseErrorsNameTheLine) {
  auto message = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("3 2\n0 1\n1 x\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("# comment\n3 1\n0 3\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("3 2\n0 1\n").find("line"), std::string::npos);
  EXPECT_NE(message("D!c").find("line 1"), std::string::npos);
}

TEST(Io, FingerprintDependsOnAdjacencyOnly) {
  EXPECT_EQ(graph_fingerprint(cycle(5)), graph_fingerprint(parse_graph("5 5\n4 0\n0 1\n1 2\n2 3\n3 4\n")));
  EXPECT_NE(graph_fingerprint(cycle(5)), graph_fingerprint(path(5)));
  EXPECT_EQ(graph_fingerprint(cycle(5)).size(), 16U);
}

}  // namespace
}  // namespace judicious
