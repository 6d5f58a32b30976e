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
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "judicious/graph.hpp"
#include "judicious/random.hpp"

namespace judicious {

inline Graph independent_set(std::size_t k) { return Graph(k); }

inline Graph cycle(std::size_t m) {
  require(m >= 3, ErrorCode::kInvalidCycle, "cycle needs at least 3 vertices, got " + std::to_string(m));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % m));
  return Graph::from_edges(m, edges);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edges(n, edges);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, edges);
}

/// K_{1,k}: vertex 0 is the centre.
inline Graph star(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= k; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph::from_edges(k + 1, edges);
}

/// Outer 5-cycle 0..4, spokes i - (i+5), inner pentagram 5..9.
inline Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, edges);
}

/// Classes are numbered contiguously in the order given.
inline Graph complete_multipartite(const std::vector<std::size_t>& sizes) {
  require(!sizes.empty(), ErrorCode::kDomain, "complete_multipartite needs at least one class");
  std::vector<std::size_t> start(sizes.size() + 1, 0);
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    require(sizes[k] >= 1, ErrorCode::kDomain, "class sizes must be positive");
    start[k + 1] = start[k] + sizes[k];
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < sizes.size(); ++a) {
    for (std::size_t b = a + 1; b < sizes.size(); ++b) {
      for (std::size_t u = start[a]; u < start[a + 1]; ++u) {
        for (std::size_t v = start[b]; v < start[b + 1]; ++v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  return Graph::from_edges(start.back(), edges);
}

/// g1 ∨ g2: g1 occupies ids [0, |g1|), g2 follows.
inline Graph join(const Graph& g1, const Graph& g2) {
  std::size_t n1 = g1.n();
  std::size_t n = n1 + g2.n();
  std::vector<Edge> edges;
  for (auto [u, v] : g1.edges()) edges.emplace_back(u, v);
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + static_cast<Vertex>(n1), v + static_cast<Vertex>(n1));
  for (std::size_t u = 0; u < n1; ++u) {
    for (std::size_t v = n1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, edges);
}

/// Vertex 0 on top, 1..5 the upper ring, 6..10 the lower ring, 11 at the bottom.
inline Graph icosahedron() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(0, 1 + i);
    edges.emplace_back(1 + i, 1 + (i + 1) % 5);
    edges.emplace_back(6 + i, 6 + (i + 1) % 5);
    edges.emplace_back(11, 6 + i);
    edges.emplace_back(1 + i, 6 + i);
    edges.emplace_back(1 + i, 6 + (i + 1) % 5);
  }
  return Graph::from_edges(12, edges);
}

inline Graph complement(const Graph& g) {
  std::vector<VertexSet> rows;
  rows.reserve(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) {
    VertexSet r = g.row(static_cast<Vertex>(v)).complement();
    r.erase(static_cast<Vertex>(v));
    rows.push_back(std::move(r));
  }
  return Graph::from_rows(std::move(rows));
}

/// Base graph with a positive multiplicity per base vertex. The expanded
/// graph numbers the copies of base vertex 0 first, then base vertex 1, etc.
/// Copies of one base vertex are pairwise non-adjacent twins.
class BlowupGraph {
 public:
  BlowupGraph(Graph base, std::vector<std::int64_t> multiplicities)
      : base_(std::move(base)), mult_(std::move(multiplicities)) {
    require(mult_.size() == base_.n(), ErrorCode::kContractViolation, "one multiplicity per base vertex required");
    offsets_.assign(mult_.size() + 1, 0);
    for (std::size_t i = 0; i < mult_.size(); ++i) {
      require(mult_[i] >= 1, ErrorCode::kInvalidMultiplicity, "multiplicities must be positive");
      offsets_[i + 1] = offsets_[i] + mult_[i];
    }
  }

  const Graph& base() const noexcept { return base_; }
  const std::vector<std::int64_t>& multiplicities() const noexcept { return mult_; }
  std::int64_t multiplicity(Vertex b) const { return mult_.at(static_cast<std::size_t>(b)); }
  std::int64_t total() const noexcept { return offsets_.back(); }
  std::int64_t block_start(Vertex b) const { return offsets_.at(static_cast<std::size_t>(b)); }

  Vertex base_of(Vertex v) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), static_cast<std::int64_t>(v));
    return static_cast<Vertex>(it - offsets_.begin() - 1);
  }

  EdgeCount expanded_edges() const {
    EdgeCount total = 0;
    for (auto [u, v] : base_.edges()) total += mult_[static_cast<std::size_t>(u)] * mult_[static_cast<std::size_t>(v)];
    return total;
  }

  Graph expand() const {
    auto n = static_cast<std::size_t>(total());
    std::vector<VertexSet> rows;
    rows.reserve(n);
    for (std::size_t b = 0; b < base_.n(); ++b) {
      VertexSet row(n);
      for (Vertex nb : base_.neighbors(static_cast<Vertex>(b))) {
        for (std::int64_t k = offsets_[static_cast<std::size_t>(nb)]; k < offsets_[static_cast<std::size_t>(nb) + 1]; ++k) {
          row.insert(static_cast<Vertex>(k));
        }
      }
      for (std::int64_t k = 0; k < mult_[b]; ++k) rows.push_back(row);
    }
    return Graph::from_rows(std::move(rows));
  }

  /// Realises a count vector: the first counts[b] copies of each block.
  VertexSet realize(const std::vector<std::int64_t>& counts) const {
    require(counts.size() == mult_.size(), ErrorCode::kContractViolation, "count vector length mismatch");
    VertexSet s(static_cast<std::size_t>(total()));
    for (std::size_t b = 0; b < counts.size(); ++b) {
      require(counts[b] >= 0 && counts[b] <= mult_[b], ErrorCode::kContractViolation, "count exceeds multiplicity");
      for (std::int64_t k = 0; k < counts[b]; ++k) s.insert(static_cast<Vertex>(offsets_[b] + k));
    }
    return s;
  }

 private:
  Graph base_;
  std::vector<std::int64_t> mult_;
  std::vector<std::int64_t> offsets_;
};

inline BlowupGraph blowup(const Graph& base, std::int64_t mult) {
  require(mult >= 1, ErrorCode::kInvalidMultiplicity, "blow-up multiplicity must be at least 1");
  return BlowupGraph(base, std::vector<std::int64_t>(base.n(), mult));
}

/// I_7 ∨ C_5: vertices 0..6 are the independent block, 7..11 the cycle
/// (7-8-9-10-11-7).
inline Graph paper_h() { return join(independent_set(7), cycle(5)); }

/// The 2n-blow-up of I_7 ∨ C_5.
inline BlowupGraph paper_h_blowup(std::int64_t n) {
  require(n >= 1, ErrorCode::kInvalidMultiplicity, "n must be at least 1");
  return blowup(paper_h(), 2 * n);
}

enum class RandomKind { kErdosRenyi, kTripartite, kK4Free, kTriangleFree };

struct RandomParams {
  double p = 0.5;
};

/// Contiguous near-equal thirds used by the tripartite generator.
inline std::array<VertexSet, 3> tripartite_blocks(std::size_t n) {
  std::array<VertexSet, 3> parts{VertexSet(n), VertexSet(n), VertexSet(n)};
  for (std::size_t v = 0; v < n; ++v) parts[(v * 3) / std::max<std::size_t>(n, 1)].insert(static_cast<Vertex>(v));
  return parts;
}

/// Seeded generators. erdos_renyi and tripartite flip one coin per vertex pair
/// in lexicographic order; the K4-free and triangle-free kinds visit the pairs
/// in a seeded random order and keep a pair (with probability p) only if it
/// closes no forbidden subgraph.
inline Graph random_graph(RandomKind kind, std::size_t n, const RandomParams& params, std::uint64_t seed) {
  require(params.p >= 0.0 && params.p <= 1.0, ErrorCode::kDomain, "edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<VertexSet> rows(n, VertexSet(n));
  auto add = [&](Vertex u, Vertex v) {
    rows[static_cast<std::size_t>(u)].insert(v);
    rows[static_cast<std::size_t>(v)].insert(u);
  };
  switch (kind) {
    case RandomKind::kErdosRenyi:
    case RandomKind::kTripartite: {
      auto part = [&](std::size_t v) { return (v * 3) / n; };
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          bool allowed = kind == RandomKind::kErdosRenyi || part(u) != part(v);
          if (allowed && rng.bernoulli(params.p)) add(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
      }
      break;
    }
    case RandomKind::kK4Free:
    case RandomKind::kTriangleFree: {
      std::vector<Edge> pairs;
      pairs.reserve(n * (n > 0 ? n - 1 : 0) / 2);
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
      rng.shuffle(pairs);
      for (auto [u, v] : pairs) {
        if (!rng.bernoulli(params.p)) continue;
        VertexSet common = rows[static_cast<std::size_t>(u)] & rows[static_cast<std::size_t>(v)];
        bool blocked = false;
        if (kind == RandomKind::kTriangleFree) {
          blocked = !common.empty();
        } else {
          common.for_each([&](Vertex w) {
            if (!blocked && rows[static_cast<std::size_t>(w)].intersects(common)) blocked = true;
          });
        }
        if (!blocked) add(u, v);
      }
      break;
    }
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace judicious
