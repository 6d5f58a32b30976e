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


// Brute-force oracles shared by the test suites. Nothing here calls the
// solvers under test.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "judicious/judicious.hpp"

namespace judicious::oracle {

inline std::vector<std::vector<int>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<int>> a(g.n(), std::vector<int>(g.n(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

inline std::int64_t edges_inside(const std::vector<std::vector<int>>& a, std::uint64_t mask) {
  std::int64_t e = 0;
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (!(mask >> u & 1U)) continue;
    for (std::size_t v = u + 1; v < a.size(); ++v) e += (mask >> v & 1U) ? a[u][v] : 0;
  }
  return e;
}

enum class Objective { kMax, kSum, kUnbalanced };

/// Minimum over all 2^n sides (balanced ones only unless kUnbalanced).
inline std::int64_t best_split(const Graph& g, Objective obj) {
  auto a = adjacency_matrix(g);
  std::size_t n = g.n();
  std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint64_t m = 0; m <= full; ++m) {
    if (obj != Objective::kUnbalanced && static_cast<std::size_t>(__builtin_popcountll(m)) * 2 != n) continue;
    std::int64_t x = edges_inside(a, m);
    std::int64_t y = edges_inside(a, full & ~m);
    best = std::min(best, obj == Objective::kMax ? std::max(x, y) : x + y);
    if (full == 0) break;
  }
  return best;
}

inline std::size_t alpha(const Graph& g) {
  auto a = adjacency_matrix(g);
  std::size_t best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n()); ++m) {
    if (edges_inside(a, m) == 0) best = std::max<std::size_t>(best, __builtin_popcountll(m));
  }
  return best;
}

inline bool triangle_free_mask(const std::vector<std::vector<int>>& a, std::uint64_t m) {
  std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z)
        if ((m >> x & 1U) && (m >> y & 1U) && (m >> z & 1U) && a[x][y] && a[y][z] && a[x][z]) return false;
  return true;
}

inline std::size_t max_triangle_free(const Graph& g) {
  auto a = adjacency_matrix(g);
  std::size_t best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n()); ++m) {
    auto size = static_cast<std::size_t>(__builtin_popcountll(m));
    if (size > best && triangle_free_mask(a, m)) best = size;
  }
  return best;
}

inline bool has_clique(const Graph& g, std::size_t k) {
  auto a = adjacency_matrix(g);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n()); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) == k && edges_inside(a, m) == static_cast<std::int64_t>(k * (k - 1) / 2))
      return true;
  }
  return false;
}

/// S over a cyclic arrangement: sum of a_i a_{i+1}.
inline std::int64_t cyclic_products(const Five& a) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < 5; ++i) s += a[i] * a[(i + 1) % 5];
  return s;
}

inline Graph random_small(std::size_t n, double p, std::uint64_t seed) {
  return random_graph(RandomKind::kErdosRenyi, n, {p}, seed);
}

}  // namespace judicious::oracle
