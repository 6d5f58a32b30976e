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
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "judicious/graph.hpp"
#include "judicious/rational.hpp"

namespace judicious {

inline constexpr std::size_t kDefaultIndependenceCap = 40;
inline constexpr std::size_t kDefaultTriangleFreeCap = 24;

struct IndependenceResult {
  std::size_t alpha = 0;
  VertexSet witness;
  bool exact = false;
};

namespace detail {

// Maximum independent set as a maximum clique of the complement, with a
// greedy clique-cover colouring bound (each clique of G holds at most one
// vertex of an independent set).
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g), best_(g.n()) {}

  VertexSet run(const VertexSet& seed_best) {
    best_ = seed_best;
    std::vector<Vertex> current;
    expand(g_.all(), current);
    return best_;
  }

 private:
  void expand(VertexSet candidates, std::vector<Vertex>& current) {
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    cover(candidates, order, bound);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current.size() + bound[k] <= best_.size()) return;
      Vertex v = order[k];
      current.push_back(v);
      VertexSet next = candidates - g_.row(v);
      next.erase(v);
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = VertexSet::from_members(g_.n(), current);
      } else {
        expand(std::move(next), current);
      }
      current.pop_back();
      candidates.erase(v);
    }
  }

  void cover(const VertexSet& candidates, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
    std::vector<VertexSet> classes;
    std::vector<std::vector<Vertex>> members;
    candidates.for_each([&](Vertex v) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        if ((classes[k] - g_.row(v)).empty()) break;
      }
      if (k == classes.size()) {
        classes.emplace_back(g_.n());
        members.emplace_back();
      }
      classes[k].insert(v);
      members[k].push_back(v);
    });
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (Vertex v : members[k]) {
        order.push_back(v);
        bound.push_back(k + 1);
      }
    }
  }

  const Graph& g_;
  VertexSet best_;
};

}  // namespace detail

/// Greedy minimum-degree independent set (valid, size <= alpha).
inline VertexSet greedy_independent_set(const Graph& g) {
  VertexSet alive = g.all();
  VertexSet chosen(g.n());
  while (!alive.empty()) {
    Vertex pick = -1;
    std::size_t pick_degree = 0;
    alive.for_each([&](Vertex v) {
      std::size_t d = g.row(v).intersection_size(alive);
      if (pick < 0 || d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    });
    chosen.insert(pick);
    alive -= g.row(pick);
    alive.erase(pick);
  }
  return chosen;
}

/// Exact alpha(G) for n <= exact_cap, otherwise a greedy lower bound flagged
/// as non-exact.
inline IndependenceResult independence_number(const Graph& g, std::size_t exact_cap = kDefaultIndependenceCap) {
  IndependenceResult result;
  VertexSet greedy = greedy_independent_set(g);
  if (g.n() > exact_cap) {
    result.alpha = greedy.size();
    result.witness = std::move(greedy);
    result.exact = false;
    return result;
  }
  detail::IndependentSetSearch search(g);
  result.witness = search.run(greedy);
  result.alpha = result.witness.size();
  result.exact = true;
  return result;
}

struct TriangleFreeResult {
  VertexSet set;
  bool exact = false;
};

namespace detail {

// Adding v to s keeps G[s] triangle-free iff N(v) ∩ s is independent.
inline bool extends_triangle_free(const Graph& g, const VertexSet& s, Vertex v) {
  VertexSet nv = g.row(v) & s;
  bool ok = true;
  nv.for_each([&](Vertex u) {
    if (ok && g.row(u).intersects(nv)) ok = false;
  });
  return ok;
}

class TriangleFreeSearch {
 public:
  explicit TriangleFreeSearch(const Graph& g) : g_(g), best_(g.n()) {}

  VertexSet run(const VertexSet& seed_best) {
    best_ = seed_best;
    VertexSet chosen(g_.n());
    expand(chosen, g_.all());
    return best_;
  }

 private:
  // Lower bound on how many candidates must be dropped: a greedy packing of
  // vertex-disjoint obstructions (triangles inside the candidates, and
  // candidate pairs that close a triangle with a chosen vertex).
  std::size_t forced_losses(const VertexSet& chosen, const VertexSet& candidates) const {
    VertexSet free = candidates;
    std::size_t losses = 0;
    candidates.for_each([&](Vertex u) {
      if (!free.contains(u)) return;
      VertexSet nu = g_.row(u) & free;
      bool used = false;
      nu.for_each([&](Vertex v) {
        if (used || v <= u) return;
        VertexSet nuv = nu & g_.row(v);
        if (!nuv.empty() || g_.row(u).intersects(g_.row(v) & chosen)) {
          free.erase(u);
          free.erase(v);
          Vertex w = nuv.first();
          if (w >= 0) free.erase(w);
          ++losses;
          used = true;
        }
      });
    });
    return losses;
  }

  void expand(VertexSet& chosen, VertexSet candidates) {
    // Drop candidates that can no longer be added.
    VertexSet viable(g_.n());
    candidates.for_each([&](Vertex v) {
      if (extends_triangle_free(g_, chosen, v)) viable.insert(v);
    });
    std::size_t here = chosen.size();
    if (here > best_.size()) best_ = chosen;
    if (viable.empty()) return;
    if (here + viable.size() - forced_losses(chosen, viable) <= best_.size()) return;
    Vertex v = viable.first();
    viable.erase(v);
    chosen.insert(v);
    expand(chosen, viable);
    chosen.erase(v);
    expand(chosen, std::move(viable));
  }

  const Graph& g_;
  VertexSet best_;
};

}  // namespace detail

/// Greedy maximal triangle-free induced vertex set: vertices are offered in
/// ascending (degree, id) order and kept when they close no triangle.
inline VertexSet greedy_triangle_free_induced(const Graph& g, const VertexSet& within) {
  std::vector<Vertex> order = within.members();
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.row(a).intersection_size(within) < g.row(b).intersection_size(within);
  });
  VertexSet chosen(g.n());
  for (Vertex v : order) {
    if (detail::extends_triangle_free(g, chosen, v)) chosen.insert(v);
  }
  return chosen;
}

/// Maximum triangle-free induced subgraph for n <= exact_cap; otherwise a
/// greedy maximal one flagged as non-exact.
inline TriangleFreeResult max_triangle_free_induced(const Graph& g,
                                                    std::size_t exact_cap = kDefaultTriangleFreeCap) {
  TriangleFreeResult result;
  VertexSet greedy = greedy_triangle_free_induced(g, g.all());
  if (g.n() > exact_cap) {
    result.set = std::move(greedy);
    return result;
  }
  detail::TriangleFreeSearch search(g);
  result.set = search.run(greedy);
  result.exact = true;
  return result;
}

/// An edge v1v2 maximising d(v1)+d(v2), with the neighbourhood split
/// N(v1)\N(v2), N(v2)\N(v1), N(v1)∩N(v2) (v1, v2 themselves excluded).
struct HeavyEdgeDecomposition {
  Vertex v1 = -1;
  Vertex v2 = -1;
  std::size_t degree_sum = 0;
  VertexSet n1_only;
  VertexSet n2_only;
  VertexSet common;
  Rational a1;
  Rational a2;
  Rational c;
};

inline HeavyEdgeDecomposition heavy_edge(const Graph& g) {
  require(g.m() >= 1, ErrorCode::kNoEdge, "heavy_edge needs at least one edge");
  HeavyEdgeDecomposition h;
  for (auto [u, v] : g.edges()) {
    std::size_t sum = g.degree(u) + g.degree(v);
    if (h.v1 < 0 || sum > h.degree_sum) {
      h.v1 = u;
      h.v2 = v;
      h.degree_sum = sum;
    }
  }
  // a1 >= a2 is equivalent to d(v1) >= d(v2).
  if (g.degree(h.v2) > g.degree(h.v1)) std::swap(h.v1, h.v2);
  const VertexSet& r1 = g.row(h.v1);
  const VertexSet& r2 = g.row(h.v2);
  h.common = r1 & r2;
  h.n1_only = r1 - r2;
  h.n1_only.erase(h.v2);
  h.n2_only = r2 - r1;
  h.n2_only.erase(h.v1);
  auto n = static_cast<std::int64_t>(g.n());
  h.a1 = frac(static_cast<std::int64_t>(h.n1_only.size()), n);
  h.a2 = frac(static_cast<std::int64_t>(h.n2_only.size()), n);
  h.c = frac(static_cast<std::int64_t>(h.common.size()), n);
  // Averaging d(a)+d(b) over edges gives sum_v d(v)^2 / m >= 4m/n.
  require(static_cast<std::int64_t>(h.degree_sum) * n >= 4 * g.m(), ErrorCode::kContractViolation,
          "heavy edge degree sum below 4m/n");
  return h;
}

// Closed-form edge-count ceilings. Arguments are set sizes.
inline Rational degree_cap_bound(std::int64_t n, std::int64_t z) { return frac(z * n, 2); }
inline Rational turan_split_bound(std::int64_t n, std::int64_t z) { return Rational(z) * (Rational(n) - frac(3 * z, 4)); }
inline Rational bipartite_independent_bound(std::int64_t n, std::int64_t i0) { return Rational(i0 * (n - i0)); }
inline Rational independent_degree_cap_bound(std::int64_t n, std::int64_t z, std::int64_t i) {
  return frac(z * (n + i), 2);
}
inline Rational large_independent_bound(std::int64_t n, std::int64_t i) { return frac((n - i) * (n + 3 * i), 4); }

struct BoundEntry {
  std::string name;
  Rational value;
  bool applicable = false;
  std::string reason;
};

struct BoundReport {
  EdgeCount edges = 0;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& name) const {
    for (const auto& e : entries) {
      if (e.name == name) return &e;
    }
    return nullptr;
  }
};

/// Every ceiling on e(G) that the supplied witnesses support. z must induce a
/// triangle-free subgraph and i must be independent. Each entry is flagged
/// applicable only when its hypotheses are checked to hold, in which case
/// e(G) <= value.
///
///   degree_cap             |Z||G|/2              K4-free, Z triangle-free, Δ <= |Z|
///   turan_split            |Z|(|G| - 3|Z|/4)     same as degree_cap
///   large_triangle_free    |Z|(|G| - 3|Z|/4)     K4-free, |Z| >= 2|G|/3
///   bipartite_independent  |I|(|G| - |I|)       triangle-free, |I| >= |G|/2
///   independent_degree_cap |Z|(|G| + |I|)/2      K4-free, Z ⊆ G-I, d(v) <= |Z| on I, d_{G-I} <= |Z| off I
///   independent_turan      |Z|(|G| - 3|Z|/4)     same as independent_degree_cap
///   large_independent      (|G|-|I|)(|G|+3|I|)/4 K4-free, |I| > |G|/3
inline BoundReport edge_upper_bounds(const Graph& g, const std::optional<VertexSet>& z,
                                     const std::optional<VertexSet>& i) {
  BoundReport report;
  report.edges = g.m();
  auto n = static_cast<std::int64_t>(g.n());
  bool k4_free = is_k4_free(g);
  bool triangle_free = is_triangle_free(g);
  if (z) {
    check_width(g, *z);
    require(induces_triangle_free(g, *z), ErrorCode::kContractViolation, "Z does not induce a triangle-free subgraph");
  }
  if (i) {
    check_width(g, *i);
    require(is_independent(g, *i), ErrorCode::kContractViolation, "I is not independent");
  }

  if (z) {
    auto zs = static_cast<std::int64_t>(z->size());
    bool cap = static_cast<std::int64_t>(degree_stats(g).max_degree) <= zs;
    std::string why = !k4_free ? "graph contains K4" : (!cap ? "some degree exceeds |Z|" : "");
    report.entries.push_back({"degree_cap", degree_cap_bound(n, zs), k4_free && cap, why});
    report.entries.push_back({"turan_split", turan_split_bound(n, zs), k4_free && cap, why});
    bool large = 3 * zs >= 2 * n;
    report.entries.push_back({"large_triangle_free", turan_split_bound(n, zs), k4_free && large,
                              !k4_free ? "graph contains K4" : (!large ? "|Z| < 2|G|/3" : "")});
  }
  if (i) {
    auto is = static_cast<std::int64_t>(i->size());
    bool half = 2 * is >= n;
    report.entries.push_back({"bipartite_independent", bipartite_independent_bound(n, is), triangle_free && half,
                              !triangle_free ? "graph contains a triangle" : (!half ? "|I| < |G|/2" : "")});
    bool third = 3 * is > n;
    report.entries.push_back({"large_independent", large_independent_bound(n, is), k4_free && third,
                              !k4_free ? "graph contains K4" : (!third ? "|I| <= |G|/3" : "")});
  }
  if (z && i) {
    auto zs = static_cast<std::int64_t>(z->size());
    auto is = static_cast<std::int64_t>(i->size());
    VertexSet rest = i->complement();
    bool disjoint = !z->intersects(*i);
    bool cap = true;
    for (std::size_t v = 0; v < g.n() && cap; ++v) {
      auto vv = static_cast<Vertex>(v);
      auto d = i->contains(vv) ? g.row(vv).size() : g.row(vv).intersection_size(rest);
      if (static_cast<std::int64_t>(d) > zs) cap = false;
    }
    bool ok = k4_free && disjoint && cap;
    std::string why = !k4_free ? "graph contains K4" : (!disjoint ? "Z meets I" : (!cap ? "degree cap fails" : ""));
    report.entries.push_back({"independent_degree_cap", independent_degree_cap_bound(n, zs, is), ok, why});
    report.entries.push_back({"independent_turan", turan_split_bound(n, zs), ok, why});
  }
  return report;
}

}  // namespace judicious
