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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "judicious/exact_solver.hpp"
#include "judicious/graph.hpp"
#include "judicious/graph_search.hpp"
#include "judicious/parallel.hpp"
#include "judicious/random.hpp"
#include "judicious/rational.hpp"

namespace judicious {

enum class SwapObjective { kMax, kSum };

struct HeuristicConfig {
  std::uint64_t seed = 0;
  int restarts = 4;
  std::int64_t max_swaps = 0;          // per run; 0 = unlimited
  std::size_t exact_fallback_cap = 0;  // infeasible branches solve exactly up to this n; 0 = never
  int workers = 1;
};

namespace detail {

inline void check_config(const HeuristicConfig& cfg) {
  require(cfg.restarts >= 1, ErrorCode::kDomain, "restarts must be at least 1");
  require(cfg.max_swaps >= 0, ErrorCode::kDomain, "max_swaps must be non-negative");
}

/// Balanced side with per-vertex neighbour counts into A, updated per swap.
class SwapState {
 public:
  SwapState(const Graph& g, const VertexSet& side_a, SwapObjective objective)
      : g_(g), objective_(objective), in_a_(g.n(), 0), into_a_(g.n(), 0), deg_(g.n(), 0) {
    for (std::size_t v = 0; v < g.n(); ++v) {
      in_a_[v] = side_a.contains(static_cast<Vertex>(v)) ? 1 : 0;
      deg_[v] = static_cast<EdgeCount>(g.degree(static_cast<Vertex>(v)));
      into_a_[v] = edges_into(g, static_cast<Vertex>(v), side_a);
    }
    for (std::size_t v = 0; v < g.n(); ++v) {
      if (in_a_[v]) ea_ += into_a_[v];
      else eb_ += deg_[v] - into_a_[v];
    }
    ea_ /= 2;
    eb_ /= 2;
  }

  using Key = std::pair<EdgeCount, EdgeCount>;

  Key key(EdgeCount ea, EdgeCount eb) const {
    if (objective_ == SwapObjective::kMax) return {std::max(ea, eb), ea + eb};
    return {ea + eb, std::max(ea, eb)};
  }
  Key key() const { return key(ea_, eb_); }

  /// Best-improvement pair swaps per vertex of A until no swap improves.
  std::int64_t descend(std::int64_t max_swaps) {
    std::int64_t swaps = 0;
    std::size_t n = g_.n();
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t u = 0; u < n; ++u) {
        if (!in_a_[u]) continue;
        Key best = key();
        if (best.first == 0 && best.second == 0) return swaps;
        std::size_t best_v = n;
        EdgeCount best_ea = 0;
        EdgeCount best_eb = 0;
        const VertexSet& ru = g_.row(static_cast<Vertex>(u));
        EdgeCount ia_u = into_a_[u];
        EdgeCount ib_u = deg_[u] - ia_u;
        for (std::size_t v = 0; v < n; ++v) {
          if (in_a_[v]) continue;
          EdgeCount adj = ru.contains(static_cast<Vertex>(v)) ? 1 : 0;
          EdgeCount ea = ea_ - ia_u + into_a_[v] - adj;
          EdgeCount eb = eb_ - (deg_[v] - into_a_[v]) + ib_u - adj;
          Key k = key(ea, eb);
          if (k < best) {
            best = k;
            best_v = v;
            best_ea = ea;
            best_eb = eb;
          }
        }
        if (best_v == n) continue;
        apply(static_cast<Vertex>(u), static_cast<Vertex>(best_v), best_ea, best_eb);
        improved = true;
        if (max_swaps > 0 && ++swaps >= max_swaps) return swaps;
      }
    }
    return swaps;
  }

  VertexSet side() const {
    VertexSet s(g_.n());
    for (std::size_t v = 0; v < g_.n(); ++v) {
      if (in_a_[v]) s.insert(static_cast<Vertex>(v));
    }
    return s;
  }

 private:
  void apply(Vertex u, Vertex v, EdgeCount ea, EdgeCount eb) {
    in_a_[static_cast<std::size_t>(u)] = 0;
    in_a_[static_cast<std::size_t>(v)] = 1;
    for (Vertex w : g_.neighbors(u)) --into_a_[static_cast<std::size_t>(w)];
    for (Vertex w : g_.neighbors(v)) ++into_a_[static_cast<std::size_t>(w)];
    ea_ = ea;
    eb_ = eb;
  }

  const Graph& g_;
  SwapObjective objective_;
  std::vector<char> in_a_;
  std::vector<EdgeCount> into_a_;
  std::vector<EdgeCount> deg_;
  EdgeCount ea_ = 0;
  EdgeCount eb_ = 0;
};

/// The side containing vertex 0 (a partition and its mirror are the same split).
inline VertexSet normalized_side(const VertexSet& side) {
  if (side.universe() == 0 || side.contains(0)) return side;
  return side.complement();
}

inline bool better_balanced(const BalancedPartition& a, const BalancedPartition& b, SwapObjective objective) {
  auto key = [&](const BalancedPartition& p) {
    return objective == SwapObjective::kMax ? std::pair{p.max_side(), p.sum_sides()} : std::pair{p.sum_sides(), p.max_side()};
  };
  if (key(a) != key(b)) return key(a) < key(b);
  return lex_less(a.side_a(), b.side_a());
}

inline VertexSet random_balanced_side(std::size_t n, std::uint64_t seed, std::uint64_t stream) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed, stream);
  rng.shuffle(order);
  VertexSet s(n);
  for (std::size_t i = 0; i < n / 2; ++i) s.insert(order[i]);
  return s;
}

}  // namespace detail

/// Local search from a given balanced side; never worsens its objective key.
inline BalancedPartition polish(const Graph& g, const VertexSet& side_a, SwapObjective objective,
                                const HeuristicConfig& cfg = {}) {
  BalancedPartition start = BalancedPartition::from_side(g, side_a);
  detail::SwapState state(g, side_a, objective);
  state.descend(cfg.max_swaps);
  return BalancedPartition::from_side(g, detail::normalized_side(state.side()));
}

struct SwapResult {
  BalancedPartition partition;
  EdgeCount achieved = 0;  // value of the requested objective
  Rational bound;          // (m + Δ - δ) / 4
  bool compliant = false;
  int best_restart = 0;
};

inline Rational theorem35_bound(const Graph& g) {
  DegreeStats d = degree_stats(g);
  return frac(static_cast<std::int64_t>(g.m()) + static_cast<std::int64_t>(d.max_degree) - static_cast<std::int64_t>(d.min_degree), 4);
}

/// Best of cfg.restarts seeded random balanced starts, each descended to a
/// pair-swap local optimum of (objective, other objective).
inline SwapResult swap_local_search(const Graph& g, SwapObjective objective, const HeuristicConfig& cfg = {}) {
  detail::check_config(cfg);
  require(g.n() % 2 == 0, ErrorCode::kParity, "balanced partitions need an even vertex count");
  auto runs = parallel_map<BalancedPartition>(static_cast<std::size_t>(cfg.restarts), cfg.workers, [&](std::size_t r) {
    VertexSet start = detail::random_balanced_side(g.n(), cfg.seed, r);
    detail::SwapState state(g, start, objective);
    state.descend(cfg.max_swaps);
    return BalancedPartition::from_side(g, detail::normalized_side(state.side()));
  });
  SwapResult out;
  out.partition = runs[0];
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (detail::better_balanced(runs[r], out.partition, objective)) {
      out.partition = runs[r];
      out.best_restart = static_cast<int>(r);
    }
  }
  out.achieved = objective == SwapObjective::kMax ? out.partition.max_side() : out.partition.sum_sides();
  out.bound = theorem35_bound(g);
  out.compliant = Rational(out.partition.max_side()) <= out.bound;
  return out;
}

struct Cor36Preset {
  std::string name;
  Rational m0;
  Rational eps;
};

inline Cor36Preset k4free_preset() { return {"k4free-0.074", dec("0.074"), dec("0.00001")}; }
inline Cor36Preset join_preset() { return {"join-5-72", frac(5, 72), dec("0.001")}; }

inline std::optional<Cor36Preset> preset_by_name(const std::string& name) {
  for (const auto& p : {k4free_preset(), join_preset()}) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

struct Cor36Result {
  BalancedPartition partition;
  bool edge_condition = false;  // e(G) <= (4 m0 - eps) n^2
  bool size_condition = false;  // n > 1 / eps
  bool applicable = false;
  Rational bound;               // m0 n^2
  bool below_bound = false;     // achieved < m0 n^2
};

inline Cor36Result corollary36_partition(const Graph& g, const Rational& m0, const Rational& eps,
                                         const HeuristicConfig& cfg = {}) {
  require(eps > 0 && m0 > 0, ErrorCode::kDomain, "m0 and eps must be positive");
  require(g.n() % 2 == 0, ErrorCode::kParity, "balanced partitions need an even vertex count");
  Rational n(static_cast<std::int64_t>(g.n()));
  Cor36Result r;
  r.edge_condition = Rational(g.m()) <= (4 * m0 - eps) * n * n;
  r.size_condition = n > 1 / eps;
  r.applicable = r.edge_condition && r.size_condition;
  r.partition = swap_local_search(g, SwapObjective::kMax, cfg).partition;
  r.bound = m0 * n * n;
  r.below_bound = Rational(r.partition.max_side()) < r.bound;
  return r;
}

inline Cor36Result corollary36_partition(const Graph& g, const Cor36Preset& preset, const HeuristicConfig& cfg = {}) {
  return corollary36_partition(g, preset.m0, preset.eps, cfg);
}

/// The p vertices of b with fewest neighbours in c (ties by id). Then
/// e(Y, c) |b| <= p e(b, c).
inline VertexSet proportional_subset(const Graph& g, const VertexSet& b, const VertexSet& c, std::size_t p) {
  check_width(g, b);
  check_width(g, c);
  require(!b.intersects(c), ErrorCode::kContractViolation, "proportional_subset needs disjoint sets");
  require(p <= b.size(), ErrorCode::kDomain, "p exceeds |B|");
  std::vector<std::pair<EdgeCount, Vertex>> order;
  b.for_each([&](Vertex v) { order.emplace_back(edges_into(g, v, c), v); });
  std::sort(order.begin(), order.end());
  VertexSet y(g.n());
  EdgeCount picked = 0;
  EdgeCount total = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    total += order[k].first;
    if (k < p) {
      y.insert(order[k].second);
      picked += order[k].first;
    }
  }
  require(picked * static_cast<EdgeCount>(b.size()) <= static_cast<EdgeCount>(p) * total, ErrorCode::kContractViolation,
          "proportional_subset bound violated");
  return y;
}

struct BipartizeResult {
  Bipartition partition;
  EdgeCount deleted = 0;
  bool triangle_free = false;
  Rational erdos_bound;  // m - 4m^2/n^2, meaningful for triangle-free input
  bool erdos_compliant = false;
  bool dense_applicable = false;  // e >= 0.3197 C(n, 2)
  Rational dense_bound;           // n^2 / 25
  bool dense_compliant = false;
};

namespace detail {

/// Single-vertex moves and pair swaps minimising e(A) + e(A^c).
inline VertexSet bipartize_descend(const Graph& g, VertexSet side, std::int64_t max_swaps) {
  std::size_t n = g.n();
  std::vector<char> in_a(n, 0);
  std::vector<EdgeCount> into_a(n, 0);
  std::vector<EdgeCount> deg(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    in_a[v] = side.contains(static_cast<Vertex>(v)) ? 1 : 0;
    into_a[v] = edges_into(g, static_cast<Vertex>(v), side);
    deg[v] = static_cast<EdgeCount>(g.degree(static_cast<Vertex>(v)));
  }
  auto same = [&](std::size_t v) { return in_a[v] ? into_a[v] : deg[v] - into_a[v]; };
  auto move = [&](std::size_t v) {
    int delta = in_a[v] ? -1 : 1;
    in_a[v] = static_cast<char>(!in_a[v]);
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) into_a[static_cast<std::size_t>(w)] += delta;
  };
  std::int64_t steps = 0;
  auto budget_left = [&]() { return max_swaps == 0 || steps < max_swaps; };
  bool improved = true;
  while (improved && budget_left()) {
    improved = false;
    for (std::size_t v = 0; v < n && budget_left(); ++v) {
      if (2 * same(v) > deg[v]) {
        move(v);
        ++steps;
        improved = true;
      }
    }
    if (improved) continue;
    // Pair swap u in A, v in A^c: gain = same(u) + same(v) - other(u) - other(v) + 2 adj.
    for (std::size_t u = 0; u < n && !improved && budget_left(); ++u) {
      if (!in_a[u]) continue;
      for (std::size_t v = 0; v < n && !improved; ++v) {
        if (in_a[v]) continue;
        EdgeCount adj = g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)) ? 1 : 0;
        EdgeCount before = same(u) + same(v);
        EdgeCount after = (deg[u] - same(u) - adj) + (deg[v] - same(v) - adj);
        if (after < before) {
          move(u);
          move(v);
          ++steps;
          improved = true;
        }
      }
    }
  }
  VertexSet out(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (in_a[v]) out.insert(static_cast<Vertex>(v));
  }
  return out;
}

/// A = N(v) for the v maximising the number of edges touching N(v).
inline VertexSet neighbourhood_start(const Graph& g) {
  VertexSet best(g.n());
  EdgeCount best_removed = -1;
  for (std::size_t v = 0; v < g.n(); ++v) {
    const VertexSet& nv = g.row(static_cast<Vertex>(v));
    EdgeCount inside = e_subset(g, nv);
    EdgeCount touching = 0;
    nv.for_each([&](Vertex u) { touching += static_cast<EdgeCount>(g.degree(u)); });
    touching -= inside;
    // Removed = m - e(A^c) - e(A) is maximised.
    EdgeCount removed = touching - inside;
    if (removed > best_removed) {
      best_removed = removed;
      best = nv;
    }
  }
  return best;
}

}  // namespace detail

/// Max-cut style search for a small deletion set making g bipartite.
inline BipartizeResult bipartize_local_search(const Graph& g, const HeuristicConfig& cfg = {}) {
  detail::check_config(cfg);
  auto runs = parallel_map<Bipartition>(static_cast<std::size_t>(cfg.restarts), cfg.workers, [&](std::size_t r) {
    VertexSet start(g.n());
    if (r == 0) {
      start = detail::neighbourhood_start(g);
    } else {
      Rng rng(cfg.seed, r);
      for (std::size_t v = 0; v < g.n(); ++v) {
        if (rng.bernoulli(0.5)) start.insert(static_cast<Vertex>(v));
      }
    }
    VertexSet side = detail::bipartize_descend(g, start, cfg.max_swaps);
    return Bipartition::from_side(g, detail::normalized_side(side));
  });
  BipartizeResult out;
  out.partition = runs[0];
  for (std::size_t r = 1; r < runs.size(); ++r) {
    const auto& c = runs[r];
    if (c.deleted() < out.partition.deleted() ||
        (c.deleted() == out.partition.deleted() && lex_less(c.side_a, out.partition.side_a))) {
      out.partition = c;
    }
  }
  out.deleted = out.partition.deleted();
  Rational m(g.m());
  Rational n(static_cast<std::int64_t>(g.n()));
  out.triangle_free = is_triangle_free(g);
  out.erdos_bound = g.n() == 0 ? Rational(0) : m - 4 * m * m / (n * n);
  out.erdos_compliant = Rational(out.deleted) <= out.erdos_bound;
  out.dense_applicable = g.n() >= 2 && m >= dec("0.3197") * n * (n - 1) / 2;
  out.dense_bound = n * n / 25;
  out.dense_compliant = Rational(out.deleted) <= out.dense_bound;
  return out;
}

namespace detail {

/// Completes forced sides to a balanced split: A receives, one at a time, the
/// free vertex with the fewest neighbours already in A (ties by id), drawing
/// from `pool` while it lasts.
inline VertexSet fill_balanced(const Graph& g, const VertexSet& must_a, const VertexSet& must_ac,
                               const std::optional<VertexSet>& pool = std::nullopt) {
  std::size_t half = g.n() / 2;
  require(!must_a.intersects(must_ac), ErrorCode::kContractViolation, "forced sides overlap");
  require(must_a.size() <= half && must_ac.size() <= half, ErrorCode::kInfeasible, "forced side exceeds n/2");
  VertexSet a = must_a;
  VertexSet free = g.all() - must_a - must_ac;
  std::vector<EdgeCount> into_a(g.n(), 0);
  free.for_each([&](Vertex v) { into_a[static_cast<std::size_t>(v)] = edges_into(g, v, a); });
  while (a.size() < half) {
    Vertex pick = -1;
    for (int pass = 0; pass < 2 && pick < 0; ++pass) {
      free.for_each([&](Vertex v) {
        if (pass == 0 && pool && !pool->contains(v)) return;
        if (pick < 0 || into_a[static_cast<std::size_t>(v)] < into_a[static_cast<std::size_t>(pick)]) pick = v;
      });
    }
    a.insert(pick);
    free.erase(pick);
    for (Vertex w : g.neighbors(pick)) ++into_a[static_cast<std::size_t>(w)];
  }
  return a;
}

/// First k members of s.
inline VertexSet take_first(const VertexSet& s, std::size_t k) {
  VertexSet out(s.universe());
  for (Vertex v = s.first(); v >= 0 && out.size() < k; v = s.next(v + 1)) out.insert(v);
  return out;
}

/// Best side over a grid of per-part counts (a, b, c), a + b + c = n/2,
/// taking the first vertices of each part; the half-of-largest-part fill is
/// also a candidate.
inline VertexSet tripartite_seed(const Graph& g, const std::array<VertexSet, 3>& parts) {
  std::size_t big = 0;
  for (std::size_t k = 1; k < 3; ++k) {
    if (parts[k].size() > parts[big].size()) big = k;
  }
  const std::size_t half = g.n() / 2;
  VertexSet empty(g.n());
  VertexSet best = parts[big].size() >= half ? fill_balanced(g, take_first(parts[big], half), empty)
                                             : fill_balanced(g, parts[big], empty);
  auto key = [&](const VertexSet& a) {
    EdgeCount ea = e_subset(g, a);
    EdgeCount eb = e_subset(g, a.complement());
    return std::pair{std::max(ea, eb), ea + eb};
  };
  auto best_key = key(best);
  const std::size_t s0 = parts[0].size();
  const std::size_t s1 = parts[1].size();
  const std::size_t s2 = parts[2].size();
  const std::size_t step = std::max<std::size_t>(1, half / 24);
  auto grid = [&](std::size_t size) {
    std::vector<std::size_t> v;
    for (std::size_t x = 0; x < size; x += step) v.push_back(x);
    v.push_back(size);
    return v;
  };
  for (std::size_t a : grid(std::min(s0, half))) {
    for (std::size_t b : grid(std::min(s1, half - a))) {
      std::size_t c = half - a - b;
      if (c > s2) continue;
      VertexSet side = take_first(parts[0], a) | take_first(parts[1], b) | take_first(parts[2], c);
      auto k = key(side);
      if (k < best_key) {
        best_key = k;
        best = std::move(side);
      }
    }
  }
  return best;
}

}  // namespace detail

struct TripartiteResult {
  BalancedPartition partition;
  Rational bound;  // n^2 / 16
  bool compliant = false;
};

/// Largest part against the rest, then polished.
inline TripartiteResult tripartite_partition(const Graph& g, const std::array<VertexSet, 3>& parts,
                                             const HeuristicConfig& cfg = {}) {
  require(g.n() % 2 == 0, ErrorCode::kParity, "balanced partitions need an even vertex count");
  VertexSet seen(g.n());
  for (const auto& p : parts) {
    check_width(g, p);
    require(!seen.intersects(p), ErrorCode::kContractViolation, "parts overlap");
    require(is_independent(g, p), ErrorCode::kContractViolation, "a part spans an edge");
    seen |= p;
  }
  require(seen.size() == g.n(), ErrorCode::kContractViolation, "parts do not cover the vertex set");
  TripartiteResult r;
  r.partition = polish(g, detail::tripartite_seed(g, parts), SwapObjective::kMax, cfg);
  Rational n(static_cast<std::int64_t>(g.n()));
  r.bound = n * n / 16;
  r.compliant = Rational(r.partition.max_side()) <= r.bound;
  return r;
}

/// Decision-tree record of a pipeline run.
struct CaseTrace {
  std::string case_label;
  std::string route;
  bool fallback = false;
  std::string note;
  std::vector<std::pair<std::string, Rational>> quantities;
  EdgeCount achieved = 0;
  Rational target_bound;
  bool compliant = false;

  void set(const std::string& name, const Rational& value) {
    for (auto& q : quantities) {
      if (q.first == name) {
        q.second = value;
        return;
      }
    }
    quantities.emplace_back(name, value);
  }
  const Rational* get(const std::string& name) const {
    for (const auto& q : quantities) {
      if (q.first == name) return &q.second;
    }
    return nullptr;
  }
};

struct PipelineResult {
  BalancedPartition partition;
  CaseTrace trace;
};

namespace detail {

inline BalancedPartition fallback_partition(const Graph& g, const HeuristicConfig& cfg) {
  if (cfg.exact_fallback_cap != 0 && g.n() <= cfg.exact_fallback_cap && g.n() <= 64) {
    ExactOptions o;
    o.cap = cfg.exact_fallback_cap;
    o.workers = cfg.workers;
    auto r = exact_min_max_balanced(g, o);
    return BalancedPartition::from_side(g, r.witness);
  }
  return swap_local_search(g, SwapObjective::kMax, cfg).partition;
}

inline void mark_fallback(CaseTrace& t, const std::string& why) {
  t.fallback = true;
  t.case_label += "/fallback";
  t.note = why;
}

inline void finish(const Graph& g, PipelineResult& r, const Rational& factor) {
  Rational n(static_cast<std::int64_t>(g.n()));
  r.trace.achieved = r.partition.max_side();
  r.trace.target_bound = factor * n * n;
  r.trace.compliant = Rational(r.trace.achieved) <= r.trace.target_bound;
}

inline void cor36_route(const Graph& g, const Cor36Preset& preset, const HeuristicConfig& cfg, PipelineResult& r) {
  auto c = corollary36_partition(g, preset, cfg);
  r.partition = c.partition;
  r.trace.route = "cor36";
  r.trace.note = std::string("preset ") + preset.name + (c.applicable ? ", applicable" : ", not applicable") +
                 (c.edge_condition ? "" : ", edge condition fails") + (c.size_condition ? "" : ", n <= 1/eps");
}

}  // namespace detail

/// Balanced partition of a K4-free graph following the case analysis for the
/// 0.074 n^2 bound. Thresholds compare exactly; constructed sizes use floors.
inline PipelineResult k4free_partition(const Graph& g, const HeuristicConfig& cfg = {}) {
  detail::check_config(cfg);
  require(g.n() % 2 == 0, ErrorCode::kParity, "balanced partitions need an even vertex count");
  require(is_k4_free(g), ErrorCode::kContractViolation, "k4free_partition needs a K4-free graph");
  const auto n = static_cast<std::int64_t>(g.n());
  const Rational nr(n);
  const Rational nsq = nr * nr;
  const Cor36Preset preset = k4free_preset();
  PipelineResult r;
  CaseTrace& t = r.trace;
  t.set("m", Rational(g.m()));
  auto finish = [&] {
    detail::finish(g, r, preset.m0);
    return r;
  };
  auto fallback = [&](const std::string& why) {
    detail::mark_fallback(t, why);
    t.route = "swap";
    r.partition = detail::fallback_partition(g, cfg);
    return finish();
  };
  auto settle = [&](const VertexSet& must_a, const VertexSet& must_ac) {
    t.route = "construct+polish";
    r.partition = polish(g, detail::fill_balanced(g, must_a, must_ac), SwapObjective::kMax, cfg);
    return finish();
  };

  if (Rational(g.m()) <= dec("0.02959") * nsq) {
    t.case_label = "COR36";
    detail::cor36_route(g, preset, cfg, r);
    return finish();
  }

  VertexSet indep = greedy_independent_set(g);
  HeavyEdgeDecomposition h = heavy_edge(g);
  if (h.common.size() > indep.size()) indep = h.common;
  if (g.n() <= kDefaultIndependenceCap) indep = independence_number(g).witness;
  t.set("|I|", Rational(static_cast<std::int64_t>(indep.size())));

  if (Rational(static_cast<std::int64_t>(indep.size())) >= dec("0.28") * nr) {
    VertexSet i_set = detail::take_first(indep, g.n() / 2);
    VertexSet z = greedy_triangle_free_induced(g, g.all() - i_set);
    t.set("z", frac(static_cast<std::int64_t>(z.size()), n));
    if (Rational(static_cast<std::int64_t>(z.size())) <= dec("0.45") * nr) {
      t.case_label = "L41_C11";
      detail::cor36_route(g, preset, cfg, r);
      return finish();
    }
    t.case_label = "L41_C12";
    VertexSet z0 = detail::take_first(z, static_cast<std::size_t>(floor_int(dec("0.45") * nr)));
    return settle(i_set, z0);
  }

  t.set("a1", h.a1);
  t.set("a2", h.a2);
  t.set("c", h.c);
  Rational tt = h.a2 + h.c;
  t.set("t", tt);
  const std::size_t k45 = static_cast<std::size_t>(floor_int(dec("0.45") * nr));
  const std::size_t half = g.n() / 2;
  VertexSet n2 = h.n2_only | h.common;

  if (tt <= dec("0.39")) {
    t.case_label = "L43_C31";
    detail::cor36_route(g, preset, cfg, r);
    return finish();
  }
  if (tt >= dec("0.45")) {
    t.case_label = "L43_C32";
    // X from N1 (private part first) on A, Y from N2 outside X on A^c.
    VertexSet x = detail::take_first(h.n1_only, k45);
    x |= detail::take_first(h.common, k45 - x.size());
    VertexSet y = detail::take_first(h.n2_only, k45);
    y |= detail::take_first(h.common - x, k45 - y.size());
    if (x.size() < k45 || y.size() < k45) return fallback("N1 and N2 cannot host two disjoint 0.45n blocks");
    return settle(x, y);
  }
  if (h.c <= dec("0.23")) {
    t.case_label = "L43_C331";
    auto p = static_cast<std::int64_t>(half) - static_cast<std::int64_t>(n2.size());
    if (p < 0 || p > static_cast<std::int64_t>(h.n1_only.size())) return fallback("n/2 - |N2| outside [0, |N1 \\ N2|]");
    VertexSet y = proportional_subset(g, h.n1_only, h.common, static_cast<std::size_t>(p));
    return settle(y | n2, VertexSet(g.n()));
  }
  std::int64_t i = ceil_int(100 * h.c - 23);
  if (i < 1 || i > 5) return fallback("c outside (0.23, 0.28]");
  t.case_label = "L43_C332_" + std::to_string(i);
  t.set("i", Rational(i));
  std::int64_t p1 = floor_int((dec("0.5") - frac(i, 100)) * nr) - static_cast<std::int64_t>(n2.size());
  if (p1 < 0 || p1 > static_cast<std::int64_t>(h.n1_only.size())) return fallback("Y1 size outside [0, |N1 \\ N2|]");
  VertexSet y1 = proportional_subset(g, h.n1_only, h.common, static_cast<std::size_t>(p1));
  VertexSet keep = detail::take_first(h.n1_only - y1, k45);
  VertexSet must_a = n2 | y1;
  if (keep.size() < k45 || must_a.size() > half) return fallback("cannot keep 0.45n of N1 \\ N2 on A^c");
  return settle(must_a, keep);
}

/// Balanced partition of I ∨ H (I independent, H triangle-free) following the
/// four-case analysis for the 5n^2/72 bound.
inline PipelineResult join_partition(const VertexSet& i_set, const Graph& g, const HeuristicConfig& cfg = {}) {
  detail::check_config(cfg);
  check_width(g, i_set);
  require(g.n() % 2 == 0, ErrorCode::kParity, "balanced partitions need an even vertex count");
  require(is_independent(g, i_set), ErrorCode::kContractViolation, "i_set is not independent");
  VertexSet hv = i_set.complement();
  require(induces_triangle_free(g, hv), ErrorCode::kContractViolation, "G - I is not triangle-free");
  i_set.for_each([&](Vertex v) {
    require(hv.is_subset_of(g.row(v)), ErrorCode::kContractViolation, "missing join edge at vertex " + std::to_string(v));
  });
  const auto n = static_cast<std::int64_t>(g.n());
  const Rational nr(n);
  const Rational n2 = nr * nr;
  const auto isz = static_cast<std::int64_t>(i_set.size());
  const std::int64_t hsz = n - isz;
  const EdgeCount eh = e_subset(g, hv);
  const Cor36Preset preset = join_preset();
  const Rational alpha = frac(isz, std::max<std::int64_t>(n, 1));
  PipelineResult r;
  CaseTrace& t = r.trace;
  t.set("alpha", alpha);
  t.set("|I|", Rational(isz));
  t.set("e0", Rational(eh) / (n2 == 0 ? Rational(1) : n2));
  auto finish = [&] {
    detail::finish(g, r, preset.m0);
    return r;
  };
  auto settle = [&](const VertexSet& must_a, const VertexSet& must_ac, const std::optional<VertexSet>& pool = std::nullopt) {
    if (t.route.empty()) t.route = "construct+polish";
    r.partition = polish(g, detail::fill_balanced(g, must_a, must_ac, pool), SwapObjective::kMax, cfg);
    return finish();
  };
  auto bipartize_route = [&] {
    t.route = "bipartize+tripartite";
    auto [sub, ids] = induced_subgraph(g, hv);
    auto bip = bipartize_local_search(sub, cfg);
    std::array<VertexSet, 3> parts{i_set, VertexSet(g.n()), VertexSet(g.n())};
    for (std::size_t k = 0; k < ids.size(); ++k) parts[bip.partition.side_a.contains(static_cast<Vertex>(k)) ? 1 : 2].insert(ids[k]);
    t.set("deleted", Rational(bip.deleted));
    r.partition = polish(g, detail::tripartite_seed(g, parts), SwapObjective::kMax, cfg);
    return finish();
  };
  const VertexSet none(g.n());

  if (100 * isz > 62 * n) {
    t.case_label = "JOIN_C1";
    auto k = static_cast<std::size_t>(floor_int(dec("0.31") * nr));
    VertexSet i1 = detail::take_first(i_set, k);
    VertexSet i2 = detail::take_first(i_set - i1, k);
    return settle(i1, i2);
  }
  if (12 * isz > 7 * n) {
    t.case_label = "JOIN_C2";
    if (Rational(eh) <= dec("0.16") * Rational(hsz * hsz)) {
      detail::cor36_route(g, preset, cfg, r);
      return finish();
    }
    return bipartize_route();
  }
  if (2 * isz >= n) {
    t.case_label = "JOIN_C3";
    Rational threshold = (frac(5, 72) - (1 - alpha) * (alpha - frac(1, 2))) * n2;
    t.set("threshold", threshold / n2);
    if (Rational(eh) < threshold) {
      t.route = "park-h";
      return settle(none, hv);
    }
    return bipartize_route();
  }
  t.case_label = "JOIN_C4";
  Rational threshold = (frac(5, 18) - dec("0.001")) * n2 - Rational(hsz * (n - hsz));
  if (Rational(eh) <= threshold) {
    detail::cor36_route(g, preset, cfg, r);
    return finish();
  }
  Vertex best = -1;
  std::size_t best_deg = 0;
  hv.for_each([&](Vertex v) {
    std::size_t d = g.row(v).intersection_size(hv);
    if (best < 0 || d > best_deg) {
      best = v;
      best_deg = d;
    }
  });
  VertexSet i0 = g.row(best) & hv;
  VertexSet cover = i_set | i0;
  t.set("|I0|", Rational(static_cast<std::int64_t>(i0.size())));
  if (2 * cover.size() >= g.n()) {
    t.route = "i-within-cover";
    return settle(i_set, none, i0);
  }
  t.route = "cover-within-a";
  return settle(cover, none);
}

}  // namespace judicious
