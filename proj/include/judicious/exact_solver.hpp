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
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "judicious/graph.hpp"
#include "judicious/parallel.hpp"

namespace judicious {

enum class ExactObjective {
  kMinMaxBalanced,  // min over |A| = n/2 of max{e(A), e(A^c)}
  kMinSumBalanced,  // min over |A| = n/2 of e(A) + e(A^c)
  kMinSum,          // min over all A of e(A) + e(A^c)
};

inline std::string to_string(ExactObjective o) {
  switch (o) {
    case ExactObjective::kMinMaxBalanced: return "minmax";
    case ExactObjective::kMinSumBalanced: return "sum";
    case ExactObjective::kMinSum: return "d2";
  }
  return "?";
}

enum class ExactMethod { kEnumerate, kBranchAndBound };

inline constexpr std::size_t kEnumerateCap = 28;
inline constexpr std::size_t kBranchAndBoundCap = 36;
inline constexpr std::size_t kUnbalancedCap = 32;

struct ExactOptions {
  ExactMethod method = ExactMethod::kBranchAndBound;
  std::size_t cap = 0;  // 0 selects the default for the objective and method
  int workers = 1;
};

struct ExactResult {
  ExactObjective objective = ExactObjective::kMinMaxBalanced;
  EdgeCount value = 0;
  VertexSet witness;  // side A; always contains vertex 0
  EdgeCount e_a = 0;
  EdgeCount e_ac = 0;
  std::uint64_t nodes_explored = 0;
  bool proven_optimal = false;
};

namespace detail {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

class ExactSearch {
 public:
  ExactSearch(const Graph& g, ExactObjective objective, bool use_bound)
      : n_(static_cast<int>(g.n())), objective_(objective), use_bound_(use_bound), adj_(g.n(), 0) {
    for (std::size_t v = 0; v < g.n(); ++v) {
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) adj_[v] |= Mask{1} << u;
    }
    balanced_ = objective != ExactObjective::kMinSum;
    half_ = n_ / 2;
  }

  struct State {
    int next = 0;
    Mask a = 0;
    Mask b = 0;
    EdgeCount ea = 0;
    EdgeCount eb = 0;
  };

  struct TaskResult {
    bool found = false;
    EdgeCount value = 0;
    Mask best = 0;
    std::uint64_t nodes = 0;
  };

  EdgeCount score(EdgeCount ea, EdgeCount eb) const {
    return objective_ == ExactObjective::kMinMaxBalanced ? std::max(ea, eb) : ea + eb;
  }

  /// Deterministic starting upper bound: pair-swap (or single move) descent
  /// from the first lexicographic side.
  EdgeCount initial_bound() const {
    Mask a = 0;
    if (balanced_) {
      for (int v = 0; v < half_; ++v) a |= Mask{1} << v;
    } else {
      for (int v = 0; v < n_; v += 2) a |= Mask{1} << v;
    }
    Mask all = n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1);
    auto eval = [&](Mask s) {
      EdgeCount e = 0;
      for (int v = 0; v < n_; ++v) {
        if (s >> v & 1U) e += popcount(adj_[static_cast<std::size_t>(v)] & s);
      }
      return e / 2;
    };
    EdgeCount best = score(eval(a), eval(all & ~a));
    bool improved = true;
    while (improved) {
      improved = false;
      for (int u = 0; u < n_ && !improved; ++u) {
        for (int v = 0; v < n_ && !improved; ++v) {
          Mask cand = a;
          if (balanced_) {
            if (!(a >> u & 1U) || (a >> v & 1U)) continue;
            cand = (a & ~(Mask{1} << u)) | (Mask{1} << v);
          } else {
            if (v != 0) continue;
            cand = a ^ (Mask{1} << u);
          }
          EdgeCount s = score(eval(cand), eval(all & ~cand));
          if (s < best) {
            best = s;
            a = cand;
            improved = true;
          }
        }
      }
    }
    return best;
  }

  void place(State& s, int v, bool to_a) const {
    Mask bit = Mask{1} << v;
    if (to_a) {
      s.ea += popcount(adj_[static_cast<std::size_t>(v)] & s.a);
      s.a |= bit;
    } else {
      s.eb += popcount(adj_[static_cast<std::size_t>(v)] & s.b);
      s.b |= bit;
    }
  }

  bool can_place(const State& s, bool to_a) const {
    if (!balanced_) return true;
    return to_a ? popcount(s.a) < half_ : popcount(s.b) < half_;
  }

  /// All feasible assignments of vertices 1..depth with vertex 0 in A, in
  /// DFS (A-first) order.
  std::vector<State> prefixes(int depth) const {
    State root;
    place(root, 0, true);
    root.next = 1;
    std::vector<State> level{root};
    for (int d = 1; d <= depth && d < n_; ++d) {
      std::vector<State> next;
      for (const State& s : level) {
        for (bool to_a : {true, false}) {
          if (!can_place(s, to_a)) continue;
          State t = s;
          place(t, d, to_a);
          t.next = d + 1;
          next.push_back(t);
        }
      }
      level = std::move(next);
    }
    return level;
  }

  TaskResult run_task(State s, EdgeCount upper) const {
    TaskResult r;
    r.value = upper;
    dfs(s, r);
    return r;
  }

 private:
  void leaf(const State& s, TaskResult& r) const {
    EdgeCount v = score(s.ea, s.eb);
    if (r.found ? v < r.value : v <= r.value) {
      r.found = true;
      r.value = v;
      r.best = s.a;
    }
  }

  EdgeCount lower_bound(const State& s) const {
    EdgeCount pending = 0;
    for (int v = s.next; v < n_; ++v) {
      pending += std::min(popcount(adj_[static_cast<std::size_t>(v)] & s.a), popcount(adj_[static_cast<std::size_t>(v)] & s.b));
    }
    EdgeCount sum = s.ea + s.eb + pending;
    if (objective_ == ExactObjective::kMinMaxBalanced) return std::max({s.ea, s.eb, (sum + 1) / 2});
    return sum;
  }

  void dfs(State s, TaskResult& r) const {
    ++r.nodes;
    if (s.next == n_) {
      leaf(s, r);
      return;
    }
    if (balanced_) {
      bool a_full = popcount(s.a) == half_;
      bool b_full = popcount(s.b) == half_;
      if (a_full || b_full) {
        for (int v = s.next; v < n_; ++v) place(s, v, b_full);
        s.next = n_;
        leaf(s, r);
        return;
      }
    }
    if (use_bound_ && lower_bound(s) > r.value) return;
    for (bool to_a : {true, false}) {
      if (!can_place(s, to_a)) continue;
      State t = s;
      place(t, s.next, to_a);
      t.next = s.next + 1;
      dfs(t, r);
    }
  }

  int n_;
  int half_ = 0;
  ExactObjective objective_;
  bool balanced_ = true;
  bool use_bound_;
  std::vector<Mask> adj_;
};

}  // namespace detail

inline std::size_t default_cap(ExactObjective objective, ExactMethod method) {
  if (objective == ExactObjective::kMinSum) return kUnbalancedCap;
  return method == ExactMethod::kEnumerate ? kEnumerateCap : kBranchAndBoundCap;
}

/// Exact optimum over (balanced) 2-partitions with vertex 0 fixed in A.
/// The search space is split into a fixed set of prefix tasks, each solved
/// with its own incumbent, and reduced in prefix order; the witness is the
/// lexicographically first optimal side A, independent of `workers`.
inline ExactResult solve_exact(const Graph& g, ExactObjective objective, const ExactOptions& options = {}) {
  std::size_t cap = options.cap != 0 ? options.cap : default_cap(objective, options.method);
  bool balanced = objective != ExactObjective::kMinSum;
  if (balanced) require(g.n() % 2 == 0, ErrorCode::kParity, "balanced objectives need an even vertex count");
  require(g.n() <= cap && g.n() <= 64, ErrorCode::kSizeLimit,
          "graph has " + std::to_string(g.n()) + " vertices, exact cap is " + std::to_string(std::min<std::size_t>(cap, 64)) +
              "; use the heuristics or the blow-up solver");
  ExactResult result;
  result.objective = objective;
  result.proven_optimal = true;
  if (g.n() == 0) {
    result.witness = VertexSet(0);
    return result;
  }
  bool use_bound = options.method == ExactMethod::kBranchAndBound;
  detail::ExactSearch search(g, objective, use_bound);
  EdgeCount upper = use_bound ? search.initial_bound() : std::numeric_limits<EdgeCount>::max();
  int depth = std::min(static_cast<int>(g.n()) - 1, 6);
  auto tasks = search.prefixes(depth);
  auto outcomes = parallel_map<detail::ExactSearch::TaskResult>(
      tasks.size(), options.workers, [&](std::size_t i) { return search.run_task(tasks[i], upper); });
  bool found = false;
  detail::Mask best = 0;
  for (const auto& o : outcomes) {
    result.nodes_explored += o.nodes;
    if (o.found && (!found || o.value < result.value)) {
      found = true;
      result.value = o.value;
      best = o.best;
    }
  }
  require(found, ErrorCode::kContractViolation, "exact search found no partition");
  result.witness = VertexSet(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (best >> v & 1U) result.witness.insert(static_cast<Vertex>(v));
  }
  result.e_a = e_subset(g, result.witness);
  result.e_ac = e_subset(g, result.witness.complement());
  return result;
}

inline ExactResult exact_min_max_balanced(const Graph& g, const ExactOptions& options = {}) {
  return solve_exact(g, ExactObjective::kMinMaxBalanced, options);
}
inline ExactResult exact_min_sum_balanced(const Graph& g, const ExactOptions& options = {}) {
  return solve_exact(g, ExactObjective::kMinSumBalanced, options);
}
inline ExactResult exact_d2(const Graph& g, const ExactOptions& options = {}) {
  return solve_exact(g, ExactObjective::kMinSum, options);
}

/// Visits every k-subset of {0..n-1} (as a bitmask) in colexicographic order
/// (Gosper's hack). Requires n <= 63.
template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
  require(n >= 0 && n <= 63 && k >= 0 && k <= n, ErrorCode::kDomain, "subset enumeration out of range");
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  while (s < limit) {
    fn(s);
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace judicious
