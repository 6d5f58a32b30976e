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
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "judicious/error.hpp"

namespace judicious {

using Vertex = int;
using EdgeCount = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Dense word-packed subset of {0, ..., universe-1}.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  static VertexSet from_range(std::size_t universe, Vertex first, Vertex last) {
    VertexSet s(universe);
    for (Vertex v = first; v < last; ++v) s.insert(v);
    return s;
  }

  template <typename Range>
  static VertexSet from_members(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  void insert(Vertex v) {
    check(v);
    words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (static_cast<std::size_t>(v) % kWordBits);
  }
  void erase(Vertex v) {
    check(v);
    words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (static_cast<std::size_t>(v) % kWordBits));
  }
  bool contains(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_) return false;
    return (words_[static_cast<std::size_t>(v) / kWordBits] >> (static_cast<std::size_t>(v) % kWordBits)) & 1U;
  }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  /// |*this ∩ other| without materialising the intersection.
  std::size_t intersection_size(const VertexSet& other) const {
    same_universe(other);
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return total;
  }
  bool intersects(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }
  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  /// Smallest member >= from, or -1.
  Vertex next(Vertex from = 0) const {
    if (from < 0) from = 0;
    std::size_t idx = static_cast<std::size_t>(from);
    if (idx >= universe_) return -1;
    std::size_t wi = idx / kWordBits;
    Word w = words_[wi] & (~Word{0} << (idx % kWordBits));
    while (true) {
      if (w != 0) return static_cast<Vertex>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }
  Vertex first() const { return next(0); }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        fn(static_cast<Vertex>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::span<const Word> words() const noexcept { return words_; }

  /// Hex rendering of the membership bitmask, most significant nibble first
  /// (bit v set iff v is a member), exactly ceil(universe/4) digits.
  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::size_t digits = std::max<std::size_t>(1, (universe_ + 3) / 4);
    std::string out(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
      unsigned nibble = 0;
      for (std::size_t b = 0; b < 4; ++b) {
        if (contains(static_cast<Vertex>(d * 4 + b))) nibble |= 1U << b;
      }
      out[digits - 1 - d] = kDigits[nibble];
    }
    return out;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Tie-break order: the set holding the smallest element of the symmetric
  /// difference comes first. On equal cardinalities this is lexicographic
  /// order of the sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    a.same_universe(b);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      Word diff = a.words_[i] ^ b.words_[i];
      if (diff != 0) {
        Word low = diff & (~diff + 1);
        return (a.words_[i] & low) != 0;
      }
    }
    return false;
  }

 private:
  void check(Vertex v) const {
    require(v >= 0 && static_cast<std::size_t>(v) < universe_, ErrorCode::kContractViolation,
            "vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
  }
  void same_universe(const VertexSet& other) const {
    require(universe_ == other.universe_, ErrorCode::kContractViolation,
            "vertex set width mismatch (" + std::to_string(universe_) + " vs " +
                std::to_string(other.universe_) + ")");
  }
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty()) {
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
    }
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

/// Immutable simple undirected graph: one dense adjacency row per vertex plus
/// sorted neighbour lists for sparse iteration.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), rows_(n, VertexSet(n)), adj_(n) {}

  /// Rejects self-loops, out-of-range endpoints and repeated edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      require(u >= 0 && v >= 0 && static_cast<std::size_t>(u) < n && static_cast<std::size_t>(v) < n,
              ErrorCode::kContractViolation,
              "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
      require(u != v, ErrorCode::kContractViolation, "self-loop at " + std::to_string(u));
      require(!g.rows_[static_cast<std::size_t>(u)].contains(v), ErrorCode::kContractViolation,
              "repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      g.rows_[static_cast<std::size_t>(u)].insert(v);
      g.rows_[static_cast<std::size_t>(v)].insert(u);
      ++g.m_;
    }
    g.finish();
    return g;
  }
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    std::vector<Edge> list(edges);
    return from_edges(n, std::span<const Edge>(list));
  }

  /// Builds from symmetric rows (used by generators that grow rows directly).
  static Graph from_rows(std::vector<VertexSet> rows) {
    Graph g;
    g.n_ = rows.size();
    for (std::size_t v = 0; v < rows.size(); ++v) {
      require(rows[v].universe() == rows.size(), ErrorCode::kContractViolation, "row width mismatch");
      require(!rows[v].contains(static_cast<Vertex>(v)), ErrorCode::kContractViolation, "self-loop");
    }
    g.rows_ = std::move(rows);
    std::size_t degree_sum = 0;
    for (std::size_t v = 0; v < g.n_; ++v) {
      g.rows_[v].for_each([&](Vertex u) {
        require(g.rows_[static_cast<std::size_t>(u)].contains(static_cast<Vertex>(v)),
                ErrorCode::kContractViolation, "asymmetric adjacency");
      });
      degree_sum += g.rows_[v].size();
    }
    g.m_ = static_cast<EdgeCount>(degree_sum / 2);
    g.adj_.assign(g.n_, {});
    g.finish();
    return g;
  }

  std::size_t n() const noexcept { return n_; }
  EdgeCount m() const noexcept { return m_; }
  const VertexSet& row(Vertex v) const { return rows_.at(static_cast<std::size_t>(v)); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)).size(); }
  bool has_edge(Vertex u, Vertex v) const { return rows_.at(static_cast<std::size_t>(u)).contains(v); }

  VertexSet all() const { return VertexSet::full(n_); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (std::size_t u = 0; u < n_; ++u) {
      for (Vertex v : adj_[u]) {
        if (v > static_cast<Vertex>(u)) out.emplace_back(static_cast<Vertex>(u), v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  void finish() {
    adj_.assign(n_, {});
    for (std::size_t v = 0; v < n_; ++v) adj_[v] = rows_[v].members();
  }

  std::size_t n_ = 0;
  EdgeCount m_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<std::vector<Vertex>> adj_;
};

inline void check_width(const Graph& g, const VertexSet& s) {
  require(s.universe() == g.n(), ErrorCode::kContractViolation,
          "vertex set width " + std::to_string(s.universe()) + " does not match graph order " +
              std::to_string(g.n()));
}

/// Number of neighbours of v inside s.
inline EdgeCount edges_into(const Graph& g, Vertex v, const VertexSet& s) {
  return static_cast<EdgeCount>(g.row(v).intersection_size(s));
}

/// e(G[s]): edges with both endpoints in s.
inline EdgeCount e_subset(const Graph& g, const VertexSet& s) {
  check_width(g, s);
  EdgeCount twice = 0;
  s.for_each([&](Vertex v) { twice += edges_into(g, v, s); });
  return twice / 2;
}

/// e(s, t): edges joining the disjoint sets s and t.
inline EdgeCount e_cross(const Graph& g, const VertexSet& s, const VertexSet& t) {
  check_width(g, s);
  check_width(g, t);
  require(!s.intersects(t), ErrorCode::kContractViolation, "e_cross requires disjoint sets");
  EdgeCount total = 0;
  s.for_each([&](Vertex v) { total += edges_into(g, v, t); });
  return total;
}

struct DegreeStats {
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  EdgeCount edges = 0;
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  stats.edges = g.m();
  if (g.n() == 0) return stats;
  stats.min_degree = g.degree(0);
  for (std::size_t v = 0; v < g.n(); ++v) {
    stats.max_degree = std::max(stats.max_degree, g.degree(static_cast<Vertex>(v)));
    stats.min_degree = std::min(stats.min_degree, g.degree(static_cast<Vertex>(v)));
  }
  return stats;
}

/// Lexicographically first triangle, if any.
inline std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  for (std::size_t u = 0; u < g.n(); ++u) {
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) {
      if (v <= static_cast<Vertex>(u)) continue;
      VertexSet common = g.row(static_cast<Vertex>(u)) & g.row(v);
      Vertex w = common.next(v + 1);
      if (w >= 0) return std::array<Vertex, 3>{static_cast<Vertex>(u), v, w};
    }
  }
  return std::nullopt;
}

/// Lexicographically first K4, if any.
inline std::optional<std::array<Vertex, 4>> find_k4(const Graph& g) {
  using Word = VertexSet::Word;
  constexpr std::size_t kBits = VertexSet::kWordBits;
  std::size_t words = (g.n() + kBits - 1) / kBits;
  std::vector<Word> uv(words, 0);
  // First member of (uv & row(w)) above `after`, or -1.
  auto first_above = [&](std::span<const Word> rw, std::size_t after) -> Vertex {
    std::size_t start = (after + 1) / kBits;
    for (std::size_t i = start; i < words; ++i) {
      Word x = uv[i] & rw[i];
      if (i == start) x &= ~Word{0} << ((after + 1) % kBits);
      if (x != 0) return static_cast<Vertex>(i * kBits + static_cast<std::size_t>(std::countr_zero(x)));
    }
    return -1;
  };
  for (std::size_t u = 0; u < g.n(); ++u) {
    const auto& ru = g.row(static_cast<Vertex>(u)).words();
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) {
      if (v <= static_cast<Vertex>(u)) continue;
      const auto& rv = g.row(v).words();
      for (std::size_t i = 0; i < words; ++i) uv[i] = ru[i] & rv[i];
      for (std::size_t i = static_cast<std::size_t>(v) / kBits; i < words; ++i) {
        Word bits = uv[i];
        while (bits != 0) {
          auto w = static_cast<Vertex>(i * kBits + static_cast<std::size_t>(std::countr_zero(bits)));
          bits &= bits - 1;
          if (w <= v) continue;
          Vertex x = first_above(g.row(w).words(), static_cast<std::size_t>(w));
          if (x >= 0) return std::array<Vertex, 4>{static_cast<Vertex>(u), v, w, x};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }
inline bool is_k4_free(const Graph& g) { return !find_k4(g).has_value(); }

inline bool is_independent(const Graph& g, const VertexSet& s) {
  check_width(g, s);
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && g.row(v).intersects(s)) ok = false;
  });
  return ok;
}

/// True iff G[s] has no triangle.
inline bool induces_triangle_free(const Graph& g, const VertexSet& s) {
  check_width(g, s);
  bool ok = true;
  s.for_each([&](Vertex u) {
    if (!ok) return;
    VertexSet nu = g.row(u) & s;
    nu.for_each([&](Vertex v) {
      if (ok && v > u && g.row(v).intersects(nu)) ok = false;
    });
  });
  return ok;
}

/// Induced subgraph on s; the second member maps new ids to old ids (ascending).
inline std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g, const VertexSet& s) {
  check_width(g, s);
  std::vector<Vertex> old_ids = s.members();
  std::vector<Vertex> new_id(g.n(), -1);
  for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[static_cast<std::size_t>(old_ids[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < old_ids.size(); ++i) {
    for (Vertex w : g.neighbors(old_ids[i])) {
      Vertex j = new_id[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  return {Graph::from_edges(old_ids.size(), edges), std::move(old_ids)};
}

/// Balanced 2-partition (|A| = |A^c| = n/2) with cached side edge counts.
class BalancedPartition {
 public:
  BalancedPartition() = default;

  static BalancedPartition from_side(const Graph& g, VertexSet side_a) {
    check_width(g, side_a);
    require(g.n() % 2 == 0, ErrorCode::kParity, "balanced partition needs an even vertex count");
    require(side_a.size() * 2 == g.n(), ErrorCode::kContractViolation,
            "side has " + std::to_string(side_a.size()) + " vertices, expected " + std::to_string(g.n() / 2));
    BalancedPartition p;
    p.e_a_ = e_subset(g, side_a);
    p.e_ac_ = e_subset(g, side_a.complement());
    p.side_a_ = std::move(side_a);
    return p;
  }

  const VertexSet& side_a() const noexcept { return side_a_; }
  VertexSet side_ac() const { return side_a_.complement(); }
  EdgeCount e_a() const noexcept { return e_a_; }
  EdgeCount e_ac() const noexcept { return e_ac_; }
  EdgeCount max_side() const noexcept { return std::max(e_a_, e_ac_); }
  EdgeCount sum_sides() const noexcept { return e_a_ + e_ac_; }

  /// Recomputes both side counts from scratch and compares with the cache.
  bool consistent_with(const Graph& g) const {
    return side_a_.universe() == g.n() && side_a_.size() * 2 == g.n() && e_subset(g, side_a_) == e_a_ &&
           e_subset(g, side_a_.complement()) == e_ac_;
  }

 private:
  VertexSet side_a_;
  EdgeCount e_a_ = 0;
  EdgeCount e_ac_ = 0;
};

/// Unrestricted 2-partition, used for bipartization.
struct Bipartition {
  VertexSet side_a;
  EdgeCount e_a = 0;
  EdgeCount e_ac = 0;

  static Bipartition from_side(const Graph& g, VertexSet side) {
    check_width(g, side);
    Bipartition p;
    p.e_a = e_subset(g, side);
    p.e_ac = e_subset(g, side.complement());
    p.side_a = std::move(side);
    return p;
  }
  EdgeCount deleted() const noexcept { return e_a + e_ac; }
};

}  // namespace judicious
