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
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "judicious/constructions.hpp"
#include "judicious/graph.hpp"
#include "judicious/parallel.hpp"

namespace judicious {

using Five = std::array<std::int64_t, 5>;

/// Counts a_1..a_5 of a subset of a C5 blow-up, together with their
/// non-increasing rearrangement b.
struct FiveProfile {
  Five a{};
  Five b{};

  static FiveProfile from_counts(const Five& a) {
    FiveProfile p;
    p.a = a;
    p.b = a;
    std::sort(p.b.begin(), p.b.end(), std::greater<>());
    return p;
  }
};

inline bool is_non_increasing(const Five& b) {
  for (std::size_t i = 0; i + 1 < 5; ++i) {
    if (b[i] < b[i + 1]) return false;
  }
  return true;
}

/// a1a2 + a2a3 + a3a4 + a4a5 + a5a1.
inline std::int64_t s_value(const Five& a) {
  return a[0] * a[1] + a[1] * a[2] + a[2] * a[3] + a[3] * a[4] + a[4] * a[0];
}

/// b1b4 + b4b3 + b3b2 + b2b5 + b5b1.
inline std::int64_t t_value(const Five& b) {
  return b[0] * b[3] + b[3] * b[2] + b[2] * b[1] + b[1] * b[4] + b[4] * b[0];
}

inline std::int64_t s_a(const FiveProfile& p) { return s_value(p.a); }
inline std::int64_t t_b(const FiveProfile& p) { return t_value(p.b); }

/// Minimum edge count forced inside a subset of size pn + q of the C5
/// blow-up with classes of size n.
inline std::int64_t f_closed_form(std::int64_t n, std::int64_t p, std::int64_t q) {
  require(n >= 1, ErrorCode::kDomain, "f needs n >= 1");
  require(p >= 0 && p < 5, ErrorCode::kDomain, "f needs 0 <= p < 5, got p = " + std::to_string(p));
  require(q >= 0 && q < n, ErrorCode::kDomain, "f needs 0 <= q < n, got q = " + std::to_string(q));
  switch (p) {
    case 0:
    case 1: return 0;
    case 2: return q * n;
    case 3: return n * n + 2 * q * n;
    default: return 3 * n * n + 2 * q * n;
  }
}

/// b*: p entries n, one entry q, rest 0.
inline Five target_profile(std::int64_t n, std::int64_t p, std::int64_t q) {
  Five b{};
  for (std::int64_t i = 0; i < 5; ++i) {
    if (i < p) b[static_cast<std::size_t>(i)] = n;
    else if (i == p) b[static_cast<std::size_t>(i)] = q;
  }
  return b;
}

inline std::int64_t l1_distance(const Five& x, const Five& y) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < 5; ++i) d += x[i] > y[i] ? x[i] - y[i] : y[i] - x[i];
  return d;
}

struct Algorithm1Step {
  Five b{};
  std::int64_t t = 0;
  int x = 0;  // 1-based index that gained a unit (0 for the initial state)
  int y = 0;  // 1-based index that lost a unit
};

struct Algorithm1Result {
  Five b_star{};
  std::int64_t final_t = 0;
  std::int64_t iterations = 0;
  std::int64_t expected_iterations = 0;  // ||b - b*|| / 2
  std::vector<Algorithm1Step> trace;     // initial state first
};

/// Runs the unit-transfer loop from b to b*.
inline Algorithm1Result algorithm1_min_t(const Five& b0, std::int64_t n, std::int64_t p, std::int64_t q) {
  require(n >= 1 && p >= 0 && p < 5 && q >= 0 && q < n, ErrorCode::kContractViolation, "algorithm1: (n, p, q) out of range");
  require(is_non_increasing(b0), ErrorCode::kContractViolation, "algorithm1: b must be non-increasing");
  std::int64_t sum = 0;
  for (auto v : b0) {
    require(v >= 0 && v <= n, ErrorCode::kContractViolation, "algorithm1: entries must lie in [0, n]");
    sum += v;
  }
  require(sum == p * n + q, ErrorCode::kContractViolation, "algorithm1: entries must sum to pn + q");

  Algorithm1Result r;
  r.b_star = target_profile(n, p, q);
  r.expected_iterations = l1_distance(b0, r.b_star) / 2;
  Five b = b0;
  r.trace.push_back({b, t_value(b), 0, 0});
  while (b != r.b_star) {
    int x = 0;
    int y = 0;
    for (int i = 0; i < 5; ++i) {
      if (b[static_cast<std::size_t>(i)] < n) {
        x = i + 1;
        break;
      }
    }
    for (int j = 4; j >= 0; --j) {
      if (b[static_cast<std::size_t>(j)] > 0) {
        y = j + 1;
        break;
      }
    }
    require(x != 0 && y != 0 && x < y, ErrorCode::kContractViolation, "algorithm1: loop stalled before reaching b*");
    ++b[static_cast<std::size_t>(x - 1)];
    --b[static_cast<std::size_t>(y - 1)];
    ++r.iterations;
    r.trace.push_back({b, t_value(b), x, y});
  }
  r.final_t = t_value(b);
  return r;
}

/// T(b^{ij}) - T(b) by direct evaluation; i < j are 1-based, b^{ij} moves one
/// unit from position j to position i.
inline std::int64_t table1_delta(const Five& b, int i, int j) {
  require(1 <= i && i < j && j <= 5, ErrorCode::kIndex, "table1 needs 1 <= i < j <= 5");
  Five c = b;
  ++c[static_cast<std::size_t>(i - 1)];
  --c[static_cast<std::size_t>(j - 1)];
  return t_value(c) - t_value(b);
}

/// The closed-form entry of the difference table.
inline std::int64_t table1_formula(const Five& b, int i, int j) {
  require(1 <= i && i < j && j <= 5, ErrorCode::kIndex, "table1 needs 1 <= i < j <= 5");
  auto B = [&](int k) { return b[static_cast<std::size_t>(k - 1)]; };
  switch (i * 10 + j) {
    case 12: return B(4) - B(3);
    case 13: return B(5) - B(2);
    case 14: return B(5) - B(3) + B(4) - B(1) - 1;
    case 15: return B(5) - B(2) + B(4) - B(1) - 1;
    case 23: return B(5) - B(4) + B(3) - B(2) - 1;
    case 24: return B(5) - B(1);
    case 25: return B(5) - B(1) + B(3) - B(2) - 1;
    case 34: return B(2) - B(1) + B(4) - B(3) - 1;
    case 35: return B(4) - B(1);
    default: return B(3) - B(2);
  }
}

struct ProfileMinimum {
  std::int64_t value = 0;
  std::vector<Five> minimizers;  // sorted profiles, in lexicographically decreasing order
};

/// Over every non-increasing b with entries in [0, n] summing to `total`,
/// the minimum over all arrangements a of b of S_a.
inline ProfileMinimum min_edges_profile(std::int64_t n, std::int64_t total) {
  require(n >= 1, ErrorCode::kDomain, "profile needs n >= 1");
  require(total >= 0, ErrorCode::kDomain, "profile total must be non-negative");
  require(total <= 5 * n, ErrorCode::kInfeasible, "profile total exceeds 5n");
  ProfileMinimum out;
  out.value = std::numeric_limits<std::int64_t>::max();
  Five b{};
  auto visit = [&]() {
    Five a = b;
    std::sort(a.begin(), a.end());
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
      best = std::min(best, s_value(a));
    } while (std::next_permutation(a.begin(), a.end()));
    if (best < out.value) {
      out.value = best;
      out.minimizers.clear();
    }
    if (best == out.value) out.minimizers.push_back(b);
  };
  auto rec = [&](auto&& self, std::size_t i, std::int64_t cap, std::int64_t rest) -> void {
    if (i == 5) {
      if (rest == 0) visit();
      return;
    }
    for (std::int64_t v = std::min(cap, rest); v >= 0; --v) {
      if (v * static_cast<std::int64_t>(5 - i) < rest) break;
      b[i] = v;
      self(self, i + 1, v, rest - v);
    }
  };
  rec(rec, 0, n, total);
  return out;
}

/// Sum over base edges of count products: the edge count of any expanded
/// subset realizing the counts.
inline EdgeCount blowup_edges_from_counts(const BlowupGraph& bg, const std::vector<std::int64_t>& counts) {
  require(counts.size() == bg.base().n(), ErrorCode::kContractViolation, "count vector length mismatch");
  for (std::size_t b = 0; b < counts.size(); ++b) {
    require(counts[b] >= 0 && counts[b] <= bg.multiplicities()[b], ErrorCode::kContractViolation,
            "count exceeds multiplicity at base vertex " + std::to_string(b));
  }
  EdgeCount e = 0;
  for (auto [u, v] : bg.base().edges()) e += counts[static_cast<std::size_t>(u)] * counts[static_cast<std::size_t>(v)];
  return e;
}

/// Base vertices with identical neighbourhoods, in order of first member.
inline std::vector<std::vector<Vertex>> twin_classes(const Graph& base) {
  std::vector<std::vector<Vertex>> classes;
  std::vector<Vertex> rep;
  for (std::size_t v = 0; v < base.n(); ++v) {
    bool placed = false;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (base.row(rep[k]) == base.row(static_cast<Vertex>(v))) {
        classes[k].push_back(static_cast<Vertex>(v));
        placed = true;
        break;
      }
    }
    if (!placed) {
      classes.push_back({static_cast<Vertex>(v)});
      rep.push_back(static_cast<Vertex>(v));
    }
  }
  return classes;
}

struct BlowupOptions {
  int workers = 1;
  bool collect_all = false;  // record every optimal aggregated count vector
  std::size_t collect_limit = 100000;
};

struct BlowupResult {
  EdgeCount value = 0;
  EdgeCount e_a = 0;
  EdgeCount e_ac = 0;
  std::vector<std::int64_t> count_vector;  // per base vertex
  std::vector<std::vector<Vertex>> aggregated_classes;
  std::vector<std::int64_t> aggregated_multiplicities;
  std::vector<std::int64_t> aggregated_counts;
  std::vector<std::vector<std::int64_t>> all_optimal;  // aggregated vectors, if collected
  std::uint64_t nodes_explored = 0;
  bool proven_optimal = true;

  VertexSet witness(const BlowupGraph& bg) const { return bg.realize(count_vector); }
};

namespace detail {

class CountVectorSearch {
 public:
  CountVectorSearch(std::vector<std::int64_t> mult, std::vector<std::pair<int, int>> edges, std::int64_t half,
                    const BlowupOptions& options)
      : mult_(std::move(mult)), edges_(std::move(edges)), half_(half), options_(options) {
    k_ = mult_.size();
    suffix_.assign(k_ + 1, 0);
    for (std::size_t i = k_; i-- > 0;) suffix_[i] = suffix_[i + 1] + mult_[i];
    // Edges whose later endpoint is i are charged when coordinate i is fixed.
    back_.assign(k_, {});
    for (auto [u, v] : edges_) {
      int lo = std::min(u, v);
      int hi = std::max(u, v);
      back_[static_cast<std::size_t>(hi)].push_back(lo);
    }
  }

  struct Slice {
    bool found = false;
    EdgeCount value = std::numeric_limits<EdgeCount>::max();
    EdgeCount ea = 0;
    EdgeCount eb = 0;
    std::vector<std::int64_t> best;
    std::vector<std::vector<std::int64_t>> all;
    std::uint64_t nodes = 0;
  };

  std::int64_t first_max() const { return std::min(mult_[0], half_); }

  Slice run(std::int64_t x0) const {
    Slice s;
    std::vector<std::int64_t> x(k_, 0);
    if (x0 + suffix_[1] < half_) return s;
    x[0] = x0;
    rec(1, x0, 0, 0, x, s);
    return s;
  }

 private:
  void rec(std::size_t i, std::int64_t used, EdgeCount ea, EdgeCount eb, std::vector<std::int64_t>& x, Slice& s) const {
    ++s.nodes;
    if (std::max(ea, eb) > s.value) return;
    if (i == k_) {
      if (used != half_) return;
      EdgeCount v = std::max(ea, eb);
      if (v < s.value) {
        s.value = v;
        s.found = true;
        s.best = x;
        s.ea = ea;
        s.eb = eb;
        s.all.clear();
      }
      if (options_.collect_all && v == s.value && s.all.size() < options_.collect_limit) s.all.push_back(x);
      return;
    }
    std::int64_t need = half_ - used;
    std::int64_t lo = std::max<std::int64_t>(0, need - suffix_[i + 1]);
    std::int64_t hi = std::min(mult_[i], need);
    for (std::int64_t c = lo; c <= hi; ++c) {
      x[i] = c;
      EdgeCount da = 0;
      EdgeCount db = 0;
      for (int j : back_[i]) {
        da += c * x[static_cast<std::size_t>(j)];
        db += (mult_[i] - c) * (mult_[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(j)]);
      }
      rec(i + 1, used + c, ea + da, eb + db, x, s);
    }
    x[i] = 0;
  }

  std::vector<std::int64_t> mult_;
  std::vector<std::pair<int, int>> edges_;
  std::int64_t half_;
  BlowupOptions options_;
  std::size_t k_ = 0;
  std::vector<std::int64_t> suffix_;
  std::vector<std::vector<int>> back_;
};

}  // namespace detail

/// Exact D_{2,inf}^b of a blow-up via count vectors over twin-aggregated
/// classes. Witness: the lexicographically smallest optimal aggregated count
/// vector, spread over class members in order.
inline BlowupResult exact_min_max_blowup(const BlowupGraph& bg, const BlowupOptions& options = {}) {
  require(bg.total() % 2 == 0, ErrorCode::kParity, "blow-up has an odd number of vertices");
  BlowupResult r;
  r.aggregated_classes = twin_classes(bg.base());
  std::size_t k = r.aggregated_classes.size();
  std::vector<int> class_of(bg.base().n(), 0);
  for (std::size_t c = 0; c < k; ++c) {
    std::int64_t m = 0;
    for (Vertex v : r.aggregated_classes[c]) {
      class_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
      m += bg.multiplicity(v);
    }
    r.aggregated_multiplicities.push_back(m);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = c + 1; d < k; ++d) {
      if (bg.base().has_edge(r.aggregated_classes[c][0], r.aggregated_classes[d][0])) {
        edges.emplace_back(static_cast<int>(c), static_cast<int>(d));
      }
    }
  }
  std::int64_t half = bg.total() / 2;
  detail::CountVectorSearch search(r.aggregated_multiplicities, edges, half, options);
  auto slices = parallel_map<detail::CountVectorSearch::Slice>(
      static_cast<std::size_t>(search.first_max() + 1), options.workers,
      [&](std::size_t x0) { return search.run(static_cast<std::int64_t>(x0)); });
  bool found = false;
  for (auto& s : slices) {
    r.nodes_explored += s.nodes;
    if (!s.found) continue;
    if (!found || s.value < r.value) {
      found = true;
      r.value = s.value;
      r.e_a = s.ea;
      r.e_ac = s.eb;
      r.aggregated_counts = s.best;
      r.all_optimal.clear();
    }
    if (options.collect_all && s.value == r.value) {
      for (auto& v : s.all) {
        if (r.all_optimal.size() < options.collect_limit) r.all_optimal.push_back(std::move(v));
      }
    }
  }
  require(found, ErrorCode::kContractViolation, "no balanced count vector exists");
  r.count_vector.assign(bg.base().n(), 0);
  for (std::size_t c = 0; c < k; ++c) {
    std::int64_t left = r.aggregated_counts[c];
    for (Vertex v : r.aggregated_classes[c]) {
      std::int64_t take = std::min(left, bg.multiplicity(v));
      r.count_vector[static_cast<std::size_t>(v)] = take;
      left -= take;
    }
  }
  return r;
}

inline std::int64_t theorem16_value(std::int64_t n) {
  require(n >= 1, ErrorCode::kDomain, "n must be positive");
  return 37 * n * n;
}

/// e(A) when A holds 2pn + q vertices of the C5 blow-up part of H^{2n} at
/// the minimum f(2n, p, q) and the rest of its 12n vertices in the
/// independent part.
inline std::int64_t piecewise_case_values(std::int64_t n, std::int64_t p, std::int64_t q) {
  require(n >= 1, ErrorCode::kDomain, "n must be positive");
  require(p >= 2 && p <= 4, ErrorCode::kDomain, "p must be 2, 3 or 4");
  std::int64_t q_lo = p == 2 ? n : 0;
  require(q >= q_lo && q < 2 * n, ErrorCode::kDomain, "q out of range for p = " + std::to_string(p));
  std::int64_t c = 2 * p * n + q;
  return c * (12 * n - c) + f_closed_form(2 * n, p, q);
}

/// The displayed closed forms of the three cases.
inline std::int64_t piecewise_display(std::int64_t n, std::int64_t p, std::int64_t q) {
  require(p >= 2 && p <= 4, ErrorCode::kDomain, "p must be 2, 3 or 4");
  if (p == 2) return 32 * n * n + q * (6 * n - q);
  if (p == 3) return 40 * n * n + 4 * n * q - q * q;
  return 44 * n * n - q * q;
}

struct PiecewiseMinimum {
  std::int64_t value = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
};

/// Minimum of piecewise_case_values over the legal (p, q) grid; ties go to
/// the smallest (p, q).
inline PiecewiseMinimum piecewise_minimum(std::int64_t n) {
  PiecewiseMinimum best{std::numeric_limits<std::int64_t>::max(), 0, 0};
  for (std::int64_t p = 2; p <= 4; ++p) {
    for (std::int64_t q = p == 2 ? n : 0; q < 2 * n; ++q) {
      std::int64_t v = piecewise_case_values(n, p, q);
      if (v < best.value) best = {v, p, q};
    }
  }
  return best;
}

/// True when the five counts equal (m, 0, m/2, m, 0) up to a rotation or
/// reflection of the cycle.
inline bool is_dihedral_image(const Five& a, const Five& pattern) {
  for (int r = 0; r < 5; ++r) {
    for (int dir : {1, -1}) {
      bool ok = true;
      for (int i = 0; i < 5 && ok; ++i) {
        int j = ((r + dir * i) % 5 + 5) % 5;
        ok = a[static_cast<std::size_t>(i)] == pattern[static_cast<std::size_t>(j)];
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace judicious
