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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "judicious/blowup_solver.hpp"
#include "judicious/certificates.hpp"
#include "judicious/constructions.hpp"
#include "judicious/exact_solver.hpp"
#include "judicious/heuristics.hpp"
#include "judicious/io.hpp"

namespace judicious {

// ---------------------------------------------------------------------------
// Seeded corpora.

namespace corpus {

struct Instance {
  std::string family;
  Graph graph;
};

struct JoinInstance {
  std::string family;
  Graph graph;
  VertexSet i_set;
};

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

inline std::int64_t even_in(Rng& rng, std::int64_t lo, std::int64_t hi) { return 2 * uniform(rng, (lo + 1) / 2, hi / 2); }

/// Random positive multiplicities over `base` summing to exactly `total`.
inline BlowupGraph weighted_blowup(const Graph& base, std::int64_t total, Rng& rng) {
  auto k = static_cast<std::int64_t>(base.n());
  std::vector<std::int64_t> mult(base.n(), 1);
  for (std::int64_t rest = total - k; rest > 0; --rest) ++mult[rng.below(static_cast<std::uint64_t>(k))];
  return BlowupGraph(base, std::move(mult));
}

/// Families for the swap bound: ER p in {0.2, 0.5, 0.8}, tripartite, blow-ups.
inline std::vector<Instance> swap_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<Instance> out;
  Rng rng(seed, 8);
  for (std::size_t i = 0; i < count; ++i) {
    auto n = static_cast<std::size_t>(even_in(rng, 8, 60));
    std::uint64_t s = rng.next();
    switch (i % 5) {
      case 0: out.push_back({"er-0.2", random_graph(RandomKind::kErdosRenyi, n, {0.2}, s)}); break;
      case 1: out.push_back({"er-0.5", random_graph(RandomKind::kErdosRenyi, n, {0.5}, s)}); break;
      case 2: out.push_back({"er-0.8", random_graph(RandomKind::kErdosRenyi, n, {0.8}, s)}); break;
      case 3: out.push_back({"tripartite", random_graph(RandomKind::kTripartite, n, {0.7}, s)}); break;
      default: {
        auto k = static_cast<std::size_t>(uniform(rng, 3, 7));
        Graph base = random_graph(RandomKind::kErdosRenyi, k, {0.6}, s);
        out.push_back({"blowup", weighted_blowup(base, static_cast<std::int64_t>(std::max(n, k + (k % 2))), rng).expand()});
        break;
      }
    }
  }
  return out;
}

inline std::vector<Instance> triangle_free_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<Instance> out;
  Rng rng(seed, 10);
  for (std::size_t i = 0; i < count; ++i) {
    auto n = static_cast<std::size_t>(uniform(rng, 5, 60));
    std::uint64_t s = rng.next();
    switch (i % 4) {
      case 0: out.push_back({"triangle-free-0.3", random_graph(RandomKind::kTriangleFree, n, {0.3}, s)}); break;
      case 1: out.push_back({"triangle-free-0.8", random_graph(RandomKind::kTriangleFree, n, {0.8}, s)}); break;
      case 2: out.push_back({"c5-blowup", weighted_blowup(cycle(5), static_cast<std::int64_t>(n), rng).expand()}); break;
      default: {
        auto len = static_cast<std::size_t>(2 * uniform(rng, 2, 12) + 1);
        out.push_back({"odd-cycle", cycle(len)});
        break;
      }
    }
  }
  return out;
}

/// K4-free graphs with n in [200, 2000].
inline std::vector<Instance> k4free_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<Instance> out;
  Rng rng(seed, 12);
  const Graph ico = icosahedron();
  const Graph co = complement(ico);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t s = rng.next();
    switch (i % 6) {
      case 0: {
        auto n = static_cast<std::size_t>(even_in(rng, 200, 1000));
        out.push_back({"random-k4free", random_graph(RandomKind::kK4Free, n, {i % 12 == 0 ? 0.1 : 0.5}, s)});
        break;
      }
      case 1: {
        auto n = static_cast<std::size_t>(even_in(rng, 200, 2000));
        out.push_back({"tripartite", random_graph(RandomKind::kTripartite, n, {0.3 + 0.1 * static_cast<double>(i % 7)}, s)});
        break;
      }
      case 2: out.push_back({"h-blowup", paper_h_blowup(uniform(rng, 9, 83)).expand()}); break;
      case 3: out.push_back({"c5-blowup", weighted_blowup(cycle(5), even_in(rng, 200, 2000), rng).expand()}); break;
      case 4: out.push_back({"icosahedron-blowup", weighted_blowup(ico, even_in(rng, 200, 1200), rng).expand()}); break;
      default: out.push_back({"icosahedron-complement-blowup", weighted_blowup(co, even_in(rng, 200, 1200), rng).expand()}); break;
    }
  }
  return out;
}

/// I ∨ H with H triangle-free; n in [120, 1200] and |I|/n spread over the
/// four ranges of the case analysis.
inline std::vector<JoinInstance> join_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<JoinInstance> out;
  Rng rng(seed, 13);
  const std::array<std::pair<int, int>, 4> alpha_pct{{{63, 80}, {59, 61}, {50, 58}, {25, 49}}};
  for (std::size_t i = 0; i < count; ++i) {
    auto n = even_in(rng, 120, 1200);
    auto [lo, hi] = alpha_pct[i % 4];
    std::int64_t isz = n * uniform(rng, lo, hi) / 100;
    if (i % 4 == 1) isz = std::max(isz, (7 * n) / 12 + 1);
    auto hsz = static_cast<std::size_t>(n - isz);
    std::uint64_t s = rng.next();
    Graph h(0);
    std::string family;
    switch ((i / 4) % 4) {
      case 0:
        h = random_graph(RandomKind::kTriangleFree, hsz, {0.5}, s);
        family = "random-triangle-free";
        break;
      case 1:
        h = weighted_blowup(cycle(5), static_cast<std::int64_t>(hsz), rng).expand();
        family = "c5-blowup";
        break;
      case 2:
        h = complete_multipartite({hsz / 2, hsz - hsz / 2});
        family = "complete-bipartite";
        break;
      default:
        h = random_graph(RandomKind::kTriangleFree, hsz, {0.05}, s);
        family = "sparse-triangle-free";
        break;
    }
    Graph g = join(independent_set(static_cast<std::size_t>(isz)), h);
    out.push_back({family, g, VertexSet::from_range(g.n(), 0, static_cast<Vertex>(isz))});
  }
  return out;
}

}  // namespace corpus

// ---------------------------------------------------------------------------
// Pipeline trace coherence.

namespace detail {

inline std::string strip_fallback(const std::string& label) {
  const std::string suffix = "/fallback";
  if (label.size() >= suffix.size() && label.compare(label.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return label.substr(0, label.size() - suffix.size());
  }
  return label;
}

inline void common_trace_checks(const Graph& g, const PipelineResult& r, const Rational& factor,
                                std::vector<std::string>& problems) {
  const CaseTrace& t = r.trace;
  if (!r.partition.consistent_with(g)) problems.emplace_back("partition is not a consistent balanced split");
  if (t.achieved != r.partition.max_side()) problems.emplace_back("achieved differs from max{e(A), e(A^c)}");
  Rational n(static_cast<std::int64_t>(g.n()));
  if (t.target_bound != factor * n * n) problems.emplace_back("target bound differs from the pipeline factor times n^2");
  if (t.compliant != (Rational(t.achieved) <= t.target_bound)) problems.emplace_back("compliant flag disagrees with values");
  if (t.route.empty()) problems.emplace_back("empty route");
  bool suffixed = strip_fallback(t.case_label) != t.case_label;
  if (suffixed != t.fallback) problems.emplace_back("fallback flag and label suffix disagree");
  if (t.fallback && t.note.empty()) problems.emplace_back("fallback without a reason");
}

}  // namespace detail

/// Internal consistency of a K4-free pipeline result; empty when coherent.
inline std::vector<std::string> k4free_trace_problems(const Graph& g, const PipelineResult& r) {
  std::vector<std::string> problems;
  detail::common_trace_checks(g, r, dec("0.074"), problems);
  const CaseTrace& t = r.trace;
  const Rational n(static_cast<std::int64_t>(g.n()));
  auto need = [&](const char* name) -> Rational {
    const Rational* v = t.get(name);
    if (v == nullptr) {
      problems.push_back(std::string("missing quantity ") + name);
      return Rational(0);
    }
    return *v;
  };
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(t.case_label + ": " + what);
  };
  std::string label = detail::strip_fallback(t.case_label);
  if (need("m") != Rational(g.m())) problems.emplace_back("m differs from e(G)");
  bool sparse = Rational(g.m()) <= dec("0.02959") * n * n;
  if (label == "COR36") {
    expect(sparse, "edge count above the sparse threshold");
    return problems;
  }
  expect(!sparse, "sparse graph routed past the first branch");
  Rational isz = need("|I|");
  if (label.rfind("L41_", 0) == 0) {
    expect(isz >= dec("0.28") * n, "|I| below 0.28n");
    Rational z = need("z");
    if (label == "L41_C11") expect(z <= dec("0.45"), "z above 0.45");
    else if (label == "L41_C12") expect(z > dec("0.45"), "z not above 0.45");
    else problems.push_back("unknown label " + t.case_label);
    return problems;
  }
  expect(isz < dec("0.28") * n, "|I| not below 0.28n");
  Rational tt = need("t");
  Rational c = need("c");
  expect(tt == need("a2") + c, "t differs from a2 + c");
  if (label == "L43_C31") {
    expect(tt <= dec("0.39"), "t above 0.39");
  } else if (label == "L43_C32") {
    expect(tt >= dec("0.45"), "t below 0.45");
  } else if (label == "L43_C331") {
    expect(tt > dec("0.39") && tt < dec("0.45") && c <= dec("0.23"), "(t, c) outside the branch");
  } else if (label.rfind("L43_C332", 0) == 0) {
    expect(tt > dec("0.39") && tt < dec("0.45") && c > dec("0.23"), "(t, c) outside the branch");
    if (label != "L43_C332") {
      expect(label == "L43_C332_" + std::to_string(ceil_int(100 * c - 23)), "sub-case index disagrees with c");
    }
  } else {
    problems.push_back("unknown label " + t.case_label);
  }
  return problems;
}

inline std::vector<std::string> join_trace_problems(const Graph& g, const VertexSet& i_set, const PipelineResult& r) {
  std::vector<std::string> problems;
  detail::common_trace_checks(g, r, frac(5, 72), problems);
  const CaseTrace& t = r.trace;
  auto n = static_cast<std::int64_t>(g.n());
  auto isz = static_cast<std::int64_t>(i_set.size());
  const Rational* alpha = t.get("alpha");
  if (alpha == nullptr || *alpha != frac(isz, n)) problems.emplace_back("alpha differs from |I|/n");
  std::string label = detail::strip_fallback(t.case_label);
  std::string expected = 100 * isz > 62 * n ? "JOIN_C1" : 12 * isz > 7 * n ? "JOIN_C2" : 2 * isz >= n ? "JOIN_C3" : "JOIN_C4";
  if (label != expected) problems.push_back("label " + t.case_label + " but |I|/n selects " + expected);
  if (label == "JOIN_C3") {
    const Rational* e0 = t.get("e0");
    const Rational* thr = t.get("threshold");
    if (e0 == nullptr || thr == nullptr) {
      problems.emplace_back("missing e0 or threshold");
    } else if ((t.route == "park-h") != (*e0 < *thr)) {
      problems.emplace_back("route disagrees with e0 versus threshold");
    }
  }
  return problems;
}

// ---------------------------------------------------------------------------
// Acceptance checks.

using ProfileFormula = std::function<std::int64_t(std::int64_t, std::int64_t, std::int64_t)>;

struct ReproductionOptions {
  int workers = 1;
  std::uint64_t seed = 0;
  ProfileFormula f = f_closed_form;  // replaceable for harness mutation tests
  std::string artifact_dir;          // counterexample candidates are written here when set
};

struct CheckInfo {
  int number = 0;
  std::string key;
  std::string anchor;
};

struct CheckResult {
  int number = 0;
  std::string key;
  std::string anchor;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline const std::vector<CheckInfo>& reproduction_checks() {
  static const std::vector<CheckInfo> checks{
      {1, "h-value", "minmax of I7 v C5 is 10 = (5/72) 12^2"},
      {2, "h-table", "I7 v C5 minima by C5 vertices on A: {10, 11, 10} and {1, 3, 5}"},
      {3, "blowup-value", "minmax of the 2n-blow-up of I7 v C5 is 37n^2"},
      {4, "profile-lower-bound", "S_a >= T(b) for every profile"},
      {5, "profile-minimum", "min_edges_profile = f(n, p, q); unique minimiser for p = 2"},
      {6, "difference-table", "difference table entries and unit-transfer descent"},
      {7, "tripartite-equality", "complete 3-partite (2k, k, k) attains n^2/16"},
      {8, "swap-bound", "pair-swap search within (m + Delta - delta)/4"},
      {9, "proportional-subset", "e(Y, C)|B| <= p e(B, C)"},
      {10, "bipartize-bound", "triangle-free bipartization within m - 4m^2/n^2"},
      {11, "certificates", "interval certificates and printed constants"},
      {12, "pipelines", "K4-free and join pipelines: coherent traces and bounds"},
      {13, "oracle-equivalence", "blow-up reduction equals expanded exact solving"},
      {14, "determinism", "identical outputs for 1, 2 and 8 workers"},
  };
  return checks;
}

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::string fixed(double x, int digits = 2) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << x;
  return os.str();
}

inline ExactOptions exact_opts(const ReproductionOptions& o) {
  ExactOptions e;
  e.workers = o.workers;
  return e;
}

inline HeuristicConfig heuristic_cfg(const ReproductionOptions& o, std::uint64_t seed) {
  HeuristicConfig c;
  c.seed = seed;
  c.workers = o.workers;
  return c;
}

inline void check_h_value(const ReproductionOptions& o, CheckResult& r) {
  Stopwatch sw;
  Graph h = paper_h();
  ExactOptions bb = exact_opts(o);
  ExactOptions en = bb;
  en.method = ExactMethod::kEnumerate;
  ExactResult a = exact_min_max_balanced(h, bb);
  ExactResult b = exact_min_max_balanced(h, en);
  double t = sw.seconds();
  bool value_ok = a.value == 10 && b.value == 10 && frac(5, 72) * 144 == Rational(10);
  r.passed = value_ok && t < 1.0;
  r.detail = "branch-and-bound " + std::to_string(a.value) + ", enumeration " + std::to_string(b.value) + " over " +
             std::to_string(b.nodes_explored) + " nodes, " + fixed(t, 3) + " s (limit 1 s)";
}

inline void check_h_table(const ReproductionOptions&, CheckResult& r) {
  Graph h = paper_h();
  const std::uint64_t c5 = 0xF80;  // vertices 7..11
  std::array<EdgeCount, 6> min_ea;
  std::array<EdgeCount, 6> min_c5;
  min_ea.fill(std::numeric_limits<EdgeCount>::max());
  min_c5.fill(std::numeric_limits<EdgeCount>::max());
  // Independent oracle: count edges from the adjacency matrix directly.
  for_each_subset_of_size(12, 6, [&](std::uint64_t s) {
    int k = std::popcount(s & c5);
    EdgeCount ea = 0;
    EdgeCount within = 0;
    for (int u = 0; u < 12; ++u) {
      for (int v = u + 1; v < 12; ++v) {
        if (((s >> u) & 1) && ((s >> v) & 1) && h.has_edge(u, v)) {
          ++ea;
          if (u >= 7) ++within;
        }
      }
    }
    min_ea[static_cast<std::size_t>(k)] = std::min(min_ea[static_cast<std::size_t>(k)], ea);
    min_c5[static_cast<std::size_t>(k)] = std::min(min_c5[static_cast<std::size_t>(k)], within);
  });
  r.passed = min_ea[3] == 10 && min_ea[4] == 11 && min_ea[5] == 10 && min_c5[3] == 1 && min_c5[4] == 3 && min_c5[5] == 5;
  r.detail = "k=3,4,5: min e(A) = " + std::to_string(min_ea[3]) + ", " + std::to_string(min_ea[4]) + ", " +
             std::to_string(min_ea[5]) + "; min C5 edges = " + std::to_string(min_c5[3]) + ", " +
             std::to_string(min_c5[4]) + ", " + std::to_string(min_c5[5]);
}

inline void check_blowup_value(const ReproductionOptions& o, CheckResult& r) {
  bool ok = true;
  std::string detail;
  BlowupOptions bo;
  bo.workers = o.workers;
  for (std::int64_t n = 1; n <= 3; ++n) {
    Stopwatch sw;
    BlowupResult b = exact_min_max_blowup(paper_h_blowup(n), bo);
    double t = sw.seconds();
    bool good = b.value == 37 * n * n && t < 5.0;
    ok = ok && good;
    detail += "n=" + std::to_string(n) + ": " + std::to_string(b.value) + " (" + fixed(t, 3) + " s); ";
  }
  Stopwatch sw;
  ExactResult full = exact_min_max_balanced(paper_h_blowup(1).expand(), exact_opts(o));
  double t = sw.seconds();
  ok = ok && full.value == 37 && t < 60.0;
  detail += "24-vertex branch-and-bound: " + std::to_string(full.value) + " (" + fixed(t, 2) + " s, limit 60 s)";
  r.passed = ok;
  r.detail = detail;
}

inline void check_profile_lower_bound(const ReproductionOptions&, CheckResult& r) {
  // S and T do not depend on n; entries 0..4 cover every profile with n <= 4.
  std::int64_t checked = 0;
  std::int64_t violations = 0;
  Five a{};
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == 5) {
      Five b = a;
      std::sort(b.begin(), b.end(), std::greater<>());
      ++checked;
      if (s_value(a) < t_value(b)) ++violations;
      return;
    }
    for (std::int64_t v = 0; v <= 4; ++v) {
      a[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  r.passed = violations == 0;
  r.detail = std::to_string(checked) + " profiles with entries in [0, 4], " + std::to_string(violations) + " violations";
}

inline void check_profile_minimum(const ReproductionOptions& o, CheckResult& r) {
  std::int64_t cases = 0;
  std::int64_t bad_value = 0;
  std::int64_t bad_set = 0;
  std::string first;
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (std::int64_t p = 0; p < 5; ++p) {
      for (std::int64_t q = 0; q < n; ++q) {
        ++cases;
        ProfileMinimum m = min_edges_profile(n, p * n + q);
        std::int64_t f = o.f(n, p, q);
        if (m.value != f) {
          ++bad_value;
          if (first.empty()) {
            first = "first mismatch (n,p,q)=(" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(q) +
                    "): brute force " + std::to_string(m.value) + ", formula " + std::to_string(f);
          }
        }
        if (p == 2 && q > 0) {
          std::vector<Five> want{{n, n, q, 0, 0}};
          if (m.minimizers != want) ++bad_set;
        }
      }
    }
  }
  r.passed = bad_value == 0 && bad_set == 0;
  r.detail = std::to_string(cases) + " (n,p,q) cases: " + std::to_string(bad_value) + " value mismatches, " +
             std::to_string(bad_set) + " minimiser-set mismatches" + (first.empty() ? "" : "; " + first);
}

inline void check_difference_table(const ReproductionOptions& o, CheckResult& r) {
  Rng rng(o.seed, 6);
  std::int64_t table_bad = 0;
  std::int64_t descent_bad = 0;
  std::int64_t iterations = 0;
  for (int k = 0; k < 10000; ++k) {
    std::int64_t n = corpus::uniform(rng, 1, 8);
    Five b{};
    std::int64_t sum = 0;
    do {
      sum = 0;
      for (auto& v : b) {
        v = corpus::uniform(rng, 0, n);
        sum += v;
      }
    } while (sum == 5 * n);
    std::sort(b.begin(), b.end(), std::greater<>());
    for (int i = 1; i <= 5; ++i) {
      for (int j = i + 1; j <= 5; ++j) {
        if (table1_delta(b, i, j) != table1_formula(b, i, j)) ++table_bad;
      }
    }
    std::int64_t p = sum / n;
    std::int64_t q = sum % n;
    Algorithm1Result a = algorithm1_min_t(b, n, p, q);
    bool ok = a.iterations * 2 == l1_distance(b, a.b_star) && a.final_t == o.f(n, p, q);
    for (std::size_t s = 1; s < a.trace.size(); ++s) ok = ok && a.trace[s].t <= a.trace[s - 1].t;
    if (!ok) ++descent_bad;
    iterations += a.iterations;
  }
  r.passed = table_bad == 0 && descent_bad == 0;
  r.detail = "10000 profiles: " + std::to_string(table_bad) + " table mismatches, " + std::to_string(descent_bad) +
             " descent violations, " + std::to_string(iterations) + " transfers total";
}

inline void check_tripartite(const ReproductionOptions& o, CheckResult& r) {
  bool ok = true;
  std::string detail;
  for (std::size_t k : {std::size_t{2}, std::size_t{3}}) {
    Graph g = complete_multipartite({2 * k, k, k});
    auto n = static_cast<std::int64_t>(g.n());
    ExactResult e = exact_min_max_balanced(g, exact_opts(o));
    std::array<VertexSet, 3> parts{VertexSet::from_range(g.n(), 0, static_cast<Vertex>(2 * k)),
                                   VertexSet::from_range(g.n(), static_cast<Vertex>(2 * k), static_cast<Vertex>(3 * k)),
                                   VertexSet::from_range(g.n(), static_cast<Vertex>(3 * k), static_cast<Vertex>(4 * k))};
    TripartiteResult t = tripartite_partition(g, parts, heuristic_cfg(o, o.seed));
    bool good = Rational(e.value) == frac(n * n, 16) && t.partition.max_side() == e.value;
    ok = ok && good;
    if (!detail.empty()) detail += "; ";
    detail += "(" + std::to_string(2 * k) + "," + std::to_string(k) + "," + std::to_string(k) + "): exact " +
              std::to_string(e.value) + ", construction " + std::to_string(t.partition.max_side()) + ", n^2/16 = " +
              to_string(frac(n * n, 16));
  }
  r.passed = ok;
  r.detail = detail;
}

inline void check_swap_bound(const ReproductionOptions& o, CheckResult& r) {
  auto instances = corpus::swap_corpus(500, o.seed);
  std::int64_t violations = 0;
  std::string first;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    SwapResult s = swap_local_search(instances[i].graph, SwapObjective::kMax, heuristic_cfg(o, o.seed + i));
    if (!s.compliant || !s.partition.consistent_with(instances[i].graph)) {
      ++violations;
      if (first.empty()) first = "; first: instance " + std::to_string(i) + " (" + instances[i].family + ")";
    }
  }
  r.passed = violations == 0;
  r.detail = "500 instances, " + std::to_string(violations) + " violations" + first;
}

inline void check_proportional_subset(const ReproductionOptions& o, CheckResult& r) {
  Rng rng(o.seed, 9);
  std::int64_t violations = 0;
  for (int k = 0; k < 10000; ++k) {
    auto n = static_cast<std::size_t>(corpus::uniform(rng, 2, 30));
    Graph g = random_graph(RandomKind::kErdosRenyi, n, {0.2 + 0.1 * static_cast<double>(k % 7)}, rng.next());
    VertexSet b(n);
    VertexSet c(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto roll = rng.below(3);
      if (roll == 0) b.insert(static_cast<Vertex>(v));
      else if (roll == 1) c.insert(static_cast<Vertex>(v));
    }
    auto p = static_cast<std::size_t>(corpus::uniform(rng, 0, static_cast<std::int64_t>(b.size())));
    VertexSet y = proportional_subset(g, b, c, p);
    EdgeCount eyc = e_cross(g, y, c);
    EdgeCount ebc = e_cross(g, b, c);
    bool ok = y.size() == p && y.is_subset_of(b) &&
              eyc * static_cast<EdgeCount>(b.size()) <= static_cast<EdgeCount>(p) * ebc;
    if (!ok) ++violations;
  }
  r.passed = violations == 0;
  r.detail = "10000 instances, " + std::to_string(violations) + " violations";
}

inline void check_bipartize(const ReproductionOptions& o, CheckResult& r) {
  auto instances = corpus::triangle_free_corpus(200, o.seed);
  std::int64_t violations = 0;
  std::int64_t cross = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Graph& g = instances[i].graph;
    BipartizeResult b = bipartize_local_search(g, heuristic_cfg(o, o.seed + i));
    bool ok = b.triangle_free && b.erdos_compliant && Rational(b.deleted) <= b.erdos_bound;
    if (g.n() <= 18) {
      ++cross;
      ExactResult e = exact_d2(g, exact_opts(o));
      ok = ok && e.value <= b.deleted && Rational(e.value) <= b.erdos_bound;
    }
    if (!ok) ++violations;
  }
  BipartizeResult c5 = bipartize_local_search(cycle(5), heuristic_cfg(o, o.seed));
  bool equality = c5.deleted == 1 && c5.erdos_bound == Rational(1);
  r.passed = violations == 0 && equality;
  r.detail = "200 instances (" + std::to_string(cross) + " cross-checked exactly), " + std::to_string(violations) +
             " violations; C5 deletes " + std::to_string(c5.deleted) + " against bound " + to_string(c5.erdos_bound);
}

inline void check_certificates(const ReproductionOptions& o, CheckResult& r) {
  Stopwatch sw;
  CertifyOptions co;
  co.workers = o.workers;
  co.keep_cells = false;
  CertifyReport rep = certify_all(co);
  double t = sw.seconds();
  std::vector<std::string> failed;
  std::size_t verified = 0;
  for (const auto& c : rep.claims) {
    if (c.verdict == Verdict::kVerified) ++verified;
    if (!c.passed()) {
      std::string at = c.worst_x ? " at " + format_decimal(*c.worst_x, 6) : "";
      std::string val = c.worst_value ? " value " + format_decimal(*c.worst_value, 6) : "";
      failed.push_back(c.id + " " + to_string(c.verdict) + at + val);
    }
  }
  for (const auto& c : rep.constants) {
    if (!c.match) failed.push_back(c.id + " computed " + c.computed_text);
  }
  r.passed = failed.empty() && t < 30.0;
  r.detail = std::to_string(verified) + "/" + std::to_string(rep.claims.size()) + " claims verified, " +
             std::to_string(rep.constants.size()) + " constants, " + fixed(t, 2) + " s (limit 30 s)";
  for (const auto& f : failed) r.detail += "; FAILED " + f;
}

inline void persist_candidate(const ReproductionOptions& o, const std::string& name, const Graph& g,
                              const CaseTrace& t) {
  if (o.artifact_dir.empty()) return;
  std::filesystem::create_directories(o.artifact_dir);
  std::ofstream(std::filesystem::path(o.artifact_dir) / (name + ".el")) << write_edge_list(g);
  std::ofstream trace(std::filesystem::path(o.artifact_dir) / (name + ".trace"));
  trace << "case " << t.case_label << "\nroute " << t.route << "\nachieved " << t.achieved << "\ntarget "
        << to_string(t.target_bound) << "\n";
  for (const auto& [k, v] : t.quantities) trace << k << " " << to_string(v) << "\n";
}

inline void check_pipelines(const ReproductionOptions& o, CheckResult& r) {
  std::int64_t incoherent = 0;
  std::int64_t over = 0;
  std::string first;
  std::set<std::string> labels;
  auto k4 = corpus::k4free_corpus(100, o.seed);
  for (std::size_t i = 0; i < k4.size(); ++i) {
    PipelineResult p = k4free_partition(k4[i].graph, heuristic_cfg(o, o.seed + i));
    labels.insert(p.trace.case_label);
    auto problems = k4free_trace_problems(k4[i].graph, p);
    if (!problems.empty()) {
      ++incoherent;
      if (first.empty()) first = "; k4free instance " + std::to_string(i) + ": " + problems.front();
    }
    if (!p.trace.compliant) {
      ++over;
      persist_candidate(o, "k4free-" + std::to_string(i), k4[i].graph, p.trace);
    }
  }
  auto joins = corpus::join_corpus(100, o.seed);
  for (std::size_t i = 0; i < joins.size(); ++i) {
    PipelineResult p = join_partition(joins[i].i_set, joins[i].graph, heuristic_cfg(o, o.seed + i));
    labels.insert(p.trace.case_label);
    auto problems = join_trace_problems(joins[i].graph, joins[i].i_set, p);
    if (!problems.empty()) {
      ++incoherent;
      if (first.empty()) first = "; join instance " + std::to_string(i) + ": " + problems.front();
    }
    if (!p.trace.compliant) {
      ++over;
      persist_candidate(o, "join-" + std::to_string(i), joins[i].graph, p.trace);
    }
  }
  r.passed = incoherent == 0;
  std::string seen;
  for (const auto& l : labels) seen += (seen.empty() ? "" : " ") + l;
  r.detail = "200 instances, " + std::to_string(incoherent) + " incoherent, " + std::to_string(over) +
             " above the bound (counterexample candidates); cases: " + seen + first;
}

inline void check_oracle_equivalence(const ReproductionOptions& o, CheckResult& r) {
  Rng rng(o.seed, 13);
  std::int64_t mismatches = 0;
  std::int64_t worsened = 0;
  for (int k = 0; k < 200; ++k) {
    auto kb = static_cast<std::size_t>(corpus::uniform(rng, 2, 8));
    Graph base = random_graph(RandomKind::kErdosRenyi, kb, {0.5}, rng.next());
    std::int64_t total = corpus::even_in(rng, static_cast<std::int64_t>(kb), 16);
    if (total < static_cast<std::int64_t>(kb)) total += 2;
    BlowupGraph bg = corpus::weighted_blowup(base, total, rng);
    BlowupOptions bo;
    bo.workers = o.workers;
    BlowupResult reduced = exact_min_max_blowup(bg, bo);
    Graph expanded = bg.expand();
    ExactResult direct = exact_min_max_balanced(expanded, exact_opts(o));
    if (reduced.value != direct.value || std::max(e_subset(expanded, reduced.witness(bg)),
                                                  e_subset(expanded, reduced.witness(bg).complement())) != direct.value) {
      ++mismatches;
    }
    BalancedPartition polished = polish(expanded, direct.witness, SwapObjective::kMax, heuristic_cfg(o, o.seed));
    if (polished.max_side() > direct.value) ++worsened;
  }
  r.passed = mismatches == 0 && worsened == 0;
  r.detail = "200 blow-ups with at most 16 vertices: " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(worsened) + " polished witnesses worse than exact";
}

/// Canonical text of every solver and pipeline output for one worker count.
inline std::string determinism_transcript(const ReproductionOptions& base, int workers) {
  ReproductionOptions o = base;
  o.workers = workers;
  std::ostringstream os;
  ExactResult e = exact_min_max_balanced(paper_h_blowup(1).expand(), exact_opts(o));
  os << "exact " << e.value << " " << e.witness.to_hex() << "\n";
  for (std::uint64_t s = 0; s < 3; ++s) {
    Graph g = random_graph(RandomKind::kErdosRenyi, 20, {0.5}, o.seed + s);
    for (auto obj : {ExactObjective::kMinMaxBalanced, ExactObjective::kMinSumBalanced, ExactObjective::kMinSum}) {
      ExactResult x = solve_exact(g, obj, exact_opts(o));
      os << "exact-" << to_string(obj) << " " << x.value << " " << x.witness.to_hex() << "\n";
    }
  }
  BlowupOptions bo;
  bo.workers = workers;
  bo.collect_all = true;
  for (std::int64_t n = 1; n <= 3; ++n) {
    BlowupResult b = exact_min_max_blowup(paper_h_blowup(n), bo);
    os << "blowup " << b.value;
    for (auto c : b.count_vector) os << " " << c;
    os << " optimal-vectors " << b.all_optimal.size() << "\n";
  }
  auto swaps = corpus::swap_corpus(10, o.seed);
  for (std::size_t i = 0; i < swaps.size(); ++i) {
    HeuristicConfig c = heuristic_cfg(o, o.seed + i);
    c.restarts = 8;
    SwapResult s = swap_local_search(swaps[i].graph, SwapObjective::kMax, c);
    BipartizeResult b = bipartize_local_search(swaps[i].graph, c);
    os << "swap " << s.achieved << " " << s.partition.side_a().to_hex() << " bipartize " << b.deleted << " "
       << b.partition.side_a.to_hex() << "\n";
  }
  auto k4 = corpus::k4free_corpus(6, o.seed);
  for (std::size_t i = 0; i < k4.size(); ++i) {
    PipelineResult p = k4free_partition(k4[i].graph, heuristic_cfg(o, o.seed + i));
    os << "k4free " << p.trace.case_label << " " << p.trace.route << " " << p.trace.achieved << " "
       << p.partition.side_a().to_hex() << "\n";
  }
  auto joins = corpus::join_corpus(8, o.seed);
  for (std::size_t i = 0; i < joins.size(); ++i) {
    PipelineResult p = join_partition(joins[i].i_set, joins[i].graph, heuristic_cfg(o, o.seed + i));
    os << "join " << p.trace.case_label << " " << p.trace.route << " " << p.trace.achieved << " "
       << p.partition.side_a().to_hex() << "\n";
  }
  CertifyOptions co;
  co.workers = workers;
  co.keep_cells = false;
  for (const auto& c : certify_all(co).claims) {
    os << "claim " << c.id << " " << to_string(c.verdict) << " "
       << (c.worst_value ? to_string(*c.worst_value) : std::string("-")) << "\n";
  }
  return os.str();
}

inline void check_determinism(const ReproductionOptions& o, CheckResult& r) {
  std::string one = determinism_transcript(o, 1);
  std::vector<int> differing;
  for (int w : {2, 8}) {
    if (determinism_transcript(o, w) != one) differing.push_back(w);
  }
  r.passed = differing.empty();
  r.detail = std::to_string(one.size()) + "-byte transcript";
  if (differing.empty()) {
    r.detail += " identical for 1, 2 and 8 workers";
  } else {
    for (int w : differing) r.detail += "; differs with " + std::to_string(w) + " workers";
  }
}

}  // namespace detail

inline CheckResult run_check(int number, const ReproductionOptions& o = {}) {
  const auto& checks = reproduction_checks();
  require(number >= 1 && number <= static_cast<int>(checks.size()), ErrorCode::kUnknownId,
          "no check numbered " + std::to_string(number));
  const CheckInfo& info = checks[static_cast<std::size_t>(number - 1)];
  CheckResult r;
  r.number = info.number;
  r.key = info.key;
  r.anchor = info.anchor;
  detail::Stopwatch sw;
  try {
    switch (number) {
      case 1: detail::check_h_value(o, r); break;
      case 2: detail::check_h_table(o, r); break;
      case 3: detail::check_blowup_value(o, r); break;
      case 4: detail::check_profile_lower_bound(o, r); break;
      case 5: detail::check_profile_minimum(o, r); break;
      case 6: detail::check_difference_table(o, r); break;
      case 7: detail::check_tripartite(o, r); break;
      case 8: detail::check_swap_bound(o, r); break;
      case 9: detail::check_proportional_subset(o, r); break;
      case 10: detail::check_bipartize(o, r); break;
      case 11: detail::check_certificates(o, r); break;
      case 12: detail::check_pipelines(o, r); break;
      case 13: detail::check_oracle_equivalence(o, r); break;
      default: detail::check_determinism(o, r); break;
    }
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = sw.seconds();
  return r;
}

inline int check_number(const std::string& key) {
  for (const auto& c : reproduction_checks()) {
    if (c.key == key || std::to_string(c.number) == key) return c.number;
  }
  fail(ErrorCode::kUnknownId, "unknown check '" + key + "'");
}

/// Runs the selected checks (all when `only` is empty) in order.
inline std::vector<CheckResult> run_reproduction(const ReproductionOptions& o = {},
                                                 const std::vector<std::string>& only = {}) {
  std::vector<int> numbers;
  if (only.empty()) {
    for (const auto& c : reproduction_checks()) numbers.push_back(c.number);
  } else {
    for (const auto& k : only) numbers.push_back(check_number(k));
  }
  std::vector<CheckResult> out;
  for (int n : numbers) out.push_back(run_check(n, o));
  return out;
}

}  // namespace judicious
