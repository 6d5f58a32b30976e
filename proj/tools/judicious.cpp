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


#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "judicious/judicious.hpp"

namespace {

using nlohmann::json;
using namespace judicious;

constexpr const char* kSchemaVersion = "1.0";

// Exit statuses.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDERR_FILENO) != 0; }

void diagnostic(const std::string& message) {
  if (use_color()) {
    std::cerr << "\033[31merror:\033[0m " << message << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
}

struct Globals {
  std::uint64_t seed = 0;
  int workers = 1;
  std::string out;
  std::vector<std::string> argv;
};

struct FamilyArgs {
  std::string name;
  std::int64_t n = 1;
  double p = 0.5;
  std::vector<std::size_t> sizes;
  std::int64_t mult = 1;
  std::string base = "cycle";
  std::int64_t i_size = 0;
};

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "paper-h", "paper-h-blowup", "independent", "cycle", "path", "complete", "star", "petersen", "icosahedron",
      "complete-multipartite", "blowup", "join", "erdos-renyi", "random-tripartite", "random-k4free",
      "random-triangle-free"};
  return names;
}

Graph build_family(const FamilyArgs& f, std::uint64_t seed, int depth = 0) {
  auto n = static_cast<std::size_t>(f.n);
  require(f.n >= 0, ErrorCode::kDomain, "--n must be non-negative");
  if (f.name == "paper-h") return paper_h();
  if (f.name == "paper-h-blowup") return paper_h_blowup(f.n).expand();
  if (f.name == "independent") return independent_set(n);
  if (f.name == "cycle") return cycle(n);
  if (f.name == "path") return path(n);
  if (f.name == "complete") return complete(n);
  if (f.name == "star") return star(n);
  if (f.name == "petersen") return petersen();
  if (f.name == "icosahedron") return icosahedron();
  if (f.name == "complete-multipartite") return complete_multipartite(f.sizes);
  if (f.name == "blowup" || f.name == "join") {
    require(depth == 0, ErrorCode::kDomain, "--base cannot itself be blowup or join");
    FamilyArgs b = f;
    b.name = f.base;
    Graph base = build_family(b, seed, depth + 1);
    if (f.name == "blowup") return blowup(base, f.mult).expand();
    return join(independent_set(static_cast<std::size_t>(f.i_size)), base);
  }
  if (f.name == "erdos-renyi") return random_graph(RandomKind::kErdosRenyi, n, {f.p}, seed);
  if (f.name == "random-tripartite") return random_graph(RandomKind::kTripartite, n, {f.p}, seed);
  if (f.name == "random-k4free") return random_graph(RandomKind::kK4Free, n, {f.p}, seed);
  if (f.name == "random-triangle-free") return random_graph(RandomKind::kTriangleFree, n, {f.p}, seed);
  fail(ErrorCode::kUnknownId, "unknown family '" + f.name + "'");
}

void add_family_options(CLI::App* cmd, FamilyArgs& f, const std::string& family_flag, bool nested = true) {
  cmd->add_option(family_flag, f.name, "Graph family")->required()->check(CLI::IsMember(family_names()));
  cmd->add_option("--n", f.n, "Size parameter (vertices, cycle length, or blow-up n)");
  cmd->add_option("--p", f.p, "Edge probability for random families");
  cmd->add_option("--classes", f.sizes, "Class sizes for complete-multipartite")->delimiter(',');
  if (!nested) return;
  cmd->add_option("--mult", f.mult, "Blow-up multiplicity");
  cmd->add_option("--base", f.base, "Base family for blowup and join");
  cmd->add_option("--i-size", f.i_size, "Independent block size for join");
}

json rational_json(const Rational& r) { return {{"exact", to_string(r)}, {"value", to_double(r)}}; }

json side_json(const VertexSet& s) { return s.members(); }

json balanced_json(const BalancedPartition& p) {
  return {{"side_a", side_json(p.side_a())},
          {"e_a", p.e_a()},
          {"e_ac", p.e_ac()},
          {"max", p.max_side()},
          {"sum", p.sum_sides()}};
}

json trace_json(const CaseTrace& t) {
  json q = json::object();
  for (const auto& [k, v] : t.quantities) q[k] = rational_json(v);
  return {{"case_label", t.case_label}, {"route", t.route},       {"fallback", t.fallback},
          {"note", t.note},             {"quantities", q},        {"achieved", t.achieved},
          {"target_bound", rational_json(t.target_bound)},        {"compliant", t.compliant}};
}

class Reporter {
 public:
  Reporter(const Globals& g, std::string command) : g_(g), command_(std::move(command)) {}

  int emit(const json& results, const std::optional<std::string>& fingerprint) const {
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    json report{{"schema_version", kSchemaVersion},
                {"command", {{"name", command_}, {"argv", g_.argv}}},
                {"fingerprint", fingerprint ? json(*fingerprint) : json(nullptr)},
                {"results", results},
                {"timings", {{"total_ms", ms}}}};
    write(report.dump(2) + "\n");
    return kOk;
  }

  void write(const std::string& text) const {
    if (g_.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(g_.out, std::ios::binary);
    require(static_cast<bool>(f), ErrorCode::kParse, "cannot write '" + g_.out + "'");
    f << text;
  }

 private:
  const Globals& g_;
  std::string command_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

GraphFormat format_from(const std::string& s) {
  if (s == "g6" || s == "graph6") return GraphFormat::kGraph6;
  if (s == "el" || s == "edgelist") return GraphFormat::kEdgeList;
  return GraphFormat::kAuto;
}

HeuristicConfig heuristic_config(const Globals& g, int restarts, std::int64_t max_swaps, std::size_t fallback_cap) {
  HeuristicConfig c;
  c.seed = g.seed;
  c.workers = g.workers;
  c.restarts = restarts;
  c.max_swaps = max_swaps;
  c.exact_fallback_cap = fallback_cap;
  return c;
}

// --- construct -------------------------------------------------------------

struct ConstructArgs {
  FamilyArgs family;
  std::string format = "el";
};

int run_construct(const Globals& g, const ConstructArgs& a) {
  Graph graph = build_family(a.family, g.seed);
  Reporter(g, "construct").write(write_graph(graph, format_from(a.format)));
  return kOk;
}

// --- solve-exact -----------------------------------------------------------

struct SolveExactArgs {
  std::string path;
  std::string format = "auto";
  std::string objective = "minmax";
  std::string method = "bnb";
  std::size_t cap = 0;
};

int run_solve_exact(const Globals& g, const SolveExactArgs& a) {
  Reporter rep(g, "solve-exact");
  Graph graph = read_graph_file(a.path, format_from(a.format));
  ExactObjective obj = a.objective == "minmax" ? ExactObjective::kMinMaxBalanced
                       : a.objective == "sum"  ? ExactObjective::kMinSumBalanced
                                               : ExactObjective::kMinSum;
  ExactOptions o;
  o.method = a.method == "enumerate" ? ExactMethod::kEnumerate : ExactMethod::kBranchAndBound;
  o.cap = a.cap;
  o.workers = g.workers;
  ExactResult r = solve_exact(graph, obj, o);
  json results{{"objective", to_string(r.objective)},
               {"method", a.method},
               {"n", graph.n()},
               {"m", graph.m()},
               {"value", r.value},
               {"witness", side_json(r.witness)},
               {"e_a", r.e_a},
               {"e_ac", r.e_ac},
               {"nodes_explored", r.nodes_explored},
               {"proven_optimal", r.proven_optimal}};
  return rep.emit(results, graph_fingerprint(graph));
}

// --- solve-blowup ----------------------------------------------------------

struct SolveBlowupArgs {
  FamilyArgs base;
  std::string base_file;
  std::int64_t mult = 1;
  bool all_optimal = false;
};

int run_solve_blowup(const Globals& g, SolveBlowupArgs a) {
  Reporter rep(g, "solve-blowup");
  require(!a.base.name.empty() || !a.base_file.empty(), ErrorCode::kDomain, "solve-blowup needs --base or --base-file");
  Graph base = a.base_file.empty() ? build_family(a.base, g.seed) : read_graph_file(a.base_file);
  BlowupGraph bg = blowup(base, a.mult);
  BlowupOptions o;
  o.workers = g.workers;
  o.collect_all = a.all_optimal;
  BlowupResult r = exact_min_max_blowup(bg, o);
  json results{{"base_n", base.n()},
               {"mult", a.mult},
               {"n", bg.total()},
               {"m", bg.expanded_edges()},
               {"value", r.value},
               {"e_a", r.e_a},
               {"e_ac", r.e_ac},
               {"count_vector", r.count_vector},
               {"aggregated_classes", r.aggregated_classes},
               {"aggregated_multiplicities", r.aggregated_multiplicities},
               {"aggregated_counts", r.aggregated_counts},
               {"nodes_explored", r.nodes_explored},
               {"proven_optimal", r.proven_optimal}};
  if (a.all_optimal) results["all_optimal"] = r.all_optimal;
  return rep.emit(results, graph_fingerprint(base));
}

// --- heuristic -------------------------------------------------------------

struct HeuristicArgs {
  std::string path;
  std::string pipeline = "xu";
  std::string preset;
  std::string objective = "max";
  int restarts = 4;
  std::int64_t max_swaps = 0;
  std::size_t fallback_cap = 0;
  std::int64_t i_size = -1;
  std::vector<std::size_t> parts;
};

/// Longest prefix 0..k-1 that is independent and joined to every later vertex.
VertexSet join_prefix(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < g.n(); ++k) {
    VertexSet prefix = VertexSet::from_range(g.n(), 0, static_cast<Vertex>(k));
    VertexSet rest = prefix.complement();
    bool ok = is_independent(g, prefix);
    prefix.for_each([&](Vertex v) { ok = ok && rest.is_subset_of(g.row(v)); });
    if (ok && induces_triangle_free(g, rest)) best = k;
  }
  return VertexSet::from_range(g.n(), 0, static_cast<Vertex>(best));
}

int run_heuristic(const Globals& g, const HeuristicArgs& a) {
  Reporter rep(g, "heuristic");
  Graph graph = read_graph_file(a.path);
  HeuristicConfig cfg = heuristic_config(g, a.restarts, a.max_swaps, a.fallback_cap);
  json results{{"pipeline", a.pipeline}, {"n", graph.n()}, {"m", graph.m()}, {"seed", g.seed}};
  if (a.pipeline == "xu") {
    if (!a.preset.empty()) {
      auto preset = preset_by_name(a.preset);
      require(preset.has_value(), ErrorCode::kUnknownId, "unknown preset '" + a.preset + "'");
      Cor36Result r = corollary36_partition(graph, *preset, cfg);
      results["preset"] = preset->name;
      results["partition"] = balanced_json(r.partition);
      results["edge_condition"] = r.edge_condition;
      results["size_condition"] = r.size_condition;
      results["applicable"] = r.applicable;
      results["bound"] = rational_json(r.bound);
      results["below_bound"] = r.below_bound;
    } else {
      SwapObjective obj = a.objective == "sum" ? SwapObjective::kSum : SwapObjective::kMax;
      SwapResult r = swap_local_search(graph, obj, cfg);
      results["objective"] = a.objective;
      results["partition"] = balanced_json(r.partition);
      results["achieved"] = r.achieved;
      results["bound"] = rational_json(r.bound);
      results["compliant"] = r.compliant;
      results["best_restart"] = r.best_restart;
    }
  } else if (a.pipeline == "k4free") {
    PipelineResult r = k4free_partition(graph, cfg);
    results["partition"] = balanced_json(r.partition);
    results["trace"] = trace_json(r.trace);
  } else if (a.pipeline == "join") {
    VertexSet i_set = a.i_size >= 0 ? VertexSet::from_range(graph.n(), 0, static_cast<Vertex>(a.i_size)) : join_prefix(graph);
    PipelineResult r = join_partition(i_set, graph, cfg);
    results["i_size"] = i_set.size();
    results["partition"] = balanced_json(r.partition);
    results["trace"] = trace_json(r.trace);
  } else if (a.pipeline == "bipartize") {
    BipartizeResult r = bipartize_local_search(graph, cfg);
    results["side_a"] = side_json(r.partition.side_a);
    results["deleted"] = r.deleted;
    results["triangle_free"] = r.triangle_free;
    results["erdos_bound"] = rational_json(r.erdos_bound);
    results["erdos_compliant"] = r.erdos_compliant;
    results["dense_applicable"] = r.dense_applicable;
    results["dense_bound"] = rational_json(r.dense_bound);
    results["dense_compliant"] = r.dense_compliant;
  } else {
    std::array<VertexSet, 3> parts = tripartite_blocks(graph.n());
    if (!a.parts.empty()) {
      require(a.parts.size() == 3, ErrorCode::kDomain, "--parts needs three sizes");
      std::size_t start = 0;
      for (std::size_t k = 0; k < 3; ++k) {
        require(start + a.parts[k] <= graph.n(), ErrorCode::kDomain, "--parts sizes exceed n");
        parts[k] = VertexSet::from_range(graph.n(), static_cast<Vertex>(start), static_cast<Vertex>(start + a.parts[k]));
        start += a.parts[k];
      }
    }
    TripartiteResult r = tripartite_partition(graph, parts, cfg);
    results["partition"] = balanced_json(r.partition);
    results["bound"] = rational_json(r.bound);
    results["compliant"] = r.compliant;
  }
  return rep.emit(results, graph_fingerprint(graph));
}

// --- certify ---------------------------------------------------------------

struct CertifyArgs {
  bool all = false;
  std::vector<std::string> claims;
  bool cells = false;
  std::string initial_width = "0.001";
  std::string min_width = "0.000001";
};

json claim_json(const ClaimResult& c, bool cells) {
  json j{{"id", c.id},
         {"statement", c.statement},
         {"method", to_string(c.kind)},
         {"relation", to_string(c.relation)},
         {"bound", to_string(c.bound)},
         {"domain", {to_string(c.x_lo), to_string(c.x_hi)}},
         {"verdict", to_string(c.verdict)},
         {"expected", c.expected_verified ? "verified" : "refuted"},
         {"control", c.control},
         {"passed", c.passed()},
         {"worst_point", c.worst_x ? json(to_string(*c.worst_x)) : json(nullptr)},
         {"worst_value", c.worst_value ? rational_json(*c.worst_value) : json(nullptr)},
         {"evaluations", c.evaluations},
         {"cell_count", c.cells.size()},
         {"detail", c.detail}};
  if (c.y_domain) j["y_domain"] = {to_string(c.y_domain->first), to_string(c.y_domain->second)};
  if (c.worst_y) j["worst_point_y"] = to_string(*c.worst_y);
  if (cells) {
    json list = json::array();
    for (const auto& cell : c.cells) {
      json cj{{"x", {to_string(cell.x_lo), to_string(cell.x_hi)}},
              {"enclosure", {to_string(cell.enclosure.lo()), to_string(cell.enclosure.hi())}}};
      if (c.y_domain) cj["y"] = {to_string(cell.y_lo), to_string(cell.y_hi)};
      list.push_back(cj);
    }
    j["cells"] = list;
  }
  return j;
}

json constant_json(const ConstantResult& c) {
  return {{"id", c.id},
          {"expression", c.expression},
          {"printed", c.printed},
          {"check", to_string(c.check)},
          {"computed", c.computed_text},
          {"match", c.match}};
}

int run_certify(const Globals& g, const CertifyArgs& a) {
  Reporter rep(g, "certify");
  CertifyOptions o;
  o.workers = g.workers;
  o.keep_cells = a.cells;
  o.initial_width = dec(a.initial_width);
  o.min_width = dec(a.min_width);
  require(o.initial_width > 0 && o.min_width > 0, ErrorCode::kDomain, "widths must be positive");
  json claims = json::array();
  json constants = json::array();
  bool ok = true;
  if (a.all) {
    CertifyReport r = certify_all(o);
    for (const auto& c : r.claims) claims.push_back(claim_json(c, a.cells));
    for (const auto& c : r.constants) constants.push_back(constant_json(c));
    ok = r.all_passed();
  } else {
    for (const auto& id : a.claims) {
      ClaimResult c = verify_claim(id, o);
      ok = ok && c.passed();
      claims.push_back(claim_json(c, a.cells));
    }
  }
  std::size_t passed = 0;
  for (const auto& c : claims) passed += c["passed"].get<bool>() ? 1 : 0;
  json results{{"claims", claims}, {"constants", constants}, {"passed", passed}, {"total", claims.size()}, {"all_passed", ok}};
  rep.emit(results, std::nullopt);
  return ok ? kOk : kCheckFailed;
}

// --- verify-paper ----------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> only;
  bool json_out = false;
  std::string artifacts;
};

int run_verify(const Globals& g, const VerifyArgs& a) {
  Reporter rep(g, "verify-paper");
  ReproductionOptions o;
  o.workers = g.workers;
  o.seed = g.seed;
  o.artifact_dir = a.artifacts;
  std::vector<CheckResult> results = run_reproduction(o, a.only);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (a.json_out) {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"number", r.number},
                      {"key", r.key},
                      {"anchor", r.anchor},
                      {"passed", r.passed},
                      {"detail", r.detail},
                      {"seconds", r.seconds}});
    }
    rep.emit({{"checks", rows}, {"all_passed", ok}}, std::nullopt);
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      os << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.number << "  " << std::left << std::setw(20) << r.key
         << std::right << "  " << r.anchor << "\n        " << r.detail << " [" << detail::fixed(r.seconds) << " s]\n";
    }
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    os << passed << "/" << results.size() << " checks passed\n";
    rep.write(os.str());
  }
  return ok ? kOk : kCheckFailed;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  FamilyArgs family;
  std::string operation = "exact";
  std::vector<std::int64_t> sizes;
  bool csv = false;
};

int run_bench(const Globals& g, BenchArgs a) {
  Reporter rep(g, "bench");
  require(!a.sizes.empty(), ErrorCode::kDomain, "--sizes must list at least one size");
  json rows = json::array();
  std::ostringstream csv;
  csv << "n,operation,wall_ms,nodes,value\n";
  for (std::int64_t size : a.sizes) {
    FamilyArgs f = a.family;
    std::uint64_t nodes = 0;
    std::int64_t value = 0;
    std::size_t n = 0;
    auto start = std::chrono::steady_clock::now();
    if (a.operation == "blowup") {
      BlowupOptions o;
      o.workers = g.workers;
      Graph base = build_family(f, g.seed);
      BlowupGraph bg = blowup(base, size);
      start = std::chrono::steady_clock::now();
      BlowupResult r = exact_min_max_blowup(bg, o);
      nodes = r.nodes_explored;
      value = r.value;
      n = static_cast<std::size_t>(bg.total());
    } else {
      f.n = size;
      Graph graph = build_family(f, g.seed);
      n = graph.n();
      HeuristicConfig cfg = heuristic_config(g, 4, 0, 0);
      start = std::chrono::steady_clock::now();
      if (a.operation == "exact") {
        ExactOptions o;
        o.workers = g.workers;
        ExactResult r = exact_min_max_balanced(graph, o);
        nodes = r.nodes_explored;
        value = r.value;
      } else if (a.operation == "swap") {
        value = swap_local_search(graph, SwapObjective::kMax, cfg).achieved;
      } else if (a.operation == "k4free") {
        PipelineResult r = k4free_partition(graph, cfg);
        require(r.trace.compliant, ErrorCode::kContractViolation, "non-compliant trace at n = " + std::to_string(n));
        value = r.trace.achieved;
      } else {
        value = bipartize_local_search(graph, cfg).deleted;
      }
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rows.push_back({{"n", n}, {"operation", a.operation}, {"wall_ms", ms}, {"nodes", nodes}, {"value", value}});
    csv << n << "," << a.operation << "," << detail::fixed(ms, 3) << "," << nodes << "," << value << "\n";
  }
  if (a.csv) {
    rep.write(csv.str());
    return kOk;
  }
  return rep.emit({{"family", a.family.name}, {"rows", rows}}, std::nullopt);
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  g.argv.assign(argv, argv + argc);
  CLI::App app{"Balanced judicious partitions: exact solvers, heuristics and certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", g.seed, "Seed for all randomness")->capture_default_str();
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  app.add_option("--out", g.out, "Write the report here instead of stdout");

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "Emit a graph family as an edge list or graph6");
  add_family_options(c_construct, construct.family, "--family");
  c_construct->add_option("--format", construct.format, "el or g6")->check(CLI::IsMember({"el", "g6"}));

  SolveExactArgs exact;
  auto* c_exact = app.add_subcommand("solve-exact", "Exact balanced or unbalanced optimum of a graph file");
  c_exact->add_option("graph", exact.path, "Edge-list or graph6 file")->required();
  c_exact->add_option("--format", exact.format)->check(CLI::IsMember({"auto", "el", "g6"}));
  c_exact->add_option("--objective", exact.objective)->check(CLI::IsMember({"minmax", "sum", "d2"}));
  c_exact->add_option("--method", exact.method)->check(CLI::IsMember({"bnb", "enumerate"}));
  c_exact->add_option("--cap", exact.cap, "Vertex cap (0 = default for the method)");

  SolveBlowupArgs sblow;
  auto* c_blow = app.add_subcommand("solve-blowup", "Exact minmax of a uniform blow-up via count vectors");
  auto* base_opt = c_blow->add_option("--base-file", sblow.base_file, "Read the base graph from a file");
  add_family_options(c_blow, sblow.base, "--base", false);
  c_blow->get_option("--base")->required(false)->excludes(base_opt);
  c_blow->add_option("--mult", sblow.mult, "Blow-up multiplicity")->required();
  c_blow->add_flag("--all-optimal", sblow.all_optimal, "List every optimal aggregated count vector");

  HeuristicArgs heur;
  auto* c_heur = app.add_subcommand("heuristic", "Run a partition heuristic or pipeline on a graph file");
  c_heur->add_option("graph", heur.path)->required();
  c_heur->add_option("--pipeline", heur.pipeline)->check(CLI::IsMember({"xu", "k4free", "join", "bipartize", "tripartite"}));
  c_heur->add_option("--preset", heur.preset)->check(CLI::IsMember({"k4free-0.074", "join-5-72"}));
  c_heur->add_option("--objective", heur.objective)->check(CLI::IsMember({"max", "sum"}));
  c_heur->add_option("--restarts", heur.restarts)->check(CLI::PositiveNumber);
  c_heur->add_option("--max-swaps", heur.max_swaps, "Per-run swap budget (0 = unlimited)");
  c_heur->add_option("--exact-fallback-cap", heur.fallback_cap);
  c_heur->add_option("--i-size", heur.i_size, "Independent prefix size for join (default: detect)");
  c_heur->add_option("--parts", heur.parts, "Three contiguous part sizes for tripartite")->delimiter(',');

  CertifyArgs cert;
  auto* c_cert = app.add_subcommand("certify", "Verify the interval certificate catalog");
  auto* all_flag = c_cert->add_flag("--all", cert.all, "Every claim and constant");
  auto* claim_opt = c_cert->add_option("--claim", cert.claims, "Claim id (repeatable)");
  all_flag->excludes(claim_opt);
  c_cert->add_flag("--cells", cert.cells, "Include every certified cell");
  c_cert->add_option("--initial-width", cert.initial_width);
  c_cert->add_option("--min-width", cert.min_width);

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify-paper", "Run the reproduction checks");
  c_verify->add_option("--only", verify.only, "Check key or number (repeatable, comma separated)")->delimiter(',');
  c_verify->add_flag("--json", verify.json_out, "Emit a JSON report instead of the table");
  c_verify->add_option("--artifacts", verify.artifacts, "Directory for counterexample candidates");

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Time an operation across sizes");
  add_family_options(c_bench, bench.family, "--family");
  c_bench->add_option("--operation", bench.operation)->check(CLI::IsMember({"exact", "blowup", "swap", "k4free", "bipartize"}));
  c_bench->add_option("--sizes", bench.sizes, "Sizes (--n, or the multiplicity for blowup)")->delimiter(',')->required();
  c_bench->add_flag("--csv", bench.csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c_construct) return run_construct(g, construct);
    if (*c_exact) return run_solve_exact(g, exact);
    if (*c_blow) return run_solve_blowup(g, sblow);
    if (*c_heur) return run_heuristic(g, heur);
    if (*c_cert) {
      if (!cert.all && cert.claims.empty()) {
        diagnostic("certify needs --all or --claim");
        return kUsage;
      }
      return run_certify(g, cert);
    }
    if (*c_verify) return run_verify(g, verify);
    return run_bench(g, bench);
  } catch (const judicious::Error& e) {
    diagnostic(e.what());
    return kUsage;
  }
}
