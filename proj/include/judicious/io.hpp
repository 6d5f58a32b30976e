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

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "judicious/graph.hpp"

namespace judicious {

enum class GraphFormat { kAuto, kEdgeList, kGraph6 };

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (b < e && blank(s[b])) ++b;
  while (e > b && blank(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] inline void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

inline std::int64_t parse_count(const std::string& token, std::size_t line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    parse_error(line, "expected a non-negative integer, got '" + token + "'");
  }
  try {
    return std::stoll(token);
  } catch (const std::exception&) {
    parse_error(line, "integer out of range '" + token + "'");
  }
}

}  // namespace detail

/// Edge list: first line "n m", then m lines "u v" (0-indexed). Blank lines
/// and lines starting with '#' are ignored.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<Edge> edges;
  std::vector<VertexSet> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    if (b.empty() || (fields >> extra)) detail::parse_error(line_no, "expected two integers");
    std::int64_t x = detail::parse_count(a, line_no);
    std::int64_t y = detail::parse_count(b, line_no);
    if (!have_header) {
      n = x;
      m = y;
      if (n > (std::int64_t{1} << 26)) detail::parse_error(line_no, "vertex count too large");
      have_header = true;
      seen.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
      continue;
    }
    if (x >= n || y >= n) detail::parse_error(line_no, "vertex id out of range");
    if (x == y) detail::parse_error(line_no, "self-loop");
    if (seen[static_cast<std::size_t>(x)].contains(static_cast<Vertex>(y))) detail::parse_error(line_no, "repeated edge");
    seen[static_cast<std::size_t>(x)].insert(static_cast<Vertex>(y));
    seen[static_cast<std::size_t>(y)].insert(static_cast<Vertex>(x));
    edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
  }
  if (!have_header) detail::parse_error(line_no + 1, "missing 'n m' header");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    detail::parse_error(line_no, "header announces " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// graph6 encoding (upper triangle column-wise, 6 bits per printable byte).
inline std::string write_graph6(const Graph& g) {
  std::string out;
  auto n = static_cast<std::uint64_t>(g.n());
  auto put_bits = [&](std::uint64_t value, int groups) {
    for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(((value >> (6 * k)) & 63U) + 63));
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    put_bits(n, 3);
  } else {
    out += "~~";
    put_bits(n, 6);
  }
  unsigned acc = 0;
  int used = 0;
  for (std::size_t j = 1; j < g.n(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1U : 0U);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  out.push_back('\n');
  return out;
}

inline Graph parse_graph6(std::string_view text, std::size_t line_no = 1) {
  std::string s = detail::trim(text);
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  for (char ch : s) {
    if (ch < 63 || ch > 126) detail::parse_error(line_no, "invalid graph6 character");
  }
  if (s.empty()) detail::parse_error(line_no, "empty graph6 string");
  std::size_t pos = 0;
  auto take = [&](int groups) {
    std::uint64_t v = 0;
    for (int k = 0; k < groups; ++k) {
      if (pos >= s.size()) detail::parse_error(line_no, "truncated graph6 size field");
      v = (v << 6) | static_cast<std::uint64_t>(s[pos++] - 63);
    }
    return v;
  };
  std::uint64_t n = 0;
  if (s[0] != '~') {
    n = take(1);
  } else if (s.size() > 1 && s[1] != '~') {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > (std::uint64_t{1} << 26)) detail::parse_error(line_no, "vertex count too large");
  std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::uint64_t need = (bits + 5) / 6;
  if (s.size() - pos != need) {
    detail::parse_error(line_no, "graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                                     std::to_string(need));
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      unsigned byte = static_cast<unsigned>(s[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1U) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

inline GraphFormat detect_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    return line.find_first_of(" \t") == std::string::npos ? GraphFormat::kGraph6 : GraphFormat::kEdgeList;
  }
  return GraphFormat::kEdgeList;
}

inline Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto) {
  if (format == GraphFormat::kAuto) format = detect_format(text);
  if (format == GraphFormat::kEdgeList) return parse_edge_list(text);
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    return parse_graph6(line, line_no);
  }
  detail::parse_error(line_no + 1, "no graph6 line");
}

inline Graph read_graph_file(const std::string& path, GraphFormat format = GraphFormat::kAuto) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), format);
}

inline std::string write_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? write_graph6(g) : write_edge_list(g);
}

/// 64-bit FNV-1a of the graph6 encoding; a stable input fingerprint.
inline std::string graph_fingerprint(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char ch : write_graph6(g)) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kDigits[h & 15U];
  return out;
}

}  // namespace judicious
