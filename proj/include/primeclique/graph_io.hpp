#pragma once

// Graph text formats, deterministic generators and clique output.
//
// DIMACS:     optional "c ..." comments, one "p edge N M" line, then M lines
//             "e u v" with 1 <= u, v <= N.
// Edge list:  one "u v" pair per line, 1-based; '#' starts a comment; the
//             vertex count is the largest id seen.
// Cliques:    one clique per line, ids ascending and space separated, lines in
//             lexicographic order of the id sequences; optionally a tab and
//             the decimal clique id. Every line ends in '\n'.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primeclique/encoding.hpp"
#include "primeclique/errors.hpp"
#include "primeclique/graph.hpp"

namespace primeclique {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_count(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("malformed token '" + std::string(tok) + "'", line);
  }
  return v;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    fn(text.substr(pos, end - pos), ++line_no);
    pos = end + 1;
  }
}

}  // namespace detail

inline Graph parse_dimacs(std::string_view text) {
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t edge_lines = 0;
  std::size_t last_line = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;

  detail::for_each_line(text, [&](std::string_view line, std::size_t no) {
    last_line = no;
    const auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (have_header) throw ParseError("duplicate p-line", no);
      if (tok.size() != 4) throw ParseError("malformed p-line", no);
      if (tok[1] != "edge") {
        throw ParseError("unsupported format '" + std::string(tok[1]) + "'", no);
      }
      n = detail::parse_count(tok[2], no);
      m = detail::parse_count(tok[3], no);
      if (n > UINT32_MAX) throw ParseError("vertex count too large", no);
      have_header = true;
      return;
    }
    if (tok[0] == "e") {
      if (!have_header) throw ParseError("missing p-line before edges", no);
      if (tok.size() != 3) throw ParseError("malformed edge line", no);
      const std::uint64_t u = detail::parse_count(tok[1], no);
      const std::uint64_t v = detail::parse_count(tok[2], no);
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError("vertex out of range", no);
      if (u == v) throw ParseError("self-loop", no);
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
      ++edge_lines;
      return;
    }
    throw ParseError("malformed line", no);
  });

  if (!have_header) throw ParseError("missing p-line", last_line);
  if (edge_lines != m) {
    throw ParseError("expected " + std::to_string(m) + " edges, found " +
                         std::to_string(edge_lines),
                     last_line);
  }
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::uint64_t n = 0;
  detail::for_each_line(text, [&](std::string_view line, std::size_t no) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = detail::split_ws(line);
    if (tok.empty()) return;
    if (tok.size() != 2) throw ParseError("expected two vertex ids", no);
    const std::uint64_t u = detail::parse_count(tok[0], no);
    const std::uint64_t v = detail::parse_count(tok[1], no);
    if (u == 0 || v == 0) throw ParseError("vertex ids are 1-based", no);
    if (u > UINT32_MAX || v > UINT32_MAX) throw ParseError("vertex out of range", no);
    if (u == v) throw ParseError("self-loop", no);
    n = std::max({n, u, v});
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  });
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline std::string write_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
  return os.str();
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

inline Graph gen_complete(std::size_t n) {
  if (n < 1) throw ContractViolation("complete requires n >= 1");
  Graph g(n);
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph gen_path(std::size_t n) {
  if (n < 1) throw ContractViolation("path requires n >= 1");
  Graph g(n);
  for (VertexId u = 1; u < n; ++u) g.add_edge(u, u + 1);
  return g;
}

inline Graph gen_cycle(std::size_t n) {
  if (n < 3) throw ContractViolation("cycle requires n >= 3");
  Graph g = gen_path(n);
  g.add_edge(static_cast<VertexId>(n), 1);
  return g;
}

// G(n, p). The generator is std::mt19937_64 seeded with `seed`, whose output
// sequence is fixed by the C++ standard. Pairs (u, v), u < v, are visited in
// lexicographic order; each consumes one 64-bit draw x and becomes an edge
// iff (x >> 11) * 2^-53 < p.
inline Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw ContractViolation("gnp requires n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ContractViolation("gnp requires 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) g.add_edge(u, v);
    }
  }
  return g;
}

// Complete k-partite graph with parts {1,2,3}, {4,5,6}, ...; it has 3^k
// maximal cliques, the most any graph on 3k vertices can have.
inline Graph gen_moon_moser(std::size_t k) {
  if (k < 1) throw ContractViolation("moon-moser requires k >= 1");
  const std::size_t n = 3 * k;
  Graph g(n);
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) {
      if ((u - 1) / 3 != (v - 1) / 3) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::string write_cliques(std::vector<VertexSet> cliques, bool with_ids,
                                 const PrimeAssignment& assignment = {}) {
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
  std::ostringstream os;
  for (const auto& c : cliques) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    if (with_ids) {
      Natural id = 1;
      for (VertexId v : c) id *= assignment.prime_of(v).value();
      os << '\t' << id;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace primeclique
