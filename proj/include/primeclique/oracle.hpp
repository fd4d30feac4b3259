#pragma once

// Reference maximal-clique enumeration on plain adjacency, independent of the
// prime encoding. Used to check the solver.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "primeclique/errors.hpp"
#include "primeclique/graph.hpp"

namespace primeclique {

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

inline bool is_maximal(const Graph& g, const VertexSet& s) {
  if (!is_clique(g, s)) throw ContractViolation("is_maximal: vertex set is not a clique");
  for (VertexId v = 1; v <= g.order(); ++v) {
    if (std::binary_search(s.begin(), s.end(), v)) continue;
    if (std::all_of(s.begin(), s.end(), [&](VertexId u) { return g.has_edge(u, v); })) {
      return false;
    }
  }
  return true;
}

namespace detail {

// Tomita-style pivoting: branch only on candidates not adjacent to the pivot,
// where the pivot maximizes |candidates ∩ N(pivot)|.
inline void bron_kerbosch_pivot(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                                std::vector<VertexSet>& out) {
  if (p.empty()) {
    if (x.empty()) out.push_back(r);
    return;
  }
  auto common = [&](VertexId u, const VertexSet& s) {
    const auto& nu = g.neighbors(u);
    std::size_t c = 0;
    auto a = nu.begin();
    auto b = s.begin();
    while (a != nu.end() && b != s.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++c;
        ++a;
        ++b;
      }
    }
    return c;
  };
  VertexId pivot = p.front();
  std::size_t best = 0;
  for (const VertexSet* s : {&p, &x}) {
    for (VertexId u : *s) {
      const std::size_t c = common(u, p);
      if (c > best || (c == best && u < pivot)) {
        best = c;
        pivot = u;
      }
    }
  }
  VertexSet branch;
  std::set_difference(p.begin(), p.end(), g.neighbors(pivot).begin(),
                      g.neighbors(pivot).end(), std::back_inserter(branch));
  for (VertexId v : branch) {
    const auto& nv = g.neighbors(v);
    VertexSet p_next;
    VertexSet x_next;
    std::set_intersection(p.begin(), p.end(), nv.begin(), nv.end(),
                          std::back_inserter(p_next));
    std::set_intersection(x.begin(), x.end(), nv.begin(), nv.end(),
                          std::back_inserter(x_next));
    r.insert(std::upper_bound(r.begin(), r.end(), v), v);
    bron_kerbosch_pivot(g, r, std::move(p_next), std::move(x_next), out);
    r.erase(std::lower_bound(r.begin(), r.end(), v));
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::upper_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace detail

// All maximal cliques, each sorted, the list sorted lexicographically.
inline std::vector<VertexSet> bron_kerbosch(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet r;
  VertexSet p(g.order());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<VertexId>(i + 1);
  if (!p.empty()) detail::bron_kerbosch_pivot(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

struct DiffReport {
  std::vector<VertexSet> missing;  // oracle only
  std::vector<VertexSet> extra;    // solver only
  std::size_t matched = 0;

  bool agrees() const noexcept { return missing.empty() && extra.empty(); }
};

// Set difference in both directions; duplicates in either input are ignored.
inline DiffReport diff(std::vector<VertexSet> solver_out, std::vector<VertexSet> oracle_out) {
  auto normalize = [](std::vector<VertexSet>& v) {
    for (auto& s : v) std::sort(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  normalize(solver_out);
  normalize(oracle_out);
  DiffReport report;
  std::set_difference(oracle_out.begin(), oracle_out.end(), solver_out.begin(),
                      solver_out.end(), std::back_inserter(report.missing));
  std::set_difference(solver_out.begin(), solver_out.end(), oracle_out.begin(),
                      oracle_out.end(), std::back_inserter(report.extra));
  report.matched = oracle_out.size() - report.missing.size();
  return report;
}

}  // namespace primeclique
