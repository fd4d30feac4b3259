#pragma once

// Prime-encoded maximal clique enumeration.
//
// Each step sorts the tuple list by weight and coalesces tuples of equal
// weight (identical closed neighborhoods) into one tuple. It then splits on
// the first tuple, the pivot p:
//   - u not adjacent to p (v_p does not divide w_u): u goes to the right side.
//   - u adjacent to p, N[u] ⊆ N[p] (Case 1): u goes to the left side with
//     w_u / v_p and is recorded in the pivot list. Every clique of u contains p.
//   - u adjacent to p otherwise (Case 2): a copy restricted to N[p] goes left,
//     a copy with p removed goes right.
// Case 1 primes are then divided out of every right-side weight. The left side
// is the subgraph induced by N(p); its cliques get v_p multiplied in. The right
// side is the graph with p and the Case 1 vertices removed.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "primeclique/encoding.hpp"
#include "primeclique/errors.hpp"
#include "primeclique/prime_core.hpp"

namespace primeclique {

using TupleList = std::vector<WeightedVertex>;

// Product of the primes of a clique's vertices.
using CliqueId = SquarefreeProduct;
using CliqueSet = std::vector<CliqueId>;

enum class PivotOrder { descending, ascending };

struct SolverConfig {
  PivotOrder pivot_order = PivotOrder::descending;
  // Drop duplicate and non-maximal ids from the raw output.
  bool sanitize = true;
  bool collect_stats = true;
};

struct SolverStats {
  std::uint64_t recursive_calls = 0;
  std::uint64_t merges = 0;
  std::uint64_t pivot_splits = 0;
  std::uint64_t case1_count = 0;
  std::uint64_t case2_count = 0;
  std::uint64_t gcd_calls = 0;
  std::uint64_t max_weight_bits = 0;

  SolverStats& operator+=(const SolverStats& o) {
    recursive_calls += o.recursive_calls;
    merges += o.merges;
    pivot_splits += o.pivot_splits;
    case1_count += o.case1_count;
    case2_count += o.case2_count;
    gcd_calls += o.gcd_calls;
    max_weight_bits = std::max(max_weight_bits, o.max_weight_bits);
    return *this;
  }

  friend bool operator==(const SolverStats&, const SolverStats&) = default;
};

// Stable, so equal weights keep their relative order.
inline TupleList sort_by_weight(TupleList q, PivotOrder order = PivotOrder::descending) {
  if (order == PivotOrder::descending) {
    std::stable_sort(q.begin(), q.end(),
                     [](const auto& a, const auto& b) { return a.weight > b.weight; });
  } else {
    std::stable_sort(q.begin(), q.end(),
                     [](const auto& a, const auto& b) { return a.weight < b.weight; });
  }
  return q;
}

// Requires equal weights to be adjacent. Each run collapses into one tuple
// whose value is the product of the run's values.
inline TupleList merge_equal_weights(TupleList q, SolverStats* stats = nullptr) {
  TupleList out;
  out.reserve(q.size());
  for (auto& t : q) {
    if (!out.empty() && out.back().weight == t.weight) {
      out.back().value = SquarefreeProduct(out.back().value.value() * t.value.value());
      if (stats) ++stats->merges;
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

struct PivotSplit {
  TupleList left;
  TupleList right;
  // Case 1 tuples, as inserted into `left`.
  TupleList pivot_q;
};

// q.front() is the pivot; q must be sorted and merged.
inline PivotSplit partition_by_pivot(std::span<const WeightedVertex> q,
                                     SolverStats* stats = nullptr) {
  if (q.empty()) throw ContractViolation("partition_by_pivot: empty tuple list");
  const WeightedVertex& p = q.front();
  PivotSplit split;
  for (const auto& u : q.subspan(1)) {
    if (!divides(p.value, u.weight)) {
      split.right.push_back(u);
      continue;
    }
    SquarefreeProduct reduced = exact_divide(u.weight, p.value);
    if (divides(reduced, p.weight)) {
      WeightedVertex t{u.value, std::move(reduced)};
      split.left.push_back(t);
      split.pivot_q.push_back(std::move(t));
      if (stats) ++stats->case1_count;
    } else {
      SquarefreeProduct restricted = gcd(p.weight, reduced);
      assert(restricted == exact_divide(gcd(u.weight, p.weight), p.value));
      split.left.push_back({u.value, std::move(restricted)});
      split.right.push_back({u.value, std::move(reduced)});
      if (stats) {
        ++stats->case2_count;
        ++stats->gcd_calls;
      }
    }
  }
  if (stats) ++stats->pivot_splits;
  return split;
}

// Divides every Case 1 value out of the right-side weights that contain it.
inline TupleList eliminate_case1_from_right(TupleList right,
                                            std::span<const WeightedVertex> pivot_q) {
  for (auto& r : right) {
    Natural w = r.weight.value();
    for (const auto& c : pivot_q) {
      if (w % c.value.value() == 0) w /= c.value.value();
    }
    r.weight = SquarefreeProduct(std::move(w));
  }
  return right;
}

// The literal recursion, without post-filtering. Output may contain ids that
// are not maximal in the input graph.
//
// Runs on an explicit stack: each pending list carries the product of the
// pivots above it, which is multiplied into every clique found below.
// Left sides are explored before right sides, so the output order matches the
// plain recursive formulation.
inline CliqueSet find_cliques_raw(TupleList q, PivotOrder order,
                                  SolverStats* stats = nullptr) {
  struct Pending {
    TupleList q;
    Natural multiplier;
  };
  CliqueSet out;
  std::vector<Pending> stack;
  if (!q.empty()) stack.push_back({std::move(q), Natural(1)});

  while (!stack.empty()) {
    Pending item = std::move(stack.back());
    stack.pop_back();

    TupleList list = merge_equal_weights(sort_by_weight(std::move(item.q), order), stats);
    if (stats) {
      ++stats->recursive_calls;
      for (const auto& t : list) {
        stats->max_weight_bits =
            std::max<std::uint64_t>(stats->max_weight_bits, t.weight.bit_length());
      }
    }
    if (list.size() == 1) {
      out.emplace_back(item.multiplier * list.front().value.value());
      continue;
    }

    PivotSplit split = partition_by_pivot(list, stats);
    TupleList right = eliminate_case1_from_right(std::move(split.right), split.pivot_q);
    const Natural& pivot_value = list.front().value.value();

    if (!right.empty()) stack.push_back({std::move(right), item.multiplier});
    if (split.left.empty()) {
      // Pivot isolated in this subgraph: it is a clique on its own.
      out.emplace_back(item.multiplier * pivot_value);
    } else {
      stack.push_back({std::move(split.left), item.multiplier * pivot_value});
    }
  }
  return out;
}

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline Bits to_bits(const VertexSet& s, std::size_t n) {
  Bits b((n + 63) / 64, 0);
  for (VertexId v : s) b[(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
  return b;
}

inline bool is_subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

}  // namespace detail

// Checks every id is a clique of eg (IntegrityError otherwise), removes
// duplicates and ids whose vertex set is a strict subset of another's.
// Result is sorted ascending by id.
inline CliqueSet sanitize(const CliqueSet& raw, const EncodedGraph& eg) {
  CliqueSet ids = raw;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::vector<detail::Bits> bits;
  std::vector<std::size_t> sizes;
  bits.reserve(ids.size());
  for (const auto& id : ids) {
    VertexSet s = decode_clique(id, eg.assignment());
    for (VertexId u : s) {
      if (!divides(id, eg.tuple(u).weight)) {
        throw IntegrityError("id " + id.str() + " is not a clique: vertex " +
                             std::to_string(u) + " is not adjacent to all members");
      }
    }
    bits.push_back(detail::to_bits(s, eg.order()));
    sizes.push_back(s.size());
  }

  std::vector<std::size_t> by_size(ids.size());
  for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });

  std::vector<bool> keep(ids.size(), true);
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    const std::size_t i = by_size[k];
    for (std::size_t m = 0; m < k; ++m) {
      const std::size_t j = by_size[m];
      if (sizes[j] == sizes[i]) break;
      if (detail::is_subset(bits[i], bits[j])) {
        keep[i] = false;
        break;
      }
    }
  }

  CliqueSet out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (keep[i]) out.push_back(std::move(ids[i]));
  }
  return out;
}

struct SolveResult {
  CliqueSet cliques;
  SolverStats stats;
};

inline SolveResult find_cliques(const EncodedGraph& eg, const SolverConfig& config = {}) {
  SolveResult result;
  SolverStats* stats = config.collect_stats ? &result.stats : nullptr;
  result.cliques = find_cliques_raw(eg.tuples(), config.pivot_order, stats);
  if (config.sanitize) result.cliques = sanitize(result.cliques, eg);
  return result;
}

// Decoded vertex sets, lexicographically sorted.
inline std::vector<VertexSet> decode_cliques(const CliqueSet& ids,
                                             const PrimeAssignment& assignment) {
  std::vector<VertexSet> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(decode_clique(id, assignment));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace primeclique
