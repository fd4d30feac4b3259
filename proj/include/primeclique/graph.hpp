#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "primeclique/errors.hpp"

namespace primeclique {

// 1-based, contiguous.
using VertexId = std::uint32_t;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<VertexId>;

// Simple undirected graph on vertices 1..n with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  bool contains(VertexId u) const noexcept {
    return u >= 1 && u <= adjacency_.size();
  }

  // Returns false when the edge was already present.
  bool add_edge(VertexId u, VertexId v) {
    if (!contains(u) || !contains(v)) {
      throw ContractViolation("vertex out of range: edge " + std::to_string(u) +
                              " " + std::to_string(v));
    }
    if (u == v) {
      throw ContractViolation("self-loop at vertex " + std::to_string(u));
    }
    auto& nu = adjacency_[u - 1];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adjacency_[v - 1];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
  }

  bool has_edge(VertexId u, VertexId v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& nu = adjacency_[u - 1];
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  const VertexSet& neighbors(VertexId u) const { return adjacency_.at(u - 1); }

  std::size_t degree(VertexId u) const { return neighbors(u).size(); }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId u = 1; u <= order(); ++u) {
      for (VertexId v : adjacency_[u - 1]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

}  // namespace primeclique
