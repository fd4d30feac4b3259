#pragma once

// Arithmetic representation of a graph. Vertex u carries a prime value v_u
// and a weight w_u, the product of the values over its closed neighborhood
// N[u]. Adjacency becomes divisibility and neighborhood intersection becomes
// gcd.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "primeclique/errors.hpp"
#include "primeclique/graph.hpp"
#include "primeclique/prime_core.hpp"

namespace primeclique {

// Injective map VertexId -> Prime; vertex k gets primes[k - 1].
class PrimeAssignment {
 public:
  PrimeAssignment() = default;

  explicit PrimeAssignment(std::vector<Prime> primes) : primes_(std::move(primes)) {
    index_.reserve(primes_.size());
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (!index_.emplace(primes_[i].value(), static_cast<VertexId>(i + 1)).second) {
        throw ContractViolation("prime assignment is not injective: " +
                                std::to_string(primes_[i].value()) +
                                " assigned twice");
      }
    }
  }

  // Vertex k gets the k-th prime.
  static PrimeAssignment first_primes(std::size_t n) {
    return PrimeAssignment(first_n_primes(n));
  }

  std::size_t size() const noexcept { return primes_.size(); }

  Prime prime_of(VertexId u) const {
    if (u < 1 || u > primes_.size()) {
      throw ContractViolation("no prime assigned to vertex " + std::to_string(u));
    }
    return primes_[u - 1];
  }

  std::optional<VertexId> vertex_of(Prime p) const {
    auto it = index_.find(p.value());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::span<const Prime> basis() const noexcept { return primes_; }

  friend bool operator==(const PrimeAssignment& a, const PrimeAssignment& b) {
    return a.primes_ == b.primes_;
  }

 private:
  std::vector<Prime> primes_;
  std::unordered_map<std::uint64_t, VertexId> index_;
};

// The {value, weight} tuple. value | weight always holds for well-formed
// tuples; after merging, value is a product of several vertex primes.
struct WeightedVertex {
  SquarefreeProduct value;
  SquarefreeProduct weight;

  friend bool operator==(const WeightedVertex&, const WeightedVertex&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const WeightedVertex& t) {
  return os << '(' << t.value << ',' << t.weight << ')';
}

class EncodedGraph {
 public:
  // No consistency checks here; decode_graph() validates.
  EncodedGraph(std::vector<WeightedVertex> tuples, PrimeAssignment assignment)
      : tuples_(std::move(tuples)), assignment_(std::move(assignment)) {
    if (tuples_.size() != assignment_.size()) {
      throw ContractViolation("encoded graph: " + std::to_string(tuples_.size()) +
                              " tuples but " + std::to_string(assignment_.size()) +
                              " assigned primes");
    }
  }

  std::size_t order() const noexcept { return tuples_.size(); }
  const std::vector<WeightedVertex>& tuples() const noexcept { return tuples_; }
  const PrimeAssignment& assignment() const noexcept { return assignment_; }

  const WeightedVertex& tuple(VertexId u) const {
    if (u < 1 || u > tuples_.size()) {
      throw ContractViolation("vertex out of range: " + std::to_string(u));
    }
    return tuples_[u - 1];
  }

 private:
  std::vector<WeightedVertex> tuples_;
  PrimeAssignment assignment_;
};

inline EncodedGraph encode(const Graph& g, const PrimeAssignment& assignment) {
  if (assignment.size() != g.order()) {
    throw ContractViolation("assignment covers " + std::to_string(assignment.size()) +
                            " vertices, graph has " + std::to_string(g.order()));
  }
  std::vector<WeightedVertex> tuples;
  tuples.reserve(g.order());
  for (VertexId u = 1; u <= g.order(); ++u) {
    const Prime pu = assignment.prime_of(u);
    Natural weight = pu.value();
    for (VertexId v : g.neighbors(u)) weight *= assignment.prime_of(v).value();
    tuples.push_back({SquarefreeProduct(pu), SquarefreeProduct(std::move(weight))});
  }
  return EncodedGraph(std::move(tuples), assignment);
}

inline EncodedGraph encode(const Graph& g) {
  return encode(g, PrimeAssignment::first_primes(g.order()));
}

inline bool has_edge(const EncodedGraph& eg, VertexId i, VertexId j) {
  if (i == j) return false;
  return divides(eg.assignment().prime_of(i), eg.tuple(j).weight);
}

inline VertexSet decode_clique(const SquarefreeProduct& id,
                               const PrimeAssignment& assignment) {
  VertexSet out;
  for (std::size_t i : factor_over_basis(id, assignment.basis())) {
    out.push_back(static_cast<VertexId>(i + 1));
  }
  return out;
}

// N[i] ∩ N[j], read off gcd(w_i, w_j).
inline VertexSet common_closed_neighborhood(const EncodedGraph& eg, VertexId i,
                                            VertexId j) {
  return decode_clique(gcd(eg.tuple(i).weight, eg.tuple(j).weight), eg.assignment());
}

inline Graph decode_graph(const EncodedGraph& eg) {
  const std::size_t n = eg.order();
  std::vector<VertexSet> closed(n);
  for (VertexId u = 1; u <= n; ++u) {
    closed[u - 1] = decode_clique(eg.tuple(u).weight, eg.assignment());
    if (!std::binary_search(closed[u - 1].begin(), closed[u - 1].end(), u)) {
      throw IntegrityError("vertex " + std::to_string(u) +
                           " missing from its own weight");
    }
  }
  Graph g(n);
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v : closed[u - 1]) {
      if (v == u) continue;
      const auto& back = closed[v - 1];
      if (!std::binary_search(back.begin(), back.end(), u)) {
        throw IntegrityError("asymmetric weights: " + std::to_string(v) +
                             " divides w_" + std::to_string(u) + " but " +
                             std::to_string(u) + " does not divide w_" +
                             std::to_string(v));
      }
      if (u < v) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace primeclique
