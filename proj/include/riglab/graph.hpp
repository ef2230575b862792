#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riglab {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored canonically (first < second).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple graph on vertices 0..n-1 with a canonical sorted edge list.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Empty graph on n vertices.
  explicit SimpleGraph(std::size_t n) : n_(n) {}

  /// Normalizes orientation, sorts, and collapses duplicates. Self-loops and
  /// out-of-range endpoints throw ValidationError.
  static SimpleGraph from_edges(std::size_t n, std::vector<Edge> edges);
  static SimpleGraph from_pairs(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static SimpleGraph complete(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  SimpleGraph(std::size_t n, std::vector<Edge> sorted_unique) : n_(n), edges_(std::move(sorted_unique)) {}

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Compressed adjacency view of a SimpleGraph; neighbor lists are sorted.
class Adjacency {
 public:
  explicit Adjacency(const SimpleGraph& g);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex a, Vertex b) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// i-uniform hypergraph. Each hyperedge is stored as a sorted vertex tuple;
/// the hyperedge list is sorted lexicographically with duplicates collapsed.
class UniformHypergraph {
 public:
  UniformHypergraph(std::size_t n, std::size_t arity);
  static UniformHypergraph from_hyperedges(std::size_t n, std::size_t arity,
                                           std::vector<std::vector<Vertex>> hyperedges);

  std::size_t vertex_count() const { return n_; }
  std::size_t arity() const { return arity_; }
  std::size_t hyperedge_count() const { return arity_ == 0 ? 0 : flat_.size() / arity_; }
  std::span<const Vertex> hyperedge(std::size_t idx) const {
    return {flat_.data() + idx * arity_, arity_};
  }

  friend bool operator==(const UniformHypergraph&, const UniformHypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t arity_ = 2;
  std::vector<Vertex> flat_;
};

/// Bipartite vertex-feature incidence: feature i is held by the sorted vertex
/// set feature_set(i).
class RigInstance {
 public:
  RigInstance(std::size_t n, std::vector<std::vector<Vertex>> feature_sets);

  std::size_t vertex_count() const { return n_; }
  std::size_t feature_count() const { return sets_.size(); }
  std::span<const Vertex> feature_set(std::size_t i) const { return sets_[i]; }
  const std::vector<std::vector<Vertex>>& feature_sets() const { return sets_; }
  bool holds(Vertex v, std::size_t feature) const;
  /// W(v) for every vertex, derived from the feature sets.
  std::vector<std::vector<std::size_t>> vertex_features() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Vertex>> sets_;
};

SimpleGraph project_hypergraph(const UniformHypergraph& h);
SimpleGraph project_rig(const RigInstance& r);
/// Union of cliques over the given vertex sets.
SimpleGraph clique_union(std::size_t n, std::span<const std::vector<Vertex>> sets);
SimpleGraph graph_union(const SimpleGraph& a, const SimpleGraph& b);
bool is_subgraph(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace riglab
