#include "riglab/graph.hpp"

#include <algorithm>
#include <iterator>

namespace riglab {

namespace {

void sort_unique(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

SimpleGraph SimpleGraph::from_edges(std::size_t n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u));
    if (e.u >= n || e.v >= n) {
      throw ValidationError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} out of range for n=" + std::to_string(n));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  sort_unique(edges);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::from_pairs(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({a, b});
  return from_edges(n, std::move(edges));
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0)) / 2);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return SimpleGraph(n, std::move(edges));
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

Adjacency::Adjacency(const SimpleGraph& g) : offsets_(g.vertex_count() + 1, 0) {
  for (const auto& e : g.edges()) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  targets_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so each list fills in increasing order.
  for (const auto& e : g.edges()) targets_[cursor[e.u]++] = e.v;
  for (const auto& e : g.edges()) targets_[cursor[e.v]++] = e.u;
  for (Vertex v = 0; v + 1 < offsets_.size(); ++v) {
    std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);
  }
}

bool Adjacency::adjacent(Vertex a, Vertex b) const {
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

UniformHypergraph::UniformHypergraph(std::size_t n, std::size_t arity) : n_(n), arity_(arity) {
  if (arity < 2) throw ValidationError("hypergraph arity must be at least 2");
}

UniformHypergraph UniformHypergraph::from_hyperedges(std::size_t n, std::size_t arity,
                                                     std::vector<std::vector<Vertex>> hyperedges) {
  UniformHypergraph h(n, arity);
  for (auto& he : hyperedges) {
    if (he.size() != arity) throw ValidationError("hyperedge size does not match arity");
    std::sort(he.begin(), he.end());
    if (std::adjacent_find(he.begin(), he.end()) != he.end()) {
      throw ValidationError("hyperedge has repeated vertices");
    }
    if (he.back() >= n) throw ValidationError("hyperedge vertex out of range");
  }
  std::sort(hyperedges.begin(), hyperedges.end());
  hyperedges.erase(std::unique(hyperedges.begin(), hyperedges.end()), hyperedges.end());
  h.flat_.reserve(hyperedges.size() * arity);
  for (const auto& he : hyperedges) h.flat_.insert(h.flat_.end(), he.begin(), he.end());
  return h;
}

RigInstance::RigInstance(std::size_t n, std::vector<std::vector<Vertex>> feature_sets)
    : n_(n), sets_(std::move(feature_sets)) {
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw ValidationError("feature set lists a vertex twice");
    }
    if (!s.empty() && s.back() >= n) throw ValidationError("feature set vertex out of range");
  }
}

bool RigInstance::holds(Vertex v, std::size_t feature) const {
  const auto& s = sets_[feature];
  return std::binary_search(s.begin(), s.end(), v);
}

std::vector<std::vector<std::size_t>> RigInstance::vertex_features() const {
  std::vector<std::vector<std::size_t>> out(n_);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    for (Vertex v : sets_[i]) out[v].push_back(i);
  }
  return out;
}

SimpleGraph clique_union(std::size_t n, std::span<const std::vector<Vertex>> sets) {
  std::size_t total = 0;
  for (const auto& s : sets) total += s.size() * (s.size() - (s.empty() ? 0 : 1)) / 2;
  std::vector<Edge> edges;
  edges.reserve(total);
  for (const auto& s : sets) {
    std::vector<Vertex> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t a = 0; a < sorted.size(); ++a) {
      for (std::size_t b = a + 1; b < sorted.size(); ++b) edges.push_back({sorted[a], sorted[b]});
    }
  }
  return SimpleGraph::from_edges(n, std::move(edges));
}

SimpleGraph project_hypergraph(const UniformHypergraph& h) {
  std::vector<std::vector<Vertex>> sets;
  sets.reserve(h.hyperedge_count());
  for (std::size_t i = 0; i < h.hyperedge_count(); ++i) {
    auto he = h.hyperedge(i);
    sets.emplace_back(he.begin(), he.end());
  }
  return clique_union(h.vertex_count(), sets);
}

SimpleGraph project_rig(const RigInstance& r) {
  return clique_union(r.vertex_count(), r.feature_sets());
}

SimpleGraph graph_union(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw DimensionError("union of graphs with different vertex counts");
  }
  std::vector<Edge> merged;
  merged.reserve(a.edge_count() + b.edge_count());
  std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                 std::back_inserter(merged));
  return SimpleGraph::from_edges(a.vertex_count(), std::move(merged));
}

bool is_subgraph(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw DimensionError("containment check between graphs with different vertex counts");
  }
  return std::includes(b.edges().begin(), b.edges().end(), a.edges().begin(), a.edges().end());
}

}  // namespace riglab
