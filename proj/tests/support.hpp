#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

#include "riglab/graph.hpp"
#include "riglab/random.hpp"

namespace riglab::fixtures {

inline SimpleGraph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v});
    }
  }
  return SimpleGraph::from_edges(n, std::move(edges));
}

inline SimpleGraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return SimpleGraph::from_edges(n, std::move(edges));
}

inline SimpleGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return SimpleGraph::from_edges(n, std::move(edges));
}

inline SimpleGraph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    edges.push_back({i, static_cast<Vertex>(i + 5)});
    edges.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 2) % 5 + 5)});
  }
  return SimpleGraph::from_edges(10, std::move(edges));
}

inline SimpleGraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, static_cast<Vertex>(a + v)});
  }
  return SimpleGraph::from_edges(a + b, std::move(edges));
}

// Adjacency bitmasks for graphs with n <= 32.
inline std::vector<std::uint32_t> masks(const SimpleGraph& g) {
  std::vector<std::uint32_t> adj(g.vertex_count(), 0);
  for (auto e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  return adj;
}

// Connectivity of the subgraph induced by `alive`.
inline bool brute_connected_within(const std::vector<std::uint32_t>& adj, std::uint32_t alive) {
  if (alive == 0) return true;
  std::uint32_t seen = alive & (~alive + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (frontier >> v & 1u) next |= adj[v] & alive;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == alive;
}

// Vertex mode: n > k and deleting any < k vertices leaves a connected graph.
inline bool brute_k_connected(const SimpleGraph& g, int k) {
  const std::size_t n = g.vertex_count();
  if (n <= static_cast<std::size_t>(k)) return false;
  auto adj = masks(g);
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t cut = 0; cut <= all; ++cut) {
    if (std::popcount(cut) >= k) continue;
    if (!brute_connected_within(adj, all & ~cut)) return false;
  }
  return true;
}

// Edge mode: n >= 2 and deleting any < k edges leaves a connected graph.
inline bool brute_k_edge_connected(const SimpleGraph& g, int k) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return false;
  const auto& edges = g.edges();
  const std::uint32_t all = (1u << n) - 1;
  std::vector<std::size_t> pick;
  bool ok = true;
  auto rec = [&](auto&& self, std::size_t start, int left) -> void {
    if (!ok) return;
    auto adj = std::vector<std::uint32_t>(n, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (std::find(pick.begin(), pick.end(), i) != pick.end()) continue;
      adj[edges[i].u] |= 1u << edges[i].v;
      adj[edges[i].v] |= 1u << edges[i].u;
    }
    if (!brute_connected_within(adj, all)) {
      ok = false;
      return;
    }
    if (left == 0) return;
    for (std::size_t i = start; i < edges.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1, left - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, k - 1);
  return ok;
}

inline bool brute_perfect_matching(const std::vector<std::uint32_t>& adj, std::uint32_t left) {
  if (left == 0) return true;
  int v = std::countr_zero(left);
  std::uint32_t options = adj[v] & left;
  while (options) {
    int w = std::countr_zero(options);
    options &= options - 1;
    if (brute_perfect_matching(adj, left & ~(1u << v) & ~(1u << w))) return true;
  }
  return false;
}

inline bool brute_perfect_matching(const SimpleGraph& g) {
  return brute_perfect_matching(masks(g), (1u << g.vertex_count()) - 1);
}

inline std::size_t brute_matching_size(const SimpleGraph& g) {
  const auto& edges = g.edges();
  std::size_t best = 0;
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t used, std::size_t size) -> void {
    best = std::max(best, size);
    if (i == edges.size()) return;
    auto e = edges[i];
    if (!(used >> e.u & 1u) && !(used >> e.v & 1u)) self(self, i + 1, used | 1u << e.u | 1u << e.v, size + 1);
    self(self, i + 1, used, size);
  };
  rec(rec, 0, 0, 0);
  return best;
}

inline bool brute_hamiltonian(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3) return false;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = g.has_edge(order[i], order[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

struct OracleStats {
  long double s1 = 0, s2 = 0, s3 = 0;
  std::vector<long double> s1t;
};

// Brute force in extended precision: with X ~ Bin(n, p_i), Y = X [X >= 2] and
// Z = [Y odd], S1 = sum E Y, S3 = sum E Z, S2 = S1 - S3 and S_{1,t} = sum t P(X = t).
inline OracleStats oracle(std::size_t n, const std::vector<double>& p) {
  OracleStats o;
  o.s1t.assign(n + 1, 0.0L);
  for (double pd : p) {
    long double pi = pd;
    long double binom = 1.0L;
    for (std::size_t t = 0; t <= n; ++t) {
      if (t > 0) binom = binom * static_cast<long double>(n - t + 1) / static_cast<long double>(t);
      long double pmf = binom * powl(pi, static_cast<long double>(t)) * powl(1.0L - pi, static_cast<long double>(n - t));
      if (t >= 2) {
        o.s1 += t * pmf;
        o.s1t[t] += t * pmf;
      }
      if (t >= 3 && t % 2 == 1) o.s3 += pmf;
    }
  }
  o.s2 = o.s1 - o.s3;
  return o;
}

inline double binomial_sigma_of_mean(double variance, double samples) { return std::sqrt(variance / samples); }

}  // namespace riglab::fixtures
