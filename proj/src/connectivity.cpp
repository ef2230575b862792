#include <algorithm>
#include <deque>
#include <iterator>
#include <limits>

#include "riglab/properties.hpp"

namespace riglab {

std::size_t min_degree(const Adjacency& adj) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < adj.vertex_count(); ++v) best = std::min(best, adj.degree(v));
  return adj.vertex_count() == 0 ? 0 : best;
}

std::size_t min_degree(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return 0;
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return *std::min_element(deg.begin(), deg.end());
}

bool is_connected(const Adjacency& adj) {
  const std::size_t n = adj.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_connected(const SimpleGraph& g) { return is_connected(Adjacency(g)); }

namespace {

// Unit-capacity flow network with paired residual arcs; answers "are there at
// least `limit` augmenting paths" with BFS augmentation.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(std::size_t nodes) : head_(nodes, -1) {}

  void add_arc(std::size_t from, std::size_t to, int cap, int reverse_cap) {
    arcs_.push_back({static_cast<std::uint32_t>(to), head_[from], cap});
    head_[from] = static_cast<std::int64_t>(arcs_.size() - 1);
    arcs_.push_back({static_cast<std::uint32_t>(from), head_[to], reverse_cap});
    head_[to] = static_cast<std::int64_t>(arcs_.size() - 1);
    initial_.push_back(cap);
    initial_.push_back(reverse_cap);
  }

  int flow_at_least(std::size_t source, std::size_t sink, int limit) {
    for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = initial_[i];
    std::vector<std::int64_t> via(head_.size());
    std::vector<char> seen(head_.size());
    int flow = 0;
    std::deque<std::size_t> queue;
    while (flow < limit) {
      std::fill(seen.begin(), seen.end(), 0);
      queue.clear();
      queue.push_back(source);
      seen[source] = 1;
      bool found = false;
      while (!queue.empty() && !found) {
        std::size_t x = queue.front();
        queue.pop_front();
        for (std::int64_t a = head_[x]; a != -1; a = arcs_[a].next) {
          if (arcs_[a].cap <= 0 || seen[arcs_[a].to]) continue;
          seen[arcs_[a].to] = 1;
          via[arcs_[a].to] = a;
          if (arcs_[a].to == sink) {
            found = true;
            break;
          }
          queue.push_back(arcs_[a].to);
        }
      }
      if (!found) break;
      for (std::size_t x = sink; x != source;) {
        std::int64_t a = via[x];
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    std::uint32_t to;
    std::int64_t next;
    int cap;
  };
  std::vector<std::int64_t> head_;
  std::vector<Arc> arcs_;
  std::vector<int> initial_;
};

// Union of k scan-first (BFS) forests, each grown in the graph minus the
// previous forests. Preserves k-vertex-connectivity (Cheriyan-Kao-Thurimella).
SimpleGraph sparse_certificate(const SimpleGraph& g, int k, bool scan_first) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> remaining = g.edges();
  std::vector<Edge> kept;
  for (int round = 0; round < k && !remaining.empty(); ++round) {
    auto rest = SimpleGraph::from_edges(n, remaining);
    Adjacency adj(rest);
    std::vector<char> marked(n, 0);
    std::vector<Edge> forest;
    if (scan_first) {
      std::deque<Vertex> queue;
      for (Vertex root = 0; root < n; ++root) {
        if (marked[root]) continue;
        marked[root] = 1;
        queue.push_back(root);
        while (!queue.empty()) {
          Vertex v = queue.front();
          queue.pop_front();
          for (Vertex w : adj.neighbors(v)) {
            if (marked[w]) continue;
            marked[w] = 1;
            forest.push_back({std::min(v, w), std::max(v, w)});
            queue.push_back(w);
          }
        }
      }
    } else {
      // Any maximal spanning forest preserves k-edge-connectivity.
      std::vector<Vertex> parent(n);
      for (Vertex v = 0; v < n; ++v) parent[v] = v;
      auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (const auto& e : rest.edges()) {
        Vertex a = find(e.u), b = find(e.v);
        if (a != b) {
          parent[a] = b;
          forest.push_back(e);
        }
      }
    }
    std::sort(forest.begin(), forest.end());
    std::vector<Edge> next;
    std::set_difference(remaining.begin(), remaining.end(), forest.begin(), forest.end(),
                        std::back_inserter(next));
    kept.insert(kept.end(), forest.begin(), forest.end());
    remaining = std::move(next);
  }
  return SimpleGraph::from_edges(n, std::move(kept));
}

bool vertex_k_connected(const SimpleGraph& g, int k) {
  const std::size_t n = g.vertex_count();
  auto h = sparse_certificate(g, k, true);
  Adjacency adj(h);

  // Split digraph: v_in = 2v, v_out = 2v + 1.
  UnitFlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, 1, 0);
  for (const auto& e : h.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, 1, 0);
    net.add_arc(2 * e.v + 1, 2 * e.u, 1, 0);
  }
  auto local_ok = [&](Vertex s, Vertex t) { return net.flow_at_least(2 * s + 1, 2 * t, k) >= k; };

  // Esfahanian-Hakimi pair family around a minimum-degree vertex.
  Vertex pivot = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (adj.degree(v) < adj.degree(pivot)) pivot = v;
  }
  auto nb = adj.neighbors(pivot);
  std::vector<char> is_nb(n, 0);
  for (Vertex w : nb) is_nb[w] = 1;
  for (Vertex w = 0; w < n; ++w) {
    if (w == pivot || is_nb[w]) continue;
    if (!local_ok(pivot, w)) return false;
  }
  for (std::size_t a = 0; a < nb.size(); ++a) {
    for (std::size_t b = a + 1; b < nb.size(); ++b) {
      if (adj.adjacent(nb[a], nb[b])) continue;
      if (!local_ok(nb[a], nb[b])) return false;
    }
  }
  return true;
}

bool edge_k_connected(const SimpleGraph& g, int k) {
  const std::size_t n = g.vertex_count();
  auto h = sparse_certificate(g, k, false);
  UnitFlowNetwork net(n);
  for (const auto& e : h.edges()) net.add_arc(e.u, e.v, 1, 1);
  for (Vertex t = 1; t < n; ++t) {
    if (net.flow_at_least(0, t, k) < k) return false;
  }
  return true;
}

}  // namespace

bool is_k_connected(const SimpleGraph& g, int k, ConnectivityMode mode) {
  if (k < 1) throw ValidationError("k must be a positive integer");
  const std::size_t n = g.vertex_count();
  const auto kk = static_cast<std::size_t>(k);
  if (mode == ConnectivityMode::Vertex && n <= kk) return false;
  if (mode == ConnectivityMode::Edge && n < 2) return false;
  Adjacency adj(g);
  if (min_degree(adj) < kk) return false;
  if (!is_connected(adj)) return false;
  if (k == 1) return true;
  return mode == ConnectivityMode::Vertex ? vertex_k_connected(g, k) : edge_k_connected(g, k);
}

}  // namespace riglab
