#include <algorithm>
#include <numeric>

#include "riglab/properties.hpp"
#include "riglab/thresholds.hpp"

namespace riglab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

bool is_hamilton_cycle(const SimpleGraph& g, const std::vector<Vertex>& cycle) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || cycle.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : cycle) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;
  }
  return true;
}

namespace {

bool has_articulation_point(const Adjacency& adj) {
  const std::size_t n = adj.vertex_count();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<std::int64_t> parent(n, -1);
  std::vector<std::size_t> next_edge(n, 0);
  std::size_t timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root]) continue;
    std::size_t root_children = 0;
    std::vector<Vertex> stack{root};
    disc[root] = low[root] = ++timer;
    while (!stack.empty()) {
      Vertex v = stack.back();
      auto nb = adj.neighbors(v);
      if (next_edge[v] < nb.size()) {
        Vertex w = nb[next_edge[v]++];
        if (!disc[w]) {
          parent[w] = v;
          if (v == root) ++root_children;
          disc[w] = low[w] = ++timer;
          stack.push_back(w);
        } else if (static_cast<std::int64_t>(w) != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (parent[v] != -1) {
          auto p = static_cast<Vertex>(parent[v]);
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) return true;
        }
      }
    }
    if (root_children > 1) return true;
  }
  return false;
}

// Returns 1 for bipartite with unequal sides, 0 otherwise.
bool bipartite_imbalanced(const Adjacency& adj) {
  const std::size_t n = adj.vertex_count();
  std::vector<int> side(n, -1);
  std::size_t counts[2] = {0, 0};
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    ++counts[0];
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          ++counts[side[w]];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return counts[0] != counts[1];
}

// Pósa rotation-extension search. Only ever reports success.
class RotationSearch {
 public:
  RotationSearch(const Adjacency& adj, Rng& rng) : adj_(adj), n_(adj.vertex_count()), rng_(rng) {}

  bool run(std::uint64_t restarts, std::uint64_t rotation_cap, std::uint64_t& effort,
           std::uint64_t effort_cap, std::vector<Vertex>& cycle) {
    for (std::uint64_t r = 0; r < restarts && effort < effort_cap; ++r) {
      if (attempt(rotation_cap, effort, effort_cap, cycle)) return true;
    }
    return false;
  }

 private:
  void place(std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) pos_[path_[i]] = static_cast<std::int64_t>(i);
  }

  // Reverses path_[from..end).
  void reverse_tail(std::size_t from) {
    std::reverse(path_.begin() + static_cast<std::ptrdiff_t>(from), path_.end());
    place(from, path_.size());
  }

  bool try_extend() {
    Vertex end = path_.back();
    auto nb = adj_.neighbors(end);
    std::size_t offset = rng_.below(nb.size());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex w = nb[(i + offset) % nb.size()];
      if (pos_[w] == -1) {
        pos_[w] = static_cast<std::int64_t>(path_.size());
        path_.push_back(w);
        return true;
      }
    }
    return false;
  }

  // Path closes into a cycle; open it next to a vertex with an unvisited neighbor.
  bool break_cycle() {
    for (std::size_t j = 0; j < path_.size(); ++j) {
      for (Vertex w : adj_.neighbors(path_[j])) {
        if (pos_[w] != -1) continue;
        std::rotate(path_.begin(), path_.begin() + static_cast<std::ptrdiff_t>(j + 1), path_.end());
        place(0, path_.size());
        pos_[w] = static_cast<std::int64_t>(path_.size());
        path_.push_back(w);
        return true;
      }
    }
    return false;
  }

  void rotate_once() {
    Vertex end = path_.back();
    Vertex before = path_[path_.size() - 2];
    auto nb = adj_.neighbors(end);
    Vertex pivot = before;
    for (int tries = 0; tries < 8 && pivot == before; ++tries) pivot = nb[rng_.below(nb.size())];
    if (pivot == before) {
      for (Vertex w : nb) {
        if (w != before) {
          pivot = w;
          break;
        }
      }
    }
    reverse_tail(static_cast<std::size_t>(pos_[pivot]) + 1);
  }

  bool attempt(std::uint64_t rotation_cap, std::uint64_t& effort, std::uint64_t effort_cap,
               std::vector<Vertex>& cycle) {
    path_.clear();
    pos_.assign(n_, -1);
    Vertex start = static_cast<Vertex>(rng_.below(n_));
    pos_[start] = 0;
    path_.push_back(start);
    std::uint64_t rotations = 0;
    while (effort < effort_cap && rotations < rotation_cap) {
      ++effort;
      if (try_extend()) continue;
      bool closes = path_.size() >= 3 && adj_.adjacent(path_.back(), path_.front());
      if (path_.size() == n_) {
        if (closes) {
          cycle = path_;
          return true;
        }
      } else if (closes && break_cycle()) {
        continue;
      }
      if (path_.size() < 2) return false;
      rotate_once();
      ++rotations;
      // Occasionally work from the other end.
      if (rotations % 64 == 0 && rng_.bernoulli(0.5)) reverse_tail(0);
    }
    return false;
  }

  const Adjacency& adj_;
  std::size_t n_;
  Rng& rng_;
  std::vector<Vertex> path_;
  std::vector<std::int64_t> pos_;
};

// Held-Karp over subsets containing vertex 0; exact for n <= 20.
bool held_karp(const Adjacency& adj, std::uint64_t& effort, std::vector<Vertex>& cycle) {
  const std::size_t n = adj.vertex_count();
  std::vector<std::uint32_t> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : adj.neighbors(v)) nbr[v] |= 1u << w;
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    std::uint32_t e = ends[mask];
    if (!e) continue;
    ++effort;
    for (std::uint32_t bits = e; bits; bits &= bits - 1) {
      int v = __builtin_ctz(bits);
      for (std::uint32_t next = nbr[v] & ~mask; next; next &= next - 1) {
        std::uint32_t w = next & (~next + 1);
        ends[mask | w] |= w;
      }
    }
  }
  std::uint32_t closing = ends[full] & nbr[0];
  if (!closing) return false;
  // Walk back from an endpoint adjacent to 0.
  cycle.assign(n, 0);
  std::uint32_t mask = full;
  int v = __builtin_ctz(closing);
  for (std::size_t i = n; i-- > 1;) {
    cycle[i] = static_cast<Vertex>(v);
    std::uint32_t prev_mask = mask & ~(1u << v);
    std::uint32_t candidates = ends[prev_mask] & nbr[v];
    if (prev_mask == 1) candidates = 1;
    mask = prev_mask;
    v = __builtin_ctz(candidates);
  }
  cycle[0] = 0;
  return true;
}

// Depth-first search for a Hamilton cycle through vertex 0 with connectivity
// pruning. Returns Unknown when the effort cap is hit.
class Backtracker {
 public:
  Backtracker(const Adjacency& adj, std::uint64_t& effort, std::uint64_t cap)
      : adj_(adj), n_(adj.vertex_count()), effort_(effort), cap_(cap), on_path_(n_, 0), mark_(n_, 0) {}

  Verdict run(std::vector<Vertex>& cycle) {
    path_.assign(1, 0);
    on_path_[0] = 1;
    Verdict v = dfs();
    if (v == Verdict::Yes) cycle = path_;
    return v;
  }

 private:
  // Every unvisited vertex must reach both path ends through unvisited
  // vertices, and must keep two usable neighbors.
  bool feasible() {
    Vertex end = path_.back();
    std::size_t unvisited = n_ - path_.size();
    if (unvisited == 0) return true;
    for (Vertex u = 0; u < n_; ++u) {
      if (on_path_[u]) continue;
      std::size_t usable = 0;
      for (Vertex w : adj_.neighbors(u)) {
        if (!on_path_[w] || w == end || w == 0) ++usable;
      }
      if (usable < 2) return false;
    }
    ++stamp_;
    std::vector<Vertex> stack;
    std::size_t reached = 0;
    for (Vertex w : adj_.neighbors(end)) {
      if (!on_path_[w] && mark_[w] != stamp_) {
        mark_[w] = stamp_;
        stack.push_back(w);
        ++reached;
      }
    }
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj_.neighbors(v)) {
        if (!on_path_[w] && mark_[w] != stamp_) {
          mark_[w] = stamp_;
          stack.push_back(w);
          ++reached;
        }
      }
    }
    return reached == unvisited;
  }

  Verdict dfs() {
    if (effort_ >= cap_) return Verdict::Unknown;
    ++effort_;
    Vertex end = path_.back();
    if (path_.size() == n_) return adj_.adjacent(end, 0) ? Verdict::Yes : Verdict::No;
    if (!feasible()) return Verdict::No;
    std::vector<std::pair<std::size_t, Vertex>> options;
    for (Vertex w : adj_.neighbors(end)) {
      if (on_path_[w]) continue;
      std::size_t free_deg = 0;
      for (Vertex x : adj_.neighbors(w)) free_deg += on_path_[x] ? 0 : 1;
      options.emplace_back(free_deg, w);
    }
    std::sort(options.begin(), options.end());
    bool unknown = false;
    for (auto [deg, w] : options) {
      on_path_[w] = 1;
      path_.push_back(w);
      Verdict v = dfs();
      if (v == Verdict::Yes) return v;
      path_.pop_back();
      on_path_[w] = 0;
      if (v == Verdict::Unknown) {
        unknown = true;
        break;
      }
    }
    return unknown ? Verdict::Unknown : Verdict::No;
  }

  const Adjacency& adj_;
  std::size_t n_;
  std::uint64_t& effort_;
  std::uint64_t cap_;
  std::vector<char> on_path_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_ = 0;
  std::vector<Vertex> path_;
};

}  // namespace

HamiltonicityVerdict hamiltonicity(const SimpleGraph& g, const HamiltonicityOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n < 3) throw DomainError("hamiltonicity needs n >= 3");
  HamiltonicityVerdict out;
  Adjacency adj(g);

  // Necessary conditions; each failure is a proof of No.
  if (min_degree(adj) < 2) {
    out.verdict = Verdict::No;
    out.reason = "min-degree";
    return out;
  }
  if (!is_connected(adj)) {
    out.verdict = Verdict::No;
    out.reason = "disconnected";
    return out;
  }
  if (has_articulation_point(adj)) {
    out.verdict = Verdict::No;
    out.reason = "cut-vertex";
    return out;
  }

  // Randomized rotation-extension; leaves a quarter of the budget for the exact phase.
  Rng rng(options.seed);
  RotationSearch search(adj, rng);
  const std::uint64_t heuristic_cap = options.budget - options.budget / 4;
  const std::uint64_t restarts = n <= 20 ? 4 : 20 * n;
  if (search.run(restarts, static_cast<std::uint64_t>(n) * n, out.effort, heuristic_cap, out.certificate)) {
    out.verdict = Verdict::Yes;
    out.reason = "rotation-extension";
    return out;
  }

  if (n <= 20) {
    out.verdict = held_karp(adj, out.effort, out.certificate) ? Verdict::Yes : Verdict::No;
    out.reason = "held-karp";
    return out;
  }
  if (bipartite_imbalanced(adj)) {
    out.verdict = Verdict::No;
    out.reason = "bipartite-imbalance";
    return out;
  }
  Backtracker bt(adj, out.effort, options.budget);
  out.verdict = bt.run(out.certificate);
  out.reason = out.verdict == Verdict::Unknown ? "budget-exhausted" : "backtracking";
  if (out.verdict != Verdict::Yes) out.certificate.clear();
  return out;
}

}  // namespace riglab
