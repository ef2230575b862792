#include <algorithm>
#include <deque>

#include "riglab/properties.hpp"

namespace riglab {

namespace {

// Edmonds' blossom algorithm: BFS over alternating trees with blossom
// contraction tracked through base[].
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Adjacency& adj)
      : adj_(adj), n_(adj.vertex_count()), mate_(n_, -1), parent_(n_), base_(n_), in_tree_(n_),
        in_blossom_(n_), lca_mark_(n_) {}

  void greedy_init() {
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (Vertex w : adj_.neighbors(v)) {
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
  }

  /// Augments along a path from `root` if one exists.
  bool augment_from(Vertex root) {
    std::int64_t end = find_path(root);
    if (end == -1) return false;
    for (std::int64_t v = end; v != -1;) {
      std::int64_t pv = parent_[v];
      std::int64_t next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
    return true;
  }

  const std::vector<std::int64_t>& mate() const { return mate_; }

 private:
  std::int64_t lca(std::int64_t a, std::int64_t b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    while (true) {
      a = base_[a];
      lca_mark_[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (lca_mark_[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(std::int64_t v, std::int64_t b, std::int64_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  std::int64_t find_path(Vertex root) {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<std::int64_t>(i);
    in_tree_[root] = 1;
    std::deque<std::int64_t> queue{root};
    while (!queue.empty()) {
      std::int64_t v = queue.front();
      queue.pop_front();
      for (Vertex to : adj_.neighbors(static_cast<Vertex>(v))) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          std::int64_t cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!in_tree_[i]) {
                in_tree_[i] = 1;
                queue.push_back(static_cast<std::int64_t>(i));
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          in_tree_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Adjacency& adj_;
  std::size_t n_;
  std::vector<std::int64_t> mate_;
  std::vector<std::int64_t> parent_;
  std::vector<std::int64_t> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
  std::vector<char> lca_mark_;
};

}  // namespace

std::vector<std::int64_t> maximum_matching(const Adjacency& adj) {
  BlossomMatcher matcher(adj);
  matcher.greedy_init();
  for (Vertex v = 0; v < adj.vertex_count(); ++v) {
    if (matcher.mate()[v] == -1) matcher.augment_from(v);
  }
  return matcher.mate();
}

bool has_perfect_matching(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n % 2 == 1) return false;
  if (n == 0) return true;
  Adjacency adj(g);
  if (min_degree(adj) == 0) return false;
  BlossomMatcher matcher(adj);
  matcher.greedy_init();
  for (Vertex v = 0; v < n; ++v) {
    // A free vertex with no augmenting path stays exposed in every maximum
    // matching, so the first failure is final.
    if (matcher.mate()[v] == -1 && !matcher.augment_from(v)) return false;
  }
  return true;
}

}  // namespace riglab
