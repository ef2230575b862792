#include <algorithm>
#include <cmath>
#include <functional>

#include "riglab/properties.hpp"

namespace riglab {

namespace {

// Geometric size ladder lo, 2lo, 4lo, ... capped by hi (hi itself included).
std::vector<std::size_t> size_classes(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  if (lo == 0) lo = 1;
  for (std::size_t s = lo; s <= hi; s = std::max(s + 1, s * 2)) out.push_back(s);
  if (!out.empty() && out.back() != hi) out.push_back(hi);
  return out;
}

class NeighborhoodCounter {
 public:
  explicit NeighborhoodCounter(const Adjacency& adj) : adj_(adj), mark_(adj.vertex_count(), 0) {}

  /// |N(S)|: vertices outside S adjacent to some vertex of S.
  std::size_t outside_neighbors(const std::vector<Vertex>& set) {
    ++stamp_;
    const std::uint64_t in_set = 2 * stamp_;
    const std::uint64_t counted = 2 * stamp_ + 1;
    for (Vertex v : set) mark_[v] = in_set;
    std::size_t count = 0;
    for (Vertex v : set) {
      for (Vertex w : adj_.neighbors(v)) {
        if (mark_[w] == in_set || mark_[w] == counted) continue;
        mark_[w] = counted;
        ++count;
      }
    }
    return count;
  }

 private:
  const Adjacency& adj_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_ = 0;
};

// Samples sets of each size class and counts those failing `ok`. Sizes whose
// bound exceeds n - |S| cannot be met by any graph and are left out.
SampledCheck sampled_check(std::size_t lo, std::size_t hi, std::size_t n,
                           const std::function<double(std::size_t)>& required,
                           const std::function<bool(std::size_t, std::size_t)>& ok,
                           const std::vector<Vertex>& pool, std::size_t samples, Rng& rng,
                           NeighborhoodCounter& counter) {
  SampledCheck out;
  while (hi >= lo && hi > 0 && required(hi) >= static_cast<double>(n - hi)) --hi;
  hi = std::min(hi, pool.size());
  if (lo == 0) lo = 1;
  if (hi < lo) return out;
  auto classes = size_classes(lo, hi);
  out.size_classes = classes.size();
  out.min_size = classes.front();
  out.max_size = classes.back();
  for (std::size_t s : classes) {
    for (std::size_t rep = 0; rep < samples; ++rep) {
      auto picks = sample_distinct(rng, static_cast<std::uint32_t>(pool.size()), static_cast<std::uint32_t>(s));
      std::vector<Vertex> set;
      set.reserve(s);
      for (auto idx : picks) set.push_back(pool[idx]);
      ++out.sets_sampled;
      if (!ok(s, counter.outside_neighbors(set))) ++out.violations;
    }
  }
  return out;
}

}  // namespace

AuditReport structure_audit(const SimpleGraph& g, const AuditParams& params) {
  if (!(params.gamma > 0.0 && params.gamma < 1.0)) throw ValidationError("gamma must lie in (0,1)");
  if (params.k < 1) throw ValidationError("k must be at least 1");
  if (params.degree_cutoff < 1) throw ValidationError("degree cutoff C must be at least 1");
  if (params.sample_count < 1) throw ValidationError("sample_count must be at least 1");

  const std::size_t n = g.vertex_count();
  AuditReport report;
  if (n < 3) return report;
  Adjacency adj(g);
  NeighborhoodCounter counter(adj);
  Rng rng(params.seed);
  const double nd = static_cast<double>(n);
  const auto small = static_cast<std::size_t>(std::ceil(std::pow(nd, params.gamma)));
  const auto small_floor = static_cast<std::size_t>(std::floor(std::pow(nd, params.gamma)));

  std::vector<Vertex> everyone(n);
  for (Vertex v = 0; v < n; ++v) everyone[v] = v;

  report.b1 = sampled_check(
      small, n / 4, n, [](std::size_t s) { return 2.0 * static_cast<double>(s); },
      [](std::size_t s, std::size_t nb) { return nb > 2 * s; }, everyone, params.sample_count, rng, counter);

  const double cap = 4.0 * nd * std::log(std::log(nd)) / std::log(nd);
  auto b2_bound = [cap](std::size_t s) { return std::min(static_cast<double>(s), cap); };
  report.b2 = sampled_check(
      small, (2 * n) / 3, n, b2_bound,
      [&](std::size_t s, std::size_t nb) { return static_cast<double>(nb) > b2_bound(s); }, everyone,
      params.sample_count, rng, counter);

  const std::size_t high_degree = 4 * static_cast<std::size_t>(params.k) + 15;
  std::vector<Vertex> eligible;
  for (Vertex v = 0; v < n; ++v) {
    if (adj.degree(v) >= high_degree) eligible.push_back(v);
  }
  report.b3_eligible_vertices = eligible.size();
  const auto two_k = 2 * static_cast<std::size_t>(params.k);
  report.b3 = sampled_check(
      1, small_floor, n, [two_k](std::size_t s) { return static_cast<double>(two_k * s) - 1.0; },
      [two_k](std::size_t s, std::size_t nb) { return nb >= two_k * s; }, eligible, params.sample_count, rng,
      counter);

  // B4: low-degree vertices pairwise at distance >= 6 (exact, depth-5 BFS).
  std::vector<char> low(n, 0);
  std::vector<Vertex> lows;
  for (Vertex v = 0; v < n; ++v) {
    if (adj.degree(v) <= params.degree_cutoff) {
      low[v] = 1;
      lows.push_back(v);
    }
  }
  report.b4_low_degree_vertices = lows.size();
  report.b4_vacuous = lows.size() < 2;
  std::vector<int> dist(n, -1);
  std::vector<Vertex> touched;
  for (Vertex src : lows) {
    for (Vertex t : touched) dist[t] = -1;
    touched.assign(1, src);
    dist[src] = 0;
    std::vector<Vertex> frontier{src};
    for (int depth = 1; depth <= 5 && !frontier.empty(); ++depth) {
      std::vector<Vertex> next;
      for (Vertex v : frontier) {
        for (Vertex w : adj.neighbors(v)) {
          if (dist[w] != -1) continue;
          dist[w] = depth;
          touched.push_back(w);
          next.push_back(w);
          if (low[w] && w > src) ++report.b4_violating_pairs;
        }
      }
      frontier = std::move(next);
    }
  }
  return report;
}

}  // namespace riglab
