#include <gtest/gtest.h>

#include "riglab/properties.hpp"
#include "riglab/thresholds.hpp"
#include "support.hpp"

using namespace riglab;
using namespace riglab::fixtures;

namespace {

std::size_t matching_size(const std::vector<std::int64_t>& mate) {
  std::size_t matched = 0;
  for (auto m : mate) matched += m != -1;
  return matched / 2;
}

bool valid_matching(const SimpleGraph& g, const std::vector<std::int64_t>& mate) {
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] == -1) continue;
    auto w = static_cast<std::size_t>(mate[v]);
    if (mate[w] != static_cast<std::int64_t>(v)) return false;
    if (!g.has_edge(static_cast<Vertex>(v), static_cast<Vertex>(w))) return false;
  }
  return true;
}

int vertex_connectivity(const SimpleGraph& g) {
  int k = 0;
  while (is_k_connected(g, k + 1, ConnectivityMode::Vertex)) ++k;
  return k;
}

int edge_connectivity(const SimpleGraph& g) {
  int k = 0;
  while (is_k_connected(g, k + 1, ConnectivityMode::Edge)) ++k;
  return k;
}

}  // namespace

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree(SimpleGraph(4)), 0u);
  EXPECT_EQ(min_degree(SimpleGraph::complete(4)), 3u);
  EXPECT_EQ(min_degree(path_graph(3)), 1u);
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_k_connected(SimpleGraph::complete(4), 3));
  EXPECT_FALSE(is_k_connected(SimpleGraph::complete(4), 4));
  EXPECT_FALSE(is_k_connected(path_graph(5), 2));
  EXPECT_TRUE(is_k_connected(path_graph(5), 1));
  EXPECT_TRUE(is_k_connected(petersen(), 3));
  EXPECT_FALSE(is_k_connected(petersen(), 4));
  EXPECT_TRUE(is_k_connected(petersen(), 3, ConnectivityMode::Edge));
  EXPECT_FALSE(is_k_connected(petersen(), 4, ConnectivityMode::Edge));
  EXPECT_THROW(is_k_connected(petersen(), 0), ValidationError);
}

TEST(Connectivity, PetersenAgreesWithBruteForce) {
  EXPECT_TRUE(brute_k_connected(petersen(), 3));
  EXPECT_FALSE(brute_k_connected(petersen(), 4));
}

TEST(Connectivity, OneConnectedMatchesReachability) {
  Rng rng(31);
  for (int rep = 0; rep < 500; ++rep) {
    std::size_t n = 1 + rng.below(64);
    double p = 3.0 * rng.uniform() / std::max<std::size_t>(n, 2);
    auto g = random_graph(n, p, rng);
    ASSERT_EQ(is_k_connected(g, 1), n > 1 && is_connected(g)) << n;
  }
}

TEST(Connectivity, MatchesBruteForceOnSmallGraphs) {
  Rng rng(41);
  for (int rep = 0; rep < 500; ++rep) {
    std::size_t n = 1 + rng.below(8);
    auto g = random_graph(n, 0.2 + 0.7 * rng.uniform(), rng);
    for (int k = 1; k <= 3; ++k) {
      ASSERT_EQ(is_k_connected(g, k), brute_k_connected(g, k)) << "n=" << n << " k=" << k;
      ASSERT_EQ(is_k_connected(g, k, ConnectivityMode::Edge), brute_k_edge_connected(g, k)) << "n=" << n;
    }
  }
}

TEST(Connectivity, WhitneyInequality) {
  Rng rng(43);
  for (int rep = 0; rep < 200; ++rep) {
    std::size_t n = 2 + rng.below(30);
    auto g = random_graph(n, 0.2 + 0.6 * rng.uniform(), rng);
    int kv = vertex_connectivity(g);
    int ke = edge_connectivity(g);
    ASSERT_LE(kv, ke);
    ASSERT_LE(static_cast<std::size_t>(ke), min_degree(g));
  }
}

TEST(Connectivity, CertificateCasesAtModerateSize) {
  // Two K_20 sharing 3 vertices: vertex connectivity exactly 3.
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 20; ++u) {
    for (Vertex v = u + 1; v < 20; ++v) {
      edges.push_back({u, v});
      edges.push_back({u + 17, v + 17});
    }
  }
  auto g = SimpleGraph::from_edges(37, edges);
  EXPECT_TRUE(is_k_connected(g, 3));
  EXPECT_FALSE(is_k_connected(g, 4));
  EXPECT_TRUE(is_k_connected(g, 4, ConnectivityMode::Edge));
}

TEST(Connectivity, MonotoneUnderEdgeAddition) {
  Rng rng(47);
  for (int rep = 0; rep < 100; ++rep) {
    std::size_t n = 4 + rng.below(20);
    auto g = random_graph(n, 0.3, rng);
    for (int add = 0; add < 10; ++add) {
      auto u = static_cast<Vertex>(rng.below(n));
      auto v = static_cast<Vertex>(rng.below(n));
      if (u == v) continue;
      auto h = graph_union(g, SimpleGraph::from_edges(n, {{u, v}}));
      for (int k = 1; k <= 3; ++k) {
        if (is_k_connected(g, k)) ASSERT_TRUE(is_k_connected(h, k));
      }
      if (has_perfect_matching(g)) ASSERT_TRUE(has_perfect_matching(h));
      g = h;
    }
  }
}

TEST(Matching, Examples) {
  EXPECT_TRUE(has_perfect_matching(cycle_graph(4)));
  EXPECT_FALSE(has_perfect_matching(SimpleGraph::complete(3)));
  EXPECT_TRUE(has_perfect_matching(petersen()));
  EXPECT_TRUE(brute_perfect_matching(petersen()));
  EXPECT_TRUE(has_perfect_matching(SimpleGraph(0)));
  EXPECT_FALSE(has_perfect_matching(SimpleGraph(2)));
}

TEST(Matching, MatchesBruteForce) {
  Rng rng(53);
  for (int rep = 0; rep < 500; ++rep) {
    std::size_t n = 1 + rng.below(8);
    auto g = random_graph(n, 0.15 + 0.6 * rng.uniform(), rng);
    ASSERT_EQ(has_perfect_matching(g), n % 2 == 0 && brute_perfect_matching(g));
    auto mate = maximum_matching(Adjacency(g));
    ASSERT_TRUE(valid_matching(g, mate));
    ASSERT_EQ(matching_size(mate), brute_matching_size(g));
  }
}

TEST(Matching, BlossomCases) {
  // Two triangles joined by a bridge need a blossom to match perfectly.
  auto g = SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_TRUE(has_perfect_matching(g));
  Rng rng(59);
  for (int rep = 0; rep < 100; ++rep) {
    std::size_t n = 10 + rng.below(8);
    auto h = random_graph(n, 0.2, rng);
    auto mate = maximum_matching(Adjacency(h));
    ASSERT_TRUE(valid_matching(h, mate));
    ASSERT_EQ(matching_size(mate), brute_matching_size(h));
  }
}

TEST(Hamiltonicity, Examples) {
  auto c5 = hamiltonicity(cycle_graph(5));
  EXPECT_EQ(c5.verdict, Verdict::Yes);
  EXPECT_TRUE(is_hamilton_cycle(cycle_graph(5), c5.certificate));
  EXPECT_EQ(hamiltonicity(complete_bipartite(2, 3)).verdict, Verdict::No);
  EXPECT_EQ(hamiltonicity(petersen()).verdict, Verdict::No);
  EXPECT_FALSE(brute_hamiltonian(petersen()));
  EXPECT_THROW(hamiltonicity(SimpleGraph(2)), DomainError);
}

TEST(Hamiltonicity, MatchesBruteForce) {
  Rng rng(61);
  for (int rep = 0; rep < 500; ++rep) {
    std::size_t n = 3 + rng.below(6);
    auto g = random_graph(n, 0.3 + 0.6 * rng.uniform(), rng);
    auto hv = hamiltonicity(g);
    ASSERT_NE(hv.verdict, Verdict::Unknown);
    bool truth = brute_hamiltonian(g);
    ASSERT_EQ(hv.verdict == Verdict::Yes, truth);
    if (truth) ASSERT_TRUE(is_hamilton_cycle(g, hv.certificate));
  }
}

TEST(Hamiltonicity, HeldKarpRange) {
  Rng rng(67);
  for (int rep = 0; rep < 30; ++rep) {
    std::size_t n = 12 + rng.below(9);
    auto g = random_graph(n, 0.25, rng);
    auto hv = hamiltonicity(g);
    ASSERT_NE(hv.verdict, Verdict::Unknown);
    if (hv.verdict == Verdict::Yes) ASSERT_TRUE(is_hamilton_cycle(g, hv.certificate));
  }
}

TEST(Hamiltonicity, PlantedCycleNeverNo) {
  Rng rng(71);
  for (int rep = 0; rep < 60; ++rep) {
    std::size_t n = 5 + rng.below(196);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span<Vertex>(order));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back({order[i], order[(i + 1) % n]});
    auto extra = random_graph(n, 2.0 * rng.uniform() / n, rng);
    edges.insert(edges.end(), extra.edges().begin(), extra.edges().end());
    auto g = SimpleGraph::from_edges(n, edges);
    auto hv = hamiltonicity(g);
    ASSERT_NE(hv.verdict, Verdict::No) << "n=" << n;
    if (hv.verdict == Verdict::Yes) ASSERT_TRUE(is_hamilton_cycle(g, hv.certificate));
  }
}

TEST(Hamiltonicity, NecessaryConditionsAndBipartiteParity) {
  auto leaf = SimpleGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  EXPECT_EQ(hamiltonicity(leaf).verdict, Verdict::No);
  // Two cycles sharing a vertex: cut vertex.
  auto bow = SimpleGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  EXPECT_EQ(hamiltonicity(bow).reason, "cut-vertex");
  // K_{15,16} has n > 20 and is settled by the parity check.
  auto kb = hamiltonicity(complete_bipartite(15, 16));
  EXPECT_EQ(kb.verdict, Verdict::No);
  auto ks = hamiltonicity(complete_bipartite(16, 16));
  EXPECT_EQ(ks.verdict, Verdict::Yes);
}

TEST(Hamiltonicity, JoinedPetersenCopies) {
  // Two Petersen copies joined by {0,10} and {5,15}. A Hamilton cycle would
  // need a Hamilton path from 0 to 5 in one copy, and 0-5 is an edge, so that
  // path would close into a Hamilton cycle of Petersen.
  std::vector<Edge> edges;
  const auto pg = petersen();
  for (auto e : pg.edges()) {
    edges.push_back(e);
    edges.push_back({e.u + 10, e.v + 10});
  }
  edges.push_back({0, 10});
  edges.push_back({5, 15});
  auto g = SimpleGraph::from_edges(20, edges);
  EXPECT_EQ(hamiltonicity(g).verdict, Verdict::No);
  HamiltonicityOptions tiny;
  tiny.budget = 1;
  EXPECT_NE(hamiltonicity(g, tiny).verdict, Verdict::Yes);
}

TEST(Hamiltonicity, BudgetExhaustionGivesUnknown) {
  // Beyond the DP range, with no cheap witness and almost no budget.
  std::vector<Edge> edges;
  const auto pg = petersen();
  for (Vertex c = 0; c < 3; ++c) {
    for (auto e : pg.edges()) edges.push_back({e.u + 10 * c, e.v + 10 * c});
  }
  edges.push_back({0, 10});
  edges.push_back({5, 15});
  edges.push_back({11, 20});
  edges.push_back({16, 25});
  edges.push_back({2, 22});
  edges.push_back({7, 27});
  auto g = SimpleGraph::from_edges(30, edges);
  HamiltonicityOptions tiny;
  tiny.budget = 50;
  auto hv = hamiltonicity(g, tiny);
  EXPECT_EQ(hv.verdict, Verdict::Unknown);
  EXPECT_EQ(hv.reason, "budget-exhausted");
}

TEST(Audit, CompleteGraphHasNoViolations) {
  AuditParams params;
  params.sample_count = 20;
  auto rep = structure_audit(SimpleGraph::complete(60), params);
  EXPECT_EQ(rep.b1.violations, 0u);
  EXPECT_EQ(rep.b2.violations, 0u);
  EXPECT_EQ(rep.b3.violations, 0u);
  EXPECT_TRUE(rep.b4_vacuous);
  EXPECT_EQ(rep.b4_violating_pairs, 0u);
}

TEST(Audit, StarReportsB4Violations) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < 30; ++v) edges.push_back({0, v});
  AuditParams params;
  params.degree_cutoff = 1;
  auto rep = structure_audit(SimpleGraph::from_edges(30, edges), params);
  EXPECT_EQ(rep.b4_low_degree_vertices, 29u);
  EXPECT_EQ(rep.b4_violating_pairs, 29u * 28u / 2u);
  EXPECT_FALSE(rep.b4_vacuous);
}

TEST(Audit, RandomGraphAboveThreshold) {
  const std::size_t n = 2000;
  const double phat = 1.5 * std::log(static_cast<double>(n)) / n;
  Rng rng(73);
  auto g = random_graph(n, phat, rng);
  AuditParams params;
  params.sample_count = 200;
  auto rep = structure_audit(g, params);
  EXPECT_EQ(rep.b1.violations, 0u);
  EXPECT_GT(rep.b1.sets_sampled, 0u);
  EXPECT_EQ(rep.b1.sets_sampled, rep.b1.size_classes * 200);
}

TEST(Audit, ValidatesParams) {
  AuditParams bad;
  bad.gamma = 1.0;
  EXPECT_THROW(structure_audit(SimpleGraph(10), bad), ValidationError);
  bad = {};
  bad.sample_count = 0;
  EXPECT_THROW(structure_audit(SimpleGraph(10), bad), ValidationError);
}
