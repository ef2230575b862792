#include <sstream>

#include <gtest/gtest.h>

#include "riglab/graph.hpp"
#include "riglab/io.hpp"
#include "support.hpp"

using namespace riglab;

namespace {

SimpleGraph path3() { return SimpleGraph::from_edges(3, {{0, 1}, {1, 2}}); }
SimpleGraph triangle() { return SimpleGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST(SimpleGraph, NormalizesOrientationAndDuplicates) {
  auto g = SimpleGraph::from_edges(4, {{2, 1}, {1, 2}, {3, 0}});
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 3}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 2}));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 1));
}

TEST(SimpleGraph, RejectsSelfLoopsAndOutOfRange) {
  EXPECT_THROW(SimpleGraph::from_edges(3, {{1, 1}}), ValidationError);
  EXPECT_THROW(SimpleGraph::from_edges(3, {{0, 3}}), ValidationError);
}

TEST(SimpleGraph, CompleteGraph) {
  auto k5 = SimpleGraph::complete(5);
  EXPECT_EQ(k5.edge_count(), 10u);
  Adjacency adj(k5);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(adj.degree(v), 4u);
  EXPECT_TRUE(adj.adjacent(0, 4));
}

TEST(ProjectHypergraph, Examples) {
  auto tri = UniformHypergraph::from_hyperedges(4, 3, {{2, 0, 1}});
  EXPECT_EQ(project_hypergraph(tri), SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(project_hypergraph(UniformHypergraph(5, 3)).edge_count(), 0u);
  auto two = UniformHypergraph::from_hyperedges(3, 2, {{0, 1}, {1, 2}});
  EXPECT_EQ(project_hypergraph(two), path3());
}

TEST(ProjectHypergraph, Arity2IsBijection) {
  Rng rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    auto g = fixtures::random_graph(9, 0.4, rng);
    std::vector<std::vector<Vertex>> hs;
    for (auto e : g.edges()) hs.push_back({e.u, e.v});
    EXPECT_EQ(project_hypergraph(UniformHypergraph::from_hyperedges(9, 2, hs)), g);
  }
}

TEST(UniformHypergraph, CollapsesDuplicatesAndValidates) {
  auto h = UniformHypergraph::from_hyperedges(5, 3, {{0, 1, 2}, {2, 1, 0}, {1, 3, 4}});
  EXPECT_EQ(h.hyperedge_count(), 2u);
  EXPECT_THROW(UniformHypergraph::from_hyperedges(5, 3, {{0, 0, 1}}), ValidationError);
  EXPECT_THROW(UniformHypergraph::from_hyperedges(5, 3, {{0, 1}}), ValidationError);
  EXPECT_THROW(UniformHypergraph::from_hyperedges(5, 3, {{0, 1, 5}}), ValidationError);
}

TEST(ProjectRig, Examples) {
  RigInstance one(4, {{0, 1, 2}, {}});
  EXPECT_EQ(project_rig(one), SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}}));
  RigInstance singles(4, {{0}, {3}, {}, {1}});
  EXPECT_EQ(project_rig(singles).edge_count(), 0u);
  RigInstance two(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(project_rig(two), path3());
}

TEST(ProjectRig, MatchesIntersectionRule) {
  Rng rng(17);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 1 + rng.below(10);
    const std::size_t m = 1 + rng.below(6);
    std::vector<std::vector<Vertex>> sets(m);
    for (auto& s : sets) {
      for (Vertex v = 0; v < n; ++v) {
        if (rng.bernoulli(0.3)) s.push_back(v);
      }
    }
    RigInstance r(n, sets);
    auto g = project_rig(r);
    auto w = r.vertex_features();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        std::vector<std::size_t> common;
        std::set_intersection(w[u].begin(), w[u].end(), w[v].begin(), w[v].end(), std::back_inserter(common));
        EXPECT_EQ(g.has_edge(u, v), !common.empty());
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(r.holds(v, i), std::binary_search(sets[i].begin(), sets[i].end(), v));
      }
    }
  }
}

TEST(RigInstance, RejectsBadSets) {
  EXPECT_THROW(RigInstance(3, {{0, 3}}), ValidationError);
  EXPECT_THROW(RigInstance(3, {{1, 1}}), ValidationError);
}

TEST(GraphUnion, Laws) {
  auto g = triangle();
  EXPECT_EQ(graph_union(g, SimpleGraph(3)), g);
  EXPECT_EQ(graph_union(g, g), g);
  EXPECT_EQ(graph_union(SimpleGraph::from_edges(3, {{0, 1}}), SimpleGraph::from_edges(3, {{1, 2}})), path3());
  EXPECT_THROW(graph_union(g, SimpleGraph(4)), DimensionError);

  Rng rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    auto a = fixtures::random_graph(8, 0.3, rng);
    auto b = fixtures::random_graph(8, 0.3, rng);
    auto c = fixtures::random_graph(8, 0.3, rng);
    EXPECT_EQ(graph_union(a, b), graph_union(b, a));
    EXPECT_EQ(graph_union(graph_union(a, b), c), graph_union(a, graph_union(b, c)));
    EXPECT_TRUE(is_subgraph(a, graph_union(a, b)));
  }
}

TEST(IsSubgraph, Examples) {
  auto g = triangle();
  EXPECT_TRUE(is_subgraph(SimpleGraph(3), g));
  EXPECT_TRUE(is_subgraph(g, g));
  EXPECT_FALSE(is_subgraph(triangle(), path3()));
  EXPECT_THROW(is_subgraph(g, SimpleGraph(2)), DimensionError);
}

TEST(EdgeListIo, RoundTrip) {
  Rng rng(11);
  auto g = fixtures::random_graph(12, 0.3, rng);
  std::string text = to_edge_list(g);
  std::istringstream in(text);
  EXPECT_EQ(read_edge_list(in), g);
  EXPECT_EQ(text.substr(0, text.find('\n')), "12 " + std::to_string(g.edge_count()));
}

TEST(EdgeListIo, RejectsMalformedInput) {
  std::istringstream dup("3 2\n0 1\n0 1\n");
  EXPECT_THROW(read_edge_list(dup), ValidationError);
  std::istringstream short_list("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(short_list), ValidationError);
  std::istringstream loop("3 1\n1 1\n");
  EXPECT_THROW(read_edge_list(loop), ValidationError);
  EXPECT_THROW(load_edge_list("/nonexistent/graph.txt"), IoError);
}

TEST(HypergraphIo, RoundTrip) {
  auto h = UniformHypergraph::from_hyperedges(6, 3, {{0, 1, 2}, {3, 4, 5}, {1, 2, 5}});
  std::ostringstream out;
  write_hypergraph(out, h);
  std::istringstream in(out.str());
  EXPECT_EQ(read_hypergraph(in), h);
}
