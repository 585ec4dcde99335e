#include <gtest/gtest.h>

#include <random>

#include "readability/graph.hpp"
#include "readability/io.hpp"
#include "readability/oracle.hpp"
#include "support/enumerate.hpp"

namespace readability {
namespace {

BipartiteGraph p4() { return BipartiteGraph(2, 2, {{0, 0}, {1, 0}, {1, 1}}); }

BipartiteGraph complete(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex s = 0; s < a; ++s) {
    for (Vertex t = 0; t < b; ++t) e.push_back({s, t});
  }
  return BipartiteGraph(a, b, std::move(e));
}

TEST(Digraph, RejectsLoop) {
  EXPECT_THROW(Digraph(2, {{0, 0}}), GraphError);
}

TEST(Digraph, RejectsOutOfRange) {
  EXPECT_THROW(Digraph(2, {{0, 2}}), GraphError);
}

TEST(Digraph, DropsDuplicates) {
  Digraph g(3, {{1, 2}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.arc_count(), 2u);
  EXPECT_EQ(g.duplicates_dropped(), 1u);
  EXPECT_TRUE(g.has_arc(0, 1));
  EXPECT_FALSE(g.has_arc(1, 0));
}

TEST(MaxDegrees, Examples) {
  EXPECT_EQ(max_degrees(Digraph(3)), (DegreePair{0, 0}));
  EXPECT_EQ(max_degrees(Digraph(3, {{0, 1}, {1, 2}, {2, 0}})),
            (DegreePair{1, 1}));
  EXPECT_EQ(max_degrees(Digraph(4, {{0, 1}, {0, 2}, {0, 3}})),
            (DegreePair{3, 1}));
}

TEST(BipartiteGraph, EdgeIndexFollowsSortedOrder) {
  BipartiteGraph g(2, 2, {{1, 1}, {0, 0}, {1, 0}});
  ASSERT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edge_index(0, 0), 0);
  EXPECT_EQ(g.edge_index(1, 0), 1);
  EXPECT_EQ(g.edge_index(1, 1), 2);
  EXPECT_EQ(g.edge_index(0, 1), -1);
  EXPECT_EQ(g.max_degree(), 2u);
}

TEST(TwinReduction, CompleteGraphCollapses) {
  const TwinReduction r = twin_free_reduction(complete(3, 3));
  EXPECT_EQ(r.reduced, complete(1, 1));
  EXPECT_EQ(r.s_class, (std::vector<Vertex>{0, 0, 0}));
}

TEST(TwinReduction, P4IsFixed) {
  const TwinReduction r = twin_free_reduction(p4());
  EXPECT_TRUE(testing::isomorphic(r.reduced, p4()));
  EXPECT_EQ(r.s_class, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(r.t_class, (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(is_twin_free(p4()));
}

TEST(TwinReduction, IdempotentOnAllSmallGraphs) {
  for (const auto& g : testing::nonisomorphic_bipartite(3, 3)) {
    const BipartiteGraph once = twin_free_reduction(g).reduced;
    EXPECT_TRUE(is_twin_free(once));
    EXPECT_TRUE(testing::isomorphic(twin_free_reduction(once).reduced, once));
  }
}

TEST(TwinReduction, PreservesReadability) {
  for (const auto& g : testing::nonisomorphic_bipartite(3, 3)) {
    const auto full = exact_readability_bipartite(g, 4);
    const auto red =
        exact_readability_bipartite(twin_free_reduction(g).reduced, 4);
    ASSERT_TRUE(full.readability.has_value());
    EXPECT_EQ(full.readability, red.readability) << serialize_graph(g);
  }
}

TEST(Bijection, Examples) {
  EXPECT_EQ(bipartite_to_digraph(BipartiteGraph(3, 3)), Digraph(3));
  EXPECT_THROW(bipartite_to_digraph(BipartiteGraph(3, 3, {{0, 0}, {1, 1}})),
               GraphError);
  EXPECT_EQ(bipartite_to_digraph(BipartiteGraph(2, 2, {{0, 1}, {1, 0}})),
            Digraph(2, {{0, 1}, {1, 0}}));
}

TEST(Bijection, RoundTripOnRandomDigraphs) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const Digraph d = testing::random_digraph(rng, 1 + k % 7, 0.4);
    EXPECT_EQ(bipartite_to_digraph(digraph_to_bipartite(d)), d);
  }
}

TEST(InducedSubgraph, KeepAllAndNothing) {
  EXPECT_EQ(induced_subgraph(p4(), {0, 1}, {0, 1}), p4());
  EXPECT_EQ(induced_subgraph(p4(), {}, {}), BipartiteGraph(0, 0));
  EXPECT_EQ(induced_subgraph(p4(), {1}, {1}), BipartiteGraph(1, 1, {{0, 0}}));
}

TEST(SwapParts, Transposes) {
  EXPECT_EQ(swap_parts(BipartiteGraph(1, 2, {{0, 1}})),
            BipartiteGraph(2, 1, {{1, 0}}));
}

}  // namespace
}  // namespace readability
