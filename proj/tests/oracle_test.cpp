#include <gtest/gtest.h>

#include <iostream>
#include <random>

#include "readability/grids.hpp"
#include "readability/io.hpp"
#include "readability/oracle.hpp"
#include "readability/overlap.hpp"
#include "support/enumerate.hpp"

namespace readability {
namespace {

BipartiteGraph k22() {
  return BipartiteGraph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST(OracleBipartite, Examples) {
  EXPECT_EQ(exact_readability_bipartite(k22(), 3).readability, 1);
  EXPECT_EQ(exact_readability_bipartite(graph_f(), 4).readability, 3);
  const auto empty = exact_readability_bipartite(BipartiteGraph(2, 2), 3);
  EXPECT_EQ(empty.readability, 0);
  EXPECT_EQ(empty.witness.s, (std::vector<String>{{}, {}}));
  EXPECT_EQ(empty.witness.t, (std::vector<String>{{}, {}}));
}

TEST(OracleBipartite, NotFoundBelowReadability) {
  const auto res = exact_readability_bipartite(graph_f(), 2);
  EXPECT_FALSE(res.readability.has_value());
  EXPECT_FALSE(res.guard_tripped);
  EXPECT_EQ(res.refuted_below, 3);
}

TEST(OracleBipartite, GuardTrips) {
  const auto res = exact_readability_bipartite(tg(1).graph, 3);
  EXPECT_TRUE(res.guard_tripped);
  EXPECT_FALSE(res.readability.has_value());
  EXPECT_EQ(res.refuted_below, 2);
}

TEST(OracleDigraph, Examples) {
  EXPECT_EQ(exact_readability_digraph(Digraph(2, {{0, 1}}), 3).readability, 2);
  EXPECT_EQ(exact_readability_digraph(Digraph(2, {{0, 1}, {1, 0}}), 3).readability,
            2);
  const auto empty = exact_readability_digraph(Digraph(3), 3);
  EXPECT_EQ(empty.readability, 1);
  EXPECT_EQ(empty.refuted_below, 1);
}

TEST(OracleDigraph, WitnessesVerify) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    const Digraph g = testing::random_digraph(rng, 2 + k % 3, 0.4);
    const auto res = exact_readability_digraph(g, 4);
    ASSERT_TRUE(res.readability.has_value()) << serialize_graph(g);
    EXPECT_TRUE(verify_labeling(g, res.witness).ok);
    EXPECT_LE(res.witness.length(), static_cast<std::size_t>(*res.readability));
  }
}

TEST(OracleBipartite, WitnessesVerify) {
  for (const auto& g : testing::nonisomorphic_bipartite(3, 3)) {
    const auto res = exact_readability_bipartite(g, 4);
    ASSERT_TRUE(res.readability.has_value());
    EXPECT_TRUE(verify_labeling(g, res.witness).ok) << serialize_graph(g);
    EXPECT_EQ(res.witness.length(), static_cast<std::size_t>(*res.readability));
  }
}

TEST(OracleBipartite, InducedSubgraphMonotone) {
  for (const auto& g : testing::nonisomorphic_bipartite(3, 3)) {
    const int r = *exact_readability_bipartite(g, 4).readability;
    for (std::uint32_t sm = 0; sm < (1U << g.s_count()); ++sm) {
      std::vector<Vertex> ks;
      for (Vertex v = 0; v < g.s_count(); ++v) {
        if (sm >> v & 1U) ks.push_back(v);
      }
      std::vector<Vertex> kt;
      for (Vertex v = 0; v + 1 < g.t_count(); ++v) kt.push_back(v);
      const auto h = induced_subgraph(g, ks, kt);
      EXPECT_LE(*exact_readability_bipartite(h, 4).readability, r);
    }
  }
}

TEST(OracleBipartite, ThreadsGiveSameWitness) {
  OracleOptions par;
  par.threads = 4;
  for (const BipartiteGraph& g :
       {graph_f(), grid_graph(3, 3).graph, grid_graph(2, 4).graph}) {
    const auto a = exact_readability_bipartite(g, 3);
    const auto b = exact_readability_bipartite(g, 3, par);
    EXPECT_EQ(a.readability, b.readability);
    EXPECT_EQ(a.witness.s, b.witness.s);
    EXPECT_EQ(a.witness.t, b.witness.t);
  }
}

// Soft check of r(G) < r(D) <= 2 r(G) + 1 for the bipartite/digraph
// correspondence. Violations are printed, not asserted.
TEST(OracleCorrespondence, SoftCheck) {
  int checked = 0;
  int violations = 0;
  for (const auto& g : testing::nonisomorphic_bipartite(3, 3)) {
    if (g.s_count() != g.t_count() || g.s_count() == 0) continue;
    bool diagonal = false;
    for (const Edge& e : g.edges()) diagonal = diagonal || e.s == e.t;
    if (diagonal) continue;
    const auto rb = exact_readability_bipartite(g, 4).readability;
    const auto rd =
        exact_readability_digraph(bipartite_to_digraph(g), 5).readability;
    if (!rb || !rd) continue;
    ++checked;
    if (!(*rb < *rd && *rd <= 2 * *rb + 1)) {
      ++violations;
      std::cout << "correspondence: r(G)=" << *rb << " r(D)=" << *rd << "\n"
                << serialize_graph(g);
    }
  }
  std::cout << "correspondence: " << checked << " checked, " << violations
            << " outside the bound\n";
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace readability
