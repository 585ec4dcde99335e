#include <gtest/gtest.h>

#include <random>

#include "readability/io.hpp"
#include "support/enumerate.hpp"

namespace readability {
namespace {

TEST(ParseGraph, Bipartite) {
  const ParsedGraph p = parse_graph("bipartite 2 2\n0 0\n1 0\n1 1\n");
  const auto& g = std::get<BipartiteGraph>(p.graph);
  EXPECT_EQ(g.s_count(), 2u);
  EXPECT_EQ(g.t_count(), 2u);
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(ParseGraph, Digraph) {
  const ParsedGraph p = parse_graph("digraph 3\n0 1\n1 2\n");
  const auto& g = std::get<Digraph>(p.graph);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.arc_count(), 2u);
}

TEST(ParseGraph, CommentsAndDuplicates) {
  const ParsedGraph p =
      parse_graph("# header follows\ndigraph 2\n0 1\n# dup\n0 1\r\n");
  EXPECT_EQ(std::get<Digraph>(p.graph).arc_count(), 1u);
  EXPECT_EQ(p.duplicates_dropped, 1u);
}

TEST(ParseGraph, Errors) {
  EXPECT_THROW(parse_graph("digraph 2\n0 0\n"), GraphError);
  EXPECT_THROW(parse_graph(""), GraphError);
  EXPECT_THROW(parse_graph("graph 2\n"), GraphError);
  EXPECT_THROW(parse_graph("bipartite 2\n"), GraphError);
  EXPECT_THROW(parse_graph("digraph 2\n0 x\n"), GraphError);
  EXPECT_THROW(parse_graph("digraph 2\n0 1 1\n"), GraphError);
  EXPECT_THROW(parse_graph("bipartite 1 1\n0 1\n"), GraphError);
  EXPECT_THROW(parse_graph("digraph 2\n0 -1\n"), GraphError);
}

TEST(ParseGraph, RoundTripRandom) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 30; ++k) {
    const Digraph d = testing::random_digraph(rng, 1 + k % 6, 0.5);
    EXPECT_EQ(std::get<Digraph>(parse_graph(serialize_graph(d)).graph), d);
  }
  for (const auto& g : testing::nonisomorphic_bipartite(3, 2)) {
    EXPECT_EQ(std::get<BipartiteGraph>(parse_graph(serialize_graph(g)).graph),
              g);
  }
}

TEST(ParseLabeling, Bipartite) {
  const AnyLabeling l = parse_labeling("S 0 0,1\nT 0 1,2\nS 1 3,4\n");
  const auto& b = std::get<BipartiteLabeling>(l);
  EXPECT_EQ(b.s, (std::vector<String>{{0, 1}, {3, 4}}));
  EXPECT_EQ(b.t, (std::vector<String>{{1, 2}}));
  EXPECT_EQ(serialize_labeling(b), "S 0 0,1\nS 1 3,4\nT 0 1,2\n");
}

TEST(ParseLabeling, DigraphAndEmptyString) {
  const AnyLabeling l = parse_labeling("V 1 7\nV 0\n");
  const auto& d = std::get<DigraphLabeling>(l);
  EXPECT_EQ(d.strings, (std::vector<String>{{}, {7}}));
  EXPECT_EQ(serialize_labeling(d), "V 0\nV 1 7\n");
}

TEST(ParseLabeling, Errors) {
  EXPECT_THROW(parse_labeling("V 0 1\nS 0 1\n"), GraphError);
  EXPECT_THROW(parse_labeling("V 1 1\n"), GraphError);
  EXPECT_THROW(parse_labeling("V 0 1\nV 0 2\n"), GraphError);
  EXPECT_THROW(parse_labeling("X 0 1\n"), GraphError);
  EXPECT_THROW(parse_labeling("V 0 1,,2\n"), GraphError);
}

TEST(Render, LettersOrIntegers) {
  EXPECT_EQ(render({1, 0, 2}), "bac");
  EXPECT_EQ(render({1, 30}), "1,30");
  EXPECT_EQ(render({}), "");
}

}  // namespace
}  // namespace readability
