#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "readability/ilp.hpp"
#include "readability/io.hpp"
#include "readability/oracle.hpp"
#include "readability/overlap.hpp"
#include "support/enumerate.hpp"

namespace readability {
namespace {

BipartiteGraph k11() { return BipartiteGraph(1, 1, {{0, 0}}); }

BipartiteGraph k22() {
  return BipartiteGraph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

std::uint64_t streamed_rows(const BipartiteGraph& g, int r,
                            const ModelOptions& o) {
  return stream_bipartite_model(g, r, o, {}).constraints;
}

std::uint64_t streamed_rows(const Digraph& g, int r, const ModelOptions& o) {
  return stream_digraph_model(g, r, o, {}).constraints;
}

std::uint64_t count_solutions(const IlpModel& m) {
  return testing::enumerate_solutions(m, [](const auto&) { return true; });
}

TEST(VarName, Formats) {
  EXPECT_EQ(var_name(VarKey::x(0, 1, 2, 3)), "x_0_1_2_3");
  EXPECT_EQ(var_name(VarKey::z2(4, 1)), "z_4_1");
  EXPECT_EQ(var_name(VarKey::z3(4, 1, 2)), "z_4_1_2");
  EXPECT_EQ(var_name(VarKey::t(3, 2)), "t_3_2");
}

TEST(VarLayout, IndexRoundTrip) {
  const IlpModel m = build_digraph_model(Digraph(3, {{0, 1}, {2, 1}}), 3);
  for (std::uint32_t i = 0; i < m.layout.size(); ++i) {
    EXPECT_EQ(m.layout.index(m.layout.key(i)), i);
    EXPECT_EQ(m.variables[i], m.layout.key(i));
  }
  EXPECT_FALSE(m.layout.index(VarKey::x(0, 0, 1, 1)).has_value());
  EXPECT_FALSE(m.layout.index(VarKey::z2(0, 1)).has_value());
}

TEST(BipartiteModel, SingleEdge) {
  const IlpModel m = build_bipartite_model(k11(), 1, {false, false});
  ASSERT_EQ(m.variables.size(), 2u);
  EXPECT_EQ(var_name(m.variables[0]), "x_0_0_1_1");
  EXPECT_EQ(var_name(m.variables[1]), "z_0_1");
  ASSERT_EQ(m.constraints.size(), 2u);
  EXPECT_EQ(m.constraints[0].name, "edge_cover_e0");
  EXPECT_EQ(m.constraints[1].name, "edge_link_e0_i1");
  EXPECT_THROW(build_bipartite_model(k11(), 0), std::invalid_argument);
}

TEST(BipartiteModel, TenByTenInstanceCounts) {
  const ModelCounts c = bipartite_model_counts(10, 10, 50, 10);
  EXPECT_EQ(c.constraints, 20251550u);
  EXPECT_EQ(c.variables, 10500u);
}

TEST(BipartiteModel, ClosedFormsMatchGenerator) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 1 + k % 4;
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(0.5);
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = 0; t < n; ++t) {
        if (coin(rng)) edges.push_back({s, t});
      }
    }
    const BipartiteGraph g(n, n, edges);
    const int r = 1 + k % 3;
    const std::uint64_t m = g.edge_count();
    const std::uint64_t c2 = n * (n - 1) / 2;
    const std::uint64_t r4 = static_cast<std::uint64_t>(r) * r * r * r;
    const ModelCounts c = bipartite_model_counts(n, n, m, r);
    EXPECT_EQ(c.variables, n * n * r * r + r * m);
    EXPECT_EQ(c.constraints, m + r * n * n + r * m + c2 * c2 * r4);
    for (bool tight : {false, true}) {
      for (bool closure : {false, true}) {
        const ModelOptions o{tight, closure};
        EXPECT_EQ(streamed_rows(g, r, o),
                  bipartite_model_counts(n, n, m, r, o).constraints);
        EXPECT_EQ(build_bipartite_model(g, r, o).constraints.size(),
                  bipartite_model_counts(n, n, m, r, o).constraints);
      }
    }
  }
}

TEST(DigraphModel, ClosedFormsMatchGenerator) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 20; ++k) {
    const Digraph g = testing::random_digraph(rng, 1 + k % 4, 0.5);
    const int r = 1 + k % 3;
    for (bool closure : {false, true}) {
      const ModelOptions o{true, closure};
      const ModelCounts c =
          digraph_model_counts(g.vertex_count(), g.arc_count(), r, o);
      const IlpModel m = build_digraph_model(g, r, o);
      EXPECT_EQ(m.variables.size(), c.variables);
      EXPECT_EQ(m.constraints.size(), c.constraints);
      EXPECT_EQ(streamed_rows(g, r, o), c.constraints);
    }
  }
}

TEST(LpWriter, GoldenSingleEdge) {
  const IlpModel m = build_bipartite_model(k11(), 1);
  std::ifstream in(std::string(READABILITY_GOLDEN_DIR) + "/k11_r1.lp");
  ASSERT_TRUE(in.good());
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(emit_lp(m), golden.str());
}

TEST(LpWriter, StreamingMatchesBuilt) {
  const BipartiteGraph g(2, 3, {{0, 0}, {0, 2}, {1, 1}});
  for (int r = 1; r <= 3; ++r) {
    for (bool closure : {false, true}) {
      const ModelOptions o{true, closure};
      std::ostringstream os;
      write_lp(g, r, o, os);
      EXPECT_EQ(os.str(), emit_lp(build_bipartite_model(g, r, o)));
      const Digraph d(3, {{0, 1}, {1, 2}, {2, 0}});
      std::ostringstream od;
      write_lp(d, r, o, od);
      EXPECT_EQ(od.str(), emit_lp(build_digraph_model(d, r, o)));
    }
  }
}

TEST(LpWriter, Deterministic) {
  const IlpModel m = build_digraph_model(Digraph(3, {{0, 1}, {1, 0}}), 2);
  EXPECT_EQ(emit_lp(m), emit_lp(build_digraph_model(Digraph(3, {{1, 0}, {0, 1}}), 2)));
}

TEST(LpWriter, EmptyModel) {
  const std::string lp = emit_lp(build_bipartite_model(BipartiteGraph(0, 0), 1));
  EXPECT_EQ(lp, "Minimize\n obj: 0\nSubject To\nBinary\nEnd\n");
}

TEST(CheckAssignment, Examples) {
  const IlpModel m = build_bipartite_model(k11(), 1);
  const CheckVerdict zero = check_assignment(m, Assignment{
      {VarKey::x(0, 0, 1, 1), 0}, {VarKey::z2(0, 1), 0}});
  EXPECT_FALSE(zero.ok);
  EXPECT_EQ(zero.row, "edge_cover_e0");
  EXPECT_TRUE(check_assignment(m, Assignment{{VarKey::x(0, 0, 1, 1), 1},
                                             {VarKey::z2(0, 1), 1}})
                  .ok);
  EXPECT_THROW(check_assignment(m, Assignment{{VarKey::x(0, 0, 1, 1), 1}}),
               std::invalid_argument);
  EXPECT_THROW(check_assignment(m, Assignment{{VarKey::x(0, 0, 1, 1), 2},
                                              {VarKey::z2(0, 1), 1}}),
               std::invalid_argument);
}

TEST(CheckAssignment, EncodedAndPerturbed) {
  const IlpModel m = build_bipartite_model(k22(), 1);
  const auto w = exact_readability_bipartite(k22(), 1);
  ASSERT_EQ(w.readability, 1);
  Assignment a = encode_labeling(k22(), 1, w.witness);
  EXPECT_TRUE(check_assignment(m, a).ok);
  a[VarKey::x(1, 0, 1, 1)] = 0;
  const CheckVerdict v = check_assignment(m, a);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.row.rfind("edge_", 0), 0u) << v.row;
}

TEST(Encode, SingleEdgeAndPadding) {
  const Assignment a = encode_labeling(k11(), 1, {{{0}}, {{0}}});
  EXPECT_EQ(a.at(VarKey::x(0, 0, 1, 1)), 1);
  EXPECT_EQ(a.at(VarKey::z2(0, 1)), 1);
  const IlpModel m = build_bipartite_model(k11(), 3);
  const Assignment p = encode_labeling(k11(), 3, {{{0}}, {{0}}});
  EXPECT_TRUE(check_assignment(m, p).ok);
  EXPECT_EQ(p.at(VarKey::z2(0, 3)), 1);
  EXPECT_EQ(p.at(VarKey::z2(0, 1)), 0);
  EXPECT_THROW(encode_labeling(k11(), 1, {{{0, 1}}, {{1, 0}}}), EncodingError);
}

// Completeness: an oracle labeling of length <= r encodes to a feasible
// assignment, for every graph with at most 2 + 2 vertices and r <= 3.
TEST(BipartiteModel, EncodedWitnessesSatisfy) {
  for (const auto& g : testing::nonisomorphic_bipartite(2, 2)) {
    const auto res = exact_readability_bipartite(g, 3);
    ASSERT_TRUE(res.readability.has_value());
    for (int r = std::max(*res.readability, 1); r <= 3; ++r) {
      for (bool closure : {false, true}) {
        const IlpModel m = build_bipartite_model(g, r, {true, closure});
        const Assignment a = encode_labeling(g, r, res.witness);
        const CheckVerdict v = check_assignment(m, a);
        EXPECT_TRUE(v.ok) << serialize_graph(g) << v.row;
        const BipartiteLabeling back = decode_bipartite(m, a);
        EXPECT_TRUE(verify_labeling(g, back).ok);
      }
    }
  }
}

// Soundness of the closure model: every satisfying assignment decodes to a
// valid labeling.
TEST(BipartiteModel, ClosureModelIsSound) {
  for (const auto& g : testing::nonisomorphic_bipartite(2, 2)) {
    const int readability = *exact_readability_bipartite(g, 3).readability;
    for (int r = 1; r <= 2; ++r) {
      const IlpModel m = build_bipartite_model(g, r, {true, true});
      std::uint64_t bad = 0;
      const std::uint64_t n = testing::enumerate_solutions(m, [&](const auto& v) {
        try {
          if (!verify_labeling(g, decode_bipartite(m, from_dense(m, v))).ok) ++bad;
        } catch (const EncodingError&) {
          ++bad;
        }
        return true;
      });
      EXPECT_EQ(n > 0, readability <= r) << serialize_graph(g) << "r=" << r;
      EXPECT_EQ(bad, 0u) << serialize_graph(g) << "r=" << r;
    }
  }
}

TEST(BipartiteModel, DefaultModelAdmitsInconsistentAssignment) {
  // S = {u, w}, T = {v, q}, single edge uv.
  const BipartiteGraph g(2, 2, {{0, 0}});
  const IlpModel m = build_bipartite_model(g, 2);
  std::optional<std::vector<std::uint8_t>> found;
  testing::enumerate_solutions(m, [&](const auto& v) {
    const Assignment a = from_dense(m, v);
    if (a.at(VarKey::x(0, 0, 1, 1)) == 1 && a.at(VarKey::x(0, 0, 2, 1)) == 1 &&
        a.at(VarKey::x(0, 1, 1, 1)) == 1 && a.at(VarKey::x(0, 1, 2, 1)) == 0) {
      found = v;
      return false;
    }
    return true;
  });
  ASSERT_TRUE(found.has_value());
  const Assignment a = from_dense(m, *found);
  EXPECT_TRUE(check_assignment(m, a).ok);
  EXPECT_THROW(decode_bipartite(m, a), EncodingError);
  const IlpModel closed = build_bipartite_model(g, 2, {true, true});
  EXPECT_FALSE(check_assignment(closed, a).ok);
}

TEST(BipartiteModel, TightRowsFixZ) {
  // With tight rows z is determined by x, so solutions are never duplicated.
  const BipartiteGraph g(1, 2, {{0, 0}});
  const IlpModel loose = build_bipartite_model(g, 2, {false, true});
  const IlpModel tight = build_bipartite_model(g, 2, {true, true});
  EXPECT_GT(count_solutions(loose), count_solutions(tight));
}

TEST(DigraphModel, SingleArcNeedsLengthTwo) {
  const Digraph g(2, {{0, 1}});
  EXPECT_EQ(count_solutions(build_digraph_model(g, 1)), 0u);
  EXPECT_GT(count_solutions(build_digraph_model(g, 2)), 0u);
  EXPECT_GT(count_solutions(build_digraph_model(Digraph(2), 1)), 0u);
  EXPECT_THROW(build_digraph_model(g, 0), std::invalid_argument);
}

TEST(DigraphModel, TwoCycleDecodes) {
  const Digraph g(2, {{0, 1}, {1, 0}});
  const IlpModel m = build_digraph_model(g, 2, {true, true});
  std::uint64_t checked = 0;
  testing::enumerate_solutions(m, [&](const auto& v) {
    const DigraphLabeling l = decode_digraph(m, from_dense(m, v));
    EXPECT_TRUE(verify_labeling(g, l).ok);
    ++checked;
    return true;
  });
  EXPECT_GT(checked, 0u);
}

TEST(DigraphModel, EncodedWitnessesSatisfy) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 40; ++k) {
    const Digraph g = testing::random_digraph(rng, 2 + k % 3, 0.4);
    const auto res = exact_readability_digraph(g, 4);
    ASSERT_TRUE(res.readability.has_value());
    for (int r = *res.readability; r <= *res.readability + 1; ++r) {
      for (bool closure : {false, true}) {
        const IlpModel m = build_digraph_model(g, r, {true, closure});
        const Assignment a = encode_labeling(g, r, res.witness);
        const CheckVerdict v = check_assignment(m, a);
        EXPECT_TRUE(v.ok) << serialize_graph(g) << v.row;
        EXPECT_TRUE(verify_labeling(g, decode_digraph(m, a)).ok);
      }
    }
  }
}

TEST(DigraphModel, EncodeRejectsBadLabelings) {
  const Digraph g(2, {{0, 1}});
  EXPECT_THROW(encode_labeling(g, 2, DigraphLabeling{{{0}, {0}}}), EncodingError);
  EXPECT_THROW(encode_labeling(g, 1, DigraphLabeling{{{0, 1}, {1, 2}}}),
               EncodingError);
}

TEST(DigraphModel, ClosureModelIsSound) {
  std::vector<Digraph> graphs = {Digraph(2), Digraph(2, {{0, 1}}),
                                 Digraph(2, {{0, 1}, {1, 0}})};
  std::mt19937_64 rng(12);
  for (int k = 0; k < 6; ++k) graphs.push_back(testing::random_digraph(rng, 3, 0.4));
  for (const Digraph& g : graphs) {
    for (int r = 1; r <= 2; ++r) {
      const IlpModel m = build_digraph_model(g, r, {true, true});
      std::uint64_t bad = 0;
      testing::enumerate_solutions(m, [&](const auto& v) {
        const Assignment a = from_dense(m, v);
        try {
          if (!verify_labeling(g, decode_digraph(m, a)).ok) ++bad;
        } catch (const EncodingError&) {
          ++bad;
        }
        // Symmetry rows make x(u,v,i,j) and x(v,u,j,i) interchangeable.
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
          for (Vertex w = 0; w < g.vertex_count(); ++w) {
            if (u == w) continue;
            for (int i = 1; i <= r; ++i) {
              for (int j = 1; j <= r; ++j) {
                if (a.at(VarKey::x(u, w, i, j)) != a.at(VarKey::x(w, u, j, i))) {
                  ++bad;
                }
              }
            }
          }
        }
        return true;
      });
      EXPECT_EQ(bad, 0u) << serialize_graph(g) << "r=" << r;
    }
  }
}

TEST(Dense, RoundTrip) {
  const IlpModel m = build_bipartite_model(k22(), 2);
  const Assignment a = encode_labeling(k22(), 2, {{{0}, {0}}, {{0}, {0}}});
  EXPECT_EQ(from_dense(m, to_dense(m, a)), a);
  EXPECT_EQ(check_assignment(m, to_dense(m, a)).ok, check_assignment(m, a).ok);
}

}  // namespace
}  // namespace readability
