#include <gtest/gtest.h>

#include "coarsekit/formats.hpp"
#include "coarsekit/generators.hpp"
#include "coarsekit/graph.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace coarsekit;

TEST(Graph, RejectsMalformedEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_NO_THROW(Graph(0, {}));
}

TEST(Graph, EdgesAreCanonical) {
  const Graph g(4, {{3, 1}, {0, 2}, {2, 1}});
  EXPECT_EQ(g.m(), 3u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {1, 2}, {1, 3}}));
  EXPECT_TRUE(g.adjacent(1, 3));
  EXPECT_FALSE(g.adjacent(0, 3));
}

TEST(Distance, InfinityIsExplicit) {
  const Graph g(3, {{0, 1}});
  EXPECT_EQ(distance(g, 0, 1), Distance(1));
  EXPECT_FALSE(distance(g, 0, 2).is_finite());
  EXPECT_TRUE(Distance(1000) < Distance::infinite());
  EXPECT_FALSE(Distance::infinite() < Distance::infinite());
}

TEST(Ball, SmallExamples) {
  EXPECT_EQ(ball(gen::path(5), {2}, 1), (VertexSet{1, 2, 3}));
  EXPECT_EQ(ball(gen::cycle(6), {0}, 3), VertexSet::range(6));
  EXPECT_EQ(ball(gen::path(5), {}, 4), VertexSet{});
  EXPECT_EQ(ball(gen::path(5), {0, 4}, 0), (VertexSet{0, 4}));
}

TEST(Ball, MatchesFloydWarshall) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = gen::random(9, 0.3, seed);
    const auto d = oracle::distances(oracle::Matrix(g));
    for (Vertex c = 0; c < g.n(); ++c)
      for (unsigned r = 0; r <= 4; ++r) {
        std::vector<Vertex> expect;
        for (Vertex v = 0; v < g.n(); ++v)
          if (d[c][v] <= r) expect.push_back(v);
        ASSERT_EQ(ball(g, {c}, r), VertexSet(expect)) << "seed " << seed;
      }
  }
}

TEST(Ball, MonotoneAndUnionOfSingletons) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gen::random(10, 0.25, seed);
    const VertexSet s{1, 4, 7};
    for (unsigned r = 0; r < 4; ++r) {
      EXPECT_TRUE(ball(g, s, r).is_subset_of(ball(g, s, r + 1)));
      VertexSet unioned;
      for (Vertex v : s) unioned = unioned | ball(g, {v}, r);
      EXPECT_EQ(ball(g, s, r), unioned);
      EXPECT_EQ(VertexSet::from_mask(ball_mask(g, s.to_mask(), r)), unioned);
    }
  }
}

TEST(Components, Examples) {
  const Graph p3 = gen::path(3);
  EXPECT_EQ(components(p3, {1}), (std::vector<VertexSet>{{0}, {2}}));
  EXPECT_EQ(components(p3), (std::vector<VertexSet>{{0, 1, 2}}));
  EXPECT_TRUE(components(p3, {0, 1, 2}).empty());
}

TEST(Components, PartitionWithNoCrossingEdges) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = gen::random(12, 0.15, seed);
    const VertexSet removed{0, 5};
    const auto comps = components(g, removed);
    VertexSet all = removed;
    std::size_t total = removed.size();
    for (const auto& c : comps) {
      all = all | c;
      total += c.size();
    }
    EXPECT_EQ(all, VertexSet::range(12));
    EXPECT_EQ(total, 12u);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = i + 1; j < comps.size(); ++j) EXPECT_TRUE(anti_complete(g, comps[i], comps[j]));
    for (std::size_t i = 1; i < comps.size(); ++i) EXPECT_LT(comps[i - 1][0], comps[i][0]);
    std::vector<char> rem(12, 0);
    rem[0] = rem[5] = 1;
    EXPECT_EQ(comps.size(), oracle::components(g, rem).size());
  }
}

TEST(InducedSubgraph, Examples) {
  const auto k2 = induced_subgraph(gen::complete(3), {0, 2});
  EXPECT_EQ(k2.graph, gen::complete(2));
  EXPECT_EQ(k2.to_host, (std::vector<Vertex>{0, 2}));

  const Graph c5 = gen::cycle(5);
  const auto same = induced_subgraph(c5, VertexSet::range(5));
  EXPECT_EQ(same.graph, c5);
  EXPECT_EQ(induced_subgraph(c5, {1, 2, 3}).graph, gen::path(3));

  const auto sub = induced_subgraph(c5, {0, 3, 4});
  EXPECT_EQ(sub.lift({0, 2}), (VertexSet{0, 4}));
  EXPECT_EQ(sub.restrict({1, 3, 4}), (VertexSet{1, 2}));
}

TEST(AntiComplete, Examples) {
  const Graph g(4, {{0, 1}, {2, 3}});
  EXPECT_TRUE(anti_complete(g, {0}, {2}));
  EXPECT_FALSE(anti_complete(g, {0, 2}, {2}));
  EXPECT_FALSE(anti_complete(g, {0}, {1}));
}

TEST(TwoSubdivision, Examples) {
  EXPECT_EQ(two_subdivision(gen::complete(2)).graph.n(), 4u);
  const Graph p4 = two_subdivision(gen::complete(2)).graph;
  EXPECT_EQ(p4.m(), 3u);
  EXPECT_EQ(components(p4).size(), 1u);
  EXPECT_EQ(distance(p4, 0, 1), Distance(3));

  const Graph c9 = two_subdivision(gen::complete(3)).graph;
  EXPECT_EQ(c9.n(), 9u);
  EXPECT_EQ(c9.m(), 9u);
  for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(c9.degree(v), 2u);
  EXPECT_EQ(components(c9).size(), 1u);

  const auto k4 = two_subdivision(gen::complete(4));
  EXPECT_EQ(k4.graph.n(), 16u);
  EXPECT_EQ(k4.graph.m(), 18u);
  EXPECT_EQ(k4.branch_vertices, (VertexSet{0, 1, 2, 3}));
}

TEST(TwoSubdivision, AdjacentBranchVerticesAtDistanceThree) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto s = two_subdivision(gen::complete(n));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) EXPECT_EQ(distance(s.graph, u, v), Distance(3));
  }
}

TEST(Ktt, Examples) {
  const auto c4 = is_ktt_free(gen::cycle(4), 2);
  ASSERT_FALSE(c4.free);
  ASSERT_TRUE(c4.witness);
  EXPECT_EQ(c4.witness->left, (VertexSet{0, 2}));
  EXPECT_EQ(c4.witness->right, (VertexSet{1, 3}));
  EXPECT_TRUE(is_ktt_free(gen::random_tree(15, 3), 2).free);
  EXPECT_TRUE(is_ktt_free(gen::complete(5), 2).free);
  EXPECT_THROW(is_ktt_free(gen::path(3), 0), InputError);
  EXPECT_FALSE(is_ktt_free(gen::complete_bipartite(3, 3), 3).free);
  EXPECT_TRUE(is_ktt_free(gen::complete_bipartite(2, 3), 3).free);
}

TEST(Ktt, WitnessIsInducedBiclique) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gen::random(10, 0.5, seed);
    const auto r = is_ktt_free(g, 2);
    if (r.free) continue;
    const auto& w = *r.witness;
    EXPECT_TRUE(is_independent(g, w.left));
    EXPECT_TRUE(is_independent(g, w.right));
    for (Vertex a : w.left)
      for (Vertex b : w.right) EXPECT_TRUE(g.adjacent(a, b));
  }
}

TEST(Generators, Families) {
  EXPECT_EQ(gen::complete(3), Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(gen::grid(1, 6), gen::path(6));
  EXPECT_EQ(gen::grid(3, 4).m(), 17u);
  EXPECT_EQ(gen::complete_bipartite(2, 3).m(), 6u);
  EXPECT_EQ(gen::cycle(7).m(), 7u);
  EXPECT_EQ(gen::random(12, 0.3, 7), gen::random(12, 0.3, 7));
  EXPECT_EQ(gen::random(10, 0.0, 1).m(), 0u);
  EXPECT_EQ(gen::random(10, 1.0, 1), gen::complete(10));
}

TEST(Generators, TreesAndCactiAreConnectedAndSparse) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph t = gen::random_tree(17, seed);
    EXPECT_EQ(t.m(), 16u);
    EXPECT_EQ(components(t).size(), 1u);
    const Graph c = gen::random_cactus(25, seed);
    EXPECT_EQ(c.n(), 25u);
    EXPECT_EQ(components(c).size(), 1u);
    EXPECT_TRUE(is_ktt_free(c, 2).free);
    EXPECT_EQ(components(gen::random_connected(14, 0.1, seed)).size(), 1u);
  }
}

TEST(Formats, EdgeListExample) {
  EXPECT_EQ(io::parse_edge_list("3 2\n0 1\n1 2"), gen::path(3));
  EXPECT_EQ(io::to_edge_list(gen::path(3)), "3 2\n0 1\n1 2\n");
}

TEST(Formats, Graph6KnownStrings) {
  EXPECT_EQ(io::to_graph6(gen::complete(4)), "C~");
  EXPECT_EQ(io::to_graph6(gen::path(5)), "DhC");
  EXPECT_EQ(io::to_graph6(Graph(0, {})), "?");
  EXPECT_EQ(io::parse_graph6("D?{"), Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
}

TEST(Formats, RoundTrips) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gen::random(1 + seed % 70, 0.2, seed);
    const std::string s6 = io::to_graph6(g);
    EXPECT_EQ(io::parse_graph6(s6), g);
    EXPECT_EQ(io::to_graph6(io::parse_graph6(s6)), s6);
    EXPECT_EQ(io::parse_edge_list(io::to_edge_list(g)), g);
    EXPECT_EQ(io::parse_graph(s6), g);
    EXPECT_EQ(io::parse_graph(io::to_edge_list(g)), g);
  }
}

TEST(Formats, Graph6AgreesWithEdgeListOnFiveVertexSamples) {
  for (std::uint64_t code = 0; code < 1024; code += 7) {
    const Graph g = gen::from_edge_code(5, code);
    EXPECT_EQ(io::parse_graph6(io::to_graph6(g)), io::parse_edge_list(io::to_edge_list(g)));
  }
}

TEST(Formats, ParseErrorsCarryPosition) {
  try {
    io::parse_edge_list("3 2\n0 1\n1 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(io::parse_edge_list("3 3\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(io::parse_edge_list("3 1\n0 5\n"), ParseError);
  EXPECT_THROW(io::parse_graph6("D?"), ParseError);
  EXPECT_THROW(io::parse_graph6("D?{\x01"), ParseError);
  EXPECT_THROW(io::parse_graph("C~\nC~\n"), ParseError);
}

TEST(Formats, MultiGraph6Lines) {
  const auto gs = io::parse_graph6_lines("C~\n\nDhC\n");
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[0], gen::complete(4));
  EXPECT_EQ(gs[1], gen::path(5));
}
