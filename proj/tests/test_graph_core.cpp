#include <gtest/gtest.h>

#include <sstream>

#include "support/oracles.hpp"
#include "thetalab/io.hpp"

using namespace thetalab;

TEST(Simplify, ParallelFamilyKeepsHeaviest) {
  Graph g(2);
  g.add_edge(0, 1, 1);
  g.add_edge(0, 1, 5);
  g.add_edge(0, 1, 2);
  Graph s = simplify(g);
  ASSERT_EQ(s.edge_count(), 1);
  EXPECT_EQ(s.edge_at(0).w, 5);
  EXPECT_EQ(s.edge_at(0).id, 1);
  EXPECT_EQ(g.edges_between(0, 1).size(), 3u);
}

TEST(Simplify, SimpleGraphUnchanged) {
  for (Graph g : {gen::complete(5), gen::petersen(), gen::theta_subdivided(3, 3, 3)}) {
    Graph s = simplify(g);
    ASSERT_EQ(s.edge_count(), g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
      EXPECT_EQ(s.edge_at(i).id, g.edge_at(i).id);
      EXPECT_EQ(s.edge_at(i).u, g.edge_at(i).u);
    }
  }
}

TEST(Connectivity, TwoParallelEdgesAre2Connected) {
  Graph g(2);
  g.add_edge(0, 1);
  EXPECT_FALSE(is_2connected(g));
  g.add_edge(0, 1);
  EXPECT_TRUE(is_2connected(g));
}

TEST(Connectivity, K4WithDoubledSpoke) {
  Graph g = gen::complete(4);
  g.add_edge(0, 1);
  EXPECT_TRUE(is_3connected(g));
}

TEST(Connectivity, PathIsNot2Connected) {
  EXPECT_FALSE(is_2connected(gen::path(3)));
  EXPECT_FALSE(is_3connected(gen::cycle(6)));
  EXPECT_TRUE(is_3connected(gen::petersen()));
}

TEST(Separations, K4HasNoSmallSeparation) { EXPECT_TRUE(enumerate_separations(gen::complete(4), 2).empty()); }

TEST(Separations, TwoTrianglesSharingAnEdge) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 3);
  auto seps = enumerate_separations(g, 2);
  ASSERT_EQ(seps.size(), 1u);
  EXPECT_EQ(seps[0].cut, (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(is_separation(g, seps[0]));
}

TEST(Separations, FiveCycleOnlyNonadjacentPairs) {
  // adjacent cuts leave one side that spans all five vertices
  auto seps = enumerate_separations(gen::cycle(5), 2);
  ASSERT_EQ(seps.size(), 5u);
  for (auto& s : seps) {
    ASSERT_EQ(s.cut.size(), 2u);
    int d = (s.cut[1] - s.cut[0] + 5) % 5;
    EXPECT_TRUE(d == 2 || d == 3);
  }
}

TEST(Bridges, K4OffATriangle) {
  Graph g = gen::complete(4);
  std::vector<EdgeId> tri;
  for (auto& e : g.edges())
    if (e.u != 3 && e.v != 3) tri.push_back(e.id);
  auto bs = bridges_of(g, tri);
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_EQ(bs[0].feet.size(), 3u);
  EXPECT_EQ(bs[0].interior, std::vector<Vertex>{3});
}

TEST(Bridges, ChordIsTrivialBridge) {
  Graph g = gen::cycle(6);
  EdgeId chord = g.add_edge(0, 3);
  auto bs = bridges_of(g, {0, 1, 2, 3, 4, 5});
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_TRUE(bs[0].trivial());
  EXPECT_EQ(bs[0].edges, std::vector<EdgeId>{chord});
}

TEST(Bridges, ThetaOffOnePath) {
  Graph g = gen::theta_subdivided(2, 2, 2);
  std::vector<EdgeId> one;
  for (auto& e : g.edges())
    if (e.u == 2 || e.v == 2) one.push_back(e.id);
  auto bs = bridges_of(g, one);
  // one bridge per remaining path
  ASSERT_EQ(bs.size(), 2u);
  for (auto& b : bs) {
    EXPECT_EQ(b.feet, (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(b.edges.size(), 2u);
  }
}

TEST(LongestPath, Examples) {
  EXPECT_EQ(longest_path(gen::cycle(7)).edges, 6);
  EXPECT_EQ(longest_path(gen::complete(4)).edges, 3);
  auto p = longest_path(gen::petersen());
  EXPECT_EQ(p.edges, 9);
  EXPECT_TRUE(is_path(gen::petersen(), p.by_edges));
}

TEST(LongestPath, MatchesOracleOnSmallGraphs) {
  for (int n = 3; n <= 6; ++n)
    for (auto& s : all_graphs(n)) {
      Graph g = s.to_graph();
      if (!is_connected(g)) continue;
      EXPECT_EQ(longest_path(g).edges, oracle::longest_path_edges(g));
    }
}

TEST(LongestPath, WeightedPrefersHeavyEdges) {
  Graph g = gen::cycle(5);
  g.set_weight(2, 10);
  auto p = longest_path(g);
  EXPECT_EQ(p.weight, 13);
  EXPECT_EQ(weight_of(g, p.by_weight.edges), 13);
}

TEST(Planarity, K4K5K33) {
  auto k4 = planar_embed(gen::complete(4));
  ASSERT_TRUE(k4.planar);
  EXPECT_TRUE(embedding_valid(*k4.embedding));
  EXPECT_EQ(k4.embedding->face_count(), 4);
  auto k5 = planar_embed(gen::complete(5));
  ASSERT_FALSE(k5.planar);
  EXPECT_EQ(k5.witness->kind, "K5");
  Graph k33 = gen::subdivide_edge(gen::complete_bipartite(3, 3), 0, 2);
  auto r = planar_embed(k33);
  ASSERT_FALSE(r.planar);
  EXPECT_EQ(r.witness->kind, "K33");
}

TEST(Planarity, FacialCycleRequests) {
  Graph k4 = gen::complete(4);
  EXPECT_TRUE(embed_with_facial_cycle(k4, cycle_from_vertices(k4, {0, 1, 2})));
  EXPECT_FALSE(embed_with_facial_cycle(k4, cycle_from_vertices(k4, {0, 1, 2, 3})));
  Graph cube(8);
  for (int i = 0; i < 8; ++i)
    for (int b : {1, 2, 4})
      if (!(i & b)) cube.add_edge(i, i | b);
  auto p = embed_with_facial_cycle(cube, cycle_from_vertices(cube, {0, 1, 3, 2}));
  ASSERT_TRUE(p);
  EXPECT_GE(p->face_with_edges(cycle_from_vertices(cube, {0, 1, 3, 2}).edges), 0);
  EXPECT_EQ(p->face_count(), 6);
}

TEST(GraphIo, RoundTripAndErrors) {
  std::istringstream in("# comment\n3 3\n0 1 2\n1 2\n2 0 4\n");
  Graph g = read_graph(in);
  EXPECT_EQ(g.total_weight(), 7);
  std::istringstream back(write_graph(g));
  Graph h = read_graph(back);
  EXPECT_TRUE(isomorphic(g, h, true));
  for (const char* bad : {"3 2\n0 1\n", "2 1\n0 0\n", "2 1\n0 5\n", "2 1\n0 1 0\n", "x\n", ""}) {
    std::istringstream s(bad);
    EXPECT_THROW(read_graph(s), Error) << bad;
  }
}

TEST(Iso, SmallGraphCounts) {
  // connected graphs on 5 and 6 vertices: 21 and 112
  for (auto [n, want] : std::vector<std::pair<int, int>>{{5, 21}, {6, 112}}) {
    int c = 0;
    for (auto& s : all_graphs(n)) c += is_connected(s.to_graph());
    EXPECT_EQ(c, want);
  }
  EXPECT_TRUE(isomorphic(gen::prism(), gen::complete_bipartite(3, 3)) == false);
  EXPECT_TRUE(isomorphic(gen::cycle(4), gen::complete_bipartite(2, 2)));
}
