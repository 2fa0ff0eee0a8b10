#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "thetalab/bonds.hpp"
#include "thetalab/io.hpp"

using namespace thetalab;

TEST(Bond, K4StarAndTriangle) {
  Graph g = gen::complete(4);
  EdgeId a = g.edges_between(0, 1)[0], b = g.edges_between(0, 2)[0], c = g.edges_between(0, 3)[0];
  auto r = bond_through(g, a, b, c);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(verify_bond(g, *r.value, {a, b, c}));
  auto& s = r.value->side_S;
  EXPECT_TRUE(s == std::vector<Vertex>{0} || s == (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(r.value->cut_edges.size(), 3u);
  // a cut meets every cycle in an even number of edges
  EdgeId x = g.edges_between(1, 2)[0], y = g.edges_between(0, 2)[0];
  EXPECT_TRUE(bond_through(g, a, x, y).none());
}

TEST(Bond, PrismRungs) {
  Graph g = gen::prism();
  std::vector<EdgeId> rungs;
  for (int i = 0; i < 3; ++i) rungs.push_back(g.edges_between(i, i + 3)[0]);
  auto r = bond_through(g, rungs[0], rungs[1], rungs[2]);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.value->cut_edges.size(), 3u);
  EXPECT_TRUE(verify_bond(g, *r.value, rungs));
}

TEST(Bond, VerifyRejectsDisconnectedSide) {
  Graph g = gen::cycle(6);
  BondCertificate b{{0, 3}, {}};
  for (auto& e : g.edges())
    if ((e.u == 0 || e.u == 3) != (e.v == 0 || e.v == 3)) b.cut_edges.push_back(e.id);
  EXPECT_FALSE(verify_bond(g, b));
  BondCertificate ok{{0, 1, 2}, {}};
  for (auto& e : g.edges())
    if ((e.u <= 2) != (e.v <= 2)) ok.cut_edges.push_back(e.id);
  EXPECT_TRUE(verify_bond(g, ok));
}

TEST(Reduction, K4SubdividedByFive) {
  Graph g = gen::complete(4);
  EdgeId a = g.edges_between(0, 1)[0], b = g.edges_between(0, 2)[0], c = g.edges_between(0, 3)[0];
  auto star = subdivide_for_theta(g, a, b, c, 5);
  EXPECT_EQ(star.subdivided.vertex_count(), 16);
  EXPECT_EQ(star.weighted.total_weight(), 18);
  EXPECT_TRUE(contains_theta(star.subdivided, 5, 5, 5).found());
  EXPECT_TRUE(oracle::has_theta(star.weighted, 5, 5, 5));
  EdgeId x = g.edges_between(1, 2)[0], y = g.edges_between(0, 2)[0];
  auto tri = subdivide_for_theta(g, a, x, y, 5);
  EXPECT_TRUE(contains_theta(tri.subdivided, 5, 5, 5).none());
  EXPECT_FALSE(oracle::has_theta(tri.weighted, 5, 5, 5));
}

TEST(Reduction, DefaultParameter) {
  Graph g = gen::prism();
  EXPECT_EQ(bond_reduction_t(g), 10);
  auto eq = bond_theta_equivalence(g, 0, 1, 2);
  EXPECT_EQ(eq.t, 10);
  EXPECT_TRUE(eq.agrees());
}

TEST(Reduction, AgreesOnSmallGraphs) {
  int bonds = 0, runs = 0;
  for (int n = 3; n <= 5; ++n)
    for (auto& s : all_graphs(n)) {
      Graph g = s.to_graph();
      if (!is_connected(g) || g.edge_count() < 3) continue;
      int m = g.edge_count();
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          for (int k = j + 1; k < m; ++k) {
            EdgeId e = g.edge_at(i).id, f = g.edge_at(j).id, h = g.edge_at(k).id;
            auto eq = bond_theta_equivalence(g, e, f, h);
            ASSERT_TRUE(eq.agrees()) << write_graph(g) << e << " " << f << " " << h;
            EXPECT_EQ(eq.bond.found(), oracle::has_bond_through(g, e, f, h));
            bonds += eq.bond.found();
            ++runs;
          }
    }
  EXPECT_GT(bonds, 0);
  EXPECT_GT(runs, bonds);
}

TEST(Reduction, DoubledCutEdge) {
  // two triangles joined by a doubled edge 2-3; choosing both copies forces S = {0, 1, 2}
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 3);
  EdgeId p = g.add_edge(2, 3), q = g.add_edge(2, 3);
  auto none = bond_theta_equivalence(g, p, q, 0);
  EXPECT_TRUE(none.agrees());
  EXPECT_TRUE(none.bond.none());
  Graph h = g;
  EdgeId r = h.add_edge(0, 4);
  auto one = bond_theta_equivalence(h, p, q, r);
  ASSERT_TRUE(one.agrees());
  ASSERT_TRUE(one.bond.found());
  EXPECT_EQ(one.bond.value->cut_edges.size(), 3u);
}
