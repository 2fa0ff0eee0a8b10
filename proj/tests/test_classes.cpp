#include <gtest/gtest.h>

#include "thetalab/classes.hpp"
#include "thetalab/io.hpp"

using namespace thetalab;

namespace {

PlaneGraph with_outer(const Graph& g, const std::vector<Vertex>& outer) {
  auto p = embed_with_facial_cycle(g, cycle_from_vertices(g, outer));
  EXPECT_TRUE(p);
  return *p;
}

std::vector<Vertex> rim(int k) {
  std::vector<Vertex> r(k);
  std::iota(r.begin(), r.end(), 1);
  return r;
}

Graph cube() {
  Graph g(8);
  for (int i = 0; i < 8; ++i)
    for (int b : {1, 2, 4})
      if (!(i & b)) g.add_edge(i, i | b);
  return g;
}

/// 2x3 grid: top 0, 1, 2 and bottom 3, 4, 5.
Graph grid23() {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  for (int i = 0; i < 3; ++i) g.add_edge(i, i + 3);
  return g;
}

std::vector<EdgeId> cycle_edges(const Graph& g, const std::vector<Vertex>& vs) {
  return cycle_from_vertices(g, vs).edges;
}

/// Base with a K4 summand glued by its triangle 0, 1, 2 (or 4-cycle 0, 1, 2, 3) onto the given site.
PhiRecipe glue_k4(const PlaneGraph& base, const std::vector<Vertex>& site) {
  PhiRecipe pr;
  pr.base = base;
  pr.recipe.add_node(base.graph);
  Graph k4 = gen::complete(4);
  int c = pr.recipe.add_node(k4);
  std::vector<Vertex> cv(site.size());
  std::iota(cv.begin(), cv.end(), 0);
  int k = static_cast<int>(site.size());
  pr.recipe.links.push_back(
      SumLink{0, c, k, site, cv, cycle_edges(base.graph, site), cycle_edges(k4, cv)});
  return pr;
}

}  // namespace

TEST(InL, CycleAndK4) {
  auto c4 = in_L(gen::cycle(4), 2, 4);
  EXPECT_TRUE(c4.member());
  auto k4 = in_L(gen::complete(4), 2, 3);
  ASSERT_FALSE(k4.member());
  ASSERT_TRUE(k4.path);
  EXPECT_GE(k4.path->length(), 3);
  Graph heavy = gen::cycle(4);
  heavy.set_weight(0, 2);
  auto h = in_L(heavy, 2, 4);
  EXPECT_FALSE(h.member());
  EXPECT_TRUE(h.edge);
}

TEST(InPr3, UnitWheel) {
  Graph w = gen::wheel(9);
  auto c = in_Pr3(with_outer(w, rim(9)), 3);
  EXPECT_TRUE(c.member()) << c.clause;
  EXPECT_LT(c.max_cpath, 6);
}

TEST(InPr3, SpokeOfWeightR) {
  Graph w = gen::wheel(9);
  EdgeId s = w.edges_between(0, 5)[0];
  w.set_weight(s, 3);
  auto c = in_Pr3(with_outer(w, rim(9)), 3);
  ASSERT_FALSE(c.member());
  ASSERT_TRUE(c.edge);
  EXPECT_EQ(*c.edge, s);
}

TEST(InPr3, PlantedCPath) {
  // rim 0..8, hubs 9 (rim 0..4) and 10 (rim 4..8); the C-path 0-9-10-8 weighs 2r
  Graph g(11);
  for (int i = 0; i < 9; ++i) g.add_edge(i, (i + 1) % 9);
  for (int i = 0; i <= 4; ++i) g.add_edge(9, i);
  for (int i = 4; i <= 8; ++i) g.add_edge(10, i);
  EdgeId mid = g.add_edge(9, 10, 2);
  g.set_weight(g.edges_between(0, 9)[0], 2);
  g.set_weight(g.edges_between(8, 10)[0], 2);
  std::vector<Vertex> outer(9);
  std::iota(outer.begin(), outer.end(), 0);
  auto c = in_Pr3(with_outer(g, outer), 3);
  ASSERT_FALSE(c.member());
  ASSERT_TRUE(c.path);
  EXPECT_GE(weight_of(g, c.path->edges), 6);
  g.set_weight(mid, 1);
  EXPECT_TRUE(in_Pr3(with_outer(g, outer), 3).member());
}

TEST(InPr3, ShortOuterCycle) {
  auto c = in_Pr3(with_outer(gen::wheel(5), rim(5)), 3);
  EXPECT_FALSE(c.member());
  EXPECT_FALSE(c.clause.empty());
}

TEST(Rectangles, GridWheelAndDoubledEdge) {
  Graph g = grid23();
  auto pg = with_outer(g, {0, 1, 2, 5, 4, 3});
  EXPECT_EQ(rectangles(pg).size(), 2u);
  EXPECT_TRUE(rectangles(with_outer(gen::wheel(6), rim(6))).empty());
  // doubling the C edge 4-5 excludes the right square only
  Graph d = grid23();
  d.add_edge(4, 5);
  auto pd = embed_with_facial_cycle(d, cycle_from_vertices(d, {0, 1, 2, 5, 4, 3}));
  ASSERT_TRUE(pd);
  auto rs = rectangles(*pd);
  ASSERT_EQ(rs.size(), 1u);
  std::set<Vertex> xs(rs[0].x.begin(), rs[0].x.end());
  EXPECT_EQ(xs, std::set<Vertex>({0, 1, 3, 4}));
}

TEST(Outerplanar, FanHasHamiltonCycle) {
  Graph g = gen::path(5);
  Vertex a = g.add_vertex();
  for (Vertex v = 0; v < 5; ++v) g.add_edge(a, v);
  auto c = outerplanar_certificate(g);
  ASSERT_TRUE(c.member());
  ASSERT_TRUE(c.hamilton);
  EXPECT_EQ(c.hamilton->length(), 6);
  EXPECT_FALSE(outerplanar_certificate(gen::complete(4)).member());
}

TEST(NearlyOuterplanar, K4AndChordedCycle) {
  Graph k4 = gen::complete(4);
  auto r = nearly_outerplanar(k4);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(verify_nearly_outerplanar(k4, *r.value));
  EXPECT_TRUE(r.value->free_edges.empty());
  // crossing chords whose ends are not adjacent on the cycle
  Graph g = gen::cycle(6);
  g.add_edge(0, 2);
  g.add_edge(1, 4);
  EXPECT_TRUE(nearly_outerplanar(g).none());
  Graph o = gen::cycle(6);
  o.add_edge(0, 2);
  auto ro = nearly_outerplanar(o);
  ASSERT_TRUE(ro.found());
  // only cycle edges can be free
  EXPECT_EQ(ro.value->free_edges.size(), 6u);
}

TEST(Phi, WheelWithK4OnInnerTriangle) {
  auto base = with_outer(gen::wheel(9), rim(9));
  auto chk = build_phi(glue_k4(base, {0, 1, 2}), 3, 4);
  ASSERT_TRUE(chk.member()) << chk.clause;
  EXPECT_EQ(chk.graph->vertex_count(), 11);
  EXPECT_TRUE(is_2connected(*chk.graph));
}

TEST(Phi, OuterFaceSiteRejected) {
  auto base = with_outer(gen::wheel(3), rim(3));
  ASSERT_TRUE(in_Pr(base, 3).member());
  auto chk = build_phi(glue_k4(base, {1, 2, 3}), 3, 4);
  EXPECT_FALSE(chk.member());
  EXPECT_EQ(chk.clause, "3-sum site is not an inner facial triangle");
  auto inner = build_phi(glue_k4(base, {0, 1, 2}), 3, 4);
  EXPECT_TRUE(inner.member()) << inner.clause;
}

TEST(Phi, FourSumOffARectangleRejected) {
  Graph g = cube();
  auto base = with_outer(g, {0, 1, 3, 2});
  ASSERT_TRUE(in_Pr(base, 3).member());
  auto chk = build_phi(glue_k4(base, {4, 5, 7, 6}), 3, 4);
  EXPECT_FALSE(chk.member());
  EXPECT_EQ(chk.clause, "4-sum site is not a rectangle");
}

TEST(Phi, SummandOutsideLRejected) {
  auto base = with_outer(gen::wheel(9), rim(9));
  auto chk = build_phi(glue_k4(base, {0, 1, 2}), 3, 3);
  EXPECT_FALSE(chk.member());
  EXPECT_EQ(chk.node, 1);
}

TEST(Phi, RandomMembersAreDeterministicAndValid) {
  auto a = gen::random_phi(3, 4, 8, 7);
  auto b = gen::random_phi(3, 4, 8, 7);
  EXPECT_EQ(write_graph(a.first), write_graph(b.first));
  int glued = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto [g, pr] = gen::random_phi(3, 4, 8, seed);
    auto chk = build_phi(pr, 3, 4);
    ASSERT_TRUE(chk.member()) << seed << ": " << chk.clause;
    EXPECT_TRUE(isomorphic(*chk.graph, g, true));
    glued += !pr.recipe.links.empty();
  }
  EXPECT_GT(glued, 100);
}

TEST(Classify, Examples) {
  auto c = classify_small_theta(gen::cycle(10), SmallVariant::v12t, 2, 0);
  EXPECT_EQ(c.kind, SmallClassification::in_class);
  auto k = classify_small_theta(gen::complete_bipartite(2, 3), SmallVariant::v22t, 2, 0);
  ASSERT_EQ(k.kind, SmallClassification::theta);
  EXPECT_TRUE(verify_theta(gen::complete_bipartite(2, 3), *k.certificate, 2, 2, 2));
  auto n = classify_small_theta(gen::complete(4), SmallVariant::v22t, 3, 0);
  ASSERT_EQ(n.kind, SmallClassification::neither);
  EXPECT_EQ(n.ell, 3);
  EXPECT_EQ(n.threshold, 36);
  EXPECT_EQ(parse_variant("2tt"), SmallVariant::v2tt);
  EXPECT_FALSE(parse_variant("3tt"));
}

TEST(ClassesCL, RandomMembersRecognized) {
  gen::Rng rng(11);
  int checked = 0;
  for (int i = 0; i < 40 && checked < 12; ++i) {
    auto b = gen::random_C_of_L(3, rng);
    if (b.graph.vertex_count() > 14) continue;
    ++checked;
    auto c = in_C_of_L(b.graph, 3);
    EXPECT_TRUE(c.member()) << write_graph(b.graph) << c.clause;
  }
  EXPECT_GT(checked, 0);
  EXPECT_FALSE(in_C_of_L(gen::complete(4), 3).member());
}

TEST(ClassesO, RandomMembersRecognized) {
  gen::Rng rng(13);
  int checked = 0;
  for (int i = 0; i < 40 && checked < 12; ++i) {
    auto b = gen::random_O(3, rng);
    if (b.graph.vertex_count() > 14) continue;
    ++checked;
    auto c = in_O(b.graph, 3);
    EXPECT_TRUE(c.member()) << write_graph(b.graph) << c.clause;
  }
  EXPECT_GT(checked, 0);
  EXPECT_FALSE(in_O(gen::complete(5), 3).member());
}
