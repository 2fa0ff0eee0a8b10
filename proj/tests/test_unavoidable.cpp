#include <gtest/gtest.h>

#include "thetalab/unavoidable.hpp"

using namespace thetalab;

namespace {

Graph binary_tree(int depth) {
  Graph g(1);
  std::vector<Vertex> layer{0};
  for (int d = 0; d < depth; ++d) {
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (int k = 0; k < 2; ++k) {
        Vertex c = g.add_vertex();
        g.add_edge(v, c);
        next.push_back(c);
      }
    layer = next;
  }
  return g;
}

Graph cube() {
  Graph g(8);
  for (int i = 0; i < 8; ++i)
    for (int b : {1, 2, 4})
      if (!(i & b)) g.add_edge(i, i | b);
  return g;
}

}  // namespace

TEST(InducedPath, StarGivesHighDegree) {
  Graph star(6);
  for (int i = 1; i < 6; ++i) star.add_edge(0, i);
  auto r = induced_path_or_degree(star, 4, 3, 1);
  ASSERT_TRUE(r.degree());
  EXPECT_EQ(r.high_degree, 0);
}

TEST(InducedPath, LongPathFromAnEnd) {
  auto r = induced_path_or_degree(gen::path(100), 2, 3, 0);
  ASSERT_TRUE(r.structure);
  EXPECT_EQ(r.structure->length(), 4);
  EXPECT_EQ(r.structure->vertices.front(), 0);
  EXPECT_TRUE(is_induced_path(gen::path(100), *r.structure));
}

TEST(InducedPath, BinaryTreeFromRoot) {
  Graph t = binary_tree(5);
  auto r = induced_path_or_degree(t, 3, 2, 0);
  ASSERT_TRUE(r.structure);
  EXPECT_EQ(r.structure->length(), 3);
  EXPECT_TRUE(is_induced_path(t, *r.structure));
}

TEST(InducedPath, SmallGraphWithoutHighDegreeErrors) {
  EXPECT_THROW(induced_path_or_degree(gen::cycle(5), 2, 3, 0), Error);
}

TEST(Comb, SpiderHasHighDegree) {
  Graph g(1);
  for (int i = 0; i < 9; ++i) {
    Vertex a = g.add_vertex(), b = g.add_vertex();
    g.add_edge(0, a);
    g.add_edge(a, b);
  }
  auto r = comb_or_degree(g, 2, 3);
  ASSERT_TRUE(r.degree());
  EXPECT_EQ(r.high_degree, 0);
}

TEST(Comb, CaterpillarIsAComb) {
  // spine a_0..a_8 with one tooth on each inner vertex: 9 leaves = 3^2
  int t = 7;
  Graph g = gen::path(t + 2);
  for (int i = 1; i <= t; ++i) g.add_edge(i, g.add_vertex());
  auto r = comb_or_degree(g, 3, 2);
  ASSERT_TRUE(r.structure);
  EXPECT_EQ(r.structure->parameter, 2);
  EXPECT_TRUE(verify_subdivision(g, *r.structure));
  // with d = 2 the spine vertices already have degree 3
  EXPECT_TRUE(comb_or_degree(g, 2, 3).degree());
}

TEST(Comb, BinaryTree) {
  Graph t = binary_tree(5);
  auto r = comb_or_degree(t, 3, 3);
  ASSERT_TRUE(r.structure);
  EXPECT_TRUE(verify_subdivision(t, *r.structure));
  // 32 leaves are fewer than 3^4
  EXPECT_THROW(comb_or_degree(t, 3, 4), Error);
}

TEST(Comb, RandomBinaryTreesVerify) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g(1);
    std::vector<Vertex> leaves{0};
    while (leaves.size() < 16) {
      size_t i = std::uniform_int_distribution<size_t>(0, leaves.size() - 1)(rng);
      Vertex v = leaves[i];
      leaves.erase(leaves.begin() + i);
      for (int k = 0; k < 2; ++k) {
        Vertex c = g.add_vertex();
        g.add_edge(v, c);
        leaves.push_back(c);
      }
    }
    auto r = comb_or_degree(g, 3, 2);
    if (r.structure) EXPECT_TRUE(verify_subdivision(g, *r.structure));
    else EXPECT_GT(g.degree(r.high_degree), 3);
  }
}

TEST(Ladder, IdentityAndReversal) {
  for (int n = 2; n <= 4; ++n) {
    int m = n * n + 1;
    std::vector<int> id(m), rev(m);
    std::iota(id.begin(), id.end(), 0);
    for (int i = 0; i < m; ++i) rev[i] = m - 1 - i;
    for (auto& pi : {id, rev}) {
      auto w = ladder_from_matching(m, pi, n);
      EXPECT_EQ(w.parameter, n + 1);
      EXPECT_TRUE(verify_subdivision(matching_graph(pi), w));
    }
  }
}

TEST(Ladder, RejectsBadInput) {
  EXPECT_THROW(ladder_from_matching(4, {0, 1, 2, 3}, 2), Error);
  EXPECT_THROW(ladder_from_matching(5, {0, 1, 1, 3, 4}, 2), Error);
}

TEST(WheelOrLadder, Examples) {
  auto w = wheel_or_ladder(gen::wheel(6), 6);
  ASSERT_TRUE(w.found());
  EXPECT_EQ(w.value->pattern, "W_n");
  EXPECT_TRUE(wheel_or_ladder(gen::prism(), 4).none());
  Graph c = cube();
  auto l = wheel_or_ladder(c, 4);
  ASSERT_TRUE(l.found());
  EXPECT_EQ(l.value->pattern, "L_t_plus");
  EXPECT_TRUE(verify_subdivision(c, *l.value));
}

TEST(TopologicalMinor, Examples) {
  EXPECT_TRUE(topological_minor(gen::complete(5), gen::complete(4)).found());
  EXPECT_TRUE(topological_minor(cube(), gen::complete(5)).none());
  auto p = topological_minor(gen::petersen(), gen::complete_bipartite(3, 3));
  ASSERT_TRUE(p.found());
  EXPECT_TRUE(verify_subdivision(gen::petersen(), *p.value));
}

TEST(TopologicalMinor, NamedPatterns) {
  Graph lp = pattern::ladder_plus(4);
  auto r = topological_minor(lp, pattern::by_name("L+", 4));
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(topological_minor(gen::wheel(5), pattern::by_name("W", 6)).none());
  EXPECT_TRUE(topological_minor(pattern::wheel_plus(5), pattern::by_name("W", 5)).found());
}

TEST(Pipeline, WheelMinorOfALargeWheel) {
  Graph g = gen::wheel(8);
  WheelMinor wm;
  std::vector<Vertex> rim(8);
  std::iota(rim.begin(), rim.end(), 1);
  wm.rim = cycle_from_vertices(g, rim);
  wm.hub_set = {0};
  for (int i = 1; i <= 8; ++i) wm.spokes.push_back(g.edges_between(0, i)[0]);
  ASSERT_TRUE(verify_wheel_minor(g, wm));
  auto r = wheel_to_ladder_pipeline(g, wm, 5, 3);
  EXPECT_EQ(r.outcome, "wheel");
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(verify_subdivision(g, *r.witness));
}
