#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "thetalab/ef_theta.hpp"
#include "thetalab/heavy_cpath.hpp"
#include "thetalab/io.hpp"

using namespace thetalab;

namespace {

Graph two_triangles() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 3);
  return g;
}

PlaneGraph rim_outer(const Graph& g, int k) {
  std::vector<Vertex> rim(k);
  std::iota(rim.begin(), rim.end(), 1);
  auto p = embed_with_facial_cycle(g, cycle_from_vertices(g, rim));
  EXPECT_TRUE(p);
  return *p;
}

}  // namespace

TEST(ContainsTheta, K23IsTheta222) {
  Graph g = gen::complete_bipartite(2, 3);
  auto r = contains_theta(g, 2, 2, 2);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(verify_theta(g, *r.value, 2, 2, 2));
  std::set<Vertex> br{r.value->branch_u, r.value->branch_v};
  for (Vertex v : br) EXPECT_EQ(g.degree(v), 3);
}

TEST(ContainsTheta, CyclesHaveNone) {
  for (int n = 3; n <= 9; ++n) EXPECT_TRUE(contains_theta(gen::cycle(n), 1, 2, 5).none());
}

TEST(ContainsTheta, ParallelEdges) {
  Graph g = gen::theta_weighted(4, 5, 6);
  auto r = contains_theta(g, 4, 4, 4);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(std::set<Vertex>({r.value->branch_u, r.value->branch_v}), std::set<Vertex>({0, 1}));
  EXPECT_TRUE(contains_theta(g, 5, 5, 5).none());
}

TEST(ContainsTheta, K4Has122) {
  Graph g = gen::complete(4);
  ASSERT_TRUE(oracle::has_theta(g, 1, 2, 2));
  auto r = contains_theta(g, 1, 2, 2);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(verify_theta(g, *r.value, 1, 2, 2));
  EXPECT_TRUE(contains_theta(g, 2, 2, 2).none());
}

TEST(ContainsTheta, AgreesWithOracleOnWeightedSamples) {
  gen::Rng rng(3);
  for (int i = 0; i < 150; ++i) {
    int n = std::uniform_int_distribution<int>(4, 8)(rng);
    Graph g = gen::random_2connected(n, n / 2, rng);
    gen::random_weights(g, 1, 3, rng);
    Weight a = std::uniform_int_distribution<Weight>(1, 4)(rng);
    Weight b = std::uniform_int_distribution<Weight>(1, 5)(rng);
    Weight c = std::uniform_int_distribution<Weight>(1, 6)(rng);
    auto r = contains_theta(g, a, b, c);
    ASSERT_FALSE(r.unknown());
    EXPECT_EQ(r.found(), oracle::has_theta(g, a, b, c)) << write_graph(g) << a << b << c;
    if (r.found()) EXPECT_TRUE(verify_theta(g, *r.value, a, b, c));
  }
}

TEST(ContainsTheta, HandlesCutVerticesAndMultiedges) {
  // two K_{2,3} blocks sharing a vertex, plus a doubled edge
  Graph g = gen::complete_bipartite(2, 3);
  Vertex base = g.vertex_count();
  for (int i = 0; i < 4; ++i) g.add_vertex();
  auto map = [&](Vertex v) { return v == 0 ? 4 : base + (v > 0 ? v - 1 : 0); };
  Graph h = gen::complete_bipartite(2, 3);
  for (auto& e : h.edges()) g.add_edge(map(e.u), map(e.v));
  g.add_edge(0, 2, 3);
  auto r = contains_theta(g, 2, 2, 3);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(verify_theta(g, *r.value, 2, 2, 3));
  EXPECT_EQ(r.found(), oracle::has_theta(g, 2, 2, 3));
}

TEST(ContainsTheta, BudgetExhaustionIsUnknown) {
  Budget b(3);
  auto r = contains_theta(gen::petersen(), 3, 3, 3, b);
  EXPECT_TRUE(r.unknown());
}

TEST(ThetaAt, FixedBranchPair) {
  Graph g = gen::theta_subdivided(1, 2, 3);
  EXPECT_TRUE(theta_at(g, 0, 1, 1, 2, 3).found());
  // interior vertices have degree 2
  EXPECT_TRUE(theta_at(g, 2, 3, 1, 1, 1).none());
  Graph w = gen::wheel(4);
  auto r = theta_at(w, 0, 1, 1, 2, 2);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(verify_theta(w, *r.value, 1, 2, 2));
}

TEST(LiftTheta, AcrossTwoSeparation) {
  Graph g = two_triangles();
  auto seps = enumerate_separations(g, 2);
  ASSERT_EQ(seps.size(), 1u);
  auto r = lift_theta(g, seps[0], 1, 1, 2);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(verify_theta(g, *r.value, 1, 1, 2));
  std::set<Vertex> touched;
  for (auto& p : r.value->paths) touched.insert(p.vertices.begin(), p.vertices.end());
  EXPECT_EQ(touched.size(), 4u);
  EXPECT_TRUE(lift_theta(g, seps[0], 2, 2, 2).none());
  EXPECT_FALSE(oracle::has_theta(g, 2, 2, 2));
}

TEST(EfTheta, K4MatchingIsException) {
  Graph g = gen::complete(4);
  EdgeId e = g.edges_between(0, 1)[0], f = g.edges_between(2, 3)[0];
  auto r = find_ef_theta(g, e, f);
  EXPECT_EQ(r.kind, EfThetaOutcome::Kind::exception_k4);
}

TEST(EfTheta, FourCycleOppositeEdgesSeparated) {
  Graph g = gen::cycle(4);
  auto r = find_ef_theta(g, 0, 2);
  ASSERT_EQ(r.kind, EfThetaOutcome::Kind::separator);
  ASSERT_EQ(r.separator.size(), 2u);
  EXPECT_TRUE(separates(g, r.separator, 0, 2));
}

TEST(EfTheta, K4PlusVertexGivesTheta) {
  Graph g = gen::complete(4);
  Vertex x = g.add_vertex();
  g.add_edge(x, 0);
  g.add_edge(x, 2);
  EdgeId e = g.edges_between(0, 1)[0], f = g.edges_between(2, 3)[0];
  ASSERT_TRUE(oracle::has_ef_theta(g, e, f));
  auto r = find_ef_theta(g, e, f);
  ASSERT_EQ(r.kind, EfThetaOutcome::Kind::theta);
  EXPECT_TRUE(verify_ef_theta(g, *r.theta, e, f));
}

TEST(EfTheta, CommonEndOfDegreeTwo) {
  // K_4 with the edge 1-2 subdivided by 4; e and f are the two halves
  Graph g = gen::complete(4);
  g = delete_edges(g, {g.edges_between(1, 2)[0]});
  Vertex v = g.add_vertex();
  EdgeId e = g.add_edge(1, v), f = g.add_edge(v, 2);
  auto r = find_ef_theta(g, e, f);
  EXPECT_EQ(r.kind, EfThetaOutcome::Kind::exception_common_end);
  EXPECT_EQ(r.common_end, v);
  EXPECT_FALSE(oracle::has_ef_theta(g, e, f));
}

TEST(EfTheta, SeparatorBeforeCommonEnd) {
  Graph g = gen::cycle(5);
  g.add_edge(0, 2);
  // 3 has degree 2, but {0, 3} already separates 2-3 from 3-4
  auto r = find_ef_theta(g, 2, 3);
  ASSERT_EQ(r.kind, EfThetaOutcome::Kind::separator);
  EXPECT_TRUE(separates(g, r.separator, 2, 3));
}

TEST(HeavyPath, CycleAndPairPaths) {
  Graph g = gen::prism();
  PathWitness p = path_from_vertices(g, {0, 1, 2, 5, 4, 3});
  for (EdgeId id : p.edges) g.set_weight(id, 2);
  Weight t = 5;
  ASSERT_GT(weight_of(g, p.edges), (t - 2) * (t - 2));
  auto c = cycle_from_heavy_path(g, p, t);
  EXPECT_TRUE(is_cycle(g, c));
  EXPECT_GE(weight_of(g, c.edges), t);
  auto q = pair_path_through_cycle(g, c, 0, 4);
  EXPECT_TRUE(is_path(g, q));
  EXPECT_GE(2 * weight_of(g, q.edges), t);
}

TEST(HeavyCPath, UnitWheelHasNone) {
  Graph w = gen::wheel(9);
  EXPECT_TRUE(heavy_cpath_theta(rim_outer(w, 9), 3).none());
  EXPECT_FALSE(oracle::has_theta(w, 3, 3, 3));
}

TEST(HeavyCPath, HeavySpokeGivesTheta) {
  Graph w = gen::wheel(9);
  w.set_weight(w.edges_between(0, 4)[0], 3);
  ASSERT_TRUE(oracle::has_theta(w, 3, 3, 3));
  auto r = heavy_cpath_theta(rim_outer(w, 9), 3);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(verify_theta(w, *r.value, 3, 3, 3));
}

TEST(HeavyCPath, PlantedCPath) {
  // rim 0..8, hubs 9 (rim 0..4) and 10 (rim 4..8); the C-path 0-9-10-8 weighs 2t
  Graph g(11);
  for (int i = 0; i < 9; ++i) g.add_edge(i, (i + 1) % 9);
  for (int i = 0; i <= 4; ++i) g.add_edge(9, i);
  for (int i = 4; i <= 8; ++i) g.add_edge(10, i);
  g.add_edge(9, 10, 2);
  g.set_weight(g.edges_between(0, 9)[0], 2);
  g.set_weight(g.edges_between(8, 10)[0], 2);
  ASSERT_TRUE(is_3connected(g));
  auto pg = embed_with_facial_cycle(g, cycle_from_vertices(g, {0, 1, 2, 3, 4, 5, 6, 7, 8}));
  ASSERT_TRUE(pg);
  auto r = heavy_cpath_theta(*pg, 3);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(verify_theta(g, *r.value, 3, 3, 3));
}
