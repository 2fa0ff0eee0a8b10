#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "thetalab/decompose.hpp"

using namespace thetalab;

namespace {

/// Two copies of base glued on the vertices 0, 1, 2; the second copy keeps its other vertices.
Graph glue_on_triangle(const Graph& a, const Graph& b) {
  Graph g = a;
  std::vector<Vertex> map(b.vertex_count());
  for (Vertex v = 0; v < b.vertex_count(); ++v) map[v] = v < 3 ? v : g.add_vertex();
  for (auto& e : b.edges())
    if (!(e.u < 3 && e.v < 3)) g.add_edge(map[e.u], map[e.v], e.w);
  return g;
}

Evaluation eval(const SumRecipe& r) { return evaluate(r); }

}  // namespace

TEST(KSum, TwoTrianglesMakeC4) {
  Graph t = gen::cycle(3);
  Graph g = k_sum(t, {0, 1}, {0}, t, {0, 1}, {0});
  EXPECT_TRUE(isomorphic(g, gen::cycle(4)));
}

TEST(KSum, TwoK4sOverATriangle) {
  Graph k4 = gen::complete(4);
  std::vector<EdgeId> tri{k4.edges_between(0, 1)[0], k4.edges_between(1, 2)[0], k4.edges_between(2, 0)[0]};
  Graph g = k_sum(k4, {0, 1, 2}, tri, k4, {0, 1, 2}, tri);
  EXPECT_TRUE(isomorphic(g, gen::complete_bipartite(2, 3)));
}

TEST(KSum, GlueEdgesGetWeightOne) {
  Graph host = glue_on_triangle(gen::complete(5), gen::complete(5));
  for (auto& e : std::vector<Edge>(host.edges().begin(), host.edges().end())) host.set_weight(e.id, 5);
  auto w = induced_weights(host, split_on_cut(host, {0, 1, 2}).recipe);
  for (auto& l : w.links)
    for (EdgeId id : l.parent_edges) EXPECT_EQ(w.nodes[l.parent].edge(id).w, 1);
  for (auto& e : w.nodes[1].edges())
    if (host.has_edge(e.id) && !std::count(w.links[0].child_edges.begin(), w.links[0].child_edges.end(), e.id))
      EXPECT_EQ(e.w, 5);
}

TEST(SplitOnCut, K4MinusEdge) {
  Graph g = gen::complete(4);
  g = delete_edges(g, {g.edges_between(2, 3)[0]});
  auto s = split_on_cut(g, {0, 1});
  ASSERT_EQ(s.recipe.nodes.size(), 2u);
  // the real edge 0-1 lands on one side next to its glue copy
  for (auto& n : s.recipe.nodes) EXPECT_TRUE(isomorphic(simplify(n), gen::cycle(3)));
  EXPECT_TRUE(isomorphic(eval(s.recipe).graph, g));
}

TEST(SplitOnCut, K33ThreeCutFlagsStarSide) {
  Graph g = gen::complete_bipartite(3, 3);
  auto s = split_on_cut(g, {0, 1, 2});
  EXPECT_TRUE(isomorphic(eval(s.recipe).graph, g));
  // a side that is a single vertex plus its three edges is K_{1,3}, plus glue it is K_4
  int k4_sides = 0;
  for (auto& n : s.recipe.nodes) k4_sides += isomorphic(simplify(n), gen::complete(4));
  EXPECT_GE(k4_sides, 1);
  EXPECT_FALSE(s.minor_of_g[0] && s.minor_of_g[1]);
}

TEST(SplitOnCut, ThreeCutRoundTrip) {
  Graph g = glue_on_triangle(gen::complete(5), gen::complete(5));
  ASSERT_TRUE(is_3connected(g));
  auto s = split_on_cut(g, {0, 1, 2});
  EXPECT_TRUE(isomorphic(eval(s.recipe).graph, g));
}

TEST(S2Decompose, TwoTrianglesOnE) {
  Graph g(4);
  EdgeId e = g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 3);
  auto r = s2_decompose(g, e);
  EXPECT_TRUE(isomorphic(simplify(r.nodes[0]), gen::path(2)));
  EXPECT_EQ(r.links.size(), 2u);
  EXPECT_TRUE(isomorphic(eval(r).graph, g));
}

TEST(S2Decompose, ThreeConnectedIsItsOwnBase) {
  Graph g = gen::complete(4);
  auto r = s2_decompose(g, 0);
  EXPECT_TRUE(r.links.empty());
  EXPECT_TRUE(isomorphic(r.nodes[0], g));
}

TEST(S2Decompose, Theta222) {
  // with e on one path the other two paths are the summands
  Graph g = gen::theta_subdivided(2, 2, 2);
  auto r = s2_decompose(g, 0);
  EXPECT_EQ(r.links.size(), 2u);
  EXPECT_TRUE(isomorphic(simplify(r.nodes[0]), gen::cycle(3)));
  EXPECT_TRUE(isomorphic(eval(r).graph, g));
}

TEST(S2Decompose, RoundTripOnSmallGraphs) {
  for (int n = 3; n <= 6; ++n)
    for (auto& s : all_graphs(n)) {
      Graph g = s.to_graph();
      if (!is_2connected(g)) continue;
      for (auto& e : g.edges()) {
        auto r = s2_decompose(g, e.id);
        ASSERT_TRUE(isomorphic(eval(r).graph, g));
      }
    }
}

TEST(S3Decompose, K5HasNoSummands) {
  auto r = s3_decompose(gen::complete(5), {0, 1, 2});
  EXPECT_TRUE(r.recipe.links.empty());
}

TEST(S3Decompose, TwoK5s) {
  Graph g = glue_on_triangle(gen::complete(5), gen::complete(5));
  // Z inside the first copy, away from the shared triangle
  auto r = s3_decompose(g, {0, 3, 4});
  EXPECT_EQ(r.recipe.links.size(), 1u);
  EXPECT_TRUE(isomorphic(eval(r.recipe).graph, g));
  EXPECT_TRUE(is_4connected_rel(r.recipe.nodes[0], {0, 1, 2}) || r.recipe.nodes[0].vertex_count() >= 5);
}

TEST(S3Decompose, WheelWithK5OnHubTriangle) {
  Graph w = gen::wheel(6);
  // hub triangle 0, 1, 2 then a K_5 glued on it
  Graph k5 = gen::complete(5);
  Graph g = glue_on_triangle(w, k5);
  ASSERT_TRUE(is_3connected(g));
  auto r = s3_decompose(g, {3, 4, 5});
  EXPECT_GE(r.recipe.links.size(), 1u);
  EXPECT_TRUE(isomorphic(eval(r.recipe).graph, g));
}

TEST(FourConnectedRel, Examples) {
  EXPECT_TRUE(is_4connected_rel(gen::complete(5), {0, 1, 2}));
  Graph g = glue_on_triangle(gen::complete(5), gen::complete(5));
  EXPECT_FALSE(is_4connected_rel(g, {0, 3, 4}));
}

TEST(Chain, TwoVerticesHaveNoChain) {
  Graph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  EXPECT_EQ(chain_decompose(g, 0).a, 0);
  EXPECT_EQ(chain_decompose(gen::complete(4), 0).a, 0);
}

TEST(Chain, LaddersMatchBruteForce) {
  for (int t : {3, 4}) {
    Graph g = gen::ladder(t);
    EdgeId end_rung = g.edges_between(0, t)[0];
    auto c = chain_decompose(g, end_rung);
    EXPECT_EQ(c.a, oracle::chain_length(g, end_rung));
    EXPECT_TRUE(verify_chain(g, end_rung, c.chain));
  }
}

TEST(OperationS, DepthBound) {
  auto k4 = operation_S_tree(gen::complete(4), 0);
  EXPECT_EQ(recipe_depth(k4), 1);
  EXPECT_EQ(k4.nodes.size(), 1u);
  Graph th = gen::theta_subdivided(2, 2, 2);
  auto r = operation_S_tree(th, 0);
  EXPECT_LE(recipe_depth(r), chain_decompose(th, 0).a + 1);
  for (auto& l : r.links)
    if (r.children(l.child).empty()) EXPECT_LE(r.nodes[l.child].vertex_count(), 3);
  EXPECT_TRUE(isomorphic(eval(r).graph, th));
}

TEST(OperationS, SeriesParallelProperty) {
  gen::Rng rng(29);
  for (int i = 0; i < 40; ++i) {
    // series-parallel by repeated subdivision and parallel doubling of a triangle
    Graph g = gen::cycle(3);
    int steps = std::uniform_int_distribution<int>(2, 6)(rng);
    for (int s = 0; s < steps; ++s) {
      auto& e = g.edge_at(std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng));
      if (std::bernoulli_distribution(0.5)(rng)) {
        g = gen::subdivide_edge(g, e.id, 2);
      } else {
        Vertex u = e.u, v = e.v;
        Vertex x = g.add_vertex();
        g.add_edge(u, x);
        g.add_edge(x, v);
      }
    }
    ASSERT_TRUE(is_2connected(g));
    EdgeId e = g.edge_at(0).id;
    auto c = chain_decompose(g, e);
    auto r = operation_S_tree(g, e);
    EXPECT_LE(recipe_depth(r), c.a + 1);
    EXPECT_TRUE(isomorphic(eval(r).graph, g));
  }
}

TEST(Trichotomy, UnitSixCycleIsCaseA) {
  auto r = trichotomy_2sep(gen::cycle(6), 10);
  EXPECT_EQ(r.kind, 'a');
}

TEST(Trichotomy, TwoLongCyclesIsCaseB) {
  Graph g = k_sum(gen::cycle(8), {0, 1}, {0}, gen::cycle(8), {0, 1}, {0});
  auto r = trichotomy_2sep(g, 3);
  EXPECT_EQ(r.kind, 'b');
  EXPECT_GE(r.h_max, 3);
  EXPECT_GE(r.j_max, 3);
}

TEST(Trichotomy, LightlySubdividedK4IsCaseC) {
  // heavy K_4 edges, two edges replaced by unit paths: each 2-separation has one light side
  Graph k4 = gen::complete(4);
  for (auto& e : std::vector<Edge>(k4.edges().begin(), k4.edges().end())) k4.set_weight(e.id, 10);
  Graph g = gen::subdivide_edge(gen::subdivide_edge(k4, 0, 2), 5, 2);
  auto r = trichotomy_2sep(g, 5);
  ASSERT_EQ(r.kind, 'c');
  EXPECT_TRUE(is_3connected(simplify(r.recipe.nodes[0])));
  for (Weight w : r.summand_max) EXPECT_LT(w, 5);
  EXPECT_TRUE(isomorphic(eval(r.recipe).graph, with_unit_weights(g)));
}

TEST(EllBound, Examples) {
  SumRecipe r;
  Graph t = gen::cycle(3);
  r.add_node(t);
  for (EdgeId e = 0; e < 3; ++e) {
    int c = r.add_node(t);
    auto& be = t.edge(e);
    r.links.push_back(SumLink{0, c, 2, {be.u, be.v}, {0, 1}, {e}, {0}});
  }
  auto b = ell_bound_check(r);
  EXPECT_TRUE(b.holds);
  EXPECT_LE(b.ell_total, 8);
  EXPECT_EQ(b.ell_total, oracle::longest_path_edges(eval(r).graph));
  SumRecipe one;
  one.add_node(gen::cycle(5));
  one.add_node(t);
  one.links.push_back(SumLink{0, 1, 2, {0, 1}, {0, 1}, {0}, {0}});
  EXPECT_TRUE(ell_bound_check(one).holds);
}

TEST(EllBound, RandomRecipes) {
  gen::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    auto r = random_s2_recipe(rng, 4, 3, 5);
    auto b = ell_bound_check(r);
    EXPECT_TRUE(b.holds && b.exact);
  }
}
