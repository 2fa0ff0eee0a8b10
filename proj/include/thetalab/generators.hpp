#ifndef THETALAB_GENERATORS_HPP
#define THETALAB_GENERATORS_HPP

#include <random>

#include "graph.hpp"

namespace thetalab {
namespace gen {

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(int n, Weight w = 1) {
  require(n >= 2, "cycle needs at least two vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, w);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

inline Graph complete_bipartite(int p, int q) {
  Graph g(p + q);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b) g.add_edge(a, p + b);
  return g;
}

/// Hub 0 and rim 1..n.
inline Graph wheel(int n) {
  require(n >= 3, "wheel needs at least three rim vertices");
  Graph g(n + 1);
  for (int i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
  for (int i = 1; i <= n; ++i) g.add_edge(0, i);
  return g;
}

/// Triangular prism (C_n x K_2 for n = 3 by default).
inline Graph prism(int n = 3) {
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(n + i, n + (i + 1) % n);
    g.add_edge(i, n + i);
  }
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

/// Ladder with rails x_i = i, y_i = t + i and t rungs.
inline Graph ladder(int t) {
  Graph g(2 * t);
  for (int i = 0; i + 1 < t; ++i) {
    g.add_edge(i, i + 1);
    g.add_edge(t + i, t + i + 1);
  }
  for (int i = 0; i < t; ++i) g.add_edge(i, t + i);
  return g;
}

/// Weighted theta: branch vertices 0, 1 and one edge of weight a, b, c each.
inline Graph theta_weighted(Weight a, Weight b, Weight c) {
  Graph g(2);
  g.add_edge(0, 1, a);
  g.add_edge(0, 1, b);
  g.add_edge(0, 1, c);
  return g;
}

/// theta_{a,b,c} with paths subdivided into a, b, c unit edges (needs at most one 1).
inline Graph theta_subdivided(int a, int b, int c) {
  Graph g(2);
  for (int len : {a, b, c}) {
    Vertex prev = 0;
    for (int i = 1; i < len; ++i) {
      Vertex x = g.add_vertex();
      g.add_edge(prev, x);
      prev = x;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

/// Subdivide edge id into k unit edges (every piece weight 1).
inline Graph subdivide_edge(const Graph& g, EdgeId id, int k) {
  Graph h(g.vertex_count());
  EdgeId nid = g.next_id();
  for (auto& e : g.edges()) {
    if (e.id != id) {
      h.add_edge_with_id(e.id, e.u, e.v, e.w);
      continue;
    }
    Vertex prev = e.u;
    for (int i = 1; i < k; ++i) {
      Vertex x = h.add_vertex();
      h.add_edge_with_id(i == 1 ? e.id : nid++, prev, x, 1);
      prev = x;
    }
    h.add_edge_with_id(k == 1 ? e.id : nid++, prev, e.v, 1);
  }
  return h;
}

// --- random graphs ---------------------------------------------------------------

using Rng = std::mt19937_64;

/// Random 2-connected simple graph on n vertices via an ear decomposition.
inline Graph random_2connected(int n, int extra_edges, Rng& rng) {
  require(n >= 3, "random_2connected needs n >= 3");
  std::uniform_int_distribution<int> len3(3, std::max(3, std::min(n, 5)));
  int c = std::min(n, len3(rng));
  Graph g(n);
  std::set<std::pair<int, int>> have;
  auto add = [&](int a, int b) {
    auto k = std::make_pair(std::min(a, b), std::max(a, b));
    if (a == b || have.count(k)) return false;
    have.insert(k);
    g.add_edge(a, b);
    return true;
  };
  for (int i = 0; i < c; ++i) add(i, (i + 1) % c);
  int next = c;
  while (next < n) {
    std::uniform_int_distribution<int> pick(0, next - 1);
    int a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    int room = n - next;
    std::uniform_int_distribution<int> ln(1, std::min(room, 3));
    int k = ln(rng);
    int prev = a;
    for (int i = 0; i < k; ++i) {
      add(prev, next);
      prev = next++;
    }
    add(prev, b);
  }
  std::uniform_int_distribution<int> pv(0, n - 1);
  for (int tries = 0, added = 0; added < extra_edges && tries < 50 * (extra_edges + 1); ++tries) {
    int a = pv(rng), b = pv(rng);
    if (add(a, b)) ++added;
  }
  return g;
}

/// Random 3-connected simple graph: random edges until 3-connected.
template <class Is3>
inline Graph random_3connected(int n, Rng& rng, Is3&& is3) {
  require(n >= 4, "random_3connected needs n >= 4");
  while (true) {
    Graph g = random_2connected(n, n / 2, rng);
    std::uniform_int_distribution<int> pv(0, n - 1);
    for (int tries = 0; tries < 4 * n * n; ++tries) {
      if (is3(g)) return g;
      int a = pv(rng), b = pv(rng);
      if (a != b && !g.adjacent(a, b)) g.add_edge(a, b);
    }
  }
}

inline void random_weights(Graph& g, Weight lo, Weight hi, Rng& rng) {
  std::uniform_int_distribution<Weight> d(lo, hi);
  for (auto& e : g.edges()) g.set_weight(e.id, d(rng));
}

}  // namespace gen
}  // namespace thetalab

#endif
