// Definition-level brute force used to cross-check the library.
#ifndef THETALAB_TEST_ORACLES_HPP
#define THETALAB_TEST_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "thetalab/graph.hpp"

namespace oracle {

using thetalab::EdgeId;
using thetalab::Graph;
using thetalab::Vertex;
using thetalab::Weight;

struct RawPath {
  std::uint64_t inner = 0;  // interior vertices
  std::uint64_t edges = 0;  // edge indices
  Weight w = 0;
};

/// Every simple u-v path, as masks.
inline std::vector<RawPath> all_uv_paths(const Graph& g, Vertex u, Vertex v) {
  std::vector<RawPath> out;
  std::vector<char> on(g.vertex_count(), 0);
  RawPath cur;
  std::function<void(Vertex)> go = [&](Vertex x) {
    if (x == v) {
      out.push_back(cur);
      return;
    }
    for (int i : g.incident(x)) {
      auto& e = g.edge_at(i);
      Vertex y = e.other(x);
      if (on[y]) continue;
      on[y] = 1;
      auto save = cur;
      cur.edges |= 1ULL << i;
      cur.w += e.w;
      if (y != v) cur.inner |= 1ULL << y;
      go(y);
      cur = save;
      on[y] = 0;
    }
  };
  on[u] = 1;
  go(u);
  return out;
}

/// theta_{a,b,c} by trying all triples of paths between all vertex pairs.
inline bool has_theta(const Graph& g, Weight a, Weight b, Weight c) {
  std::array<Weight, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      auto ps = all_uv_paths(g, u, v);
      size_t k = ps.size();
      for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
          if ((ps[i].inner & ps[j].inner) || (ps[i].edges & ps[j].edges)) continue;
          for (size_t l = j + 1; l < k; ++l) {
            if ((ps[l].inner & (ps[i].inner | ps[j].inner)) || (ps[l].edges & (ps[i].edges | ps[j].edges))) continue;
            std::array<Weight, 3> w{ps[i].w, ps[j].w, ps[l].w};
            std::sort(w.begin(), w.end());
            if (w[0] >= t[0] && w[1] >= t[1] && w[2] >= t[2]) return true;
          }
        }
    }
  return false;
}

/// ef-theta: e and f on different paths of a theta whose third path has length >= 2.
inline bool has_ef_theta(const Graph& g, EdgeId e, EdgeId f) {
  std::uint64_t me = 1ULL << g.index_of(e), mf = 1ULL << g.index_of(f);
  int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      auto ps = all_uv_paths(g, u, v);
      for (auto& p : ps) {
        if (!(p.edges & me)) continue;
        for (auto& q : ps) {
          if (!(q.edges & mf) || (q.edges & me) || (p.edges & mf)) continue;
          if ((p.inner & q.inner) || (p.edges & q.edges)) continue;
          for (auto& r : ps) {
            if ((r.inner & (p.inner | q.inner)) || (r.edges & (p.edges | q.edges))) continue;
            if (__builtin_popcountll(r.edges) >= 2) return true;
          }
        }
      }
    }
  return false;
}

/// Longest path by edge count, plain DFS from every vertex.
inline int longest_path_edges(const Graph& g) {
  int best = 0;
  std::vector<char> on(g.vertex_count(), 0);
  std::function<void(Vertex, int)> go = [&](Vertex x, int len) {
    best = std::max(best, len);
    for (int i : g.incident(x)) {
      Vertex y = g.edge_at(i).other(x);
      if (on[y]) continue;
      on[y] = 1;
      go(y, len + 1);
      on[y] = 0;
    }
  };
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    on[s] = 1;
    go(s, 0);
    on[s] = 0;
  }
  return best;
}

/// Vertices touched by an edge mask.
inline std::uint64_t touched(const Graph& g, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (int i = 0; i < g.edge_count(); ++i)
    if ((mask >> i) & 1) out |= (1ULL << g.edge_at(i).u) | (1ULL << g.edge_at(i).v);
  return out;
}

/**
 * \brief a(G,e) straight from the definition: longest strictly growing sequence of edge sets
 * A_1 c A_2 c ... containing e, each (A_i, E - A_i) a 2-separation, cut pairs all distinct and
 * distinct from the ends of e.
 */
inline int chain_length(const Graph& g, EdgeId e) {
  int m = g.edge_count();
  std::uint64_t all = (m == 64) ? ~0ULL : ((1ULL << m) - 1), full_v = (1ULL << g.vertex_count()) - 1;
  int ei = g.index_of(e);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> prefixes;  // edge mask, cut mask
  for (std::uint64_t a = 0; a <= all; ++a) {
    if (!((a >> ei) & 1) || a == all) continue;
    std::uint64_t va = touched(g, a), vb = touched(g, all & ~a);
    if (va == full_v || vb == full_v) continue;
    std::uint64_t cut = va & vb;
    if (__builtin_popcountll(cut) != 2) continue;
    prefixes.push_back({a, cut});
  }
  std::uint64_t e_pair = (1ULL << g.edge(e).u) | (1ULL << g.edge(e).v);
  int best = 0;
  std::vector<std::uint64_t> used{e_pair};
  std::function<void(std::uint64_t, int)> go = [&](std::uint64_t cur, int len) {
    best = std::max(best, len);
    for (auto& [a, cut] : prefixes) {
      if ((a & cur) != cur || a == cur) continue;
      if (std::find(used.begin(), used.end(), cut) != used.end()) continue;
      used.push_back(cut);
      go(a, len + 1);
      used.pop_back();
    }
  };
  go(0, 0);
  return best;
}

/// Bond through the three edges: edge set F with G - F disconnected and minimal, by subset search.
inline bool has_bond_through(const Graph& g, EdgeId e, EdgeId f, EdgeId h) {
  int m = g.edge_count(), n = g.vertex_count();
  auto comps = [&](std::uint64_t removed) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
    int c = n;
    for (int i = 0; i < m; ++i) {
      if ((removed >> i) & 1) continue;
      int a = find(g.edge_at(i).u), b = find(g.edge_at(i).v);
      if (a != b) {
        p[a] = b;
        --c;
      }
    }
    return c;
  };
  std::uint64_t need = (1ULL << g.index_of(e)) | (1ULL << g.index_of(f)) | (1ULL << g.index_of(h));
  int base = comps(0);
  for (std::uint64_t F = 0; F < (1ULL << m); ++F) {
    if ((F & need) != need || comps(F) == base) continue;
    bool minimal = true;
    for (int i = 0; i < m && minimal; ++i)
      if (((F >> i) & 1) && comps(F & ~(1ULL << i)) != base) minimal = false;
    if (minimal) return true;
  }
  return false;
}

/// All dissections of the n-gon (all 2-connected simple outerplanar graphs on n labelled-in-order vertices).
inline std::vector<Graph> polygon_dissections(int n) {
  std::vector<std::pair<int, int>> diag;
  for (int a = 0; a < n; ++a)
    for (int b = a + 2; b < n; ++b)
      if (!(a == 0 && b == n - 1)) diag.push_back({a, b});
  auto cross = [](std::pair<int, int> x, std::pair<int, int> y) {
    auto in = [&](int p) { return p > x.first && p < x.second; };
    if (x.first == y.first || x.first == y.second || x.second == y.first || x.second == y.second) return false;
    return in(y.first) != in(y.second);
  };
  std::vector<Graph> out;
  std::vector<int> chosen;
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == diag.size()) {
      Graph g(n);
      for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
      for (int d : chosen) g.add_edge(diag[d].first, diag[d].second);
      out.push_back(g);
      return;
    }
    go(i + 1);
    for (int d : chosen)
      if (cross(diag[d], diag[i])) return;
    chosen.push_back(static_cast<int>(i));
    go(i + 1);
    chosen.pop_back();
  };
  go(0);
  return out;
}

}  // namespace oracle

#endif
