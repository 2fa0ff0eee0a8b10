#ifndef THETALAB_ISO_HPP
#define THETALAB_ISO_HPP

#include <functional>
#include <unordered_set>

#include "graph.hpp"

namespace thetalab {

/** \brief Simple graph on at most 32 vertices as adjacency bitmasks. */
struct SmallGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;

  bool has(int a, int b) const { return (adj[a] >> b) & 1u; }
  void set(int a, int b) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  int edge_count() const {
    int m = 0;
    for (auto r : adj) m += __builtin_popcount(r);
    return m / 2;
  }
  Graph to_graph() const {
    Graph g(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (has(a, b)) g.add_edge(a, b);
    return g;
  }
  static SmallGraph from_graph(const Graph& g) {
    SmallGraph s;
    s.n = g.vertex_count();
    s.adj.assign(s.n, 0);
    for (auto& e : g.edges()) s.set(e.u, e.v);
    return s;
  }
};

namespace detail {

struct Canon {
  const SmallGraph& g;
  std::vector<std::uint32_t> best;
  std::vector<int> best_order;
  bool have = false;

  explicit Canon(const SmallGraph& gr) : g(gr) {}

  // ordered partition as vector of cells
  using Part = std::vector<std::vector<int>>;

  void refine(Part& p) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> cell_of(g.n);
      for (int c = 0; c < (int)p.size(); ++c)
        for (int v : p[c]) cell_of[v] = c;
      Part q;
      for (auto& cell : p) {
        if (cell.size() == 1) {
          q.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> sig;
        for (int v : cell) {
          std::vector<int> cnt(p.size(), 0);
          for (int u = 0; u < g.n; ++u)
            if (g.has(v, u)) cnt[cell_of[u]]++;
          sig.push_back({cnt, v});
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> cur{sig[0].second};
        for (size_t i = 1; i < sig.size(); ++i) {
          if (sig[i].first != sig[i - 1].first) {
            q.push_back(cur);
            cur.clear();
            changed = true;
          }
          cur.push_back(sig[i].second);
        }
        q.push_back(cur);
      }
      p = std::move(q);
    }
  }

  void leaf(const Part& p) {
    std::vector<int> order;
    for (auto& c : p) order.push_back(c[0]);
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    std::vector<std::uint32_t> code(g.n, 0);
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        if (g.has(order[i], order[j])) code[i] |= 1u << j;
    if (!have || code < best) {
      best = code;
      best_order = order;
      have = true;
    }
  }

  bool twins(int a, int b) const {
    std::uint32_t ma = g.adj[a] & ~(1u << b), mb = g.adj[b] & ~(1u << a);
    return ma == mb;
  }

  void search(Part p) {
    refine(p);
    int target = -1;
    for (int c = 0; c < (int)p.size(); ++c)
      if (p[c].size() > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(p);
      return;
    }
    std::vector<int> tried;
    for (int v : p[target]) {
      bool skip = false;
      for (int u : tried)
        if (twins(u, v)) skip = true;
      if (skip) continue;
      tried.push_back(v);
      Part q;
      for (int c = 0; c < (int)p.size(); ++c) {
        if (c != target) {
          q.push_back(p[c]);
          continue;
        }
        q.push_back({v});
        std::vector<int> rest;
        for (int u : p[c])
          if (u != v) rest.push_back(u);
        q.push_back(rest);
      }
      search(q);
    }
  }
};

}  // namespace detail

/// Canonical relabelling; equal codes iff isomorphic.
inline std::vector<std::uint32_t> canonical_code(const SmallGraph& g) {
  if (g.n == 0) return {};
  detail::Canon c(g);
  std::vector<int> all(g.n);
  std::iota(all.begin(), all.end(), 0);
  c.search({all});
  auto code = c.best;
  code.push_back(static_cast<std::uint32_t>(g.n));
  return code;
}

inline SmallGraph canonical_form(const SmallGraph& g) {
  auto code = canonical_code(g);
  SmallGraph s;
  s.n = g.n;
  s.adj.assign(code.begin(), code.begin() + g.n);
  return s;
}

struct CodeHash {
  size_t operator()(const std::vector<std::uint32_t>& v) const {
    size_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

/// All simple graphs on n vertices up to isomorphism (by vertex augmentation).
inline const std::vector<SmallGraph>& all_graphs(int n) {
  static std::map<int, std::vector<SmallGraph>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<SmallGraph> out;
  if (n <= 1) {
    SmallGraph g;
    g.n = n;
    g.adj.assign(n, 0);
    out.push_back(g);
  } else {
    std::unordered_set<std::vector<std::uint32_t>, CodeHash> seen;
    for (auto& h : all_graphs(n - 1)) {
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        SmallGraph g;
        g.n = n;
        g.adj = h.adj;
        g.adj.push_back(0);
        for (int u = 0; u < n - 1; ++u)
          if ((mask >> u) & 1u) g.set(u, n - 1);
        auto code = canonical_code(g);
        if (seen.insert(code).second) out.push_back(canonical_form(g));
      }
    }
  }
  return cache[n] = out;
}

/// Multigraph isomorphism; weighted compares edge weight multisets per pair.
inline bool isomorphic(const Graph& a, const Graph& b, bool weighted = false) {
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto table = [&](const Graph& g) {
    std::vector<std::vector<std::vector<Weight>>> t(n, std::vector<std::vector<Weight>>(n));
    for (auto& e : g.edges()) {
      Weight w = weighted ? e.w : 1;
      t[e.u][e.v].push_back(w);
      t[e.v][e.u].push_back(w);
    }
    for (auto& r : t)
      for (auto& c : r) std::sort(c.begin(), c.end());
    return t;
  };
  auto ta = table(a), tb = table(b);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return a.degree(x) > a.degree(y); });
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> go = [&](int k) {
    if (k == n) return true;
    int x = order[k];
    for (int y = 0; y < n; ++y) {
      if (used[y] || a.degree(x) != b.degree(y)) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int x2 = order[j];
        if (ta[x][x2] != tb[y][map[x2]]) ok = false;
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (go(k + 1)) return true;
      used[y] = 0;
      map[x] = -1;
    }
    return false;
  };
  return go(0);
}

}  // namespace thetalab

#endif
