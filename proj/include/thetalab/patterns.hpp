#ifndef THETALAB_PATTERNS_HPP
#define THETALAB_PATTERNS_HPP

#include "generators.hpp"
#include "paths.hpp"

namespace thetalab {

/** \brief Subdivision of a named pattern H inside G. */
struct PatternWitness {
  std::string pattern;
  int parameter = 0;
  Graph pattern_graph;
  std::vector<Vertex> branch;               // pattern vertex -> host vertex
  std::vector<PathWitness> branch_paths;    // per pattern edge index, oriented u -> v
};

namespace pattern {

/// Spine a_0..a_{t+1} (0..t+1) and teeth b_i (t+1+i) on a_i, i = 1..t.
inline Graph comb(int t) {
  require(t >= 1, "comb needs t >= 1");
  Graph g(2 * t + 2);
  for (int i = 0; i <= t; ++i) g.add_edge(i, i + 1);
  for (int i = 1; i <= t; ++i) g.add_edge(i, t + 1 + i);
  return g;
}

/// Rails x_i = i, y_i = t + i; rungs x_i y_i.
inline Graph ladder(int t) { return gen::ladder(t); }

/// Ladder plus the edge y_1 y_t closing the Y rail into a cycle.
inline Graph ladder_plus(int t) {
  require(t >= 2, "L_t^+ needs t >= 2");
  Graph g = gen::ladder(t);
  g.add_edge(t, 2 * t - 1);
  return g;
}

/// Hub 0, rim 1..n.
inline Graph wheel(int n) { return gen::wheel(n); }

/// W_{2k}, rim edges x_1x_2 and x_{k+1}x_{k+2} subdivided, new vertices joined.
inline Graph wheel_plus(int k) {
  require(k >= 2, "W_k^+ needs k >= 2");
  int n = 2 * k;
  Graph g(n + 3);
  Vertex s1 = n + 1, s2 = n + 2;
  for (int i = 1; i <= n; ++i) {
    int j = i % n + 1;
    if (i == 1) {
      g.add_edge(1, s1);
      g.add_edge(s1, 2);
    } else if (i == k + 1) {
      g.add_edge(k + 1, s2);
      g.add_edge(s2, k + 2);
    } else {
      g.add_edge(i, j);
    }
  }
  for (int i = 1; i <= n; ++i) g.add_edge(0, i);
  g.add_edge(s1, s2);
  return g;
}

/// W_k with every spoke doubled.
inline Graph wheel_prime(int k) {
  Graph g = gen::wheel(k);
  for (int i = 1; i <= k; ++i) g.add_edge(0, i);
  return g;
}

inline Graph by_name(const std::string& name, int t) {
  if (name == "comb") return comb(t);
  if (name == "L") return ladder(t);
  if (name == "L+") return ladder_plus(t);
  if (name == "W") return wheel(t);
  if (name == "W+") return wheel_plus(t);
  if (name == "W'") return wheel_prime(t);
  throw Error("unknown pattern " + name);
}

}  // namespace pattern

/// Independent check that the witness realizes a subdivision of its pattern in G.
inline bool verify_subdivision(const Graph& g, const PatternWitness& w) {
  const Graph& h = w.pattern_graph;
  if ((int)w.branch.size() != h.vertex_count()) return false;
  if ((int)w.branch_paths.size() != h.edge_count()) return false;
  std::set<Vertex> bset;
  for (Vertex b : w.branch) {
    if (b < 0 || b >= g.vertex_count()) return false;
    bset.insert(b);
  }
  if ((int)bset.size() != h.vertex_count()) return false;
  std::set<Vertex> interiors;
  std::set<EdgeId> used;
  for (int i = 0; i < h.edge_count(); ++i) {
    const Edge& he = h.edge_at(i);
    const PathWitness& p = w.branch_paths[i];
    if (!is_path(g, p) || p.length() < 1) return false;
    Vertex a = w.branch[he.u], b = w.branch[he.v];
    bool ok = (p.vertices.front() == a && p.vertices.back() == b) ||
              (p.vertices.front() == b && p.vertices.back() == a);
    if (!ok) return false;
    for (size_t j = 1; j + 1 < p.vertices.size(); ++j) {
      Vertex x = p.vertices[j];
      if (bset.count(x) || !interiors.insert(x).second) return false;
    }
    for (EdgeId e : p.edges)
      if (!used.insert(e).second) return false;
  }
  return true;
}

namespace detail {

/// Edge order: prefer closing edges, else grow from the most recent branch vertex.
inline std::vector<int> pattern_edge_order(const Graph& h, Vertex start) {
  int m = h.edge_count();
  std::vector<int> order, stamp(h.vertex_count(), -1);
  std::vector<char> done(m, 0);
  int clock = 0;
  stamp[start] = clock++;
  for (int k = 0; k < m; ++k) {
    int pick = -1;
    for (int i = 0; i < m && pick < 0; ++i)
      if (!done[i] && stamp[h.edge_at(i).u] >= 0 && stamp[h.edge_at(i).v] >= 0) pick = i;
    if (pick < 0) {
      int best = -1;
      for (int i = 0; i < m; ++i) {
        if (done[i]) continue;
        int su = stamp[h.edge_at(i).u], sv = stamp[h.edge_at(i).v];
        int s = std::max(su, sv);
        if ((su >= 0) != (sv >= 0) && s > best) {
          best = s;
          pick = i;
        }
      }
    }
    if (pick < 0) {
      for (int i = 0; i < m; ++i)
        if (!done[i]) {
          pick = i;
          break;
        }
      stamp[h.edge_at(pick).u] = clock++;
    }
    done[pick] = 1;
    if (stamp[h.edge_at(pick).u] < 0) stamp[h.edge_at(pick).u] = clock++;
    if (stamp[h.edge_at(pick).v] < 0) stamp[h.edge_at(pick).v] = clock++;
    order.push_back(pick);
  }
  return order;
}

struct MinorSearch {
  const Graph& g;
  const Graph& h;
  Budget& budget;
  std::vector<int> order;
  std::vector<Vertex> phi;
  std::vector<char> used, used_edge;
  std::vector<int> pending;  // per pattern vertex: unrouted incident pattern edges
  std::vector<PathWitness> paths;
  PathWitness cur;
  std::vector<Vertex> h_of;  // host -> pattern vertex or -1

  MinorSearch(const Graph& gr, const Graph& hr, Budget& b) : g(gr), h(hr), budget(b) {}

  bool feasible() {
    for (Vertex a = 0; a < h.vertex_count(); ++a) {
      if (phi[a] < 0 || pending[a] == 0) continue;
      int avail = 0;
      for (int i : g.incident(phi[a])) {
        if (used_edge[i]) continue;
        Vertex y = g.edge_at(i).other(phi[a]);
        if (!used[y] || h_of[y] >= 0) ++avail;
      }
      if (avail < pending[a]) return false;
    }
    return true;
  }

  bool route(int k) {
    if (k == (int)order.size()) return true;
    if (!budget.tick()) return false;
    const Edge& he = h.edge_at(order[k]);
    Vertex a = he.u, b = he.v;
    if (phi[a] < 0) std::swap(a, b);
    cur = PathWitness{{phi[a]}, {}, 0};
    bool fwd = he.u == a;
    return grow(k, a, b, phi[a], fwd);
  }

  bool finish_edge(int k, Vertex a, Vertex b, bool fwd) {
    PathWitness p = cur;
    if (!fwd) p = reversed(p);
    paths[order[k]] = p;
    pending[a]--;
    pending[b]--;
    for (EdgeId id : cur.edges) used_edge[g.index_of(id)] = 1;
    PathWitness saved = cur;
    bool r = feasible() && route(k + 1);
    if (!r) {
      for (EdgeId id : saved.edges) used_edge[g.index_of(id)] = 0;
      pending[a]++;
      pending[b]++;
    }
    cur = saved;
    return r;
  }

  bool grow(int k, Vertex a, Vertex b, Vertex x, bool fwd) {
    if (budget.exhausted()) return false;
    for (int i : g.incident(x)) {
      if (used_edge[i]) continue;
      Vertex y = g.edge_at(i).other(x);
      EdgeId id = g.edge_at(i).id;
      if (phi[b] >= 0) {
        if (y == phi[b]) {
          cur.vertices.push_back(y);
          cur.edges.push_back(id);
          if (finish_edge(k, a, b, fwd)) return true;
          cur.vertices.pop_back();
          cur.edges.pop_back();
          continue;
        }
        if (used[y]) continue;
      } else {
        if (used[y]) continue;
        // y becomes the image of b
        if (g.degree(y) >= h.degree(b)) {
          cur.vertices.push_back(y);
          cur.edges.push_back(id);
          phi[b] = y;
          used[y] = 1;
          h_of[y] = b;
          if (finish_edge(k, a, b, fwd)) return true;
          h_of[y] = -1;
          used[y] = 0;
          phi[b] = -1;
          cur.vertices.pop_back();
          cur.edges.pop_back();
          if (budget.exhausted()) return false;
        }
      }
      // y as an interior vertex
      used[y] = 1;
      cur.vertices.push_back(y);
      cur.edges.push_back(id);
      bool r = grow(k, a, b, y, fwd);
      cur.vertices.pop_back();
      cur.edges.pop_back();
      if (r) return true;
      used[y] = 0;
      if (budget.exhausted()) return false;
    }
    return false;
  }

  Status run(PatternWitness& out) {
    int hn = h.vertex_count();
    if (hn > g.vertex_count() || h.edge_count() > g.edge_count()) return Status::none;
    Vertex start = 0;
    for (Vertex a = 0; a < hn; ++a)
      if (h.degree(a) > h.degree(start)) start = a;
    order = pattern_edge_order(h, start);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      if (g.degree(x) < h.degree(start)) continue;
      phi.assign(hn, -1);
      used.assign(g.vertex_count(), 0);
      used_edge.assign(g.edge_count(), 0);
      h_of.assign(g.vertex_count(), -1);
      pending.assign(hn, 0);
      for (auto& e : h.edges()) {
        pending[e.u]++;
        pending[e.v]++;
      }
      paths.assign(h.edge_count(), PathWitness{});
      phi[start] = x;
      used[x] = 1;
      h_of[x] = start;
      bool ok = feasible() && route(0);
      if (ok) {
        // isolated pattern vertices (none in our patterns) would stay unmapped
        for (Vertex a = 0; a < hn; ++a)
          if (phi[a] < 0) return Status::none;
        out.pattern_graph = h;
        out.branch = phi;
        out.branch_paths = paths;
        for (auto& p : out.branch_paths) p.weight = weight_of(g, p.edges);
        return Status::found;
      }
      if (budget.exhausted()) return Status::unknown;
    }
    return Status::none;
  }
};

}  // namespace detail

/** \brief Exact search for a subdivision of H in G (H connected, no isolated vertices). */
inline Search<PatternWitness> topological_minor(const Graph& g, const Graph& h, Budget& budget,
                                                const std::string& name = "H", int param = 0) {
  require(h.edge_count() > 0 && is_connected(h), "topological_minor: pattern must be connected");
  detail::MinorSearch ms(g, h, budget);
  PatternWitness w;
  Status s = ms.run(w);
  if (s != Status::found) return {s, std::nullopt};
  w.pattern = name;
  w.parameter = param;
  require(verify_subdivision(g, w), "internal: subdivision witness failed verification");
  return Search<PatternWitness>::hit(w);
}

inline Search<PatternWitness> topological_minor(const Graph& g, const Graph& h) {
  Budget b;
  return topological_minor(g, h, b);
}

}  // namespace thetalab

#endif
