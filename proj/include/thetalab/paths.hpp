#ifndef THETALAB_PATHS_HPP
#define THETALAB_PATHS_HPP

#include <climits>
#include <deque>

#include "graph.hpp"

namespace thetalab {

/** \brief Unit-capacity flow on the vertex-split network of a graph. */
class DisjointPaths {
 public:
  /// blocked vertices and edges are removed; sources/sinks may overlap neither.
  DisjointPaths(const Graph& g, const std::vector<Vertex>& sources,
                const std::vector<Vertex>& sinks, const std::vector<char>& blocked = {},
                const std::vector<char>& blocked_edges = {}, int source_cap = 1,
                const std::vector<int>& per_source_cap = {})
      : g_(g) {
    int n = g.vertex_count();
    src_ = 2 * n;
    snk_ = 2 * n + 1;
    head_.assign(2 * n + 2, -1);
    std::vector<char> is_src(n, 0), is_snk(n, 0);
    for (Vertex s : sources) is_src[s] = 1;
    for (Vertex t : sinks) is_snk[t] = 1;
    auto off = [&](Vertex v) { return !blocked.empty() && blocked[v]; };
    std::vector<int> cap(n, source_cap);
    int total = 0;
    for (size_t i = 0; i < sources.size(); ++i) {
      if (!per_source_cap.empty()) cap[sources[i]] = per_source_cap[i];
      total += cap[sources[i]];
    }
    int sink_cap = (sinks.size() == 1 && (source_cap > 1 || !per_source_cap.empty())) ? std::max(total, source_cap) : 1;
    for (Vertex v = 0; v < n; ++v) {
      if (off(v) && !is_src[v] && !is_snk[v]) continue;
      if (is_src[v]) arc(src_, 2 * v + 1, cap[v], -1);
      else if (is_snk[v]) arc(2 * v, snk_, sink_cap, -1);
      else arc(2 * v, 2 * v + 1, 1, -1);
    }
    for (int i = 0; i < g.edge_count(); ++i) {
      if (!blocked_edges.empty() && blocked_edges[i]) continue;
      auto& e = g.edge_at(i);
      for (int d = 0; d < 2; ++d) {
        Vertex a = d ? e.v : e.u, b = d ? e.u : e.v;
        if (off(a) && !is_src[a] && !is_snk[a]) continue;
        if (off(b) && !is_src[b] && !is_snk[b]) continue;
        if (is_snk[a] || is_src[b]) continue;
        arc(2 * a + 1, 2 * b, 1, i);
      }
    }
  }

  int run(int want = INT_MAX) {
    int f = 0;
    while (f < want && augment()) ++f;
    flow_ = f;
    return f;
  }

  /// Decompose the current flow into paths (source to sink).
  std::vector<PathWitness> paths() {
    std::vector<PathWitness> out;
    std::vector<char> used(to_.size(), 0);
    for (int a = head_[src_]; a >= 0; a = next_[a]) {
      if (a & 1) continue;
      int units = flow_on(a);
      for (int k = 0; k < units; ++k) {
        PathWitness p;
        int node = to_[a];
        p.vertices.push_back(node / 2);
        while (node != snk_) {
          int pick = -1;
          for (int b = head_[node]; b >= 0; b = next_[b]) {
            if ((b & 1) || used[b] || flow_on(b) <= 0) continue;
            pick = b;
            break;
          }
          if (pick < 0) break;
          if (cap0_[pick] == 1) used[pick] = 1;
          if (edge_[pick] >= 0) {
            p.edges.push_back(g_.edge_at(edge_[pick]).id);
            p.vertices.push_back(to_[pick] / 2);
          }
          node = to_[pick];
        }
        p.weight = weight_of(g_, p.edges);
        out.push_back(p);
      }
    }
    return out;
  }

 private:
  void arc(int a, int b, int c, int e) {
    to_.push_back(b); cap_.push_back(c); cap0_.push_back(c); edge_.push_back(e);
    next_.push_back(head_[a]); head_[a] = static_cast<int>(to_.size()) - 1;
    to_.push_back(a); cap_.push_back(0); cap0_.push_back(0); edge_.push_back(e);
    next_.push_back(head_[b]); head_[b] = static_cast<int>(to_.size()) - 1;
  }
  int flow_on(int a) const { return cap0_[a] - cap_[a]; }
  bool augment() {
    std::vector<int> via(head_.size(), -1);
    std::deque<int> q{src_};
    via[src_] = -2;
    while (!q.empty() && via[snk_] == -1) {
      int x = q.front();
      q.pop_front();
      for (int a = head_[x]; a >= 0; a = next_[a])
        if (cap_[a] > 0 && via[to_[a]] == -1) {
          via[to_[a]] = a;
          q.push_back(to_[a]);
        }
    }
    if (via[snk_] == -1) return false;
    for (int x = snk_; x != src_;) {
      int a = via[x];
      cap_[a] -= 1;
      cap_[a ^ 1] += 1;
      x = to_[a ^ 1];
    }
    return true;
  }

  const Graph& g_;
  int src_, snk_, flow_ = 0;
  std::vector<int> head_, to_, cap_, cap0_, edge_, next_;
};

/// Number of internally disjoint u-v paths (parallel uv edges count separately).
inline int local_connectivity(const Graph& g, Vertex u, Vertex v, int want = INT_MAX,
                              const std::vector<char>& blocked = {},
                              const std::vector<char>& blocked_edges = {}) {
  DisjointPaths f(g, {u}, {v}, blocked, blocked_edges, 1 << 20);
  return f.run(want);
}

inline std::vector<PathWitness> internally_disjoint_paths(const Graph& g, Vertex u, Vertex v,
                                                          int k,
                                                          const std::vector<char>& blocked = {}) {
  DisjointPaths f(g, {u}, {v}, blocked, {}, 1 << 20);
  if (f.run(k) < k) return {};
  return f.paths();
}

/// k disjoint paths from set A to set B with interiors avoiding A and B.
inline std::vector<PathWitness> fan_paths(const Graph& g, const std::vector<Vertex>& a,
                                          const std::vector<Vertex>& b, int k,
                                          const std::vector<char>& blocked = {},
                                          const std::vector<char>& blocked_edges = {}) {
  DisjointPaths f(g, a, b, blocked, blocked_edges, 1);
  if (f.run(k) < k) return {};
  return f.paths();
}

// --- exact longest paths ------------------------------------------------------

struct PathOpt {
  PathWitness best;
  bool exists = false;
  bool exact = true;
};

namespace detail {

struct PathDfs {
  const Graph& g;
  Budget& budget;
  std::vector<char> used;
  std::vector<char> edge_ok;
  std::vector<Weight> maxin;
  bool by_weight;
  Vertex target;  // -1: any end
  PathWitness cur, best;
  Weight best_score = -1;
  bool stop = false;
  Weight goal = -1;  // stop once reached

  PathDfs(const Graph& gr, Budget& b, bool weight, Vertex t, const std::vector<char>& blocked,
          const std::vector<char>& blocked_edges)
      : g(gr), budget(b), by_weight(weight), target(t) {
    int n = g.vertex_count();
    used.assign(n, 0);
    if (!blocked.empty())
      for (Vertex v = 0; v < n; ++v) used[v] = blocked[v];
    edge_ok.assign(g.edge_count(), 1);
    if (!blocked_edges.empty())
      for (int i = 0; i < g.edge_count(); ++i) edge_ok[i] = !blocked_edges[i];
    maxin.assign(n, 0);
    for (int i = 0; i < g.edge_count(); ++i) {
      if (!edge_ok[i]) continue;
      auto& e = g.edge_at(i);
      Weight s = by_weight ? e.w : 1;
      maxin[e.u] = std::max(maxin[e.u], s);
      maxin[e.v] = std::max(maxin[e.v], s);
    }
  }

  Weight score() const { return by_weight ? cur.weight : cur.length(); }

  Weight bound(Vertex x, bool& target_ok) {
    std::vector<Vertex> q{x};
    std::vector<char> seen(g.vertex_count(), 0);
    seen[x] = 1;
    Weight add = 0;
    target_ok = target < 0;
    for (size_t h = 0; h < q.size(); ++h) {
      Vertex y = q[h];
      for (int i : g.incident(y)) {
        if (!edge_ok[i]) continue;
        Vertex z = g.edge_at(i).other(y);
        if (seen[z] || used[z]) continue;
        seen[z] = 1;
        add += maxin[z];
        if (z == target) {
          target_ok = true;
          continue;  // paths end at the target
        }
        q.push_back(z);
      }
    }
    return score() + add;
  }

  void record() {
    if (target >= 0 && cur.vertices.back() != target) return;
    if (cur.edges.empty()) return;
    if (score() > best_score) {
      best_score = score();
      best = cur;
      if (goal >= 0 && best_score >= goal) stop = true;
    }
  }

  void go(Vertex x) {
    if (stop) return;
    if (!budget.tick()) {
      stop = true;
      return;
    }
    record();
    if (x == target) return;
    bool ok;
    if (bound(x, ok) <= best_score || !ok) return;
    // heaviest first
    std::vector<int> order;
    for (int i : g.incident(x))
      if (edge_ok[i] && !used[g.edge_at(i).other(x)]) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (g.edge_at(a).w != g.edge_at(b).w) return g.edge_at(a).w > g.edge_at(b).w;
      return a < b;
    });
    for (int i : order) {
      Vertex y = g.edge_at(i).other(x);
      if (used[y]) continue;
      used[y] = 1;
      cur.vertices.push_back(y);
      cur.edges.push_back(g.edge_at(i).id);
      cur.weight += g.edge_at(i).w;
      go(y);
      cur.weight -= g.edge_at(i).w;
      cur.edges.pop_back();
      cur.vertices.pop_back();
      used[y] = 0;
      if (stop) return;
    }
  }

  void from(Vertex s) {
    if (used[s]) return;
    used[s] = 1;
    cur = PathWitness{{s}, {}, 0};
    go(s);
    used[s] = 0;
  }
};

}  // namespace detail

/// Max-weight s-t path (s != t) avoiding blocked vertices/edge-indices.
inline PathOpt heaviest_path(const Graph& g, Vertex s, Vertex t, Budget& budget,
                             const std::vector<char>& blocked = {},
                             const std::vector<char>& blocked_edges = {}, Weight goal = -1) {
  std::vector<char> bl = blocked;
  if (!bl.empty()) bl[s] = bl[t] = 0;
  detail::PathDfs d(g, budget, true, t, bl, blocked_edges);
  d.goal = goal;
  d.from(s);
  PathOpt r;
  r.exists = d.best_score >= 0;
  r.best = d.best;
  r.exact = !budget.exhausted();
  return r;
}

inline PathOpt heaviest_path(const Graph& g, Vertex s, Vertex t) {
  Budget b;
  return heaviest_path(g, s, t, b);
}

struct LongestPath {
  Weight weight = 0;  // max total weight
  int edges = 0;      // max number of edges
  PathWitness by_weight, by_edges;
  bool exact = true;
};

/// Exact longest path by edge count and by weight.
inline LongestPath longest_path(const Graph& g, Budget& budget) {
  LongestPath r;
  int n = g.vertex_count();
  for (int mode = 0; mode < 2; ++mode) {
    detail::PathDfs d(g, budget, mode == 1, -1, {}, {});
    if (mode == 0) d.goal = n - 1;
    if (n > 0) {
      d.best = PathWitness{{0}, {}, 0};
      d.best_score = 0;
    }
    for (Vertex s = 0; s < n && !d.stop; ++s) d.from(s);
    if (mode == 0) {
      r.edges = static_cast<int>(d.best_score < 0 ? 0 : d.best_score);
      r.by_edges = d.best;
    } else {
      r.weight = d.best_score < 0 ? 0 : d.best_score;
      r.by_weight = d.best;
    }
  }
  r.exact = !budget.exhausted();
  return r;
}

inline LongestPath longest_path(const Graph& g) {
  Budget b;
  return longest_path(g, b);
}

/// Reachable vertices from s avoiding blocked ones.
inline std::vector<char> reachable(const Graph& g, Vertex s, const std::vector<char>& blocked,
                                   const std::vector<char>& blocked_edges = {}) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> q{s};
  seen[s] = 1;
  for (size_t h = 0; h < q.size(); ++h)
    for (int i : g.incident(q[h])) {
      if (!blocked_edges.empty() && blocked_edges[i]) continue;
      Vertex y = g.edge_at(i).other(q[h]);
      if (seen[y] || (!blocked.empty() && blocked[y])) continue;
      seen[y] = 1;
      q.push_back(y);
    }
  return seen;
}

/// Subpath of p between positions i <= j.
inline PathWitness subpath(const Graph& g, const PathWitness& p, int i, int j) {
  PathWitness q;
  q.vertices.assign(p.vertices.begin() + i, p.vertices.begin() + j + 1);
  q.edges.assign(p.edges.begin() + i, p.edges.begin() + j);
  q.weight = weight_of(g, q.edges);
  return q;
}

/// Concatenate a path ending at x with a path starting at x.
inline PathWitness concat(const Graph& g, PathWitness a, const PathWitness& b) {
  require(!a.vertices.empty() && !b.vertices.empty() && a.vertices.back() == b.vertices.front(),
          "paths do not meet");
  a.vertices.insert(a.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
  a.weight = weight_of(g, a.edges);
  return a;
}

/// Arc of a cycle between positions i and j going forward (i -> j).
inline PathWitness cycle_arc(const Graph& g, const PathWitness& c, int i, int j) {
  int k = static_cast<int>(c.vertices.size());
  PathWitness p;
  p.vertices.push_back(c.vertices[i]);
  for (int x = i; x != j; x = (x + 1) % k) {
    p.edges.push_back(c.edges[x]);
    p.vertices.push_back(c.vertices[(x + 1) % k]);
  }
  p.weight = weight_of(g, p.edges);
  return p;
}

}  // namespace thetalab

#endif
