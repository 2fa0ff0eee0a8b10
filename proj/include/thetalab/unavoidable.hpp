#ifndef THETALAB_UNAVOIDABLE_HPP
#define THETALAB_UNAVOIDABLE_HPP

#include <cmath>
#include <functional>

#include "patterns.hpp"

namespace thetalab {

/// Either a structure or a vertex of degree above the bound.
template <class T>
struct OrDegree {
  std::optional<T> structure;
  Vertex high_degree = -1;
  bool degree() const { return high_degree >= 0; }
};

inline Vertex max_degree_vertex(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) > g.degree(best)) best = v;
  return best;
}

/// An induced path all of whose pairs of nonconsecutive vertices are nonadjacent.
inline bool is_induced_path(const Graph& g, const PathWitness& p) {
  if (!is_path(g, p)) return false;
  for (size_t i = 0; i < p.vertices.size(); ++i)
    for (size_t j = i + 2; j < p.vertices.size(); ++j)
      if (g.adjacent(p.vertices[i], p.vertices[j])) return false;
  return true;
}

/**
 * \brief Induced path of length p+1 from v, or a vertex of degree > d.
 * A vertex of degree > d is reported even when the order bound fails.
 */
inline OrDegree<PathWitness> induced_path_or_degree(const Graph& g, int d, int p, Vertex v) {
  require(g.is_simple() && is_connected(g), "induced_path_or_degree: need a simple connected graph");
  require(d >= 1 && p >= 0 && v >= 0 && v < g.vertex_count(), "induced_path_or_degree: bad arguments");
  OrDegree<PathWitness> out;
  Vertex m = max_degree_vertex(g);
  if (g.degree(m) > d) {
    out.high_degree = m;
    return out;
  }
  long double bound = 1, layer = d;
  for (int i = 0; i < p; ++i) {
    bound += layer;
    layer *= (d - 1);
  }
  require((long double)g.vertex_count() > bound,
          "induced_path_or_degree: graph too small for the order bound");
  // BFS layers are nonempty up to p+1; a shortest path is induced
  std::vector<int> dist(g.vertex_count(), -1), via(g.vertex_count(), -1);
  std::vector<Vertex> q{v};
  dist[v] = 0;
  Vertex far = -1;
  for (size_t h = 0; h < q.size() && far < 0; ++h)
    for (int i : g.incident(q[h])) {
      Vertex y = g.edge_at(i).other(q[h]);
      if (dist[y] >= 0) continue;
      dist[y] = dist[q[h]] + 1;
      via[y] = i;
      if (dist[y] == p + 1) {
        far = y;
        break;
      }
      q.push_back(y);
    }
  require(far >= 0, "internal: BFS layer p+1 empty");
  PathWitness path;
  for (Vertex y = far; y != v; y = g.edge_at(via[y]).other(y)) {
    path.vertices.push_back(y);
    path.edges.push_back(g.edge_at(via[y]).id);
  }
  path.vertices.push_back(v);
  path = reversed(path);
  path.weight = weight_of(g, path.edges);
  out.structure = path;
  return out;
}

inline bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

namespace detail {

/// Tree with degree-2 vertices suppressed: reduced neighbor -> tree path.
struct ReducedTree {
  const Graph& t;
  std::vector<std::vector<std::pair<Vertex, PathWitness>>> adj;

  explicit ReducedTree(const Graph& tree) : t(tree), adj(tree.vertex_count()) {
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      if (t.degree(v) == 2) continue;
      for (int i : t.incident(v)) {
        PathWitness p{{v}, {}, 0};
        Vertex prev = v;
        int ei = i;
        while (true) {
          Vertex y = t.edge_at(ei).other(prev);
          p.vertices.push_back(y);
          p.edges.push_back(t.edge_at(ei).id);
          if (t.degree(y) != 2) break;
          int nxt = t.incident(y)[0] == ei ? t.incident(y)[1] : t.incident(y)[0];
          prev = y;
          ei = nxt;
        }
        p.weight = weight_of(t, p.edges);
        adj[v].push_back({p.vertices.back(), p});
      }
    }
  }

  const PathWitness& link(Vertex a, Vertex b) const {
    for (auto& [y, p] : adj[a])
      if (y == b) return p;
    throw Error("internal: not reduced neighbors");
  }
};

/// Reduced path of t+1 vertices, the first t branch vertices (degree >= 3).
inline std::optional<std::vector<Vertex>> reduced_walk(const ReducedTree& rt, int t) {
  const Graph& g = rt.t;
  std::vector<Vertex> walk;
  std::function<bool(Vertex, Vertex)> go = [&](Vertex x, Vertex parent) {
    walk.push_back(x);
    if ((int)walk.size() == t + 1) return true;
    if (g.degree(x) >= 3)
      for (auto& [y, p] : rt.adj[x])
        if (y != parent && go(y, x)) return true;
    walk.pop_back();
    return false;
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 3 && go(v, -1)) return walk;
  return std::nullopt;
}

/// Comb witness from a reduced walk p_0..p_t with branch vertices p_0..p_{t-1}.
inline PatternWitness comb_from_walk(const ReducedTree& rt, const std::vector<Vertex>& w, int t) {
  PatternWitness pw;
  pw.pattern = "comb_t";
  pw.parameter = t;
  pw.pattern_graph = pattern::comb(t);
  pw.branch.assign(2 * t + 2, -1);
  pw.branch_paths.assign(pw.pattern_graph.edge_count(), PathWitness{});
  for (int i = 1; i <= t; ++i) pw.branch[i] = w[i - 1];
  pw.branch[t + 1] = w[t];
  std::vector<Vertex> spare;
  for (auto& [y, p] : rt.adj[w[0]])
    if (y != w[1]) spare.push_back(y);
  pw.branch[0] = spare[0];
  pw.branch[t + 2] = spare[1];
  for (int i = 2; i <= t; ++i)
    for (auto& [y, p] : rt.adj[w[i - 1]])
      if (y != w[i - 2] && y != w[i]) {
        pw.branch[t + 1 + i] = y;
        break;
      }
  const Graph& h = pw.pattern_graph;
  for (int i = 0; i < h.edge_count(); ++i)
    pw.branch_paths[i] = rt.link(pw.branch[h.edge_at(i).u], pw.branch[h.edge_at(i).v]);
  return pw;
}

}  // namespace detail

/** \brief comb_t subdivision in a tree, or a vertex of degree > d. */
inline OrDegree<PatternWitness> comb_or_degree(const Graph& tree, int d, int t) {
  require(is_tree(tree), "comb_or_degree: input is not a tree");
  require(d >= 2 && t >= 2, "comb_or_degree: need d, t >= 2");
  int leaves = 0;
  for (Vertex v = 0; v < tree.vertex_count(); ++v)
    if (tree.degree(v) == 1) ++leaves;
  require((long double)leaves >= std::pow((long double)d, t), "comb_or_degree: fewer than d^t leaves");
  OrDegree<PatternWitness> out;
  Vertex m = max_degree_vertex(tree);
  if (tree.degree(m) > d) {
    out.high_degree = m;
    return out;
  }
  detail::ReducedTree rt(tree);
  auto w = detail::reduced_walk(rt, t);
  require(w.has_value(), "internal: no reduced walk of length t");
  out.structure = detail::comb_from_walk(rt, *w, t);
  require(verify_subdivision(tree, *out.structure), "internal: comb witness invalid");
  return out;
}

/// Two paths X = x_1..x_m (0..m-1), Y = y_1..y_m (m..2m-1), matching x_i y_{pi(i)}.
inline Graph matching_graph(const std::vector<int>& pi) {
  int m = static_cast<int>(pi.size());
  Graph g(2 * m);
  for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i + 1 < m; ++i) g.add_edge(m + i, m + i + 1);
  for (int i = 0; i < m; ++i) g.add_edge(i, m + pi[i]);
  return g;
}

namespace detail {

/// Indices (into pi) of n+1 matching edges forming a chain or an antichain.
inline std::vector<int> chain_or_antichain(const std::vector<int>& pi, int n) {
  int m = static_cast<int>(pi.size());
  auto prec = [&](int i, int j) { return i < j && pi[i] < pi[j]; };
  std::vector<int> level(m, 0);  // 1-based peel index
  std::vector<std::vector<int>> f;
  int left = m;
  while (left > 0) {
    std::vector<int> layer;
    for (int i = 0; i < m; ++i) {
      if (level[i]) continue;
      bool maximal = true;
      for (int j = 0; j < m && maximal; ++j)
        if (!level[j] && prec(i, j)) maximal = false;
      if (maximal) layer.push_back(i);
    }
    for (int i : layer) level[i] = static_cast<int>(f.size()) + 1;
    left -= static_cast<int>(layer.size());
    f.push_back(layer);
  }
  for (auto& layer : f)
    if ((int)layer.size() > n) return std::vector<int>(layer.begin(), layer.begin() + n + 1);
  require((int)f.size() >= n + 1, "internal: peeling gave neither a large layer nor n+1 layers");
  // each element of F_i (i >= 2) lies below some element of F_{i-1}
  std::vector<int> chain{f[n][0]};
  for (int i = n - 1; i >= 0; --i) {
    int e = chain.back(), pick = -1;
    for (int c : f[i])
      if (prec(e, c)) {
        pick = c;
        break;
      }
    require(pick >= 0, "internal: chain cannot be extended");
    chain.push_back(pick);
  }
  return chain;
}

/// Ladder witness from rungs sorted along X; Y order may be monotone either way.
inline PatternWitness ladder_from_rungs(const Graph& g, const PathWitness& x, const PathWitness& y,
                                        const std::vector<std::pair<int, int>>& rungs,
                                        const std::vector<PathWitness>& rung_paths, int size) {
  PatternWitness pw;
  pw.pattern = "L_t";
  pw.parameter = size;
  pw.pattern_graph = pattern::ladder(size);
  pw.branch.assign(2 * size, -1);
  for (int k = 0; k < size; ++k) {
    pw.branch[k] = x.vertices[rungs[k].first];
    pw.branch[size + k] = y.vertices[rungs[k].second];
  }
  const Graph& h = pw.pattern_graph;
  pw.branch_paths.assign(h.edge_count(), PathWitness{});
  for (int i = 0; i < h.edge_count(); ++i) {
    Vertex a = h.edge_at(i).u, b = h.edge_at(i).v;
    PathWitness p;
    if (b == a + size) {
      p = rung_paths[a];
    } else if (a < size) {
      p = subpath(g, x, rungs[a].first, rungs[b].first);
    } else {
      int ia = rungs[a - size].second, ib = rungs[b - size].second;
      p = ia < ib ? subpath(g, y, ia, ib) : reversed(subpath(g, y, ib, ia));
    }
    pw.branch_paths[i] = p;
  }
  return pw;
}

}  // namespace detail

/** \brief L_{n+1} subdivision in the two-path-plus-matching graph of pi. */
inline PatternWitness ladder_from_matching(int m, const std::vector<int>& pi, int n) {
  require((int)pi.size() == m, "ladder_from_matching: permutation size differs from m");
  std::vector<int> seen(m, 0);
  for (int p : pi) {
    require(p >= 0 && p < m && !seen[p], "ladder_from_matching: not a permutation");
    seen[p] = 1;
  }
  require(n >= 1 && (long long)m > (long long)n * n, "ladder_from_matching: need m > n^2");
  Graph g = matching_graph(pi);
  auto pick = detail::chain_or_antichain(pi, n);
  std::sort(pick.begin(), pick.end());
  PathWitness x = path_from_vertices(g, [&] {
    std::vector<Vertex> v(m);
    for (int i = 0; i < m; ++i) v[i] = i;
    return v;
  }());
  PathWitness y = path_from_vertices(g, [&] {
    std::vector<Vertex> v(m);
    for (int i = 0; i < m; ++i) v[i] = m + i;
    return v;
  }());
  std::vector<std::pair<int, int>> rungs;
  std::vector<PathWitness> rp;
  for (int i : pick) {
    rungs.push_back({i, pi[i]});
    rp.push_back(path_from_vertices(g, {i, m + pi[i]}));
  }
  auto pw = detail::ladder_from_rungs(g, x, y, rungs, rp, n + 1);
  require(verify_subdivision(g, pw), "internal: ladder witness invalid");
  return pw;
}

/** \brief W_t or L_t^+ topological minor by exact search. */
inline Search<PatternWitness> wheel_or_ladder(const Graph& g, int t, Budget& budget) {
  require(is_3connected(g), "wheel_or_ladder: graph must be 3-connected");
  require(t >= 3, "wheel_or_ladder: t >= 3");
  bool unknown = false;
  auto w = topological_minor(g, pattern::wheel(t), budget, "W_n", t);
  if (w.found()) return w;
  unknown |= w.unknown();
  Budget b2{budget.limit};
  auto l = topological_minor(g, pattern::ladder_plus(t), b2, "L_t_plus", t);
  if (l.found()) return l;
  unknown |= l.unknown();
  return Search<PatternWitness>::miss(unknown);
}

inline Search<PatternWitness> wheel_or_ladder(const Graph& g, int t) {
  Budget b;
  return wheel_or_ladder(g, t, b);
}

/** \brief A wheel minor: rim cycle, connected hub set off the rim, spokes to distinct rim vertices. */
struct WheelMinor {
  PathWitness rim;
  std::vector<Vertex> hub_set;
  std::vector<EdgeId> spokes;
};

inline bool verify_wheel_minor(const Graph& g, const WheelMinor& w) {
  if (!is_cycle(g, w.rim) || w.hub_set.empty()) return false;
  std::set<Vertex> rim(w.rim.vertices.begin(), w.rim.vertices.end());
  std::set<Vertex> hub(w.hub_set.begin(), w.hub_set.end());
  for (Vertex v : hub)
    if (rim.count(v)) return false;
  if (!is_connected(induced(g, w.hub_set).graph)) return false;
  std::set<Vertex> feet;
  for (EdgeId id : w.spokes) {
    if (!g.has_edge(id)) return false;
    const Edge& e = g.edge(id);
    Vertex h = hub.count(e.u) ? e.u : e.v, r = e.other(h);
    if (!hub.count(h) || !rim.count(r) || !feet.insert(r).second) return false;
  }
  return true;
}

struct PipelineResult {
  std::string outcome;  // "wheel", "ladder_plus", "short_ladder", "no_comb"
  std::optional<PatternWitness> witness;
  Graph tree;
};

/**
 * \brief Wheel minor -> tree T -> (high degree: W_t | comb_r -> matching -> ladder -> L_t^+).
 * The comb step searches comb_r directly, without the d^r leaf bound.
 */
inline PipelineResult wheel_to_ladder_pipeline(const Graph& g, const WheelMinor& wm, int t, int r) {
  require(verify_wheel_minor(g, wm), "wheel_to_ladder_pipeline: invalid wheel minor");
  require(t >= 3 && r >= 2, "wheel_to_ladder_pipeline: need t >= 3, r >= 2");
  int n = g.vertex_count();
  std::vector<char> inhub(n, 0), onrim(n, 0);
  for (Vertex v : wm.hub_set) inhub[v] = 1;
  for (Vertex v : wm.rim.vertices) onrim[v] = 1;
  // spanning tree of the hub set plus spokes, pruned to the minimal subtree
  std::vector<EdgeId> tedges;
  {
    std::vector<char> seen(n, 0);
    std::vector<Vertex> q{wm.hub_set[0]};
    seen[wm.hub_set[0]] = 1;
    for (size_t h = 0; h < q.size(); ++h)
      for (int i : g.incident(q[h])) {
        Vertex y = g.edge_at(i).other(q[h]);
        if (!inhub[y] || seen[y]) continue;
        seen[y] = 1;
        tedges.push_back(g.edge_at(i).id);
        q.push_back(y);
      }
  }
  tedges.insert(tedges.end(), wm.spokes.begin(), wm.spokes.end());
  while (true) {
    std::map<Vertex, int> deg;
    for (EdgeId id : tedges) {
      deg[g.edge(id).u]++;
      deg[g.edge(id).v]++;
    }
    size_t before = tedges.size();
    std::erase_if(tedges, [&](EdgeId id) {
      const Edge& e = g.edge(id);
      return (deg[e.u] == 1 && !onrim[e.u]) || (deg[e.v] == 1 && !onrim[e.v]);
    });
    if (tedges.size() == before) break;
  }
  Subgraph ts = extract(g, tedges);
  PipelineResult out;
  out.tree = ts.graph;
  const Graph& tr = ts.graph;
  auto lift = [&](PathWitness p) {
    for (auto& v : p.vertices) v = ts.original[v];
    return p;
  };
  std::vector<int> rim_pos(n, -1);
  for (int i = 0; i < (int)wm.rim.vertices.size(); ++i) rim_pos[wm.rim.vertices[i]] = i;
  // tree path from a vertex to a leaf inside the branch through neighbor edge i
  auto to_leaf = [&](Vertex from, int edge_index) {
    PathWitness p{{from}, {}, 0};
    Vertex prev = from, cur = tr.edge_at(edge_index).other(from);
    p.vertices.push_back(cur);
    p.edges.push_back(tr.edge_at(edge_index).id);
    while (tr.degree(cur) > 1) {
      for (int j : tr.incident(cur)) {
        Vertex y = tr.edge_at(j).other(cur);
        if (y == prev) continue;
        prev = cur;
        cur = y;
        p.vertices.push_back(cur);
        p.edges.push_back(tr.edge_at(j).id);
        break;
      }
    }
    return p;
  };
  Vertex m = max_degree_vertex(tr);
  if (tr.degree(m) >= t) {
    std::vector<PathWitness> legs;
    for (int j = 0; j < t; ++j) legs.push_back(lift(to_leaf(m, tr.incident(m)[j])));
    std::sort(legs.begin(), legs.end(), [&](const PathWitness& a, const PathWitness& b) {
      return rim_pos[a.vertices.back()] < rim_pos[b.vertices.back()];
    });
    PatternWitness pw;
    pw.pattern = "W_n";
    pw.parameter = t;
    pw.pattern_graph = pattern::wheel(t);
    pw.branch.assign(t + 1, -1);
    pw.branch[0] = ts.original[m];
    for (int j = 0; j < t; ++j) pw.branch[j + 1] = legs[j].vertices.back();
    const Graph& h = pw.pattern_graph;
    pw.branch_paths.assign(h.edge_count(), PathWitness{});
    for (int i = 0; i < h.edge_count(); ++i) {
      Vertex a = h.edge_at(i).u, b = h.edge_at(i).v;
      if (a == 0 || b == 0) {
        pw.branch_paths[i] = legs[(a == 0 ? b : a) - 1];
        continue;
      }
      // rim arc from branch a to branch b in rim order
      pw.branch_paths[i] = cycle_arc(g, wm.rim, rim_pos[pw.branch[a]], rim_pos[pw.branch[b]]);
    }
    require(verify_subdivision(g, pw), "internal: pipeline wheel witness invalid");
    out.outcome = "wheel";
    out.witness = pw;
    return out;
  }
  // comb_r with cubic spine vertices a_1..a_r; teeth run to rim leaves
  detail::ReducedTree rt(tr);
  auto walk = detail::reduced_walk(rt, r);
  if (!walk) {
    out.outcome = "no_comb";
    return out;
  }
  // spine X through the cubic vertices p_0..p_{r-1}; one tooth from each
  std::vector<Vertex>& wv = *walk;
  PathWitness spine{{wv[0]}, {}, 0};
  for (int i = 0; i + 1 < r; ++i) spine = concat(tr, spine, rt.link(wv[i], wv[i + 1]));
  std::vector<PathWitness> teeth;
  for (int i = 0; i < r; ++i) {
    Vertex a = wv[i];
    for (int j : tr.incident(a)) {
      Vertex y = tr.edge_at(j).other(a);
      bool spine_dir = false;
      for (int s : {i - 1, i + 1})
        if (s >= 0 && s < r && rt.link(a, wv[s]).vertices[1] == y) spine_dir = true;
      if (spine_dir) continue;
      teeth.push_back(lift(to_leaf(a, j)));
      break;
    }
  }
  PathWitness xpath = lift(spine);
  // open Y = rim minus the edge entering the first foot in rim order (any edge works)
  int k = static_cast<int>(wm.rim.vertices.size());
  std::vector<int> feet_pos;
  for (auto& tooth : teeth) feet_pos.push_back(rim_pos[tooth.vertices.back()]);
  int start = *std::min_element(feet_pos.begin(), feet_pos.end());
  PathWitness ypath = cycle_arc(g, wm.rim, start, (start + k - 1) % k);
  std::vector<int> ypos(n, -1);
  for (int i = 0; i < (int)ypath.vertices.size(); ++i) ypos[ypath.vertices[i]] = i;
  std::vector<int> xpos(n, -1);
  for (int i = 0; i < (int)xpath.vertices.size(); ++i) xpos[xpath.vertices[i]] = i;
  // permutation: rank of foot i along Y
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return ypos[teeth[a].vertices.back()] < ypos[teeth[b].vertices.back()];
  });
  std::vector<int> pi(r);
  for (int rank = 0; rank < r; ++rank) pi[order[rank]] = rank;
  int nn = 1;
  while ((long long)(nn + 1) * (nn + 1) < r) ++nn;
  auto pick = detail::chain_or_antichain(pi, nn);
  std::sort(pick.begin(), pick.end());
  std::vector<std::pair<int, int>> rungs;
  std::vector<PathWitness> rp;
  for (int i : pick) {
    rungs.push_back({xpos[teeth[i].vertices.front()], ypos[teeth[i].vertices.back()]});
    rp.push_back(teeth[i]);
  }
  int size = nn + 1;
  if (size < t + 2) {
    auto pw = detail::ladder_from_rungs(g, xpath, ypath, rungs, rp, size);
    require(verify_subdivision(g, pw), "internal: pipeline ladder witness invalid");
    out.outcome = "short_ladder";
    out.witness = pw;
    return out;
  }
  // drop the outer rungs; close the Y rail around the rim
  std::vector<std::pair<int, int>> inner(rungs.begin() + 1, rungs.begin() + t + 1);
  std::vector<PathWitness> inner_p(rp.begin() + 1, rp.begin() + t + 1);
  auto pw = detail::ladder_from_rungs(g, xpath, ypath, inner, inner_p, t);
  pw.pattern = "L_t_plus";
  pw.pattern_graph = pattern::ladder_plus(t);
  Vertex y1 = pw.branch[t], yt = pw.branch[2 * t - 1];
  int a = rim_pos[y1], b = rim_pos[yt];
  PathWitness arc1 = cycle_arc(g, wm.rim, a, b), arc2 = cycle_arc(g, wm.rim, b, a);
  // the closing arc is the one avoiding the other Y-branch vertices
  std::set<Vertex> ys;
  for (int i = t + 1; i < 2 * t - 1; ++i) ys.insert(pw.branch[i]);
  auto clean = [&](const PathWitness& p) {
    for (Vertex v : p.vertices)
      if (ys.count(v)) return false;
    return true;
  };
  PathWitness close = clean(arc1) ? arc1 : reversed(arc2);
  pw.branch_paths.push_back(close);
  require(verify_subdivision(g, pw), "internal: pipeline L_t^+ witness invalid");
  out.outcome = "ladder_plus";
  out.witness = pw;
  return out;
}

}  // namespace thetalab

#endif
