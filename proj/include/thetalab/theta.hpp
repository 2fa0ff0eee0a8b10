#ifndef THETALAB_THETA_HPP
#define THETALAB_THETA_HPP

#include <array>

#include "paths.hpp"

namespace thetalab {

/** \brief Three independent branch_u-branch_v paths meeting the thresholds. */
struct ThetaCertificate {
  Vertex branch_u = -1, branch_v = -1;
  std::array<PathWitness, 3> paths;
  std::array<Weight, 3> thresholds{0, 0, 0};  // ascending
};

inline std::array<Weight, 3> sorted3(Weight a, Weight b, Weight c) {
  std::array<Weight, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

/// Independent check of a theta certificate against (G, w).
inline bool verify_theta(const Graph& g, const ThetaCertificate& c) {
  if (c.branch_u == c.branch_v || c.branch_u < 0 || c.branch_v < 0) return false;
  std::set<Vertex> interior;
  std::set<EdgeId> edges;
  std::array<Weight, 3> ws;
  size_t total_interior = 0;
  for (int i = 0; i < 3; ++i) {
    auto& p = c.paths[i];
    if (!is_path(g, p)) return false;
    bool fwd = p.vertices.front() == c.branch_u && p.vertices.back() == c.branch_v;
    bool bwd = p.vertices.front() == c.branch_v && p.vertices.back() == c.branch_u;
    if (!fwd && !bwd) return false;
    for (size_t j = 1; j + 1 < p.vertices.size(); ++j) interior.insert(p.vertices[j]);
    total_interior += p.vertices.size() - 2;
    for (EdgeId e : p.edges) edges.insert(e);
    ws[i] = weight_of(g, p.edges);
  }
  if (interior.size() != total_interior) return false;
  size_t total_edges = c.paths[0].edges.size() + c.paths[1].edges.size() + c.paths[2].edges.size();
  if (edges.size() != total_edges) return false;
  std::sort(ws.begin(), ws.end());
  auto t = c.thresholds;
  std::sort(t.begin(), t.end());
  for (int i = 0; i < 3; ++i)
    if (ws[i] < t[i]) return false;
  return true;
}

inline bool verify_theta(const Graph& g, const ThetaCertificate& c, Weight a, Weight b, Weight w3) {
  auto t = sorted3(a, b, w3);
  auto s = c.thresholds;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < 3; ++i)
    if (s[i] < t[i]) return false;
  return verify_theta(g, c);
}

// --- triple search kernel ---------------------------------------------------------

struct PathSlot {
  Weight min_weight = 0;
  int must_edge = -1;  // edge index that must lie on this path
  int min_edges = 1;
};

/** \brief DFS over internally disjoint u-v path triples, phase per path. */
class TripleSearch {
 public:
  TripleSearch(const Graph& g, Vertex u, Vertex v, std::array<PathSlot, 3> slots, Budget& budget,
               const std::vector<char>& blocked = {})
      : g_(g), u_(u), v_(v), slots_(slots), budget_(budget) {
    int n = g.vertex_count();
    used_.assign(n, 0);
    if (!blocked.empty())
      for (Vertex x = 0; x < n; ++x) used_[x] = blocked[x] && x != u && x != v;
    used_edge_.assign(g.edge_count(), 0);
    maxin_.assign(n, 0);
    for (int i = 0; i < g.edge_count(); ++i) {
      auto& e = g.edge_at(i);
      maxin_[e.u] = std::max(maxin_[e.u], e.w);
      maxin_[e.v] = std::max(maxin_[e.v], e.w);
    }
    for (int k = 1; k < 3; ++k)
      sym_[k] = slots_[k].min_weight == slots_[k - 1].min_weight &&
                slots_[k].must_edge < 0 && slots_[k - 1].must_edge < 0 &&
                slots_[k].min_edges == slots_[k - 1].min_edges;
  }

  Status run() {
    bool hit = phase(0);
    if (hit) return Status::found;
    return budget_.exhausted() ? Status::unknown : Status::none;
  }

  const std::array<PathWitness, 3>& result() const { return paths_; }

 private:
  bool flow_ok(int k, Vertex x) {
    int need = 3 - k;
    if (need <= 0) return true;
    std::vector<char> blocked = used_;
    if (x == u_) {
      DisjointPaths f(g_, {u_}, {v_}, blocked, used_edge_, need);
      return f.run(need) >= need;
    }
    if (need == 1) return true;  // covered by reachability in bound()
    DisjointPaths f(g_, {x, u_}, {v_}, blocked, used_edge_, 1, {1, need - 1});
    return f.run(need) >= need;
  }

  Weight bound(Vertex x, bool& reach_v, int must) {
    std::vector<char> seen(g_.vertex_count(), 0);
    std::vector<Vertex> q{x};
    seen[x] = 1;
    Weight add = 0;
    reach_v = false;
    bool must_ok = must < 0;
    for (size_t h = 0; h < q.size(); ++h) {
      Vertex y = q[h];
      for (int i : g_.incident(y)) {
        if (used_edge_[i]) continue;
        Vertex z = g_.edge_at(i).other(y);
        if (i == must) must_ok = true;
        if (seen[z] || z == u_) continue;
        if (z == v_) {
          seen[z] = 1;
          reach_v = true;
          add += maxin_[z];
          continue;
        }
        if (used_[z]) continue;
        seen[z] = 1;
        add += maxin_[z];
        q.push_back(z);
      }
    }
    if (!must_ok) reach_v = false;
    return add;
  }

  bool phase(int k) {
    if (k == 3) return true;
    if (!flow_ok(k, u_)) return false;
    cur_ = PathWitness{{u_}, {}, 0};
    first_[k] = -1;
    bool r = extend(k, u_);
    return r;
  }

  bool complete(int k, int i) {
    auto& s = slots_[k];
    const Edge& e = g_.edge_at(i);
    if (cur_.weight + e.w < s.min_weight) return false;
    if (cur_.length() + 1 < s.min_edges) return false;
    if (s.must_edge >= 0 && i != s.must_edge && !has_edge_on_path(s.must_edge)) return false;
    PathWitness saved = cur_;
    cur_.vertices.push_back(v_);
    cur_.edges.push_back(e.id);
    cur_.weight += e.w;
    paths_[k] = cur_;
    std::vector<int> marks = path_edge_indices_;
    marks.push_back(i);
    for (int j : marks) used_edge_[j] = 1;
    auto saved_marks = path_edge_indices_;
    path_edge_indices_.clear();
    bool r = phase(k + 1);
    path_edge_indices_ = saved_marks;
    if (!r) {
      for (int j : marks) used_edge_[j] = 0;
      // interior vertices stay marked by the caller's stack
    }
    cur_ = saved;
    return r;
  }

  bool has_edge_on_path(int idx) const {
    return std::find(path_edge_indices_.begin(), path_edge_indices_.end(), idx) !=
           path_edge_indices_.end();
  }

  bool extend(int k, Vertex x) {
    if (!budget_.tick()) return false;
    auto& s = slots_[k];
    std::vector<int> order(g_.incident(x).begin(), g_.incident(x).end());
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (g_.edge_at(a).w != g_.edge_at(b).w) return g_.edge_at(a).w > g_.edge_at(b).w;
      return a < b;
    });
    for (int i : order) {
      if (used_edge_[i]) continue;
      if (x == u_ && sym_[k] && i <= first_[k - 1]) continue;
      Vertex y = g_.edge_at(i).other(x);
      if (y == u_) continue;
      if (x == u_) first_[k] = i;
      if (y == v_) {
        if (complete(k, i)) return true;
        if (budget_.exhausted()) return false;
        continue;
      }
      if (used_[y]) continue;
      used_[y] = 1;
      cur_.vertices.push_back(y);
      cur_.edges.push_back(g_.edge_at(i).id);
      cur_.weight += g_.edge_at(i).w;
      path_edge_indices_.push_back(i);
      bool ok = true;
      bool reach;
      int must = (s.must_edge >= 0 && !has_edge_on_path(s.must_edge)) ? s.must_edge : -1;
      Weight add = bound(y, reach, must);
      if (!reach || cur_.weight + add < s.min_weight) ok = false;
      if (ok && !flow_ok(k, y)) ok = false;
      bool r = ok && extend(k, y);
      path_edge_indices_.pop_back();
      cur_.weight -= g_.edge_at(i).w;
      cur_.edges.pop_back();
      cur_.vertices.pop_back();
      if (r) return true;  // keep marks of the found triple
      used_[y] = 0;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const Graph& g_;
  Vertex u_, v_;
  std::array<PathSlot, 3> slots_;
  Budget& budget_;
  std::vector<char> used_, used_edge_;
  std::vector<Weight> maxin_;
  std::array<bool, 3> sym_{false, false, false};
  std::array<int, 3> first_{-1, -1, -1};
  PathWitness cur_;
  std::vector<int> path_edge_indices_;
  std::array<PathWitness, 3> paths_;
};

/// theta at a fixed branch pair (no structural reduction).
inline Search<ThetaCertificate> theta_at(const Graph& g, Vertex u, Vertex v, Weight a, Weight b,
                                         Weight c, Budget& budget) {
  require(u != v, "theta_at: branch vertices must differ");
  require(u >= 0 && v >= 0 && u < g.vertex_count() && v < g.vertex_count(),
          "theta_at: vertex out of range");
  auto t = sorted3(a, b, c);
  if (g.degree(u) < 3 || g.degree(v) < 3) return Search<ThetaCertificate>::miss(false);
  std::array<PathSlot, 3> slots{PathSlot{t[2]}, PathSlot{t[1]}, PathSlot{t[0]}};
  TripleSearch ts(g, u, v, slots, budget);
  Status s = ts.run();
  if (s != Status::found) return {s, std::nullopt};
  ThetaCertificate cert;
  cert.branch_u = u;
  cert.branch_v = v;
  cert.paths = ts.result();
  cert.thresholds = t;
  require(verify_theta(g, cert), "internal: theta certificate failed verification");
  return Search<ThetaCertificate>::hit(cert);
}

inline Search<ThetaCertificate> theta_at(const Graph& g, Vertex u, Vertex v, Weight a, Weight b,
                                         Weight c) {
  Budget budget;
  return theta_at(g, u, v, a, b, c, budget);
}

/// Every branch pair, no reduction.
inline Search<ThetaCertificate> theta_by_enumeration(const Graph& g, Weight a, Weight b, Weight c,
                                                     Budget& budget) {
  auto t = sorted3(a, b, c);
  if (g.total_weight() < t[0] + t[1] + t[2]) return Search<ThetaCertificate>::miss(false);
  bool unknown = false;
  int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) < 3) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.degree(v) < 3) continue;
      if (local_connectivity(g, u, v, 3) < 3) continue;
      auto r = theta_at(g, u, v, a, b, c, budget);
      if (r.found()) return r;
      if (r.unknown()) unknown = true;
      if (budget.exhausted()) return Search<ThetaCertificate>::miss(true);
    }
  }
  return Search<ThetaCertificate>::miss(unknown);
}

// --- structured search across 2-separations -----------------------------------------

namespace detail {

struct ThetaLevel {
  Graph graph;                  // local vertices, ids unique across levels
  std::vector<Vertex> to_base;  // local -> base vertex
};

struct ThetaContext {
  const Graph* base;
  std::array<Weight, 3> t;
  Budget* budget;
  std::map<EdgeId, PathWitness> expansion;  // virtual id -> base path
  EdgeId next_virtual;
  bool unknown = false;
};

inline PathWitness expand_to_base(ThetaContext& ctx, const ThetaLevel& lv, const PathWitness& p) {
  PathWitness out;
  out.vertices.push_back(lv.to_base[p.vertices[0]]);
  for (size_t i = 0; i < p.edges.size(); ++i) {
    EdgeId id = p.edges[i];
    Vertex a = lv.to_base[p.vertices[i]];
    auto it = ctx.expansion.find(id);
    if (it == ctx.expansion.end()) {
      out.edges.push_back(id);
      out.vertices.push_back(lv.to_base[p.vertices[i + 1]]);
      continue;
    }
    PathWitness seg = it->second;
    if (seg.vertices.front() != a) seg = reversed(seg);
    out.edges.insert(out.edges.end(), seg.edges.begin(), seg.edges.end());
    out.vertices.insert(out.vertices.end(), seg.vertices.begin() + 1, seg.vertices.end());
  }
  out.weight = weight_of(*ctx.base, out.edges);
  return out;
}

inline ThetaLevel sublevel(const ThetaLevel& lv, const std::vector<EdgeId>& ids) {
  auto s = extract(lv.graph, ids);
  ThetaLevel out;
  out.graph = s.graph;
  for (Vertex x : s.original) out.to_base.push_back(lv.to_base[x]);
  return out;
}

/// First 2-cut {x,y} (lexicographic) of a 2-connected graph with >= 4 vertices.
inline std::optional<std::pair<Vertex, Vertex>> first_2cut(const Graph& g) {
  int n = g.vertex_count();
  if (n < 4) return std::nullopt;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (!connected_without(g, {x, y})) return std::make_pair(x, y);
  return std::nullopt;
}

inline Search<ThetaCertificate> search_2connected(ThetaContext& ctx, const ThetaLevel& lv);

inline Search<ThetaCertificate> finish(ThetaContext& ctx, const ThetaLevel& lv,
                                       const ThetaCertificate& local) {
  ThetaCertificate c;
  c.branch_u = lv.to_base[local.branch_u];
  c.branch_v = lv.to_base[local.branch_v];
  for (int i = 0; i < 3; ++i) c.paths[i] = expand_to_base(ctx, lv, local.paths[i]);
  c.thresholds = ctx.t;
  require(verify_theta(*ctx.base, c), "internal: lifted theta certificate failed verification");
  return Search<ThetaCertificate>::hit(c);
}

inline Search<ThetaCertificate> lift_across(ThetaContext& ctx, const ThetaLevel& lv,
                                            const std::vector<EdgeId>& part1,
                                            const std::vector<EdgeId>& part2, Vertex x,
                                            Vertex y) {
  const Graph& g = lv.graph;
  std::array<const std::vector<EdgeId>*, 2> parts{&part1, &part2};
  std::array<ThetaLevel, 2> sides;
  for (int i = 0; i < 2; ++i) sides[i] = sublevel(lv, *parts[i]);
  // virtual weight for side i = heaviest xy-path in the other side
  std::array<PathWitness, 2> realize;
  for (int i = 0; i < 2; ++i) {
    auto& other = sides[1 - i];
    Vertex lx = -1, ly = -1;
    for (Vertex k = 0; k < other.graph.vertex_count(); ++k) {
      if (other.to_base[k] == lv.to_base[x]) lx = k;
      if (other.to_base[k] == lv.to_base[y]) ly = k;
    }
    auto hp = heaviest_path(other.graph, lx, ly, *ctx.budget);
    if (!hp.exact) ctx.unknown = true;
    require(hp.exists, "internal: separation side without an xy-path");
    realize[i] = expand_to_base(ctx, other, hp.best);
  }
  (void)g;
  for (int i = 0; i < 2; ++i) {
    ThetaLevel plus = sides[i];
    Vertex lx = -1, ly = -1;
    for (Vertex k = 0; k < plus.graph.vertex_count(); ++k) {
      if (plus.to_base[k] == lv.to_base[x]) lx = k;
      if (plus.to_base[k] == lv.to_base[y]) ly = k;
    }
    EdgeId vid = ctx.next_virtual++;
    plus.graph.add_edge_with_id(vid, lx, ly, realize[i].weight);
    ctx.expansion[vid] = realize[i];
    auto r = search_2connected(ctx, plus);
    if (r.found()) return r;
    if (r.unknown()) ctx.unknown = true;
  }
  return Search<ThetaCertificate>::miss(ctx.unknown);
}

inline Search<ThetaCertificate> search_2connected(ThetaContext& ctx, const ThetaLevel& lv) {
  const Graph& g = lv.graph;
  auto& t = ctx.t;
  if (g.total_weight() < t[0] + t[1] + t[2]) return Search<ThetaCertificate>::miss(false);
  if (g.edge_count() < 3) return Search<ThetaCertificate>::miss(false);
  if (ctx.budget->exhausted()) return Search<ThetaCertificate>::miss(true);
  if (g.vertex_count() == 2) {
    std::vector<Edge> es = g.edges();
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
      return a.w != b.w ? a.w > b.w : a.id < b.id;
    });
    if (es[0].w < t[2] || es[1].w < t[1] || es[2].w < t[0])
      return Search<ThetaCertificate>::miss(false);
    ThetaCertificate c;
    c.branch_u = 0;
    c.branch_v = 1;
    for (int i = 0; i < 3; ++i)
      c.paths[i] = PathWitness{{es[i].u, es[i].v}, {es[i].id}, es[i].w};
    for (auto& p : c.paths)
      if (p.vertices[0] != 0) p = reversed(p);
    c.thresholds = t;
    return finish(ctx, lv, c);
  }
  if (auto cut = first_2cut(g)) {
    auto [x, y] = *cut;
    std::vector<char> rem(g.vertex_count(), 0);
    rem[x] = rem[y] = 1;
    std::vector<int> comp;
    components(g, comp, &rem);
    std::vector<EdgeId> p1, p2;
    for (auto& e : g.edges()) {
      int c = comp[e.u] >= 0 ? comp[e.u] : comp[e.v];
      (c == 0 || c < 0 ? p1 : p2).push_back(e.id);
    }
    return lift_across(ctx, lv, p1, p2, x, y);
  }
  auto r = theta_by_enumeration(g, t[0], t[1], t[2], *ctx.budget);
  if (r.found()) return finish(ctx, lv, *r.value);
  return r;
}

}  // namespace detail

/** \brief Exact theta_{a,b,c} detection: blocks, then 2-separation lifting, then enumeration. */
inline Search<ThetaCertificate> contains_theta(const Graph& g, Weight a, Weight b, Weight c,
                                               Budget& budget) {
  auto t = sorted3(a, b, c);
  require(t[0] >= 0, "thresholds must be nonnegative");
  if (g.total_weight() < t[0] + t[1] + t[2]) return Search<ThetaCertificate>::miss(false);
  detail::ThetaContext ctx{&g, t, &budget, {}, g.next_id() + 1};
  bool unknown = false;
  for (auto& blk : blocks(g)) {
    if (blk.size() < 3) continue;
    auto s = extract(g, blk);
    detail::ThetaLevel lv{s.graph, s.original};
    auto r = detail::search_2connected(ctx, lv);
    if (r.found()) return r;
    if (r.unknown()) unknown = true;
  }
  return Search<ThetaCertificate>::miss(unknown || ctx.unknown || budget.exhausted());
}

inline Search<ThetaCertificate> contains_theta(const Graph& g, Weight a, Weight b, Weight c) {
  Budget budget;
  return contains_theta(g, a, b, c, budget);
}

/** \brief Lift detection across a given 2-separation (virtual edges carry max xy-path weight). */
inline Search<ThetaCertificate> lift_theta(const Graph& g, const Separation& sep, Weight a,
                                           Weight b, Weight c, Budget& budget) {
  require(sep.cut.size() == 2, "lift_theta: need a 2-separation");
  require(is_separation(g, sep), "lift_theta: not a separation of the graph");
  auto t = sorted3(a, b, c);
  detail::ThetaContext ctx{&g, t, &budget, {}, g.next_id() + 1};
  detail::ThetaLevel lv;
  lv.graph = g;
  lv.to_base.resize(g.vertex_count());
  std::iota(lv.to_base.begin(), lv.to_base.end(), 0);
  auto r = detail::lift_across(ctx, lv, sep.part1, sep.part2, sep.cut[0], sep.cut[1]);
  if (r.found()) return r;
  return Search<ThetaCertificate>::miss(ctx.unknown || budget.exhausted());
}

inline Search<ThetaCertificate> lift_theta(const Graph& g, const Separation& sep, Weight a,
                                           Weight b, Weight c) {
  Budget budget;
  return lift_theta(g, sep, a, b, c, budget);
}

// --- weight extraction on 2-connected graphs ---------------------------------------------

/// Cycle of weight >= t from a path of weight > (t-2)^2.
inline PathWitness cycle_from_heavy_path(const Graph& g, const PathWitness& p, Weight t) {
  require(is_path(g, p) && p.length() >= 1, "cycle_from_heavy_path: not a path");
  require(t >= 2, "cycle_from_heavy_path: t >= 2");
  Weight pw = weight_of(g, p.edges);
  require(pw > (t - 2) * (t - 2), "cycle_from_heavy_path: path too light");
  Vertex x = p.vertices.front(), y = p.vertices.back();
  auto two = internally_disjoint_paths(g, x, y, 2);
  require(two.size() == 2, "cycle_from_heavy_path: graph not 2-connected");
  PathWitness c = concat(g, two[0], reversed(two[1]));
  c.vertices.pop_back();
  c.weight = weight_of(g, c.edges);
  if (c.weight >= t) return c;
  // split P at its vertices on C'; one piece has weight >= t-1
  std::map<Vertex, int> pos;
  for (int i = 0; i < (int)c.vertices.size(); ++i) pos[c.vertices[i]] = i;
  std::vector<int> at;
  for (int i = 0; i < (int)p.vertices.size(); ++i)
    if (pos.count(p.vertices[i])) at.push_back(i);
  for (size_t k = 0; k + 1 < at.size(); ++k) {
    PathWitness piece = subpath(g, p, at[k], at[k + 1]);
    if (piece.weight < t - 1) continue;
    if (piece.length() == 1 && std::count(c.edges.begin(), c.edges.end(), piece.edges[0])) continue;
    int i = pos[piece.vertices.front()], j = pos[piece.vertices.back()];
    PathWitness arc1 = cycle_arc(g, c, j, i), arc2 = cycle_arc(g, c, i, j);
    // piece runs i -> j, close with an arc j -> i
    PathWitness back = arc1;
    PathWitness out = concat(g, piece, back);
    out.vertices.pop_back();
    out.weight = weight_of(g, out.edges);
    PathWitness alt = concat(g, reversed(piece), arc2);
    alt.vertices.pop_back();
    alt.weight = weight_of(g, alt.edges);
    if (alt.weight > out.weight) out = alt;
    require(out.weight >= t && is_cycle(g, out), "internal: extracted cycle too light");
    return out;
  }
  throw Error("internal: no heavy piece found");
}

/// u-v path of weight >= w(C)/2 through a cycle C of a 2-connected graph.
inline PathWitness pair_path_through_cycle(const Graph& g, const PathWitness& c, Vertex u,
                                           Vertex v) {
  require(u != v, "pair_path_through_cycle: u != v");
  require(is_cycle(g, c), "pair_path_through_cycle: not a cycle");
  int k = static_cast<int>(c.vertices.size());
  std::map<Vertex, int> pos;
  for (int i = 0; i < k; ++i) pos[c.vertices[i]] = i;
  PathWitness pu{{u}, {}, 0}, pv{{v}, {}, 0};
  bool uc = pos.count(u), vc = pos.count(v);
  if (!uc || !vc) {
    std::vector<Vertex> srcs, sinks;
    std::vector<char> blocked(g.vertex_count(), 0);
    if (!uc) srcs.push_back(u);
    if (!vc) srcs.push_back(v);
    for (Vertex x : c.vertices)
      if (x != u && x != v) sinks.push_back(x);
    if (uc) blocked[u] = 1;
    if (vc) blocked[v] = 1;
    auto fan = fan_paths(g, srcs, sinks, (int)srcs.size(), blocked);
    require(fan.size() == srcs.size(), "pair_path_through_cycle: graph not 2-connected");
    for (auto& f : fan) {
      if (f.vertices.front() == u) pu = f;
      if (f.vertices.front() == v) pv = f;
    }
  }
  int i = pos[pu.vertices.back()], j = pos[pv.vertices.back()];
  PathWitness a1 = cycle_arc(g, c, i, j), a2 = reversed(cycle_arc(g, c, j, i));
  PathWitness mid = a1.weight >= a2.weight ? a1 : a2;
  PathWitness out = concat(g, concat(g, pu, mid), reversed(pv));
  require(is_path(g, out), "internal: pair path not simple");
  return out;
}

}  // namespace thetalab

#endif
