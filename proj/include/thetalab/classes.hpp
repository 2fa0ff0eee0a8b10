#ifndef THETALAB_CLASSES_HPP
#define THETALAB_CLASSES_HPP

#include <random>

#include "generators.hpp"
#include "heavy_cpath.hpp"
#include "recipe.hpp"

namespace thetalab {

/// Closed-form bounds used by the class checkers and the acceptance runs.
namespace bounds {
/// theta_{t,t,t}-freeness of Phi(L_{r,s}, P_r) with t = 2qr, q = max{r,s} - 1.
inline Weight phi_theta_t(Weight r, Weight s) { return 2 * (std::max(r, s) - 1) * r; }
/// Path weight above which a 2-connected graph has a heavy cycle.
inline Weight heavy_path_weight(Weight t) { return (t - 2) * (t - 2); }
/// Longest-path length forcing theta_{1,2,t} / theta_{2,2,t} outside cycles / outerplanar graphs.
inline Weight small_theta_length(Weight t) { return 4 * t * t; }
/// Summand bound n in C(L_n) for theta_{1,t,t}-free graphs.
inline Weight chain_class_bound(Weight t) { return 8 * t * t; }
inline Weight outer_cycle_length(Weight r) { return 3 * r; }
inline Weight cpath_weight(Weight r) { return 2 * r; }
}  // namespace bounds

/** \brief Membership evidence or the violated clause. */
struct ClassCertificate {
  std::string tag;
  Status status = Status::none;  // found = member
  std::string clause;            // set on rejection
  std::optional<PathWitness> path;
  std::optional<EdgeId> edge;
  int ell = -1;
  Weight max_weight = 0, max_cpath = 0, max_inner = 0;
  std::optional<PathWitness> hamilton;
  std::vector<std::pair<EdgeId, EdgeId>> crossings;
  std::vector<EdgeId> free_edges;
  std::optional<SumRecipe> recipe;

  bool member() const { return status == Status::found; }
};

namespace detail {
inline ClassCertificate reject(ClassCertificate c, std::string clause) {
  c.status = Status::none;
  c.clause = std::move(clause);
  return c;
}
}  // namespace detail

/** \brief L_s (r <= 0) or L_{r,s}: 2-connected, no path of length s, weights below r. */
inline ClassCertificate in_L(const Graph& g, Weight r, int s, Budget& budget) {
  ClassCertificate c;
  c.tag = r > 0 ? "L_{" + std::to_string(r) + "," + std::to_string(s) + "}" : "L_" + std::to_string(s);
  c.max_weight = g.max_weight();
  if (!is_2connected(g)) return detail::reject(c, "not 2-connected");
  if (r > 0)
    for (auto& e : g.edges())
      if (e.w >= r) {
        c.edge = e.id;
        return detail::reject(c, "edge of weight >= r");
      }
  auto lp = longest_path(g, budget);
  if (!lp.exact) {
    c.status = Status::unknown;
    c.clause = "longest-path budget exhausted";
    return c;
  }
  c.ell = lp.edges;
  if (lp.edges >= s) {
    c.path = subpath(g, lp.by_edges, 0, s);
    return detail::reject(c, "path of length s");
  }
  c.path = lp.by_edges;
  c.status = Status::found;
  return c;
}

inline ClassCertificate in_L(const Graph& g, Weight r, int s) {
  Budget b;
  return in_L(g, r, s, b);
}

/** \brief P_r: no C-path of weight >= 2r, no inner edge of weight >= r. */
inline ClassCertificate in_Pr(const PlaneGraph& pg, Weight r, Budget& budget) {
  const Graph& g = pg.graph;
  ClassCertificate c;
  c.tag = "P_" + std::to_string(r);
  if (!is_2connected(g)) return detail::reject(c, "not 2-connected");
  if (!pg.face_is_cycle(pg.outer)) return detail::reject(c, "outer face is not a cycle");
  PathWitness cyc = pg.outer_cycle();
  c.hamilton = cyc;
  std::set<EdgeId> ce(cyc.edges.begin(), cyc.edges.end());
  for (auto& e : g.edges()) {
    if (ce.count(e.id)) continue;
    c.max_inner = std::max(c.max_inner, e.w);
    if (e.w >= r && !c.edge) c.edge = e.id;
  }
  if (c.edge) return detail::reject(c, "inner edge of weight >= r");
  auto cp = heaviest_cpath(g, cyc, budget, bounds::cpath_weight(r));
  if (cp.path) c.max_cpath = cp.path->weight;
  if (cp.path && cp.path->weight >= bounds::cpath_weight(r)) {
    c.path = cp.path;
    return detail::reject(c, "C-path of weight >= 2r");
  }
  if (!cp.exact) {
    c.status = Status::unknown;
    c.clause = "C-path budget exhausted";
    return c;
  }
  c.path = cp.path;
  c.status = Status::found;
  return c;
}

inline ClassCertificate in_Pr(const PlaneGraph& pg, Weight r) {
  Budget b;
  return in_Pr(pg, r, b);
}

/** \brief P_r^3: P_r, 3-connected, and |C| >= 3r or at least three C-edges of weight >= r. */
inline ClassCertificate in_Pr3(const PlaneGraph& pg, Weight r, Budget& budget) {
  auto c = in_Pr(pg, r, budget);
  c.tag = "P3_" + std::to_string(r);
  if (!c.member()) return c;
  if (!is_3connected(pg.graph)) return detail::reject(c, "not 3-connected");
  auto cyc = pg.outer_cycle();
  int heavy = 0;
  for (EdgeId id : cyc.edges) heavy += pg.graph.edge(id).w >= r;
  if ((Weight)cyc.vertices.size() < bounds::outer_cycle_length(r) && heavy < 3)
    return detail::reject(c, "outer cycle shorter than 3r with fewer than three heavy edges");
  return c;
}

inline ClassCertificate in_Pr3(const PlaneGraph& pg, Weight r) {
  Budget b;
  return in_Pr3(pg, r, b);
}

/// Inner facial 4-cycle x1x2x3x4, all on C, with x1x2 and x3x4 unparalleled C edges.
struct Rectangle {
  int face = -1;
  std::array<Vertex, 4> x{};
  std::array<EdgeId, 4> e{};  // x1x2, x2x3, x3x4, x4x1
};

inline std::vector<Rectangle> rectangles(const PlaneGraph& pg) {
  const Graph& g = pg.graph;
  std::vector<Rectangle> out;
  if (!pg.face_is_cycle(pg.outer)) return out;
  auto cyc = pg.outer_cycle();
  std::set<Vertex> onc(cyc.vertices.begin(), cyc.vertices.end());
  std::set<EdgeId> ce(cyc.edges.begin(), cyc.edges.end());
  for (int f = 0; f < pg.face_count(); ++f) {
    if (f == pg.outer || !pg.face_is_cycle(f)) continue;
    auto vs = pg.face_vertices(f);
    auto es = pg.face_edges(f);
    if (vs.size() != 4) continue;
    bool all_on = true;
    for (Vertex v : vs) all_on = all_on && onc.count(v);
    if (!all_on) continue;
    for (int s = 0; s < 2; ++s) {
      if (!ce.count(es[s]) || !ce.count(es[s + 2])) continue;
      Rectangle r;
      r.face = f;
      for (int i = 0; i < 4; ++i) {
        r.x[i] = vs[(s + i) % 4];
        r.e[i] = es[(s + i) % 4];
      }
      if (g.edges_between(r.x[0], r.x[1]).size() != 1 || g.edges_between(r.x[2], r.x[3]).size() != 1) continue;
      out.push_back(r);
      break;
    }
  }
  return out;
}

/** \brief Outerplanarity with the outerplane embedding as evidence. */
inline ClassCertificate outerplanar_certificate(const Graph& g) {
  ClassCertificate c;
  c.tag = "outerplanar";
  if (!is_outerplanar(g)) return detail::reject(c, "not outerplanar");
  if (is_2connected(g)) {
    auto pg = outerplane_embedding(g);
    if (pg) c.hamilton = pg->outer_cycle();
  }
  c.status = Status::found;
  return c;
}

// --- nearly outerplanar graphs -------------------------------------------------

/** \brief Hamilton cycle of si(G) with crossing chord pairs and free edges of G. */
struct NearlyOuterplanar {
  std::vector<Vertex> order;
  PathWitness cycle;
  std::vector<std::pair<EdgeId, EdgeId>> crossings;
  std::vector<EdgeId> free_edges;  // all edges of G parallel to a free edge of si(G)
};

namespace detail {

/// Check the chord conditions for one Hamilton order of si(G).
inline std::optional<NearlyOuterplanar> frame_check(const Graph& g, const std::vector<Vertex>& order) {
  int n = g.vertex_count();
  if ((int)order.size() != n || n < 3) return std::nullopt;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  auto cyc_adj = [&](Vertex a, Vertex b) {
    int d = std::abs(pos[a] - pos[b]);
    return d == 1 || d == n - 1;
  };
  NearlyOuterplanar r;
  r.order = order;
  for (int i = 0; i < n; ++i) {
    auto es = g.edges_between(order[i], order[(i + 1) % n]);
    if (es.empty()) return std::nullopt;
    r.cycle.vertices.push_back(order[i]);
    r.cycle.edges.push_back(*std::min_element(es.begin(), es.end()));
  }
  r.cycle.weight = weight_of(g, r.cycle.edges);
  std::vector<std::pair<Vertex, Vertex>> chords;
  std::vector<EdgeId> rep;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!cyc_adj(a, b)) {
        auto es = g.edges_between(a, b);
        if (es.empty()) continue;
        chords.push_back({a, b});
        rep.push_back(*std::min_element(es.begin(), es.end()));
      }
  auto inside = [&](int p, int lo, int hi) { return p > lo && p < hi; };
  std::set<std::pair<Vertex, Vertex>> covered;
  std::vector<int> crosses(chords.size(), 0);
  for (size_t i = 0; i < chords.size(); ++i)
    for (size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, d] = chords[j];
      if (a == c || a == d || b == c || b == d) continue;
      int pa = std::min(pos[a], pos[b]), pb = std::max(pos[a], pos[b]);
      if (inside(pos[c], pa, pb) == inside(pos[d], pa, pb)) continue;
      if (++crosses[i] > 1 || ++crosses[j] > 1) return std::nullopt;
      bool acbd = cyc_adj(a, c) && cyc_adj(b, d), adbc = cyc_adj(a, d) && cyc_adj(b, c);
      if (!acbd && !adbc) return std::nullopt;
      auto key = [](Vertex x, Vertex y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
      if (acbd) {
        covered.insert(key(a, c));
        covered.insert(key(b, d));
      }
      if (adbc) {
        covered.insert(key(a, d));
        covered.insert(key(b, c));
      }
      r.crossings.push_back({rep[i], rep[j]});
    }
  for (int i = 0; i < n; ++i) {
    Vertex a = order[i], b = order[(i + 1) % n];
    if (covered.count({std::min(a, b), std::max(a, b)})) continue;
    for (EdgeId id : g.edges_between(a, b)) r.free_edges.push_back(id);
  }
  std::sort(r.free_edges.begin(), r.free_edges.end());
  return r;
}

/// Hamilton cycles of si(G) from vertex 0, each listed once (order[1] < order[n-1]).
template <class F>
inline bool for_each_hamilton(const Graph& g, Budget& budget, F&& f) {
  int n = g.vertex_count();
  if (n < 3) return true;
  std::vector<std::vector<Vertex>> nb(n);
  for (Vertex v = 0; v < n; ++v) nb[v] = g.neighbors(v);
  std::vector<Vertex> order{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  bool stop = false, ok = true;
  std::function<void()> go = [&]() {
    if (stop) return;
    if (!budget.tick()) {
      ok = false;
      stop = true;
      return;
    }
    if ((int)order.size() == n) {
      if (order[1] < order[n - 1] && g.adjacent(order[n - 1], 0)) stop = f(order);
      return;
    }
    for (Vertex w : nb[order.back()]) {
      if (used[w]) continue;
      used[w] = 1;
      order.push_back(w);
      go();
      order.pop_back();
      used[w] = 0;
      if (stop) return;
    }
  };
  go();
  return ok;
}

}  // namespace detail

/// Every valid frame; callback returns true to stop. Returns false if the budget ran out.
template <class F>
inline bool for_each_nearly_outerplanar_frame(const Graph& g, Budget& budget, F&& f) {
  return detail::for_each_hamilton(g, budget, [&](const std::vector<Vertex>& order) {
    auto r = detail::frame_check(g, order);
    return r ? f(*r) : false;
  });
}

inline Search<NearlyOuterplanar> nearly_outerplanar(const Graph& g, Budget& budget) {
  std::optional<NearlyOuterplanar> hit;
  bool ok = for_each_nearly_outerplanar_frame(g, budget, [&](const NearlyOuterplanar& r) {
    hit = r;
    return true;
  });
  if (hit) return Search<NearlyOuterplanar>::hit(*hit);
  return Search<NearlyOuterplanar>::miss(!ok);
}

inline Search<NearlyOuterplanar> nearly_outerplanar(const Graph& g) {
  Budget b;
  return nearly_outerplanar(g, b);
}

/// Re-derive crossings and free edges from the stored order.
inline bool verify_nearly_outerplanar(const Graph& g, const NearlyOuterplanar& c) {
  std::set<Vertex> s(c.order.begin(), c.order.end());
  if ((int)s.size() != g.vertex_count() || (int)c.order.size() != g.vertex_count()) return false;
  for (Vertex v : c.order)
    if (v < 0 || v >= g.vertex_count()) return false;
  auto r = detail::frame_check(g, c.order);
  return r && r->free_edges == c.free_edges && is_cycle(g, c.cycle);
}

// --- C(L_n) and O_n ----------------------------------------------------------

namespace detail {

/// Pieces of G hanging off a vertex set S: each component of G - S with its feet.
struct Hanging {
  std::vector<std::pair<Vertex, Vertex>> feet;  // per component
  std::vector<std::vector<EdgeId>> edges;       // per component, incl. linking edges
  bool ok = true;                               // every component has exactly two feet
};

inline Hanging hanging_pieces(const Graph& g, const std::vector<char>& in_s) {
  Hanging h;
  std::vector<int> comp;
  int c = components(g, comp, &in_s);
  std::vector<std::set<Vertex>> feet(c);
  h.edges.resize(c);
  for (auto& e : g.edges()) {
    int k = comp[e.u] >= 0 ? comp[e.u] : comp[e.v];
    if (k < 0) continue;
    h.edges[k].push_back(e.id);
    if (in_s[e.u]) feet[k].insert(e.u);
    if (in_s[e.v]) feet[k].insert(e.v);
  }
  for (int k = 0; k < c; ++k) {
    if (feet[k].size() != 2) {
      h.ok = false;
      return h;
    }
    h.feet.push_back({*feet[k].begin(), *feet[k].rbegin()});
  }
  return h;
}

/// Summand G_i = piece + virtual edge on its two feet; appended to the recipe.
inline int add_piece(SumRecipe& r, const Graph& g, const std::vector<EdgeId>& ids, Vertex a, Vertex b,
                     EdgeId& fresh, SumLink& link) {
  Subgraph s = extract(g, ids, {a, b});
  Graph h = s.graph;
  link.child_vertices = {s.local[a], s.local[b]};
  link.child_edges = {h.add_edge_with_id(fresh++, s.local[a], s.local[b], 1)};
  return r.add_node(h, s.original, "L");
}

/// Vertex subsets, largest first.
inline std::vector<std::uint32_t> subsets_by_size(int n) {
  std::vector<std::uint32_t> all;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (__builtin_popcount(m) >= 3) all.push_back(m);
  std::stable_sort(all.begin(), all.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) > __builtin_popcount(b); });
  return all;
}

}  // namespace detail

/**
 * \brief Membership in C(L_n): G is a cycle with L_n graphs 2-summed onto its edges.
 * Exact search over the cycle's vertex set.
 */
inline ClassCertificate in_C_of_L(const Graph& g, int n_bound, Budget& budget) {
  ClassCertificate c;
  c.tag = "C(L_" + std::to_string(n_bound) + ")";
  int n = g.vertex_count();
  if (!is_2connected(g)) return detail::reject(c, "not 2-connected");
  require(n <= 20, "in_C_of_L: graph too large for exact search");
  bool unknown = false;
  for (std::uint32_t mask : detail::subsets_by_size(n)) {
    if (!budget.tick()) return c.status = Status::unknown, c.clause = "budget exhausted", c;
    std::vector<char> in_s(n, 0);
    for (Vertex v = 0; v < n; ++v) in_s[v] = (mask >> v) & 1;
    auto hang = detail::hanging_pieces(g, in_s);
    if (!hang.ok) continue;
    std::map<std::pair<Vertex, Vertex>, std::vector<EdgeId>> piece;
    std::map<std::pair<Vertex, Vertex>, int> comps_at;
    for (size_t k = 0; k < hang.feet.size(); ++k) {
      auto& v = piece[hang.feet[k]];
      v.insert(v.end(), hang.edges[k].begin(), hang.edges[k].end());
      comps_at[hang.feet[k]]++;
    }
    for (auto& e : g.edges())
      if (in_s[e.u] && in_s[e.v]) piece[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.id);
    int k = __builtin_popcount(mask);
    if ((int)piece.size() != k) continue;
    std::vector<std::vector<Vertex>> nb(n);
    for (auto& [p, ids] : piece) {
      nb[p.first].push_back(p.second);
      nb[p.second].push_back(p.first);
    }
    bool deg2 = true;
    for (Vertex v = 0; v < n; ++v)
      if (in_s[v] && nb[v].size() != 2) deg2 = false;
    if (!deg2) continue;
    Vertex start = __builtin_ctz(mask);
    std::vector<Vertex> order{start};
    Vertex prev = -1, cur = start;
    while (true) {
      Vertex nx = nb[cur][0] != prev ? nb[cur][0] : nb[cur][1];
      if (nx == start) break;
      order.push_back(nx);
      prev = cur;
      cur = nx;
    }
    if ((int)order.size() != k) continue;
    SumRecipe r;
    Graph base(k);
    r.add_node(Graph(), order, "cycle");
    EdgeId fresh = g.next_id();
    bool good = true;
    for (int i = 0; i < k && good; ++i) {
      Vertex a = order[i], b = order[(i + 1) % k];
      auto key = std::make_pair(std::min(a, b), std::max(a, b));
      auto& ids = piece[key];
      if (!comps_at.count(key) && ids.size() == 1) {
        auto& e = g.edge(ids[0]);
        base.add_edge_with_id(e.id, i, (i + 1) % k, e.w);
        continue;
      }
      SumLink l;
      l.parent = 0;
      l.parent_vertices = {i, (i + 1) % k};
      l.parent_edges = {base.add_edge_with_id(fresh++, i, (i + 1) % k, 1)};
      l.child = detail::add_piece(r, g, ids, a, b, fresh, l);
      auto m = in_L(r.nodes[l.child], 0, n_bound, budget);
      if (m.status == Status::unknown) unknown = true;
      if (!m.member()) good = false;
      r.links.push_back(l);
    }
    if (!good) continue;
    r.nodes[0] = base;
    c.recipe = r;
    c.status = Status::found;
    return c;
  }
  if (unknown) {
    c.status = Status::unknown;
    c.clause = "summand check budget exhausted";
    return c;
  }
  return detail::reject(c, "no cycle decomposition with summands in L_n");
}

inline ClassCertificate in_C_of_L(const Graph& g, int n_bound) {
  Budget b;
  return in_C_of_L(g, n_bound, b);
}

/**
 * \brief Membership in O_n: L_n graphs 2-summed onto free edges of a nearly outerplanar graph.
 */
inline ClassCertificate in_O(const Graph& g, int n_bound, Budget& budget) {
  ClassCertificate c;
  c.tag = "O_" + std::to_string(n_bound);
  int n = g.vertex_count();
  if (!is_2connected(g)) return detail::reject(c, "not 2-connected");
  require(n <= 20, "in_O: graph too large for exact search");
  bool unknown = false;
  for (std::uint32_t mask : detail::subsets_by_size(n)) {
    if (!budget.tick()) return c.status = Status::unknown, c.clause = "budget exhausted", c;
    std::vector<char> in_s(n, 0);
    for (Vertex v = 0; v < n; ++v) in_s[v] = (mask >> v) & 1;
    auto hang = detail::hanging_pieces(g, in_s);
    if (!hang.ok) continue;
    std::vector<Vertex> sv, loc(n, -1);
    for (Vertex v = 0; v < n; ++v)
      if (in_s[v]) {
        loc[v] = static_cast<int>(sv.size());
        sv.push_back(v);
      }
    int k = static_cast<int>(sv.size());
    SumRecipe r;
    r.add_node(Graph(), sv, "nearly outerplanar");
    Graph base(k);
    for (auto& e : g.edges())
      if (in_s[e.u] && in_s[e.v]) base.add_edge_with_id(e.id, loc[e.u], loc[e.v], e.w);
    EdgeId fresh = g.next_id();
    bool good = true;
    std::vector<EdgeId> virt;
    for (size_t p = 0; p < hang.feet.size() && good; ++p) {
      auto [a, b] = hang.feet[p];
      SumLink l;
      l.parent = 0;
      l.parent_vertices = {loc[a], loc[b]};
      l.parent_edges = {base.add_edge_with_id(fresh++, loc[a], loc[b], 1)};
      virt.push_back(l.parent_edges[0]);
      l.child = detail::add_piece(r, g, hang.edges[p], a, b, fresh, l);
      auto m = in_L(r.nodes[l.child], 0, n_bound, budget);
      if (m.status == Status::unknown) unknown = true;
      if (!m.member()) good = false;
      r.links.push_back(l);
    }
    if (!good || !is_2connected(base)) continue;
    std::optional<NearlyOuterplanar> frame;
    bool ok = for_each_nearly_outerplanar_frame(base, budget, [&](const NearlyOuterplanar& f) {
      for (EdgeId id : virt)
        if (!std::binary_search(f.free_edges.begin(), f.free_edges.end(), id)) return false;
      frame = f;
      return true;
    });
    if (!ok) unknown = true;
    if (!frame) continue;
    r.nodes[0] = base;
    c.recipe = r;
    c.hamilton = frame->cycle;
    for (Vertex& v : c.hamilton->vertices) v = sv[v];
    c.crossings = frame->crossings;
    for (EdgeId id : frame->free_edges)
      if (g.has_edge(id)) c.free_edges.push_back(id);
    c.status = Status::found;
    return c;
  }
  if (unknown) {
    c.status = Status::unknown;
    c.clause = "budget exhausted";
    return c;
  }
  return detail::reject(c, "no nearly outerplanar frame with L_n summands on free edges");
}

inline ClassCertificate in_O(const Graph& g, int n_bound) {
  Budget b;
  return in_O(g, n_bound, b);
}

// --- random members ---------------------------------------------------------

/// A random graph together with the recipe that built it.
struct Built {
  Graph graph;
  SumRecipe recipe;
};

namespace detail {

/// Cycles on exactly k distinct vertices, each once (by vertex order, fixed start at the minimum).
inline std::vector<PathWitness> cycles_of_length(const Graph& g, int k) {
  std::vector<PathWitness> out;
  int n = g.vertex_count();
  std::vector<Vertex> vs;
  std::vector<char> used(n, 0);
  std::function<void()> go = [&]() {
    if ((int)vs.size() == k) {
      if (vs[1] < vs[k - 1] && g.adjacent(vs.back(), vs[0])) out.push_back(cycle_from_vertices(g, vs));
      return;
    }
    for (Vertex w : g.neighbors(vs.back()))
      if (!used[w] && w > vs[0]) {
        used[w] = 1;
        vs.push_back(w);
        go();
        vs.pop_back();
        used[w] = 0;
      }
  };
  for (Vertex s = 0; s < n; ++s) {
    vs = {s};
    used[s] = 1;
    go();
    used[s] = 0;
  }
  return out;
}

}  // namespace detail

namespace gen {

/**
 * \brief Random member of L_{r,s} (r <= 0: unit weights) holding a glue object of size k
 * (edge, triangle, 4-cycle). Glue edges get weight 1.
 */
inline std::pair<Graph, PathWitness> random_L(Weight r, int s, int k, Rng& rng) {
  std::uniform_int_distribution<int> coin(0, 2);
  for (int tries = 0; tries < 400; ++tries) {
    int hi = std::max(2, std::min(s + 2, 7));
    int n = std::uniform_int_distribution<int>(k == 2 ? 2 : k, std::max(k, hi))(rng);
    Graph g;
    if (n == 2) {
      g = Graph(2);
      for (int i = 0; i < 2 + coin(rng) % 2; ++i) g.add_edge(0, 1);
    } else {
      g = random_2connected(n, coin(rng), rng);
      int par = coin(rng) == 0 ? 1 : 0;
      for (int i = 0; i < par; ++i) {
        auto& e = g.edge_at(std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng));
        g.add_edge(e.u, e.v);
      }
    }
    if (r > 1) random_weights(g, 1, r - 1, rng);
    PathWitness glue;
    if (k == 2) {
      auto& e = g.edge_at(std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng));
      glue.vertices = {e.u, e.v};
      glue.edges = {e.id};
    } else {
      auto cs = detail::cycles_of_length(g, k);
      if (cs.empty()) continue;
      glue = cs[std::uniform_int_distribution<size_t>(0, cs.size() - 1)(rng)];
    }
    for (EdgeId id : glue.edges) g.set_weight(id, 1);
    if (in_L(g, r, s).member()) return {g, glue};
  }
  require(k == 2 || s > k - 1, "random_L: no glue object of that size fits below s");
  Graph g = k == 2 ? Graph(2) : cycle(k);
  if (k == 2) {
    g.add_edge(0, 1);
    g.add_edge(0, 1);
  }
  PathWitness glue = k == 2 ? PathWitness{{0, 1}, {0}, 1} : cycle_from_vertices(g, [&] {
    std::vector<Vertex> v(k);
    std::iota(v.begin(), v.end(), 0);
    return v;
  }());
  return {g, glue};
}

/// Random member of C(L_t): a cycle with some edges replaced by random L_t summands.
inline Built random_C_of_L(int t, Rng& rng) {
  int k = std::uniform_int_distribution<int>(3, 8)(rng);
  SumRecipe r;
  r.add_node(cycle(k), {}, "cycle");
  std::bernoulli_distribution put(0.6);
  for (EdgeId id = 0; id < k; ++id) {
    if (!put(rng)) continue;
    auto [h, glue] = random_L(0, t, 2, rng);
    Edge e = r.nodes[0].edge(id);
    int child = r.add_node(h, {}, "L");
    r.links.push_back(SumLink{0, child, 2, {e.u, e.v}, glue.vertices, {id}, glue.edges});
  }
  return {evaluate(r).graph, r};
}

/// Random nearly outerplanar frame on a k-cycle: non-crossing chords plus adjacent crossing pairs.
inline Graph random_frame(int k, Rng& rng) {
  Graph g = cycle(k);
  std::uniform_int_distribution<int> pv(0, k - 1);
  int tries = std::uniform_int_distribution<int>(0, k)(rng);
  std::vector<Vertex> order(k);
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < tries; ++i) {
    Graph h = g;
    int a = pv(rng), b = pv(rng);
    if (std::bernoulli_distribution(0.5)(rng)) {
      // crossing pair a-b, (a+1)-(b+1)
      int a1 = (a + 1) % k, b1 = (b + 1) % k;
      if (a == b || a1 == b || b1 == a || h.adjacent(a, b) || h.adjacent(a1, b1)) continue;
      h.add_edge(a, b);
      h.add_edge(a1, b1);
    } else {
      if (a == b || h.adjacent(a, b)) continue;
      h.add_edge(a, b);
    }
    if (detail::frame_check(h, order)) g = h;
  }
  return g;
}

/// Random member of O_t: L_t summands 2-summed onto free edges of a random frame.
inline Built random_O(int t, Rng& rng) {
  int k = std::uniform_int_distribution<int>(4, 8)(rng);
  Graph base = random_frame(k, rng);
  std::vector<Vertex> order(k);
  std::iota(order.begin(), order.end(), 0);
  auto frame = detail::frame_check(base, order);
  require(frame.has_value(), "internal: random frame invalid");
  SumRecipe r;
  r.add_node(base, {}, "nearly outerplanar");
  std::bernoulli_distribution put(0.6);
  for (EdgeId id : frame->free_edges) {
    if (!put(rng)) continue;
    auto [h, glue] = random_L(0, t, 2, rng);
    auto& e = base.edge(id);
    int child = r.add_node(h, {}, "L");
    r.links.push_back(SumLink{0, child, 2, {e.u, e.v}, glue.vertices, {id}, glue.edges});
  }
  return {evaluate(r).graph, r};
}

}  // namespace gen

// --- Phi(L_{r,s}, P_r) --------------------------------------------------------

/** \brief Phi recipe: node 0 of the sum recipe is the plane base graph. */
struct PhiRecipe {
  PlaneGraph base;
  SumRecipe recipe;
};

struct PhiCheck {
  Status status = Status::none;
  std::string clause;
  int node = -1;  // offending node, -1 for global clauses
  std::optional<Graph> graph;
  bool member() const { return status == Status::found; }
};

namespace detail {

inline PhiCheck phi_reject(std::string clause, int node = -1) {
  PhiCheck c;
  c.clause = std::move(clause);
  c.node = node;
  return c;
}

inline bool same_graph(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (auto& e : a.edges()) {
    if (!b.has_edge(e.id)) return false;
    auto& f = b.edge(e.id);
    if (!f.joins(e.u, e.v) || f.w != e.w) return false;
  }
  return true;
}

inline PhiCheck validate_phi(const PhiRecipe& pr, Weight r, int s, bool three, Budget& budget) {
  const SumRecipe& rec = pr.recipe;
  if (rec.nodes.empty()) return phi_reject("empty recipe");
  if (!same_graph(rec.nodes[0], pr.base.graph)) return phi_reject("root node differs from the plane base", 0);
  if (!rec.is_star()) return phi_reject("summands must be glued to the base");
  auto base = three ? in_Pr3(pr.base, r, budget) : in_Pr(pr.base, r, budget);
  if (base.status == Status::unknown) {
    PhiCheck c = phi_reject("base: " + base.clause, 0);
    c.status = Status::unknown;
    return c;
  }
  if (!base.member()) return phi_reject("base not in " + base.tag + ": " + base.clause, 0);
  auto rects = rectangles(pr.base);
  for (size_t i = 1; i < rec.nodes.size(); ++i) {
    auto m = in_L(rec.nodes[i], r, s, budget);
    if (m.status == Status::unknown) {
      PhiCheck c = phi_reject("summand: " + m.clause, (int)i);
      c.status = Status::unknown;
      return c;
    }
    if (!m.member()) return phi_reject("summand not in " + m.tag + ": " + m.clause, (int)i);
    if (three && !is_3connected(rec.nodes[i])) return phi_reject("summand not 3-connected", (int)i);
    if (three && rec.nodes[i].vertex_count() < 5) return phi_reject("summand has fewer than five vertices", (int)i);
  }
  std::vector<int> parents(rec.nodes.size(), 0);
  for (auto& l : rec.links) {
    if (l.child <= 0 || l.child >= (int)rec.nodes.size()) return phi_reject("link to a missing node");
    if (parents[l.child]++) return phi_reject("summand glued twice", l.child);
    if (!glue_ok(rec.nodes[0], l.parent_vertices, l.parent_edges, l.k))
      return phi_reject("base glue is not an edge/cycle of the base", l.child);
    if (!glue_ok(rec.nodes[l.child], l.child_vertices, l.child_edges, l.k))
      return phi_reject("summand glue is not an edge/cycle of the summand", l.child);
    if (three && l.k != 3) return phi_reject("only 3-sums onto inner facial triangles allowed", l.child);
    if (l.k == 3) {
      int f = pr.base.face_with_edges(l.parent_edges);
      if (f < 0 || f == pr.base.outer) return phi_reject("3-sum site is not an inner facial triangle", l.child);
    }
    if (l.k == 4) {
      std::vector<EdgeId> es = l.parent_edges;
      std::sort(es.begin(), es.end());
      bool found = false;
      for (auto& rc : rects) {
        std::vector<EdgeId> re(rc.e.begin(), rc.e.end());
        std::sort(re.begin(), re.end());
        found = found || re == es;
      }
      if (!found) return phi_reject("4-sum site is not a rectangle", l.child);
    }
  }
  for (size_t i = 1; i < rec.nodes.size(); ++i)
    if (!parents[i]) return phi_reject("summand not glued", (int)i);
  Graph g;
  try {
    g = evaluate(rec).graph;
  } catch (const Error& e) {
    return phi_reject(std::string("evaluation: ") + e.what());
  }
  if (three ? !is_3connected(g) : !is_2connected(g))
    return phi_reject(three ? "result not 3-connected" : "result not 2-connected");
  PhiCheck c;
  c.status = Status::found;
  c.graph = g;
  return c;
}

}  // namespace detail

/** \brief Validate every node and glue site, then evaluate to a member of Phi(L_{r,s}, P_r). */
inline PhiCheck build_phi(const PhiRecipe& pr, Weight r, int s, Budget& budget) {
  return detail::validate_phi(pr, r, s, false, budget);
}
inline PhiCheck build_phi(const PhiRecipe& pr, Weight r, int s) {
  Budget b;
  return build_phi(pr, r, s, b);
}

/** \brief Same for the 3-connected variant: P_r^3 base, 3-connected L summands on inner triangles. */
inline PhiCheck build_phi3(const PhiRecipe& pr, Weight r, int s, Budget& budget) {
  return detail::validate_phi(pr, r, s, true, budget);
}
inline PhiCheck build_phi3(const PhiRecipe& pr, Weight r, int s) {
  Budget b;
  return build_phi3(pr, r, s, b);
}

namespace gen {

/// Outer k-cycle plus chords: ladder rungs or a random dissection, leaving some quadrilaterals.
inline Graph random_disk(int k, Rng& rng) {
  Graph g = cycle(k);
  std::bernoulli_distribution coin(0.5), third(1.0 / 3);
  std::vector<std::vector<Vertex>> quads;
  if (coin(rng)) {
    // rungs i - (k-1-i); faces between consecutive rungs have two C edges
    std::vector<std::pair<Vertex, Vertex>> rungs;
    for (int i = 1; i < k - 2 - i; ++i) rungs.push_back({i, k - 1 - i});
    std::pair<Vertex, Vertex> prev{0, k - 1};
    for (auto [a, b] : rungs) {
      g.add_edge(a, b);
      quads.push_back({prev.first, a, b, prev.second});
      prev = {a, b};
    }
    for (auto& q : quads)
      if (third(rng)) g.add_edge(q[0], q[2]);
  } else {
    std::vector<std::vector<Vertex>> todo{{}};
    for (int i = 0; i < k; ++i) todo[0].push_back(i);
    while (!todo.empty()) {
      auto p = todo.back();
      todo.pop_back();
      int m = static_cast<int>(p.size());
      if (m <= 3 || (m == 4 && coin(rng))) continue;
      int i = std::uniform_int_distribution<int>(0, m - 1)(rng);
      int j = (i + std::uniform_int_distribution<int>(2, m - 2)(rng)) % m;
      if (i > j) std::swap(i, j);
      g.add_edge(p[i], p[j]);
      todo.push_back(std::vector<Vertex>(p.begin() + i, p.begin() + j + 1));
      std::vector<Vertex> rest(p.begin() + j, p.end());
      rest.insert(rest.end(), p.begin(), p.begin() + i + 1);
      todo.push_back(rest);
    }
  }
  return g;
}

/**
 * \brief Random member of Phi(L_{r,s}, P_r), deterministic per seed; validated by build_phi.
 */
inline std::pair<Graph, PhiRecipe> random_phi(Weight r, int s, int size, std::uint64_t seed) {
  require(r >= 2 && s >= 3, "random_phi: need r >= 2 and s >= 3");
  Rng rng(seed);
  int k = std::max(3, size);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Graph g = random_disk(k, rng);
    std::vector<Vertex> order(k);
    std::iota(order.begin(), order.end(), 0);
    PathWitness outer = cycle_from_vertices(g, order);
    auto pg0 = embed_with_facial_cycle(g, outer);
    require(pg0.has_value(), "internal: disk not planar");
    // stellate one inner triangle now and then
    if (std::bernoulli_distribution(1.0 / 3)(rng)) {
      std::vector<int> tris;
      for (int f = 0; f < pg0->face_count(); ++f)
        if (f != pg0->outer && pg0->faces[f].size() == 3) tris.push_back(f);
      if (!tris.empty()) {
        auto vs = pg0->face_vertices(tris[std::uniform_int_distribution<size_t>(0, tris.size() - 1)(rng)]);
        Vertex x = g.add_vertex();
        for (Vertex v : vs) g.add_edge(x, v);
      }
    }
    std::set<EdgeId> ce(outer.edges.begin(), outer.edges.end());
    for (auto& e : std::vector<Edge>(g.edges().begin(), g.edges().end()))
      g.set_weight(e.id, ce.count(e.id) ? std::uniform_int_distribution<Weight>(1, 3 * r)(rng)
                                        : std::uniform_int_distribution<Weight>(1, r - 1)(rng));
    auto pg = embed_with_facial_cycle(g, cycle_from_vertices(g, order));
    if (!pg || !in_Pr(*pg, r).member()) continue;
    PhiRecipe pr;
    pr.base = *pg;
    pr.recipe.add_node(g, {}, "P_r");
    // glue sites
    std::vector<std::pair<int, std::vector<EdgeId>>> sites;
    std::vector<std::vector<Vertex>> site_vs;
    for (auto& e : g.edges()) {
      sites.push_back({2, {e.id}});
      site_vs.push_back({e.u, e.v});
    }
    for (int f = 0; f < pg->face_count(); ++f)
      if (f != pg->outer && pg->face_is_cycle(f) && pg->faces[f].size() == 3) {
        sites.push_back({3, pg->face_edges(f)});
        site_vs.push_back(pg->face_vertices(f));
      }
    if (s >= 4)
      for (auto& rc : rectangles(*pg)) {
        sites.push_back({4, std::vector<EdgeId>(rc.e.begin(), rc.e.end())});
        site_vs.push_back(std::vector<Vertex>(rc.x.begin(), rc.x.end()));
      }
    std::vector<size_t> idx(sites.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    int want = std::uniform_int_distribution<int>(1, std::max(1, k / 2 + 1))(rng);
    std::set<EdgeId> used;
    for (size_t id : idx) {
      if (want == 0) break;
      auto& [kk, es] = sites[id];
      bool clash = false;
      for (EdgeId e : es) clash = clash || used.count(e);
      if (clash) continue;
      auto [h, glue] = random_L(r, s, kk, rng);
      int shift = std::uniform_int_distribution<int>(0, kk == 2 ? 1 : kk - 1)(rng);
      SumLink l;
      l.k = kk;
      l.parent = 0;
      l.parent_vertices = site_vs[id];
      l.parent_edges = es;
      if (kk == 2) {
        l.child_vertices = glue.vertices;
        l.child_edges = glue.edges;
        if (shift) std::swap(l.child_vertices[0], l.child_vertices[1]);
      } else {
        for (int i = 0; i < kk; ++i) {
          l.child_vertices.push_back(glue.vertices[(i + shift) % kk]);
          l.child_edges.push_back(glue.edges[(i + shift) % kk]);
        }
      }
      l.child = pr.recipe.add_node(h, {}, "L_{r,s}");
      pr.recipe.links.push_back(l);
      used.insert(es.begin(), es.end());
      --want;
    }
    auto chk = build_phi(pr, r, s);
    if (!chk.member()) continue;  // sums onto a small base can break 2-connectivity
    return {*chk.graph, pr};
  }
  throw Error("random_phi: no base found");
}

}  // namespace gen

// --- small theta characterizations ------------------------------------------------

enum class SmallVariant { v12t, v22t, v1tt, v2tt };

inline std::optional<SmallVariant> parse_variant(const std::string& s) {
  if (s == "12t") return SmallVariant::v12t;
  if (s == "22t") return SmallVariant::v22t;
  if (s == "1tt") return SmallVariant::v1tt;
  if (s == "2tt") return SmallVariant::v2tt;
  return std::nullopt;
}

inline std::array<Weight, 3> variant_thresholds(SmallVariant v, Weight t) {
  switch (v) {
    case SmallVariant::v12t: return {1, 2, t};
    case SmallVariant::v22t: return {2, 2, t};
    case SmallVariant::v1tt: return {1, t, t};
    default: return {2, t, t};
  }
}

struct SmallClassification {
  enum Kind { theta, in_class, neither, unknown } kind = unknown;
  std::optional<ThetaCertificate> certificate;
  ClassCertificate cls;
  int ell = -1;
  Weight threshold = -1;  // -1: no closed form
};

inline const char* kind_name(SmallClassification::Kind k) {
  switch (k) {
    case SmallClassification::theta: return "theta";
    case SmallClassification::in_class: return "in_class";
    case SmallClassification::neither: return "neither";
    default: return "unknown";
  }
}

/**
 * \brief theta-detection followed by the class checker of the variant. n_bound is the
 * summand bound for the O_n check (C(L_n) uses 8t^2).
 */
inline SmallClassification classify_small_theta(const Graph& g, SmallVariant v, Weight t, int n_bound,
                                                Budget& budget) {
  require(is_2connected(g), "classify_small_theta: graph must be 2-connected");
  if (v == SmallVariant::v12t) require(g.is_simple(), "classify_small_theta: the (1,2,t) variant needs a simple graph");
  SmallClassification out;
  auto th = variant_thresholds(v, t);
  Graph unit = with_unit_weights(g);
  auto r = contains_theta(unit, th[0], th[1], th[2], budget);
  if (r.found()) {
    out.kind = SmallClassification::theta;
    out.certificate = r.value;
    return out;
  }
  if (r.unknown()) return out;
  switch (v) {
    case SmallVariant::v12t: {
      out.cls.tag = "cycle";
      bool cyc = g.edge_count() == g.vertex_count();
      out.cls.status = cyc ? Status::found : Status::none;
      if (!cyc) out.cls.clause = "not a cycle";
      break;
    }
    case SmallVariant::v22t: out.cls = outerplanar_certificate(g); break;
    case SmallVariant::v1tt: out.cls = in_C_of_L(g, (int)bounds::chain_class_bound(t), budget); break;
    default: out.cls = in_O(g, n_bound, budget); break;
  }
  if (out.cls.member()) {
    out.kind = SmallClassification::in_class;
    return out;
  }
  if (out.cls.status == Status::unknown) return out;
  auto lp = longest_path(g, budget);
  if (!lp.exact) return out;
  out.ell = lp.edges;
  if (v == SmallVariant::v12t || v == SmallVariant::v22t) {
    out.threshold = bounds::small_theta_length(t);
    require(out.ell < out.threshold, "classify_small_theta: neither outcome with a path at the length bound");
  }
  out.kind = SmallClassification::neither;
  return out;
}

inline SmallClassification classify_small_theta(const Graph& g, SmallVariant v, Weight t, int n_bound) {
  Budget b;
  return classify_small_theta(g, v, t, n_bound, b);
}

}  // namespace thetalab

#endif
