#ifndef THETALAB_HEAVY_CPATH_HPP
#define THETALAB_HEAVY_CPATH_HPP

#include "planarity.hpp"
#include "theta.hpp"

namespace thetalab {

/** \brief Heaviest C-path: both ends on C, otherwise disjoint from C, no C edge. */
struct CPathResult {
  std::optional<PathWitness> path;
  bool exact = true;
};

inline CPathResult heaviest_cpath(const Graph& g, const PathWitness& c, Budget& budget,
                                  Weight goal = -1) {
  int n = g.vertex_count();
  std::vector<char> onc(n, 0), ce(g.edge_count(), 0);
  for (Vertex v : c.vertices) onc[v] = 1;
  for (EdgeId id : c.edges) ce[g.index_of(id)] = 1;
  CPathResult r;
  for (size_t i = 0; i < c.vertices.size(); ++i)
    for (size_t j = i + 1; j < c.vertices.size(); ++j) {
      auto hp = heaviest_path(g, c.vertices[i], c.vertices[j], budget, onc, ce, goal);
      if (!hp.exact) r.exact = false;
      if (hp.exists && (!r.path || hp.best.weight > r.path->weight)) r.path = hp.best;
      if (goal >= 0 && r.path && r.path->weight >= goal) return r;
    }
  return r;
}

inline CPathResult heaviest_cpath(const Graph& g, const PathWitness& c) {
  Budget b;
  return heaviest_cpath(g, c, b);
}

/**
 * \brief A theta_{t,t,t} from a heavy C-path (weight >= 2t) or a heavy non-C edge
 * (weight >= t), none if neither exists.
 */
inline Search<ThetaCertificate> heavy_cpath_theta(const PlaneGraph& pg, Weight t, Budget& budget) {
  const Graph& g = pg.graph;
  require(t >= 1, "heavy_cpath_theta: t >= 1");
  require(is_3connected(g), "heavy_cpath_theta: graph must be 3-connected");
  require(pg.face_is_cycle(pg.outer), "heavy_cpath_theta: outer face is not a cycle");
  PathWitness c = pg.outer_cycle();
  int k = static_cast<int>(c.vertices.size());
  int heavy_c = 0;
  for (EdgeId id : c.edges) {
    const Edge& e = g.edge(id);
    if (e.w >= t) ++heavy_c;
    for (EdgeId o : g.edges_between(e.u, e.v))
      require(g.edge(o).w <= e.w, "heavy_cpath_theta: cycle edge lighter than a parallel edge");
  }
  require(k >= 3 * t || heavy_c >= 2, "heavy_cpath_theta: cycle too short and too light");
  int n = g.vertex_count();
  std::vector<int> pos(n, -1);
  for (int i = 0; i < k; ++i) pos[c.vertices[i]] = i;
  std::set<EdgeId> cedges(c.edges.begin(), c.edges.end());

  // find the violation
  std::optional<PathWitness> p;
  EdgeId heavy_edge = -1;
  auto cp = heaviest_cpath(g, c, budget, 2 * t);
  if (cp.path && cp.path->weight >= 2 * t) p = cp.path;
  if (!p) {
    for (auto& e : g.edges()) {
      if (cedges.count(e.id) || e.w < t) continue;
      heavy_edge = e.id;
      std::vector<PathWitness> legs;
      std::vector<Vertex> srcs, sinks;
      std::vector<char> blocked(n, 0), be(g.edge_count(), 0);
      be[g.index_of(e.id)] = 1;
      for (Vertex v : {e.u, e.v})
        if (pos[v] < 0) srcs.push_back(v);
        else blocked[v] = 1;
      for (Vertex v : c.vertices)
        if (!blocked[v]) sinks.push_back(v);
      PathWitness pu{{e.u}, {}, 0}, pv{{e.v}, {}, 0};
      if (!srcs.empty()) {
        auto fan = fan_paths(g, srcs, sinks, (int)srcs.size(), blocked, be);
        require(fan.size() == srcs.size(), "internal: no legs from a heavy edge to C");
        for (auto& f : fan) (f.vertices.front() == e.u ? pu : pv) = f;
      }
      PathWitness mid{{e.u, e.v}, {e.id}, e.w};
      p = concat(g, concat(g, reversed(pu), mid), pv);
      break;
    }
  }
  if (!p) return Search<ThetaCertificate>::miss(!cp.exact);

  auto done = [&](ThetaCertificate cert) -> std::optional<Search<ThetaCertificate>> {
    cert.thresholds = {t, t, t};
    if (verify_theta(g, cert)) return Search<ThetaCertificate>::hit(cert);
    return std::nullopt;
  };
  Vertex v1 = p->vertices.front(), v2 = p->vertices.back();
  PathWitness a12 = cycle_arc(g, c, pos[v1], pos[v2]);
  PathWitness a21 = cycle_arc(g, c, pos[v2], pos[v1]);
  if (a12.weight >= t && a21.weight >= t) {
    ThetaCertificate cert;
    cert.branch_u = v1;
    cert.branch_v = v2;
    cert.paths = {a12, reversed(a21), *p};
    if (auto r = done(cert)) return *r;
  }
  // heavy arc runs v_s -> v_e; find x inside with both sub-arcs >= t
  bool light12 = a12.weight < t;
  PathWitness heavy = light12 ? a21 : a12;  // from hs to he
  PathWitness light = light12 ? a12 : a21;  // from he to hs
  Vertex he = heavy.vertices.back();
  Weight pre = 0;
  Vertex x = -1;
  int xi = -1;
  for (int i = 1; i + 1 < (int)heavy.vertices.size(); ++i) {
    pre += g.edge(heavy.edges[i - 1]).w;
    if (pre >= t && heavy.weight - pre >= t) {
      x = heavy.vertices[i];
      xi = i;
      break;
    }
  }
  if (x >= 0) {
    std::vector<Vertex> pv(p->vertices.begin(), p->vertices.end());
    DisjointPaths f(g, {x}, pv, {}, {}, 3);
    if (f.run(3) == 3) {
      auto qs = f.paths();
      std::vector<int> at(n, -1);
      for (int i = 0; i < (int)p->vertices.size(); ++i) at[p->vertices[i]] = i;
      std::sort(qs.begin(), qs.end(), [&](const PathWitness& a, const PathWitness& b) {
        return at[a.vertices.back()] < at[b.vertices.back()];
      });
      PathWitness q2 = qs[1];
      int yi = at[q2.vertices.back()];
      PathWitness to_start = reversed(subpath(g, *p, 0, yi));            // y -> v1
      PathWitness to_end = subpath(g, *p, yi, p->length());              // y -> v2
      for (int side = 0; side < 2; ++side) {
        PathWitness tail = side == 0 ? to_start : to_end;
        Vertex vj = tail.vertices.back();
        bool heavy_tail = heavy_edge >= 0
                              ? std::count(tail.edges.begin(), tail.edges.end(), heavy_edge) > 0
                              : tail.weight >= t;
        if (!heavy_tail) continue;
        // arcs from x: along the heavy arc to each end; one end continues through the light arc
        PathWitness x_to_he = subpath(g, heavy, xi, heavy.length());
        PathWitness x_to_hs = reversed(subpath(g, heavy, 0, xi));
        PathWitness first, second;
        if (vj == he) {
          first = x_to_he;
          second = concat(g, x_to_hs, reversed(light));
        } else {
          first = x_to_hs;
          second = concat(g, x_to_he, light);
        }
        ThetaCertificate cert;
        cert.branch_u = x;
        cert.branch_v = vj;
        cert.paths = {first, second, concat(g, q2, tail)};
        if (auto r = done(cert)) return *r;
      }
    }
  }
  // construction did not apply; settle exactly
  auto r = contains_theta(g, t, t, t, budget);
  require(!r.none(), "internal: violation found but no theta_{t,t,t}");
  return r;
}

inline Search<ThetaCertificate> heavy_cpath_theta(const PlaneGraph& pg, Weight t) {
  Budget b;
  return heavy_cpath_theta(pg, t, b);
}

}  // namespace thetalab

#endif
