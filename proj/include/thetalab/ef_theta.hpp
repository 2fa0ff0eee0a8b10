#ifndef THETALAB_EF_THETA_HPP
#define THETALAB_EF_THETA_HPP

#include "theta.hpp"

namespace thetalab {

struct EfThetaOutcome {
  enum class Kind { theta, exception_common_end, exception_k4, separator };
  Kind kind = Kind::theta;
  std::optional<ThetaCertificate> theta;
  Vertex common_end = -1;
  std::vector<Vertex> separator;
};

inline const char* kind_name(EfThetaOutcome::Kind k) {
  switch (k) {
    case EfThetaOutcome::Kind::theta: return "theta";
    case EfThetaOutcome::Kind::exception_common_end: return "exception_common_end";
    case EfThetaOutcome::Kind::exception_k4: return "exception_k4";
    default: return "separator";
  }
}

/// Z separates e from f: both keep an end outside Z and G - Z joins none of them.
inline bool separates(const Graph& g, const std::vector<Vertex>& z, EdgeId e, EdgeId f) {
  std::vector<char> rem(g.vertex_count(), 0);
  for (Vertex v : z) rem[v] = 1;
  std::vector<Vertex> es, fs;
  for (Vertex v : {g.edge(e).u, g.edge(e).v})
    if (!rem[v]) es.push_back(v);
  for (Vertex v : {g.edge(f).u, g.edge(f).v})
    if (!rem[v]) fs.push_back(v);
  if (es.empty() || fs.empty()) return false;
  std::vector<int> comp;
  components(g, comp, &rem);
  for (Vertex a : es)
    for (Vertex b : fs)
      if (comp[a] == comp[b]) return false;
  return true;
}

/// e, f on different branch paths; the remaining path has length >= 2.
inline bool verify_ef_theta(const Graph& g, const ThetaCertificate& c, EdgeId e, EdgeId f) {
  if (!verify_theta(g, c)) return false;
  int pe = -1, pf = -1;
  for (int i = 0; i < 3; ++i) {
    auto& es = c.paths[i].edges;
    if (std::count(es.begin(), es.end(), e)) pe = i;
    if (std::count(es.begin(), es.end(), f)) pf = i;
  }
  if (pe < 0 || pf < 0 || pe == pf) return false;
  int third = 3 - pe - pf;
  return c.paths[third].length() >= 2;
}

namespace detail {

inline std::optional<ThetaCertificate> ef_search(const Graph& g, EdgeId e, EdgeId f,
                                                 Budget& budget) {
  int ie = g.index_of(e), jf = g.index_of(f);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) < 3) continue;
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (g.degree(v) < 3) continue;
      std::array<PathSlot, 3> slots{PathSlot{0, ie, 1}, PathSlot{0, jf, 1}, PathSlot{0, -1, 2}};
      TripleSearch ts(g, u, v, slots, budget);
      if (ts.run() == Status::found) {
        ThetaCertificate c;
        c.branch_u = u;
        c.branch_v = v;
        c.paths = ts.result();
        return c;
      }
    }
  }
  return std::nullopt;
}

/// Re-express a certificate found in a subgraph (ids kept) in the host graph.
inline ThetaCertificate lift_sub(const Subgraph& s, ThetaCertificate c) {
  c.branch_u = s.original[c.branch_u];
  c.branch_v = s.original[c.branch_v];
  for (auto& p : c.paths)
    for (auto& x : p.vertices) x = s.original[x];
  return c;
}

}  // namespace detail

/** \brief ef-theta, or a 2-vertex separator, or one of the two exceptional cases. */
inline EfThetaOutcome find_ef_theta(const Graph& g, EdgeId e, EdgeId f, Budget& budget) {
  require(g.is_simple(), "find_ef_theta: graph must be simple");
  require(is_2connected(g), "find_ef_theta: graph must be 2-connected");
  require(g.has_edge(e) && g.has_edge(f) && e != f, "find_ef_theta: need two distinct edges");
  EfThetaOutcome out;
  int n = g.vertex_count();
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (separates(g, {x, y}, e, f)) {
        out.kind = EfThetaOutcome::Kind::separator;
        out.separator = {x, y};
        return out;
      }
  const Edge& ee = g.edge(e);
  const Edge& ff = g.edge(f);
  auto accept = [&](ThetaCertificate c) {
    c.thresholds = {0, 0, 0};
    if (!verify_ef_theta(g, c, e, f)) return false;
    out.kind = EfThetaOutcome::Kind::theta;
    out.theta = c;
    return true;
  };
  Vertex common = -1;
  for (Vertex p : {ee.u, ee.v})
    if (p == ff.u || p == ff.v) common = p;
  if (common >= 0) {
    Vertex a = common, b = ee.other(a), d = ff.other(a);
    if (g.degree(a) == 2) {
      out.kind = EfThetaOutcome::Kind::exception_common_end;
      out.common_end = a;
      return out;
    }
    Vertex x = -1;
    for (Vertex y : g.neighbors(a))
      if (y != b && y != d) {
        x = y;
        break;
      }
    std::vector<char> bl(n, 0);
    bl[a] = bl[x] = 1;
    auto p = shortest_path(g, b, d, bl);
    if (p) {
      std::vector<char> onp(n, 0), bl2(n, 0);
      for (Vertex v : p->vertices) onp[v] = 1;
      bl2[a] = 1;
      // BFS from x to the first vertex of P
      std::vector<int> via(n, -2);
      std::vector<Vertex> q{x};
      via[x] = -1;
      Vertex hit = -1;
      for (size_t h = 0; h < q.size() && hit < 0; ++h) {
        for (int i : g.incident(q[h])) {
          Vertex y = g.edge_at(i).other(q[h]);
          if (bl2[y] || via[y] != -2) continue;
          via[y] = i;
          if (onp[y]) {
            hit = y;
            break;
          }
          q.push_back(y);
        }
      }
      if (hit >= 0) {
        PathWitness qx;
        for (Vertex y = hit; y != x;) {
          qx.vertices.push_back(y);
          qx.edges.push_back(g.edge_at(via[y]).id);
          y = g.edge_at(via[y]).other(y);
        }
        qx.vertices.push_back(x);
        std::reverse(qx.vertices.begin(), qx.vertices.end());
        std::reverse(qx.edges.begin(), qx.edges.end());
        int k = static_cast<int>(std::find(p->vertices.begin(), p->vertices.end(), hit) -
                                 p->vertices.begin());
        ThetaCertificate c;
        c.branch_u = a;
        c.branch_v = hit;
        PathWitness pe{{a}, {e}, 0}, pf{{a}, {f}, 0}, px{{a}, {g.edges_between(a, x)[0]}, 0};
        pe.vertices.push_back(b);
        pf.vertices.push_back(d);
        px.vertices.push_back(x);
        c.paths[0] = concat(g, pe, subpath(g, *p, 0, k));
        c.paths[1] = concat(g, pf, reversed(subpath(g, *p, k, p->length())));
        c.paths[2] = concat(g, px, qx);
        if (accept(c)) return out;
      }
    }
    if (auto c = detail::ef_search(g, e, f, budget); c && accept(*c)) return out;
    throw Error("internal: common-end case produced no ef-theta");
  }
  // matching case: cycle through e and f, chord pq, augmenting path R
  Vertex a = ee.u, b = ee.v, c = ff.u, d = ff.v;
  std::vector<char> be(g.edge_count(), 0);
  be[g.index_of(e)] = be[g.index_of(f)] = 1;
  auto fan = fan_paths(g, {a, b}, {c, d}, 2, {}, be);
  if (fan.size() == 2) {
    PathWitness pp = fan[0].vertices.front() == a ? fan[0] : fan[1];
    PathWitness qq = fan[0].vertices.front() == a ? fan[1] : fan[0];
    if (pp.vertices.back() == d) std::swap(c, d);
    // P: a..c, Q: b..d
    std::vector<int> posq(n, -1), posp(n, -1);
    for (int i = 0; i < (int)pp.vertices.size(); ++i) posp[pp.vertices[i]] = i;
    for (int i = 0; i < (int)qq.vertices.size(); ++i) posq[qq.vertices[i]] = i;
    std::set<EdgeId> cyc(pp.edges.begin(), pp.edges.end());
    cyc.insert(qq.edges.begin(), qq.edges.end());
    cyc.insert(e);
    cyc.insert(f);
    Vertex bp = -1, bq = -1;
    EdgeId chord = -1;
    for (int i = 0; i + 1 < (int)pp.vertices.size() && chord < 0; ++i) {
      Vertex p = pp.vertices[i];
      Vertex best = -1;
      for (int j : g.incident(p)) {
        Vertex q = g.edge_at(j).other(p);
        if (posq[q] <= 0 || cyc.count(g.edge_at(j).id)) continue;
        if (best < 0 || q < best) best = q;
      }
      if (best >= 0) {
        bp = p;
        bq = best;
        chord = g.edges_between(p, best)[0];
      }
    }
    if (chord >= 0) {
      // cycle vertices in order a..c (P), d..b (Q reversed)
      std::vector<Vertex> ring = pp.vertices;
      for (int i = (int)qq.vertices.size() - 1; i >= 0; --i) ring.push_back(qq.vertices[i]);
      std::vector<char> rem(n, 0);
      rem[bp] = rem[bq] = 1;
      int ip = static_cast<int>(std::find(ring.begin(), ring.end(), bp) - ring.begin());
      int iq = static_cast<int>(std::find(ring.begin(), ring.end(), bq) - ring.begin());
      int k = static_cast<int>(ring.size());
      std::vector<char> side_a(n, 0), side_b(n, 0);
      for (int s = (ip + 1) % k; s != iq; s = (s + 1) % k) side_a[ring[s]] = 1;
      for (int s = (iq + 1) % k; s != ip; s = (s + 1) % k) side_b[ring[s]] = 1;
      std::vector<int> via(n, -2);
      std::vector<Vertex> q;
      for (Vertex v = 0; v < n; ++v)
        if (side_a[v]) {
          via[v] = -1;
          q.push_back(v);
        }
      Vertex hit = -1;
      for (size_t h = 0; h < q.size() && hit < 0; ++h)
        for (int i : g.incident(q[h])) {
          Vertex y = g.edge_at(i).other(q[h]);
          if (rem[y] || via[y] != -2) continue;
          if (side_a[q[h]] && side_b[y] && cyc.count(g.edge_at(i).id)) continue;
          via[y] = i;
          if (side_b[y]) {
            hit = y;
            break;
          }
          q.push_back(y);
        }
      std::vector<EdgeId> hedges(cyc.begin(), cyc.end());
      hedges.push_back(chord);
      for (Vertex y = hit; y >= 0 && via[y] >= 0;) {
        hedges.push_back(g.edge_at(via[y]).id);
        y = g.edge_at(via[y]).other(y);
      }
      auto sub = extract(g, hedges);
      if (auto cert = detail::ef_search(sub.graph, e, f, budget);
          cert && accept(detail::lift_sub(sub, *cert)))
        return out;
    }
  }
  if (auto cert = detail::ef_search(g, e, f, budget); cert && accept(*cert)) return out;
  if (budget.exhausted()) throw Error("find_ef_theta: search budget exceeded");
  if (n == 4 && g.edge_count() == 6) {
    out.kind = EfThetaOutcome::Kind::exception_k4;
    return out;
  }
  throw Error("internal: no ef-theta although the preconditions hold");
}

inline EfThetaOutcome find_ef_theta(const Graph& g, EdgeId e, EdgeId f) {
  Budget budget;
  return find_ef_theta(g, e, f, budget);
}

}  // namespace thetalab

#endif
