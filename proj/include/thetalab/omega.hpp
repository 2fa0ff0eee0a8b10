#ifndef THETALAB_OMEGA_HPP
#define THETALAB_OMEGA_HPP

#include <array>
#include <functional>

#include "decompose.hpp"
#include "patterns.hpp"
#include "planarity.hpp"

namespace thetalab {

/** \brief Cyclically ordered vertices v_1..v_n (n >= 4) plus some edges v_i v_{i+1}. */
struct Circlet {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  int size() const { return static_cast<int>(vertices.size()); }
};

/// Per slot i: the circlet edge joining v_i and v_{i+1}, or -1.
inline std::vector<EdgeId> circlet_slots(const Graph& g, const Circlet& om) {
  int n = om.size();
  require(n >= 4, "circlet needs at least 4 vertices");
  std::set<Vertex> vs;
  for (Vertex v : om.vertices) {
    require(v >= 0 && v < g.vertex_count(), "circlet vertex out of range");
    require(vs.insert(v).second, "circlet vertices must be distinct");
  }
  std::vector<EdgeId> slot(n, -1);
  for (EdgeId id : om.edges) {
    require(g.has_edge(id), "circlet edge not in the graph");
    int hit = -1;
    for (int i = 0; i < n; ++i)
      if (g.edge(id).joins(om.vertices[i], om.vertices[(i + 1) % n])) hit = i;
    require(hit >= 0, "circlet edge must join consecutive circlet vertices");
    require(slot[hit] < 0, "two circlet edges on the same slot");
    slot[hit] = id;
  }
  return slot;
}

inline bool has_isolated(const Graph& g, const Circlet& om) {
  auto slot = circlet_slots(g, om);
  int n = om.size();
  for (int i = 0; i < n; ++i)
    if (slot[i] < 0 && slot[(i + n - 1) % n] < 0) return true;
  return false;
}

/// Same cycle traversed the other way.
inline PathWitness reversed_cycle(const PathWitness& c) {
  PathWitness r;
  int k = static_cast<int>(c.vertices.size());
  for (int i = 0; i < k; ++i) r.vertices.push_back(c.vertices[(k - i) % k]);
  for (int i = 0; i < k; ++i) r.edges.push_back(c.edges[(2 * k - 1 - i) % k]);
  r.weight = c.weight;
  return r;
}

namespace detail {

/// Positions of the circlet on c, oriented forward; empty if c is not an Omega-cycle.
inline std::vector<int> omega_positions(const Graph& g, PathWitness& c, const Circlet& om) {
  if (!is_cycle(g, c)) return {};
  int k = static_cast<int>(c.vertices.size()), n = om.size();
  std::vector<int> at(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) at[c.vertices[i]] = i;
  std::set<EdgeId> ce(c.edges.begin(), c.edges.end());
  for (EdgeId id : om.edges)
    if (!ce.count(id)) return {};
  for (Vertex v : om.vertices)
    if (at[v] < 0) return {};
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<int> q;
    for (Vertex v : om.vertices) q.push_back(at[v]);
    int turns = 0;
    for (int i = 0; i < n; ++i) turns += q[(i + 1) % n] < q[i];
    if (turns == 1) return q;
    c = reversed_cycle(c);
    for (int i = 0; i < k; ++i) at[c.vertices[i]] = i;
  }
  return {};
}

inline bool in_arc(int p, int a, int b, int k) { return (p - a + k) % k <= (b - a + k) % k; }

}  // namespace detail

/// Omega-cycle check: contains V(Omega) in cyclic order and E(Omega).
inline bool is_omega_cycle(const Graph& g, PathWitness c, const Circlet& om) {
  return !detail::omega_positions(g, c, om).empty();
}

/**
 * \brief Enumerate Omega-cycles, lexicographic by segment vertex sequences.
 * The callback returns false to stop. Returns false when the budget ran out.
 */
inline bool for_each_omega_cycle(const Graph& g, const Circlet& om, Budget& budget,
                                 const std::function<bool(const PathWitness&)>& cb) {
  auto slot = circlet_slots(g, om);
  int n = om.size();
  std::vector<char> used(g.vertex_count(), 0);
  for (Vertex v : om.vertices) used[v] = 1;
  std::vector<std::vector<int>> inc(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    inc[x] = g.incident(x);
    std::sort(inc[x].begin(), inc[x].end(), [&](int a, int b) {
      return std::make_pair(g.edge_at(a).other(x), g.edge_at(a).id) <
             std::make_pair(g.edge_at(b).other(x), g.edge_at(b).id);
    });
  }
  PathWitness cur{{om.vertices[0]}, {}, 0};
  std::set<EdgeId> omega_edges(om.edges.begin(), om.edges.end());
  bool stop = false;
  std::function<void(int)> seg;
  std::function<void(int, Vertex, Vertex)> walk = [&](int i, Vertex x, Vertex target) {
    if (!budget.tick()) {
      stop = true;
      return;
    }
    for (int k : inc[x]) {
      if (stop) return;
      Vertex y = g.edge_at(k).other(x);
      if (omega_edges.count(g.edge_at(k).id)) continue;
      if (y == target) {
        cur.vertices.push_back(y);
        cur.edges.push_back(g.edge_at(k).id);
        seg(i + 1);
        cur.vertices.pop_back();
        cur.edges.pop_back();
        continue;
      }
      if (used[y]) continue;
      used[y] = 1;
      cur.vertices.push_back(y);
      cur.edges.push_back(g.edge_at(k).id);
      walk(i, y, target);
      cur.vertices.pop_back();
      cur.edges.pop_back();
      used[y] = 0;
    }
  };
  seg = [&](int i) {
    if (stop) return;
    if (i == n) {
      PathWitness c = cur;
      c.vertices.pop_back();
      c.weight = weight_of(g, c.edges);
      if (!cb(c)) stop = true;
      return;
    }
    Vertex target = om.vertices[(i + 1) % n];
    if (slot[i] >= 0) {
      cur.vertices.push_back(target);
      cur.edges.push_back(slot[i]);
      seg(i + 1);
      cur.vertices.pop_back();
      cur.edges.pop_back();
      return;
    }
    walk(i, om.vertices[i], target);
  };
  seg(0);
  return !budget.exhausted();
}

inline Search<PathWitness> find_omega_cycle(const Graph& g, const Circlet& om, Budget& budget) {
  std::optional<PathWitness> hit;
  bool complete = for_each_omega_cycle(g, om, budget, [&](const PathWitness& c) {
    hit = c;
    return false;
  });
  if (hit) return Search<PathWitness>::hit(*hit);
  return Search<PathWitness>::miss(!complete);
}

inline Search<PathWitness> find_omega_cycle(const Graph& g, const Circlet& om) {
  Budget b;
  return find_omega_cycle(g, om, b);
}

// --- crosses -------------------------------------------------------------------

/** \brief Two disjoint C-paths with interleaved ends u, x, v, y around the cycle. */
struct CrossCertificate {
  PathWitness cycle;
  PathWitness path1, path2;
  std::array<int, 4> ends{};  // cycle positions of path1 ends, then path2 ends
};

/// C-path: ends on C, interior off C, at least one edge, not an edge of C.
inline bool is_cpath(const Graph& g, const PathWitness& c, const PathWitness& p) {
  if (!is_path(g, p) || p.length() < 1) return false;
  std::set<Vertex> cv(c.vertices.begin(), c.vertices.end());
  std::set<EdgeId> ce(c.edges.begin(), c.edges.end());
  if (!cv.count(p.vertices.front()) || !cv.count(p.vertices.back())) return false;
  for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
    if (cv.count(p.vertices[i])) return false;
  return !(p.length() == 1 && ce.count(p.edges[0]));
}

/// Independent check of the cross definition.
inline bool verify_cross(const Graph& g, const CrossCertificate& x) {
  if (!is_cycle(g, x.cycle) || !is_cpath(g, x.cycle, x.path1) || !is_cpath(g, x.cycle, x.path2)) return false;
  std::set<Vertex> a(x.path1.vertices.begin(), x.path1.vertices.end());
  for (Vertex v : x.path2.vertices)
    if (a.count(v)) return false;
  int k = static_cast<int>(x.cycle.vertices.size());
  std::vector<int> at(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) at[x.cycle.vertices[i]] = i;
  std::array<int, 4> e{at[x.path1.vertices.front()], at[x.path1.vertices.back()],
                       at[x.path2.vertices.front()], at[x.path2.vertices.back()]};
  if (e != x.ends) return false;
  int lo = std::min(e[0], e[1]), hi = std::max(e[0], e[1]);
  bool in2 = e[2] > lo && e[2] < hi, in3 = e[3] > lo && e[3] < hi;
  return in2 != in3;
}

/// Each segment of the Omega-cycle holds at most two of the four ends.
inline bool verify_cross_segments(const Graph& g, const CrossCertificate& x, const Circlet& om) {
  if (!verify_cross(g, x)) return false;
  PathWitness c = x.cycle;
  auto q = detail::omega_positions(g, c, om);
  if (q.empty()) return false;
  int k = static_cast<int>(c.vertices.size()), n = om.size();
  std::vector<int> at(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) at[c.vertices[i]] = i;
  std::array<int, 4> e{at[x.path1.vertices.front()], at[x.path1.vertices.back()],
                       at[x.path2.vertices.front()], at[x.path2.vertices.back()]};
  for (int i = 0; i < n; ++i) {
    int cnt = 0;
    for (int p : e) cnt += detail::in_arc(p, q[i], q[(i + 1) % n], k);
    if (cnt > 2) return false;
  }
  return true;
}

/// At least three of the four arcs between consecutive ends carry an edge of Omega.
inline bool verify_cross_omega_edges(const Graph& g, const CrossCertificate& x, const Circlet& om) {
  if (!verify_cross(g, x)) return false;
  PathWitness c = x.cycle;
  if (detail::omega_positions(g, c, om).empty()) return false;
  std::vector<int> e(x.ends.begin(), x.ends.end());
  std::sort(e.begin(), e.end());
  int k = static_cast<int>(x.cycle.vertices.size());
  std::set<EdgeId> oe(om.edges.begin(), om.edges.end());
  int good = 0;
  for (int i = 0; i < 4; ++i) {
    int a = e[i], b = e[(i + 1) % 4];
    bool any = false;
    for (int j = a; j != b; j = (j + 1) % k) any |= oe.count(x.cycle.edges[j]) > 0;
    good += any;
  }
  return good >= 3;
}

using CrossFilter = std::function<bool(const CrossCertificate&)>;

/** \brief Exact search for a cross of C; `accept` filters candidates. */
inline Search<CrossCertificate> cross_search(const Graph& g, const PathWitness& c, Budget& budget,
                                             const CrossFilter& accept = {}) {
  require(is_cycle(g, c), "cross_search: not a cycle");
  int n = g.vertex_count(), k = static_cast<int>(c.vertices.size());
  std::vector<int> at(n, -1);
  for (int i = 0; i < k; ++i) at[c.vertices[i]] = i;
  std::vector<char> ce(g.edge_count(), 0);
  for (EdgeId id : c.edges) ce[g.index_of(id)] = 1;
  std::optional<CrossCertificate> found;
  std::vector<char> onp(n, 0);
  PathWitness p1;
  auto try_second = [&]() {
    int a = at[p1.vertices.front()], b = at[p1.vertices.back()];
    int lo = std::min(a, b), hi = std::max(a, b);
    if (hi - lo < 2 || k - (hi - lo) < 2) return false;
    std::vector<char> blocked(n, 0);
    for (Vertex v = 0; v < n; ++v) blocked[v] = at[v] >= 0 || onp[v];
    for (int px = lo + 1; px < hi; ++px)
      for (int py = 0; py < k; ++py) {
        if (py >= lo && py <= hi) continue;
        if (!budget.tick()) return false;
        auto q = shortest_path(g, c.vertices[px], c.vertices[py], blocked, ce);
        if (!q) continue;
        CrossCertificate x{c, p1, *q, {a, b, px, py}};
        if (accept && !accept(x)) continue;
        found = x;
        return true;
      }
    return false;
  };
  std::function<bool(Vertex)> grow = [&](Vertex x) {
    if (budget.exhausted()) return false;
    for (int i : g.incident(x)) {
      if (ce[i]) continue;
      Vertex y = g.edge_at(i).other(x);
      if (onp[y]) continue;
      p1.vertices.push_back(y);
      p1.edges.push_back(g.edge_at(i).id);
      bool r = false;
      if (at[y] >= 0) {
        if (at[y] > at[p1.vertices.front()]) r = try_second();
      } else {
        onp[y] = 1;
        r = grow(y);
        onp[y] = 0;
      }
      p1.vertices.pop_back();
      p1.edges.pop_back();
      if (r) return true;
    }
    return false;
  };
  for (int i = 0; i < k && !found; ++i) {
    p1 = PathWitness{{c.vertices[i]}, {}, 0};
    onp[c.vertices[i]] = 1;
    grow(c.vertices[i]);
    onp[c.vertices[i]] = 0;
    if (budget.exhausted()) break;
  }
  if (found) {
    found->path1.weight = weight_of(g, found->path1.edges);
    require(verify_cross(g, *found), "internal: cross failed verification");
    return Search<CrossCertificate>::hit(*found);
  }
  return Search<CrossCertificate>::miss(budget.exhausted());
}

inline Search<CrossCertificate> cross_search(const Graph& g, const PathWitness& c) {
  Budget b;
  return cross_search(g, c, b);
}

// --- tripods -----------------------------------------------------------------

struct Tripod {
  Vertex u = -1, v = -1;
  std::array<PathWitness, 3> paths;
  std::array<PathWitness, 3> legs;  // s_i -> t_i
  std::array<Vertex, 3> feet{};
};

inline bool verify_tripod(const Graph& g, const PathWitness& c, const Tripod& t) {
  int n = g.vertex_count();
  std::vector<char> onc(n, 0);
  for (Vertex x : c.vertices) onc[x] = 1;
  if (t.u == t.v || t.u < 0 || t.v < 0 || t.u >= n || t.v >= n || onc[t.u] || onc[t.v]) return false;
  std::set<Vertex> inner;
  for (auto& p : t.paths) {
    if (!is_path(g, p) || p.length() < 2) return false;
    if (!((p.vertices.front() == t.u && p.vertices.back() == t.v))) return false;
    for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
      if (!inner.insert(p.vertices[i]).second) return false;
  }
  std::set<Vertex> legv;
  for (int i = 0; i < 3; ++i) {
    const PathWitness& q = t.legs[i];
    const PathWitness& p = t.paths[i];
    if (!is_path(g, q) || q.vertices.back() != t.feet[i] || !onc[t.feet[i]]) return false;
    Vertex s = q.vertices.front();
    if (!std::count(p.vertices.begin() + 1, p.vertices.end() - 1, s)) return false;
    for (Vertex x : q.vertices) {
      if (x == t.u || x == t.v || !legv.insert(x).second) return false;
    }
    std::vector<Vertex> meet;
    for (Vertex x : p.vertices)
      if (onc[x]) meet.push_back(x);
    if (!meet.empty() && !(meet.size() == 1 && meet[0] == s && s == t.feet[i])) return false;
  }
  return true;
}

namespace detail {

/// All u-v paths as vertex/edge sequences (budgeted).
inline std::vector<PathWitness> all_paths(const Graph& g, Vertex u, Vertex v, Budget& budget,
                                          const std::vector<char>& blocked = {}) {
  std::vector<PathWitness> out;
  std::vector<char> on(g.vertex_count(), 0);
  PathWitness cur{{u}, {}, 0};
  on[u] = 1;
  std::function<void(Vertex)> go = [&](Vertex x) {
    if (!budget.tick()) return;
    if (x == v) {
      PathWitness p = cur;
      p.weight = weight_of(g, p.edges);
      out.push_back(p);
      return;
    }
    for (int i : g.incident(x)) {
      Vertex y = g.edge_at(i).other(x);
      if (on[y] || (!blocked.empty() && blocked[y] && y != v)) continue;
      on[y] = 1;
      cur.vertices.push_back(y);
      cur.edges.push_back(g.edge_at(i).id);
      go(y);
      cur.vertices.pop_back();
      cur.edges.pop_back();
      on[y] = 0;
      if (budget.exhausted()) return;
    }
  };
  go(u);
  return out;
}

}  // namespace detail

/** \brief Exact tripod search with respect to C. */
inline Search<Tripod> tripod_search(const Graph& g, const PathWitness& c, Budget& budget) {
  require(is_cycle(g, c), "tripod_search: not a cycle");
  int n = g.vertex_count();
  std::vector<char> onc(n, 0);
  for (Vertex x : c.vertices) onc[x] = 1;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (onc[u] || onc[v]) continue;
      auto ps = detail::all_paths(g, u, v, budget);
      // a path may touch C in at most one interior vertex
      std::vector<PathWitness> ok;
      for (auto& p : ps) {
        int meet = 0;
        for (Vertex x : p.vertices) meet += onc[x];
        if (p.length() >= 2 && meet <= 1) ok.push_back(p);
      }
      int m = static_cast<int>(ok.size());
      auto disjoint = [&](const PathWitness& a, const PathWitness& b) {
        std::set<Vertex> s(a.vertices.begin() + 1, a.vertices.end() - 1);
        for (size_t i = 1; i + 1 < b.vertices.size(); ++i)
          if (s.count(b.vertices[i])) return false;
        return true;
      };
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          if (!disjoint(ok[i], ok[j])) continue;
          for (int l = j + 1; l < m; ++l) {
            if (!budget.tick()) return Search<Tripod>::miss(true);
            if (!disjoint(ok[i], ok[l]) || !disjoint(ok[j], ok[l])) continue;
            std::array<const PathWitness*, 3> tri{&ok[i], &ok[j], &ok[l]};
            // choose s_i on each path; forced where the path meets C
            std::array<std::vector<Vertex>, 3> choice;
            for (int a = 0; a < 3; ++a) {
              const auto& pv = tri[a]->vertices;
              for (size_t b = 1; b + 1 < pv.size(); ++b)
                if (onc[pv[b]]) choice[a] = {pv[b]};
              if (choice[a].empty()) choice[a].assign(pv.begin() + 1, pv.end() - 1);
            }
            for (Vertex s0 : choice[0])
              for (Vertex s1 : choice[1])
                for (Vertex s2 : choice[2]) {
                  std::array<Vertex, 3> s{s0, s1, s2};
                  std::vector<char> blocked(n, 0);
                  blocked[u] = blocked[v] = 1;
                  for (auto* p : tri)
                    for (Vertex x : p->vertices) blocked[x] = 1;
                  std::vector<Vertex> src, sinks;
                  std::array<PathWitness, 3> legs;
                  std::set<Vertex> taken;
                  for (int a = 0; a < 3; ++a) {
                    if (onc[s[a]]) {
                      legs[a] = PathWitness{{s[a]}, {}, 0};
                      taken.insert(s[a]);
                    } else {
                      src.push_back(s[a]);
                      blocked[s[a]] = 0;
                    }
                  }
                  for (Vertex x : c.vertices)
                    if (!taken.count(x)) sinks.push_back(x);
                    else blocked[x] = 1;
                  if (!src.empty()) {
                    auto fan = fan_paths(g, src, sinks, static_cast<int>(src.size()), blocked);
                    if (fan.size() != src.size()) continue;
                    for (auto& f : fan)
                      for (int a = 0; a < 3; ++a)
                        if (f.vertices.front() == s[a]) legs[a] = f;
                  }
                  Tripod t;
                  t.u = u;
                  t.v = v;
                  for (int a = 0; a < 3; ++a) {
                    t.paths[a] = *tri[a];
                    t.legs[a] = legs[a];
                    t.feet[a] = legs[a].vertices.back();
                  }
                  require(verify_tripod(g, c, t), "internal: tripod failed verification");
                  return Search<Tripod>::hit(t);
                }
          }
        }
    }
  return Search<Tripod>::miss(budget.exhausted());
}

inline Search<Tripod> tripod_search(const Graph& g, const PathWitness& c) {
  Budget b;
  return tripod_search(g, c, b);
}

struct CrossOrSeparation {
  std::optional<CrossCertificate> cross;
  std::optional<Separation> separation;  // V(C) on side 1, the tripod on side 2
};

/** \brief A cross of C, else a <= 3-separation with C on side 1 and the tripod on side 2. */
inline CrossOrSeparation cross_or_small_separation(const Graph& g, const PathWitness& c, const Tripod& t,
                                                   Budget& budget) {
  require(c.vertices.size() >= 4, "cross_or_small_separation: |C| >= 4 required");
  require(verify_tripod(g, c, t), "cross_or_small_separation: invalid tripod");
  CrossOrSeparation out;
  auto x = cross_search(g, c, budget);
  if (x.found()) {
    out.cross = x.value;
    return out;
  }
  require(!x.unknown(), "cross_or_small_separation: budget exhausted");
  int n = g.vertex_count();
  std::vector<char> onc(n, 0), ont(n, 0);
  for (Vertex v : c.vertices) onc[v] = 1;
  for (auto& p : t.paths)
    for (Vertex v : p.vertices) ont[v] = 1;
  for (int k = 0; k <= 3 && !out.separation; ++k)
    detail::for_each_subset(n, k, [&](const std::vector<int>& cut) {
      std::vector<int> comp;
      int cc = detail::components_without(g, cut, comp);
      if (cc < 2) return true;
      std::vector<char> hasc(cc, 0), hast(cc, 0);
      for (Vertex v = 0; v < n; ++v) {
        if (comp[v] < 0) continue;
        hasc[comp[v]] |= onc[v];
        hast[comp[v]] |= ont[v];
      }
      bool any_t = false;
      for (int i = 0; i < cc; ++i) {
        if (hasc[i] && hast[i]) return true;
        any_t |= hast[i];
      }
      if (!any_t) return true;
      Separation s;
      s.cut = cut;
      for (auto& e : g.edges()) {
        int cu = comp[e.u] >= 0 ? comp[e.u] : comp[e.v];
        (cu >= 0 && hast[cu] ? s.part2 : s.part1).push_back(e.id);
      }
      if (!is_separation(g, s)) return true;
      out.separation = s;
      return false;
    });
  require(out.separation.has_value(), "cross_or_small_separation: neither a cross nor a separation");
  return out;
}

inline CrossOrSeparation cross_or_small_separation(const Graph& g, const PathWitness& c, const Tripod& t) {
  Budget b;
  return cross_or_small_separation(g, c, t, b);
}

// --- bridge normalization -------------------------------------------------------

namespace detail {

inline std::vector<EdgeId> witness_edges(const PatternWitness& h, int skip = -1) {
  std::vector<EdgeId> out;
  for (int i = 0; i < (int)h.branch_paths.size(); ++i)
    if (i != skip) out.insert(out.end(), h.branch_paths[i].edges.begin(), h.branch_paths[i].edges.end());
  return out;
}

/// Alpha of a branch replacement r: (||J_0||, sizes of r-local bridges descending).
inline std::vector<int> alpha_of(const Graph& g, const std::vector<EdgeId>& rest,
                                 const std::vector<Vertex>& branch_vertices, const PathWitness& r) {
  std::vector<EdgeId> h = rest;
  h.insert(h.end(), r.edges.begin(), r.edges.end());
  std::set<Vertex> onr(r.vertices.begin(), r.vertices.end());
  int j0 = 0;
  std::vector<int> local;
  for (auto& b : bridges_of(g, h, branch_vertices)) {
    bool is_local = std::all_of(b.feet.begin(), b.feet.end(), [&](Vertex f) { return onr.count(f) > 0; });
    if (is_local) local.push_back(static_cast<int>(b.edges.size()));
    else j0 += static_cast<int>(b.edges.size());
  }
  std::sort(local.rbegin(), local.rend());
  std::vector<int> a{j0};
  a.insert(a.end(), local.begin(), local.end());
  return a;
}

}  // namespace detail

/// No H-bridge has all its feet on one branch.
inline bool all_bridges_stable(const Graph& g, const PatternWitness& h) {
  for (auto& b : bridges_of(g, detail::witness_edges(h), h.branch)) {
    for (auto& p : h.branch_paths) {
      std::set<Vertex> on(p.vertices.begin(), p.vertices.end());
      if (std::all_of(b.feet.begin(), b.feet.end(), [&](Vertex f) { return on.count(f) > 0; })) return false;
    }
  }
  return true;
}

struct NormalizeResult {
  PatternWitness h;
  std::vector<std::vector<int>> alpha_steps;  // (before, after) pairs per rewrite, flattened
  int rewrites = 0;
};

/** \brief Reroute branches until every bridge is stable (alpha grows at each rewrite). */
inline NormalizeResult normalize_bridges(const Graph& g, PatternWitness h, Budget& budget) {
  require(g.is_simple(), "normalize_bridges: graph must be simple");
  require(verify_subdivision(g, h), "normalize_bridges: not a subdivision");
  const Graph& j = h.pattern_graph;
  require(j.vertex_count() >= 3, "normalize_bridges: pattern order must be >= 3");
  for (auto& e : j.edges()) require(e.u != e.v, "normalize_bridges: pattern has a loop");
  require(!detail::rel_violation(g, h.branch, 3), "normalize_bridges: small separation keeps V(J) on one side");
  NormalizeResult out;
  // single edges first
  for (int i = 0; i < (int)h.branch_paths.size(); ++i) {
    auto& p = h.branch_paths[i];
    if (p.length() == 1) continue;
    std::set<EdgeId> used;
    for (EdgeId id : detail::witness_edges(h)) used.insert(id);
    for (EdgeId id : g.edges_between(p.vertices.front(), p.vertices.back()))
      if (!used.count(id)) {
        p = path_from_vertices(g, {p.vertices.front(), p.vertices.back()});
        p.edges = {id};
        p.weight = g.edge(id).w;
        break;
      }
  }
  int guard = 0;
  while (true) {
    require(++guard < 10000, "normalize_bridges: no progress");
    bool changed = false;
    for (int i = 0; i < (int)h.branch_paths.size() && !changed; ++i) {
      const PathWitness& p = h.branch_paths[i];
      auto rest = detail::witness_edges(h, i);
      std::vector<EdgeId> hp = rest;
      hp.insert(hp.end(), p.edges.begin(), p.edges.end());
      std::set<Vertex> onp(p.vertices.begin(), p.vertices.end());
      std::vector<EdgeId> h0 = p.edges;
      bool any = false;
      for (auto& b : bridges_of(g, hp, h.branch))
        if (std::all_of(b.feet.begin(), b.feet.end(), [&](Vertex f) { return onp.count(f) > 0; })) {
          h0.insert(h0.end(), b.edges.begin(), b.edges.end());
          any = true;
        }
      if (!any) continue;
      Subgraph s = extract(g, h0);
      Vertex x = p.vertices.front(), y = p.vertices.back();
      auto cands = detail::all_paths(s.graph, s.local[x], s.local[y], budget);
      require(!budget.exhausted(), "normalize_bridges: budget exhausted");
      std::vector<int> best = detail::alpha_of(g, rest, h.branch, p), before = best;
      PathWitness bestq = p;
      for (auto& q : cands) {
        PathWitness lifted;
        for (Vertex v : q.vertices) lifted.vertices.push_back(s.original[v]);
        lifted.edges = q.edges;
        lifted.weight = q.weight;
        auto a = detail::alpha_of(g, rest, h.branch, lifted);
        if (a > best) {
          best = a;
          bestq = lifted;
        }
      }
      require(best > before, "normalize_bridges: alpha did not increase");
      h.branch_paths[i] = bestq;
      out.alpha_steps.push_back(before);
      out.alpha_steps.push_back(best);
      out.rewrites++;
      changed = true;
    }
    if (!changed) break;
  }
  require(verify_subdivision(g, h), "internal: normalized witness is not a subdivision");
  require(all_bridges_stable(g, h), "internal: unstable bridge after normalization");
  out.h = h;
  return out;
}

inline NormalizeResult normalize_bridges(const Graph& g, const PatternWitness& h) {
  Budget b;
  return normalize_bridges(g, h, b);
}

// --- facial drawings versus crosses --------------------------------------------

struct OmegaOutcome {
  std::string kind;  // "facial", "cross", "hypothesis" or "unknown"
  std::optional<PlaneGraph> drawing;
  PathWitness cycle;
  std::optional<CrossCertificate> cross;
  std::string report;
  std::optional<Separation> violation;
};

namespace detail {

inline OmegaOutcome omega_dichotomy(const Graph& g, const Circlet& om, bool edge_form, Budget& budget) {
  OmegaOutcome out;
  circlet_slots(g, om);
  if (edge_form) {
    if (has_isolated(g, om)) {
      out.kind = "hypothesis";
      out.report = "circlet has an isolated vertex";
      return out;
    }
    if (om.edges.size() < 3) {
      out.kind = "hypothesis";
      out.report = "circlet has fewer than 3 edges";
      return out;
    }
  }
  if (auto v = rel_violation(g, om.vertices, 4)) {
    out.kind = "hypothesis";
    out.report = "(G, Omega) is not 4-connected";
    out.violation = v;
    return out;
  }
  auto first = find_omega_cycle(g, om, budget);
  if (!first.found()) {
    out.kind = first.unknown() ? "unknown" : "hypothesis";
    out.report = first.unknown() ? "budget exhausted" : "no Omega-cycle";
    return out;
  }
  bool complete = for_each_omega_cycle(g, om, budget, [&](const PathWitness& c) {
    if (auto pg = embed_with_facial_cycle(g, c)) {
      out.kind = "facial";
      out.drawing = pg;
      out.cycle = c;
      return false;
    }
    return true;
  });
  if (out.kind == "facial") return out;
  CrossFilter accept = [&](const CrossCertificate& x) {
    return edge_form ? verify_cross_omega_edges(g, x, om) : verify_cross_segments(g, x, om);
  };
  bool cross_complete = for_each_omega_cycle(g, om, budget, [&](const PathWitness& c) {
    auto x = cross_search(g, c, budget, accept);
    if (x.found()) {
      out.kind = "cross";
      out.cross = x.value;
      out.cycle = c;
      return false;
    }
    return true;
  });
  if (out.kind == "cross") return out;
  if (!complete || !cross_complete || budget.exhausted()) {
    out.kind = "unknown";
    out.report = "budget exhausted";
    return out;
  }
  throw Error("omega dichotomy: neither a facial Omega-cycle nor a cross");
}

}  // namespace detail

/** \brief Facial Omega-cycle drawing, or an Omega-cycle with a cross meeting the segment rule. */
inline OmegaOutcome omega_facial_or_cross(const Graph& g, const Circlet& om, Budget& budget) {
  return detail::omega_dichotomy(g, om, false, budget);
}

inline OmegaOutcome omega_facial_or_cross(const Graph& g, const Circlet& om) {
  Budget b;
  return omega_facial_or_cross(g, om, b);
}

/** \brief As above; the cross leaves an Omega edge on at least three of its four arcs. */
inline OmegaOutcome omega_facial_or_cross_edges(const Graph& g, const Circlet& om, Budget& budget) {
  return detail::omega_dichotomy(g, om, true, budget);
}

inline OmegaOutcome omega_facial_or_cross_edges(const Graph& g, const Circlet& om) {
  Budget b;
  return omega_facial_or_cross_edges(g, om, b);
}

// --- triangle extension --------------------------------------------------------

/** \brief Minor model: connected disjoint branch sets, one realizing edge per pattern edge. */
struct MinorModel {
  std::string name;
  Graph pattern;
  std::vector<std::vector<Vertex>> branch_sets;
  std::vector<EdgeId> realizers;
};

inline bool verify_minor_model(const Graph& g, const MinorModel& m) {
  int n = g.vertex_count();
  if ((int)m.branch_sets.size() != m.pattern.vertex_count()) return false;
  if ((int)m.realizers.size() != m.pattern.edge_count()) return false;
  std::vector<int> owner(n, -1);
  for (int b = 0; b < (int)m.branch_sets.size(); ++b) {
    if (m.branch_sets[b].empty()) return false;
    for (Vertex v : m.branch_sets[b]) {
      if (v < 0 || v >= n || owner[v] >= 0) return false;
      owner[v] = b;
    }
  }
  for (int b = 0; b < (int)m.branch_sets.size(); ++b) {
    std::vector<char> blocked(n, 1);
    for (Vertex v : m.branch_sets[b]) blocked[v] = 0;
    auto seen = reachable(g, m.branch_sets[b][0], blocked);
    for (Vertex v : m.branch_sets[b])
      if (!seen[v]) return false;
  }
  std::set<EdgeId> used;
  for (int i = 0; i < m.pattern.edge_count(); ++i) {
    EdgeId id = m.realizers[i];
    if (!g.has_edge(id) || !used.insert(id).second) return false;
    const Edge& pe = m.pattern.edge_at(i);
    const Edge& ge = g.edge(id);
    bool ok = (owner[ge.u] == pe.u && owner[ge.v] == pe.v) || (owner[ge.u] == pe.v && owner[ge.v] == pe.u);
    if (!ok) return false;
  }
  return true;
}

namespace pattern {

/// K_5 on 0..4; the triangle is 0,1,2, the marked edge is 34.
inline Graph a1() { return gen::complete(5); }

/// K_5 minus 34; the triangle is 0,1,2, the marked edge is 30.
inline Graph a2() {
  Graph g(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!(i == 3 && j == 4)) g.add_edge(i, j);
  return g;
}

}  // namespace pattern

namespace detail {

/// Rooted model: T[i] in branch set i, the marked pattern edge realized by e.
inline std::optional<MinorModel> rooted_minor(const Graph& g, const std::array<Vertex, 3>& t, EdgeId e,
                                              const Graph& h, std::pair<int, int> marked, Budget& budget) {
  int n = g.vertex_count();
  require(n <= 14, "rooted minor search: at most 14 vertices");
  const Edge& ee = g.edge(e);
  std::vector<int> owner(n, -2);  // -2 unassigned, -1 deleted
  for (int i = 0; i < 3; ++i) owner[t[i]] = i;
  // marked edge ends fixed; try both orientations
  std::vector<std::pair<int, int>> starts{{marked.first, marked.second}, {marked.second, marked.first}};
  std::optional<MinorModel> found;
  auto check = [&](const std::vector<int>& own) -> bool {
    std::vector<std::vector<Vertex>> sets(5);
    for (Vertex v = 0; v < n; ++v)
      if (own[v] >= 0) sets[own[v]].push_back(v);
    for (auto& s : sets)
      if (s.empty()) return false;
    for (auto& s : sets) {
      std::vector<char> blocked(n, 1);
      for (Vertex v : s) blocked[v] = 0;
      auto seen = reachable(g, s[0], blocked);
      for (Vertex v : s)
        if (!seen[v]) return false;
    }
    MinorModel m;
    m.pattern = h;
    m.branch_sets = sets;
    std::set<EdgeId> used{e};
    for (int i = 0; i < h.edge_count(); ++i) {
      const Edge& pe = h.edge_at(i);
      if (std::minmax(pe.u, pe.v) == std::minmax(marked.first, marked.second)) {
        m.realizers.push_back(e);
        continue;
      }
      EdgeId r = -1;
      for (auto& ge : g.edges())
        if (!used.count(ge.id) && own[ge.u] >= 0 && own[ge.v] >= 0 &&
            ((own[ge.u] == pe.u && own[ge.v] == pe.v) || (own[ge.u] == pe.v && own[ge.v] == pe.u))) {
          r = ge.id;
          break;
        }
      if (r < 0) return false;
      used.insert(r);
      m.realizers.push_back(r);
    }
    found = m;
    return true;
  };
  for (auto [ta, tb] : starts) {
    std::vector<int> own = owner;
    Vertex a = ee.u, b = ee.v;
    if (own[a] >= 0 && own[a] != ta) continue;
    if (own[b] >= 0 && own[b] != tb) continue;
    own[a] = ta;
    own[b] = tb;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (own[v] == -2) rest.push_back(v);
    std::function<bool(size_t)> go = [&](size_t i) {
      if (!budget.tick()) return false;
      if (i == rest.size()) return check(own);
      for (int c = -1; c < 5; ++c) {
        own[rest[i]] = c;
        if (go(i + 1)) return true;
        if (budget.exhausted()) return false;
      }
      own[rest[i]] = -2;
      return false;
    };
    if (go(0)) return found;
    if (budget.exhausted()) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

struct TriExtResult {
  std::string kind;  // "A1", "A2" or "recipe"
  std::optional<MinorModel> minor;
  SumRecipe recipe;
  std::optional<PlaneGraph> drawing;  // of the recipe root, T outer
  bool exact = true;
};

/**
 * \brief Rooted A_1/A_2 minor on (T, e), else G = S_3(G_0; ...) with G_0 planar,
 * T facial and every summand on another facial triangle.
 */
inline TriExtResult tri_ext(const Graph& g, std::array<Vertex, 3> t, EdgeId e, Budget& budget) {
  require(is_3connected(g), "tri_ext: graph must be 3-connected");
  require(g.has_edge(e), "tri_ext: unknown edge");
  for (int i = 0; i < 3; ++i) require(g.adjacent(t[i], t[(i + 1) % 3]), "tri_ext: T is not a triangle");
  int in_t = 0;
  for (Vertex v : t) in_t += g.edge(e).u == v || g.edge(e).v == v;
  require(in_t <= 1, "tri_ext: e has both ends in T");
  TriExtResult out;
  auto m1 = detail::rooted_minor(g, t, e, pattern::a1(), {3, 4}, budget);
  if (m1) {
    out.kind = "A1";
    m1->name = "A1";
    out.minor = m1;
    return out;
  }
  // A2 uses the edge 3-j where e meets T block j, if any
  for (int j = 0; j < 3 && !out.minor; ++j) {
    auto m2 = detail::rooted_minor(g, t, e, pattern::a2(), {3, j}, budget);
    if (m2) {
      out.kind = "A2";
      m2->name = "A2";
      out.minor = m2;
    }
  }
  if (out.minor) {
    require(verify_minor_model(g, *out.minor), "internal: minor model failed verification");
    return out;
  }
  if (budget.exhausted()) {
    out.kind = "unknown";
    out.exact = false;
    return out;
  }
  require(connected_without(g, {t[0], t[1], t[2]}), "tri_ext: T is a 3-cut but no A2 minor found");
  auto s3 = s3_decompose(g, {t[0], t[1], t[2]});
  const Graph& g0 = s3.recipe.nodes[0];
  auto local = [&](Vertex hv) {
    for (Vertex v = 0; v < g0.vertex_count(); ++v)
      if (s3.recipe.labels[0][v] == hv) return v;
    return -1;
  };
  std::vector<PathWitness> faces{cycle_from_vertices(g0, {local(t[0]), local(t[1]), local(t[2])})};
  for (auto& l : s3.recipe.links) {
    PathWitness c;
    c.vertices = l.parent_vertices;
    c.edges = l.parent_edges;
    faces.push_back(c);
  }
  auto pg = embed_with_facial_cycles(g0, faces);
  if (!pg) throw Error("tri_ext: neither a rooted A1/A2 minor nor a facial decomposition");
  out.kind = "recipe";
  out.recipe = s3.recipe;
  out.drawing = pg;
  return out;
}

inline TriExtResult tri_ext(const Graph& g, std::array<Vertex, 3> t, EdgeId e) {
  Budget b;
  return tri_ext(g, t, e, b);
}

}  // namespace thetalab

#endif
