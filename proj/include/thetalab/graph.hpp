#ifndef THETALAB_GRAPH_HPP
#define THETALAB_GRAPH_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thetalab {

using Vertex = int;
using EdgeId = int;
using Weight = long long;

/** \brief Precondition or input error. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

// --- search budgets -------------------------------------------------------

inline std::atomic<std::uint64_t>& default_budget_slot() {
  static std::atomic<std::uint64_t> slot{10000000ULL};
  return slot;
}
inline std::uint64_t default_budget() { return default_budget_slot().load(); }
inline void set_default_budget(std::uint64_t n) { default_budget_slot().store(n); }

struct Budget {
  std::uint64_t limit = default_budget();
  std::uint64_t used = 0;
  Budget() = default;
  explicit Budget(std::uint64_t l) : limit(l) {}
  bool tick() { return ++used <= limit; }
  bool exhausted() const { return used > limit; }
};

enum class Status { found, none, unknown };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::found: return "found";
    case Status::none: return "none";
    default: return "unknown";
  }
}

template <class T>
struct Search {
  Status status = Status::none;
  std::optional<T> value;
  bool found() const { return status == Status::found; }
  bool none() const { return status == Status::none; }
  bool unknown() const { return status == Status::unknown; }
  static Search hit(T v) { return Search{Status::found, std::move(v)}; }
  static Search miss(bool exhausted) {
    return Search{exhausted ? Status::unknown : Status::none, std::nullopt};
  }
};

// --- graph ------------------------------------------------------------------

struct Edge {
  EdgeId id;
  Vertex u, v;
  Weight w;
  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool joins(Vertex a, Vertex b) const {
    return (u == a && v == b) || (u == b && v == a);
  }
};

/** \brief Loopless weighted multigraph on vertices 0..n-1 with stable edge ids. */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  Vertex add_vertex() {
    adj_.emplace_back();
    return vertex_count() - 1;
  }

  EdgeId add_edge(Vertex u, Vertex v, Weight w = 1) {
    return add_edge_with_id(next_id(), u, v, w);
  }

  EdgeId add_edge_with_id(EdgeId id, Vertex u, Vertex v, Weight w) {
    require(u >= 0 && v >= 0 && u < vertex_count() && v < vertex_count(),
            "edge endpoint out of range");
    require(u != v, "loops are not allowed");
    require(w >= 1, "edge weights must be positive integers");
    require(id >= 0, "edge id must be nonnegative");
    if (id >= static_cast<int>(index_.size())) index_.resize(id + 1, -1);
    require(index_[id] < 0, "duplicate edge id");
    index_[id] = edge_count();
    edges_.push_back({id, u, v, w});
    adj_[u].push_back(edge_count() - 1);
    adj_[v].push_back(edge_count() - 1);
    return id;
  }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge_at(int index) const { return edges_[index]; }
  bool has_edge(EdgeId id) const {
    return id >= 0 && id < static_cast<int>(index_.size()) && index_[id] >= 0;
  }
  int index_of(EdgeId id) const {
    require(has_edge(id), "unknown edge id " + std::to_string(id));
    return index_[id];
  }
  const Edge& edge(EdgeId id) const { return edges_[index_of(id)]; }
  void set_weight(EdgeId id, Weight w) {
    require(w >= 1, "edge weights must be positive integers");
    edges_[index_of(id)].w = w;
  }

  /// Indices (not ids) of edges incident to v.
  const std::vector<int>& incident(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  EdgeId next_id() const { return static_cast<EdgeId>(index_.size()); }

  Weight total_weight() const {
    Weight s = 0;
    for (auto& e : edges_) s += e.w;
    return s;
  }
  Weight max_weight() const {
    Weight s = 0;
    for (auto& e : edges_) s = std::max(s, e.w);
    return s;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (int i : adj_[v]) out.push_back(edges_[i].other(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Edge ids joining a and b, ascending.
  std::vector<EdgeId> edges_between(Vertex a, Vertex b) const {
    std::vector<EdgeId> out;
    for (int i : adj_[a])
      if (edges_[i].other(a) == b) out.push_back(edges_[i].id);
    std::sort(out.begin(), out.end());
    return out;
  }
  bool adjacent(Vertex a, Vertex b) const {
    for (int i : adj_[a])
      if (edges_[i].other(a) == b) return true;
    return false;
  }

  bool is_simple() const {
    std::set<std::pair<int, int>> seen;
    for (auto& e : edges_)
      if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) return false;
    return true;
  }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
  std::vector<int> index_;
};

inline Graph with_unit_weights(const Graph& g) {
  Graph h(g.vertex_count());
  for (auto& e : g.edges()) h.add_edge_with_id(e.id, e.u, e.v, 1);
  return h;
}

/** \brief Compact subgraph; vertex i corresponds to original[i]. Edge ids are kept. */
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;
  std::vector<int> local;  // original vertex -> local index or -1

  Vertex to_local(Vertex v) const { return v < (int)local.size() ? local[v] : -1; }
};

/// Subgraph on the given vertex set plus the given edges (ends added as needed).
inline Subgraph extract(const Graph& g, const std::vector<EdgeId>& edge_ids,
                        const std::vector<Vertex>& extra_vertices = {}) {
  Subgraph s;
  s.local.assign(g.vertex_count(), -1);
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : extra_vertices) in[v] = 1;
  for (EdgeId id : edge_ids) {
    auto& e = g.edge(id);
    in[e.u] = in[e.v] = 1;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (in[v]) {
      s.local[v] = static_cast<int>(s.original.size());
      s.original.push_back(v);
    }
  s.graph = Graph(static_cast<int>(s.original.size()));
  std::vector<EdgeId> ids = edge_ids;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (EdgeId id : ids) {
    auto& e = g.edge(id);
    s.graph.add_edge_with_id(id, s.local[e.u], s.local[e.v], e.w);
  }
  return s;
}

/// Subgraph induced by a vertex set.
inline Subgraph induced(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : vs) in[v] = 1;
  std::vector<EdgeId> ids;
  for (auto& e : g.edges())
    if (in[e.u] && in[e.v]) ids.push_back(e.id);
  return extract(g, ids, vs);
}

inline Graph delete_edges(const Graph& g, const std::vector<EdgeId>& gone) {
  std::set<EdgeId> s(gone.begin(), gone.end());
  Graph h(g.vertex_count());
  for (auto& e : g.edges())
    if (!s.count(e.id)) h.add_edge_with_id(e.id, e.u, e.v, e.w);
  return h;
}

inline std::vector<EdgeId> edge_ids(const Graph& g) {
  std::vector<EdgeId> out;
  for (auto& e : g.edges()) out.push_back(e.id);
  return out;
}

/** \brief si(G): keep one edge per adjacent pair, the heaviest (lowest id on ties). */
inline Graph simplify(const Graph& g) {
  std::map<std::pair<int, int>, int> best;
  for (int i = 0; i < g.edge_count(); ++i) {
    auto& e = g.edge_at(i);
    auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    auto it = best.find(key);
    if (it == best.end()) {
      best[key] = i;
      continue;
    }
    auto& o = g.edge_at(it->second);
    if (e.w > o.w || (e.w == o.w && e.id < o.id)) it->second = i;
  }
  std::vector<int> keep;
  for (auto& [k, i] : best) keep.push_back(i);
  std::sort(keep.begin(), keep.end());
  Graph h(g.vertex_count());
  for (int i : keep) {
    auto& e = g.edge_at(i);
    h.add_edge_with_id(e.id, e.u, e.v, e.w);
  }
  return h;
}

// --- connectivity -----------------------------------------------------------

/// Component label per vertex (-1 for removed vertices); returns the count.
inline int components(const Graph& g, std::vector<int>& comp,
                      const std::vector<char>* removed = nullptr,
                      const std::vector<char>* removed_edges = nullptr) {
  int n = g.vertex_count();
  comp.assign(n, -1);
  int c = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0 || (removed && (*removed)[s])) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (int i : g.incident(x)) {
        if (removed_edges && (*removed_edges)[i]) continue;
        Vertex y = g.edge_at(i).other(x);
        if (comp[y] >= 0 || (removed && (*removed)[y])) continue;
        comp[y] = c;
        stack.push_back(y);
      }
    }
    ++c;
  }
  return c;
}

inline bool is_connected(const Graph& g) {
  std::vector<int> comp;
  return g.vertex_count() > 0 && components(g, comp) == 1;
}

inline bool connected_without(const Graph& g, const std::vector<Vertex>& gone) {
  std::vector<char> rem(g.vertex_count(), 0);
  for (Vertex v : gone) rem[v] = 1;
  std::vector<int> comp;
  int left = g.vertex_count() - static_cast<int>(std::count(rem.begin(), rem.end(), 1));
  if (left <= 0) return true;
  return components(g, comp, &rem) == 1;
}

/// Convention: K2 with at least two parallel edges counts as 2-connected.
inline bool is_2connected(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) return false;
  if (!is_connected(g)) return false;
  if (n == 2) return g.edge_count() >= 2;
  for (Vertex v = 0; v < n; ++v)
    if (!connected_without(g, {v})) return false;
  return true;
}

/// si(G) 3-connected; needs at least four vertices.
inline bool is_3connected(const Graph& g) {
  int n = g.vertex_count();
  if (n < 4 || !is_2connected(g)) return false;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!connected_without(g, {a, b})) return false;
  return true;
}

/// Is X a vertex cut (G - X disconnected)?
inline bool is_vertex_cut(const Graph& g, const std::vector<Vertex>& x) {
  return !connected_without(g, x);
}

/// Edge-blocks: 2-connected pieces (including parallel classes) and bridges.
inline std::vector<std::vector<EdgeId>> blocks(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::vector<EdgeId>> out;
  std::vector<int> estack;
  int timer = 0;
  struct Frame {
    Vertex v;
    int parent_edge;
    size_t it;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<Frame> st{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.it < g.incident(f.v).size()) {
        int i = g.incident(f.v)[f.it++];
        if (i == f.parent_edge) continue;
        Vertex y = g.edge_at(i).other(f.v);
        if (disc[y] < 0) {
          estack.push_back(i);
          disc[y] = low[y] = timer++;
          st.push_back({y, i, 0});
        } else if (disc[y] < disc[f.v]) {
          estack.push_back(i);
          low[f.v] = std::min(low[f.v], disc[y]);
        }
      } else {
        Frame done = f;
        st.pop_back();
        if (st.empty()) break;
        Frame& p = st.back();
        low[p.v] = std::min(low[p.v], low[done.v]);
        if (low[done.v] >= disc[p.v]) {
          std::vector<EdgeId> blk;
          while (true) {
            int i = estack.back();
            estack.pop_back();
            blk.push_back(g.edge_at(i).id);
            if (i == done.parent_edge) break;
          }
          std::sort(blk.begin(), blk.end());
          out.push_back(blk);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- separations ------------------------------------------------------------

/** \brief Edge-disjoint non-spanning pair (G1, G2) with G1 u G2 = G. */
struct Separation {
  std::vector<EdgeId> part1, part2;
  std::vector<Vertex> cut;  // V(G1) n V(G2), ascending
};

/// Vertex sets of the sides: cut plus strict sides.
struct SeparationSides {
  std::vector<Vertex> side1, side2;  // excluding the cut
};

inline SeparationSides sides_of(const Graph& g, const Separation& s) {
  std::vector<char> in1(g.vertex_count(), 0), in2(g.vertex_count(), 0), cut(g.vertex_count(), 0);
  for (Vertex v : s.cut) cut[v] = 1;
  for (EdgeId id : s.part1) {
    auto& e = g.edge(id);
    in1[e.u] = in1[e.v] = 1;
  }
  for (EdgeId id : s.part2) {
    auto& e = g.edge(id);
    in2[e.u] = in2[e.v] = 1;
  }
  SeparationSides out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (cut[v]) continue;
    if (in1[v]) out.side1.push_back(v);
    if (in2[v]) out.side2.push_back(v);
  }
  return out;
}

/// Checks the separation definition against G (cut may contain isolated overlap).
inline bool is_separation(const Graph& g, const Separation& s) {
  int n = g.vertex_count();
  std::vector<char> in1(n, 0), in2(n, 0), cut(n, 0), used(g.edge_count(), 0);
  for (Vertex v : s.cut) {
    if (v < 0 || v >= n) return false;
    cut[v] = in1[v] = in2[v] = 1;
  }
  for (EdgeId id : s.part1) {
    if (!g.has_edge(id) || used[g.index_of(id)]) return false;
    used[g.index_of(id)] = 1;
    in1[g.edge(id).u] = in1[g.edge(id).v] = 1;
  }
  for (EdgeId id : s.part2) {
    if (!g.has_edge(id) || used[g.index_of(id)]) return false;
    used[g.index_of(id)] = 1;
    in2[g.edge(id).u] = in2[g.edge(id).v] = 1;
  }
  if (std::count(used.begin(), used.end(), 1) != g.edge_count()) return false;
  bool span1 = true, span2 = true;
  for (Vertex v = 0; v < n; ++v) {
    if (!in1[v] && !in2[v]) return false;
    if (in1[v] && in2[v] && !cut[v]) return false;
    span1 &= in1[v];
    span2 &= in2[v];
  }
  return !span1 && !span2;
}

namespace detail {

template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    if (!f(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/**
 * \brief All separations with |cut| <= k_max, keyed by (cut, bipartition of the
 * components of G - cut). Edges inside the cut go to part1.
 */
inline std::vector<Separation> enumerate_separations(const Graph& g, int k_max) {
  int n = g.vertex_count();
  std::vector<Separation> out;
  for (int k = 0; k <= std::min(k_max, n); ++k) {
    detail::for_each_subset(n, k, [&](const std::vector<int>& cut) {
      std::vector<char> rem(n, 0);
      for (int v : cut) rem[v] = 1;
      std::vector<int> comp;
      int c = components(g, comp, &rem);
      if (c < 2 || c > 20) return true;
      for (unsigned mask = 1; mask < (1u << (c - 1)); ++mask) {
        // component 0 always in side 1; bit j set puts component j+1 in side 2
        Separation s;
        s.cut = cut;
        for (auto& e : g.edges()) {
          int cu = comp[e.u] >= 0 ? comp[e.u] : comp[e.v];
          bool side2 = cu > 0 && ((mask >> (cu - 1)) & 1u);
          if (cu < 0) side2 = false;
          (side2 ? s.part2 : s.part1).push_back(e.id);
        }
        out.push_back(std::move(s));
      }
      return true;
    });
  }
  return out;
}

// --- bridges ----------------------------------------------------------------

struct Bridge {
  std::vector<EdgeId> edges;
  std::vector<Vertex> feet;      // attachments in V(H), ascending
  std::vector<Vertex> interior;  // vertices off H, ascending
  bool trivial() const { return interior.empty(); }
};

/// H-bridges of G, H given by edge ids (plus optional extra vertices).
inline std::vector<Bridge> bridges_of(const Graph& g, const std::vector<EdgeId>& h,
                                      const std::vector<Vertex>& extra = {}) {
  int n = g.vertex_count();
  std::vector<char> inh(n, 0), hedge(g.edge_count(), 0);
  for (EdgeId id : h) {
    hedge[g.index_of(id)] = 1;
    inh[g.edge(id).u] = inh[g.edge(id).v] = 1;
  }
  for (Vertex v : extra) inh[v] = 1;
  std::vector<int> comp;
  int c = components(g, comp, &inh);
  std::vector<Bridge> out(c);
  for (Vertex v = 0; v < n; ++v)
    if (comp[v] >= 0) out[comp[v]].interior.push_back(v);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (hedge[i]) continue;
    auto& e = g.edge_at(i);
    if (inh[e.u] && inh[e.v]) {
      Bridge b;
      b.edges = {e.id};
      b.feet = {std::min(e.u, e.v), std::max(e.u, e.v)};
      out.push_back(b);
      continue;
    }
    int k = comp[e.u] >= 0 ? comp[e.u] : comp[e.v];
    out[k].edges.push_back(e.id);
    if (inh[e.u]) out[k].feet.push_back(e.u);
    if (inh[e.v]) out[k].feet.push_back(e.v);
  }
  for (auto& b : out) {
    std::sort(b.edges.begin(), b.edges.end());
    std::sort(b.feet.begin(), b.feet.end());
    b.feet.erase(std::unique(b.feet.begin(), b.feet.end()), b.feet.end());
  }
  std::sort(out.begin(), out.end(),
            [](const Bridge& a, const Bridge& b) { return a.edges < b.edges; });
  return out;
}

// --- paths --------------------------------------------------------------------

/** \brief Path or cycle as a vertex sequence plus the edge ids between them. */
struct PathWitness {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  Weight weight = 0;
  int length() const { return static_cast<int>(edges.size()); }
};

inline Weight weight_of(const Graph& g, const std::vector<EdgeId>& ids) {
  Weight s = 0;
  for (EdgeId id : ids) s += g.edge(id).w;
  return s;
}

/// Path check: consecutive vertices joined by the listed edges, vertices distinct.
inline bool is_path(const Graph& g, const PathWitness& p) {
  if (p.vertices.empty() || p.edges.size() + 1 != p.vertices.size()) return false;
  std::set<Vertex> seen(p.vertices.begin(), p.vertices.end());
  if (seen.size() != p.vertices.size()) return false;
  for (size_t i = 0; i < p.edges.size(); ++i) {
    if (!g.has_edge(p.edges[i])) return false;
    if (!g.edge(p.edges[i]).joins(p.vertices[i], p.vertices[i + 1])) return false;
  }
  return true;
}

/// Cycle check: vertices cyclic, edges[i] joins vertices[i], vertices[i+1 mod k].
inline bool is_cycle(const Graph& g, const PathWitness& c) {
  size_t k = c.vertices.size();
  if (k < 2 || c.edges.size() != k) return false;
  std::set<Vertex> seen(c.vertices.begin(), c.vertices.end());
  std::set<EdgeId> es(c.edges.begin(), c.edges.end());
  if (seen.size() != k || es.size() != k) return false;
  for (size_t i = 0; i < k; ++i) {
    if (!g.has_edge(c.edges[i])) return false;
    if (!g.edge(c.edges[i]).joins(c.vertices[i], c.vertices[(i + 1) % k])) return false;
  }
  return true;
}

inline PathWitness cycle_from_vertices(const Graph& g, const std::vector<Vertex>& vs) {
  PathWitness c;
  c.vertices = vs;
  for (size_t i = 0; i < vs.size(); ++i) {
    Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
    auto between = g.edges_between(a, b);
    require(!between.empty(), "cycle vertices are not consecutive neighbours");
    EdgeId pick = between[0];
    if (vs.size() == 2 && i == 1) {
      require(between.size() >= 2, "a 2-cycle needs two parallel edges");
      pick = between[1];
    }
    c.edges.push_back(pick);
  }
  c.weight = weight_of(g, c.edges);
  return c;
}

inline PathWitness path_from_vertices(const Graph& g, const std::vector<Vertex>& vs) {
  PathWitness p;
  p.vertices = vs;
  for (size_t i = 0; i + 1 < vs.size(); ++i) {
    auto between = g.edges_between(vs[i], vs[i + 1]);
    require(!between.empty(), "path vertices are not consecutive neighbours");
    EdgeId best = between[0];
    for (EdgeId id : between)
      if (g.edge(id).w > g.edge(best).w) best = id;
    p.edges.push_back(best);
  }
  p.weight = weight_of(g, p.edges);
  return p;
}

inline PathWitness reversed(PathWitness p) {
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

/// BFS shortest path avoiding blocked vertices (ends must be unblocked).
inline std::optional<PathWitness> shortest_path(const Graph& g, Vertex s, Vertex t,
                                                const std::vector<char>& blocked = {},
                                                const std::vector<char>& blocked_edges = {}) {
  int n = g.vertex_count();
  auto bad = [&](Vertex v) { return !blocked.empty() && blocked[v] && v != t && v != s; };
  std::vector<int> via(n, -2);
  std::vector<Vertex> q{s};
  via[s] = -1;
  for (size_t h = 0; h < q.size(); ++h) {
    Vertex x = q[h];
    if (x == t) break;
    for (int i : g.incident(x)) {
      if (!blocked_edges.empty() && blocked_edges[i]) continue;
      Vertex y = g.edge_at(i).other(x);
      if (via[y] != -2 || bad(y)) continue;
      via[y] = i;
      q.push_back(y);
    }
  }
  if (via[t] == -2) return std::nullopt;
  PathWitness p;
  for (Vertex x = t; x != s;) {
    int i = via[x];
    p.vertices.push_back(x);
    p.edges.push_back(g.edge_at(i).id);
    x = g.edge_at(i).other(x);
  }
  p.vertices.push_back(s);
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  p.weight = weight_of(g, p.edges);
  return p;
}

}  // namespace thetalab

#endif
