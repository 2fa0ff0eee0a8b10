#ifndef THETALAB_PLANARITY_HPP
#define THETALAB_PLANARITY_HPP

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "paths.hpp"

namespace thetalab {

/** \brief Rotation system of a graph with a designated outer face. */
struct PlaneGraph {
  Graph graph;
  std::vector<std::vector<EdgeId>> rotation;  // cyclic order around each vertex
  int outer = 0;

  /// Each face is a closed walk of darts (edge id, tail vertex).
  std::vector<std::vector<std::pair<EdgeId, Vertex>>> faces;

  void compute_faces() {
    faces.clear();
    std::map<std::pair<EdgeId, Vertex>, char> seen;
    std::map<std::pair<EdgeId, Vertex>, int> pos_at;  // (edge, vertex) -> index in rotation
    for (Vertex x = 0; x < graph.vertex_count(); ++x)
      for (int i = 0; i < (int)rotation[x].size(); ++i) pos_at[{rotation[x][i], x}] = i;
    for (auto& e : graph.edges()) {
      for (int d = 0; d < 2; ++d) {
        std::pair<EdgeId, Vertex> start{e.id, d ? e.v : e.u};
        if (seen.count(start)) continue;
        std::vector<std::pair<EdgeId, Vertex>> face;
        auto cur = start;
        while (!seen.count(cur)) {
          seen[cur] = 1;
          face.push_back(cur);
          Vertex head = graph.edge(cur.first).other(cur.second);
          auto& rot = rotation[head];
          int p = pos_at.at({cur.first, head});
          EdgeId nxt = rot[(p + 1) % rot.size()];
          cur = {nxt, head};
        }
        faces.push_back(face);
      }
    }
  }

  int face_count() const { return static_cast<int>(faces.size()); }

  std::vector<Vertex> face_vertices(int f) const {
    std::vector<Vertex> out;
    for (auto& [e, x] : faces[f]) out.push_back(x);
    return out;
  }
  std::vector<EdgeId> face_edges(int f) const {
    std::vector<EdgeId> out;
    for (auto& [e, x] : faces[f]) out.push_back(e);
    return out;
  }
  /// Face boundary is a cycle (no repeated vertex).
  bool face_is_cycle(int f) const {
    auto vs = face_vertices(f);
    std::set<Vertex> s(vs.begin(), vs.end());
    return s.size() == vs.size() && vs.size() >= 2;
  }
  PathWitness face_cycle(int f) const {
    PathWitness c;
    c.vertices = face_vertices(f);
    c.edges = face_edges(f);
    c.weight = weight_of(graph, c.edges);
    return c;
  }
  PathWitness outer_cycle() const { return face_cycle(outer); }

  /// Index of a face whose edge set is exactly the given set, or -1.
  int face_with_edges(std::vector<EdgeId> es) const {
    std::sort(es.begin(), es.end());
    for (int f = 0; f < face_count(); ++f) {
      auto fe = face_edges(f);
      std::sort(fe.begin(), fe.end());
      if (fe == es) return f;
    }
    return -1;
  }
};

/// Rotation is a permutation of incident edges and Euler holds per component.
inline bool embedding_valid(const PlaneGraph& p) {
  const Graph& g = p.graph;
  if ((int)p.rotation.size() != g.vertex_count()) return false;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    std::vector<EdgeId> a = p.rotation[x], b;
    for (int i : g.incident(x)) b.push_back(g.edge_at(i).id);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  PlaneGraph q = p;
  q.compute_faces();
  std::vector<int> comp;
  int c = components(g, comp);
  std::vector<long> vs(c, 0), es(c, 0), fs(c, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) vs[comp[v]]++;
  for (auto& e : g.edges()) es[comp[e.u]]++;
  for (auto& f : q.faces) fs[comp[f[0].second]]++;
  for (int i = 0; i < c; ++i) {
    if (es[i] == 0) continue;
    if (vs[i] - es[i] + fs[i] != 2) return false;
  }
  if (p.outer < 0 || (g.edge_count() > 0 && p.outer >= q.face_count())) return false;
  return true;
}

struct Kuratowski {
  std::string kind;  // "K5" or "K33"
  std::vector<EdgeId> edges;
};

struct PlanarityResult {
  bool planar = false;
  std::optional<PlaneGraph> embedding;
  std::optional<Kuratowski> witness;
};

namespace detail {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

/// Simple auxiliary graph: aux edge k stands for original edge origin[k] (or -1).
struct AuxGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<EdgeId> origin;
  int add_vertex() { return n++; }
  void add(int a, int b, EdgeId o) {
    edges.push_back({a, b});
    origin.push_back(o);
  }
};

/// Make a simple aux graph: parallel non-representatives and listed edges subdivided.
inline AuxGraph simple_aux(const Graph& g, const std::set<EdgeId>& force_subdivide,
                           std::map<EdgeId, int>* sub_vertex = nullptr) {
  AuxGraph a;
  a.n = g.vertex_count();
  std::set<std::pair<int, int>> seen;
  for (auto& e : g.edges()) {
    auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    bool dup = !seen.insert(key).second;
    if (dup || force_subdivide.count(e.id)) {
      int s = a.add_vertex();
      if (sub_vertex) (*sub_vertex)[e.id] = s;
      a.add(e.u, s, e.id);
      a.add(s, e.v, e.id);
    } else {
      a.add(e.u, e.v, e.id);
    }
  }
  return a;
}

struct AuxResult {
  bool planar;
  std::vector<std::vector<int>> rotation;  // aux edge indices
  std::vector<int> kuratowski;             // aux edge indices
};

inline AuxResult embed_aux(const AuxGraph& a) {
  BoostGraph bg(a.n);
  for (int k = 0; k < (int)a.edges.size(); ++k)
    boost::add_edge(a.edges[k].first, a.edges[k].second, k, bg);
  using ED = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<ED>> emb(a.n);
  AuxResult r;
  auto eidx = boost::get(boost::edge_index, bg);
  if (a.n == 0) {
    r.planar = true;
    return r;
  }
  r.planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                 boost::boyer_myrvold_params::embedding = &emb[0]);
  if (r.planar) {
    r.rotation.resize(a.n);
    for (int v = 0; v < a.n; ++v)
      for (auto& ed : emb[v]) r.rotation[v].push_back(eidx[ed]);
  } else {
    std::vector<ED> kur;
    boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                        boost::boyer_myrvold_params::kuratowski_subgraph =
                                            std::back_inserter(kur));
    for (auto& ed : kur) r.kuratowski.push_back(eidx[ed]);
  }
  return r;
}

/// Rotation of g read off an aux rotation (aux edges with origin -1 dropped).
inline std::vector<std::vector<EdgeId>> project_rotation(const Graph& g, const AuxGraph& a,
                                                         const AuxResult& r) {
  std::vector<std::vector<EdgeId>> rot(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (int k : r.rotation[v])
      if (a.origin[k] >= 0) rot[v].push_back(a.origin[k]);
  return rot;
}

}  // namespace detail

/** \brief Planar embedding of a multigraph, or a Kuratowski subgraph witness. */
inline PlanarityResult planar_embed(const Graph& g) {
  auto aux = detail::simple_aux(g, {});
  auto r = detail::embed_aux(aux);
  PlanarityResult out;
  out.planar = r.planar;
  if (r.planar) {
    PlaneGraph p;
    p.graph = g;
    p.rotation = detail::project_rotation(g, aux, r);
    p.compute_faces();
    p.outer = 0;
    out.embedding = p;
  } else {
    Kuratowski k;
    std::map<int, int> deg;
    std::set<EdgeId> es;
    for (int e : r.kuratowski) {
      deg[aux.edges[e].first]++;
      deg[aux.edges[e].second]++;
      es.insert(aux.origin[e]);
    }
    int four = 0;
    for (auto& [v, d] : deg) four += d >= 4;
    k.kind = four >= 5 ? "K5" : "K33";
    k.edges.assign(es.begin(), es.end());
    out.witness = k;
  }
  return out;
}

inline bool is_planar(const Graph& g) { return planar_embed(g).planar; }

/** \brief Embedding in which every listed cycle is facial; the first bounds the outer face. */
inline std::optional<PlaneGraph> embed_with_facial_cycles(const Graph& g, const std::vector<PathWitness>& cs) {
  require(!cs.empty(), "embed_with_facial_cycles: no cycle given");
  std::set<EdgeId> ce;
  for (auto& c : cs) {
    require(is_cycle(g, c), "embed_with_facial_cycles: not a cycle of the graph");
    ce.insert(c.edges.begin(), c.edges.end());
  }
  std::map<EdgeId, int> sub;
  auto aux = detail::simple_aux(g, ce, &sub);
  for (auto& c : cs) {
    int apex = aux.add_vertex();
    for (Vertex v : c.vertices) aux.add(apex, v, -1);
    for (EdgeId e : c.edges) aux.add(apex, sub.at(e), -1);
  }
  auto r = detail::embed_aux(aux);
  if (!r.planar) return std::nullopt;
  PlaneGraph p;
  p.graph = g;
  p.rotation = detail::project_rotation(g, aux, r);
  p.compute_faces();
  for (auto& c : cs) require(p.face_with_edges(c.edges) >= 0, "internal: facial cycle lost after embedding");
  p.outer = p.face_with_edges(cs[0].edges);
  return p;
}

/** \brief Embedding in which cycle c bounds the outer face, if one exists. */
inline std::optional<PlaneGraph> embed_with_facial_cycle(const Graph& g, const PathWitness& c) {
  return embed_with_facial_cycles(g, {c});
}

/// Outerplanar iff G plus an apex joined to every vertex is planar.
inline bool is_outerplanar(const Graph& g) {
  auto aux = detail::simple_aux(g, {});
  int apex = aux.add_vertex();
  for (Vertex v = 0; v < g.vertex_count(); ++v) aux.add(apex, v, -1);
  return detail::embed_aux(aux).planar;
}

/// Outerplane embedding (all vertices on the outer face) of a 2-connected outerplanar graph.
inline std::optional<PlaneGraph> outerplane_embedding(const Graph& g) {
  auto aux = detail::simple_aux(g, {});
  int apex = aux.add_vertex();
  for (Vertex v = 0; v < g.vertex_count(); ++v) aux.add(apex, v, -1);
  auto r = detail::embed_aux(aux);
  if (!r.planar) return std::nullopt;
  PlaneGraph p;
  p.graph = g;
  p.rotation = detail::project_rotation(g, aux, r);
  p.compute_faces();
  // outer face: the one meeting every vertex
  p.outer = -1;
  for (int f = 0; f < p.face_count(); ++f) {
    auto vs = p.face_vertices(f);
    std::set<Vertex> s(vs.begin(), vs.end());
    if ((int)s.size() == g.vertex_count()) {
      p.outer = f;
      break;
    }
  }
  if (p.outer < 0) return std::nullopt;
  return p;
}

}  // namespace thetalab

#endif
