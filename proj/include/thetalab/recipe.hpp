#ifndef THETALAB_RECIPE_HPP
#define THETALAB_RECIPE_HPP

#include <array>
#include <functional>
#include <tuple>

#include "iso.hpp"
#include "paths.hpp"

namespace thetalab {

/**
 * \brief One k-sum: child glue (edge, triangle or 4-cycle) identified with
 * parent glue vertex by vertex, then all glue edges deleted.
 */
struct SumLink {
  int parent = 0, child = 0;
  int k = 2;
  std::vector<Vertex> parent_vertices, child_vertices;  // matched pointwise, cyclic for k >= 3
  std::vector<EdgeId> parent_edges, child_edges;
};

/** \brief Tree of graphs glued by 2-, 3- and 4-sums; node 0 is the root. */
struct SumRecipe {
  std::vector<Graph> nodes;
  std::vector<std::vector<Vertex>> labels;  // optional host labels per node vertex
  std::vector<std::string> tags;
  std::vector<SumLink> links;

  int add_node(Graph g, std::vector<Vertex> lab = {}, std::string tag = "") {
    nodes.push_back(std::move(g));
    labels.push_back(std::move(lab));
    tags.push_back(std::move(tag));
    return static_cast<int>(nodes.size()) - 1;
  }
  std::vector<int> children(int p) const {
    std::vector<int> out;
    for (auto& l : links)
      if (l.parent == p) out.push_back(l.child);
    return out;
  }
  bool is_star() const {
    for (auto& l : links)
      if (l.parent != 0) return false;
    return true;
  }
};

/// Glue edges must form the declared object on the declared vertices.
inline bool glue_ok(const Graph& g, const std::vector<Vertex>& vs, const std::vector<EdgeId>& es, int k) {
  if ((int)vs.size() != (k == 2 ? 2 : k) || (int)es.size() != (k == 2 ? 1 : k)) return false;
  std::set<Vertex> distinct(vs.begin(), vs.end());
  if ((int)distinct.size() != (int)vs.size()) return false;
  for (Vertex v : vs)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (EdgeId id : es)
    if (!g.has_edge(id)) return false;
  if (k == 2) return g.edge(es[0]).joins(vs[0], vs[1]);
  for (int i = 0; i < k; ++i)
    if (!g.edge(es[i]).joins(vs[i], vs[(i + 1) % k])) return false;
  return true;
}

struct Evaluation {
  Graph graph;
  std::vector<std::vector<Vertex>> vertex_of;  // node, node vertex -> result vertex
  std::vector<std::pair<int, EdgeId>> edge_source;  // per result edge index: (node, node edge id)
};

/** \brief Evaluate: identify glue vertices, delete glue edges. Edge ids kept when unique. */
inline Evaluation evaluate(const SumRecipe& r) {
  int total = 0;
  std::vector<int> off;
  for (auto& g : r.nodes) {
    off.push_back(total);
    total += g.vertex_count();
  }
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<std::set<EdgeId>> gone(r.nodes.size());
  for (auto& l : r.links) {
    require(l.parent >= 0 && l.parent < (int)r.nodes.size() && l.child >= 0 &&
                l.child < (int)r.nodes.size() && l.parent != l.child,
            "evaluate: bad link");
    require(l.k >= 2 && l.k <= 4, "evaluate: k must be 2, 3 or 4");
    require(glue_ok(r.nodes[l.parent], l.parent_vertices, l.parent_edges, l.k) &&
                glue_ok(r.nodes[l.child], l.child_vertices, l.child_edges, l.k),
            "evaluate: glue mismatch");
    for (EdgeId id : l.parent_edges) require(gone[l.parent].insert(id).second, "evaluate: glue edge reused");
    for (EdgeId id : l.child_edges) require(gone[l.child].insert(id).second, "evaluate: glue edge reused");
    for (size_t i = 0; i < l.parent_vertices.size(); ++i) {
      int a = find(off[l.parent] + l.parent_vertices[i]), b = find(off[l.child] + l.child_vertices[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  Evaluation ev;
  std::vector<int> idx(total, -1);
  int n = 0;
  for (int x = 0; x < total; ++x)
    if (find(x) == x) idx[x] = n++;
  ev.graph = Graph(n);
  ev.vertex_of.resize(r.nodes.size());
  for (size_t i = 0; i < r.nodes.size(); ++i)
    for (Vertex v = 0; v < r.nodes[i].vertex_count(); ++v)
      ev.vertex_of[i].push_back(idx[find(off[i] + v)]);
  std::set<EdgeId> taken;
  std::vector<std::tuple<int, const Edge*>> pending;
  for (size_t i = 0; i < r.nodes.size(); ++i)
    for (auto& e : r.nodes[i].edges())
      if (!gone[i].count(e.id)) pending.push_back({static_cast<int>(i), &e});
  EdgeId fresh = 0;
  for (auto& [i, e] : pending) fresh = std::max(fresh, e->id + 1);
  for (auto& [i, e] : pending) {
    Vertex a = ev.vertex_of[i][e->u], b = ev.vertex_of[i][e->v];
    require(a != b, "evaluate: sum creates a loop");
    EdgeId id = taken.insert(e->id).second ? e->id : fresh++;
    ev.graph.add_edge_with_id(id, a, b, e->w);
    ev.edge_source.push_back({i, e->id});
  }
  return ev;
}

/** \brief k-sum of two graphs over the given glue objects. */
inline Graph k_sum(const Graph& a, const std::vector<Vertex>& av, const std::vector<EdgeId>& ae,
                   const Graph& b, const std::vector<Vertex>& bv, const std::vector<EdgeId>& be) {
  SumRecipe r;
  r.add_node(a);
  r.add_node(b);
  int k = ae.size() == 1 ? 2 : static_cast<int>(ae.size());
  r.links.push_back(SumLink{0, 1, k, av, bv, ae, be});
  return evaluate(r).graph;
}

/// Set every glue edge to weight 1, every other edge to the host weight (matched by id).
inline SumRecipe induced_weights(const Graph& host, SumRecipe r) {
  std::vector<std::set<EdgeId>> glue(r.nodes.size());
  for (auto& l : r.links) {
    glue[l.parent].insert(l.parent_edges.begin(), l.parent_edges.end());
    glue[l.child].insert(l.child_edges.begin(), l.child_edges.end());
  }
  for (size_t i = 0; i < r.nodes.size(); ++i)
    for (auto& e : std::vector<Edge>(r.nodes[i].edges().begin(), r.nodes[i].edges().end())) {
      if (glue[i].count(e.id)) r.nodes[i].set_weight(e.id, 1);
      else if (host.has_edge(e.id)) r.nodes[i].set_weight(e.id, host.edge(e.id).w);
    }
  return r;
}

/// Nesting depth: a single node is 1; a summand that is a leaf adds nothing.
inline int recipe_depth(const SumRecipe& r, int node = 0) {
  int best = 0;
  for (int c : r.children(node))
    if (!r.children(c).empty()) best = std::max(best, recipe_depth(r, c));
  return best + 1;
}

/** \brief Two parts of a 2- or 3-cut split, each with virtual glue. */
struct CutSplit {
  SumRecipe recipe;  // node 0 = side with the first component, node 1 = the rest
  std::array<bool, 2> minor_of_g{true, true};
};

namespace detail {

/// Build G_i^+ from an edge list, adding virtual glue on the cut; returns node index.
inline int add_side(SumRecipe& r, const Graph& g, const std::vector<EdgeId>& ids,
                    const std::vector<Vertex>& cut, EdgeId& fresh, std::vector<Vertex>& glue_v,
                    std::vector<EdgeId>& glue_e) {
  Subgraph s = extract(g, ids, cut);
  Graph h = s.graph;
  glue_v.clear();
  glue_e.clear();
  for (Vertex c : cut) glue_v.push_back(s.local[c]);
  int k = static_cast<int>(cut.size());
  if (k == 2) {
    glue_e.push_back(h.add_edge_with_id(fresh++, glue_v[0], glue_v[1], 1));
  } else {
    for (int i = 0; i < k; ++i) glue_e.push_back(h.add_edge_with_id(fresh++, glue_v[i], glue_v[(i + 1) % k], 1));
  }
  return r.add_node(h, s.original);
}

}  // namespace detail

/** \brief Split a 2-connected G on a 2-cut, or a 3-connected G on a 3-cut. */
inline CutSplit split_on_cut(const Graph& g, std::vector<Vertex> cut) {
  std::sort(cut.begin(), cut.end());
  int k = static_cast<int>(cut.size());
  require(k == 2 || k == 3, "split_on_cut: cut must have 2 or 3 vertices");
  require(k == 2 ? is_2connected(g) : is_3connected(g), "split_on_cut: connectivity precondition");
  int n = g.vertex_count();
  std::vector<char> rem(n, 0);
  for (Vertex v : cut) rem[v] = 1;
  std::vector<int> comp;
  int c = components(g, comp, &rem);
  require(c >= 2, "split_on_cut: not a cut");
  std::vector<EdgeId> p1, p2;
  for (auto& e : g.edges()) {
    int cu = comp[e.u] >= 0 ? comp[e.u] : comp[e.v];
    (cu > 0 ? p2 : p1).push_back(e.id);
  }
  CutSplit out;
  EdgeId fresh = g.next_id();
  SumLink l;
  l.k = k;
  l.parent = detail::add_side(out.recipe, g, p1, cut, fresh, l.parent_vertices, l.parent_edges);
  l.child = detail::add_side(out.recipe, g, p2, cut, fresh, l.child_vertices, l.child_edges);
  out.recipe.links.push_back(l);
  if (k == 3) {
    // G_i^+ is a minor unless si(G_{3-i}) is a claw
    for (int i = 0; i < 2; ++i) {
      Graph other = extract(g, i == 0 ? p2 : p1, cut).graph;
      Graph si = simplify(other);
      bool claw = si.vertex_count() == 4 && si.edge_count() == 3;
      if (claw) {
        int deg3 = 0;
        for (Vertex v = 0; v < 4; ++v) deg3 += si.degree(v) == 3;
        claw = deg3 == 1;
      }
      out.minor_of_g[i] = !claw;
    }
  }
  return out;
}

}  // namespace thetalab

#endif
