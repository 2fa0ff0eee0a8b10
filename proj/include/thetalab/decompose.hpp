#ifndef THETALAB_DECOMPOSE_HPP
#define THETALAB_DECOMPOSE_HPP

#include <climits>
#include <functional>

#include "generators.hpp"
#include "recipe.hpp"

namespace thetalab {

namespace detail {

/// Component index per vertex of g - cut (-1 on the cut), and the count.
inline int components_without(const Graph& g, const std::vector<Vertex>& cut, std::vector<int>& comp) {
  std::vector<char> rem(g.vertex_count(), 0);
  for (Vertex v : cut) rem[v] = 1;
  return components(g, comp, &rem);
}

/// Edge ids whose ends touch a vertex of component c.
inline std::vector<EdgeId> edges_of_component(const Graph& g, const std::vector<int>& comp, int c) {
  std::vector<EdgeId> out;
  for (auto& e : g.edges())
    if (comp[e.u] == c || comp[e.v] == c) out.push_back(e.id);
  return out;
}

/**
 * \brief Split the root of a star recipe: edges of `keep` stay in the root, each chunk
 * becomes a summand with virtual glue on `cut`. Existing links follow their glue edges.
 */
inline void split_root(SumRecipe& r, const std::vector<Vertex>& cut, const std::vector<EdgeId>& keep,
                       const std::vector<std::vector<EdgeId>>& chunks, EdgeId& fresh) {
  Graph root = r.nodes[0];
  std::vector<Vertex> root_labels = r.labels[0];
  int k = static_cast<int>(cut.size());
  auto relabel = [&](const Subgraph& s) {
    std::vector<Vertex> lab;
    for (Vertex v : s.original) lab.push_back(root_labels.empty() ? v : root_labels[v]);
    return lab;
  };
  auto add_glue = [&](Graph& h, const Subgraph& s, std::vector<Vertex>& gv, std::vector<EdgeId>& ge) {
    gv.clear();
    ge.clear();
    for (Vertex c : cut) gv.push_back(s.local[c]);
    if (k == 2) ge.push_back(h.add_edge_with_id(fresh++, gv[0], gv[1], 1));
    else
      for (int i = 0; i < k; ++i) ge.push_back(h.add_edge_with_id(fresh++, gv[i], gv[(i + 1) % k], 1));
  };
  Subgraph ks = extract(root, keep, cut);
  Graph new_root = ks.graph;
  std::vector<SumLink> new_links;
  std::vector<Subgraph> cs;
  std::vector<int> chunk_node;
  for (auto& ch : chunks) cs.push_back(extract(root, ch, cut));
  // existing links: remap to the piece holding their parent glue edges
  std::vector<SumLink> moved;
  for (auto& l : r.links) {
    if (l.parent != 0) {
      new_links.push_back(l);
      continue;
    }
    SumLink m = l;
    int where = -1;
    if (ks.graph.has_edge(l.parent_edges[0])) where = -1;
    else
      for (int c = 0; c < (int)cs.size(); ++c)
        if (cs[c].graph.has_edge(l.parent_edges[0])) where = c;
    const Subgraph& s = where < 0 ? ks : cs[where];
    for (EdgeId id : l.parent_edges) require(s.graph.has_edge(id), "internal: glue object split apart");
    for (auto& v : m.parent_vertices) v = s.local[v];
    m.parent = where;  // resolved below
    moved.push_back(m);
  }
  std::vector<SumLink> glue_links;
  for (size_t c = 0; c < chunks.size(); ++c) {
    Graph h = cs[c].graph;
    SumLink l;
    l.k = k;
    l.parent = 0;
    add_glue(new_root, ks, l.parent_vertices, l.parent_edges);
    add_glue(h, cs[c], l.child_vertices, l.child_edges);
    l.child = r.add_node(h, relabel(cs[c]), "summand");
    chunk_node.push_back(l.child);
    glue_links.push_back(l);
  }
  r.nodes[0] = new_root;
  r.labels[0] = relabel(ks);
  for (auto& m : moved) {
    m.parent = m.parent < 0 ? 0 : chunk_node[m.parent];
    new_links.push_back(m);
  }
  new_links.insert(new_links.end(), glue_links.begin(), glue_links.end());
  r.links = new_links;
}

}  // namespace detail

/**
 * \brief Star decomposition S_2(G_0; G_1, ..., G_k) with e in G_0: si(G_0) = K_2 when the ends of e
 * form a 2-cut, otherwise si(G_0) = K_3 or G_0 is 3-connected. One summand per piece.
 */
inline SumRecipe s2_decompose(const Graph& g, EdgeId e, EdgeId* fresh_io = nullptr) {
  require(g.has_edge(e), "s2_decompose: unknown edge");
  require(is_2connected(g) && g.vertex_count() >= 3, "s2_decompose: need a 2-connected graph of order >= 3");
  EdgeId fresh = fresh_io ? *fresh_io : g.next_id();
  SumRecipe r;
  std::vector<Vertex> ident(g.vertex_count());
  std::iota(ident.begin(), ident.end(), 0);
  r.add_node(g, ident, "G0");
  Vertex x = g.edge(e).u, y = g.edge(e).v;
  std::vector<int> comp;
  int c = detail::components_without(g, {x, y}, comp);
  if (c >= 2) {
    std::vector<EdgeId> keep;
    for (auto& ed : g.edges())
      if (comp[ed.u] < 0 && comp[ed.v] < 0) keep.push_back(ed.id);
    std::vector<std::vector<EdgeId>> chunks;
    for (int i = 0; i < c; ++i) chunks.push_back(detail::edges_of_component(g, comp, i));
    detail::split_root(r, {std::min(x, y), std::max(x, y)}, keep, chunks, fresh);
    if (fresh_io) *fresh_io = fresh;
    return r;
  }
  while (true) {
    const Graph& h = r.nodes[0];
    int n = h.vertex_count();
    Vertex lx = -1, ly = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (r.labels[0][v] == x) lx = v;
      if (r.labels[0][v] == y) ly = v;
    }
    int best_size = INT_MAX;
    std::vector<Vertex> best_cut;
    std::vector<int> best_comp;
    int best_ce = -1, best_c = 0;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) {
        std::vector<int> cp;
        int cc = detail::components_without(h, {a, b}, cp);
        if (cc < 2) continue;
        int ce = cp[lx] >= 0 ? cp[lx] : cp[ly];
        int size = 2 + static_cast<int>(std::count(cp.begin(), cp.end(), ce));
        if (size < best_size) {
          best_size = size;
          best_cut = {a, b};
          best_comp = cp;
          best_ce = ce;
          best_c = cc;
        }
      }
    if (best_cut.empty()) break;
    std::vector<EdgeId> keep;
    std::vector<std::vector<EdgeId>> chunks;
    for (auto& ed : h.edges()) {
      int cu = best_comp[ed.u] >= 0 ? best_comp[ed.u] : best_comp[ed.v];
      if (cu < 0 || cu == best_ce) keep.push_back(ed.id);
    }
    for (int i = 0; i < best_c; ++i)
      if (i != best_ce) chunks.push_back(detail::edges_of_component(h, best_comp, i));
    detail::split_root(r, best_cut, keep, chunks, fresh);
  }
  if (fresh_io) *fresh_io = fresh;
  return r;
}

namespace detail {

/**
 * \brief A separation (G1, G2) with Z in V(G1) that breaks relative connectivity `level`:
 * level 3 forbids s <= 2; level 4 also forbids s = 3 with |G2| >= 5.
 */
inline std::optional<Separation> rel_violation(const Graph& g, const std::vector<Vertex>& z, int level) {
  int n = g.vertex_count();
  std::vector<char> inz(n, 0);
  for (Vertex v : z) inz[v] = 1;
  std::optional<Separation> found;
  for (int k = 0; k < level && k <= n && !found; ++k)
    for_each_subset(n, k, [&](const std::vector<int>& cut) {
      std::vector<int> comp;
      int c = components_without(g, cut, comp);
      if (c < 2) return true;
      std::vector<char> zc(c, 0);
      for (Vertex v = 0; v < n; ++v)
        if (comp[v] >= 0 && inz[v]) zc[comp[v]] = 1;
      // side 2 takes every Z-free component; with Z inside the cut, side 1 keeps the smallest
      std::vector<int> size(c, 0);
      for (Vertex v = 0; v < n; ++v)
        if (comp[v] >= 0) size[comp[v]]++;
      int keep = -1;
      if (std::count(zc.begin(), zc.end(), 1) == 0)
        keep = static_cast<int>(std::min_element(size.begin(), size.end()) - size.begin());
      int free_vertices = 0;
      for (int i = 0; i < c; ++i)
        if (!zc[i] && i != keep) free_vertices += size[i];
      if (free_vertices == 0) return true;
      if (k < 3 || free_vertices >= 2) {
        Separation s;
        s.cut = cut;
        for (auto& e : g.edges()) {
          int cu = comp[e.u] >= 0 ? comp[e.u] : comp[e.v];
          (cu >= 0 && !zc[cu] && cu != keep ? s.part2 : s.part1).push_back(e.id);
        }
        found = s;
        return false;
      }
      return true;
    });
  return found;
}

}  // namespace detail

/// Every s-separation with Z on side 1 has s >= 4 or is a 3-separation with |G_2| = 4.
inline bool is_4connected_rel(const Graph& g, const std::vector<Vertex>& z) {
  require(is_3connected(g), "is_4connected_rel: graph must be 3-connected");
  return !detail::rel_violation(g, z, 4).has_value();
}

struct S3Result {
  SumRecipe recipe;
  bool summands_are_minors = true;
};

/**
 * \brief G = S_3(G_0; G_1, ..., G_k) with Z in G_0, (G_0, Z) 4-connected, |G_i| >= 5.
 */
inline S3Result s3_decompose(const Graph& g, const std::vector<Vertex>& z) {
  require(is_3connected(g), "s3_decompose: graph must be 3-connected");
  int n = g.vertex_count();
  std::set<Vertex> zs(z.begin(), z.end());
  for (Vertex v : zs) require(v >= 0 && v < n, "s3_decompose: bad vertex in Z");
  if ((int)zs.size() <= 3) {
    bool inside = false;
    detail::for_each_subset(n, 3, [&](const std::vector<int>& cut) {
      std::set<Vertex> cs(cut.begin(), cut.end());
      if (std::includes(cs.begin(), cs.end(), zs.begin(), zs.end()) && !connected_without(g, cut))
        inside = true;
      return !inside;
    });
    require(!inside, "s3_decompose: Z lies inside a 3-cut");
  }
  S3Result out;
  SumRecipe& r = out.recipe;
  std::vector<Vertex> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  r.add_node(g, ident, "G0");
  EdgeId fresh = g.next_id();
  while (true) {
    const Graph& h = r.nodes[0];
    int hn = h.vertex_count();
    std::vector<char> inz(hn, 0);
    for (Vertex v = 0; v < hn; ++v)
      if (zs.count(r.labels[0][v])) inz[v] = 1;
    int best_size = INT_MAX;
    std::vector<Vertex> best_cut;
    std::vector<int> best_comp;
    std::vector<char> best_zc;
    detail::for_each_subset(hn, 3, [&](const std::vector<int>& cut) {
      std::vector<int> cp;
      int cc = detail::components_without(h, cut, cp);
      if (cc < 2) return true;
      std::vector<char> zc(cc, 0);
      for (Vertex v = 0; v < hn; ++v)
        if (cp[v] >= 0 && inz[v]) zc[cp[v]] = 1;
      require(std::count(zc.begin(), zc.end(), 1) > 0, "internal: Z inside a 3-cut of G_0");
      int side1 = 3, far = 0;
      for (Vertex v = 0; v < hn; ++v)
        if (cp[v] >= 0) (zc[cp[v]] ? side1 : far) += 1;
      if (far < 2) return true;
      if (side1 < best_size) {
        best_size = side1;
        best_cut = cut;
        best_comp = cp;
        best_zc = zc;
      }
      return true;
    });
    if (best_cut.empty()) break;
    std::vector<EdgeId> keep, chunk;
    for (auto& ed : h.edges()) {
      int cu = best_comp[ed.u] >= 0 ? best_comp[ed.u] : best_comp[ed.v];
      (cu < 0 || best_zc[cu] ? keep : chunk).push_back(ed.id);
    }
    detail::split_root(r, best_cut, keep, {chunk}, fresh);
  }
  // summands are minors unless si(G) has a cubic, triangle-free z with Z in {z} + N(z)
  Graph si = simplify(g);
  for (Vertex v = 0; v < n; ++v) {
    if (si.degree(v) != 3) continue;
    auto nb = si.neighbors(v);
    bool tri = false;
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) tri |= si.adjacent(nb[i], nb[j]);
    if (tri) continue;
    std::set<Vertex> closed(nb.begin(), nb.end());
    closed.insert(v);
    if (std::includes(closed.begin(), closed.end(), zs.begin(), zs.end())) out.summands_are_minors = false;
  }
  return out;
}

// --- chain decompositions ---------------------------------------------------

struct ChainDecomposition {
  std::vector<std::vector<EdgeId>> parts;            // G_0 .. G_n
  std::vector<std::pair<Vertex, Vertex>> pairs;      // {x_i, y_i}, i = 0..n
  int length() const { return static_cast<int>(parts.size()) - 1; }
};

/// Independent check of conditions (i)-(iii).
inline bool verify_chain(const Graph& g, EdgeId e, const ChainDecomposition& c) {
  if (c.parts.empty() || c.pairs.size() != c.parts.size()) return false;
  std::set<EdgeId> seen;
  for (auto& p : c.parts)
    for (EdgeId id : p)
      if (!g.has_edge(id) || !seen.insert(id).second) return false;
  if ((int)seen.size() != g.edge_count()) return false;
  if (!std::count(c.parts[0].begin(), c.parts[0].end(), e)) return false;
  auto norm = [](std::pair<Vertex, Vertex> p) {
    return std::pair<Vertex, Vertex>(std::min(p.first, p.second), std::max(p.first, p.second));
  };
  std::set<std::pair<Vertex, Vertex>> pairs;
  if (norm(c.pairs[0]) != norm({g.edge(e).u, g.edge(e).v})) return false;
  for (auto& p : c.pairs)
    if (!pairs.insert(norm(p)).second) return false;
  for (int i = 1; i <= c.length(); ++i) {
    Separation s;
    for (int j = 0; j < i; ++j) s.part1.insert(s.part1.end(), c.parts[j].begin(), c.parts[j].end());
    for (int j = i; j <= c.length(); ++j) s.part2.insert(s.part2.end(), c.parts[j].begin(), c.parts[j].end());
    std::vector<char> in1(g.vertex_count(), 0), in2(g.vertex_count(), 0);
    for (EdgeId id : s.part1) in1[g.edge(id).u] = in1[g.edge(id).v] = 1;
    for (EdgeId id : s.part2) in2[g.edge(id).u] = in2[g.edge(id).v] = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (in1[v] && in2[v]) s.cut.push_back(v);
    if (s.cut.size() != 2 || !is_separation(g, s)) return false;
    if (std::make_pair(s.cut[0], s.cut[1]) != norm(c.pairs[i])) return false;
  }
  return true;
}

struct ChainResult {
  int a = 0;
  ChainDecomposition chain;
  bool exact = true;
};

/** \brief a(G,e) with a maximizing chain, by search over nested 2-separations. */
inline ChainResult chain_decompose(const Graph& g, EdgeId e, Budget& budget) {
  require(is_2connected(g), "chain_decompose: graph must be 2-connected");
  require(g.has_edge(e), "chain_decompose: unknown edge");
  int m = g.edge_count(), n = g.vertex_count();
  require(m <= 64, "chain_decompose: at most 64 edges");
  using Mask = std::uint64_t;
  Vertex x0 = std::min(g.edge(e).u, g.edge(e).v), y0 = std::max(g.edge(e).u, g.edge(e).v);
  int ei = g.index_of(e);
  // valid prefixes: e-side edge sets of 2-separations whose cut differs from {x0, y0}
  std::vector<Mask> sets;
  std::vector<int> set_cut;
  std::vector<std::pair<Vertex, Vertex>> cuts;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (a == x0 && b == y0) continue;
      std::vector<int> comp;
      int c = detail::components_without(g, {a, b}, comp);
      if (c < 2 || c > 20) continue;
      std::vector<Mask> cm(c, 0);
      std::vector<int> inner;
      for (int i = 0; i < m; ++i) {
        auto& ed = g.edge_at(i);
        int cu = comp[ed.u] >= 0 ? comp[ed.u] : comp[ed.v];
        if (cu < 0) inner.push_back(i);
        else cm[cu] |= Mask(1) << i;
      }
      int ce = comp[g.edge_at(ei).u] >= 0 ? comp[g.edge_at(ei).u] : comp[g.edge_at(ei).v];
      int cut_index = static_cast<int>(cuts.size());
      cuts.push_back({a, b});
      int p = static_cast<int>(inner.size());
      require(p <= 12, "chain_decompose: too many edges inside a cut");
      for (unsigned mask = 0; mask < (1u << c); ++mask) {
        if (!((mask >> ce) & 1u) || mask == (1u << c) - 1) continue;
        Mask base = 0;
        for (int i = 0; i < c; ++i)
          if ((mask >> i) & 1u) base |= cm[i];
        for (unsigned pm = 0; pm < (1u << p); ++pm) {
          Mask s = base;
          for (int j = 0; j < p; ++j)
            if ((pm >> j) & 1u) s |= Mask(1) << inner[j];
          sets.push_back(s);
          set_cut.push_back(cut_index);
        }
      }
    }
  int k = static_cast<int>(sets.size());
  // longest strictly nested sequence with distinct cuts
  std::vector<std::vector<int>> sup(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && (sets[i] & sets[j]) == sets[i] && sets[i] != sets[j] && set_cut[i] != set_cut[j])
        sup[i].push_back(j);
  ChainResult out;
  std::vector<int> cur, best;
  std::set<int> used;
  std::function<void(int)> go = [&](int i) {
    if (!budget.tick()) return;
    if (cur.size() > best.size()) best = cur;
    for (int j : sup[i]) {
      if (used.count(set_cut[j])) continue;
      used.insert(set_cut[j]);
      cur.push_back(j);
      go(j);
      cur.pop_back();
      used.erase(set_cut[j]);
      if (budget.exhausted()) return;
    }
  };
  // upper bound: number of distinct cuts; stop early once reached
  for (int i = 0; i < k && !budget.exhausted(); ++i) {
    used = {set_cut[i]};
    cur = {i};
    go(i);
    if (best.size() == cuts.size()) break;
  }
  out.exact = !budget.exhausted();
  out.a = static_cast<int>(best.size());
  Mask prev = 0;
  auto ids_of = [&](Mask s) {
    std::vector<EdgeId> ids;
    for (int i = 0; i < m; ++i)
      if ((s >> i) & 1u) ids.push_back(g.edge_at(i).id);
    return ids;
  };
  out.chain.pairs.push_back({x0, y0});
  for (int idx : best) {
    out.chain.parts.push_back(ids_of(sets[idx] & ~prev));
    out.chain.pairs.push_back(cuts[set_cut[idx]]);
    prev = sets[idx];
  }
  Mask all = m == 64 ? ~Mask(0) : ((Mask(1) << m) - 1);
  out.chain.parts.push_back(ids_of(all & ~prev));
  require(verify_chain(g, e, out.chain), "internal: chain decomposition failed verification");
  return out;
}

inline ChainResult chain_decompose(const Graph& g, EdgeId e) {
  Budget b;
  return chain_decompose(g, e, b);
}

/** \brief Iterated operation S: leaves are 3-connected or of order <= 3. */
inline SumRecipe operation_S_tree(const Graph& g, EdgeId e) {
  require(is_2connected(g), "operation_S_tree: graph must be 2-connected");
  SumRecipe out;
  EdgeId fresh = g.next_id();
  // returns the node and where each vertex of h sits in it
  std::function<std::pair<int, std::vector<Vertex>>(const Graph&, std::vector<Vertex>, EdgeId)> build =
      [&](const Graph& h, std::vector<Vertex> lab, EdgeId he) -> std::pair<int, std::vector<Vertex>> {
    std::vector<Vertex> at(h.vertex_count());
    std::iota(at.begin(), at.end(), 0);
    if (h.vertex_count() <= 3 || is_3connected(h)) return {out.add_node(h, lab, "leaf"), at};
    SumRecipe star = s2_decompose(h, he, &fresh);
    std::vector<Vertex> l0;
    std::fill(at.begin(), at.end(), -1);
    for (Vertex v = 0; v < (int)star.labels[0].size(); ++v) {
      l0.push_back(lab[star.labels[0][v]]);
      at[star.labels[0][v]] = v;
    }
    int root = out.add_node(star.nodes[0], l0, "G0");
    for (auto& l : star.links) {
      std::vector<Vertex> lc;
      for (Vertex v : star.labels[l.child]) lc.push_back(lab[v]);
      auto [child, where] = build(star.nodes[l.child], lc, l.child_edges[0]);
      SumLink nl = l;
      nl.parent = root;
      nl.child = child;
      for (auto& v : nl.child_vertices) v = where[v];
      out.links.push_back(nl);
    }
    return {root, at};
  };
  std::vector<Vertex> ident(g.vertex_count());
  std::iota(ident.begin(), ident.end(), 0);
  build(g, ident, e);
  return out;
}

// --- 2-separation trichotomy ------------------------------------------------

struct Trichotomy {
  char kind = 'c';
  Separation sep;
  Weight h_max = 0, j_max = 0;  // max xy-path weight in part1 / part2
  SumRecipe recipe;              // case c
  std::vector<Weight> summand_max;  // case c: max x_i y_i path in G_i \ e_i
  bool exact = true;
};

namespace detail {

inline Weight side_max_path(const Graph& g, const std::vector<EdgeId>& ids, Vertex x, Vertex y,
                            Budget& budget, bool& exact) {
  Subgraph s = extract(g, ids, {x, y});
  auto hp = heaviest_path(s.graph, s.local[x], s.local[y], budget);
  if (!hp.exact) exact = false;
  return hp.exists ? hp.best.weight : 0;
}

}  // namespace detail

inline Trichotomy trichotomy_2sep(const Graph& g, Weight t, Budget& budget) {
  require(is_2connected(g) && g.vertex_count() >= 3, "trichotomy_2sep: need 2-connected, order >= 3");
  Trichotomy out;
  struct Cand {
    Separation sep;
    Weight w1, w2;
  };
  std::vector<Cand> cands;
  for (auto& s : enumerate_separations(g, 2)) {
    if (s.cut.size() != 2) continue;
    // redistribute edges inside the cut over both sides
    std::vector<EdgeId> inner, rest;
    for (EdgeId id : s.part1) {
      const Edge& ed = g.edge(id);
      (ed.joins(s.cut[0], s.cut[1]) ? inner : rest).push_back(id);
    }
    int p = std::min<int>(static_cast<int>(inner.size()), 4);
    for (unsigned pm = 0; pm < (1u << p); ++pm) {
      Separation t2;
      t2.cut = s.cut;
      t2.part1 = rest;
      t2.part2 = s.part2;
      for (int j = 0; j < (int)inner.size(); ++j)
        ((j < p && ((pm >> j) & 1u)) ? t2.part2 : t2.part1).push_back(inner[j]);
      if (!is_separation(g, t2)) continue;
      bool ex = true;
      Weight w1 = detail::side_max_path(g, t2.part1, s.cut[0], s.cut[1], budget, ex);
      Weight w2 = detail::side_max_path(g, t2.part2, s.cut[0], s.cut[1], budget, ex);
      if (!ex) out.exact = false;
      cands.push_back({t2, w1, w2});
    }
  }
  for (char want : {'a', 'b'})
    for (auto& c : cands) {
      bool hit = want == 'a' ? (c.w1 < t && c.w2 < t) : (c.w1 >= t && c.w2 >= t);
      if (hit) {
        out.kind = want;
        out.sep = c.sep;
        out.h_max = c.w1;
        out.j_max = c.w2;
        return out;
      }
    }
  out.kind = 'c';
  if (cands.empty()) {
    std::vector<Vertex> ident(g.vertex_count());
    std::iota(ident.begin(), ident.end(), 0);
    out.recipe.add_node(g, ident, "G0");
    return out;
  }
  // heavy side H of least order
  const Cand* best = nullptr;
  std::vector<EdgeId> hside, jside;
  size_t best_order = SIZE_MAX;
  for (auto& c : cands) {
    bool first_heavy = c.w1 >= t;
    const auto& hp = first_heavy ? c.sep.part1 : c.sep.part2;
    size_t order = extract(g, hp).graph.vertex_count();
    if (order < best_order) {
      best_order = order;
      best = &c;
      hside = hp;
      jside = first_heavy ? c.sep.part2 : c.sep.part1;
    }
  }
  out.sep = best->sep;
  out.h_max = best->w1;
  out.j_max = best->w2;
  Vertex x = best->sep.cut[0], y = best->sep.cut[1];
  EdgeId fresh = g.next_id();
  Subgraph hs = extract(g, hside, {x, y});
  Graph hplus = hs.graph;
  EdgeId eh = hplus.add_edge_with_id(fresh++, hs.local[x], hs.local[y], 1);
  Subgraph js = extract(g, jside, {x, y});
  Graph jplus = js.graph;
  EdgeId ej = jplus.add_edge_with_id(fresh++, js.local[x], js.local[y], 1);
  SumRecipe star = s2_decompose(hplus, eh, &fresh);
  for (auto& lab : star.labels)
    for (auto& v : lab) v = hs.original[v];
  std::vector<Vertex> jl = js.original;
  int jn = star.add_node(jplus, jl, "summand");
  SumLink l;
  l.parent = 0;
  l.child = jn;
  l.k = 2;
  // e_H sits in the root with its ends
  const Graph& root = star.nodes[0];
  require(root.has_edge(eh), "internal: e_H left the root");
  l.parent_vertices = {root.edge(eh).u, root.edge(eh).v};
  l.parent_edges = {eh};
  Vertex ju = js.local[star.labels[0][root.edge(eh).u]], jv = js.local[star.labels[0][root.edge(eh).v]];
  l.child_vertices = {ju, jv};
  l.child_edges = {ej};
  star.links.push_back(l);
  out.recipe = star;
  // summand check: G_i \ e_i has no heavy x_i y_i path
  for (auto& lk : out.recipe.links) {
    const Graph& gi = out.recipe.nodes[lk.child];
    Graph del = delete_edges(gi, lk.child_edges);
    auto hp = heaviest_path(del, lk.child_vertices[0], lk.child_vertices[1], budget);
    if (!hp.exact) out.exact = false;
    out.summand_max.push_back(hp.exists ? hp.best.weight : 0);
  }
  return out;
}

inline Trichotomy trichotomy_2sep(const Graph& g, Weight t) {
  Budget b;
  return trichotomy_2sep(g, t, b);
}

// --- longest-path bound for S_2 ----------------------------------------------

struct EllBound {
  int ell_total = 0, ell_base = 0, ell_max_summand = 0;
  bool holds = true;
  bool exact = true;
};

/** \brief l(S_2(G_0; ...)) <= (l(G_0) + 2) * max l(G_i), all lengths exact. */
inline EllBound ell_bound_check(const SumRecipe& r) {
  require(r.is_star() && !r.links.empty(), "ell_bound_check: need a star recipe with k >= 1");
  for (auto& l : r.links) require(l.k == 2, "ell_bound_check: 2-sums only");
  EllBound out;
  auto ell = [&](const Graph& g) {
    Budget b;
    auto lp = longest_path(with_unit_weights(g), b);
    if (!lp.exact) out.exact = false;
    return lp.edges;
  };
  out.ell_total = ell(evaluate(r).graph);
  out.ell_base = ell(r.nodes[0]);
  for (auto& l : r.links) out.ell_max_summand = std::max(out.ell_max_summand, ell(r.nodes[l.child]));
  out.holds = out.ell_total <= (out.ell_base + 2) * out.ell_max_summand;
  return out;
}

/// Random S_2 recipe: 2-connected base, each summand on its own base edge.
inline SumRecipe random_s2_recipe(gen::Rng& rng, int base_n, int k, int summand_n) {
  SumRecipe r;
  Graph base = gen::random_2connected(base_n, base_n / 2, rng);
  r.add_node(base, {}, "G0");
  std::vector<EdgeId> free_edges = edge_ids(base);
  std::shuffle(free_edges.begin(), free_edges.end(), rng);
  k = std::min<int>(k, static_cast<int>(free_edges.size()));
  std::uniform_int_distribution<int> sz(3, std::max(3, summand_n));
  for (int i = 0; i < k; ++i) {
    int sn = sz(rng);
    Graph s = gen::random_2connected(sn, sn / 2, rng);
    EdgeId se = s.edge_at(std::uniform_int_distribution<int>(0, s.edge_count() - 1)(rng)).id;
    int c = r.add_node(s, {}, "summand");
    const Edge& be = r.nodes[0].edge(free_edges[i]);
    const Edge& ce = r.nodes[c].edge(se);
    r.links.push_back(SumLink{0, c, 2, {be.u, be.v}, {ce.u, ce.v}, {be.id}, {se}});
  }
  return r;
}

}  // namespace thetalab

#endif
