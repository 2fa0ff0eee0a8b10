#ifndef THETALAB_BONDS_HPP
#define THETALAB_BONDS_HPP

#include "generators.hpp"
#include "theta.hpp"

namespace thetalab {

/** \brief Bond delta(S): both G[S] and G[V - S] connected. */
struct BondCertificate {
  std::vector<Vertex> side_S;
  std::vector<EdgeId> cut_edges;
};

namespace detail {
inline bool side_connected(const Graph& g, const std::vector<char>& in, char want) {
  std::vector<char> rem(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) rem[v] = in[v] != want;
  std::vector<int> comp;
  return components(g, comp, &rem) == 1;
}
}  // namespace detail

/// Removing cut_edges leaves exactly the two declared connected sides; every edge in must crosses.
inline bool verify_bond(const Graph& g, const BondCertificate& b, const std::vector<EdgeId>& must = {}) {
  int n = g.vertex_count();
  std::vector<char> in(n, 0);
  for (Vertex v : b.side_S) {
    if (v < 0 || v >= n || in[v]) return false;
    in[v] = 1;
  }
  if (b.side_S.empty() || (int)b.side_S.size() == n) return false;
  std::set<EdgeId> cut;
  for (auto& e : g.edges())
    if (in[e.u] != in[e.v]) cut.insert(e.id);
  if (cut != std::set<EdgeId>(b.cut_edges.begin(), b.cut_edges.end()) || cut.size() != b.cut_edges.size())
    return false;
  for (EdgeId id : must)
    if (!cut.count(id)) return false;
  return detail::side_connected(g, in, 1) && detail::side_connected(g, in, 0);
}

/** \brief Bond containing e, f and h, by enumerating bipartitions separating the ends of e. */
inline Search<BondCertificate> bond_through(const Graph& g, EdgeId e, EdgeId f, EdgeId h, Budget& budget) {
  require(e != f && f != h && e != h, "bond_through: edges must be distinct");
  require(g.has_edge(e) && g.has_edge(f) && g.has_edge(h), "bond_through: unknown edge id");
  require(is_connected(g), "bond_through: graph must be connected");
  int n = g.vertex_count();
  require(n <= 26, "bond_through: graph too large for bipartition enumeration");
  const Edge& a = g.edge(e);
  std::vector<Vertex> free_v;
  for (Vertex v = 0; v < n; ++v)
    if (v != a.u && v != a.v) free_v.push_back(v);
  std::vector<char> in(n, 0);
  for (std::uint64_t m = 0; m < (1ULL << free_v.size()); ++m) {
    if (!budget.tick()) return Search<BondCertificate>::miss(true);
    in.assign(n, 0);
    in[a.u] = 1;
    for (size_t i = 0; i < free_v.size(); ++i) in[free_v[i]] = (m >> i) & 1;
    auto crosses = [&](EdgeId id) {
      auto& x = g.edge(id);
      return in[x.u] != in[x.v];
    };
    if (!crosses(f) || !crosses(h)) continue;
    if (!detail::side_connected(g, in, 1) || !detail::side_connected(g, in, 0)) continue;
    BondCertificate b;
    for (Vertex v = 0; v < n; ++v)
      if (in[v]) b.side_S.push_back(v);
    for (auto& x : g.edges())
      if (in[x.u] != in[x.v]) b.cut_edges.push_back(x.id);
    return Search<BondCertificate>::hit(b);
  }
  return Search<BondCertificate>::miss(false);
}

inline Search<BondCertificate> bond_through(const Graph& g, EdgeId e, EdgeId f, EdgeId h) {
  Budget b;
  return bond_through(g, e, f, h, b);
}

/// Both reduction forms; the target is theta_{t,t,t} in each.
struct BondReduction {
  Weight t = 0;
  Graph subdivided;  // e, f, h replaced by paths of t unit edges, all else unit
  Graph weighted;    // w(e) = w(f) = w(h) = t, all else 1
};

inline BondReduction subdivide_for_theta(const Graph& g, EdgeId e, EdgeId f, EdgeId h, Weight t) {
  require(t >= 1, "subdivide_for_theta: t >= 1");
  require(g.has_edge(e) && g.has_edge(f) && g.has_edge(h), "subdivide_for_theta: unknown edge id");
  BondReduction r;
  r.t = t;
  Graph unit = with_unit_weights(g);
  r.weighted = unit;
  for (EdgeId id : {e, f, h}) r.weighted.set_weight(id, t);
  r.subdivided = unit;
  for (EdgeId id : {e, f, h}) r.subdivided = gen::subdivide_edge(r.subdivided, id, static_cast<int>(t));
  return r;
}

/// Sufficiency value for the reduction: any theta path of weight >= t uses a whole heavy edge.
inline Weight bond_reduction_t(const Graph& g) { return g.edge_count() + 1; }

struct BondEquivalence {
  Search<BondCertificate> bond;
  Search<ThetaCertificate> theta_subdivided, theta_weighted;
  Weight t = 0;
  bool unknown() const { return bond.unknown() || theta_subdivided.unknown() || theta_weighted.unknown(); }
  bool agrees() const {
    return !unknown() && bond.found() == theta_subdivided.found() && bond.found() == theta_weighted.found();
  }
};

/** \brief bond_through against both reductions; t <= 0 picks |E| + 1. */
inline BondEquivalence bond_theta_equivalence(const Graph& g, EdgeId e, EdgeId f, EdgeId h, Weight t,
                                              Budget& budget) {
  BondEquivalence out;
  out.t = t > 0 ? t : bond_reduction_t(g);
  out.bond = bond_through(g, e, f, h, budget);
  auto red = subdivide_for_theta(g, e, f, h, out.t);
  out.theta_weighted = contains_theta(red.weighted, out.t, out.t, out.t, budget);
  out.theta_subdivided = contains_theta(red.subdivided, out.t, out.t, out.t, budget);
  for (auto* s : {&out.theta_weighted, &out.theta_subdivided})
    if (s->found())
      require(verify_theta(s == &out.theta_weighted ? red.weighted : red.subdivided, *s->value),
              "internal: unverified theta certificate");
  if (out.bond.found()) require(verify_bond(g, *out.bond.value, {e, f, h}), "internal: unverified bond");
  return out;
}

inline BondEquivalence bond_theta_equivalence(const Graph& g, EdgeId e, EdgeId f, EdgeId h, Weight t = 0) {
  Budget b;
  return bond_theta_equivalence(g, e, f, h, t, b);
}

}  // namespace thetalab

#endif
