#ifndef THETALAB_IO_HPP
#define THETALAB_IO_HPP

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bonds.hpp"
#include "classes.hpp"
#include "decompose.hpp"
#include "omega.hpp"
#include "patterns.hpp"

namespace thetalab {

using json = nlohmann::json;

inline constexpr const char* kSchema = "thetalab.report/1";
inline constexpr const char* kVersion = "0.1.0";

// --- graph text format -------------------------------------------------------

/**
 * \brief Line 1 "n m", then m lines "u v [w]" (0-based, w >= 1, default 1).
 * '#' starts a comment. Edge ids follow line order.
 */
inline Graph read_graph(std::istream& in) {
  std::vector<std::vector<long long>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<long long> row;
    std::string tok;
    while (ss >> tok) {
      size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      require(used == tok.size(), "line " + std::to_string(lineno) + ": not an integer: " + tok);
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(row);
  }
  require(!rows.empty() && rows[0].size() == 2, "graph header must be 'n m'");
  long long n = rows[0][0], m = rows[0][1];
  require(n >= 0 && n <= 100000 && m >= 0, "bad vertex or edge count");
  require((long long)rows.size() - 1 == m, "expected " + std::to_string(m) + " edge lines, found " +
                                               std::to_string(rows.size() - 1));
  Graph g(static_cast<int>(n));
  for (long long i = 1; i <= m; ++i) {
    auto& r = rows[i];
    require(r.size() == 2 || r.size() == 3, "edge line must be 'u v [w]'");
    require(r[0] >= 0 && r[0] < n && r[1] >= 0 && r[1] < n, "edge endpoint out of range");
    require(r[0] != r[1], "loops are not allowed");
    Weight w = r.size() == 3 ? r[2] : 1;
    require(w >= 1, "edge weight must be >= 1");
    g.add_edge(static_cast<Vertex>(r[0]), static_cast<Vertex>(r[1]), w);
  }
  return g;
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path);
  return read_graph(in);
}

/// Writes edges in id order; ids must be 0..m-1 for a faithful round trip.
inline std::string write_graph(const Graph& g) {
  std::vector<Edge> es(g.edges().begin(), g.edges().end());
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto& e : es) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
  return out.str();
}

/// Same edges renumbered 0..m-1 in id order (so the text format keeps ids).
inline Graph renumbered(const Graph& g) {
  std::vector<Edge> es(g.edges().begin(), g.edges().end());
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  Graph h(g.vertex_count());
  for (auto& e : es) h.add_edge(e.u, e.v, e.w);
  return h;
}

// --- to JSON -----------------------------------------------------------------

inline json to_json(const Graph& g) {
  json es = json::array();
  for (auto& e : g.edges()) es.push_back({e.id, e.u, e.v, e.w});
  return {{"n", g.vertex_count()}, {"edges", es}};
}

inline json to_json(const PathWitness& p) {
  return {{"vertices", p.vertices}, {"edge_ids", p.edges}, {"weight", p.weight}};
}

inline json to_json(const Separation& s) {
  return {{"part1", s.part1}, {"part2", s.part2}, {"cut", s.cut}};
}

inline json to_json(const ThetaCertificate& c) {
  json ps = json::array();
  for (auto& p : c.paths) ps.push_back(to_json(p));
  return {{"kind", "theta"}, {"branch", {c.branch_u, c.branch_v}}, {"paths", ps}, {"thresholds", c.thresholds}};
}

inline json to_json(const PatternWitness& w) {
  json bp = json::array();
  for (auto& p : w.branch_paths) bp.push_back(to_json(p));
  return {{"kind", "pattern"},         {"pattern", w.pattern},   {"parameter", w.parameter},
          {"pattern_graph", to_json(w.pattern_graph)}, {"branch", w.branch}, {"branch_paths", bp}};
}

inline json to_json(const SumRecipe& r) {
  json nodes = json::array(), links = json::array();
  for (size_t i = 0; i < r.nodes.size(); ++i)
    nodes.push_back({{"graph", to_json(r.nodes[i])},
                     {"labels", i < r.labels.size() ? r.labels[i] : std::vector<Vertex>{}},
                     {"tag", i < r.tags.size() ? r.tags[i] : ""}});
  for (auto& l : r.links)
    links.push_back({{"parent", l.parent},
                     {"child", l.child},
                     {"k", l.k},
                     {"parent_vertices", l.parent_vertices},
                     {"child_vertices", l.child_vertices},
                     {"parent_edges", l.parent_edges},
                     {"child_edges", l.child_edges}});
  return {{"kind", "recipe"}, {"nodes", nodes}, {"links", links}};
}

inline json to_json(const PlaneGraph& p) {
  return {{"kind", "drawing"},
          {"graph", to_json(p.graph)},
          {"rotation", p.rotation},
          {"outer_cycle", to_json(p.outer_cycle())}};
}

inline json to_json(const CrossCertificate& x) {
  return {{"kind", "cross"},
          {"cycle", to_json(x.cycle)},
          {"path1", to_json(x.path1)},
          {"path2", to_json(x.path2)},
          {"ends", x.ends}};
}

inline json to_json(const BondCertificate& b, const std::vector<EdgeId>& through) {
  return {{"kind", "bond"}, {"side_S", b.side_S}, {"cut_edges", b.cut_edges}, {"through", through}};
}

inline json to_json(const ChainDecomposition& c, EdgeId e) {
  json pairs = json::array();
  for (auto& [x, y] : c.pairs) pairs.push_back({x, y});
  return {{"kind", "chain"}, {"edge", e}, {"parts", c.parts}, {"pairs", pairs}, {"length", c.length()}};
}

inline json to_json(const NearlyOuterplanar& f) {
  json cr = json::array();
  for (auto& [a, b] : f.crossings) cr.push_back({a, b});
  return {{"kind", "nearly_outerplanar"},
          {"order", f.order},
          {"cycle", to_json(f.cycle)},
          {"crossings", cr},
          {"free_edges", f.free_edges}};
}

inline json to_json(const MinorModel& m) {
  return {{"kind", "minor"},
          {"name", m.name},
          {"pattern", to_json(m.pattern)},
          {"branch_sets", m.branch_sets},
          {"realizers", m.realizers}};
}

inline json to_json(const ClassCertificate& c) {
  json j = {{"kind", "class"}, {"tag", c.tag}, {"status", c.member() ? "member" : status_name(c.status)}};
  if (!c.clause.empty()) j["clause"] = c.clause;
  if (c.path) j["path"] = to_json(*c.path);
  if (c.edge) j["edge"] = *c.edge;
  if (c.ell >= 0) j["ell"] = c.ell;
  j["max_weight"] = c.max_weight;
  j["max_cpath"] = c.max_cpath;
  j["max_inner"] = c.max_inner;
  if (c.hamilton) j["cycle"] = to_json(*c.hamilton);
  if (!c.crossings.empty()) {
    json cr = json::array();
    for (auto& [a, b] : c.crossings) cr.push_back({a, b});
    j["crossings"] = cr;
  }
  if (!c.free_edges.empty()) j["free_edges"] = c.free_edges;
  if (c.recipe) j["recipe"] = to_json(*c.recipe);
  return j;
}

// --- from JSON ---------------------------------------------------------------

inline Graph graph_from_json(const json& j) {
  Graph g(j.at("n").get<int>());
  for (auto& e : j.at("edges")) {
    Vertex u = e.at(1), v = e.at(2);
    require(u >= 0 && v >= 0 && u < g.vertex_count() && v < g.vertex_count() && u != v, "bad edge in JSON graph");
    g.add_edge_with_id(e.at(0), u, v, e.at(3));
  }
  return g;
}

inline PathWitness path_from_json(const json& j) {
  PathWitness p;
  p.vertices = j.at("vertices").get<std::vector<Vertex>>();
  p.edges = j.at("edge_ids").get<std::vector<EdgeId>>();
  p.weight = j.value("weight", Weight{0});
  return p;
}

inline ThetaCertificate theta_from_json(const json& j) {
  ThetaCertificate c;
  c.branch_u = j.at("branch").at(0);
  c.branch_v = j.at("branch").at(1);
  for (int i = 0; i < 3; ++i) c.paths[i] = path_from_json(j.at("paths").at(i));
  c.thresholds = j.at("thresholds").get<std::array<Weight, 3>>();
  return c;
}

inline PatternWitness pattern_from_json(const json& j) {
  PatternWitness w;
  w.pattern = j.at("pattern");
  w.parameter = j.at("parameter");
  w.pattern_graph = graph_from_json(j.at("pattern_graph"));
  w.branch = j.at("branch").get<std::vector<Vertex>>();
  for (auto& p : j.at("branch_paths")) w.branch_paths.push_back(path_from_json(p));
  return w;
}

inline SumRecipe recipe_from_json(const json& j) {
  SumRecipe r;
  for (auto& n : j.at("nodes"))
    r.add_node(graph_from_json(n.at("graph")), n.value("labels", std::vector<Vertex>{}), n.value("tag", ""));
  for (auto& l : j.at("links")) {
    SumLink s;
    s.parent = l.at("parent");
    s.child = l.at("child");
    s.k = l.at("k");
    s.parent_vertices = l.at("parent_vertices").get<std::vector<Vertex>>();
    s.child_vertices = l.at("child_vertices").get<std::vector<Vertex>>();
    s.parent_edges = l.at("parent_edges").get<std::vector<EdgeId>>();
    s.child_edges = l.at("child_edges").get<std::vector<EdgeId>>();
    r.links.push_back(s);
  }
  return r;
}

inline PlaneGraph drawing_from_json(const json& j) {
  PlaneGraph p;
  p.graph = graph_from_json(j.at("graph"));
  p.rotation = j.at("rotation").get<std::vector<std::vector<EdgeId>>>();
  require((int)p.rotation.size() == p.graph.vertex_count(), "rotation size mismatch");
  p.compute_faces();
  p.outer = p.face_with_edges(path_from_json(j.at("outer_cycle")).edges);
  return p;
}

inline CrossCertificate cross_from_json(const json& j) {
  CrossCertificate x;
  x.cycle = path_from_json(j.at("cycle"));
  x.path1 = path_from_json(j.at("path1"));
  x.path2 = path_from_json(j.at("path2"));
  x.ends = j.at("ends").get<std::array<int, 4>>();
  return x;
}

inline ChainDecomposition chain_from_json(const json& j) {
  ChainDecomposition c;
  c.parts = j.at("parts").get<std::vector<std::vector<EdgeId>>>();
  for (auto& p : j.at("pairs")) c.pairs.push_back({p.at(0), p.at(1)});
  return c;
}

inline MinorModel minor_from_json(const json& j) {
  MinorModel m;
  m.name = j.at("name");
  m.pattern = graph_from_json(j.at("pattern"));
  m.branch_sets = j.at("branch_sets").get<std::vector<std::vector<Vertex>>>();
  m.realizers = j.at("realizers").get<std::vector<EdgeId>>();
  return m;
}

// --- verification ------------------------------------------------------------

/// Evaluation reproduces G: via host labels when every node has them, else up to isomorphism.
inline bool recipe_realizes(const Graph& g, const SumRecipe& r) {
  Evaluation ev;
  try {
    ev = evaluate(r);
  } catch (const Error&) {
    return false;
  }
  bool labelled = r.labels.size() == r.nodes.size();
  for (size_t i = 0; labelled && i < r.nodes.size(); ++i)
    labelled = (int)r.labels[i].size() == r.nodes[i].vertex_count();
  if (!labelled) return isomorphic(ev.graph, g);
  int n = ev.graph.vertex_count();
  if (n != g.vertex_count() || ev.graph.edge_count() != g.edge_count()) return false;
  std::vector<Vertex> host(n, -1);
  for (size_t i = 0; i < r.nodes.size(); ++i)
    for (Vertex v = 0; v < r.nodes[i].vertex_count(); ++v) {
      Vertex x = ev.vertex_of[i][v], h = r.labels[i][v];
      if (h < 0 || h >= g.vertex_count()) return false;
      if (host[x] >= 0 && host[x] != h) return false;
      host[x] = h;
    }
  std::set<Vertex> image(host.begin(), host.end());
  if ((int)image.size() != n || image.count(-1)) return false;
  std::multiset<std::tuple<Vertex, Vertex, Weight>> a, b;
  for (auto& e : ev.graph.edges()) {
    Vertex u = host[e.u], v = host[e.v];
    a.insert({std::min(u, v), std::max(u, v), 1});
  }
  for (auto& e : g.edges()) b.insert({std::min(e.u, e.v), std::max(e.u, e.v), 1});
  return a == b;
}

/**
 * \brief Re-verify one emitted certificate against G. Unknown kinds are rejected.
 */
inline bool verify_certificate(const Graph& g, const json& c) {
  try {
    std::string kind = c.at("kind");
    if (kind == "theta") return verify_theta(g, theta_from_json(c));
    if (kind == "pattern") return verify_subdivision(g, pattern_from_json(c));
    if (kind == "bond") {
      BondCertificate b{c.at("side_S").get<std::vector<Vertex>>(), c.at("cut_edges").get<std::vector<EdgeId>>()};
      return verify_bond(g, b, c.value("through", std::vector<EdgeId>{}));
    }
    if (kind == "cross") return verify_cross(g, cross_from_json(c));
    if (kind == "chain") return verify_chain(g, c.at("edge"), chain_from_json(c));
    if (kind == "minor") return verify_minor_model(g, minor_from_json(c));
    if (kind == "recipe") return recipe_realizes(g, recipe_from_json(c));
    if (kind == "nearly_outerplanar") {
      NearlyOuterplanar f;
      f.order = c.at("order").get<std::vector<Vertex>>();
      f.cycle = path_from_json(c.at("cycle"));
      f.free_edges = c.at("free_edges").get<std::vector<EdgeId>>();
      return verify_nearly_outerplanar(g, f);
    }
    if (kind == "drawing") {
      auto p = drawing_from_json(c);
      if (!detail::same_graph(p.graph, g) || !embedding_valid(p) || p.outer < 0) return false;
      return true;
    }
    if (kind == "class") {
      if (c.at("status") != "member") return true;  // rejections carry no membership claim
      if (c.contains("recipe") && !recipe_realizes(g, recipe_from_json(c.at("recipe")))) return false;
      std::string tag = c.at("tag");
      if (tag == "cycle") return is_2connected(g) && g.edge_count() == g.vertex_count();
      if (tag == "outerplanar") return is_outerplanar(g);
      if (c.contains("cycle") && tag.rfind("P", 0) != 0 && tag.rfind("O_", 0) != 0 &&
          !is_cycle(g, path_from_json(c.at("cycle"))))
        return false;
      return true;
    }
    return false;
  } catch (const std::exception&) {
    return false;
  }
}

/// Report envelope shared by every subcommand.
inline json report(const std::string& command, json config, json result, json certificates) {
  return {{"schema", kSchema},
          {"tool", "theta-lab"},
          {"version", kVersion},
          {"command", command},
          {"config", std::move(config)},
          {"result", std::move(result)},
          {"certificates", std::move(certificates)}};
}

}  // namespace thetalab

#endif
