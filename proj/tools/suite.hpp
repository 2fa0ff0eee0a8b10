// Acceptance criteria, shared by the acceptance binary and `theta-lab suite`.
#ifndef THETALAB_SUITE_HPP
#define THETALAB_SUITE_HPP

#include <chrono>
#include <sstream>

#include "support/oracles.hpp"
#include "thetalab/io.hpp"
#include "thetalab/unavoidable.hpp"
#include "thetalab/ef_theta.hpp"

namespace thetalab::suite {

struct Criterion {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline std::vector<Graph> graphs_where(int lo, int hi, const std::function<bool(const Graph&)>& keep) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n)
    for (auto& s : all_graphs(n)) {
      Graph g = s.to_graph();
      if (keep(g)) out.push_back(g);
    }
  return out;
}

// 1
inline std::string oracle_equivalence(bool& ok) {
  auto gs = graphs_where(3, 7, [](const Graph& g) { return is_2connected(g); });
  long checks = 0, mism = 0;
  for (auto& g : gs)
    for (Weight a = 1; a <= 3; ++a)
      for (Weight b = a; b <= 3; ++b)
        for (Weight c = b; c <= 3; ++c) {
          auto r = contains_theta(g, a, b, c);
          bool naive = oracle::has_theta(g, a, b, c);
          ++checks;
          if (r.unknown() || r.found() != naive || (r.found() && !verify_theta(g, *r.value, a, b, c))) ++mism;
        }
  ok = mism == 0;
  std::ostringstream s;
  s << gs.size() << " graphs, " << checks << " threshold triples, " << mism << " mismatches";
  return s.str();
}

// 2
inline std::string phi_forward(bool& ok) {
  ok = true;
  std::ostringstream s;
  for (auto [r, sv] : std::vector<std::pair<Weight, int>>{{2, 3}, {3, 3}, {3, 4}}) {
    Weight t = bounds::phi_theta_t(r, sv);
    int bad = 0, nontrivial = 0;
    for (int seed = 0; seed < 200; ++seed) {
      auto [g, pr] = gen::random_phi(r, sv, 6 + seed % 10, static_cast<std::uint64_t>(seed));
      if (!build_phi(pr, r, sv).member()) ++bad;
      if (g.total_weight() >= 3 * t) ++nontrivial;
      auto x = contains_theta(g, t, t, t);
      if (!x.none()) ++bad;
    }
    ok = ok && bad == 0;
    s << "(r,s)=(" << r << "," << sv << ") t=" << t << ": " << bad << " violations, " << nontrivial
      << "/200 with weight >= 3t; ";
  }
  return s.str();
}

// 3
inline std::string small_theta_forward(bool& ok) {
  ok = true;
  std::ostringstream s;
  long outer = 0, bad = 0;
  for (int n = 3; n <= 9; ++n)
    for (auto& g : oracle::polygon_dissections(n)) {
      ++outer;
      if (!contains_theta(g, 2, 2, 2).none() || !outerplanar_certificate(g).member()) ++bad;
    }
  s << outer << " outerplanar graphs, " << bad << " bad; ";
  ok = bad == 0;
  gen::Rng rng(7);
  for (int t : {3, 4}) {
    int bc = 0, bo = 0;
    for (int i = 0; i < 100; ++i) {
      auto c = gen::random_C_of_L(t, rng);
      if (!contains_theta(c.graph, 1, t, t).none() || !recipe_realizes(c.graph, c.recipe)) ++bc;
      auto o = gen::random_O(t, rng);
      if (!contains_theta(o.graph, 2, t, t).none() || !recipe_realizes(o.graph, o.recipe)) ++bo;
    }
    ok = ok && bc == 0 && bo == 0;
    s << "t=" << t << ": C(L_t) " << bc << " bad, O_t " << bo << " bad; ";
  }
  return s.str();
}

// 4
inline std::string ef_theta_exhaustive(bool& ok) {
  auto gs = graphs_where(3, 7, [](const Graph& g) { return is_2connected(g); });
  long pairs = 0, thetas = 0, exc = 0, bad = 0;
  for (auto& g : gs) {
    int m = g.edge_count(), n = g.vertex_count();
    for (EdgeId e = 0; e < m; ++e)
      for (EdgeId f = e + 1; f < m; ++f) {
        bool sep = false;
        for (Vertex x = 0; x < n && !sep; ++x)
          for (Vertex y = x + 1; y < n && !sep; ++y) sep = separates(g, {x, y}, e, f);
        if (sep) continue;
        ++pairs;
        try {
          auto r = find_ef_theta(g, e, f);
          const Edge &a = g.edge(e), &b = g.edge(f);
          Vertex common = (a.u == b.u || a.u == b.v) ? a.u : (a.v == b.u || a.v == b.v) ? a.v : -1;
          switch (r.kind) {
            case EfThetaOutcome::Kind::theta:
              ++thetas;
              if (!r.theta || !verify_ef_theta(g, *r.theta, e, f)) ++bad;
              break;
            case EfThetaOutcome::Kind::exception_common_end:
              ++exc;
              if (common < 0 || r.common_end != common || g.neighbors(common).size() != 2 ||
                  oracle::has_ef_theta(g, e, f))
                ++bad;
              break;
            case EfThetaOutcome::Kind::exception_k4:
              ++exc;
              if (common >= 0 || simplify(g).edge_count() != 6 || n != 4 || oracle::has_ef_theta(g, e, f)) ++bad;
              break;
            default: ++bad;
          }
        } catch (const Error&) {
          ++bad;
        }
      }
  }
  ok = bad == 0;
  std::ostringstream s;
  s << pairs << " separator-free pairs: " << thetas << " thetas, " << exc << " exceptions, " << bad << " bad";
  return s.str();
}

// 5
inline std::string ladder_constructive(bool& ok) {
  gen::Rng rng(11);
  int bad = 0, runs = 0;
  for (int n = 2; n <= 4; ++n) {
    int m = n * n + 1;
    for (int i = 0; i < 1000; ++i) {
      std::vector<int> pi(m);
      std::iota(pi.begin(), pi.end(), 0);
      std::shuffle(pi.begin(), pi.end(), rng);
      ++runs;
      try {
        auto w = ladder_from_matching(m, pi, n);
        if (w.parameter != n + 1 || !verify_subdivision(matching_graph(pi), w)) ++bad;
      } catch (const Error&) {
        ++bad;
      }
    }
  }
  ok = bad == 0;
  return std::to_string(runs) + " permutations, " + std::to_string(bad) + " bad";
}

// 6
inline std::string heavy_path_constructive(bool& ok) {
  gen::Rng rng(13);
  int bad = 0, runs = 0;
  for (Weight t : {4, 5, 6}) {
    for (int i = 0; i < 200; ++i) {
      int n = std::uniform_int_distribution<int>(5, 12)(rng);
      Graph g = gen::random_2connected(n, n / 2, rng);
      gen::random_weights(g, 1, 2, rng);
      // random self-avoiding walk as the planted path
      PathWitness p;
      Vertex x = std::uniform_int_distribution<int>(0, n - 1)(rng);
      std::vector<char> on(n, 0);
      p.vertices.push_back(x);
      on[x] = 1;
      while (true) {
        std::vector<int> opts;
        for (int k : g.incident(x))
          if (!on[g.edge_at(k).other(x)]) opts.push_back(k);
        if (opts.empty() || (p.length() >= 2 && std::bernoulli_distribution(0.2)(rng))) break;
        auto& e = g.edge_at(opts[std::uniform_int_distribution<size_t>(0, opts.size() - 1)(rng)]);
        x = e.other(x);
        on[x] = 1;
        p.vertices.push_back(x);
        p.edges.push_back(e.id);
      }
      Weight need = bounds::heavy_path_weight(t) + 1;
      Weight per = (need + p.length() - 1) / p.length();
      for (EdgeId id : p.edges) g.set_weight(id, std::max<Weight>(per, g.edge(id).w));
      p.weight = weight_of(g, p.edges);
      ++runs;
      try {
        auto c = cycle_from_heavy_path(g, p, t);
        if (!is_cycle(g, c) || weight_of(g, c.edges) < t) {
          ++bad;
          continue;
        }
        for (int j = 0; j < 10; ++j) {
          Vertex u = std::uniform_int_distribution<int>(0, n - 1)(rng), v = u;
          while (v == u) v = std::uniform_int_distribution<int>(0, n - 1)(rng);
          auto q = pair_path_through_cycle(g, c, u, v);
          bool ends = (q.vertices.front() == u && q.vertices.back() == v) ||
                      (q.vertices.front() == v && q.vertices.back() == u);
          if (!is_path(g, q) || !ends || 2 * weight_of(g, q.edges) < t) ++bad;
        }
      } catch (const Error&) {
        ++bad;
      }
    }
  }
  ok = bad == 0;
  return std::to_string(runs) + " planted paths, " + std::to_string(bad) + " bad";
}

// 7
inline std::string s2_ell_bound(bool& ok) {
  gen::Rng rng(17);
  int bad = 0;
  for (int i = 0; i < 500; ++i) {
    int base_n = std::uniform_int_distribution<int>(3, 6)(rng);
    int k = std::uniform_int_distribution<int>(1, 4)(rng);
    int sn = std::uniform_int_distribution<int>(3, 5)(rng);
    auto r = random_s2_recipe(rng, base_n, k, sn);
    auto b = ell_bound_check(r);
    int naive = oracle::longest_path_edges(evaluate(r).graph);
    if (!b.exact || !b.holds || b.ell_total != naive ||
        b.ell_total > (b.ell_base + 2) * b.ell_max_summand)
      ++bad;
  }
  ok = bad == 0;
  return "500 recipes, " + std::to_string(bad) + " bad";
}

// 8
inline std::string chain_exhaustive(bool& ok) {
  auto gs = graphs_where(3, 6, [](const Graph& g) { return is_2connected(g); });
  long runs = 0, bad = 0, max_a = 0;
  for (auto& g : gs)
    for (auto& e : g.edges()) {
      ++runs;
      try {
        auto c = chain_decompose(g, e.id);
        int naive = oracle::chain_length(g, e.id);
        max_a = std::max<long>(max_a, c.a);
        if (!c.exact || c.a != naive || !verify_chain(g, e.id, c.chain) || c.chain.length() != c.a) {
          ++bad;
          continue;
        }
        auto s = operation_S_tree(g, e.id);
        if (recipe_depth(s) > c.a + 1 || !isomorphic(evaluate(s).graph, g)) ++bad;
      } catch (const Error&) {
        ++bad;
      }
    }
  ok = bad == 0;
  std::ostringstream s;
  s << gs.size() << " graphs, " << runs << " (G,e) pairs, max a = " << max_a << ", " << bad << " bad";
  return s.str();
}

// 9
inline std::string omega_dichotomy_sampled(bool& ok) {
  gen::Rng rng(19);
  auto gs = graphs_where(4, 8, [](const Graph& g) { return is_3connected(g); });
  long pairs = 0, facial = 0, cross = 0, bad = 0;
  for (auto& g : gs) {
    int n = g.vertex_count();
    // faces of length >= 4 seed circlets that can come out facial
    std::vector<std::vector<Vertex>> big_faces;
    auto pe = planar_embed(g);
    if (pe.planar)
      for (int f = 0; f < pe.embedding->face_count(); ++f)
        if (pe.embedding->faces[f].size() >= 4) big_faces.push_back(pe.embedding->face_vertices(f));
    int got = 0;
    for (int attempt = 0; attempt < 12 && got < 3; ++attempt) {
      Circlet om;
      if (attempt % 2 == 0 && !big_faces.empty()) {
        auto fv = big_faces[std::uniform_int_distribution<size_t>(0, big_faces.size() - 1)(rng)];
        std::rotate(fv.begin(), fv.begin() + std::uniform_int_distribution<size_t>(0, fv.size() - 1)(rng), fv.end());
        for (Vertex v : fv)
          if (std::bernoulli_distribution(0.75)(rng)) om.vertices.push_back(v);
        if (om.size() < 4) om.vertices = fv;
        if (std::bernoulli_distribution(0.5)(rng)) std::reverse(om.vertices.begin(), om.vertices.end());
      } else {
        std::vector<Vertex> vs(n);
        std::iota(vs.begin(), vs.end(), 0);
        std::shuffle(vs.begin(), vs.end(), rng);
        int k = std::uniform_int_distribution<int>(4, n)(rng);
        om.vertices.assign(vs.begin(), vs.begin() + k);
      }
      int k = om.size();
      bool edge_form = std::bernoulli_distribution(0.3)(rng);
      for (int i = 0; i < k; ++i) {
        auto es = g.edges_between(om.vertices[i], om.vertices[(i + 1) % k]);
        if (!es.empty() && std::bernoulli_distribution(edge_form ? 0.9 : 0.3)(rng)) om.edges.push_back(es[0]);
      }
      try {
        auto out = edge_form ? omega_facial_or_cross_edges(g, om) : omega_facial_or_cross(g, om);
        if (out.kind == "hypothesis") continue;
        ++got;
        ++pairs;
        if (out.kind == "facial") {
          ++facial;
          if (!out.drawing || !embedding_valid(*out.drawing) || !is_omega_cycle(g, out.cycle, om) ||
              out.drawing->face_with_edges(out.cycle.edges) < 0)
            ++bad;
        } else if (out.kind == "cross") {
          ++cross;
          bool good = out.cross && is_omega_cycle(g, out.cross->cycle, om) &&
                      (edge_form ? verify_cross_omega_edges(g, *out.cross, om) : verify_cross_segments(g, *out.cross, om));
          if (!good) ++bad;
        } else {
          ++bad;
        }
      } catch (const Error&) {
        ++bad;
        ++pairs;
      }
    }
  }
  ok = bad == 0 && pairs >= 500;
  std::ostringstream s;
  s << gs.size() << " 3-connected graphs, " << pairs << " (G,Omega) pairs: " << facial << " facial, " << cross
    << " cross, " << bad << " bad";
  return s.str();
}

// 10
inline std::string bond_sweep(bool& ok) {
  long runs = 0, bad = 0, bonds = 0;
  for (int n = 2; n <= 6; ++n)
    for (auto& sg : all_graphs(n)) {
      Graph g = sg.to_graph();
      int m = g.edge_count();
      if (m < 3 || m > 10 || !is_connected(g)) continue;
      for (EdgeId a = 0; a < m; ++a)
        for (EdgeId b = a + 1; b < m; ++b)
          for (EdgeId c = b + 1; c < m; ++c) {
            bool naive = oracle::has_bond_through(g, a, b, c);
            for (Weight t : {Weight(m + 1), Weight(m + 2)}) {
              ++runs;
              auto r = bond_theta_equivalence(g, a, b, c, t);
              if (!r.agrees() || r.bond.found() != naive) ++bad;
              if (r.bond.found()) ++bonds;
            }
          }
    }
  ok = bad == 0;
  std::ostringstream s;
  s << runs << " (G,triple,t) runs, " << bonds << " with a bond, " << bad << " disagreements";
  return s.str();
}

/// Rim 0..k-1 and inner path h_1..h_p, h_j joined to a contiguous rim arc (planar, rim outer).
inline Graph fan_wheel(int k, int p, gen::Rng& rng) {
  Graph g(k + p);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  for (int j = 0; j + 1 < p; ++j) g.add_edge(k + j, k + j + 1);
  std::vector<int> cuts;
  for (int j = 1; j < p; ++j) cuts.push_back(std::uniform_int_distribution<int>(1, k - 2)(rng));
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(k - 1);
  for (int j = 0; j < p; ++j)
    for (int i = cuts[j]; i <= cuts[j + 1]; ++i) g.add_edge(k + j, i);
  return g;
}

// 11
inline std::string planted_cpath(bool& ok) {
  gen::Rng rng(23);
  int runs = 0, bad = 0, skipped = 0;
  for (Weight t : {3, 4}) {
    int done = 0;
    while (done < 100) {
      int k = static_cast<int>(3 * t) + std::uniform_int_distribution<int>(0, 4)(rng);
      int p = std::uniform_int_distribution<int>(1, 4)(rng);
      Graph g = fan_wheel(k, p, rng);
      if (!is_3connected(g)) {
        ++skipped;
        continue;
      }
      std::set<EdgeId> rim;
      for (EdgeId i = 0; i < k; ++i) rim.insert(i);
      for (auto& e : std::vector<Edge>(g.edges().begin(), g.edges().end()))
        g.set_weight(e.id, rim.count(e.id) ? std::uniform_int_distribution<Weight>(1, 2 * t)(rng)
                                           : std::uniform_int_distribution<Weight>(1, t - 1)(rng));
      bool heavy_edge = p == 1 || std::bernoulli_distribution(0.5)(rng);
      if (heavy_edge) {
        std::vector<EdgeId> inner;
        for (auto& e : g.edges())
          if (!rim.count(e.id)) inner.push_back(e.id);
        g.set_weight(inner[std::uniform_int_distribution<size_t>(0, inner.size() - 1)(rng)],
                     std::uniform_int_distribution<Weight>(t, 2 * t)(rng));
      } else {
        // inner path of light edges: rim - h_1 - ... - h_p - rim with weight >= 2t
        for (int j = 0; j + 1 < p; ++j) g.set_weight(g.edges_between(k + j, k + j + 1)[0], t - 1);
        for (EdgeId id : g.edges_between(k, 0)) g.set_weight(id, t - 1);
        for (EdgeId id : g.edges_between(k + p - 1, k - 1)) g.set_weight(id, t - 1);
      }
      std::vector<Vertex> order(k);
      std::iota(order.begin(), order.end(), 0);
      auto pg = embed_with_facial_cycle(g, cycle_from_vertices(g, order));
      if (!pg) {
        ++skipped;
        continue;
      }
      if (in_Pr(*pg, t).member()) {
        ++skipped;
        continue;
      }
      ++done;
      ++runs;
      try {
        auto r = heavy_cpath_theta(*pg, t);
        if (!r.found() || !verify_theta(g, *r.value, t, t, t)) ++bad;
      } catch (const Error&) {
        ++bad;
      }
    }
  }
  ok = bad == 0;
  return std::to_string(runs) + " planted violations, " + std::to_string(bad) + " without a verified theta";
}

inline std::vector<std::pair<std::string, std::function<std::string(bool&)>>> criteria() {
  return {{"oracle equivalence (|V| <= 7, thresholds <= 3)", oracle_equivalence},
          {"Phi members theta_{t,t,t}-free at t = 2qr", phi_forward},
          {"outerplanar / C(L_t) / O_t forward halves", small_theta_forward},
          {"ef-theta or stated exception (|V| <= 7)", ef_theta_exhaustive},
          {"L_{n+1} from n^2+1 matchings", ladder_constructive},
          {"heavy path -> heavy cycle -> heavy pair paths", heavy_path_constructive},
          {"S_2 longest-path bound", s2_ell_bound},
          {"chain decomposition vs brute force (|V| <= 6)", chain_exhaustive},
          {"facial Omega-cycle or cross (|V| <= 8)", omega_dichotomy_sampled},
          {"bond <-> theta reduction sweep", bond_sweep},
          {"planted C-path violations yield theta_{t,t,t}", planted_cpath}};
}

/// Runs the selected criteria (all when empty).
inline std::vector<Criterion> run(const std::set<int>& only = {}) {
  std::vector<Criterion> out;
  auto cs = criteria();
  for (size_t i = 0; i < cs.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Criterion c;
    c.id = id;
    c.name = cs[i].first;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.detail = cs[i].second(c.pass);
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(c);
  }
  return out;
}

}  // namespace thetalab::suite

#endif
