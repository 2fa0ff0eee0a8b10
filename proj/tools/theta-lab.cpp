// theta-lab: command-line front end. Reports are JSON on stdout (or --report FILE).
// Exit codes: 0 success, 1 violation, 2 unknown / budget exhausted, 3 input error.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "suite.hpp"
#include "thetalab/heavy_cpath.hpp"

using namespace thetalab;
using json = nlohmann::json;

namespace {

enum Exit { ok = 0, violation = 1, unknown = 2, input_error = 3 };

struct Out {
  json report;
  int code = ok;
};

Graph load(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  return read_graph_file(path);
}

EdgeId edge_by_ends(const Graph& g, Vertex u, Vertex v) {
  require(u >= 0 && v >= 0 && u < g.vertex_count() && v < g.vertex_count(), "edge end out of range");
  auto es = g.edges_between(u, v);
  require(!es.empty(), "no edge between " + std::to_string(u) + " and " + std::to_string(v));
  return *std::min_element(es.begin(), es.end());
}

int search_code(Status s) { return s == Status::unknown ? unknown : ok; }

Circlet parse_circlet(const std::string& spec) {
  Circlet om;
  auto semi = spec.find(';');
  auto ints = [](const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) {
        size_t used = 0;
        int x = 0;
        try {
          x = std::stoi(tok, &used);
        } catch (const std::exception&) {
          throw Error("bad circlet entry '" + tok + "'");
        }
        require(used == tok.size(), "bad circlet entry '" + tok + "'");
        out.push_back(x);
      }
    return out;
  };
  om.vertices = ints(spec.substr(0, semi));
  if (semi != std::string::npos) om.edges = ints(spec.substr(semi + 1));
  return om;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"theta-lab: theta-graph detection, decompositions and certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string report_path;
  long long budget = 0;
  app.add_option("--report", report_path, "write the JSON report to FILE instead of stdout");
  app.add_option("--budget", budget, "search node budget (overrides THETALAB_BUDGET)");

  // check-theta
  auto* ct = app.add_subcommand("check-theta", "find a theta_{a,b,c} subgraph");
  std::string graph_path;
  Weight a = 1, b = 1, c = 1;
  std::vector<Vertex> at;
  ct->add_option("graph", graph_path)->required();
  ct->add_option("--a", a)->required();
  ct->add_option("--b", b)->required();
  ct->add_option("--c", c)->required();
  ct->add_option("--at", at, "branch vertices u v")->expected(2);

  // find-pattern
  auto* fp = app.add_subcommand("find-pattern", "find a subdivision of a named pattern");
  std::string pattern;
  int pt = 0;
  fp->add_option("graph", graph_path)->required();
  fp->add_option("--pattern", pattern)->required()->check(CLI::IsMember({"comb", "L", "L+", "W", "W+", "W'"}));
  fp->add_option("--t", pt)->required();

  // decompose
  auto* dc = app.add_subcommand("decompose", "2-sum, 3-sum, chain or S-tree decomposition");
  std::string mode;
  std::vector<Vertex> edge_ends, z;
  dc->add_option("graph", graph_path)->required();
  dc->add_option("--mode", mode)->required()->check(CLI::IsMember({"s2", "s3", "chain", "s-tree"}));
  dc->add_option("--edge", edge_ends, "edge by its ends u v")->expected(2);
  dc->add_option("--z", z, "root triangle a b c")->expected(3);

  // omega
  auto* om_cmd = app.add_subcommand("omega", "facial Omega-cycle or cross");
  std::string circlet;
  bool edges_form = false;
  om_cmd->add_option("graph", graph_path)->required();
  om_cmd->add_option("--circlet", circlet, "\"v1,v2,...;e1,e2,...\"")->required();
  om_cmd->add_flag("--edges-form", edges_form, "every segment must contain an Omega edge");

  // classify
  auto* cl = app.add_subcommand("classify", "small-theta characterization");
  std::string variant;
  Weight ct_t = 0;
  int n_bound = 0;
  cl->add_option("graph", graph_path)->required();
  cl->add_option("--variant", variant)->required()->check(CLI::IsMember({"12t", "22t", "1tt", "2tt"}));
  cl->add_option("--t", ct_t)->required();
  cl->add_option("--n", n_bound, "summand bound for O_n (default |V|)");

  // gen-phi
  auto* gp = app.add_subcommand("gen-phi", "random members of Phi_{r,s}");
  Weight r = 2;
  int s = 3, size = 8, count = 1;
  std::uint64_t seed = 0;
  std::string out_dir;
  gp->add_option("--r", r)->required();
  gp->add_option("--s", s)->required();
  gp->add_option("--size", size);
  gp->add_option("--seed", seed);
  gp->add_option("--count", count);
  gp->add_option("--out", out_dir, "directory for graph files");

  // bond3
  auto* bd = app.add_subcommand("bond3", "bond containing three given edges");
  std::vector<EdgeId> triple;
  Weight bt = 0;
  bd->add_option("graph", graph_path)->required();
  bd->add_option("--edges", triple)->required()->expected(3);
  bd->add_option("--t", bt, "reduction parameter (default |E|+1)");

  // verify
  auto* vf = app.add_subcommand("verify", "re-check every certificate of a report");
  std::vector<std::string> vf_files;
  vf->add_option("files", vf_files, "[graph] report; the graph may be omitted when certificates embed one")
      ->required()
      ->expected(1, 2);

  // suite
  auto* st = app.add_subcommand("suite", "run the acceptance criteria");
  std::vector<int> only;
  st->add_option("--only", only, "criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input_error;
  }

  Out out;
  json config;
  try {
    if (const char* env = std::getenv("THETALAB_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      require(end && *end == '\0' && v > 0, "THETALAB_BUDGET must be a positive integer");
      set_default_budget(v);
    }
    if (budget != 0) {
      require(budget > 0, "--budget must be positive");
      set_default_budget(static_cast<std::uint64_t>(budget));
    }
    config["budget"] = default_budget();

    if (ct->parsed()) {
      Graph g = load(graph_path);
      config.update({{"graph", graph_path}, {"a", a}, {"b", b}, {"c", c}});
      Search<ThetaCertificate> res;
      if (!at.empty()) {
        config["at"] = at;
        res = theta_at(g, at[0], at[1], a, b, c);
      } else {
        res = contains_theta(g, a, b, c);
      }
      json certs = json::array();
      if (res.found()) certs.push_back(to_json(*res.value));
      out.report = report("check-theta", config, {{"found", res.found()}, {"status", status_name(res.status)}}, certs);
      out.code = search_code(res.status);
    } else if (fp->parsed()) {
      Graph g = load(graph_path);
      config.update({{"graph", graph_path}, {"pattern", pattern}, {"t", pt}});
      Budget bud;
      auto res = topological_minor(g, pattern::by_name(pattern, pt), bud, pattern, pt);
      json certs = json::array();
      if (res.found()) certs.push_back(to_json(*res.value));
      out.report = report("find-pattern", config, {{"found", res.found()}, {"status", status_name(res.status)}}, certs);
      out.code = search_code(res.status);
    } else if (dc->parsed()) {
      Graph g = load(graph_path);
      config.update({{"graph", graph_path}, {"mode", mode}});
      json result, certs = json::array();
      if (mode == "s3") {
        require(z.size() == 3, "decompose --mode s3 needs --z a b c");
        config["z"] = z;
        auto res = s3_decompose(g, z);
        result = {{"summands", res.recipe.links.size()}, {"summands_are_minors", res.summands_are_minors}};
        certs.push_back(to_json(res.recipe));
      } else {
        require(edge_ends.size() == 2, "decompose --mode " + mode + " needs --edge u v");
        EdgeId e = edge_by_ends(g, edge_ends[0], edge_ends[1]);
        config["edge"] = edge_ends;
        result["edge_id"] = e;
        if (mode == "s2") {
          auto rec = s2_decompose(g, e);
          result["summands"] = rec.links.size();
          certs.push_back(to_json(rec));
        } else if (mode == "chain") {
          auto res = chain_decompose(g, e);
          result["a"] = res.a;
          result["exact"] = res.exact;
          certs.push_back(to_json(res.chain, e));
          if (!res.exact) out.code = unknown;
        } else {
          auto rec = operation_S_tree(g, e);
          result["depth"] = recipe_depth(rec);
          certs.push_back(to_json(rec));
        }
      }
      out.report = report("decompose", config, result, certs);
    } else if (om_cmd->parsed()) {
      Graph g = load(graph_path);
      Circlet o = parse_circlet(circlet);
      config.update({{"graph", graph_path}, {"circlet", {{"vertices", o.vertices}, {"edges", o.edges}}},
                     {"edges_form", edges_form}});
      auto res = edges_form ? omega_facial_or_cross_edges(g, o) : omega_facial_or_cross(g, o);
      json result = {{"outcome", res.kind}}, certs = json::array();
      if (!res.report.empty()) result["report"] = res.report;
      if (res.violation) result["violation"] = to_json(*res.violation);
      if (res.kind == "facial") {
        result["cycle"] = to_json(res.cycle);
        certs.push_back(to_json(*res.drawing));
      } else if (res.kind == "cross") {
        certs.push_back(to_json(*res.cross));
      }
      out.report = report("omega", config, result, certs);
      out.code = res.kind == "unknown" ? unknown : res.kind == "hypothesis" ? violation : ok;
    } else if (cl->parsed()) {
      Graph g = load(graph_path);
      auto v = parse_variant(variant);
      require(ct_t >= 1, "--t must be positive");
      int nb = n_bound > 0 ? n_bound : g.vertex_count();
      config.update({{"graph", graph_path}, {"variant", variant}, {"t", ct_t}, {"n", nb}});
      auto res = classify_small_theta(g, *v, ct_t, nb);
      json result = {{"outcome", kind_name(res.kind)}}, certs = json::array();
      if (res.ell >= 0) result["ell"] = res.ell;
      if (res.threshold >= 0) result["ell_threshold"] = res.threshold;
      if (res.certificate) certs.push_back(to_json(*res.certificate));
      if (res.kind != SmallClassification::theta && !res.cls.tag.empty()) certs.push_back(to_json(res.cls));
      out.report = report("classify", config, result, certs);
      out.code = res.kind == SmallClassification::unknown ? unknown : ok;
    } else if (gp->parsed()) {
      require(r >= 2 && s >= 3, "gen-phi needs r >= 2 and s >= 3");
      require(size >= 3 && count >= 1, "gen-phi needs size >= 3 and count >= 1");
      config.update({{"r", r}, {"s", s}, {"size", size}, {"seed", seed}, {"count", count}, {"out", out_dir}});
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      json items = json::array(), certs = json::array();
      for (int i = 0; i < count; ++i) {
        auto [g, pr] = gen::random_phi(r, s, size, seed + i);
        json item = {{"instance", i},
                     {"seed", seed + i},
                     {"n", g.vertex_count()},
                     {"m", g.edge_count()},
                     {"total_weight", g.total_weight()},
                     {"theta_free_t", bounds::phi_theta_t(r, s)}};
        if (!out_dir.empty()) {
          auto file = (std::filesystem::path(out_dir) / ("phi_" + std::to_string(seed + i) + ".txt")).string();
          std::ofstream f(file);
          require(bool(f), "cannot write " + file);
          f << write_graph(g);
          item["file"] = file;
        }
        items.push_back(item);
        json cert = to_json(pr.recipe);
        cert["instance"] = i;
        cert["host"] = to_json(g);
        certs.push_back(cert);
      }
      out.report = report("gen-phi", config, {{"instances", items}}, certs);
    } else if (bd->parsed()) {
      Graph g = load(graph_path);
      config.update({{"graph", graph_path}, {"edges", triple}, {"t", bt}});
      auto res = bond_theta_equivalence(g, triple[0], triple[1], triple[2], bt);
      json result = {{"bond", res.bond.found()},
                     {"status", status_name(res.bond.status)},
                     {"t", res.t},
                     {"theta_subdivided", status_name(res.theta_subdivided.status)},
                     {"theta_weighted", status_name(res.theta_weighted.status)},
                     {"reduction_agrees", res.agrees()}};
      json certs = json::array();
      if (res.bond.found()) certs.push_back(to_json(*res.bond.value, triple));
      out.report = report("bond3", config, result, certs);
      out.code = res.unknown() ? unknown : res.agrees() ? ok : violation;
    } else if (vf->parsed()) {
      std::string report_in = vf_files.back();
      if (vf_files.size() == 2) graph_path = vf_files[0];
      config.update({{"graph", graph_path}, {"report", report_in}});
      std::ifstream f(report_in);
      require(bool(f), "cannot open " + report_in);
      json rep;
      try {
        rep = json::parse(f);
      } catch (const json::exception& e) {
        throw Error(std::string("report is not JSON: ") + e.what());
      }
      require(rep.value("schema", "") == kSchema, "report schema is not " + std::string(kSchema));
      std::optional<Graph> host;
      if (!graph_path.empty()) host = load(graph_path);
      json failed = json::array();
      int checked = 0;
      for (size_t i = 0; i < rep.at("certificates").size(); ++i) {
        const json& cj = rep["certificates"][i];
        ++checked;
        bool good = false;
        if (cj.contains("host")) good = verify_certificate(graph_from_json(cj["host"]), cj);
        else if (host) good = verify_certificate(*host, cj);
        else throw Error("certificate " + std::to_string(i) + " needs a host graph argument");
        if (!good) failed.push_back(i);
      }
      out.report = report("verify", config, {{"checked", checked}, {"failed", failed}, {"valid", failed.empty()}},
                          json::array());
      out.code = failed.empty() ? ok : violation;
    } else if (st->parsed()) {
      config["only"] = only;
      json rows = json::array();
      bool all = true;
      for (auto& row : suite::run(std::set<int>(only.begin(), only.end()))) {
        std::cerr << (row.pass ? "PASS " : "FAIL ") << row.id << " " << row.name << ": " << row.detail << "\n";
        rows.push_back({{"id", row.id}, {"name", row.name}, {"pass", row.pass}, {"detail", row.detail}});
        all = all && row.pass;
      }
      out.report = report("suite", config, {{"criteria", rows}, {"all_pass", all}}, json::array());
      out.code = all ? ok : violation;
    }
  } catch (const Error& e) {
    std::cerr << "theta-lab: " << e.what() << "\n";
    return input_error;
  } catch (const json::exception& e) {
    std::cerr << "theta-lab: " << e.what() << "\n";
    return input_error;
  }

  std::string text = out.report.dump(2) + "\n";
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(report_path);
    if (!f) {
      std::cerr << "theta-lab: cannot write " << report_path << "\n";
      return input_error;
    }
    f << text;
  }
  return out.code;
}
