// compaut: command-line front end.
//
// Exit codes: 0 success, 1 domain error, 2 input error, 3 oracle bound refusal.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "compaut/compaut.hpp"

namespace fs = std::filesystem;
using namespace compaut;

namespace {

struct Config {
  std::string format = "text";
  int oracle_bound = 10;
  std::uint64_t seed = 1;
  bool verify = false;

  OracleLimits limits() const {
    OracleLimits l;
    l.max_vertices = oracle_bound;
    l.max_edges = std::max(20, 2 * oracle_bound);
    return l;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Graph load(const std::string& path) { return parse_graph(read_file(path)); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string arcs_text(const Orientation& o) {
  std::string s;
  for (auto [u, v] : o.arcs()) s += (s.empty() ? "" : " ") + std::to_string(u) + ">" + std::to_string(v);
  return s;
}

std::string chain_text(const Chain& c) {
  std::string s;
  for (int v : c) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (cfg.format == a) return;
  throw InputError("format '" + cfg.format + "' is not available for this command");
}

void cmd_decompose(const Config& cfg, const std::string& path) {
  require_format(cfg, {"text", "json", "dot"});
  const ModularTree t = build_modular_tree(load(path));
  if (cfg.format == "json") return emit(to_json(t));
  if (cfg.format == "dot") {
    std::cout << to_dot(t);
    return;
  }
  for (int id = 0; id < static_cast<int>(t.nodes().size()); ++id) {
    const TreeNode& node = t.node(id);
    std::cout << "node " << id << " " << to_string(node.kind) << " members:";
    for (int v : node.members) std::cout << " " << v;
    if (node.parent >= 0) std::cout << " parent: " << node.parent;
    std::cout << "\n";
  }
  for (auto [m, mp] : t.tree_edges()) std::cout << "tree edge " << m << " -> " << mp << "\n";
}

int cmd_aut(const Config& cfg, const std::string& path) {
  require_format(cfg, {"text", "json"});
  const Graph g = load(path);
  const OracleLimits limits = cfg.limits();
  const AutTreeResult r = aut_tree(build_modular_tree(g), limits);
  std::optional<bool> verified;
  if (cfg.verify) {
    const PermutationGroup oracle = brute_force_aut(g, limits);
    verified = r.group.materialize(limits.max_elements).elements() == oracle.elements();
  }
  if (cfg.format == "json") {
    Json gens = Json::array();
    for (const auto& p : r.group.generators()) gens.push_back(to_json(p));
    Json assembly = Json::array();
    for (const auto& a : r.assembly) assembly.push_back({{"node", a.node}, {"rule", to_string(a.rule)}});
    Json j{{"expr", r.expr.to_string()},
           {"expr_tree", to_json(r.expr)},
           {"order", r.order.str()},
           {"generators", gens},
           {"assembly", assembly}};
    if (verified) j["verified"] = *verified;
    emit(j);
  } else {
    std::cout << r.expr.to_string() << "\norder " << r.order.str() << "\n";
    if (verified) std::cout << "verified " << (*verified ? "yes" : "NO") << "\n";
  }
  if (verified && !*verified) {
    std::cerr << "error: assembled group differs from the brute-force automorphism group\n";
    return 1;
  }
  return 0;
}

void cmd_orientations(const Config& cfg, const std::string& path, bool list, std::size_t max_list) {
  require_format(cfg, {"text", "json"});
  const Graph g = load(path);
  TreeOrientations to(build_modular_tree(g), cfg.limits());
  const BigInt count = to.count();
  if (!list) {
    if (cfg.format == "json") emit(Json{{"count", count.str()}});
    else std::cout << count.str() << "\n";
    return;
  }
  if (count > max_list)
    throw OracleBoundError("listed orientations", static_cast<long long>(max_list),
                           count > 1'000'000'000'000LL ? -1 : count.convert_to<long long>());
  auto stream = to.stream();
  if (cfg.format == "json") {
    Json all = Json::array();
    while (auto o = stream.next()) all.push_back(to_json(*o));
    emit(Json{{"count", count.str()}, {"orientations", all}});
  } else {
    while (auto o = stream.next()) std::cout << arcs_text(*o) << "\n";
  }
}

int cmd_perm(const Config& cfg, const std::string& path) {
  require_format(cfg, {"text", "json", "svg"});
  const Graph g = load(path);
  const OracleLimits limits = cfg.limits();
  const bool yes = is_permutation_graph(g, limits);
  std::optional<LinearOrderPair> rep;
  std::optional<PrimeSymmetryClass> cls;
  if (yes) {
    OrientationPair p{all_transitive_orientations(g, 1'000'000, limits).front(),
                      all_transitive_orientations(complement(g), 1'000'000, limits).front()};
    rep = build_representation(g, p);
    if (is_prime(g)) cls = prime_symmetry_class(g, limits);
  }
  if (cfg.format == "svg") {
    if (!yes) throw DomainError("not a permutation graph");
    std::cout << to_svg(*rep);
    return 0;
  }
  if (cfg.format == "json") {
    Json j{{"permutation_graph", yes}, {"prime", is_prime(g)}};
    if (rep) j["representation"] = to_json(*rep);
    if (cls) j["symmetry_class"] = to_json(*cls);
    emit(j);
  } else {
    std::cout << "permutation graph: " << (yes ? "yes" : "no") << "\n";
    if (rep) std::cout << "L1: " << chain_text(rep->l1) << "\nL2: " << chain_text(rep->l2) << "\n";
    if (cls) std::cout << "symmetry class: " << to_string(cls->subgroup) << "\n";
  }
  return 0;
}

int cmd_dim4(const Config& cfg, const std::string& path) {
  require_format(cfg, {"text", "json", "dot"});
  const Graph x = load(path);
  const GadgetGraph cx = construct_cx(x);
  if (cfg.format == "dot") {
    std::cout << to_dot(cx);
    return 0;
  }
  std::optional<ChainSet> chains;
  std::optional<ChainReport> report;
  if (is_bipartite(x)) {
    chains = four_chains(cx);
    report = verify_chain_intersection(*chains, cx);
  }
  if (cfg.format == "json") {
    Json j{{"gadget", to_json(cx)}, {"bipartite", chains.has_value()}};
    if (chains) {
      j["chains"] = chains->chains;
      j["verification"] = to_json(*report);
    }
    emit(j);
  } else {
    std::cout << to_edge_list(cx.graph);
    if (chains) {
      for (const auto& c : chains->chains) std::cout << chain_text(c) << "\n";
      std::cout << "verification " << (report->ok ? "PASS" : "FAIL") << "\n";
    } else {
      std::cout << "chains: source graph is not bipartite\n";
    }
  }
  return report && !report->ok ? 1 : 0;
}

void cmd_reduce(const Config& cfg, const std::string& a, const std::string& b, const std::string& out_dir) {
  require_format(cfg, {"text", "json"});
  const Graph x1 = load(a), x2 = load(b);
  const Reduction red = gi_reduction(x1, x2);
  fs::create_directories(out_dir);
  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream out(fs::path(out_dir) / name);
    if (!out) throw InputError("cannot write " + (fs::path(out_dir) / name).string());
    out << body;
  };
  write("first.txt", to_edge_list(red.first.graph));
  write("second.txt", to_edge_list(red.second.graph));
  Json manifest{{"first", "first.txt"},
                {"second", "second.txt"},
                {"first_vertices", red.first.graph.order()},
                {"second_vertices", red.second.graph.order()}};
  const OracleLimits limits = cfg.limits();
  if (std::max(x1.order(), x2.order()) <= limits.max_vertices)
    manifest["iso"] = brute_force_iso(x1, x2, limits).has_value();
  else
    manifest["iso"] = nullptr;
  write("manifest.json", manifest.dump(2) + "\n");
  if (cfg.format == "json") emit(manifest);
  else std::cout << "iso " << (manifest["iso"].is_null() ? "unknown" : manifest["iso"].dump()) << "\n";
}

void cmd_generate(const Config& cfg, int n, double p) {
  if (n < 0) throw InputError("n must be non-negative");
  if (p < 0 || p > 1) throw InputError("p must lie in [0, 1]");
  std::mt19937_64 rng(cfg.seed);
  const Graph g = random_graph(n, p, rng);
  if (cfg.format == "json") emit(to_json(g));
  else if (cfg.format == "dot") std::cout << to_dot(g);
  else std::cout << to_edge_list(g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular trees, automorphism groups, orientations and dimension gadgets"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "text, json, dot or svg (command dependent)")
      ->check(CLI::IsMember({"text", "json", "dot", "svg"}));
  app.add_option("--oracle-bound", cfg.oracle_bound, "largest vertex count for brute-force oracles")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized commands");
  app.add_flag("--verify", cfg.verify, "cross-check results against brute-force oracles");

  std::string path, path2, out_dir = ".";
  bool count = false, list = false;
  std::size_t max_list = 10000;
  int gen_n = 6;
  double gen_p = 0.5;

  auto* decompose = app.add_subcommand("decompose", "modular tree");
  decompose->add_option("graph", path)->required();
  auto* aut = app.add_subcommand("aut", "automorphism group");
  aut->add_option("graph", path)->required();
  auto* orient = app.add_subcommand("orientations", "transitive orientations");
  orient->add_option("graph", path)->required();
  auto* count_flag = orient->add_flag("--count", count, "print the number of orientations");
  orient->add_flag("--list", list, "print every orientation")->excludes(count_flag);
  orient->add_option("--max", max_list, "refuse to list more than this many");
  auto* perm = app.add_subcommand("perm", "permutation graph recognition and representation");
  perm->add_option("graph", path)->required();
  auto* dim4 = app.add_subcommand("dim4", "C_X gadget and its four chains");
  dim4->add_option("graph", path)->required();
  auto* reduce = app.add_subcommand("reduce", "isomorphism reduction pair");
  reduce->add_option("first", path)->required();
  reduce->add_option("second", path2)->required();
  reduce->add_option("--out", out_dir, "directory for first.txt, second.txt, manifest.json");
  auto* generate = app.add_subcommand("generate", "random G(n, p) graph");
  generate->add_option("--n", gen_n);
  generate->add_option("--p", gen_p);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*decompose) cmd_decompose(cfg, path);
    else if (*aut) return cmd_aut(cfg, path);
    else if (*orient) cmd_orientations(cfg, path, list, max_list);
    else if (*perm) return cmd_perm(cfg, path);
    else if (*dim4) return cmd_dim4(cfg, path);
    else if (*reduce) cmd_reduce(cfg, path, path2, out_dir);
    else if (*generate) cmd_generate(cfg, gen_n, gen_p);
  } catch (const OracleBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
