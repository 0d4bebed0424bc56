#include "acceptance/criteria.hpp"
#include "cutlab/accessibility.hpp"
#include "cutlab/cycle_space.hpp"
#include "cutlab/errors.hpp"
#include "cutlab/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace cutlab;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& j, const std::string& path) {
  if (path.empty() || path == "-")
    std::cout << j.dump(2) << "\n";
  else
    write_text_file(path, j.dump(2) + "\n");
}

Window load_window(const std::string& path) { return window_from_json(read_json_file(path)); }

// A peripheral file, or "recipe:<name>" for the built-in recipes.
PeripheralSystem load_system(const Window& w, const std::string& arg) {
  if (arg.rfind("recipe:", 0) == 0) return recipe_system(w, arg.substr(7));
  return system_from_json(w, read_json_file(arg));
}

std::string family_arg(const std::string& family, int rank, int degree) {
  if (family.find('(') != std::string::npos) return family;
  if (family == "free") return "free(" + std::to_string(rank) + ")";
  if (family == "tree" || family == "tree_with_end") return family + "(" + std::to_string(degree) + ")";
  return family;
}

Edge parse_edge(const std::string& s) {
  auto c = s.find(',');
  if (c == std::string::npos) throw UsageError("edge must look like u,v");
  return {std::stoi(s.substr(0, c)), std::stoi(s.substr(c + 1))};
}

EdgeSet edge_file(const Graph& g, const std::string& path) {
  EdgeSet s(g.edge_count());
  for (auto& e : read_json_file(path)) {
    int id = e.get<int>();
    if (id < 0 || id >= g.edge_count()) throw FormatError("edge index " + std::to_string(id) + " out of range");
    s.set(id);
  }
  return s;
}

std::vector<int> suite(const std::string& name) {
  if (name == "all" || name == "acceptance") return {};
  if (name == "paper-examples") return {2, 3, 11, 12};
  if (name == "oracles") return {1, 4, 5, 6, 7, 8, 9, 10};
  throw UsageError("unknown suite " + name);
}

json edge_ids(const Bits& s) { return to_ids(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cut systems, structure trees and relative accessibility on graph windows", "cutlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  int workers = 1;
  app.add_option("--workers", workers, "worker threads for cut search")->check(CLI::PositiveNumber);

  std::string out, dot, family = "free", periph, radii = "4,5,6", recipe = "none", graph, cuts_path, report = "text";
  int rank = 2, degree = 3, radius = 4, inner = -1, k = 2, kmax = 3;
  bool tight = false;
  std::string anchor, gen_path, cycle_path, window_path, json_path;

  auto* gen = app.add_subcommand("gen", "write a window of a built-in family");
  gen->add_option("--family", family, "free | grid_Z | grid_Z2 | tree | tree_with_end, or e.g. free(2)");
  gen->add_option("--rank", rank, "free group rank");
  gen->add_option("--degree", degree, "tree degree");
  gen->add_option("--radius", radius, "window radius R")->required();
  gen->add_option("--inner", inner, "inner radius m (default ceil(R/2))");
  gen->add_option("--recipe", recipe, "also write a peripheral system: cosets | levels | line | rows | none");
  gen->add_option("--periph-out", periph, "file for the peripheral system");
  gen->add_option("-o,--output", out, "window file");
  gen->add_option("--dot", dot, "DOT file");

  auto* cuts = app.add_subcommand("cuts", "cut enumeration");
  cuts->require_subcommand(1);
  auto* cuts_enum = cuts->add_subcommand("enum", "admissible tight cuts with |delta| <= k");
  cuts_enum->add_option("graph", graph, "window file")->required();
  cuts_enum->add_option("--k", k, "coboundary bound")->required();
  cuts_enum->add_flag("--tight", tight, "tight cuts only (the only mode)");
  cuts_enum->add_option("--anchor", anchor, "only cuts through edge u,v");
  cuts_enum->add_option("--periph", periph, "keep only cuts elliptic for this system");
  cuts_enum->add_option("-o,--output", out);

  auto* per = app.add_subcommand("periph", "peripheral systems");
  per->require_subcommand(1);
  auto* analyze = per->add_subcommand("analyze", "thinness, tameness, minimise and consolidate");
  analyze->add_option("graph", graph)->required();
  analyze->add_option("system", periph, "peripheral file or recipe:<name>")->required();
  analyze->add_option("--k", k, "pool bound");
  analyze->add_option("--report", report, "json | text")->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("-o,--output", out);

  auto* cone = app.add_subcommand("coneoff", "build the cone-off");
  cone->add_option("graph", graph)->required();
  cone->add_option("system", periph)->required();
  cone->add_option("-o,--output", out);
  cone->add_option("--dot", dot);

  auto* tree = app.add_subcommand("tree", "structure trees");
  tree->require_subcommand(1);
  auto* tree_build = tree->add_subcommand("build", "structure tree of a nested cut family");
  tree_build->add_option("graph", graph)->required();
  tree_build->add_option("cuts", cuts_path, "cut list (pool file or array)")->required();
  tree_build->add_option("-o,--output", out);
  tree_build->add_option("--dot", dot);

  auto* cyc = app.add_subcommand("cycles", "cycle space");
  cyc->require_subcommand(1);
  auto* dagger = cyc->add_subcommand("dagger", "restricted-span membership of a cycle");
  dagger->add_option("graph", graph)->required();
  dagger->add_option("--gen", gen_path, "JSON array of cycles, each an edge-index array")->required();
  dagger->add_option("--cycle", cycle_path, "edge-index array")->required();
  dagger->add_option("--window", window_path, "edge-index array (default: every edge)");

  auto* acc = app.add_subcommand("access", "relative accessibility");
  acc->require_subcommand(1);
  auto* prof = acc->add_subcommand("profile", "separation profile of all window-end pairs");
  prof->add_option("graph", graph)->required();
  prof->add_option("system", periph)->required();
  prof->add_option("--kmax", kmax);
  prof->add_option("--json", json_path, "output file");
  bool no_minimise = false, no_consolidate = false;
  prof->add_flag("--no-minimise", no_minimise);
  prof->add_flag("--no-consolidate", no_consolidate);
  auto* sweep = acc->add_subcommand("sweep", "K(R) across radii");
  sweep->add_option("--family", family);
  sweep->add_option("--rank", rank);
  sweep->add_option("--degree", degree);
  sweep->add_option("--radii", radii, "comma separated");
  sweep->add_option("--recipe", recipe);
  sweep->add_option("--kmax", kmax);
  sweep->add_option("--json", json_path);

  auto* verify = app.add_subcommand("verify", "oracle, property and example suites");
  std::string suite_name = "all";
  std::uint64_t seed = acceptance::kDefaultSeed;
  verify->add_option("--suite", suite_name, "all | paper-examples | oracles");
  verify->add_option("--seed", seed);
  verify->add_option("--json", json_path, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  SearchOptions search;
  search.workers = workers;

  try {
    if (*gen) {
      Window w = cayley_window(parse_family(family_arg(family, rank, degree)), radius, inner);
      emit(window_to_json(w), out);
      if (!dot.empty()) write_text_file(dot, window_to_dot(w));
      if (!periph.empty()) emit(system_to_json(recipe_system(w, recipe)), periph);
      return 0;
    }
    if (*cuts_enum) {
      Window w = load_window(graph);
      std::optional<int> a;
      if (!anchor.empty()) {
        auto [u, v] = parse_edge(anchor);
        a = w.graph.edge_id(u, v);
        if (*a < 0) throw UsageError("anchor is not an edge");
      }
      CutPool pool;
      if (!periph.empty()) {
        if (a) throw UsageError("--anchor and --periph cannot be combined");
        pool = elliptic_pool(w, load_system(w, periph), k, kDefaultClosureDepth, search);
      } else {
        pool = enumerate_tight_cuts(w, k, a, search);
      }
      emit(pool_to_json(w, pool), out);
      return 0;
    }
    if (*analyze) {
      Window w = load_window(graph);
      auto sys = load_system(w, periph);
      EllipticLadder ladder(w, sys, k, kDefaultClosureDepth, search);
      auto tr = tameness_check(w, sys, ladder.at(k));
      auto mr = minimise(w, sys);
      EllipticLadder lmin(w, mr.sys, k, kDefaultClosureDepth, search);
      auto cons = consolidate(w, mr.sys, lmin.at(k));
      json j;
      j["graph_hash"] = graph_hash(w.graph);
      j["peripherals"] = sys.size();
      j["thinness"] = thinness_report(w, sys);
      j["k"] = k;
      j["pool_size"] = ladder.at(k).size();
      j["tame"] = tr.tame;
      j["threshold"] = tr.threshold;
      j["max_split"] = tr.split_count;
      if (!tr.tame) j["witness_cut"] = to_ids(tr.witness_cut);
      j["dropped"] = mr.dropped;
      j["unstable"] = mr.unstable;
      json classes = json::array();
      for (auto& H : cons.sys.items) classes.push_back(H.name);
      j["consolidated"] = classes;
      j["version"] = kVersion;
      if (report == "json") {
        emit(j, out);
      } else {
        std::ostringstream os;
        os << "peripherals " << sys.size() << ", thinness " << j["thinness"] << "\n"
           << "elliptic pool at k=" << k << ": " << ladder.at(k).size() << " cuts\n"
           << (tr.tame ? "tame" : "not tame") << ": max split " << tr.split_count << " (threshold " << tr.threshold
           << ")\n"
           << "minimise drops " << mr.dropped.size() << ", unstable " << mr.unstable.size() << "\n"
           << "consolidate leaves " << cons.sys.size() << "\n";
        if (out.empty())
          std::cout << os.str();
        else
          write_text_file(out, os.str());
      }
      return 0;
    }
    if (*cone) {
      Window w = load_window(graph);
      auto sys = load_system(w, periph);
      auto c = build_cone_off(w, sys);
      emit(cone_to_json(c), out);
      if (!dot.empty()) write_text_file(dot, window_to_dot(c.window, "cone"));
      return 0;
    }
    if (*tree_build) {
      Window w = load_window(graph);
      auto cs = cuts_from_json(w, read_json_file(cuts_path));
      auto T = build_structure_tree(validate_nested_family(cs));
      auto j = tree_to_json(T);
      j["graph_hash"] = graph_hash(w.graph);
      emit(j, out);
      if (!dot.empty()) write_text_file(dot, tree_to_dot(T));
      return 0;
    }
    if (*dagger) {
      Window w = load_window(graph);
      std::vector<EdgeSet> S;
      for (auto& c : read_json_file(gen_path)) {
        EdgeSet s(w.graph.edge_count());
        for (auto& e : c) s.set(e.get<int>());
        S.push_back(s);
      }
      EdgeSet C = edge_file(w.graph, cycle_path);
      EdgeSet U(w.graph.edge_count());
      if (window_path.empty())
        U.set();
      else
        U = edge_file(w.graph, window_path);
      if (!is_cycle_vector(w.graph, C)) throw FormatError("--cycle is not a cycle vector");
      auto d = dagger_check(S, C, U);
      json j;
      j["graph_hash"] = graph_hash(w.graph);
      j["holds"] = d.holds;
      j["certificate"] = d.certificate;
      j["version"] = kVersion;
      emit(j, "");
      return 0;
    }
    if (*prof) {
      Window w = load_window(graph);
      auto sys = load_system(w, periph);
      ProfileOptions o;
      o.minimise = !no_minimise;
      o.consolidate = !no_consolidate;
      o.search = search;
      auto j = profile_to_json(profile(w, sys, kmax, o));
      j["graph_hash"] = graph_hash(w.graph);
      emit(j, json_path);
      return 0;
    }
    if (*sweep) {
      std::vector<int> rs;
      std::stringstream ss(radii);
      for (std::string t; std::getline(ss, t, ',');) rs.push_back(std::stoi(t));
      ProfileOptions o;
      o.search = search;
      auto tab = stability_sweep(parse_family(family_arg(family, rank, degree)), recipe, rs, kmax, o);
      json rows = json::array();
      for (auto& r : tab.rows)
        rows.push_back({{"R", r.R}, {"K", r.K}, {"separated", r.separated}, {"shared", r.shared},
                        {"unresolved", r.unresolved}});
      json j;
      j["family"] = family_arg(family, rank, degree);
      j["recipe"] = recipe;
      j["k_max"] = kmax;
      j["rows"] = rows;
      j["non_monotone"] = tab.non_monotone;
      j["growing"] = tab.growing;
      j["version"] = kVersion;
      emit(j, json_path);
      return 0;
    }
    if (*verify) {
      auto results = acceptance::run_acceptance(seed, suite(suite_name), &std::cout);
      json arr = json::array();
      int failed = 0;
      for (auto& r : results) {
        failed += !r.pass;
        arr.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
      }
      json j;
      j["suite"] = suite_name;
      j["seed"] = seed;
      j["passed"] = results.size() - failed;
      j["failed"] = failed;
      j["results"] = arr;
      j["version"] = kVersion;
      if (!json_path.empty()) write_text_file(json_path, j.dump(2) + "\n");
      if (failed) std::cerr << j.dump() << "\n";
      return failed ? 1 : 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    std::cerr << json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const BadParams& e) {
    std::cerr << json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
