#include "cutlab/io.hpp"

#include "cutlab/errors.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace cutlab {

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  feed(std::to_string(g.n) + ";");
  for (auto [u, v] : g.edges) feed(std::to_string(u) + "-" + std::to_string(v) + ";");
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

json window_to_json(const Window& w) {
  json j;
  j["vertex_count"] = w.n();
  json es = json::array();
  for (auto [u, v] : w.graph.edges) es.push_back({u, v});
  j["edges"] = es;
  j["frontier"] = to_ids(w.frontier);
  j["basepoint"] = w.basepoint;
  j["radius"] = w.radius;
  j["inner_radius"] = w.inner_radius;
  j["family"] = family_name(w.family);
  if (!w.labels.empty()) {
    json l = json::object();
    for (int v = 0; v < static_cast<int>(w.labels.size()); ++v) l[std::to_string(v)] = w.labels[v];
    j["labels"] = l;
  }
  if (!w.levels.empty()) j["levels"] = w.levels;
  j["graph_hash"] = graph_hash(w.graph);
  j["version"] = kVersion;
  return j;
}

Window window_from_json(const json& j) {
  try {
    std::vector<Edge> es;
    for (auto& e : j.at("edges")) es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    int n = j.value("vertex_count", -1);
    Graph g = build_graph(es, n);
    auto fam = parse_family(j.value("family", std::string("finite")));
    if (fam.tag != Family::Finite) {
      int R = j.at("radius").get<int>();
      int m = j.value("inner_radius", -1);
      Window w = cayley_window(fam, R, m);
      if (graph_hash(w.graph) != graph_hash(g)) throw FormatError("edges do not match family " + family_name(fam));
      return w;
    }
    if (j.contains("radius") && j.contains("frontier") && !j.at("frontier").empty()) {
      Window w = window_from_graph(std::move(g), j.value("basepoint", 0), j.at("radius").get<int>(),
                                   j.value("inner_radius", -1));
      if (to_ids(w.frontier) != j.at("frontier").get<std::vector<int>>())
        throw FormatError("frontier is not the sphere of radius R");
      return w;
    }
    return finite_window(std::move(g));
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

json system_to_json(const PeripheralSystem& sys) {
  json arr = json::array();
  for (auto& H : sys.items) {
    json h;
    h["name"] = H.name;
    h["vertices"] = to_ids(H.members);
    if (H.escape) h["escape"] = to_ids(*H.escape);
    arr.push_back(h);
  }
  json j;
  j["provenance"] = sys.provenance;
  j["peripherals"] = arr;
  return j;
}

PeripheralSystem system_from_json(const Window& w, const json& j) {
  try {
    PeripheralSystem sys;
    sys.provenance = j.value("provenance", std::string("raw"));
    for (auto& h : j.at("peripherals")) {
      Peripheral H;
      H.name = h.at("name").get<std::string>();
      if (sys.index_of(H.name) >= 0) throw FormatError("duplicate peripheral name " + H.name);
      H.members = make_set(w.n(), h.at("vertices").get<std::vector<int>>());
      if (h.contains("escape")) H.escape = make_set(w.n(), h.at("escape").get<std::vector<int>>());
      sys.items.push_back(std::move(H));
    }
    return sys;
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

json pool_to_json(const Window& w, const CutPool& pool) {
  json j;
  j["graph_hash"] = graph_hash(w.graph);
  j["k_max"] = pool.k_max;
  json cuts = json::array();
  json cob = json::array();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    cuts.push_back(to_ids(pool.cuts[i]));
    cob.push_back(pool.cob[i].count());
  }
  j["count"] = pool.size();
  j["cuts"] = cuts;
  j["coboundary"] = cob;
  j["version"] = kVersion;
  return j;
}

std::vector<VertexSet> cuts_from_json(const Window& w, const json& j) {
  try {
    const json* arr = &j;
    if (j.is_object()) {
      if (j.contains("graph_hash") && j.at("graph_hash").get<std::string>() != graph_hash(w.graph))
        throw GraphMismatch("cut list was written for a different graph");
      arr = &j.at("cuts");
    }
    std::vector<VertexSet> out;
    for (auto& c : *arr) out.push_back(make_set(w.n(), c.get<std::vector<int>>()));
    return out;
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

json tree_to_json(const StructureTree& T) {
  json j;
  json cuts = json::array();
  for (auto& c : T.E.cuts) cuts.push_back(to_ids(c));
  j["cuts"] = cuts;
  json vs = json::array();
  for (auto& U : T.vertices) vs.push_back(to_ids(U));
  j["vertices"] = vs;
  json es = json::array();
  for (auto [a, b] : T.edges) es.push_back({a, b});
  j["edges"] = es;
  j["edge_cut_map"] = T.edge_cut;
  j["version"] = kVersion;
  return j;
}

json cone_to_json(const ConeOff& c) {
  json j = window_to_json(c.window);
  j["family"] = "finite";
  j["base_vertex_count"] = c.base_n;
  json idx = json::object();
  for (std::size_t h = 0; h < c.cone_of.size(); ++h) idx[c.sys->items[h].name] = c.cone_of[h];
  j["cone_index"] = idx;
  return j;
}

json profile_to_json(const AccessProfile& p) {
  json j;
  j["scale"] = {{"R", p.R}, {"m", p.m}, {"k_max", p.k_max}};
  j["thinness"] = p.thinness;
  j["input_system"] = p.input_system;
  j["normalized_system"] = p.normalized_system;
  j["dropped"] = p.dropped;
  j["unstable"] = p.unstable;
  j["end_count"] = p.end_count;
  j["excluded_ends"] = p.excluded_ends;
  json pairs = json::array();
  for (auto& r : p.pairs) {
    json x;
    x["ends"] = {r.e1, r.e2};
    x["kind"] = to_string(r.kind);
    if (r.kind == AccessKind::SeparatedElliptic) {
      x["k"] = r.k;
      x["witness"] = r.witness;
    }
    if (r.kind == AccessKind::SharedPeripheral) x["peripheral"] = r.peripheral;
    pairs.push_back(x);
  }
  j["pairs"] = pairs;
  j["K"] = p.K;
  j["xor_violations"] = p.xor_violations;
  j["version"] = kVersion;
  return j;
}

std::string window_to_dot(const Window& w, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < w.n(); ++v) {
    os << "  " << v << " [";
    if (v < static_cast<int>(w.labels.size())) os << "label=\"" << w.labels[v] << "\", ";
    os << "shape=" << (v < static_cast<int>(w.frontier.size()) && w.frontier.test(v) ? "square" : "circle") << "];\n";
  }
  for (auto [u, v] : w.graph.edges) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string tree_to_dot(const StructureTree& T) {
  std::ostringstream os;
  os << "graph tree {\n";
  for (std::size_t v = 0; v < T.vertices.size(); ++v) os << "  u" << v << ";\n";
  for (std::size_t e = 0; e < T.edges.size(); ++e)
    os << "  u" << T.edges[e].first << " -- u" << T.edges[e].second << " [label=\"" << T.edge_cut[e] << "\"];\n";
  os << "}\n";
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

}  // namespace cutlab
