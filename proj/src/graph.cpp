#include "cutlab/graph.hpp"

#include "cutlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace cutlab {

int Graph::edge_id(int u, int v) const {
  if (u < 0 || v < 0 || u >= n || v >= n) return -1;
  const auto& a = adj[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return -1;
  return adj_edge[u][it - a.begin()];
}

Graph build_graph(const std::vector<Edge>& edge_list, int n) {
  int max_id = -1;
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0) throw DanglingId("negative vertex id");
    max_id = std::max({max_id, u, v});
  }
  if (n < 0) n = max_id + 1;
  if (max_id >= n) throw DanglingId("vertex id " + std::to_string(max_id) + " >= " + std::to_string(n));

  std::vector<Edge> es;
  es.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u == v) throw SelfLoop("vertex " + std::to_string(u));
    es.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(es.begin(), es.end());
  for (size_t i = 1; i < es.size(); ++i)
    if (es[i] == es[i - 1])
      throw DuplicateEdge(std::to_string(es[i].first) + "-" + std::to_string(es[i].second));

  Graph g;
  g.n = n;
  g.edges = std::move(es);
  g.adj.assign(n, {});
  g.adj_edge.assign(n, {});
  std::vector<std::vector<std::pair<int, int>>> tmp(n);
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges[i];
    tmp[u].emplace_back(v, i);
    tmp[v].emplace_back(u, i);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(tmp[v].begin(), tmp[v].end());
    for (auto [w, e] : tmp[v]) {
      g.adj[v].push_back(w);
      g.adj_edge[v].push_back(e);
    }
  }
  return g;
}

std::string family_name(const FamilySpec& f) {
  switch (f.tag) {
    case Family::Finite: return "finite";
    case Family::Free: return "free(" + std::to_string(f.param) + ")";
    case Family::GridZ: return "grid_Z";
    case Family::GridZ2: return "grid_Z2";
    case Family::Tree: return "tree(" + std::to_string(f.param) + ")";
    case Family::TreeWithEnd: return "tree_with_end(" + std::to_string(f.param) + ")";
  }
  return "finite";
}

FamilySpec parse_family(const std::string& s) {
  auto arg = [&](const std::string& head) -> int {
    if (s.size() <= head.size() + 2 || s.back() != ')') throw BadParams("family " + s);
    return std::stoi(s.substr(head.size() + 1, s.size() - head.size() - 2));
  };
  if (s == "finite") return {Family::Finite, 0};
  if (s == "grid_Z") return {Family::GridZ, 0};
  if (s == "grid_Z2") return {Family::GridZ2, 0};
  if (s.rfind("free(", 0) == 0) return {Family::Free, arg("free")};
  if (s.rfind("tree_with_end(", 0) == 0) return {Family::TreeWithEnd, arg("tree_with_end")};
  if (s.rfind("tree(", 0) == 0) return {Family::Tree, arg("tree")};
  throw BadParams("unknown family " + s);
}

int Window::vertex_of(const std::string& label) const {
  auto it = label_index.find(label);
  return it == label_index.end() ? -1 : it->second;
}

int default_inner_radius(int R) { return (R + 1) / 2; }

std::vector<int> bfs_dist(const Graph& g, int src) {
  std::vector<int> d(g.n, -1);
  if (src < 0 || src >= g.n) return d;
  std::deque<int> q{src};
  d[src] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : g.adj[v])
      if (d[u] < 0) {
        d[u] = d[v] + 1;
        q.push_back(u);
      }
  }
  return d;
}

Window finite_window(Graph g) {
  Window w;
  w.graph = std::move(g);
  w.frontier = VertexSet(w.graph.n);
  w.dist = bfs_dist(w.graph, 0);
  int R = 0;
  for (int d : w.dist) R = std::max(R, d);
  w.radius = R;
  w.inner_radius = default_inner_radius(R);
  return w;
}

Window window_from_graph(Graph g, int basepoint, int R, int m) {
  Window w;
  w.graph = std::move(g);
  if (basepoint < 0 || basepoint >= w.graph.n) throw BadParams("basepoint out of range");
  w.basepoint = basepoint;
  w.radius = R;
  w.inner_radius = m < 0 ? default_inner_radius(R) : m;
  w.dist = bfs_dist(w.graph, basepoint);
  w.frontier = VertexSet(w.graph.n);
  for (int v = 0; v < w.graph.n; ++v) {
    if (w.dist[v] < 0 || w.dist[v] > R) throw BadParams("graph is not a ball of radius R");
    if (w.dist[v] == R) w.frontier.set(v);
  }
  return w;
}

Window with_inner_radius(const Window& w, int m) {
  Window c = w;
  c.inner_radius = m;
  return c;
}

namespace {

char inverse_letter(char c) {
  return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : static_cast<char>(c - 'A' + 'a');
}

std::string free_mul_letter(std::string w, char x) {
  if (!w.empty() && w.back() == inverse_letter(x))
    w.pop_back();
  else
    w.push_back(x);
  return w;
}

std::string tree_mul_letter(std::string w, char x) {
  if (!w.empty() && w.back() == x)
    w.pop_back();
  else
    w.push_back(x);
  return w;
}

std::string group_word(const std::string& label) { return label == "1" ? "" : label; }
std::string group_label(const std::string& word) { return word.empty() ? "1" : word; }
// digits are generators of tree(d), so its root is "e"
std::string tree_word(const std::string& label) { return label == "e" ? "" : label; }
std::string tree_label(const std::string& word) { return word.empty() ? "e" : word; }

std::pair<long, long> parse_pair(const std::string& s) {
  auto c = s.find(',');
  return {std::stol(s.substr(0, c)), std::stol(s.substr(c + 1))};
}

std::string pair_label(long x, long y) { return std::to_string(x) + "," + std::to_string(y); }

// tree_with_end labels: '^' then j copies of 'u' then child digits
std::pair<int, std::string> parse_twe(const std::string& s) {
  int j = 0;
  size_t i = 1;
  while (i < s.size() && s[i] == 'u') ++j, ++i;
  return {j, s.substr(i)};
}

std::string twe_label(int j, const std::string& w) { return "^" + std::string(j, 'u') + w; }

std::vector<std::string> neighbours(const FamilySpec& f, const std::string& label) {
  std::vector<std::string> out;
  switch (f.tag) {
    case Family::Free: {
      auto w = group_word(label);
      for (int i = 0; i < f.param; ++i) {
        char x = static_cast<char>('a' + i);
        out.push_back(group_label(free_mul_letter(w, x)));
        out.push_back(group_label(free_mul_letter(w, inverse_letter(x))));
      }
      break;
    }
    case Family::GridZ: {
      long x = std::stol(label);
      out.push_back(std::to_string(x + 1));
      out.push_back(std::to_string(x - 1));
      break;
    }
    case Family::GridZ2: {
      auto [x, y] = parse_pair(label);
      out.push_back(pair_label(x + 1, y));
      out.push_back(pair_label(x - 1, y));
      out.push_back(pair_label(x, y + 1));
      out.push_back(pair_label(x, y - 1));
      break;
    }
    case Family::Tree: {
      auto w = tree_word(label);
      for (int i = 0; i < f.param; ++i) out.push_back(tree_label(tree_mul_letter(w, static_cast<char>('0' + i))));
      break;
    }
    case Family::TreeWithEnd: {
      auto [j, w] = parse_twe(label);
      if (w.empty())
        out.push_back(twe_label(j + 1, ""));
      else
        out.push_back(twe_label(j, w.substr(0, w.size() - 1)));
      for (int c = 0; c < f.param - 1; ++c) {
        if (w.empty() && j > 0 && c == 0)
          out.push_back(twe_label(j - 1, ""));
        else
          out.push_back(twe_label(j, w + static_cast<char>('0' + c)));
      }
      break;
    }
    case Family::Finite: break;
  }
  return out;
}

std::string origin(const FamilySpec& f) {
  switch (f.tag) {
    case Family::GridZ: return "0";
    case Family::GridZ2: return "0,0";
    case Family::TreeWithEnd: return "^";
    case Family::Tree: return "e";
    default: return "1";
  }
}

}  // namespace

int label_length(const FamilySpec& f, const std::string& g) {
  switch (f.tag) {
    case Family::Free: return static_cast<int>(group_word(g).size());
    case Family::Tree: return static_cast<int>(tree_word(g).size());
    case Family::GridZ: return static_cast<int>(std::labs(std::stol(g)));
    case Family::GridZ2: {
      auto [x, y] = parse_pair(g);
      return static_cast<int>(std::labs(x) + std::labs(y));
    }
    case Family::TreeWithEnd: {
      auto [j, w] = parse_twe(g);
      return j + static_cast<int>(w.size());
    }
    case Family::Finite: break;
  }
  throw BadParams("labels unsupported for finite windows");
}

bool supports_translation(const FamilySpec& f) {
  return f.tag == Family::Free || f.tag == Family::GridZ || f.tag == Family::GridZ2 || f.tag == Family::Tree;
}

std::string right_multiply(const FamilySpec& f, const std::string& g, const std::string& p) {
  switch (f.tag) {
    case Family::Free: {
      auto w = group_word(g);
      for (char x : group_word(p)) w = free_mul_letter(w, x);
      return group_label(w);
    }
    case Family::Tree: {
      auto w = tree_word(g);
      for (char x : tree_word(p)) w = tree_mul_letter(w, x);
      return tree_label(w);
    }
    case Family::GridZ: return std::to_string(std::stol(g) + std::stol(p));
    case Family::GridZ2: {
      auto [a, b] = parse_pair(g);
      auto [c, d] = parse_pair(p);
      return pair_label(a + c, b + d);
    }
    default: break;
  }
  throw BadParams("no translation for " + family_name(f));
}

std::string truncate_label(const FamilySpec& f, const std::string& g, int R) {
  switch (f.tag) {
    case Family::Free: {
      auto w = group_word(g);
      if (static_cast<int>(w.size()) > R) w.resize(R);
      return group_label(w);
    }
    case Family::Tree: {
      auto w = tree_word(g);
      if (static_cast<int>(w.size()) > R) w.resize(R);
      return tree_label(w);
    }
    case Family::GridZ: {
      long x = std::stol(g);
      return std::to_string(std::clamp<long>(x, -R, R));
    }
    default: break;
  }
  throw BadParams("no canonical truncation for " + family_name(f));
}

Window cayley_window(const FamilySpec& f, int R, int m) {
  if (R < 1) throw BadParams("radius must be >= 1");
  switch (f.tag) {
    case Family::Free:
      if (f.param < 1 || f.param > 26) throw BadParams("free rank must be in [1,26]");
      break;
    case Family::Tree:
      if (f.param < 3 || f.param > 10) throw BadParams("tree degree must be in [3,10]");
      break;
    case Family::TreeWithEnd:
      if (f.param < 3 || f.param > 11) throw BadParams("tree degree must be in [3,11]");
      break;
    case Family::GridZ:
    case Family::GridZ2: break;
    case Family::Finite: throw BadParams("finite family has no generator");
  }

  std::vector<std::string> labels{origin(f)};
  std::unordered_map<std::string, int> index{{labels[0], 0}};
  std::vector<Edge> es;
  std::set<Edge> seen;
  for (size_t i = 0; i < labels.size(); ++i) {
    auto nb = neighbours(f, labels[i]);
    for (auto& l : nb) {
      if (label_length(f, l) > R) continue;
      auto it = index.find(l);
      int j;
      if (it == index.end()) {
        j = static_cast<int>(labels.size());
        index.emplace(l, j);
        labels.push_back(l);
      } else {
        j = it->second;
      }
      Edge e{std::min<int>(i, j), std::max<int>(i, j)};
      if (seen.insert(e).second) es.push_back(e);
    }
  }

  Window w = window_from_graph(build_graph(es, static_cast<int>(labels.size())), 0, R, m);
  w.family = f;
  w.labels = std::move(labels);
  w.label_index = std::move(index);
  if (f.tag == Family::TreeWithEnd) {
    w.levels.resize(w.n());
    for (int v = 0; v < w.n(); ++v) {
      auto [j, word] = parse_twe(w.labels[v]);
      w.levels[v] = static_cast<int>(word.size()) - j;
    }
  }
  if (w.inner_radius >= R) throw BadParams("inner radius must be < R");
  return w;
}

VertexSet annulus(const Window& w, int m) {
  VertexSet a(w.n());
  for (int v = 0; v < w.n(); ++v)
    if (w.dist[v] > m) a.set(v);
  return a;
}

VertexSet ball(const Graph& g, const VertexSet& S, int r) {
  VertexSet out = S;
  std::vector<int> frontier = to_ids(S);
  for (int step = 0; step < r && !frontier.empty(); ++step) {
    std::vector<int> next;
    for (int v : frontier)
      for (int u : g.adj[v])
        if (!out.test(u)) {
          out.set(u);
          next.push_back(u);
        }
    frontier = std::move(next);
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& S) {
  std::vector<VertexSet> out;
  VertexSet seen(g.n);
  for (auto v = S.find_first(); v != Bits::npos; v = S.find_next(v)) {
    if (seen.test(v)) continue;
    VertexSet comp(g.n);
    std::vector<int> stack{static_cast<int>(v)};
    seen.set(v);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.set(x);
      for (int u : g.adj[x])
        if (S.test(u) && !seen.test(u)) {
          seen.set(u);
          stack.push_back(u);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g, const VertexSet& S) {
  auto first = S.find_first();
  if (first == Bits::npos) return false;
  VertexSet seen(g.n);
  std::vector<int> stack{static_cast<int>(first)};
  seen.set(first);
  size_t count = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++count;
    for (int u : g.adj[x])
      if (S.test(u) && !seen.test(u)) {
        seen.set(u);
        stack.push_back(u);
      }
  }
  return count == S.count();
}

std::vector<WindowEnd> window_ends(const Window& w, int m) {
  if (!w.has_frontier()) throw NoFrontier("window has no frontier");
  if (m < 0 || m >= w.radius) throw BadParams("inner radius must satisfy 0 <= m < R");
  std::vector<WindowEnd> out;
  for (auto& c : components(w.graph, annulus(w, m))) {
    if (!c.intersects(w.frontier)) continue;
    out.push_back({static_cast<int>(out.size()), std::move(c)});
  }
  return out;
}

std::string to_string(LimitSizeClass c) {
  switch (c) {
    case LimitSizeClass::Zero: return "Zero";
    case LimitSizeClass::One: return "One";
    case LimitSizeClass::Two: return "Two";
    case LimitSizeClass::Many: return "Many";
  }
  return "?";
}

int ends_meeting(const Window& w, const VertexSet& X, int m) {
  int k = 0;
  for (auto& e : window_ends(w, m))
    if (e.shadow.intersects(X)) ++k;
  return k;
}

namespace {
LimitSizeClass classify(int k) {
  if (k == 0) return LimitSizeClass::Zero;
  if (k == 1) return LimitSizeClass::One;
  if (k == 2) return LimitSizeClass::Two;
  return LimitSizeClass::Many;
}
}  // namespace

LimitSizeClass limit_size_class(const Window& w, const VertexSet& X, int m) {
  if (X.size() != static_cast<size_t>(w.n())) throw GraphMismatch("vertex set size");
  auto c = classify(ends_meeting(w, X, m));
  if (m + 1 < w.radius) {
    auto c2 = classify(ends_meeting(w, X, m + 1));
    if (c2 != c)
      throw StabilityError("class " + to_string(c) + " at m=" + std::to_string(m) + " but " +
                           to_string(c2) + " at m=" + std::to_string(m + 1));
  }
  return c;
}

VertexSet make_set(int n, const std::vector<int>& ids) {
  VertexSet s(n);
  for (int v : ids) {
    if (v < 0 || v >= n) throw DanglingId("vertex " + std::to_string(v));
    s.set(v);
  }
  return s;
}

std::vector<int> to_ids(const Bits& s) {
  std::vector<int> out;
  out.reserve(s.count());
  for (auto v = s.find_first(); v != Bits::npos; v = s.find_next(v)) out.push_back(static_cast<int>(v));
  return out;
}

bool lex_less(const Bits& a, const Bits& b) {
  auto x = a.find_first();
  auto y = b.find_first();
  while (x != Bits::npos && y != Bits::npos) {
    if (x != y) return x < y;
    x = a.find_next(x);
    y = b.find_next(y);
  }
  return x == Bits::npos && y != Bits::npos;
}

}  // namespace cutlab
