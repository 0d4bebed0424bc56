#include "cutlab/structure_tree.hpp"

#include "cutlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace cutlab {

NestedFamily validate_nested_family(const std::vector<VertexSet>& input) {
  NestedFamily E;
  std::unordered_set<Bits, BitsHash> seen;
  for (auto& c : input) {
    if (c.none() || c.all()) throw ContainsTrivial("family contains the empty set or everything");
    for (auto x : {c, VertexSet(~c)})
      if (seen.insert(x).second) E.cuts.push_back(x);
  }
  std::sort(E.cuts.begin(), E.cuts.end(), [](const Bits& a, const Bits& b) { return lex_less(a, b); });
  for (std::size_t i = 0; i < E.cuts.size(); ++i)
    for (std::size_t j = i + 1; j < E.cuts.size(); ++j)
      if (!is_nested(E.cuts[i], E.cuts[j])) throw NotNested(static_cast<int>(i), static_cast<int>(j));
  std::unordered_map<Bits, int, BitsHash> where;
  for (std::size_t i = 0; i < E.cuts.size(); ++i) where[E.cuts[i]] = static_cast<int>(i);
  E.complement.resize(E.cuts.size());
  E.pair_of.assign(E.cuts.size(), -1);
  for (std::size_t i = 0; i < E.cuts.size(); ++i) {
    int j = where.at(~E.cuts[i]);
    E.complement[i] = j;
    if (E.pair_of[i] < 0) {
      E.pair_of[i] = E.pair_of[j] = static_cast<int>(E.pairs.size());
      E.pairs.emplace_back(static_cast<int>(i), j);
    }
  }
  return E;
}

namespace {

struct Order {
  std::vector<Bits> up, down;  // up[i]: cuts containing cut i; down[i]: cuts inside cut i
};

Order order_of(const NestedFamily& E) {
  const std::size_t n = E.size();
  Order o;
  o.up.assign(n, Bits(n));
  o.down.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (E.cuts[i].is_subset_of(E.cuts[j])) {
        o.up[i].set(j);
        o.down[j].set(i);
      }
  return o;
}

bool upward_closed(const Order& o, const Bits& U) {
  for (auto i = U.find_first(); i != Bits::npos; i = U.find_next(i))
    if (!o.up[i].is_subset_of(U)) return false;
  return true;
}

}  // namespace

bool is_ultrafilter(const NestedFamily& E, const Bits& U) {
  if (U.size() != E.size()) return false;
  for (auto [a, b] : E.pairs)
    if (U.test(a) == U.test(b)) return false;
  return upward_closed(order_of(E), U);
}

int StructureTree::vertex_of(const Bits& U) const {
  auto it = index.find(U);
  return it == index.end() ? -1 : it->second;
}

Bits StructureTree::tree_cut(int i) const {
  Bits t(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (vertices[v].test(i)) t.set(v);
  return t;
}

Bits vertex_ultrafilter(const NestedFamily& E, int v) {
  Bits U(E.size());
  for (std::size_t i = 0; i < E.size(); ++i)
    if (E.cuts[i].test(v)) U.set(i);
  return U;
}

StructureTree build_structure_tree(const NestedFamily& E, int root) {
  if (E.size() == 0) throw BadParams("empty nested family");
  StructureTree T;
  T.E = E;
  auto o = order_of(E);
  Bits start = vertex_ultrafilter(E, root);
  T.vertices.push_back(start);
  T.index[start] = 0;
  T.pair_edge.assign(E.pairs.size(), -1);
  std::deque<int> q{0};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    Bits U = T.vertices[x];
    for (auto i = U.find_first(); i != Bits::npos; i = U.find_next(i)) {
      if ((o.down[i] & U).count() != 1) continue;
      Bits V = U;
      V.reset(i);
      V.set(E.complement[i]);
      if (T.index.count(V)) continue;
      int y = static_cast<int>(T.vertices.size());
      T.vertices.push_back(V);
      T.index[V] = y;
      T.pair_edge[E.pair_of[i]] = static_cast<int>(T.edges.size());
      T.edges.emplace_back(x, y);
      T.edge_cut.push_back(static_cast<int>(i));
      q.push_back(y);
    }
  }
  return T;
}

std::vector<Bits> brute_force_ultrafilters(const NestedFamily& E) {
  const std::size_t P = E.pairs.size();
  if (P > 24) throw BadParams("too many pairs for brute force");
  auto o = order_of(E);
  std::vector<Bits> out;
  for (std::uint64_t mask = 0; mask < (1ULL << P); ++mask) {
    Bits U(E.size());
    for (std::size_t p = 0; p < P; ++p) U.set((mask >> p) & 1 ? E.pairs[p].second : E.pairs[p].first);
    if (upward_closed(o, U)) out.push_back(std::move(U));
  }
  return out;
}

std::vector<int> vertex_map(const StructureTree& T, int n) {
  std::vector<int> f(n);
  for (int v = 0; v < n; ++v) f[v] = T.vertex_of(vertex_ultrafilter(T.E, v));
  return f;
}

VertexSet pullback(const StructureTree& T, const std::vector<int>& f, const Bits& t) {
  VertexSet out(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v] < 0 || f[v] >= static_cast<int>(T.vertices.size())) throw DanglingId("map leaves the tree");
    if (t.test(f[v])) out.set(v);
  }
  return out;
}

VertexSet pullback(const Window& w, const StructureTree& T, const std::vector<int>& f, const Bits& t) {
  auto b = pullback(T, f, t);
  if (!is_admissible(w, b)) throw InadmissiblePullback("preimage coboundary touches the frontier");
  return b;
}

int peripheral_fixed_vertex(const StructureTree& T, const Window& w, const Peripheral& H) {
  const auto& E = T.E;
  auto esc = escape_set(w, H);
  Bits U(E.size());
  for (auto [a, b] : E.pairs) {
    bool ea = esc.intersects(E.cuts[a]), eb = esc.intersects(E.cuts[b]);
    int pick;
    if (ea != eb) {
      pick = ea ? a : b;
    } else {
      auto na = (H.members & E.cuts[a]).count(), nb = (H.members & E.cuts[b]).count();
      pick = na > nb ? a : (nb > na ? b : std::min(a, b));
    }
    U.set(pick);
  }
  auto o = order_of(E);
  for (auto i = U.find_first(); i != Bits::npos; i = U.find_next(i)) {
    Bits miss = o.up[i] - U;
    if (miss.any()) throw NoFixedVertex(E.pair_of[miss.find_first()]);
  }
  return T.vertex_of(U);
}

std::vector<int> translated_vertex_map(const Window& w, const StructureTree& T, const std::string& p) {
  if (!supports_translation(w.family)) throw BadParams("no translation for " + family_name(w.family));
  std::vector<int> f(w.n());
  for (int g = 0; g < w.n(); ++g) {
    auto gp = right_multiply(w.family, w.labels[g], p);
    if (label_length(w.family, gp) > w.radius) gp = truncate_label(w.family, gp, w.radius);
    int x = w.vertex_of(gp);
    if (x < 0) throw DanglingId("label " + gp + " outside the window");
    f[g] = T.vertex_of(vertex_ultrafilter(T.E, x));
  }
  return f;
}

}  // namespace cutlab
