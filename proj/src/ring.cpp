#include "cutlab/ring.hpp"

#include "cutlab/errors.hpp"

namespace cutlab {

Cut make_cut(const Window& w, VertexSet side) {
  if (side.size() != static_cast<std::size_t>(w.n())) throw GraphMismatch("cut size differs from window");
  return Cut{&w, std::move(side)};
}

Cut make_cut(const Window& w, const std::vector<int>& ids) { return Cut{&w, make_set(w.n(), ids)}; }

namespace {

void same_graph(const Cut& a, const Cut& b) {
  if (a.w != b.w || a.side.size() != b.side.size()) throw GraphMismatch("cuts live on different graphs");
}

Cut checked(const Window& w, VertexSet s) {
  if (!is_admissible(w, s)) throw Inadmissible("result coboundary touches the frontier");
  return Cut{&w, std::move(s)};
}

}  // namespace

Cut complement(const Cut& c) { return checked(*c.w, ~c.side); }

Cut sym_diff(const Cut& a, const Cut& b) {
  same_graph(a, b);
  return checked(*a.w, a.side ^ b.side);
}

Cut intersect(const Cut& a, const Cut& b) {
  same_graph(a, b);
  return checked(*a.w, a.side & b.side);
}

EdgeSet coboundary(const Graph& g, const VertexSet& side) {
  EdgeSet d(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges[i];
    if (side.test(u) != side.test(v)) d.set(i);
  }
  return d;
}

int coboundary_size(const Graph& g, const VertexSet& side) {
  int k = 0;
  for (auto [u, v] : g.edges)
    if (side.test(u) != side.test(v)) ++k;
  return k;
}

bool is_admissible(const Window& w, const VertexSet& side) {
  for (auto f = w.frontier.find_first(); f != Bits::npos; f = w.frontier.find_next(f)) {
    bool s = side.test(f);
    for (int u : w.graph.adj[f])
      if (side.test(u) != s) return false;
  }
  return true;
}

bool is_tight(const Graph& g, const VertexSet& side) {
  if (side.none() || side.all()) return false;
  return is_connected(g, side) && is_connected(g, ~side);
}

CornerProfile corners(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) throw GraphMismatch("corner sets differ in size");
  CornerProfile p;
  p.ab = a.intersects(b);
  p.ab_star = (a - b).any();
  p.a_star_b = (b - a).any();
  p.a_star_b_star = !(a | b).all();
  return p;
}

CornerProfile corners(const Cut& a, const Cut& b) {
  same_graph(a, b);
  return corners(a.side, b.side);
}

bool is_nested(const VertexSet& a, const VertexSet& b) { return corners(a, b).any_empty(); }
bool is_nested(const Cut& a, const Cut& b) { return corners(a, b).any_empty(); }

std::optional<std::pair<int, int>> is_nested_family(const std::vector<VertexSet>& F) {
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = i + 1; j < F.size(); ++j)
      if (!is_nested(F[i], F[j])) return std::make_pair(static_cast<int>(i), static_cast<int>(j));
  return std::nullopt;
}

std::optional<std::pair<int, int>> is_nested_family(const std::vector<Cut>& F) {
  std::vector<VertexSet> sides;
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (i > 0) same_graph(F[0], F[i]);
    sides.push_back(F[i].side);
  }
  return is_nested_family(sides);
}

EndSide end_side(const VertexSet& side, const VertexSet& shadow) {
  bool in = shadow.intersects(side);
  bool out = !shadow.is_subset_of(side);
  if (in && out) return EndSide::Split;
  return in ? EndSide::Inside : EndSide::Outside;
}

bool separates(const VertexSet& side, const WindowEnd& e1, const WindowEnd& e2) {
  auto s1 = end_side(side, e1.shadow);
  auto s2 = end_side(side, e2.shadow);
  if (s1 == EndSide::Split || s2 == EndSide::Split)
    throw ShadowSplit("end " + std::to_string(s1 == EndSide::Split ? e1.id : e2.id) + " meets both sides");
  return s1 != s2;
}

bool separates(const Cut& c, const WindowEnd& e1, const WindowEnd& e2) { return separates(c.side, e1, e2); }

VertexSet canonical(const VertexSet& side) {
  if (!side.empty() && side.test(0)) return ~side;
  return side;
}

void Gf2Basis::check(const Bits& v) const {
  if (v.size() != dim_) throw DimensionMismatch("vector of size " + std::to_string(v.size()) + " in basis of dim " +
                                                std::to_string(dim_));
}

bool Gf2Basis::insert(const Bits& v) {
  check(v);
  Bits x = v;
  Bits combo;
  if (track_) {
    combo.resize(inserted_ + 1);
    combo.set(inserted_);
  }
  ++inserted_;
  for (auto& c : combos_) c.resize(inserted_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (x.test(pivots_[i])) {
      x ^= rows_[i];
      if (track_) combo ^= combos_[i];
    }
  }
  auto p = x.find_first();
  if (p == Bits::npos) return false;
  // keep rows ordered by pivot
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(x));
  pivots_.insert(pivots_.begin() + pos, p);
  if (track_) combos_.insert(combos_.begin() + pos, std::move(combo));
  return true;
}

bool Gf2Basis::contains(const Bits& v) const {
  check(v);
  Bits x = v;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (x.test(pivots_[i])) x ^= rows_[i];
  return x.none();
}

std::optional<std::vector<int>> Gf2Basis::combination(const Bits& v) const {
  check(v);
  if (!track_) return std::nullopt;
  Bits x = v;
  Bits combo(inserted_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (x.test(pivots_[i])) {
      x ^= rows_[i];
      combo ^= combos_[i];
    }
  if (x.any()) return std::nullopt;
  return to_ids(combo);
}

bool span_insert(Gf2Basis& basis, const Cut& c) { return basis.insert(c.side); }
bool span_contains(const Gf2Basis& basis, const Cut& c) { return basis.contains(c.side); }

}  // namespace cutlab
