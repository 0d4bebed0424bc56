#pragma once

#include "cutlab/graph.hpp"

#include <optional>
#include <vector>

namespace cutlab {

struct Cut {
  const Window* w = nullptr;
  VertexSet side;

  bool operator==(const Cut& o) const { return w == o.w && side == o.side; }
};

Cut make_cut(const Window& w, VertexSet side);
Cut make_cut(const Window& w, const std::vector<int>& ids);

Cut complement(const Cut& c);
Cut sym_diff(const Cut& a, const Cut& b);
Cut intersect(const Cut& a, const Cut& b);

EdgeSet coboundary(const Graph& g, const VertexSet& side);
int coboundary_size(const Graph& g, const VertexSet& side);
inline int coboundary_size(const Cut& c) { return coboundary_size(c.w->graph, c.side); }

// No coboundary edge touches a frontier vertex.
bool is_admissible(const Window& w, const VertexSet& side);
inline bool is_admissible(const Cut& c) { return is_admissible(*c.w, c.side); }

bool is_tight(const Graph& g, const VertexSet& side);
inline bool is_tight(const Cut& c) { return is_tight(c.w->graph, c.side); }

struct CornerProfile {
  bool ab = false, ab_star = false, a_star_b = false, a_star_b_star = false;
  bool any_empty() const { return !ab || !ab_star || !a_star_b || !a_star_b_star; }
};

CornerProfile corners(const VertexSet& a, const VertexSet& b);
CornerProfile corners(const Cut& a, const Cut& b);
bool is_nested(const VertexSet& a, const VertexSet& b);
bool is_nested(const Cut& a, const Cut& b);
// First crossing pair, if any.
std::optional<std::pair<int, int>> is_nested_family(const std::vector<VertexSet>& F);
std::optional<std::pair<int, int>> is_nested_family(const std::vector<Cut>& F);

enum class EndSide { Inside, Outside, Split };
EndSide end_side(const VertexSet& side, const VertexSet& shadow);

bool separates(const Cut& c, const WindowEnd& e1, const WindowEnd& e2);
bool separates(const VertexSet& side, const WindowEnd& e1, const WindowEnd& e2);

// The orientation not containing vertex 0.
VertexSet canonical(const VertexSet& side);

class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t dim = 0, bool track = false) : dim_(dim), track_(track) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  // Returns true when v was independent of the current rows.
  bool insert(const Bits& v);
  bool contains(const Bits& v) const;
  // Indices of inserted vectors summing to v, when tracking.
  std::optional<std::vector<int>> combination(const Bits& v) const;

  const std::vector<Bits>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  void check(const Bits& v) const;

  std::size_t dim_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Bits> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Bits> combos_;
};

bool span_insert(Gf2Basis& basis, const Cut& c);
bool span_contains(const Gf2Basis& basis, const Cut& c);

}  // namespace cutlab
