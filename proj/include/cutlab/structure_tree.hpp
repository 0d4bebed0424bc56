#pragma once

#include "cutlab/peripheral.hpp"

#include <unordered_map>
#include <vector>

namespace cutlab {

struct NestedFamily {
  std::vector<VertexSet> cuts;  // lexicographic order
  std::vector<int> complement;  // cut -> index of its complement
  std::vector<int> pair_of;     // cut -> pair id
  std::vector<std::pair<int, int>> pairs;

  std::size_t size() const { return cuts.size(); }
};

NestedFamily validate_nested_family(const std::vector<VertexSet>& cuts);

// An ultrafilter is stored as a bitset over the family's cut indices.
bool is_ultrafilter(const NestedFamily& E, const Bits& U);

struct StructureTree {
  NestedFamily E;
  std::vector<Bits> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_cut;   // tree edge (a, b): cut in vertices[a] whose complement is in vertices[b]
  std::vector<int> pair_edge;  // pair id -> tree edge
  std::unordered_map<Bits, int, BitsHash> index;

  int vertex_of(const Bits& U) const;
  // Tree vertices whose ultrafilter contains cut i.
  Bits tree_cut(int i) const;
};

// Grown from U_root by flipping minimal elements.
StructureTree build_structure_tree(const NestedFamily& E, int root = 0);

// Every orientation that is upward closed; only for small families.
std::vector<Bits> brute_force_ultrafilters(const NestedFamily& E);

Bits vertex_ultrafilter(const NestedFamily& E, int v);
std::vector<int> vertex_map(const StructureTree& T, int n);

VertexSet pullback(const StructureTree& T, const std::vector<int>& f, const Bits& t);
VertexSet pullback(const Window& w, const StructureTree& T, const std::vector<int>& f, const Bits& t);

int peripheral_fixed_vertex(const StructureTree& T, const Window& w, const Peripheral& H);

// Tree vertex reached from g.p through translated labels; defined for families with translation.
std::vector<int> translated_vertex_map(const Window& w, const StructureTree& T, const std::string& p);

}  // namespace cutlab
