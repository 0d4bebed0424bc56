#pragma once

#include "cutlab/ring.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace cutlab {

struct CutPool {
  int k_max = 0;
  const Window* w = nullptr;
  std::vector<VertexSet> cuts;
  std::vector<EdgeSet> cob;
  std::vector<std::vector<int>> edge_index;  // edge -> cuts whose coboundary holds it

  std::size_t size() const { return cuts.size(); }
  // Sorts, removes duplicates, fills cob and edge_index.
  void finalize();
  int find(const VertexSet& side) const;
  bool contains(const VertexSet& side) const { return find(side) >= 0; }
};

long long default_budget();

struct SearchOptions {
  long long budget = default_budget();
  int workers = 1;
};

// Admissible tight cuts with |delta| <= k, both orientations.
CutPool enumerate_tight_cuts(const Window& w, int k, std::optional<int> anchor_edge = std::nullopt,
                             const SearchOptions& opts = {});

using CutFilter = std::function<bool(const VertexSet&, const EdgeSet&)>;

// Combinations of at most `depth` base cuts under + and intersection, kept when
// |delta| <= k, nontrivial and accepted by keep. Base cuts are themselves candidates.
CutPool close_pool(const Window& w, const CutPool& base, int k, int depth, const CutFilter& keep);

// Max-flow between shadows; frontier-incident edges are uncuttable.
std::optional<int> min_separating_coboundary(const Window& w, const WindowEnd& e1, const WindowEnd& e2);

struct EndIndex {
  std::vector<Bits> inside, outside;  // per cut, over window-ends; split ends in neither
};

EndIndex index_ends(const CutPool& pool, const std::vector<WindowEnd>& ends);
// Least-coboundary pool cut separating ends i and j, or -1.
int find_separator(const CutPool& pool, const EndIndex& idx, int i, int j);

// Sweeps k = 1..k_max over pools supplied by pool_at(k).
struct SweepResult {
  int k = 0;
  VertexSet witness;
};
SweepResult min_separating_coboundary(const Window& w, const WindowEnd& e1, const WindowEnd& e2,
                                      const std::function<const CutPool&(int)>& pool_at, int k_max);

struct NestedGenSet {
  std::vector<VertexSet> family;
  std::size_t rank = 0;
  std::size_t target = 0;
};

// Candidate span: tight cuts with |delta| <= n together with component vertex sets.
NestedGenSet nested_generating_set(const Window& w, int n, const SearchOptions& opts = {});

std::size_t bits_hash(const Bits& b);
struct BitsHash {
  std::size_t operator()(const Bits& b) const { return bits_hash(b); }
};

}  // namespace cutlab
