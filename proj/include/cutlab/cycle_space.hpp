#pragma once

#include "cutlab/cone_off.hpp"

#include <optional>
#include <vector>

namespace cutlab {

bool is_cycle_vector(const Graph& g, const EdgeSet& C);

// Fundamental cycles of the BFS forest rooted at the least vertex of each component.
std::vector<EdgeSet> cycle_basis(const Graph& g);
// Fundamental cycles whose sum is C.
std::vector<EdgeSet> fundamental_decomposition(const Graph& g, const EdgeSet& C);

bool algebraic_generates(const std::vector<EdgeSet>& S, const Graph& g);

struct DaggerResult {
  bool holds = false;
  std::vector<int> certificate;  // indices into S
};

// Restriction of C to U lies in the restriction of span(S) to U.
DaggerResult dagger_check(const std::vector<EdgeSet>& S, const EdgeSet& C, const EdgeSet& U);

// Simple cycles with 3..max_len edges.
std::vector<EdgeSet> short_cycles(const Graph& g, int max_len);

struct ConeCycleWitness {
  bool tame = true;
  int peripheral = -1;
  int x = -1, y = -1;
  int ell = 0, r = 0;
  EdgeSet cycle;
  EdgeSet window_edges;
};

ConeCycleWitness cone_cycle_tameness_witness(const ConeOff& cone, const std::vector<EdgeSet>& S);

// Members of En agreeing with b on X, sorted by inclusion.
std::vector<int> hamann_chain(const std::vector<VertexSet>& En, const VertexSet& b, const VertexSet& X);

struct AlternatingSequence {
  std::vector<int> edges;   // e_1 .. e_m
  std::vector<int> cycles;  // A_1 .. A_{m-1}, indices into A
};

AlternatingSequence alternating_sequence(const Graph& g, const EdgeSet& C, const VertexSet& b,
                                         const std::vector<EdgeSet>& A);

}  // namespace cutlab
