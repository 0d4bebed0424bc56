#pragma once

#include "cutlab/peripheral.hpp"

#include <map>
#include <memory>
#include <vector>

namespace cutlab {

struct ConeOff {
  Window window;             // cone vertices follow the base vertices; frontier is the base frontier
  std::vector<int> cone_of;  // peripheral -> cone vertex
  int base_n = 0;
  const Window* base = nullptr;
  std::shared_ptr<const PeripheralSystem> sys;
  std::shared_ptr<const EscapeModel> model;
  std::vector<VertexSet> escape, frontier_members;  // per peripheral

  int cone_vertex(int h) const { return cone_of[h]; }
  bool is_cone(int v) const { return v >= base_n; }
};

ConeOff build_cone_off(const Window& w, const PeripheralSystem& sys);

// F: restriction to the base vertices; asserts ellipticity.
VertexSet restrict_cut(const ConeOff& c, const VertexSet& side_hat);

struct Lift {
  VertexSet side;
  int formula = 0;  // coboundary predicted from the base data
};

Lift lift(const ConeOff& c, const VertexSet& b);
int lift_formula(const ConeOff& c, const VertexSet& b);

struct GrowthProfile {
  std::vector<std::pair<int, int>> samples;  // (|delta b|, |delta b-hat|)
  std::map<int, int> envelope;
  bool not_tame = false;
  int witness_peripheral = -1;
  int witness_cut = -1;
};

GrowthProfile growth_profile(const ConeOff& c, const CutPool& pool);

}  // namespace cutlab
