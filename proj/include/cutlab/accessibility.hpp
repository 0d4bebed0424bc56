#pragma once

#include "cutlab/peripheral.hpp"

#include <string>
#include <vector>

namespace cutlab {

enum class AccessKind { SeparatedElliptic, SharedPeripheral, NotSeparableAtScale };
std::string to_string(AccessKind k);

struct PairProfile {
  int e1 = 0, e2 = 0;
  AccessKind kind = AccessKind::NotSeparableAtScale;
  int k = 0;
  std::vector<int> witness;  // sorted vertex ids
  std::string peripheral;
};

struct AccessProfile {
  int R = 0, m = 0, k_max = 0;
  int thinness = 0;
  std::vector<std::string> input_system, normalized_system;
  std::vector<std::string> dropped, unstable;
  std::vector<int> excluded_ends;
  int end_count = 0;
  std::vector<PairProfile> pairs;
  int K = 0;
  int xor_violations = 0;
};

struct ProfileOptions {
  bool minimise = true;
  bool consolidate = true;
  int depth = kDefaultClosureDepth;
  SearchOptions search;
};

AccessProfile profile(const Window& w, const PeripheralSystem& sys, int k_max, const ProfileOptions& opts = {});

struct EasyCaseReport {
  bool holds = true;
  int K = 0;
  int pairs_separated = 0;
  int failures = 0;
};

EasyCaseReport easy_case_check(const Window& w, const PeripheralSystem& sys, const std::vector<VertexSet>& genset);

struct SweepRow {
  int R = 0;
  int K = 0;
  int separated = 0, shared = 0, unresolved = 0;
};

struct StabilityTable {
  std::vector<SweepRow> rows;
  bool non_monotone = false;
  bool growing = false;
};

StabilityTable stability_sweep(const FamilySpec& family, const std::string& recipe, const std::vector<int>& radii,
                               int k_max, const ProfileOptions& opts = {});

}  // namespace cutlab
