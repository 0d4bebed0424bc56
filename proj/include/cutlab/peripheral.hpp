#pragma once

#include "cutlab/cut_search.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cutlab {

struct Peripheral {
  std::string name;
  VertexSet members;
  // Vertices standing in for the infinite part; defaults to members beyond B(m).
  std::optional<VertexSet> escape;
};

struct PeripheralSystem {
  std::vector<Peripheral> items;
  std::string provenance = "raw";

  std::size_t size() const { return items.size(); }
  int index_of(const std::string& name) const;
};

VertexSet escape_set(const Window& w, const Peripheral& H);
bool escapes(const Window& w, const Peripheral& H);
std::vector<int> escape_profile(const Window& w, const Peripheral& H);

// Sparse escape lists for fast ellipticity queries.
class EscapeModel {
 public:
  EscapeModel(const Window& w, const PeripheralSystem& sys);

  // b meets the escape set of H.
  bool meets(int h, const VertexSet& b) const;
  // b misses part of the escape set of H.
  bool misses(int h, const VertexSet& b) const;
  bool escaping(int h) const { return !lists_[h].empty(); }
  // -1 when elliptic, otherwise the first peripheral split by b.
  int violation(const VertexSet& b) const;
  std::size_t size() const { return lists_.size(); }

 private:
  std::vector<std::vector<int>> lists_;
};

struct EllipticVerdict {
  bool elliptic = true;
  int witness = -1;
};

EllipticVerdict is_elliptic(const Window& w, const VertexSet& b, const PeripheralSystem& sys);
EllipticVerdict is_elliptic(const Cut& c, const PeripheralSystem& sys);

constexpr int kDefaultClosureDepth = 2;

CutPool elliptic_pool(const Window& w, const PeripheralSystem& sys, int k, int depth = kDefaultClosureDepth,
                      const SearchOptions& opts = {});

// Caches the tight pool at k_max and derives elliptic pools for every k <= k_max.
class EllipticLadder {
 public:
  EllipticLadder(const Window& w, const PeripheralSystem& sys, int k_max, int depth = kDefaultClosureDepth,
                 const SearchOptions& opts = {});
  const CutPool& at(int k);
  int k_max() const { return k_max_; }

 private:
  const Window& w_;
  EscapeModel model_;
  int k_max_, depth_;
  CutPool tight_;
  std::map<int, std::unique_ptr<CutPool>> cache_;
};

int thinness_report(const Window& w, const PeripheralSystem& sys);

struct TamenessReport {
  bool tame = true;
  int witness = -1;  // pool index
  VertexSet witness_cut;
  int split_count = 0;
  int threshold = 0;
  int R = 0, m = 0, k = 0;
};

int split_count(const VertexSet& b, const PeripheralSystem& sys);
TamenessReport tameness_check(const Window& w, const PeripheralSystem& sys, const CutPool& pool);

struct NotTameConfirmation {
  bool confirmed = false;
  TamenessReport at_R, at_R2;
};

using InstanceMaker = std::function<std::pair<Window, PeripheralSystem>(int R)>;
NotTameConfirmation confirm_not_tame(const InstanceMaker& make, int R, int k);

enum class CoarseClass { Bounded, Unbounded, Big };
std::string to_string(CoarseClass c);

std::vector<VertexSet> coarse_components(const Window& w, const VertexSet& H, int r);
CoarseClass coarse_class(const Window& w, const Peripheral& H, int r);

struct MinimiseResult {
  PeripheralSystem sys;
  std::vector<std::string> dropped;
  std::vector<std::string> unstable;  // kept; classifier disagreed between m and m+1
};

MinimiseResult minimise(const Window& w, const PeripheralSystem& sys);

struct Distinction {
  bool distinguishable = false;
  int witness = -1;
};

Distinction distinguishable(const Window& w, const PeripheralSystem& sys, int h1, int h2, const CutPool& pool);

struct ConsolidateResult {
  PeripheralSystem sys;
  std::vector<std::vector<int>> classes;  // indices into the input system
};

ConsolidateResult consolidate(const Window& w, const PeripheralSystem& sys, const CutPool& pool);

PeripheralSystem thicken(const Window& w, const PeripheralSystem& sys, int r);

VertexSet separate_end_from_peripheral(const Window& w, const WindowEnd& omega, const Peripheral& H,
                                       const CutPool& pool);

enum class PairVerdict { SeparatedByElliptic, SharedPeripheral, Unresolved };
std::string to_string(PairVerdict v);

struct PairRecord {
  int e1 = 0, e2 = 0;
  PairVerdict verdict = PairVerdict::Unresolved;
  int witness = -1;     // pool index
  int peripheral = -1;  // system index
  bool both = false;    // xor violated
};

struct DichotomyReport {
  std::vector<PairRecord> pairs;
  int violations = 0;
};

DichotomyReport dichotomy_check(const Window& w, const PeripheralSystem& sys, const CutPool& pool);

// Built-in recipes.
PeripheralSystem coset_system(const Window& w);  // free(n): cyclic generator cosets
PeripheralSystem level_system(const Window& w);  // tree_with_end: level sets
PeripheralSystem line_system(const Window& w);   // everything as one peripheral
PeripheralSystem row_system(const Window& w);    // grid_Z2 horizontal rows
PeripheralSystem recipe_system(const Window& w, const std::string& recipe);

}  // namespace cutlab
