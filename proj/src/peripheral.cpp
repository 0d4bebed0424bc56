#include "cutlab/peripheral.hpp"

#include "cutlab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace cutlab {

int PeripheralSystem::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].name == name) return static_cast<int>(i);
  return -1;
}

VertexSet escape_set(const Window& w, const Peripheral& H) {
  if (H.escape) return *H.escape;
  return H.members & annulus(w, w.inner_radius);
}

bool escapes(const Window& w, const Peripheral& H) { return escape_set(w, H).any(); }

std::vector<int> escape_profile(const Window& w, const Peripheral& H) {
  std::vector<int> out;
  if (!w.has_frontier()) return out;
  auto E = escape_set(w, H);
  for (auto& e : window_ends(w, w.inner_radius))
    if (e.shadow.intersects(E)) out.push_back(e.id);
  return out;
}

EscapeModel::EscapeModel(const Window& w, const PeripheralSystem& sys) {
  for (auto& H : sys.items) lists_.push_back(to_ids(escape_set(w, H)));
}

bool EscapeModel::meets(int h, const VertexSet& b) const {
  for (int v : lists_[h])
    if (b.test(v)) return true;
  return false;
}

bool EscapeModel::misses(int h, const VertexSet& b) const {
  for (int v : lists_[h])
    if (!b.test(v)) return true;
  return false;
}

int EscapeModel::violation(const VertexSet& b) const {
  for (std::size_t h = 0; h < lists_.size(); ++h) {
    const auto& l = lists_[h];
    if (l.size() < 2) continue;
    bool s = b.test(l[0]);
    for (std::size_t i = 1; i < l.size(); ++i)
      if (b.test(l[i]) != s) return static_cast<int>(h);
  }
  return -1;
}

EllipticVerdict is_elliptic(const Window& w, const VertexSet& b, const PeripheralSystem& sys) {
  EscapeModel m(w, sys);
  int v = m.violation(b);
  return {v < 0, v};
}

EllipticVerdict is_elliptic(const Cut& c, const PeripheralSystem& sys) { return is_elliptic(*c.w, c.side, sys); }

CutPool elliptic_pool(const Window& w, const PeripheralSystem& sys, int k, int depth, const SearchOptions& opts) {
  EllipticLadder ladder(w, sys, k, depth, opts);
  return ladder.at(k);
}

EllipticLadder::EllipticLadder(const Window& w, const PeripheralSystem& sys, int k_max, int depth,
                               const SearchOptions& opts)
    : w_(w), model_(w, sys), k_max_(k_max), depth_(depth), tight_(enumerate_tight_cuts(w, k_max, std::nullopt, opts)) {}

const CutPool& EllipticLadder::at(int k) {
  if (k < 1 || k > k_max_) throw BadParams("k outside ladder range");
  auto it = cache_.find(k);
  if (it != cache_.end()) return *it->second;
  CutPool base;
  base.k_max = k;
  base.w = &w_;
  for (std::size_t i = 0; i < tight_.size(); ++i)
    if (static_cast<int>(tight_.cob[i].count()) <= k) base.cuts.push_back(tight_.cuts[i]);
  base.finalize();
  auto pool = std::make_unique<CutPool>(
      close_pool(w_, base, k, depth_, [this](const VertexSet& x, const EdgeSet&) { return model_.violation(x) < 0; }));
  auto& ref = *pool;
  cache_.emplace(k, std::move(pool));
  return ref;
}

int thinness_report(const Window& w, const PeripheralSystem& sys) {
  std::vector<int> mult(w.n(), 0);
  for (auto& H : sys.items)
    for (auto v = H.members.find_first(); v != Bits::npos; v = H.members.find_next(v)) ++mult[v];
  return mult.empty() ? 0 : *std::max_element(mult.begin(), mult.end());
}

int split_count(const VertexSet& b, const PeripheralSystem& sys) {
  int k = 0;
  for (auto& H : sys.items)
    if (H.members.intersects(b) && !H.members.is_subset_of(b)) ++k;
  return k;
}

TamenessReport tameness_check(const Window& w, const PeripheralSystem& sys, const CutPool& pool) {
  TamenessReport r;
  r.R = w.radius;
  r.m = w.inner_radius;
  r.k = pool.k_max;
  r.threshold = std::max(2, w.radius - w.inner_radius);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    int s = split_count(pool.cuts[i], sys);
    if (s > r.split_count) {
      r.split_count = s;
      r.witness = static_cast<int>(i);
    }
  }
  r.tame = r.split_count < r.threshold;
  if (r.witness >= 0) r.witness_cut = pool.cuts[r.witness];
  if (r.tame) r.witness = -1;
  return r;
}

NotTameConfirmation confirm_not_tame(const InstanceMaker& make, int R, int k) {
  NotTameConfirmation c;
  {
    auto [w, sys] = make(R);
    c.at_R = tameness_check(w, sys, elliptic_pool(w, sys, k));
  }
  {
    auto [w, sys] = make(R + 2);
    c.at_R2 = tameness_check(w, sys, elliptic_pool(w, sys, k));
  }
  c.confirmed = !c.at_R.tame && !c.at_R2.tame && c.at_R2.split_count > c.at_R.split_count;
  return c;
}

std::string to_string(CoarseClass c) {
  switch (c) {
    case CoarseClass::Bounded: return "Bounded";
    case CoarseClass::Unbounded: return "Unbounded";
    case CoarseClass::Big: return "Big";
  }
  return "?";
}

std::vector<VertexSet> coarse_components(const Window& w, const VertexSet& H, int r) {
  if (r < 0) throw BadParams("r must be >= 0");
  std::vector<VertexSet> out;
  for (auto& c : components(w.graph, ball(w.graph, H, r))) out.push_back(c & H);
  return out;
}

CoarseClass coarse_class(const Window& w, const Peripheral& H, int r) {
  auto comps = coarse_components(w, H.members, r);
  if (comps.empty() || !w.has_frontier()) return CoarseClass::Bounded;
  auto E = escape_set(w, H);
  bool all_escape = true, all_many = true;
  for (auto& c : comps) {
    VertexSet X = H.escape ? (c & E) : c;
    if (!c.intersects(E)) all_escape = false;
    if (limit_size_class(w, X, w.inner_radius) != LimitSizeClass::Many) all_many = false;
  }
  if (all_many) return CoarseClass::Big;
  return all_escape ? CoarseClass::Unbounded : CoarseClass::Bounded;
}

MinimiseResult minimise(const Window& w, const PeripheralSystem& sys) {
  MinimiseResult out;
  out.sys.provenance = "minimised";
  for (auto& H : sys.items) {
    VertexSet X = H.escape ? *H.escape : H.members;
    try {
      auto c = limit_size_class(w, X, w.inner_radius);
      if (c == LimitSizeClass::Two || c == LimitSizeClass::Many)
        out.sys.items.push_back(H);
      else
        out.dropped.push_back(H.name);
    } catch (const StabilityError&) {
      out.sys.items.push_back(H);
      out.unstable.push_back(H.name);
    }
  }
  return out;
}

Distinction distinguishable(const Window& w, const PeripheralSystem& sys, int h1, int h2, const CutPool& pool) {
  if (h1 == h2) return {};
  EscapeModel m(w, sys);
  for (std::size_t c = 0; c < pool.size(); ++c) {
    const auto& b = pool.cuts[c];
    if ((m.meets(h1, b) && m.misses(h2, b)) || (m.meets(h2, b) && m.misses(h1, b)))
      return {true, static_cast<int>(c)};
  }
  return {};
}

ConsolidateResult consolidate(const Window& w, const PeripheralSystem& sys, const CutPool& pool) {
  const std::size_t P = sys.size();
  EscapeModel m(w, sys);
  std::vector<Bits> dist(P, Bits(P));
  Bits esc(P);
  for (std::size_t h = 0; h < P; ++h)
    if (m.escaping(static_cast<int>(h))) esc.set(h);
  for (auto& b : pool.cuts) {
    Bits A(P), B(P);
    for (auto h = esc.find_first(); h != Bits::npos; h = esc.find_next(h)) {
      if (m.meets(static_cast<int>(h), b)) A.set(h);
      if (m.misses(static_cast<int>(h), b)) B.set(h);
    }
    for (auto h = A.find_first(); h != Bits::npos; h = A.find_next(h)) dist[h] |= B;
  }
  for (std::size_t h = 0; h < P; ++h)
    for (auto g = dist[h].find_first(); g != Bits::npos; g = dist[h].find_next(g)) dist[g].set(h);

  std::vector<int> parent(P);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (auto h = esc.find_first(); h != Bits::npos; h = esc.find_next(h)) {
    Bits same = esc - dist[h];
    for (auto g = same.find_next(h); g != Bits::npos; g = same.find_next(g)) {
      int a = root(static_cast<int>(h)), b = root(static_cast<int>(g));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  ConsolidateResult out;
  out.sys.provenance = "consolidated";
  std::vector<int> slot(P, -1);
  for (std::size_t h = 0; h < P; ++h) {
    int r = esc.test(h) ? root(static_cast<int>(h)) : static_cast<int>(h);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.classes.size());
      out.classes.push_back({});
    }
    out.classes[slot[r]].push_back(static_cast<int>(h));
  }
  for (auto& cls : out.classes) {
    if (cls.size() == 1) {
      out.sys.items.push_back(sys.items[cls[0]]);
      continue;
    }
    Peripheral U;
    U.members = VertexSet(w.n());
    for (std::size_t i = 0; i < cls.size(); ++i) {
      U.members |= sys.items[cls[i]].members;
      U.name += (i ? "|" : "") + sys.items[cls[i]].name;
    }
    out.sys.items.push_back(std::move(U));
  }
  return out;
}

PeripheralSystem thicken(const Window& w, const PeripheralSystem& sys, int r) {
  if (r < 0) throw BadParams("r must be >= 0");
  PeripheralSystem out = sys;
  out.provenance = "thickened(" + std::to_string(r) + ")";
  for (auto& H : out.items) H.members = ball(w.graph, H.members, r);
  return out;
}

VertexSet separate_end_from_peripheral(const Window& w, const WindowEnd& omega, const Peripheral& H,
                                       const CutPool& pool) {
  auto ends = window_ends(w, w.inner_radius);
  auto profile = escape_profile(w, H);
  if (std::find(profile.begin(), profile.end(), omega.id) != profile.end())
    throw NoSeparator("end " + std::to_string(omega.id) + " lies in the limit of " + H.name);
  Bits remaining(ends.size());
  for (int e : profile) remaining.set(e);
  auto idx = index_ends(pool, ends);
  VertexSet b(w.n());
  b.set();
  while (remaining.any()) {
    int best = -1;
    std::size_t best_cover = 0, best_k = 0;
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if (!idx.inside[c].test(omega.id)) continue;
      std::size_t cover = (idx.outside[c] & remaining).count();
      std::size_t k = pool.cob[c].count();
      if (cover > best_cover || (cover == best_cover && cover > 0 && k < best_k)) {
        best = static_cast<int>(c);
        best_cover = cover;
        best_k = k;
      }
    }
    if (best < 0) throw NoSeparator("pool at k=" + std::to_string(pool.k_max) + " cannot isolate end " +
                                    std::to_string(omega.id) + " from " + H.name);
    b &= pool.cuts[best];
    remaining -= idx.outside[best];
  }
  if (profile.empty()) {
    // nothing to avoid: any pool cut holding omega will do
    for (std::size_t c = 0; c < pool.size(); ++c)
      if (idx.inside[c].test(omega.id)) return pool.cuts[c];
    throw NoSeparator("no pool cut contains end " + std::to_string(omega.id));
  }
  return b;
}

std::string to_string(PairVerdict v) {
  switch (v) {
    case PairVerdict::SeparatedByElliptic: return "SeparatedByElliptic";
    case PairVerdict::SharedPeripheral: return "SharedPeripheral";
    case PairVerdict::Unresolved: return "Unresolved";
  }
  return "?";
}

DichotomyReport dichotomy_check(const Window& w, const PeripheralSystem& sys, const CutPool& pool) {
  auto ends = window_ends(w, w.inner_radius);
  const std::size_t n = ends.size();
  std::vector<Bits> prof;
  for (auto& H : sys.items) {
    Bits p(n);
    for (int e : escape_profile(w, H)) p.set(e);
    prof.push_back(std::move(p));
  }
  auto idx = index_ends(pool, ends);
  std::vector<int> best(n * n, -1);
  for (std::size_t c = 0; c < pool.size(); ++c) {
    std::size_t k = pool.cob[c].count();
    for (auto i = idx.inside[c].find_first(); i != Bits::npos; i = idx.inside[c].find_next(i))
      for (auto j = idx.outside[c].find_first(); j != Bits::npos; j = idx.outside[c].find_next(j)) {
        auto a = std::min(i, j), b = std::max(i, j);
        int& slot = best[a * n + b];
        if (slot < 0 || pool.cob[slot].count() > k) slot = static_cast<int>(c);
      }
  }
  DichotomyReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      PairRecord r;
      r.e1 = static_cast<int>(i);
      r.e2 = static_cast<int>(j);
      r.witness = best[i * n + j];
      for (std::size_t h = 0; h < prof.size(); ++h)
        if (prof[h].test(i) && prof[h].test(j)) {
          r.peripheral = static_cast<int>(h);
          break;
        }
      r.both = r.witness >= 0 && r.peripheral >= 0;
      if (r.both) ++rep.violations;
      if (r.peripheral >= 0)
        r.verdict = PairVerdict::SharedPeripheral;
      else if (r.witness >= 0)
        r.verdict = PairVerdict::SeparatedByElliptic;
      rep.pairs.push_back(r);
    }
  return rep;
}

namespace {

PeripheralSystem from_groups(const Window& w, std::vector<std::pair<std::string, std::vector<int>>> groups) {
  PeripheralSystem sys;
  for (auto& [name, ids] : groups) sys.items.push_back({name, make_set(w.n(), ids), std::nullopt});
  return sys;
}

}  // namespace

PeripheralSystem coset_system(const Window& w) {
  if (w.family.tag != Family::Free) throw BadParams("coset recipe needs a free-group window");
  std::map<std::pair<int, std::string>, std::vector<int>> groups;
  for (int v = 0; v < w.n(); ++v) {
    std::string word = w.labels[v] == "1" ? "" : w.labels[v];
    for (int i = 0; i < w.family.param; ++i) {
      char s = static_cast<char>('a' + i), S = static_cast<char>('A' + i);
      std::string rep = word;
      while (!rep.empty() && (rep.back() == s || rep.back() == S)) rep.pop_back();
      groups[{i, rep}].push_back(v);
    }
  }
  std::vector<std::tuple<int, int, std::string, std::vector<int>>> rows;
  for (auto& [key, ids] : groups) {
    if (ids.size() < 2) continue;
    std::string name = (key.second.empty() ? "1" : key.second) + "<" + static_cast<char>('a' + key.first) + ">";
    rows.emplace_back(*std::min_element(ids.begin(), ids.end()), key.first, name, ids);
  }
  std::sort(rows.begin(), rows.end());
  std::vector<std::pair<std::string, std::vector<int>>> out;
  for (auto& [lo, gen, name, ids] : rows) out.emplace_back(name, ids);
  return from_groups(w, std::move(out));
}

PeripheralSystem level_system(const Window& w) {
  if (w.family.tag != Family::TreeWithEnd) throw BadParams("level recipe needs a tree_with_end window");
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < w.n(); ++v) groups[w.levels[v]].push_back(v);
  int top = w.vertex_of("^" + std::string(w.radius, 'u'));
  PeripheralSystem sys;
  for (auto& [lvl, ids] : groups) {
    Peripheral H{"L" + std::to_string(lvl), make_set(w.n(), ids), VertexSet(w.n())};
    H.escape->set(top);
    sys.items.push_back(std::move(H));
  }
  return sys;
}

PeripheralSystem line_system(const Window& w) {
  PeripheralSystem sys;
  sys.items.push_back({"V", VertexSet(w.n()).set(), std::nullopt});
  return sys;
}

PeripheralSystem row_system(const Window& w) {
  if (w.family.tag != Family::GridZ2) throw BadParams("row recipe needs a grid_Z2 window");
  std::map<long, std::vector<int>> groups;
  for (int v = 0; v < w.n(); ++v) {
    const auto& l = w.labels[v];
    groups[std::stol(l.substr(l.find(',') + 1))].push_back(v);
  }
  std::vector<std::pair<std::string, std::vector<int>>> out;
  for (auto& [y, ids] : groups) out.emplace_back("row" + std::to_string(y), ids);
  return from_groups(w, std::move(out));
}

PeripheralSystem recipe_system(const Window& w, const std::string& recipe) {
  if (recipe == "cosets") return coset_system(w);
  if (recipe == "levels") return level_system(w);
  if (recipe == "line") return line_system(w);
  if (recipe == "rows") return row_system(w);
  if (recipe == "none" || recipe.empty()) return {};
  throw BadParams("unknown recipe " + recipe);
}

}  // namespace cutlab
