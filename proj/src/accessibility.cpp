#include "cutlab/accessibility.hpp"

#include "cutlab/errors.hpp"

#include <algorithm>

namespace cutlab {

std::string to_string(AccessKind k) {
  switch (k) {
    case AccessKind::SeparatedElliptic: return "SeparatedElliptic";
    case AccessKind::SharedPeripheral: return "SharedPeripheral";
    case AccessKind::NotSeparableAtScale: return "NotSeparableAtScale";
  }
  return "?";
}

AccessProfile profile(const Window& w, const PeripheralSystem& sys, int k_max, const ProfileOptions& opts) {
  if (k_max < 1) throw BadParams("k_max must be >= 1");
  AccessProfile p;
  p.R = w.radius;
  p.m = w.inner_radius;
  p.k_max = k_max;
  p.thinness = thinness_report(w, sys);
  for (auto& H : sys.items) p.input_system.push_back(H.name);

  PeripheralSystem s1 = sys;
  if (opts.minimise) {
    auto mr = minimise(w, sys);
    s1 = std::move(mr.sys);
    p.dropped = std::move(mr.dropped);
    p.unstable = std::move(mr.unstable);
  }
  PeripheralSystem s2 = s1;
  if (opts.consolidate && s1.size() > 0) {
    EllipticLadder l1(w, s1, k_max, opts.depth, opts.search);
    s2 = consolidate(w, s1, l1.at(k_max)).sys;
  }
  for (auto& H : s2.items) p.normalized_system.push_back(H.name);

  auto ends = window_ends(w, w.inner_radius);
  const std::size_t n = ends.size();
  p.end_count = static_cast<int>(n);
  auto outer = annulus(w, std::min(w.inner_radius + 1, w.radius - 1));
  for (auto& e : ends)
    if (!e.shadow.intersects(outer)) p.excluded_ends.push_back(e.id);
  Bits excluded(n);
  for (int e : p.excluded_ends) excluded.set(e);

  std::vector<Bits> prof;
  std::vector<std::string> names;
  for (auto& H : s2.items) {
    Bits b(n);
    for (int e : escape_profile(w, H)) b.set(e);
    prof.push_back(std::move(b));
    names.push_back(H.name);
  }

  std::vector<int> sep_k(n * n, 0);
  std::vector<VertexSet> sep_w(n * n);
  EllipticLadder l2(w, s2, k_max, opts.depth, opts.search);
  for (int k = 1; k <= k_max; ++k) {
    const CutPool& pool = l2.at(k);
    auto idx = index_ends(pool, ends);
    for (std::size_t c = 0; c < pool.size(); ++c) {
      int ck = static_cast<int>(pool.cob[c].count());
      for (auto i = idx.inside[c].find_first(); i != Bits::npos; i = idx.inside[c].find_next(i))
        for (auto j = idx.outside[c].find_first(); j != Bits::npos; j = idx.outside[c].find_next(j)) {
          std::size_t a = std::min(i, j), b = std::max(i, j);
          auto& slot = sep_k[a * n + b];
          if (slot == 0) {
            slot = k;
            sep_w[a * n + b] = pool.cuts[c];
          } else if (slot == k && ck < coboundary_size(w.graph, sep_w[a * n + b])) {
            sep_w[a * n + b] = pool.cuts[c];
          }
        }
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (excluded.test(i) || excluded.test(j)) continue;
      PairProfile r;
      r.e1 = static_cast<int>(i);
      r.e2 = static_cast<int>(j);
      int shared = -1;
      for (std::size_t h = 0; h < prof.size(); ++h)
        if (prof[h].test(i) && prof[h].test(j)) {
          shared = static_cast<int>(h);
          break;
        }
      int k = sep_k[i * n + j];
      if (shared >= 0 && k > 0) ++p.xor_violations;
      if (shared >= 0) {
        r.kind = AccessKind::SharedPeripheral;
        r.peripheral = names[shared];
      } else if (k > 0) {
        r.kind = AccessKind::SeparatedElliptic;
        r.k = k;
        r.witness = to_ids(sep_w[i * n + j]);
        p.K = std::max(p.K, k);
      }
      p.pairs.push_back(std::move(r));
    }
  return p;
}

EasyCaseReport easy_case_check(const Window& w, const PeripheralSystem& sys, const std::vector<VertexSet>& genset) {
  EscapeModel model(w, sys);
  for (auto& b : genset)
    if (model.violation(b) >= 0) throw NotElliptic("generator is not elliptic");
  EasyCaseReport rep;
  if (genset.empty()) return rep;
  auto ends = window_ends(w, w.inner_radius);
  const std::size_t n = ends.size(), G = genset.size();

  // side of each end under each generator; split ends never count as separated
  std::vector<std::vector<int>> side(G, std::vector<int>(n));
  for (std::size_t g = 0; g < G; ++g)
    for (std::size_t e = 0; e < n; ++e) {
      auto s = end_side(genset[g], ends[e].shadow);
      side[g][e] = s == EndSide::Inside ? 1 : (s == EndSide::Outside ? 0 : -1);
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int best = -1;
      for (std::size_t g = 0; g < G; ++g)
        if (side[g][i] >= 0 && side[g][j] >= 0 && side[g][i] != side[g][j]) {
          int k = coboundary_size(w.graph, genset[g]);
          if (best < 0 || k < best) best = k;
        }
      bool combo = best >= 0;
      if (!combo && G <= 12) {
        for (std::uint64_t mask = 1; mask < (1ULL << G) && !combo; ++mask) {
          VertexSet s(w.n());
          for (std::size_t g = 0; g < G; ++g)
            if ((mask >> g) & 1) s ^= genset[g];
          auto a = end_side(s, ends[i].shadow), b = end_side(s, ends[j].shadow);
          combo = a != EndSide::Split && b != EndSide::Split && a != b;
        }
      }
      if (!combo) continue;
      ++rep.pairs_separated;
      if (best < 0) {
        ++rep.failures;
        rep.holds = false;
      } else {
        rep.K = std::max(rep.K, best);
      }
    }
  return rep;
}

StabilityTable stability_sweep(const FamilySpec& family, const std::string& recipe, const std::vector<int>& radii,
                               int k_max, const ProfileOptions& opts) {
  StabilityTable t;
  for (int R : radii) {
    Window w = cayley_window(family, R);
    auto sys = recipe_system(w, recipe);
    auto p = profile(w, sys, k_max, opts);
    SweepRow row;
    row.R = R;
    row.K = p.K;
    for (auto& pr : p.pairs) {
      if (pr.kind == AccessKind::SeparatedElliptic) ++row.separated;
      if (pr.kind == AccessKind::SharedPeripheral) ++row.shared;
      if (pr.kind == AccessKind::NotSeparableAtScale) ++row.unresolved;
    }
    if (!t.rows.empty()) {
      if (row.K < t.rows.back().K) t.non_monotone = true;
      if (row.K > t.rows.back().K) t.growing = true;
    }
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace cutlab
