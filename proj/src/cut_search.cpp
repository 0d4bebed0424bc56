#include "cutlab/cut_search.hpp"

#include "cutlab/errors.hpp"

#include <boost/functional/hash.hpp>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boykov_kolmogorov_max_flow.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <thread>
#include <unordered_set>

namespace cutlab {

std::size_t bits_hash(const Bits& b) {
  std::size_t h = b.size();
  std::vector<std::uint64_t> blocks;
  blocks.reserve(b.num_blocks());
  boost::to_block_range(b, std::back_inserter(blocks));
  for (auto x : blocks) boost::hash_combine(h, x);
  return h;
}

void CutPool::finalize() {
  std::sort(cuts.begin(), cuts.end(), [](const Bits& a, const Bits& b) { return lex_less(a, b); });
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cob.clear();
  edge_index.assign(w ? w->graph.edge_count() : 0, {});
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    cob.push_back(coboundary(w->graph, cuts[i]));
    for (auto e = cob.back().find_first(); e != Bits::npos; e = cob.back().find_next(e))
      edge_index[e].push_back(static_cast<int>(i));
  }
}

int CutPool::find(const VertexSet& side) const {
  auto it = std::lower_bound(cuts.begin(), cuts.end(), side, [](const Bits& a, const Bits& b) { return lex_less(a, b); });
  if (it == cuts.end() || *it != side) return -1;
  return static_cast<int>(it - cuts.begin());
}

long long default_budget() {
  if (const char* s = std::getenv("CUTLAB_BUDGET")) {
    try {
      return std::stoll(s);
    } catch (...) {
    }
  }
  return 10'000'000LL;
}

namespace {

EdgeSet uncuttable_edges(const Window& w) {
  const Graph& g = w.graph;
  EdgeSet bad(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i)
    if (w.frontier.test(g.edges[i].first) || w.frontier.test(g.edges[i].second)) bad.set(i);
  return bad;
}

class BondSearch {
 public:
  BondSearch(const Window& w, int k, std::atomic<long long>& calls, long long budget)
      : w_(w), g_(w.graph), k_(k), calls_(calls), budget_(budget), bad_(uncuttable_edges(w)) {}

  void run(int anchor, bool explicit_anchor) {
    if (bad_.test(anchor)) return;
    anchor_ = anchor;
    explicit_ = explicit_anchor;
    EdgeSet removed(g_.edge_count()), forbidden(g_.edge_count());
    removed.set(anchor);
    std::vector<int> r{anchor};
    recurse(r, removed, forbidden);
  }

  std::vector<VertexSet> found;

 private:
  void recurse(std::vector<int>& r, EdgeSet& removed, EdgeSet& forbidden) {
    if (calls_.fetch_add(1, std::memory_order_relaxed) >= budget_)
      throw BudgetExceeded("tight-cut search exceeded " + std::to_string(budget_) + " expansions");
    auto [u, v] = g_.edges[anchor_];
    std::vector<int> parent_edge(g_.n, -1);
    VertexSet seen(g_.n);
    std::deque<int> q{u};
    seen.set(u);
    while (!q.empty() && !seen.test(v)) {
      int x = q.front();
      q.pop_front();
      for (std::size_t i = 0; i < g_.adj[x].size(); ++i) {
        int e = g_.adj_edge[x][i], y = g_.adj[x][i];
        if (removed.test(e) || seen.test(y)) continue;
        seen.set(y);
        parent_edge[y] = e;
        q.push_back(y);
      }
    }
    if (!seen.test(v)) {
      // seen is a superset of the partial BFS; finish it to get the component of u
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (std::size_t i = 0; i < g_.adj[x].size(); ++i) {
          int e = g_.adj_edge[x][i], y = g_.adj[x][i];
          if (removed.test(e) || seen.test(y)) continue;
          seen.set(y);
          q.push_back(y);
        }
      }
      for (int e : r) {
        auto [a, b] = g_.edges[e];
        if (seen.test(a) == seen.test(b)) return;
      }
      VertexSet rest = ~seen;
      if (!is_connected(g_, rest)) return;
      found.push_back(seen);
      found.push_back(std::move(rest));
      return;
    }
    if (static_cast<int>(r.size()) >= k_) return;
    std::vector<int> path;
    for (int x = v; x != u;) {
      int e = parent_edge[x];
      path.push_back(e);
      x = g_.edges[e].first == x ? g_.edges[e].second : g_.edges[e].first;
    }
    std::reverse(path.begin(), path.end());
    std::vector<int> newly_forbidden;
    for (int e : path) {
      if (!forbidden.test(e) && !bad_.test(e) && (explicit_ || e > anchor_)) {
        removed.set(e);
        r.push_back(e);
        recurse(r, removed, forbidden);
        r.pop_back();
        removed.reset(e);
      }
      if (!forbidden.test(e)) {
        forbidden.set(e);
        newly_forbidden.push_back(e);
      }
    }
    for (int e : newly_forbidden) forbidden.reset(e);
  }

  const Window& w_;
  const Graph& g_;
  int k_;
  std::atomic<long long>& calls_;
  long long budget_;
  EdgeSet bad_;
  int anchor_ = 0;
  bool explicit_ = false;
};

}  // namespace

CutPool enumerate_tight_cuts(const Window& w, int k, std::optional<int> anchor_edge, const SearchOptions& opts) {
  if (k < 1) throw BadParams("k must be >= 1");
  const Graph& g = w.graph;
  CutPool pool;
  pool.k_max = k;
  pool.w = &w;
  if (anchor_edge && (*anchor_edge < 0 || *anchor_edge >= g.edge_count())) throw DanglingId("anchor edge");
  if (g.n < 2) {
    pool.finalize();
    return pool;
  }
  auto comps = components(g, VertexSet(g.n).set());
  if (comps.size() >= 2) {
    if (comps.size() == 2 && !anchor_edge) {
      pool.cuts.push_back(comps[0]);
      pool.cuts.push_back(comps[1]);
    }
    pool.finalize();
    return pool;
  }

  std::atomic<long long> calls{0};
  if (anchor_edge) {
    BondSearch s(w, k, calls, opts.budget);
    s.run(*anchor_edge, true);
    pool.cuts = std::move(s.found);
  } else {
    int workers = std::max(1, opts.workers);
    std::vector<std::vector<VertexSet>> parts(workers);
    std::vector<std::exception_ptr> errs(workers);
    auto job = [&](int t) {
      try {
        BondSearch s(w, k, calls, opts.budget);
        for (int e = t; e < g.edge_count(); e += workers) s.run(e, false);
        parts[t] = std::move(s.found);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    };
    if (workers == 1) {
      job(0);
    } else {
      std::vector<std::thread> ts;
      for (int t = 0; t < workers; ++t) ts.emplace_back(job, t);
      for (auto& t : ts) t.join();
    }
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
    for (auto& p : parts)
      for (auto& c : p) pool.cuts.push_back(std::move(c));
  }
  pool.finalize();
  return pool;
}

CutPool close_pool(const Window& w, const CutPool& base, int k, int depth, const CutFilter& keep) {
  const Graph& g = w.graph;
  CutPool out;
  out.k_max = k;
  out.w = &w;
  std::unordered_set<Bits, BitsHash> seen;
  std::vector<std::pair<VertexSet, EdgeSet>> frontier_level;

  auto consider = [&](VertexSet x, EdgeSet dx) {
    if (static_cast<int>(dx.count()) > k || x.none() || x.all()) return;
    if (!seen.insert(canonical(x)).second) return;
    if (keep(x, dx)) {
      out.cuts.push_back(x);
      out.cuts.push_back(~x);
    }
    if (depth > 2) frontier_level.emplace_back(std::move(x), std::move(dx));
  };
  auto meet_cob = [&](const VertexSet& t, const EdgeSet& da, const EdgeSet& db) {
    EdgeSet u = da | db;
    EdgeSet d(g.edge_count());
    for (auto e = u.find_first(); e != Bits::npos; e = u.find_next(e))
      if (t.test(g.edges[e].first) != t.test(g.edges[e].second)) d.set(e);
    return d;
  };

  std::vector<EdgeSet> bcob = base.cob;
  if (bcob.size() != base.cuts.size())
    for (auto& c : base.cuts) bcob.push_back(coboundary(g, c));
  for (std::size_t i = 0; i < base.cuts.size(); ++i) consider(base.cuts[i], bcob[i]);
  if (depth >= 2) {
    frontier_level.clear();
    for (std::size_t i = 0; i < base.cuts.size(); ++i)
      for (std::size_t j = i + 1; j < base.cuts.size(); ++j) {
        const auto& a = base.cuts[i];
        const auto& b = base.cuts[j];
        consider(a ^ b, bcob[i] ^ bcob[j]);
        VertexSet t = a & b;
        consider(t, meet_cob(t, bcob[i], bcob[j]));
      }
  }
  for (int d = 3; d <= depth; ++d) {
    auto prev = std::move(frontier_level);
    frontier_level.clear();
    for (auto& [x, dx] : prev) {
      VertexSet xs = ~x;
      for (std::size_t j = 0; j < base.cuts.size(); ++j) {
        const auto& b = base.cuts[j];
        consider(x ^ b, dx ^ bcob[j]);
        VertexSet t = x & b;
        consider(t, meet_cob(t, dx, bcob[j]));
        VertexSet ts = xs & b;
        consider(ts, meet_cob(ts, dx, bcob[j]));
      }
    }
  }
  out.finalize();
  return out;
}

std::optional<int> min_separating_coboundary(const Window& w, const WindowEnd& e1, const WindowEnd& e2) {
  using namespace boost;
  using Traits = adjacency_list_traits<vecS, vecS, directedS>;
  using FlowGraph =
      adjacency_list<vecS, vecS, directedS,
                     property<vertex_name_t, std::string,
                              property<vertex_index_t, long,
                                       property<vertex_color_t, default_color_type,
                                                property<vertex_distance_t, long,
                                                         property<vertex_predecessor_t, Traits::edge_descriptor>>>>>,
                     property<edge_capacity_t, long,
                              property<edge_residual_capacity_t, long, property<edge_reverse_t, Traits::edge_descriptor>>>>;

  if (e1.shadow.intersects(e2.shadow)) throw BadParams("ends must be distinct");
  const Graph& g = w.graph;
  const long inf = g.edge_count() + 1;
  FlowGraph fg(g.n + 2);
  auto cap = get(edge_capacity, fg);
  auto rev = get(edge_reverse, fg);
  auto add = [&](int a, int b, long c) {
    auto x = add_edge(a, b, fg).first;
    auto y = add_edge(b, a, fg).first;
    cap[x] = c;
    cap[y] = 0;
    rev[x] = y;
    rev[y] = x;
  };
  for (auto [u, v] : g.edges) {
    long c = (w.frontier.test(u) || w.frontier.test(v)) ? inf : 1;
    add(u, v, c);
    add(v, u, c);
  }
  int s = g.n, t = g.n + 1;
  for (int v : to_ids(e1.shadow)) add(s, v, inf);
  for (int v : to_ids(e2.shadow)) add(v, t, inf);
  long f = boykov_kolmogorov_max_flow(fg, s, t);
  if (f >= inf) return std::nullopt;
  return static_cast<int>(f);
}

EndIndex index_ends(const CutPool& pool, const std::vector<WindowEnd>& ends) {
  EndIndex idx;
  idx.inside.assign(pool.size(), Bits(ends.size()));
  idx.outside.assign(pool.size(), Bits(ends.size()));
  for (std::size_t c = 0; c < pool.size(); ++c)
    for (std::size_t e = 0; e < ends.size(); ++e) {
      auto s = end_side(pool.cuts[c], ends[e].shadow);
      if (s == EndSide::Inside) idx.inside[c].set(e);
      if (s == EndSide::Outside) idx.outside[c].set(e);
    }
  return idx;
}

int find_separator(const CutPool& pool, const EndIndex& idx, int i, int j) {
  int best = -1;
  std::size_t best_k = 0;
  for (std::size_t c = 0; c < pool.size(); ++c) {
    bool sep = (idx.inside[c].test(i) && idx.outside[c].test(j)) || (idx.inside[c].test(j) && idx.outside[c].test(i));
    if (!sep) continue;
    std::size_t k = pool.cob[c].count();
    if (best < 0 || k < best_k) {
      best = static_cast<int>(c);
      best_k = k;
    }
  }
  return best;
}

SweepResult min_separating_coboundary(const Window& w, const WindowEnd& e1, const WindowEnd& e2,
                                      const std::function<const CutPool&(int)>& pool_at, int k_max) {
  (void)w;
  for (int k = 1; k <= k_max; ++k) {
    const CutPool& pool = pool_at(k);
    int best = -1;
    std::size_t best_k = 0;
    for (std::size_t c = 0; c < pool.size(); ++c) {
      auto s1 = end_side(pool.cuts[c], e1.shadow);
      auto s2 = end_side(pool.cuts[c], e2.shadow);
      if (s1 == EndSide::Split || s2 == EndSide::Split || s1 == s2) continue;
      if (best < 0 || pool.cob[c].count() < best_k) {
        best = static_cast<int>(c);
        best_k = pool.cob[c].count();
      }
    }
    if (best >= 0) return {static_cast<int>(best_k), pool.cuts[best]};
  }
  throw KMaxExhausted(k_max);
}

namespace {

struct Candidate {
  VertexSet side;
  int cob = 0;
  std::size_t small = 0;
};

class NestedSearch {
 public:
  NestedSearch(const std::vector<Candidate>& cands, std::size_t target, long long budget)
      : c_(cands), target_(target), budget_(budget) {}

  bool run(std::vector<int>& chosen, const Gf2Basis& basis) { return dfs(0, chosen, basis); }

 private:
  bool dfs(std::size_t i, std::vector<int>& chosen, const Gf2Basis& basis) {
    if (basis.rank() == target_) return true;
    if (i >= c_.size()) return false;
    if (++calls_ > budget_) return false;
    if (basis.rank() + 2 * (c_.size() - i) < target_) return false;
    const auto& x = c_[i].side;
    bool ok = true;
    for (int j : chosen)
      if (!is_nested(x, c_[j].side)) {
        ok = false;
        break;
      }
    if (ok && !(basis.contains(x) && basis.contains(~x))) {
      Gf2Basis b2 = basis;
      b2.insert(x);
      b2.insert(~x);
      chosen.push_back(static_cast<int>(i));
      if (dfs(i + 1, chosen, b2)) return true;
      chosen.pop_back();
    }
    return dfs(i + 1, chosen, basis);
  }

  const std::vector<Candidate>& c_;
  std::size_t target_;
  long long budget_;
  long long calls_ = 0;
};

}  // namespace

NestedGenSet nested_generating_set(const Window& w, int n, const SearchOptions& opts) {
  if (n < 1) throw BadParams("n must be >= 1");
  const Graph& g = w.graph;
  auto pool = enumerate_tight_cuts(w, n, std::nullopt, opts);

  std::unordered_set<Bits, BitsHash> seen;
  std::vector<Candidate> cands;
  auto add = [&](const VertexSet& s) {
    if (!seen.insert(canonical(s)).second) return;
    Candidate c;
    c.side = canonical(s);
    c.cob = coboundary_size(g, s);
    c.small = std::min(s.count(), s.size() - s.count());
    cands.push_back(std::move(c));
  };
  for (auto& comp : components(g, VertexSet(g.n).set())) add(comp);
  for (auto& c : pool.cuts) add(c);
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.cob != b.cob) return a.cob < b.cob;
    if (a.small != b.small) return a.small < b.small;
    return lex_less(a.side, b.side);
  });

  Gf2Basis full(g.n);
  for (auto& c : cands) {
    full.insert(c.side);
    full.insert(~c.side);
  }
  NestedGenSet out;
  out.target = full.rank();

  Gf2Basis basis(g.n);
  std::vector<int> chosen;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const auto& x = cands[i].side;
    if (basis.contains(x) && basis.contains(~x)) continue;
    bool ok = true;
    for (int j : chosen)
      if (!is_nested(x, cands[j].side)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    basis.insert(x);
    basis.insert(~x);
    chosen.push_back(static_cast<int>(i));
  }
  if (basis.rank() < out.target) {
    std::vector<int> alt;
    NestedSearch s(cands, out.target, std::max(1LL, opts.budget / 10));
    if (!s.run(alt, Gf2Basis(g.n))) throw IncompleteNestedSet(basis.rank(), out.target);
    chosen = alt;
    basis = Gf2Basis(g.n);
    for (int j : chosen) {
      basis.insert(cands[j].side);
      basis.insert(~cands[j].side);
    }
  }
  out.rank = basis.rank();
  for (int j : chosen) {
    out.family.push_back(cands[j].side);
    out.family.push_back(~cands[j].side);
  }
  std::sort(out.family.begin(), out.family.end(), [](const Bits& a, const Bits& b) { return lex_less(a, b); });
  return out;
}

}  // namespace cutlab
