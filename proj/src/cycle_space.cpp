#include "cutlab/cycle_space.hpp"

#include "cutlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace cutlab {

bool is_cycle_vector(const Graph& g, const EdgeSet& C) {
  if (C.size() != static_cast<std::size_t>(g.edge_count())) return false;
  std::vector<int> deg(g.n, 0);
  for (auto e = C.find_first(); e != Bits::npos; e = C.find_next(e)) {
    ++deg[g.edges[e].first];
    ++deg[g.edges[e].second];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

namespace {

struct Forest {
  std::vector<int> parent, parent_edge, depth;
  EdgeSet tree;
};

Forest bfs_forest(const Graph& g) {
  Forest f;
  f.parent.assign(g.n, -1);
  f.parent_edge.assign(g.n, -1);
  f.depth.assign(g.n, -1);
  f.tree = EdgeSet(g.edge_count());
  for (int s = 0; s < g.n; ++s) {
    if (f.depth[s] >= 0) continue;
    f.depth[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (std::size_t i = 0; i < g.adj[x].size(); ++i) {
        int y = g.adj[x][i];
        if (f.depth[y] >= 0) continue;
        f.depth[y] = f.depth[x] + 1;
        f.parent[y] = x;
        f.parent_edge[y] = g.adj_edge[x][i];
        f.tree.set(g.adj_edge[x][i]);
        q.push_back(y);
      }
    }
  }
  return f;
}

EdgeSet fundamental(const Graph& g, const Forest& f, int e) {
  EdgeSet c(g.edge_count());
  c.set(e);
  int u = g.edges[e].first, v = g.edges[e].second;
  while (u != v) {
    if (f.depth[u] < f.depth[v]) std::swap(u, v);
    c.flip(f.parent_edge[u]);
    u = f.parent[u];
  }
  return c;
}

}  // namespace

std::vector<EdgeSet> cycle_basis(const Graph& g) {
  auto f = bfs_forest(g);
  std::vector<EdgeSet> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!f.tree.test(e)) out.push_back(fundamental(g, f, e));
  return out;
}

std::vector<EdgeSet> fundamental_decomposition(const Graph& g, const EdgeSet& C) {
  if (!is_cycle_vector(g, C)) throw PreconditionError("not a cycle vector");
  auto f = bfs_forest(g);
  std::vector<EdgeSet> out;
  for (auto e = C.find_first(); e != Bits::npos; e = C.find_next(e))
    if (!f.tree.test(e)) out.push_back(fundamental(g, f, static_cast<int>(e)));
  return out;
}

bool algebraic_generates(const std::vector<EdgeSet>& S, const Graph& g) {
  Gf2Basis b(g.edge_count());
  for (auto& s : S) b.insert(s);
  for (auto& c : cycle_basis(g))
    if (!b.contains(c)) return false;
  return true;
}

DaggerResult dagger_check(const std::vector<EdgeSet>& S, const EdgeSet& C, const EdgeSet& U) {
  Gf2Basis b(U.size(), true);
  for (auto& s : S) b.insert(s & U);
  DaggerResult r;
  if (auto combo = b.combination(C & U)) {
    r.holds = true;
    r.certificate = *combo;
  }
  return r;
}

std::vector<EdgeSet> short_cycles(const Graph& g, int max_len) {
  std::vector<EdgeSet> out;
  std::vector<int> path, path_edges;
  VertexSet on_path(g.n);
  for (int s = 0; s < g.n; ++s) {
    // distances back to s inside the vertices >= s
    std::vector<int> d(g.n, -1);
    d[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      if (d[x] >= max_len) continue;
      for (int y : g.adj[x])
        if (y > s && d[y] < 0) {
          d[y] = d[x] + 1;
          q.push_back(y);
        }
    }
    path = {s};
    path_edges.clear();
    on_path.set(s);
    std::function<void(int)> dfs = [&](int x) {
      int len = static_cast<int>(path_edges.size());
      for (std::size_t i = 0; i < g.adj[x].size(); ++i) {
        int y = g.adj[x][i], e = g.adj_edge[x][i];
        if (y == s) {
          if (len + 1 >= 3 && len + 1 <= max_len && path[1] < x) {
            EdgeSet c(g.edge_count());
            for (int pe : path_edges) c.set(pe);
            c.set(e);
            out.push_back(std::move(c));
          }
          continue;
        }
        if (y < s || on_path.test(y) || d[y] < 0 || len + 1 + d[y] > max_len) continue;
        on_path.set(y);
        path.push_back(y);
        path_edges.push_back(e);
        dfs(y);
        path_edges.pop_back();
        path.pop_back();
        on_path.reset(y);
      }
    };
    dfs(s);
    on_path.reset(s);
  }
  return out;
}

ConeCycleWitness cone_cycle_tameness_witness(const ConeOff& cone, const std::vector<EdgeSet>& S) {
  ConeCycleWitness w;
  const Graph& cg = cone.window.graph;
  const Graph& g = cone.base->graph;
  for (auto& s : S) w.ell = std::max(w.ell, static_cast<int>(s.count()));
  w.r = std::max(0, (w.ell - 1) / 2);
  for (std::size_t h = 0; h < cone.sys->size(); ++h) {
    const auto& H = cone.sys->items[h];
    auto comps = coarse_components(*cone.base, H.members, w.r);
    if (comps.size() < 2) continue;
    int vh = cone.cone_vertex(static_cast<int>(h));
    int x = static_cast<int>(comps[0].find_first());
    auto dist = bfs_dist(g, x);
    for (std::size_t j = 1; j < comps.size(); ++j) {
      int y = static_cast<int>(comps[j].find_first());
      if (dist[y] < 0) continue;
      EdgeSet C(cg.edge_count());
      C.set(cg.edge_id(vh, x));
      C.set(cg.edge_id(vh, y));
      // walk back from y along decreasing distance
      for (int z = y; z != x;) {
        for (int u : g.adj[z])
          if (dist[u] == dist[z] - 1) {
            C.set(cg.edge_id(u, z));
            z = u;
            break;
          }
      }
      EdgeSet U(cg.edge_count());
      for (int z : to_ids(comps[0])) U.set(cg.edge_id(vh, z));
      if (!dagger_check(S, C, U).holds) {
        w.tame = false;
        w.peripheral = static_cast<int>(h);
        w.x = x;
        w.y = y;
        w.cycle = C;
        w.window_edges = U;
        return w;
      }
    }
  }
  return w;
}

std::vector<int> hamann_chain(const std::vector<VertexSet>& En, const VertexSet& b, const VertexSet& X) {
  if (std::find(En.begin(), En.end(), b) == En.end()) throw PreconditionError("b is not in the pool");
  VertexSet bx = b & X;
  if (bx.none() || bx == X) throw PreconditionError("b does not split X");
  std::vector<int> chain;
  for (std::size_t i = 0; i < En.size(); ++i)
    if ((En[i] & X) == bx) chain.push_back(static_cast<int>(i));
  std::sort(chain.begin(), chain.end(), [&](int a, int c) {
    if (En[a].count() != En[c].count()) return En[a].count() < En[c].count();
    return a < c;
  });
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      if (!En[chain[i]].is_subset_of(En[chain[j]])) throw ChainViolation(chain[i], chain[j]);
  return chain;
}

AlternatingSequence alternating_sequence(const Graph& g, const EdgeSet& C, const VertexSet& b,
                                         const std::vector<EdgeSet>& A) {
  EdgeSet db = coboundary(g, b);
  EdgeSet hit = C & db;
  if (hit.count() != 2) throw PreconditionError("cycle must cross the cut exactly twice");
  EdgeSet sum(g.edge_count());
  for (auto& a : A) sum ^= a;
  if (sum != C) throw PreconditionError("cycles do not sum to C");
  int e = static_cast<int>(hit.find_first()), f = static_cast<int>(hit.find_next(e));

  std::vector<std::vector<int>> cycles_at(g.edge_count());
  for (std::size_t i = 0; i < A.size(); ++i) {
    EdgeSet x = A[i] & db;
    for (auto z = x.find_first(); z != Bits::npos; z = x.find_next(z)) cycles_at[z].push_back(static_cast<int>(i));
  }
  std::vector<int> prev_edge(g.edge_count(), -2), via(g.edge_count(), -1);
  std::vector<bool> used(A.size(), false);
  prev_edge[e] = -1;
  std::deque<int> q{e};
  while (!q.empty() && prev_edge[f] == -2) {
    int z = q.front();
    q.pop_front();
    for (int i : cycles_at[z]) {
      if (used[i]) continue;
      used[i] = true;
      EdgeSet x = A[i] & db;
      for (auto t = x.find_first(); t != Bits::npos; t = x.find_next(t))
        if (prev_edge[t] == -2) {
          prev_edge[t] = z;
          via[t] = i;
          q.push_back(static_cast<int>(t));
        }
    }
  }
  if (prev_edge[f] == -2) throw NoSequence("no alternating sequence between the two crossing edges");
  AlternatingSequence s;
  for (int z = f; z != -1; z = prev_edge[z]) {
    s.edges.push_back(z);
    if (via[z] >= 0) s.cycles.push_back(via[z]);
  }
  std::reverse(s.edges.begin(), s.edges.end());
  std::reverse(s.cycles.begin(), s.cycles.end());
  return s;
}

}  // namespace cutlab
