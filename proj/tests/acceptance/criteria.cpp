#include "acceptance/criteria.hpp"

#include "cutlab/accessibility.hpp"
#include "cutlab/cycle_space.hpp"
#include "cutlab/errors.hpp"
#include "cutlab/io.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

namespace acceptance {

using namespace cutlab;

namespace {

struct Context {
  std::uint64_t seed;
  std::optional<std::vector<bundle::Instance>> tame;
  std::string tame_summary;
};

std::string str(const std::ostringstream& os) { return os.str(); }

// Tame members of the bundled corpus, judged on the raw elliptic pool at k = 3.
const std::vector<bundle::Instance>& tame_corpus(Context& ctx) {
  if (ctx.tame) return *ctx.tame;
  ctx.tame.emplace();
  int rejected = 0;
  for (auto& in : bundle::candidates()) {
    EllipticLadder ladder(*in.w, in.sys, 3);
    if (tameness_check(*in.w, in.sys, ladder.at(3)).tame)
      ctx.tame->push_back(std::move(in));
    else
      ++rejected;
  }
  ctx.tame_summary = std::to_string(ctx.tame->size()) + " tame, " + std::to_string(rejected) + " rejected";
  return *ctx.tame;
}

Result c1(Context& ctx) {
  Result r{1, "tight-cut oracle"};
  std::mt19937_64 rng(ctx.seed + 1);
  int cases = 0, mismatches = 0, windows = 0;
  std::size_t cuts = 0;
  std::string first;
  for (int i = 0; i < 240; ++i) {
    int n = std::uniform_int_distribution<int>(2, 14)(rng);
    double p = std::uniform_real_distribution<double>(0.1, 0.5)(rng);
    int k = std::uniform_int_distribution<int>(1, 4)(rng);
    Graph g = i % 3 == 0 ? oracle::random_graph(rng, n, p) : oracle::random_connected_graph(rng, n, p / 2);
    Window w;
    auto d = bfs_dist(g, 0);
    int ecc = *std::max_element(d.begin(), d.end());
    bool connected = std::find(d.begin(), d.end(), -1) == d.end();
    if (i % 4 == 3 && connected && ecc >= 2) {
      w = window_from_graph(std::move(g), 0, ecc);
      ++windows;
    } else {
      w = finite_window(std::move(g));
    }
    auto pool = enumerate_tight_cuts(w, k);
    auto ref = oracle::tight_cuts(w, k);
    ++cases;
    cuts += ref.size();
    if (pool.cuts != ref) {
      if (!mismatches++) first = "case " + std::to_string(i);
    }
  }
  r.pass = cases >= 200 && mismatches == 0;
  r.detail = std::to_string(cases) + " graphs (" + std::to_string(windows) + " with frontier), " +
             std::to_string(cuts) + " cuts, " + std::to_string(mismatches) + " mismatches" +
             (first.empty() ? "" : ", first at " + first);
  return r;
}

Result c2(Context&) {
  Result r{2, "free(2) cosets: no tight elliptic cut with one edge"};
  auto in = bundle::coset_instance(6);
  const Window& w = *in.w;
  EllipticLadder ladder(w, in.sys, 3);
  int tight1 = 0;
  for (auto& b : ladder.at(1).cuts) tight1 += is_tight(w.graph, b);
  auto ends = window_ends(w, w.inner_radius);
  std::vector<Bits> meets(ends.size(), Bits(in.sys.size()));
  for (std::size_t e = 0; e < ends.size(); ++e)
    for (std::size_t h = 0; h < in.sys.size(); ++h)
      if (escape_set(w, in.sys.items[h]).intersects(ends[e].shadow)) meets[e].set(h);
  std::map<int, EndIndex> idx;
  for (int k = 1; k <= 3; ++k) idx[k] = index_ends(ladder.at(k), ends);
  std::map<int, int> hist;
  int pairs = 0;
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (meets[i].intersects(meets[j])) continue;
      ++pairs;
      int found = 0;
      for (int k = 1; k <= 3 && !found; ++k)
        if (find_separator(ladder.at(k), idx[k], static_cast<int>(i), static_cast<int>(j)) >= 0) found = k;
      ++hist[found];
    }
  std::ostringstream os;
  os << "tight cuts in k=1 elliptic pool: " << tight1 << "; " << pairs << " end pairs without a shared coset, min k:";
  for (auto [k, c] : hist) os << " " << (k ? std::to_string(k) : "none") << "x" << c;
  r.pass = tight1 == 0 && pairs > 0 && hist.size() == 1 && hist.count(2);
  r.detail = str(os);
  return r;
}

Result c3(Context&) {
  Result r{3, "tree_with_end(3) levels: thin, not tame, consolidates to one peripheral"};
  std::ostringstream os;
  bool ok = true;
  int prev_split = -1;
  for (int R : {6, 8}) {
    auto in = bundle::levels_instance(R);
    const Window& w = *in.w;
    int thin = thinness_report(w, in.sys);
    EllipticLadder ladder(w, in.sys, 2);
    auto tr = tameness_check(w, in.sys, ladder.at(2));
    auto cons = consolidate(w, in.sys, ladder.at(2));
    VertexSet half(w.n());
    for (int v = 0; v < w.n(); ++v)
      if (w.labels[v].find('u') == std::string::npos) half.set(v);
    bool raised = false;
    auto cone = build_cone_off(w, in.sys);
    try {
      lift(cone, half);
    } catch (const InadmissibleLift&) {
      raised = true;
    }
    bool here = thin == 1 && !tr.tame && tr.split_count >= R - w.inner_radius && tr.split_count > prev_split &&
                cons.sys.size() == 1 && coboundary_size(w.graph, half) == 1 && raised;
    ok = ok && here;
    prev_split = tr.split_count;
    os << "R=" << R << ": thin " << thin << ", " << (tr.tame ? "tame" : "not tame") << " split " << tr.split_count
       << " (R-m " << R - w.inner_radius << "), " << in.sys.size() << "->" << cons.sys.size()
       << " after consolidate, half-tree lift " << (raised ? "inadmissible" : "admitted") << "; ";
  }
  r.pass = ok;
  r.detail = str(os);
  return r;
}

// Union-find blocks tying each escape set together; any union of blocks is elliptic.
std::vector<int> escape_blocks(const Window& w, const PeripheralSystem& sys) {
  std::vector<int> parent(w.n());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto& H : sys.items) {
    auto ids = to_ids(escape_set(w, H));
    for (std::size_t i = 1; i < ids.size(); ++i) parent[find(ids[i])] = find(ids[0]);
  }
  for (int v = 0; v < w.n(); ++v) parent[v] = find(v);
  return parent;
}

Result c4(Context& ctx) {
  Result r{4, "elliptic cuts form a subring"};
  std::mt19937_64 rng(ctx.seed + 4);
  std::vector<bundle::Instance> bases;
  bases.push_back(bundle::family_instance("free(2)", 3, "none"));
  bases.push_back(bundle::family_instance("grid_Z2", 4, "none"));
  bases.push_back(bundle::family_instance("tree(3)", 3, "none"));
  bases.push_back(bundle::family_instance("grid_Z", 8, "none"));
  bases.push_back(bundle::family_instance("tree_with_end(3)", 5, "none"));
  int triples = 0, failures = 0, oracle_disagree = 0, from_pool = 0;
  std::bernoulli_distribution coin(0.5);
  for (int round = 0; round < 400; ++round) {
    auto& base = bases[round % bases.size()];
    const Window& w = *base.w;
    PeripheralSystem sys;
    int count = std::uniform_int_distribution<int>(1, 5)(rng);
    double density = std::uniform_real_distribution<double>(0.02, 0.3)(rng);
    for (int h = 0; h < count; ++h) {
      Peripheral H{"H" + std::to_string(h), VertexSet(w.n()), std::nullopt};
      std::bernoulli_distribution pick(density);
      for (int v = 0; v < w.n(); ++v)
        if (pick(rng)) H.members.set(v);
      if (round % 5 == 0) {
        VertexSet e(w.n());
        for (auto v = H.members.find_first(); v != Bits::npos; v = H.members.find_next(v))
          if (coin(rng)) e.set(v);
        H.escape = e;
      }
      sys.items.push_back(std::move(H));
    }
    auto block = escape_blocks(w, sys);
    std::optional<CutPool> pool;
    if (round % 8 == 0) pool = elliptic_pool(w, sys, 2);
    auto draw = [&]() {
      if (pool && pool->size() && coin(rng)) {
        ++from_pool;
        return pool->cuts[std::uniform_int_distribution<std::size_t>(0, pool->size() - 1)(rng)];
      }
      std::vector<char> side(w.n());
      for (int v = 0; v < w.n(); ++v) side[v] = coin(rng);
      VertexSet b(w.n());
      for (int v = 0; v < w.n(); ++v)
        if (side[block[v]]) b.set(v);
      return b;
    };
    for (int t = 0; t < 30; ++t) {
      VertexSet b1 = draw(), b2 = draw();
      if (!is_elliptic(w, b1, sys).elliptic || !is_elliptic(w, b2, sys).elliptic) {
        ++failures;
        continue;
      }
      ++triples;
      for (const VertexSet& x : {VertexSet(b1 ^ b2), VertexSet(b1 & b2)}) {
        bool lib = is_elliptic(w, x, sys).elliptic;
        if (!lib) ++failures;
        if (lib != oracle::elliptic(w, x, sys)) ++oracle_disagree;
      }
    }
  }
  r.pass = triples >= 10000 && failures == 0 && oracle_disagree == 0;
  r.detail = std::to_string(triples) + " triples (" + std::to_string(from_pool) + " pool draws), " +
             std::to_string(failures) + " failures, " + std::to_string(oracle_disagree) + " oracle disagreements";
  return r;
}

bool same_pools(EllipticLadder& a, EllipticLadder& b, int k_max, int& bad_k) {
  for (int k = 1; k <= k_max; ++k)
    if (a.at(k).cuts != b.at(k).cuts) {
      bad_k = k;
      return false;
    }
  return true;
}

Result c5(Context& ctx) {
  Result r{5, "pools unchanged by minimise and consolidate"};
  auto& corpus = tame_corpus(ctx);
  int failures = 0;
  std::string first;
  for (auto& in : corpus) {
    const Window& w = *in.w;
    EllipticLadder raw(w, in.sys, 3);
    auto mins = minimise(w, in.sys).sys;
    EllipticLadder lmin(w, mins, 3);
    auto cons = consolidate(w, mins, lmin.at(3)).sys;
    EllipticLadder lcons(w, cons, 3);
    int k = 0;
    bool ok = same_pools(raw, lmin, 3, k);
    if (ok) ok = same_pools(raw, lcons, 3, k);
    if (!ok && !failures++) first = in.name + " at k=" + std::to_string(k);
  }
  auto in = bundle::levels_instance(6);
  const Window& w = *in.w;
  EllipticLadder raw(w, in.sys, 3);
  auto cons = consolidate(w, in.sys, raw.at(3)).sys;
  EllipticLadder lcons(w, cons, 3);
  bool contained = true;
  std::string witness;
  for (int k = 1; k <= 3; ++k) {
    for (auto& b : lcons.at(k).cuts) contained = contained && raw.at(k).contains(b);
    if (witness.empty())
      for (auto& b : raw.at(k).cuts)
        if (!lcons.at(k).contains(b)) {
          witness = "k=" + std::to_string(k) + " cut of size " + std::to_string(b.count());
          break;
        }
  }
  r.pass = corpus.size() >= 50 && failures == 0 && contained && !witness.empty();
  r.detail = ctx.tame_summary + ", " + std::to_string(failures) + " failures" +
             (first.empty() ? "" : " (first " + first + ")") + "; levels R=6: " +
             std::to_string(cons.size()) + " peripheral after consolidate, " +
             (contained ? "contained" : "NOT contained") + ", witness " + (witness.empty() ? "none" : witness);
  return r;
}

Result c6(Context& ctx) {
  Result r{6, "cone-off restriction inverts lift"};
  std::mt19937_64 rng(ctx.seed + 6);
  auto& corpus = tame_corpus(ctx);
  long long cuts = 0, pairs = 0, failures = 0;
  int sampled = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (!failures++) first = what;
  };
  for (auto& in : corpus) {
    const Window& w = *in.w;
    auto cone = build_cone_off(w, in.sys);
    auto pool = elliptic_pool(w, in.sys, 3);
    std::vector<VertexSet> lifted;
    for (auto& b : pool.cuts) {
      ++cuts;
      try {
        auto L = lift(cone, b);
        if (restrict_cut(cone, L.side) != b) fail(in.name + ": restrict(lift(b)) != b");
        if (L.formula != coboundary_size(cone.window.graph, L.side) ||
            L.formula != oracle::crossing_edges(cone.window.graph, L.side))
          fail(in.name + ": coboundary formula");
        lifted.push_back(L.side);
      } catch (const Error& e) {
        fail(in.name + ": " + e.what());
        lifted.push_back(VertexSet(cone.window.n()));
      }
    }
    auto check = [&](std::size_t i, std::size_t j) {
      ++pairs;
      const auto &a = pool.cuts[i], &b = pool.cuts[j];
      try {
        VertexSet s = lifted[i] ^ lifted[j], t = lifted[i] & lifted[j];
        if (restrict_cut(cone, s) != (a ^ b) || restrict_cut(cone, t) != (a & b)) fail(in.name + ": restriction");
        if (lift(cone, a ^ b).side != s || lift(cone, a & b).side != t) fail(in.name + ": lift");
      } catch (const Error& e) {
        fail(in.name + ": " + e.what());
      }
    };
    if (pool.size() <= 1000) {
      for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j) check(i, j);
    } else {
      ++sampled;
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      for (int t = 0; t < 20000; ++t) check(pick(rng), pick(rng));
    }
  }
  r.pass = !corpus.empty() && failures == 0;
  r.detail = std::to_string(corpus.size()) + " instances, " + std::to_string(cuts) + " pool cuts, " +
             std::to_string(pairs) + " pairs (" + std::to_string(sampled) + " pools over 1000 sampled), " +
             std::to_string(failures) + " failures" + (first.empty() ? "" : ", first: " + first);
  return r;
}

Result c7(Context& ctx) {
  Result r{7, "structure tree against brute-force ultrafilters"};
  std::mt19937_64 rng(ctx.seed + 7);
  int families = 0, mismatches = 0, max_size = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (!mismatches++) first = "family " + std::to_string(families) + ": " + what;
  };
  for (int i = 0; i < 150; ++i) {
    int n = std::uniform_int_distribution<int>(3, 20)(rng);
    int P = std::uniform_int_distribution<int>(1, 12)(rng);
    auto cuts = oracle::random_nested_family(rng, n, P);
    if (cuts.empty()) continue;
    ++families;
    auto E = validate_nested_family(cuts);
    max_size = std::max<int>(max_size, E.size());
    auto T = build_structure_tree(E);
    auto mine = T.vertices;
    std::sort(mine.begin(), mine.end());
    if (mine != oracle::ultrafilters(E)) fail("ultrafilters");
    std::size_t pairs = E.pairs.size(), V = T.vertices.size();
    if (T.edges.size() != pairs || V != pairs + 1) fail("edge count");
    std::vector<std::vector<int>> adj(V);
    for (auto [a, b] : T.edges) adj[a].push_back(b), adj[b].push_back(a);
    std::vector<char> seen(V, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int u : adj[v])
        if (!seen[u]) seen[u] = 1, ++reached, st.push_back(u);
    }
    if (reached != V) fail("disconnected");
    std::vector<int> hit(pairs, 0);
    for (std::size_t e = 0; e < T.edges.size(); ++e) {
      int c = T.edge_cut[e];
      auto [a, b] = T.edges[e];
      Bits diff = T.vertices[a] ^ T.vertices[b];
      if (!T.vertices[a].test(c) || !T.vertices[b].test(E.complement[c]) || diff.count() != 2) fail("edge flip");
      ++hit[E.pair_of[c]];
    }
    for (std::size_t p = 0; p < pairs; ++p)
      if (hit[p] != 1 || E.pair_of[T.edge_cut[T.pair_edge[p]]] != static_cast<int>(p)) fail("bijection");
    auto f = vertex_map(T, n);
    for (std::size_t c = 0; c < E.size(); ++c)
      if (pullback(T, f, T.tree_cut(static_cast<int>(c))) != E.cuts[c]) fail("pullback");
  }
  r.pass = families >= 100 && mismatches == 0;
  r.detail = std::to_string(families) + " families (largest |E| = " + std::to_string(max_size) + "), " +
             std::to_string(mismatches) + " mismatches" + (first.empty() ? "" : ", first " + first);
  return r;
}

Result c8(Context&) {
  Result r{8, "translated tree maps differ on a bounded set"};
  int instances = 0, checks = 0, failures = 0;
  std::string first;
  for (auto [fam, R] : std::vector<std::pair<std::string, int>>{{"free(2)", 4}, {"free(2)", 5}, {"grid_Z", 6},
                                                                 {"grid_Z", 9}, {"tree(3)", 4}}) {
    Window w = cayley_window(parse_family(fam), R);
    int m = w.inner_radius;
    std::vector<VertexSet> E;
    for (int s : w.graph.adj[w.basepoint]) {
      VertexSet rest(w.n());
      rest.set();
      rest.reset(w.basepoint);
      for (auto& comp : components(w.graph, rest))
        if (comp.test(s)) E.push_back(comp), E.push_back(~comp);
    }
    auto T = build_structure_tree(validate_nested_family(E));
    ++instances;
    std::vector<int> inner;
    for (int v = 0; v < w.n(); ++v)
      if (w.dist[v] <= m) inner.push_back(v);
    std::vector<std::vector<VertexSet>> phi;
    for (int p : inner) {
      auto f = translated_vertex_map(w, T, w.labels[p]);
      std::vector<VertexSet> per;
      for (std::size_t e = 0; e < T.edges.size(); ++e) per.push_back(pullback(T, f, T.tree_cut(T.edge_cut[e])));
      phi.push_back(std::move(per));
    }
    VertexSet outer = annulus(w, m);
    for (std::size_t i = 0; i < inner.size(); ++i)
      for (std::size_t j = i + 1; j < inner.size(); ++j)
        for (std::size_t e = 0; e < T.edges.size(); ++e) {
          ++checks;
          if ((phi[i][e] ^ phi[j][e]).intersects(outer) && !failures++)
            first = fam + " R=" + std::to_string(R) + " " + w.labels[inner[i]] + "," + w.labels[inner[j]];
        }
  }
  r.pass = failures == 0 && checks > 0;
  r.detail = std::to_string(instances) + " windows, " + std::to_string(checks) + " (pair, edge) checks, " +
             std::to_string(failures) + " escaping sums" + (first.empty() ? "" : ", first " + first);
  return r;
}

Result c9(Context& ctx) {
  Result r{9, "dagger criterion against subset search"};
  std::mt19937_64 rng(ctx.seed + 9);
  int instances = 0, mismatches = 0, holds = 0, bad_cert = 0;
  while (instances < 600) {
    int n = std::uniform_int_distribution<int>(4, 9)(rng);
    Graph g = oracle::random_connected_graph(rng, n, 0.35);
    auto basis = cycle_basis(g);
    if (basis.empty()) continue;
    auto simple = short_cycles(g, n);
    std::bernoulli_distribution coin(0.5);
    for (int t = 0; t < 6; ++t) {
      std::size_t s = std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(15, simple.size()))(rng);
      std::vector<EdgeSet> S;
      for (std::size_t i = 0; i < s; ++i)
        S.push_back(simple[std::uniform_int_distribution<std::size_t>(0, simple.size() - 1)(rng)]);
      EdgeSet C(g.edge_count());
      for (auto& b : basis)
        if (coin(rng)) C ^= b;
      EdgeSet U(g.edge_count());
      double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
      std::bernoulli_distribution pick(p);
      for (int e = 0; e < g.edge_count(); ++e)
        if (pick(rng)) U.set(e);
      auto d = dagger_check(S, C, U);
      ++instances;
      if (d.holds != oracle::dagger(S, C, U)) ++mismatches;
      if (d.holds) {
        ++holds;
        EdgeSet x = C;
        for (int i : d.certificate) x ^= S[i];
        if ((x & U).any()) ++bad_cert;
      }
    }
  }
  r.pass = instances >= 500 && mismatches == 0 && bad_cert == 0 && holds > 0 && holds < instances;
  r.detail = std::to_string(instances) + " instances (" + std::to_string(holds) + " hold), " +
             std::to_string(mismatches) + " mismatches, " + std::to_string(bad_cert) + " bad certificates";
  return r;
}

Result c10(Context& ctx) {
  Result r{10, "chain and alternating-sequence lemmas"};
  std::mt19937_64 rng(ctx.seed + 10);
  int graphs = 0, chains = 0, sequences = 0, failures = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (!failures++) first = "graph " + std::to_string(graphs) + ": " + what;
  };
  while (graphs < 60) {
    int n = std::uniform_int_distribution<int>(4, 9)(rng);
    Graph g = oracle::random_connected_graph(rng, n, 0.3);
    Window w = finite_window(g);
    ++graphs;
    NestedGenSet ns;
    try {
      ns = nested_generating_set(w, n);
    } catch (const Error& e) {
      fail(e.what());
      continue;
    }
    std::vector<VertexSet> En;
    for (auto& b : ns.family)
      if (b.any() && !b.all()) En.push_back(b);
    for (auto& b : En) {
      std::vector<VertexSet> Xs;
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (b.test(x) != b.test(y)) Xs.push_back(make_set(n, {x, y}));
      for (int t = 0; t < 6; ++t) {
        VertexSet X(n);
        for (int v = 0; v < n; ++v)
          if (std::bernoulli_distribution(0.5)(rng)) X.set(v);
        if ((X & b).any() && !X.is_subset_of(b)) Xs.push_back(X);
      }
      for (auto& X : Xs) {
        ++chains;
        try {
          auto chain = hamann_chain(En, b, X);
          for (std::size_t i = 0; i < chain.size(); ++i) {
            if ((En[chain[i]] & X) != (b & X)) fail("chain member disagrees on X");
            if (i && !En[chain[i - 1]].is_subset_of(En[chain[i]])) fail("chain out of order");
          }
          if (std::find(chain.begin(), chain.end(), std::find(En.begin(), En.end(), b) - En.begin()) == chain.end())
            fail("b missing from its chain");
        } catch (const Error& e) {
          fail(e.what());
        }
      }
    }
    auto pool = enumerate_tight_cuts(w, n);
    auto cycles = short_cycles(g, std::min(n, 7));
    if (cycles.size() > 60) cycles.resize(60);
    for (auto& C : cycles) {
      std::vector<std::vector<EdgeSet>> decomps{fundamental_decomposition(g, C), {C}};
      auto extra = decomps[0];
      auto D = cycles[std::uniform_int_distribution<std::size_t>(0, cycles.size() - 1)(rng)];
      extra.push_back(D);
      extra.push_back(D);
      decomps.push_back(extra);
      for (auto& b : pool.cuts) {
        if (b.test(0)) continue;
        EdgeSet hit = C & coboundary(g, b);
        if (hit.count() != 2) continue;
        for (auto& A : decomps) {
          ++sequences;
          try {
            auto seq = alternating_sequence(g, C, b, A);
            EdgeSet db = coboundary(g, b);
            bool ok = !seq.edges.empty() && seq.cycles.size() + 1 == seq.edges.size() &&
                      hit.test(seq.edges.front()) && hit.test(seq.edges.back()) &&
                      seq.edges.front() != seq.edges.back();
            for (std::size_t i = 0; ok && i < seq.cycles.size(); ++i) {
              const auto& Ai = A[seq.cycles[i]];
              ok = Ai.test(seq.edges[i]) && Ai.test(seq.edges[i + 1]) && db.test(seq.edges[i]);
            }
            if (!ok) fail("malformed sequence");
          } catch (const Error& e) {
            fail(e.what());
          }
        }
      }
    }
  }
  r.pass = graphs >= 50 && failures == 0 && chains > 0 && sequences > 0;
  r.detail = std::to_string(graphs) + " graphs, " + std::to_string(chains) + " chains, " +
             std::to_string(sequences) + " sequences, " + std::to_string(failures) + " failures" +
             (first.empty() ? "" : ", first " + first);
  return r;
}

Result c11(Context&) {
  Result r{11, "parity witness from short cone-off cycles"};
  std::ostringstream os;
  bool ok = true;
  for (bool want_tame : {false, true}) {
    auto in = want_tame ? bundle::coset_instance(4) : bundle::levels_instance(6);
    auto cone = build_cone_off(*in.w, in.sys);
    auto S = short_cycles(cone.window.graph, 6);
    auto wit = cone_cycle_tameness_witness(cone, S);
    bool gen = algebraic_generates(S, cone.window.graph);
    ok = ok && wit.tame == want_tame;
    os << in.name << ": " << (wit.tame ? "no witness" : "witness") << " (expected "
       << (want_tame ? "none" : "one") << "), " << S.size() << " cycles"
       << (gen ? " spanning the whole cycle space" : "") << "; ";
  }
  r.pass = ok;
  r.detail = str(os);
  return r;
}

Result c12(Context&) {
  Result r{12, "accessibility bound stable in R"};
  std::ostringstream os;
  bool ok = true;
  os << "free(2) cosets K:";
  for (int R : {4, 5, 6}) {
    auto in = bundle::coset_instance(R);
    auto p = profile(*in.w, in.sys, 3);
    ok = ok && p.K == 2 && p.xor_violations == 0;
    os << " " << p.K;
  }
  os << "; grid_Z K:";
  for (int R = 4; R <= 8; ++R) {
    auto in = bundle::family_instance("grid_Z", R, "none");
    auto p = profile(*in.w, in.sys, 3);
    ok = ok && p.K == 1;
    os << " " << p.K;
  }
  bool same = true;
  for (int which = 0; which < 2; ++which) {
    auto in = which ? bundle::family_instance("grid_Z", 6, "none") : bundle::coset_instance(5);
    std::vector<std::string> dumps;
    for (int workers : {1, 1, 4}) {
      ProfileOptions o;
      o.search.workers = workers;
      dumps.push_back(profile_to_json(profile(*in.w, in.sys, 3, o)).dump());
    }
    same = same && dumps[0] == dumps[1] && dumps[0] == dumps[2];
  }
  ok = ok && same;
  os << "; JSON " << (same ? "identical" : "differs") << " across reruns and 1/4 workers";
  r.pass = ok;
  r.detail = str(os);
  return r;
}

}  // namespace

std::string format(const Result& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " [" << r.title << "] " << r.detail;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << " (" << r.seconds << "s)";
  return os.str();
}

std::vector<Result> run_acceptance(std::uint64_t seed, const std::vector<int>& only, std::ostream* live) {
  Context ctx{seed, std::nullopt, {}};
  std::vector<std::function<Result(Context&)>> all{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
  std::vector<Result> out;
  for (int id = 1; id <= 12; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = all[id - 1](ctx);
    } catch (const std::exception& e) {
      r.id = id;
      r.title = "aborted";
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (live) *live << format(r) << std::endl;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace acceptance
