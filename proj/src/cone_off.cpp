#include "cutlab/cone_off.hpp"

#include "cutlab/errors.hpp"

#include <algorithm>

namespace cutlab {

ConeOff build_cone_off(const Window& w, const PeripheralSystem& sys) {
  ConeOff c;
  c.base = &w;
  c.sys = std::make_shared<const PeripheralSystem>(sys);
  c.base_n = w.n();
  c.model = std::make_shared<EscapeModel>(w, sys);
  for (auto& H : sys.items) {
    c.escape.push_back(escape_set(w, H));
    c.frontier_members.push_back(H.members & w.frontier);
  }
  std::vector<Edge> es = w.graph.edges;
  for (std::size_t h = 0; h < sys.size(); ++h) {
    int v = w.n() + static_cast<int>(h);
    c.cone_of.push_back(v);
    for (int u : to_ids(sys.items[h].members)) es.emplace_back(u, v);
  }
  int n = w.n() + static_cast<int>(sys.size());
  Window& cw = c.window;
  cw.graph = build_graph(es, n);
  cw.basepoint = w.basepoint;
  cw.radius = w.radius;
  cw.inner_radius = w.inner_radius;
  cw.family = w.family;
  cw.frontier = w.frontier;
  cw.frontier.resize(n);
  cw.dist = w.dist;
  cw.dist.resize(n, -1);
  cw.labels = w.labels;
  cw.levels = w.levels;
  cw.label_index = w.label_index;
  if (!cw.labels.empty())
    for (std::size_t h = 0; h < sys.size(); ++h) {
      cw.labels.push_back("*" + sys.items[h].name);
      cw.label_index["*" + sys.items[h].name] = c.cone_of[h];
    }
  return c;
}

VertexSet restrict_cut(const ConeOff& c, const VertexSet& side_hat) {
  if (side_hat.size() != static_cast<std::size_t>(c.window.n())) throw GraphMismatch("cut is not on the cone-off");
  VertexSet b = side_hat;
  b.resize(c.base_n);
  int v = c.model->violation(b);
  if (v >= 0) throw EllipticityViolation("restriction splits " + c.sys->items[v].name);
  return b;
}

int lift_formula(const ConeOff& c, const VertexSet& b) {
  int total = coboundary_size(c.base->graph, b);
  for (std::size_t h = 0; h < c.sys->size(); ++h) {
    const auto& H = c.sys->items[h];
    bool in = c.escape[h].intersects(b);
    total += static_cast<int>(in ? (H.members - b).count() : (H.members & b).count());
  }
  return total;
}

Lift lift(const ConeOff& c, const VertexSet& b) {
  if (b.size() != static_cast<std::size_t>(c.base_n)) throw GraphMismatch("cut is not on the base window");
  int v = c.model->violation(b);
  if (v >= 0) throw NotElliptic("cut splits " + c.sys->items[v].name);
  Lift out;
  out.side = b;
  out.side.resize(c.window.n());
  for (std::size_t h = 0; h < c.sys->size(); ++h) {
    bool in = c.escape[h].intersects(b);
    if (in) out.side.set(c.cone_of[h]);
    const auto& zone = c.frontier_members[h];
    if (in ? !zone.is_subset_of(b) : zone.intersects(b))
      throw InadmissibleLift(static_cast<int>(h), c.sys->items[h].name);
  }
  out.formula = lift_formula(c, b);
  return out;
}

GrowthProfile growth_profile(const ConeOff& c, const CutPool& pool) {
  GrowthProfile g;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    try {
      auto l = lift(c, pool.cuts[i]);
      g.samples.emplace_back(static_cast<int>(pool.cob[i].count()), coboundary_size(c.window.graph, l.side));
    } catch (const InadmissibleLift& e) {
      if (!g.not_tame) {
        g.not_tame = true;
        g.witness_peripheral = e.peripheral;
        g.witness_cut = static_cast<int>(i);
      }
    }
  }
  for (auto [k, kh] : g.samples) g.envelope[k] = std::max(g.envelope.count(k) ? g.envelope[k] : kh, kh);
  int run = 0;
  for (auto& [k, v] : g.envelope) run = v = std::max(run, v);
  return g;
}

}  // namespace cutlab
