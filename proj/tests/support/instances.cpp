#include "support/instances.hpp"

#include "support/oracles.hpp"

#include <algorithm>
#include <random>

namespace bundle {

using namespace cutlab;

Instance make(std::string name, Window w, PeripheralSystem sys) {
  Instance in;
  in.name = std::move(name);
  in.w = std::make_unique<Window>(std::move(w));
  in.sys = std::move(sys);
  return in;
}

Instance family_instance(const std::string& family, int R, const std::string& recipe) {
  Window w = cayley_window(parse_family(family), R);
  auto sys = recipe_system(w, recipe);
  return make(family + " R=" + std::to_string(R) + " " + recipe, std::move(w), std::move(sys));
}

Instance levels_instance(int R) { return family_instance("tree_with_end(3)", R, "levels"); }
Instance coset_instance(int R) { return family_instance("free(2)", R, "cosets"); }

namespace {

PeripheralSystem labelled(const Window& w, const std::vector<std::pair<std::string, std::vector<std::string>>>& spec) {
  PeripheralSystem sys;
  for (auto& [name, labels] : spec) {
    std::vector<int> ids;
    for (auto& l : labels)
      if (w.label_index.count(l)) ids.push_back(w.vertex_of(l));
    if (!ids.empty()) sys.items.push_back({name, make_set(w.n(), ids), std::nullopt});
  }
  return sys;
}

PeripheralSystem integer_range(const Window& w, const std::string& name, int lo, int hi) {
  std::vector<std::string> ls;
  for (int x = lo; x <= hi; ++x) ls.push_back(std::to_string(x));
  return labelled(w, {{name, ls}});
}

PeripheralSystem random_balls(const Window& w, std::mt19937_64& rng, int count, int radius) {
  PeripheralSystem sys;
  std::uniform_int_distribution<int> pick(0, w.n() - 1);
  for (int i = 0; i < count; ++i) {
    int c = pick(rng);
    VertexSet s = ball(w.graph, make_set(w.n(), {c}), radius);
    sys.items.push_back({"B" + std::to_string(i), s, std::nullopt});
  }
  return sys;
}

}  // namespace

std::vector<Instance> candidates() {
  std::vector<Instance> out;
  std::mt19937_64 rng(20261015);
  for (int R : {3, 4, 5}) out.push_back(coset_instance(R));
  for (int R : {3, 4}) out.push_back(family_instance("free(2)", R, "none"));
  out.push_back(family_instance("free(3)", 3, "cosets"));
  for (int R = 4; R <= 10; ++R) {
    Window w = cayley_window(parse_family("grid_Z"), R, R - 2);
    std::string tag = "grid_Z R=" + std::to_string(R) + " m=" + std::to_string(R - 2);
    out.push_back(make(tag + " none", w, {}));
    out.push_back(make(tag + " line", w, line_system(w)));
    out.push_back(make(tag + " half-line", w, integer_range(w, "right", 0, R)));
    out.push_back(make(tag + " left half-line", w, integer_range(w, "left", -R, 1)));
    auto both = integer_range(w, "left", -R, -1);
    both.items.push_back(integer_range(w, "right", 1, R).items[0]);
    out.push_back(make(tag + " two half-lines", w, std::move(both)));
    out.push_back(make(tag + " finite", w, integer_range(w, "finite", -1, 1)));
  }
  for (int R : {3, 4, 5}) {
    out.push_back(family_instance("grid_Z2", R, "rows"));
    out.push_back(family_instance("grid_Z2", R, "none"));
  }
  for (int R : {3, 4}) {
    out.push_back(family_instance("tree(3)", R, "none"));
    Window w = cayley_window(parse_family("tree(3)"), R);
    auto sys = random_balls(w, rng, 4, 1);
    out.push_back(make("tree(3) R=" + std::to_string(R) + " balls", std::move(w), std::move(sys)));
  }
  for (int R : {3, 4}) {
    Window w = cayley_window(parse_family("tree(3)"), R);
    auto sys = random_balls(w, rng, 3, 0);
    out.push_back(make("tree(3) R=" + std::to_string(R) + " points", std::move(w), std::move(sys)));
  }
  for (int R : {4, 5}) out.push_back(family_instance("tree_with_end(3)", R, "none"));
  for (int i = 0; i < 20; ++i) {
    std::uniform_int_distribution<int> size(8, 14);
    Graph g = oracle::random_connected_graph(rng, size(rng), 0.15);
    auto d = bfs_dist(g, 0);
    int R = *std::max_element(d.begin(), d.end());
    if (R < 2) continue;
    Window w = window_from_graph(std::move(g), 0, R);
    auto sys = random_balls(w, rng, 2, 1);
    out.push_back(make("random window " + std::to_string(i), std::move(w), std::move(sys)));
  }
  return out;
}

}  // namespace bundle
