#include "cutlab/errors.hpp"
#include "cutlab/structure_tree.hpp"
#include "support/oracles.hpp"
#include "unit/helpers.hpp"

#include <doctest.h>

using namespace cutlab;
using unit::set;

namespace {

std::vector<VertexSet> with_complements(std::vector<VertexSet> cuts) {
  std::size_t n = cuts.size();
  for (std::size_t i = 0; i < n; ++i) cuts.push_back(~cuts[i]);
  return cuts;
}

std::vector<std::size_t> degrees(const StructureTree& T) {
  std::vector<std::size_t> d(T.vertices.size(), 0);
  for (auto [a, b] : T.edges) ++d[a], ++d[b];
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("validation") {
  auto E = validate_nested_family(with_complements({set(4, {0}), set(4, {0, 1})}));
  CHECK(E.size() == 4);
  CHECK(E.pairs.size() == 2);
  for (std::size_t i = 0; i < E.size(); ++i) CHECK(E.cuts[E.complement[i]] == ~E.cuts[i]);
  CHECK_THROWS_AS(validate_nested_family(with_complements({set(4, {0, 1}), set(4, {1, 2})})), NotNested);
  CHECK_THROWS_AS(validate_nested_family(with_complements({VertexSet(4)})), ContainsTrivial);
}

TEST_CASE("small trees") {
  auto one = build_structure_tree(validate_nested_family(with_complements({set(3, {0})})));
  CHECK(one.vertices.size() == 2);
  CHECK(one.edges.size() == 1);

  auto p4 = build_structure_tree(
      validate_nested_family(with_complements({set(4, {0}), set(4, {0, 1}), set(4, {0, 1, 2})})));
  CHECK(p4.vertices.size() == 4);
  CHECK(degrees(p4) == std::vector<std::size_t>{1, 1, 2, 2});
  CHECK(p4.vertices.size() == oracle::ultrafilters(p4.E).size());

  std::vector<VertexSet> star;
  for (int v = 1; v <= 4; ++v) star.push_back(set(5, {v}));
  auto st = build_structure_tree(validate_nested_family(with_complements(star)));
  CHECK(degrees(st) == std::vector<std::size_t>{1, 1, 1, 1, 4});
}

TEST_CASE("ultrafilters") {
  auto E = validate_nested_family(with_complements({set(4, {0}), set(4, {0, 1})}));
  auto all = brute_force_ultrafilters(E);
  CHECK(all.size() == 3);
  for (auto& U : all) CHECK(is_ultrafilter(E, U));
  Bits bad(4);
  bad.set(E.pairs[0].first);
  bad.set(E.pairs[1].first);
  bad.set(E.pairs[1].second);
  CHECK_FALSE(is_ultrafilter(E, bad));
  auto mine = all;
  auto ref = oracle::ultrafilters(E);
  std::sort(mine.begin(), mine.end());
  CHECK(mine == ref);
}

TEST_CASE("vertex map and pullback") {
  std::vector<VertexSet> cuts{set(4, {0}), set(4, {0, 1}), set(4, {0, 1, 2})};
  auto T = build_structure_tree(validate_nested_family(with_complements(cuts)));
  auto f = vertex_map(T, 4);
  for (std::size_t i = 0; i < T.E.size(); ++i) {
    CHECK(pullback(T, f, T.tree_cut(static_cast<int>(i))) == T.E.cuts[i]);
  }
  for (int v = 0; v < 4; ++v) CHECK(vertex_ultrafilter(T.E, v) == T.vertices[f[v]]);
  std::vector<int> constant(4, f[2]);
  for (std::size_t i = 0; i < T.E.size(); ++i) {
    auto b = pullback(T, constant, T.tree_cut(static_cast<int>(i)));
    CHECK((b.none() || b.all()));
  }
}

TEST_CASE("pullback on a window must be admissible") {
  auto z = cayley_window(parse_family("grid_Z"), 4);
  VertexSet right(z.n());
  for (int x = 1; x <= 4; ++x) right.set(z.vertex_of(std::to_string(x)));
  auto T = build_structure_tree(validate_nested_family({right, ~right}));
  auto f = vertex_map(T, z.n());
  CHECK(pullback(z, T, f, T.tree_cut(0)).count() > 0);
  std::vector<int> g = f;
  g[z.vertex_of("4")] = f[z.vertex_of("0")];
  int i = T.E.cuts[0] == right ? 0 : 1;
  CHECK_THROWS_AS(pullback(z, T, g, T.tree_cut(i)), InadmissiblePullback);
}

TEST_CASE("translated maps on the line") {
  auto z = cayley_window(parse_family("grid_Z"), 6);
  VertexSet right(z.n());
  for (int x = 1; x <= 6; ++x) right.set(z.vertex_of(std::to_string(x)));
  auto T = build_structure_tree(validate_nested_family({right, ~right}));
  auto f0 = translated_vertex_map(z, T, "0");
  auto f2 = translated_vertex_map(z, T, "2");
  auto diff = pullback(T, f0, T.tree_cut(0)) ^ pullback(T, f2, T.tree_cut(0));
  CHECK(diff.count() == 2);
  CHECK_THROWS_AS(translated_vertex_map(cayley_window(parse_family("tree_with_end(3)"), 3), T, "^"), BadParams);
}

TEST_CASE("peripheral fixed vertices") {
  auto z = cayley_window(parse_family("grid_Z"), 6);
  VertexSet right(z.n()), ray(z.n());
  for (int x = 1; x <= 6; ++x) right.set(z.vertex_of(std::to_string(x)));
  for (int x = 2; x <= 6; ++x) ray.set(z.vertex_of(std::to_string(x)));
  auto T = build_structure_tree(validate_nested_family({right, ~right}));
  int v = peripheral_fixed_vertex(T, z, {"ray", ray, std::nullopt});
  int ri = T.E.cuts[0] == right ? 0 : 1;
  CHECK(T.vertices[v].test(ri));

  auto f = cayley_window(parse_family("free(2)"), 4);
  auto cosets = coset_system(f);
  auto pool = elliptic_pool(f, cosets, 2);
  std::vector<VertexSet> nested;
  for (auto& b : pool.cuts) {
    bool ok = true;
    for (auto& c : nested) ok = ok && is_nested(b, c);
    if (ok) nested.push_back(b);
  }
  auto Tf = build_structure_tree(validate_nested_family(nested));
  const auto& H = cosets.items[cosets.index_of("1<a>")];
  int fv = peripheral_fixed_vertex(Tf, f, H);
  CHECK(is_ultrafilter(Tf.E, Tf.vertices[fv]));
}
