#pragma once

#include "cutlab/graph.hpp"

#include <vector>

namespace unit {

inline cutlab::Graph path(int n) {
  std::vector<cutlab::Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return cutlab::build_graph(es, n);
}

inline cutlab::Graph cycle(int n) {
  std::vector<cutlab::Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  es.emplace_back(0, n - 1);
  return cutlab::build_graph(es, n);
}

inline cutlab::Graph complete(int n) {
  std::vector<cutlab::Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return cutlab::build_graph(es, n);
}

inline cutlab::VertexSet set(int n, std::vector<int> ids) { return cutlab::make_set(n, ids); }

inline cutlab::VertexSet labels(const cutlab::Window& w, const std::vector<std::string>& ls) {
  cutlab::VertexSet s(w.n());
  for (auto& l : ls) s.set(w.vertex_of(l));
  return s;
}

}  // namespace unit
