#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cutlab {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using VertexSet = Bits;
using EdgeSet = Bits;
using Edge = std::pair<int, int>;

struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;       // sorted neighbours
  std::vector<std::vector<int>> adj_edge;  // edge id of (v, adj[v][i])
  std::vector<Edge> edges;                 // u < v, lexicographic

  int vertex_count() const { return n; }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int edge_id(int u, int v) const;
};

// Vertex count is taken as 1 + max id unless n is given.
Graph build_graph(const std::vector<Edge>& edge_list, int n = -1);

enum class Family { Finite, Free, GridZ, GridZ2, Tree, TreeWithEnd };

struct FamilySpec {
  Family tag = Family::Finite;
  int param = 0;  // free rank or tree degree
};

std::string family_name(const FamilySpec& f);
FamilySpec parse_family(const std::string& s);

struct Window {
  Graph graph;
  int basepoint = 0;
  int radius = 0;
  int inner_radius = 0;
  VertexSet frontier;
  std::vector<int> dist;
  FamilySpec family;
  std::vector<std::string> labels;
  std::vector<int> levels;  // tree_with_end only
  std::unordered_map<std::string, int> label_index;

  int n() const { return graph.n; }
  bool has_frontier() const { return frontier.any(); }
  int vertex_of(const std::string& label) const;
};

int default_inner_radius(int R);

// Finite mode, empty frontier.
Window finite_window(Graph g);
// Sphere of radius R around basepoint becomes the frontier.
Window window_from_graph(Graph g, int basepoint, int R, int m = -1);
Window cayley_window(const FamilySpec& family, int R, int m = -1);
Window with_inner_radius(const Window& w, int m);

// Label arithmetic for families whose normal forms are closed under it.
bool supports_translation(const FamilySpec& f);
std::string right_multiply(const FamilySpec& f, const std::string& g, const std::string& p);
int label_length(const FamilySpec& f, const std::string& g);
std::string truncate_label(const FamilySpec& f, const std::string& g, int R);

std::vector<int> bfs_dist(const Graph& g, int src);
VertexSet annulus(const Window& w, int m);
VertexSet ball(const Graph& g, const VertexSet& S, int r);

struct WindowEnd {
  int id = 0;
  VertexSet shadow;
};

std::vector<WindowEnd> window_ends(const Window& w, int m);

enum class LimitSizeClass { Zero, One, Two, Many };
std::string to_string(LimitSizeClass c);

// Counts window-ends whose shadow meets X, at m and m+1.
LimitSizeClass limit_size_class(const Window& w, const VertexSet& X, int m);
int ends_meeting(const Window& w, const VertexSet& X, int m);

std::vector<VertexSet> components(const Graph& g, const VertexSet& S);
bool is_connected(const Graph& g, const VertexSet& S);

VertexSet make_set(int n, const std::vector<int>& ids);
std::vector<int> to_ids(const Bits& s);
bool lex_less(const Bits& a, const Bits& b);

}  // namespace cutlab
