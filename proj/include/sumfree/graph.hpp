#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumfree/error.hpp"

namespace sumfree {

/// A graph possibly with loops (at most one per vertex). Vertices are
/// indices 0..size()-1, each carrying an integer label (the ground-set
/// element it stands for). A loop counts once in edge_count() and twice in
/// degree().
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::int64_t> labels);

  int add_vertex(std::int64_t label);
  /// u == v adds a loop. Repeated edges are ignored.
  void add_edge(int u, int v);

  int size() const { return static_cast<int>(labels_.size()); }
  std::int64_t label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<std::int64_t>& labels() const { return labels_; }
  /// Index of the first vertex with this label, or -1.
  int find_label(std::int64_t label) const;

  bool has_edge(int u, int v) const;
  bool has_loop(int v) const { return loops_[static_cast<std::size_t>(v)] != 0; }
  /// Neighbours other than v itself, sorted.
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()) + (has_loop(v) ? 2 : 0); }
  int edge_count() const { return edges_ + loop_count(); }
  int loop_count() const;
  /// Non-loop edges as (u, v), u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  std::vector<std::int64_t> labels_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> loops_;
  int edges_ = 0;
};

Graph path(int m);
Graph cycle(int m);
Graph complete(int m);
Graph matching(int k);
/// Vertices of g followed by vertices of h; labels kept.
Graph disjoint_union(const Graph& g, const Graph& h);
/// Vertex (i, j) has index i * |h| + j and label i * |h| + j. Loops are
/// dropped (the product is defined for simple graphs).
Graph cartesian_product(const Graph& g, const Graph& h);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph remove_loops(const Graph& g);

bool is_triangle_free(const Graph& g);

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  int edges = 0;
  friend bool operator==(const DegreeStats&, const DegreeStats&) = default;
};
DegreeStats degree_stats(const Graph& g);

/// Connected components (loops ignored), each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Number of vertex-disjoint P_3s found: the maximum for graphs with at most
/// `exact_limit` vertices, a greedy packing above. Always a valid lower bound.
int disjoint_p3_packing(const Graph& g, int exact_limit = 30);

/// f maps vertex indices of g to vertex indices of h. Throws if f is not a
/// bijection. True iff f preserves adjacency and loops.
bool check_isomorphism_map(const Graph& g, const Graph& h, std::span<const int> f);
/// Backtracking with colour refinement. Throws LimitExceeded above 64 vertices.
bool are_isomorphic(const Graph& g, const Graph& h);

/// "g <n>", then "v <index> <label>" per vertex, then "e <u> <v>" per edge
/// (u <= v, u == v for loops) in lexicographic order.
std::string to_text(const Graph& g);
Graph from_text(std::string_view text);

}  // namespace sumfree
