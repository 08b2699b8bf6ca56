#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "edgereg/vertex_set.hpp"

namespace edgereg {

using Edge = std::pair<int, int>;
/// Vertex sequence v_0, ..., v_{m-1} with consecutive vertices (and v_{m-1}, v_0) adjacent.
using Cycle = std::vector<int>;

/// Finite simple graph on {0, ..., n-1}. Edges are stored as (i, j) with
/// i < j, sorted; isolated vertices are allowed.
class Graph {
 public:
  explicit Graph(int n = 0);
  /// Throws InputError on loops, duplicate edges or out-of-range vertices.
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool adjacent(int u, int v) const { return adjacency_[u].contains(v); }
  VertexSet neighbors(int v) const { return adjacency_[v]; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// Throws InputError on loops, duplicates or out-of-range vertices.
  void add_edge(int u, int v);

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> adjacency_;
  std::vector<Edge> edges_;
};

/// N(U): vertices adjacent to some vertex of U.
VertexSet open_neighborhood(const Graph& g, VertexSet u);
/// N[U] = U together with N(U).
VertexSet closed_neighborhood(const Graph& g, VertexSet u);

bool is_independent(const Graph& g, VertexSet u);
bool is_bipartite(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Every simple odd cycle once, rotated to start at its least vertex and
/// oriented so that the second vertex is smaller than the last; sorted.
/// With `induced_only`, chorded cycles are dropped. `max_length` (0 = no
/// limit) bounds the reported lengths.
std::vector<Cycle> enumerate_odd_cycles(const Graph& g, bool induced_only, int max_length = 0);

/// Size of a largest induced matching, by exhaustive search with pruning.
int induced_matching_number(const Graph& g);

/// Inclusion-minimal transversals of a hypergraph on {0, ..., n-1}, sorted
/// by lex_less. An empty edge list yields the single transversal {}; an
/// empty hyperedge yields none.
std::vector<VertexSet> minimal_transversals(int n, const std::vector<VertexSet>& hyperedges);

/// Inclusion-minimal vertex covers, sorted by lex_less.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// labels[k] is the original vertex carried by vertex k of `graph`.
  std::vector<int> labels;
};

/// Subgraph induced on `v`, relabeled 0, ..., |v|-1 in increasing order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet v);
/// Vertices of `h` are shifted by g.vertex_count().
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

/// Path and cycle conveniences used by tests and fixtures.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

}  // namespace edgereg
