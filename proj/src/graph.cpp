#include "edgereg/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <string>

#include "edgereg/error.hpp"

namespace edgereg {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw InputError("graphs have between 0 and 64 vertices");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
  }
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  if (adjacency_[u].contains(v)) {
    throw InputError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
  Edge e{std::min(u, v), std::max(u, v)};
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

VertexSet open_neighborhood(const Graph& g, VertexSet u) {
  if (!u.is_subset_of(g.vertices())) throw InputError("vertex set exceeds the graph");
  VertexSet out;
  for (int v : u) out |= g.neighbors(v);
  return out;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet u) { return open_neighborhood(g, u) | u; }

bool is_independent(const Graph& g, VertexSet u) {
  for (int v : u) {
    if (g.neighbors(v).intersects(u)) return false;
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge (u, w) closes a cycle of length
  // at most dist[u] + dist[w] + 1, and the minimum over all roots is exact.
  std::optional<int> best;
  const int n = g.vertex_count();
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    dist[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          int length = dist[u] + dist[w] + 1;
          if (!best || length < *best) best = length;
        }
      }
    }
  }
  return best;
}

namespace {

bool is_chordless(const Graph& g, const Cycle& c) {
  const std::size_t m = c.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (g.adjacent(c[i], c[j])) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Cycle> enumerate_odd_cycles(const Graph& g, bool induced_only, int max_length) {
  std::vector<Cycle> cycles;
  const int n = g.vertex_count();
  const int limit = max_length > 0 ? max_length : n;
  Cycle path;
  // DFS over simple paths start -> ... whose interior vertices exceed start.
  std::function<void(int, VertexSet)> extend = [&](int u, VertexSet used) {
    const int start = path.front();
    const int len = static_cast<int>(path.size());
    if (len >= 3 && len % 2 == 1 && g.adjacent(u, start) && path[1] < path.back()) {
      if (!induced_only || is_chordless(g, path)) cycles.push_back(path);
    }
    if (len >= limit) return;
    for (int w : g.neighbors(u)) {
      if (w <= start || used.contains(w)) continue;
      path.push_back(w);
      extend(w, used | VertexSet::singleton(w));
      path.pop_back();
    }
  };
  for (int start = 0; start < n; ++start) {
    path.assign(1, start);
    extend(start, VertexSet::singleton(start));
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

int induced_matching_number(const Graph& g) {
  const auto& edges = g.edges();
  int best = 0;
  // Chosen edges must be pairwise at distance >= 2: an edge is admissible
  // when neither endpoint lies in the closed neighborhood of the chosen ones.
  std::function<void(std::size_t, VertexSet, int)> search = [&](std::size_t next, VertexSet blocked, int size) {
    best = std::max(best, size);
    if (size + static_cast<int>(edges.size() - next) <= best) return;
    for (std::size_t k = next; k < edges.size(); ++k) {
      auto [u, v] = edges[k];
      if (blocked.contains(u) || blocked.contains(v)) continue;
      VertexSet uv{u, v};
      search(k + 1, blocked | closed_neighborhood(g, uv), size + 1);
    }
  };
  search(0, VertexSet(), 0);
  return best;
}

std::vector<VertexSet> minimal_transversals(int n, const std::vector<VertexSet>& hyperedges) {
  if (n < 0 || n > kMaxVertices) throw InputError("hypergraphs have between 0 and 64 vertices");
  for (VertexSet e : hyperedges) {
    if (!e.is_subset_of(VertexSet::range(n))) throw InputError("hyperedge exceeds the vertex range");
    if (e.empty()) return {};
  }
  const std::vector<VertexSet> edges = minimal_sets(hyperedges);
  std::set<std::uint64_t> found;
  // Branch on the lowest-index unhit edge; a chosen vertex is kept only while
  // every chosen vertex still has a private edge (minimality pruning).
  std::function<void(VertexSet)> branch = [&](VertexSet chosen) {
    const VertexSet* unhit = nullptr;
    for (const VertexSet& e : edges) {
      if (!e.intersects(chosen)) {
        unhit = &e;
        break;
      }
    }
    if (unhit == nullptr) {
      found.insert(chosen.bits());
      return;
    }
    for (int v : *unhit) {
      VertexSet next = chosen | VertexSet::singleton(v);
      bool minimal = true;
      for (int w : next) {
        bool has_private = false;
        for (const VertexSet& e : edges) {
          if ((e & next) == VertexSet::singleton(w)) {
            has_private = true;
            break;
          }
        }
        if (!has_private) {
          minimal = false;
          break;
        }
      }
      if (minimal) branch(next);
    }
  };
  branch(VertexSet());
  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (auto bits : found) out.emplace_back(bits);
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
  std::vector<VertexSet> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) edges.push_back(VertexSet{u, v});
  return minimal_transversals(g.vertex_count(), edges);
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet v) {
  if (!v.is_subset_of(g.vertices())) throw InputError("vertex set exceeds the graph");
  InducedSubgraph out{Graph(v.size()), v.to_vector()};
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t k = 0; k < out.labels.size(); ++k) index[out.labels[k]] = static_cast<int>(k);
  for (const auto& [a, b] : g.edges()) {
    if (index[a] >= 0 && index[b] >= 0) out.graph.add_edge(index[a], index[b]);
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int shift = g.vertex_count();
  Graph out(shift + h.vertex_count());
  for (const auto& [a, b] : g.edges()) out.add_edge(a, b);
  for (const auto& [a, b] : h.edges()) out.add_edge(a + shift, b + shift);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycles have at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) { return complement(Graph(n)); }

}  // namespace edgereg
