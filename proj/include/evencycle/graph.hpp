#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evencycle/errors.hpp"
#include "evencycle/vertex_set.hpp"

namespace evencycle {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Immutable simple undirected graph on vertices [0, n), one bit row per
 * vertex. Rows are kept symmetric and loop-free by every constructor; nothing
 * mutates a Graph after construction, so it can be shared across threads.
 */
class Graph {
public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  int order() const { return n_; }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  int degree(Vertex v) const { return rows_[v].count(); }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::prefix(n_); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// N(S) = union of neighborhoods minus S.
  VertexSet neighbors(const VertexSet& s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  friend class GraphBuilder;

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

/// Accumulates edges and hands out a finished Graph. Rejects loops and
/// out-of-range endpoints; duplicate edges collapse.
class GraphBuilder {
public:
  explicit GraphBuilder(int n);

  GraphBuilder& add_edge(Vertex u, Vertex v);
  Graph build() &&;
  Graph build() const&;

private:
  Graph g_;
};

Graph from_edge_list(int n, const std::vector<Edge>& edges);

struct Graph6Options {
  /// Accept/emit the 4-byte header form for n > 62.
  bool long_form = false;
};

Graph from_graph6(std::string_view record, Graph6Options opts = {});
std::string to_graph6(const Graph& g, Graph6Options opts = {});

/// Edge-list text: "n m" then m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

int min_degree(const Graph& g);

/// Smallest-index vertex of degree < 3.
std::optional<Vertex> low_degree_vertex(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the parent graph that became vertex i.
  std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// G - S.
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s);

/// Breadth-first distances from src; -1 for unreachable vertices. Only
/// vertices in `allowed` are traversed (src is always admitted).
std::vector<int> bfs_distances(const Graph& g, Vertex src, const VertexSet& allowed);

bool is_connected(const Graph& g);

namespace named {
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
/// Outer cycle 0..4, spokes i -- i+5, inner pentagram 5+i -- 5+(i+2)%5.
Graph petersen();
Graph heawood();
Graph complete_bipartite(int a, int b);
/// theta(2,3,3) labeled as y=0, x1..x6 = 1..6 with branch vertices x1, x4.
Graph theta_233();
} // namespace named

} // namespace evencycle
