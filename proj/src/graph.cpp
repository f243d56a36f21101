#include "evencycle/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace evencycle {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n)) {
  if (n < 0 || n > kMaxVertices)
    throw UnsupportedSize("vertex count " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxVertices) + "]");
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& r : rows_)
    twice += r.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    (rows_[u] & VertexSet::above(u, n_)).for_each([&](Vertex v) { out.emplace_back(u, v); });
  return out;
}

VertexSet Graph::neighbors(const VertexSet& s) const {
  VertexSet out;
  s.for_each([&](Vertex v) { out |= rows_[v]; });
  return out.andnot(s);
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
    throw VertexOutOfRange("edge {" + std::to_string(u) + "," + std::to_string(v) +
                           "} outside [0, " + std::to_string(g_.n_) + ")");
  if (u == v)
    throw LoopEdge("loop at vertex " + std::to_string(u));
  g_.rows_[u].set(v);
  g_.rows_[v].set(u);
  return *this;
}

Graph GraphBuilder::build() && { return std::move(g_); }
Graph GraphBuilder::build() const& { return g_; }

Graph from_edge_list(int n, const std::vector<Edge>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges)
    b.add_edge(u, v);
  return std::move(b).build();
}

// graph6: N(n) header, then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
// packed six bits per byte (MSB first), each byte offset by 63.

namespace {

constexpr int kShortFormMax = 62;

int decode_byte(char c, std::size_t pos) {
  int b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126)
    throw MalformedRecord("byte " + std::to_string(b) + " at offset " + std::to_string(pos) +
                          " outside graph6 range");
  return b - 63;
}

} // namespace

Graph from_graph6(std::string_view rec, Graph6Options opts) {
  while (!rec.empty() && (rec.back() == '\n' || rec.back() == '\r'))
    rec.remove_suffix(1);
  if (rec.starts_with(">>graph6<<"))
    rec.remove_prefix(10);
  if (rec.empty())
    throw MalformedRecord("empty graph6 record");

  std::size_t pos = 0;
  long n = 0;
  if (rec[0] == 126) {
    if (!opts.long_form)
      throw UnsupportedSize("graph6 long-form header (n > 62) not enabled");
    if (rec.size() >= 2 && rec[1] == 126)
      throw UnsupportedSize("graph6 8-byte header (n > 258047) not supported");
    if (rec.size() < 4)
      throw MalformedRecord("truncated graph6 long-form header");
    for (std::size_t i = 1; i < 4; ++i)
      n = (n << 6) | decode_byte(rec[i], i);
    pos = 4;
  } else {
    n = decode_byte(rec[0], 0);
    pos = 1;
  }
  if (n > kMaxVertices)
    throw UnsupportedSize("graph6 record has " + std::to_string(n) + " vertices, cap is " +
                          std::to_string(kMaxVertices));

  const long bits = n * (n - 1) / 2;
  const long expected = (bits + 5) / 6;
  if (static_cast<long>(rec.size() - pos) != expected)
    throw MalformedRecord("graph6 body has " + std::to_string(rec.size() - pos) +
                          " bytes, expected " + std::to_string(expected) + " for n=" +
                          std::to_string(n));

  GraphBuilder b(static_cast<int>(n));
  long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = decode_byte(rec[pos + k / 6], pos + k / 6);
      if (byte & (1 << (5 - k % 6)))
        b.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    int last = decode_byte(rec[pos + k / 6], pos + k / 6);
    if (last & ((1 << (6 - k % 6)) - 1))
      throw MalformedRecord("nonzero graph6 padding bits");
  }
  return std::move(b).build();
}

std::string to_graph6(const Graph& g, Graph6Options opts) {
  const int n = g.order();
  std::string out;
  if (n <= kShortFormMax) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    if (!opts.long_form)
      throw UnsupportedSize("graph with " + std::to_string(n) +
                            " vertices needs graph6 long form, which is not enabled");
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph read_edge_list(std::istream& in) {
  long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw MalformedRecord("edge list must start with \"n m\"");
  if (n > kMaxVertices)
    throw UnsupportedSize("edge list has " + std::to_string(n) + " vertices, cap is " +
                          std::to_string(kMaxVertices));
  GraphBuilder b(static_cast<int>(n));
  for (long e = 0; e < m; ++e) {
    long u = 0, v = 0;
    if (!(in >> u >> v))
      throw MalformedRecord("edge list truncated at edge " + std::to_string(e));
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return std::move(b).build();
}

void write_edge_list(std::ostream& out, const Graph& g) {
  auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es)
    out << u << ' ' << v << '\n';
}

int min_degree(const Graph& g) {
  if (g.order() == 0)
    return 0;
  int best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    best = std::min(best, g.degree(v));
  return best;
}

std::optional<Vertex> low_degree_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < 3)
      return v;
  return std::nullopt;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.original = s.to_vector();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i)
    index[out.original[i]] = static_cast<int>(i);
  GraphBuilder b(static_cast<int>(out.original.size()));
  for (std::size_t i = 0; i < out.original.size(); ++i)
    (g.neighbors(out.original[i]) & s).for_each([&](Vertex w) {
      if (index[w] > static_cast<int>(i))
        b.add_edge(static_cast<Vertex>(i), index[w]);
    });
  out.graph = std::move(b).build();
  return out;
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s) {
  return induced_subgraph(g, g.vertices() - s);
}

std::vector<int> bfs_distances(const Graph& g, Vertex src, const VertexSet& allowed) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  VertexSet unseen = allowed;
  unseen.reset(src);
  dist[src] = 0;
  VertexSet frontier{src};
  for (int d = 1; frontier.any(); ++d) {
    VertexSet next = g.neighbors(frontier) & unseen;
    next.for_each([&](Vertex v) { dist[v] = d; });
    unseen.andnot(next);
    frontier = next;
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1)
    return true;
  auto d = bfs_distances(g, 0, g.vertices());
  for (int x : d)
    if (x < 0)
      return false;
  return true;
}

namespace named {

Graph complete(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      b.add_edge(u, v);
  return std::move(b).build();
}

Graph cycle(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v)
    b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph path(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v)
    b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(b).build();
}

Graph heawood() {
  // 14-cycle plus chords i -- i+5 from every even vertex.
  GraphBuilder b(14);
  for (Vertex i = 0; i < 14; ++i)
    b.add_edge(i, (i + 1) % 14);
  for (Vertex i = 0; i < 14; i += 2)
    b.add_edge(i, (i + 5) % 14);
  return std::move(b).build();
}

Graph complete_bipartite(int a, int c) {
  GraphBuilder b(a + c);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < c; ++v)
      b.add_edge(u, a + v);
  return std::move(b).build();
}

Graph theta_233() {
  // y=0, x1..x6 = 1..6: cycle x1..x6 plus y adjacent to x1 and x4.
  GraphBuilder b(7);
  for (Vertex i = 1; i <= 6; ++i)
    b.add_edge(i, i % 6 + 1);
  b.add_edge(0, 1);
  b.add_edge(0, 4);
  return std::move(b).build();
}

} // namespace named

} // namespace evencycle
