#include "evencycle/cycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace evencycle {

bool is_cycle(const Graph& g, const Cycle& c) {
  const int k = c.length();
  if (k < 3)
    return false;
  VertexSet seen;
  for (Vertex v : c.verts) {
    if (v < 0 || v >= g.order() || seen.test(v))
      return false;
    seen.set(v);
  }
  for (int i = 0; i < k; ++i)
    if (!g.adjacent(c.verts[i], c.verts[(i + 1) % k]))
      return false;
  return true;
}

bool is_path(const Graph& g, const Path& p) {
  if (p.verts.empty())
    return false;
  VertexSet seen;
  for (Vertex v : p.verts) {
    if (v < 0 || v >= g.order() || seen.test(v))
      return false;
    seen.set(v);
  }
  for (int i = 0; i + 1 < p.order(); ++i)
    if (!g.adjacent(p.verts[i], p.verts[i + 1]))
      return false;
  return true;
}

bool is_induced_path(const Graph& g, const Path& p) {
  if (!is_path(g, p))
    return false;
  for (int i = 0; i < p.order(); ++i)
    for (int j = i + 2; j < p.order(); ++j)
      if (g.adjacent(p.verts[i], p.verts[j]))
        return false;
  return true;
}

bool is_hole(const Graph& g, const Cycle& c) {
  if (!is_cycle(g, c))
    throw InvalidCycle("not a cycle of the graph");
  const int k = c.length();
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1)
        continue;
      if (g.adjacent(c.verts[i], c.verts[j]))
        return false;
    }
  return true;
}

namespace {

class FixedLengthSearch {
public:
  FixedLengthSearch(const Graph& g, int k) : g_(g), k_(k) {}

  std::optional<Cycle> run() {
    const int n = g_.order();
    for (Vertex s = 0; s + k_ <= n; ++s) {
      root_ = s;
      VertexSet above = VertexSet::above(s, n);
      VertexSet reach = above;
      reach.set(s);
      dist_ = bfs_distances(g_, s, reach);
      path_.assign(1, s);
      if (extend(s, above))
        return Cycle{path_};
    }
    return std::nullopt;
  }

private:
  // `free` holds the vertices above the root not on the path.
  bool extend(Vertex tip, const VertexSet& free) {
    const int p = static_cast<int>(path_.size());
    if (p == k_ - 1) {
      VertexSet closing = g_.neighbors(tip) & g_.neighbors(root_) & free;
      Vertex w = closing.first();
      if (w < 0)
        return false;
      path_.push_back(w);
      return true;
    }
    VertexSet cand = g_.neighbors(tip) & free;
    for (Vertex w = cand.first(); w >= 0; w = cand.next(w + 1)) {
      if (dist_[w] < 0 || dist_[w] > k_ - p)
        continue;
      VertexSet rest = free;
      rest.reset(w);
      path_.push_back(w);
      if (extend(w, rest))
        return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int k_;
  Vertex root_ = 0;
  std::vector<int> dist_;
  std::vector<Vertex> path_;
};

} // namespace

std::optional<Cycle> find_cycle_of_length(const Graph& g, int k) {
  if (k < 3)
    throw std::invalid_argument("cycle length must be at least 3");
  if (k > g.order())
    return std::nullopt;
  if (k == 4 && !has_c4(g))
    return std::nullopt;
  auto c = FixedLengthSearch(g, k).run();
  if (c && !is_cycle(g, *c))
    throw std::logic_error("find_cycle_of_length produced an invalid cycle");
  return c;
}

bool has_c4(const Graph& g) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) < 2)
      continue;
    for (Vertex v = u + 1; v < n; ++v)
      if ((g.neighbors(u) & g.neighbors(v)).count() >= 2)
        return true;
  }
  return false;
}

namespace {

struct SpectrumWalk {
  const Graph& g;
  int kmax;
  Budget& budget;
  std::set<int>& found;
  std::size_t target;
  Vertex root = 0;

  bool done() const { return found.size() >= target; }

  void walk(Vertex tip, int p, const VertexSet& free) {
    budget.charge();
    if (p >= 3 && g.adjacent(tip, root))
      found.insert(p);
    if (p >= kmax || done())
      return;
    VertexSet cand = g.neighbors(tip) & free;
    for (Vertex w = cand.first(); w >= 0 && !done(); w = cand.next(w + 1)) {
      VertexSet rest = free;
      rest.reset(w);
      walk(w, p + 1, rest);
    }
  }
};

} // namespace

std::set<int> cycle_spectrum(const Graph& g, int kmax, Budget budget) {
  std::set<int> found;
  const int cap = std::min(kmax, g.order());
  if (cap < 3)
    return found;
  SpectrumWalk w{g, cap, budget, found, static_cast<std::size_t>(cap - 2)};
  for (Vertex s = 0; s + 3 <= g.order() && !w.done(); ++s) {
    w.root = s;
    w.walk(s, 1, VertexSet::above(s, g.order()));
  }
  return found;
}

std::optional<Cycle> has_power_of_two_cycle(const Graph& g, int kmax) {
  if (kmax < 4)
    throw std::invalid_argument("kmax must be at least 4");
  for (long len = 4; len <= kmax && len <= g.order(); len *= 2)
    if (auto c = find_cycle_of_length(g, static_cast<int>(len)))
      return c;
  return std::nullopt;
}

namespace {

struct InducedPathSearch {
  const Graph& g;
  int k;
  std::vector<Vertex> path;

  // `forbidden` = closed neighborhoods of all non-tip vertices, plus the tip.
  bool extend(Vertex tip, const VertexSet& forbidden) {
    if (static_cast<int>(path.size()) == k)
      return true;
    VertexSet cand = g.neighbors(tip) - forbidden;
    if (cand.none())
      return false;
    VertexSet next_forbidden = forbidden | g.neighbors(tip);
    next_forbidden.set(tip);
    // The next vertex comes from cand; the rest must avoid next_forbidden.
    if ((g.vertices() - next_forbidden).count() < k - static_cast<int>(path.size()) - 1)
      return false;
    for (Vertex w = cand.first(); w >= 0; w = cand.next(w + 1)) {
      path.push_back(w);
      VertexSet f = next_forbidden;
      f.set(w);
      if (extend(w, f))
        return true;
      path.pop_back();
    }
    return false;
  }
};

} // namespace

std::optional<Path> find_induced_path(const Graph& g, int k) {
  if (k < 1)
    throw std::invalid_argument("induced path needs at least one vertex");
  if (k > g.order())
    return std::nullopt;
  InducedPathSearch s{g, k, {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    s.path.assign(1, v);
    if (s.extend(v, VertexSet{v})) {
      Path p{s.path};
      if (!is_induced_path(g, p))
        throw std::logic_error("find_induced_path produced an invalid path");
      return p;
    }
  }
  return std::nullopt;
}

Cycle canonical_cycle(const Cycle& c) {
  const int k = c.length();
  if (k == 0)
    return c;
  auto it = std::min_element(c.verts.begin(), c.verts.end());
  const int start = static_cast<int>(it - c.verts.begin());
  const Vertex fwd = c.verts[(start + 1) % k];
  const Vertex back = c.verts[(start + k - 1) % k];
  const int step = fwd <= back ? 1 : k - 1;
  Cycle out;
  out.verts.reserve(static_cast<std::size_t>(k));
  for (int i = 0, pos = start; i < k; ++i, pos = (pos + step) % k)
    out.verts.push_back(c.verts[pos]);
  return out;
}

namespace {

class HoleWalk {
public:
  HoleWalk(const Graph& g, int m, const HoleVisitor& visit, Budget& budget)
      : g_(g), m_(m), visit_(visit), budget_(budget) {}

  void run() {
    const int n = g_.order();
    for (Vertex s = 0; s + m_ <= n && !stopped_; ++s) {
      root_ = s;
      VertexSet above = VertexSet::above(s, n);
      VertexSet reach = above;
      reach.set(s);
      dist_ = bfs_distances(g_, s, reach);
      // Everything at or below the root is out of bounds.
      VertexSet blocked = g_.vertices() - above;
      path_.assign(1, s);
      extend(s, blocked);
    }
  }

private:
  // `blocked`: vertices <= root, path vertices, and closed neighborhoods of
  // path vertices strictly between the root and the tip.
  void extend(Vertex tip, const VertexSet& blocked) {
    budget_.charge();
    const int k = static_cast<int>(path_.size()); // position being filled
    const VertexSet& root_nbrs = g_.neighbors(root_);
    if (k == m_ - 1) {
      VertexSet cand = g_.neighbors(tip) & root_nbrs;
      cand.andnot(blocked);
      for (Vertex w = cand.next(path_[1] + 1); w >= 0 && !stopped_; w = cand.next(w + 1)) {
        path_.push_back(w);
        if (!visit_(Cycle{path_}))
          stopped_ = true;
        path_.pop_back();
      }
      return;
    }
    VertexSet cand = g_.neighbors(tip) - blocked;
    if (k >= 2) {
      cand.andnot(root_nbrs);
    }
    VertexSet next_blocked = blocked;
    if (k >= 2)
      next_blocked |= g_.neighbors(tip);
    for (Vertex w = cand.first(); w >= 0 && !stopped_; w = cand.next(w + 1)) {
      if (dist_[w] < 0 || dist_[w] > m_ - k)
        continue;
      VertexSet b = next_blocked;
      b.set(w);
      path_.push_back(w);
      extend(w, b);
      path_.pop_back();
    }
  }

  const Graph& g_;
  int m_;
  const HoleVisitor& visit_;
  Budget& budget_;
  Vertex root_ = 0;
  bool stopped_ = false;
  std::vector<int> dist_;
  std::vector<Vertex> path_;
};

} // namespace

void for_each_hole(const Graph& g, int m, const HoleVisitor& visit, Budget& budget) {
  if (m < 3)
    throw std::invalid_argument("hole length must be at least 3");
  if (m > g.order())
    return;
  HoleWalk(g, m, visit, budget).run();
}

std::vector<Cycle> enumerate_holes(const Graph& g, int m, Budget budget) {
  std::vector<Cycle> out;
  for_each_hole(
      g, m,
      [&](const Cycle& c) {
        out.push_back(c);
        return true;
      },
      budget);
  return out;
}

} // namespace evencycle
