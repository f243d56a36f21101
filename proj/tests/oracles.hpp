#pragma once

// Brute-force reference implementations used only by the tests. Everything
// here reads Graph::adjacent / Graph::order and nothing else, so it shares
// no code with the searches under test. The hole-attachment checks also
// read HoleContext::hole, never the derived sets.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "evencycle/graph.hpp"
#include "evencycle/structure.hpp"

namespace oracle {

using evencycle::Graph;
using evencycle::HoleContext;
using evencycle::Path;
using evencycle::Vertex;

inline std::vector<std::vector<char>> matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<char>> a(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = u != v && g.adjacent(u, v);
  return a;
}

/// Cycle lengths by subset DP: reach[mask][v] says some path starts at the
/// root s, visits exactly `mask` (vertices above s), and ends at v.
inline std::set<int> spectrum_dp(const Graph& g) {
  const int n = g.order();
  auto a = matrix(g);
  std::set<int> out;
  for (int s = 0; s < n; ++s) {
    const int k = n - s - 1;  // vertices s+1 .. n-1
    if (k < 2)
      continue;
    const std::uint32_t full = 1U << k;
    std::vector<std::uint32_t> reach(full, 0);  // bit j: path may end at s+1+j
    for (int j = 0; j < k; ++j)
      if (a[static_cast<std::size_t>(s)][static_cast<std::size_t>(s + 1 + j)])
        reach[1U << j] |= 1U << j;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      const std::uint32_t ends = reach[mask];
      if (!ends)
        continue;
      const int size = __builtin_popcount(mask);
      for (int j = 0; j < k; ++j) {
        if (!(ends >> j & 1U))
          continue;
        const int v = s + 1 + j;
        if (size >= 2 && a[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)])
          out.insert(size + 1);
        for (int t = 0; t < k; ++t)
          if (!(mask >> t & 1U) && a[static_cast<std::size_t>(v)][static_cast<std::size_t>(s + 1 + t)])
            reach[mask | 1U << t] |= 1U << t;
      }
    }
  }
  return out;
}

/// Calls visit(vertex list) for every k-subset of [0, n).
inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  if (k > n || k < 0)
    return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
      --i;
    if (i < 0)
      return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline bool induced_connected(const std::vector<std::vector<char>>& a, const std::vector<int>& s) {
  if (s.empty())
    return true;
  std::vector<char> seen(s.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < s.size(); ++j)
      if (!seen[j] && a[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(s[j])]) {
        seen[j] = 1;
        ++count;
        stack.push_back(j);
      }
  }
  return count == s.size();
}

inline std::vector<int> induced_degrees(const std::vector<std::vector<char>>& a, const std::vector<int>& s) {
  std::vector<int> d(s.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      d[i] += a[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(s[j])];
  return d;
}

/// Number of m-holes = number of m-subsets inducing a cycle.
inline std::size_t count_holes(const Graph& g, int m) {
  auto a = matrix(g);
  std::size_t count = 0;
  for_each_subset(g.order(), m, [&](const std::vector<int>& s) {
    auto d = induced_degrees(a, s);
    if (std::all_of(d.begin(), d.end(), [](int x) { return x == 2; }) && induced_connected(a, s))
      ++count;
  });
  return count;
}

/// Some k-subset induces a path.
inline bool has_induced_path(const Graph& g, int k) {
  auto a = matrix(g);
  bool found = false;
  for_each_subset(g.order(), k, [&](const std::vector<int>& s) {
    if (found)
      return;
    auto d = induced_degrees(a, s);
    int ones = 0, edges2 = 0;
    bool ok = true;
    for (int x : d) {
      if (x > 2)
        ok = false;
      ones += x == 1;
      edges2 += x;
    }
    if (!ok || edges2 != 2 * (k - 1) || !induced_connected(a, s))
      return;
    if (k == 1 || ones == 2)
      found = true;
  });
  return found;
}

/// Every cycle of g (each once: minimum vertex first, second < last).
inline void for_each_cycle(const Graph& g, const std::function<void(const std::vector<Vertex>&)>& visit) {
  const int n = g.order();
  auto a = matrix(g);
  std::vector<Vertex> path;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void(int)> dfs = [&](int root) {
    Vertex tip = path.back();
    for (Vertex w = root + 1; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || !a[static_cast<std::size_t>(tip)][static_cast<std::size_t>(w)])
        continue;
      path.push_back(w);
      used[static_cast<std::size_t>(w)] = 1;
      if (path.size() >= 3 && a[static_cast<std::size_t>(w)][static_cast<std::size_t>(root)] && path[1] < w)
        visit(path);
      dfs(root);
      used[static_cast<std::size_t>(w)] = 0;
      path.pop_back();
    }
  };
  for (Vertex r = 0; r < n; ++r) {
    path = {r};
    used[static_cast<std::size_t>(r)] = 1;
    dfs(r);
    used[static_cast<std::size_t>(r)] = 0;
  }
}

/// theta(2,3,3) by trying every injective labeling y, x1..x6.
inline bool has_theta_233(const Graph& g) {
  const int n = g.order();
  if (n < 7)
    return false;
  auto a = matrix(g);
  static const int edges[][2] = {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}};
  std::vector<int> pick(7);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> place = [&](int depth) {
    if (depth == 7) {
      for (auto& e : edges)
        if (!a[static_cast<std::size_t>(pick[static_cast<std::size_t>(e[0])])]
              [static_cast<std::size_t>(pick[static_cast<std::size_t>(e[1])])])
          return false;
      return true;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)])
        continue;
      // prune on edges back to already placed labels
      bool ok = true;
      for (auto& e : edges) {
        int lo = std::min(e[0], e[1]), hi = std::max(e[0], e[1]);
        if (hi == depth && !a[static_cast<std::size_t>(pick[static_cast<std::size_t>(lo)])][static_cast<std::size_t>(v)])
          ok = false;
      }
      if (!ok)
        continue;
      used[static_cast<std::size_t>(v)] = 1;
      pick[static_cast<std::size_t>(depth)] = v;
      bool hit = place(depth + 1);
      used[static_cast<std::size_t>(v)] = 0;
      if (hit)
        return true;
    }
    return false;
  };
  return place(0);
}

inline std::set<int> hole_nbrs(const Graph& g, const HoleContext& ctx, Vertex v) {
  std::set<int> out;
  for (int i = 0; i < ctx.m(); ++i)
    if (g.adjacent(v, ctx.x(i)))
      out.insert(i);
  return out;
}

inline bool on_hole(const HoleContext& ctx, Vertex v) {
  return std::find(ctx.hole.verts.begin(), ctx.hole.verts.end(), v) != ctx.hole.verts.end();
}

inline bool induced_off_hole(const Graph& g, const HoleContext& ctx, const std::vector<Vertex>& w) {
  for (std::size_t a = 0; a < w.size(); ++a) {
    if (on_hole(ctx, w[a]))
      return false;
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (g.adjacent(w[a], w[b]) != (b == a + 1) || w[a] == w[b])
        return false;
  }
  return true;
}

// Near-good pattern, recomputed from adjacency.
inline bool near_good_oracle(const Graph& g, const HoleContext& ctx, int i, const Path& p) {
  if (p.verts.empty() || p.verts[0] != ctx.x(i))
    return false;
  std::vector<Vertex> w(p.verts.begin() + 1, p.verts.end());
  if (w.size() != 3 && w.size() != 4)
    return false;
  if (!g.adjacent(ctx.x(i), w[0]) || !induced_off_hole(g, ctx, w))
    return false;
  const int a = ctx.wrap(i), b = ctx.wrap(i + 1), c = ctx.wrap(i + 3);
  if (hole_nbrs(g, ctx, w[0]) != std::set<int>{a, b})
    return false;
  auto n2 = hole_nbrs(g, ctx, w[1]);
  if (!(n2.empty() || n2 == std::set<int>{c}))
    return false;
  if (!hole_nbrs(g, ctx, w[2]).empty())
    return false;
  if (w.size() == 4) {
    for (int k : hole_nbrs(g, ctx, w[3]))
      if (k != a && k != b)
        return false;
  }
  return true;
}

// x_i y z u with E({y,z,u}, C) = {y x_i} and y z u induced.
inline bool good_c_oracle(const Graph& g, const HoleContext& ctx, int i, const Path& p) {
  if (p.verts.size() != 4 || p.verts[0] != ctx.x(i) || !g.adjacent(p.verts[0], p.verts[1]))
    return false;
  std::vector<Vertex> w(p.verts.begin() + 1, p.verts.end());
  if (!induced_off_hole(g, ctx, w))
    return false;
  return hole_nbrs(g, ctx, w[0]) == std::set<int>{ctx.wrap(i)} && hole_nbrs(g, ctx, w[1]).empty() &&
         hole_nbrs(g, ctx, w[2]).empty();
}

// Good path for (C, X): path outside C, induced, first vertex attached to
// exactly the hole indices in `targets`, the rest detached.
inline bool good_path_oracle(const Graph& g, const HoleContext& ctx,
                             const std::vector<int>& targets, const Path& p) {
  if (p.verts.empty() || !induced_off_hole(g, ctx, p.verts))
    return false;
  if (hole_nbrs(g, ctx, p.verts[0]) != std::set<int>(targets.begin(), targets.end()))
    return false;
  for (std::size_t k = 1; k < p.verts.size(); ++k)
    if (!hole_nbrs(g, ctx, p.verts[k]).empty())
      return false;
  return true;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<evencycle::Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng))
        es.emplace_back(u, v);
  return evencycle::from_edge_list(n, es);
}

inline std::vector<std::string> load_corpus(const std::string& name) {
  std::ifstream in(std::string(EVENCYCLE_CORPUS_DIR) + "/" + name);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty())
      out.push_back(line);
  return out;
}

} // namespace oracle
