// Random greedy C4/C8-free graphs with minimum degree >= 3.
//
// Repeatedly joins a minimum-degree vertex u to a random non-neighbor v
// (low degree first) unless u and v are already joined by a path of length
// 3 or 7. Runs that get stuck are dropped. Output: graph6, one per line.
//
//   c4c8free_greedy > tests/corpus/c4c8free_mindeg3_sparse.g6
//
// The default selection matches the committed corpus: orders 30..50 step 4,
// seeds 7..3006, keeping every graph without a 5-hole and the first 40 others
// per order. std::shuffle is library-specific; the corpus was made with libstdc++.

#include <algorithm>
#include <iostream>
#include <random>
#include <vector>

#include "evencycle/cycles.hpp"
#include "evencycle/graph.hpp"

using namespace evencycle;

namespace {

bool has_path(const std::vector<std::vector<int>>& adj, int cur, int target, int left,
              std::vector<char>& used) {
  if (left == 0)
    return cur == target;
  for (int w : adj[static_cast<std::size_t>(cur)]) {
    if (used[static_cast<std::size_t>(w)] || (w == target && left != 1))
      continue;
    used[static_cast<std::size_t>(w)] = 1;
    bool hit = has_path(adj, w, target, left - 1, used);
    used[static_cast<std::size_t>(w)] = 0;
    if (hit)
      return true;
  }
  return false;
}

std::optional<Graph> grow(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  Graph g = from_edge_list(n, edges);
  while (min_degree(g) < 3) {
    const int md = min_degree(g);
    std::vector<int> low;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == md)
        low.push_back(v);
    const int u = low[rng() % low.size()];
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
      if (v != u && !g.adjacent(u, v))
        cand.push_back(v);
    std::shuffle(cand.begin(), cand.end(), rng);
    std::stable_sort(cand.begin(), cand.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    bool added = false;
    for (int v : cand) {
      std::vector<char> used(static_cast<std::size_t>(n), 0);
      used[static_cast<std::size_t>(u)] = 1;
      if (has_path(adj, u, v, 3, used) || has_path(adj, u, v, 7, used))
        continue;
      edges.emplace_back(std::min(u, v), std::max(u, v));
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
      g = from_edge_list(n, edges);
      added = true;
      break;
    }
    if (!added)
      return std::nullopt;
  }
  return g;
}

} // namespace

int main() {
  for (int n = 30; n <= 50; n += 4) {
    std::vector<std::string> without5, with5;
    for (unsigned seed = 7; seed < 7 + 3000; ++seed) {
      auto g = grow(n, seed);
      if (!g)
        continue;
      auto rec = to_graph6(*g);
      if (enumerate_holes(*g, 5).empty())
        without5.push_back(rec);
      else
        with5.push_back(rec);
    }
    for (const auto& r : without5)
      std::cout << r << '\n';
    for (std::size_t i = 0; i < with5.size() && i < 40; ++i)
      std::cout << with5[i] << '\n';
  }
}
