#include "evencycle/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace evencycle {

void require_no_c4_c8(const Graph& g) {
  if (auto c = find_cycle_of_length(g, 4))
    throw PreconditionFailed(PreconditionFailed::Kind::HasC4, "graph contains a C4", *c);
  if (auto c = find_cycle_of_length(g, 8))
    throw PreconditionFailed(PreconditionFailed::Kind::HasC8, "graph contains a C8", *c);
}

void require_min_degree_3(const Graph& g) {
  if (auto v = low_degree_vertex(g))
    throw PreconditionFailed(PreconditionFailed::Kind::LowDegree,
                             "vertex " + std::to_string(*v) + " has degree " +
                                 std::to_string(g.degree(*v)),
                             *v);
}

std::vector<int> HoleContext::hole_neighbors(const Graph& g, Vertex v) const {
  std::vector<int> out;
  for (int i = 0; i < m(); ++i)
    if (g.adjacent(v, hole.verts[i]))
      out.push_back(i);
  return out;
}

namespace {

VertexSet set_of(const std::vector<Vertex>& vs) {
  VertexSet s;
  for (Vertex v : vs)
    s.set(v);
  return s;
}

// First chord in position order, as (i, j) with i < j.
std::optional<std::pair<int, int>> first_chord(const Graph& g, const std::vector<Vertex>& c) {
  const int k = static_cast<int>(c.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1)
        continue;
      if (g.adjacent(c[i], c[j]))
        return std::pair{i, j};
    }
  return std::nullopt;
}

Vertex min_of(const std::vector<Vertex>& vs, std::size_t from, std::size_t to) {
  Vertex best = kMaxVertices;
  for (std::size_t i = from; i < to; ++i)
    best = std::min(best, vs[i]);
  return best;
}

} // namespace

Cycle extract_hole(const Graph& g, const Cycle& c) {
  if (!is_cycle(g, c))
    throw InvalidCycle("extract_hole: input is not a cycle of the graph");
  if (c.length() < 4)
    throw InvalidCycle("extract_hole: cycle must have length at least 4");
  if (auto c4 = find_cycle_of_length(g, 4))
    throw FoundC4(*c4);

  std::vector<Vertex> cur = c.verts;
  while (auto chord = first_chord(g, cur)) {
    auto [i, j] = *chord;
    // inner side: cur[i..j]; outer side: cur[j..] + cur[..i].
    std::vector<Vertex> inner(cur.begin() + i, cur.begin() + j + 1);
    std::vector<Vertex> outer(cur.begin() + j, cur.end());
    outer.insert(outer.end(), cur.begin(), cur.begin() + i + 1);
    bool keep_inner;
    if (inner.size() != outer.size()) {
      keep_inner = inner.size() > outer.size();
    } else {
      // Interiors are disjoint, so their minima differ.
      keep_inner = min_of(inner, 1, inner.size() - 1) < min_of(outer, 1, outer.size() - 1);
    }
    std::vector<Vertex>& next = keep_inner ? inner : outer;
    if (next.size() == 4)
      throw FoundC4(Cycle{next});
    cur = std::move(next);
  }
  Cycle hole{cur};
  if (hole.length() < 5 || !is_hole(g, hole))
    throw std::logic_error("extract_hole ended on something that is not a long hole");
  return hole;
}

HoleContext compute_hole_context(const Graph& g, const Cycle& hole) {
  if (!is_cycle(g, hole) || !is_hole(g, hole))
    throw NotAHole("cycle is not a hole of the graph");
  if (hole.length() < 4)
    throw NotAHole("holes used for attachment bookkeeping need length >= 4");
  HoleContext ctx;
  ctx.hole = hole;
  ctx.on_hole = set_of(hole.verts);
  const int m = hole.length();
  ctx.attach.resize(static_cast<std::size_t>(m));
  ctx.in_ic.assign(static_cast<std::size_t>(m), false);
  ctx.in_ic_plus.assign(static_cast<std::size_t>(m), false);
  for (int i = 0; i < m; ++i)
    ctx.attach[i] = g.neighbors(hole.verts[i]) - ctx.on_hole;
  for (int i = 0; i < m; ++i) {
    const int nx = (i + 1) % m;
    ctx.in_ic[i] = ctx.attach[i].intersects(ctx.attach[nx]);
    const bool triangle =
        (g.neighbors(hole.verts[i]) & g.neighbors(hole.verts[nx])).any();
    if (ctx.in_ic[i] != triangle)
      throw std::logic_error("I_C disagrees with the triangle characterization");
  }
  for (int i = 0; i < m; ++i) {
    ctx.in_ic_plus[i] = ctx.in_ic[(i + m - 1) % m];
    if (ctx.in_ic[i])
      ctx.ic.set(hole.verts[i]);
    if (ctx.in_ic_plus[i])
      ctx.ic_plus.set(hole.verts[i]);
  }
  return ctx;
}

IcBoundVerdict check_ic_bound(const Graph& g, const Cycle& hole) {
  if (hole.length() < 5 || hole.length() > 7)
    throw PreconditionFailed(PreconditionFailed::Kind::Other,
                             "I_C bound applies to holes of length 5..7");
  require_no_c4_c8(g);
  IcBoundVerdict v;
  v.context = compute_hole_context(g, hole);
  v.ic_size = v.context.ic_size();
  v.bound = 7 - hole.length();
  v.pass = v.ic_size <= v.bound;
  return v;
}

namespace {

int ic_count(const Graph& g, const Cycle& hole) {
  const int m = hole.length();
  int count = 0;
  for (int i = 0; i < m; ++i)
    if ((g.neighbors(hole.verts[i]) & g.neighbors(hole.verts[(i + 1) % m])).any())
      ++count;
  return count;
}

} // namespace

HoleContext find_good_hole(const Graph& g, Budget budget) {
  for (int m = 5; m <= g.order(); ++m) {
    std::optional<Cycle> best;
    int best_ic = -1;
    for_each_hole(
        g, m,
        [&](const Cycle& h) {
          int ic = ic_count(g, h);
          if (ic > best_ic) {
            best_ic = ic;
            best = h;
          }
          return true;
        },
        budget);
    if (best)
      return compute_hole_context(g, *best);
  }
  std::optional<Cycle> c4 = find_cycle_of_length(g, 4);
  std::optional<Vertex> low = low_degree_vertex(g);
  if (!c4 && !low)
    throw LemmaViolation("long-hole", "C4-free graph with minimum degree >= 3 has no hole of "
                                      "length >= 5");
  throw NoLongHole(std::move(c4), low);
}

bool is_good_hole(const Graph& g, const HoleContext& ctx, Budget budget) {
  const int m = ctx.m();
  if (m < 5)
    return false;
  for (int len = 5; len < m; ++len) {
    bool any = false;
    for_each_hole(
        g, len,
        [&](const Cycle&) {
          any = true;
          return false;
        },
        budget);
    if (any)
      return false;
  }
  const int mine = ctx.ic_size();
  bool beaten = false;
  for_each_hole(
      g, m,
      [&](const Cycle& h) {
        if (ic_count(g, h) > mine)
          beaten = true;
        return !beaten;
      },
      budget);
  return !beaten;
}

std::vector<int> target_indices(const HoleContext& ctx, int i) {
  i = ctx.wrap(i);
  if (ctx.in_ic[i])
    return {i, ctx.wrap(i + 1)};
  if (ctx.in_ic_plus[i]) {
    std::vector<int> t{ctx.wrap(i - 1), i};
    std::sort(t.begin(), t.end());
    return t;
  }
  return {i};
}

int good_path_order(int m) { return std::min(m / 2 - 1, 2); }

namespace {

VertexSet hole_subset(const HoleContext& ctx, const std::vector<int>& idx) {
  VertexSet s;
  for (int i : idx)
    s.set(ctx.x(i));
  return s;
}

VertexSet hole_nbrs(const Graph& g, const HoleContext& ctx, Vertex v) {
  return g.neighbors(v) & ctx.on_hole;
}

void require_hole_index(const HoleContext& ctx, int i) {
  if (i < 0 || i >= ctx.m())
    throw PreconditionFailed(PreconditionFailed::Kind::BadIndex,
                             "hole index " + std::to_string(i) + " out of range");
}

void require_good_hole(const Graph& g, const HoleContext& ctx) {
  // Recompute so a stale or foreign context is caught.
  HoleContext fresh = compute_hole_context(g, ctx.hole);
  if (fresh.in_ic != ctx.in_ic)
    throw PreconditionFailed(PreconditionFailed::Kind::NotGoodHole,
                             "hole context does not match the graph");
  if (!is_good_hole(g, ctx))
    throw PreconditionFailed(PreconditionFailed::Kind::NotGoodHole, "hole is not a good hole",
                             ctx.hole);
}

void require_five_hole(const HoleContext& ctx) {
  if (ctx.m() != 5)
    throw PreconditionFailed(PreconditionFailed::Kind::Other, "operation needs a 5-hole");
}

} // namespace

std::optional<GoodPath> search_good_path(const Graph& g, const HoleContext& ctx, int i,
                                         int order) {
  if (order < 1)
    throw std::invalid_argument("good path order must be positive");
  i = ctx.wrap(i);
  const std::vector<int> targets = target_indices(ctx, i);
  const VertexSet want = hole_subset(ctx, targets);
  const VertexSet off = g.vertices() - ctx.on_hole;

  std::vector<Vertex> path;
  // DFS over induced paths of G - C; only the first vertex may touch C.
  auto extend = [&](auto&& self, const VertexSet& forbidden) -> bool {
    if (static_cast<int>(path.size()) == order)
      return true;
    const Vertex tip = path.back();
    VertexSet cand = (g.neighbors(tip) & off) - forbidden;
    VertexSet next_forbidden = forbidden | g.neighbors(tip);
    for (Vertex w = cand.first(); w >= 0; w = cand.next(w + 1)) {
      if (hole_nbrs(g, ctx, w).any())
        continue;
      path.push_back(w);
      VertexSet f = next_forbidden;
      f.set(w);
      if (self(self, f))
        return true;
      path.pop_back();
    }
    return false;
  };

  const VertexSet starts = ctx.attach[i];
  for (Vertex u = starts.first(); u >= 0; u = starts.next(u + 1)) {
    if (hole_nbrs(g, ctx, u) != want)
      continue;
    path.assign(1, u);
    VertexSet forbidden{u};
    if (extend(extend, forbidden)) {
      GoodPath gp{i, targets, Path{path}};
      if (!is_good_path(g, ctx, gp))
        throw std::logic_error("search_good_path produced an invalid path");
      return gp;
    }
  }
  return std::nullopt;
}

bool is_good_path(const Graph& g, const HoleContext& ctx, const GoodPath& gp) {
  const auto& p = gp.path.verts;
  if (p.empty())
    return false;
  for (Vertex v : p)
    if (v < 0 || v >= g.order() || ctx.on_hole.test(v))
      return false;
  if (!is_induced_path(g, gp.path))
    return false;
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (int j = 0; j < ctx.m(); ++j) {
      const bool edge = g.adjacent(p[k], ctx.hole.verts[j]);
      const bool wanted =
          k == 0 && std::find(gp.targets.begin(), gp.targets.end(), j) != gp.targets.end();
      if (edge != wanted)
        return false;
    }
  }
  return true;
}

GoodPath find_good_path(const Graph& g, const HoleContext& ctx, int i) {
  require_hole_index(ctx, i);
  require_no_c4_c8(g);
  require_min_degree_3(g);
  require_good_hole(g, ctx);
  if (ctx.m() < 5)
    throw PreconditionFailed(PreconditionFailed::Kind::NotGoodHole, "good holes have length >= 5");
  const int order = good_path_order(ctx.m());
  if (auto gp = search_good_path(g, ctx, i, order))
    return *gp;
  throw LemmaViolation("good-path", "no good path of order " + std::to_string(order) +
                                        " at hole index " + std::to_string(i));
}

std::optional<Path> search_near_good_path(const Graph& g, const HoleContext& ctx, int i) {
  require_five_hole(ctx);
  i = ctx.wrap(i);
  const VertexSet off = g.vertices() - ctx.on_hole;
  const VertexSet first_att{ctx.x(i), ctx.x(i + 1)};
  const VertexSet second_att{ctx.x(i + 3)};

  for (int len : {4, 3}) {
    VertexSet w1s = ctx.attach[i] & ctx.attach[ctx.wrap(i + 1)];
    for (Vertex w1 = w1s.first(); w1 >= 0; w1 = w1s.next(w1 + 1)) {
      if (hole_nbrs(g, ctx, w1) != first_att)
        continue;
      VertexSet w2s = g.neighbors(w1) & off;
      for (Vertex w2 = w2s.first(); w2 >= 0; w2 = w2s.next(w2 + 1)) {
        if (!hole_nbrs(g, ctx, w2).subset_of(second_att))
          continue;
        VertexSet w3s = (g.neighbors(w2) & off) - g.neighbors(w1);
        w3s.reset(w1);
        for (Vertex w3 = w3s.first(); w3 >= 0; w3 = w3s.next(w3 + 1)) {
          if (hole_nbrs(g, ctx, w3).any())
            continue;
          if (len == 3) {
            Path p{{ctx.x(i), w1, w2, w3}};
            if (!is_near_good_path(g, ctx, i, p))
              throw std::logic_error("search_near_good_path produced an invalid path");
            return p;
          }
          VertexSet w4s = ((g.neighbors(w3) & off) - g.neighbors(w1)) - g.neighbors(w2);
          w4s.reset(w1);
          w4s.reset(w2);
          for (Vertex w4 = w4s.first(); w4 >= 0; w4 = w4s.next(w4 + 1)) {
            if (hole_nbrs(g, ctx, w4).subset_of(first_att)) {
              Path p{{ctx.x(i), w1, w2, w3, w4}};
              if (!is_near_good_path(g, ctx, i, p))
                throw std::logic_error("search_near_good_path produced an invalid path");
              return p;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_near_good_path(const Graph& g, const HoleContext& ctx, int i, const Path& p) {
  if (ctx.m() != 5 || p.order() < 4 || p.order() > 5)
    return false;
  i = ctx.wrap(i);
  if (p.verts[0] != ctx.x(i))
    return false;
  Path tail{{p.verts.begin() + 1, p.verts.end()}};
  for (Vertex v : tail.verts)
    if (v < 0 || v >= g.order() || ctx.on_hole.test(v))
      return false;
  if (!is_induced_path(g, tail))
    return false;
  auto nc = [&](Vertex v) { return hole_nbrs(g, ctx, v); };
  if (nc(tail.verts[0]) != VertexSet{ctx.x(i), ctx.x(i + 1)})
    return false;
  if (!nc(tail.verts[1]).subset_of(VertexSet{ctx.x(i + 3)}))
    return false;
  if (nc(tail.verts[2]).any())
    return false;
  if (tail.order() == 4 && !nc(tail.verts[3]).subset_of(VertexSet{ctx.x(i), ctx.x(i + 1)}))
    return false;
  return true;
}

Path find_near_good_path(const Graph& g, const HoleContext& ctx, int i) {
  require_hole_index(ctx, i);
  require_five_hole(ctx);
  if (!ctx.in_ic[i])
    throw PreconditionFailed(PreconditionFailed::Kind::BadIndex,
                             "x_" + std::to_string(i) + " is not in I_C");
  require_no_c4_c8(g);
  require_min_degree_3(g);
  require_good_hole(g, ctx);
  if (auto p = search_near_good_path(g, ctx, i))
    return *p;
  throw LemmaViolation("near-good-path", "no near-good path at hole index " + std::to_string(i));
}

std::optional<Path> search_good_c_path_len3(const Graph& g, const HoleContext& ctx, int i) {
  require_five_hole(ctx);
  i = ctx.wrap(i);
  const VertexSet off = g.vertices() - ctx.on_hole;
  const VertexSet only_xi{ctx.x(i)};
  const VertexSet ys = ctx.attach[i];
  for (Vertex y = ys.first(); y >= 0; y = ys.next(y + 1)) {
    if (hole_nbrs(g, ctx, y) != only_xi)
      continue;
    VertexSet zs = g.neighbors(y) & off;
    for (Vertex z = zs.first(); z >= 0; z = zs.next(z + 1)) {
      if (hole_nbrs(g, ctx, z).any())
        continue;
      VertexSet us = (g.neighbors(z) & off) - g.neighbors(y);
      us.reset(y);
      for (Vertex u = us.first(); u >= 0; u = us.next(u + 1)) {
        if (hole_nbrs(g, ctx, u).none()) {
          Path p{{ctx.x(i), y, z, u}};
          if (!is_good_c_path(g, ctx, i, p))
            throw std::logic_error("search_good_c_path_len3 produced an invalid path");
          return p;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_good_c_path(const Graph& g, const HoleContext& ctx, int i, const Path& p) {
  i = ctx.wrap(i);
  if (p.order() != 4 || p.verts[0] != ctx.x(i))
    return false;
  GoodPath gp{i, {i}, Path{{p.verts.begin() + 1, p.verts.end()}}};
  return is_good_path(g, ctx, gp);
}

Path find_good_c_path_len3(const Graph& g, const HoleContext& ctx, int i) {
  require_hole_index(ctx, i);
  require_five_hole(ctx);
  if (ctx.in_ic[i] || ctx.in_ic_plus[i])
    throw PreconditionFailed(PreconditionFailed::Kind::BadIndex,
                             "x_" + std::to_string(i) + " lies in I_C or I_C+");
  require_no_c4_c8(g);
  require_min_degree_3(g);
  require_good_hole(g, ctx);
  if (auto p = search_good_c_path_len3(g, ctx, i))
    return *p;
  throw LemmaViolation("good-c-path",
                       "no length-3 good path at hole index " + std::to_string(i));
}

std::optional<ThetaEmbedding> find_theta_233(const Graph& g) {
  const int n = g.order();
  for (Vertex x1 = 0; x1 < n; ++x1) {
    if (g.degree(x1) < 3)
      continue;
    for (Vertex x4 = 0; x4 < n; ++x4) {
      if (x4 == x1 || g.degree(x4) < 3)
        continue;
      VertexSet ys = g.neighbors(x1) & g.neighbors(x4);
      for (Vertex y = ys.first(); y >= 0; y = ys.next(y + 1)) {
        VertexSet used{x1, x4, y};
        VertexSet x2s = g.neighbors(x1) - used;
        for (Vertex x2 = x2s.first(); x2 >= 0; x2 = x2s.next(x2 + 1)) {
          VertexSet x3s = (g.neighbors(x2) & g.neighbors(x4)) - used;
          x3s.reset(x2);
          for (Vertex x3 = x3s.first(); x3 >= 0; x3 = x3s.next(x3 + 1)) {
            VertexSet used2 = used | VertexSet{x2, x3};
            VertexSet x6s = g.neighbors(x1) - used2;
            for (Vertex x6 = x6s.first(); x6 >= 0; x6 = x6s.next(x6 + 1)) {
              VertexSet x5s = (g.neighbors(x6) & g.neighbors(x4)) - used2;
              x5s.reset(x6);
              Vertex x5 = x5s.first();
              if (x5 >= 0) {
                ThetaEmbedding t{y, {x1, x2, x3, x4, x5, x6}};
                if (!is_theta_233(g, t))
                  throw std::logic_error("find_theta_233 produced an invalid embedding");
                return t;
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_theta_233(const Graph& g, const ThetaEmbedding& t) {
  std::array<Vertex, 7> all{t.y, t.x[0], t.x[1], t.x[2], t.x[3], t.x[4], t.x[5]};
  VertexSet seen;
  for (Vertex v : all) {
    if (v < 0 || v >= g.order() || seen.test(v))
      return false;
    seen.set(v);
  }
  for (int i = 0; i < 6; ++i)
    if (!g.adjacent(t.x[i], t.x[(i + 1) % 6]))
      return false;
  return g.adjacent(t.y, t.x[0]) && g.adjacent(t.y, t.x[3]);
}

bool is_triangulated_edge(const Graph& g, Vertex u, Vertex v) {
  return g.adjacent(u, v) && (g.neighbors(u) & g.neighbors(v)).any();
}

int triangulated_edge_bound(const Graph& g, int m, std::uint64_t hole_cap, Budget budget) {
  if (m < 5)
    throw std::invalid_argument("t_m is defined for m >= 5");
  int best = 0;
  std::uint64_t seen = 0;
  for_each_hole(
      g, m,
      [&](const Cycle& h) {
        if (++seen > hole_cap)
          throw BudgetExceeded(seen, hole_cap);
        int t = 0;
        for (int i = 0; i < m; ++i)
          if (is_triangulated_edge(g, h.verts[i], h.verts[(i + 1) % m]))
            ++t;
        best = std::max(best, t);
        return true;
      },
      budget);
  return best;
}

IndependentEdges independent_edge_pair(const Graph& g, Vertex u, Vertex v, Vertex v2,
                                       const VertexSet& a) {
  auto in_range = [&](Vertex x) { return x >= 0 && x < g.order(); };
  if (!in_range(u) || !in_range(v) || !in_range(v2) || v == v2)
    throw PreconditionFailed(PreconditionFailed::Kind::Other, "vertices out of range or equal");
  if (!g.adjacent(u, v) || !g.adjacent(u, v2))
    throw PreconditionFailed(PreconditionFailed::Kind::Other, "v and v' must be neighbors of u");
  if (a.intersects(VertexSet{u, v, v2}))
    throw PreconditionFailed(PreconditionFailed::Kind::Other, "A must avoid u, v, v'");
  const VertexSet av = g.neighbors(v) & a;
  const VertexSet av2 = g.neighbors(v2) & a;
  if (av.none() || av2.none())
    throw PreconditionFailed(PreconditionFailed::Kind::Other,
                             "both v and v' need a neighbor in A");
  IndependentEdges out;
  for (Vertex a1 = av.first(); a1 >= 0; a1 = av.next(a1 + 1)) {
    VertexSet rest = av2;
    rest.reset(a1);
    if (Vertex a2 = rest.first(); a2 >= 0) {
      out.edges = std::pair{Edge{v, a1}, Edge{v2, a2}};
      return out;
    }
  }
  // Both reach only the same single vertex w.
  const Vertex w = av.first();
  out.c4 = Cycle{{v, w, v2, u}};
  return out;
}

PathLengthVerdict check_path_length_exclusions(const Graph& g, const HoleContext& ctx, Budget budget) {
  require_five_hole(ctx);
  require_no_c4_c8(g);
  PathLengthVerdict verdict;
  const VertexSet off = g.vertices() - ctx.on_hole;

  // Hole indices each outside vertex attaches to, as a 5-bit mask.
  std::vector<unsigned> att(static_cast<std::size_t>(g.order()), 0);
  for (int i = 0; i < 5; ++i)
    ctx.attach[i].for_each([&](Vertex v) { att[v] |= 1u << i; });

  auto forbidden_length = [](int diff, int len) {
    if (diff == 1 || diff == 4)
      return len == 1 || len == 2 || len == 5;
    return len == 0 || len == 3 || len == 4;
  };

  std::vector<Vertex> path;
  bool stop = false;
  auto check_ends = [&]() {
    ++verdict.paths_checked;
    const unsigned from = att[path.front()];
    const unsigned to = att[path.back()];
    const int len = static_cast<int>(path.size()) - 1;
    for (int i = 0; i < 5 && !stop; ++i) {
      if (!(from & (1u << i)))
        continue;
      for (int j = 0; j < 5; ++j) {
        if (j == i || !(to & (1u << j)))
          continue;
        if (forbidden_length((j - i + 5) % 5, len)) {
          verdict.pass = false;
          verdict.from_index = i;
          verdict.to_index = j;
          verdict.witness = Path{path};
          stop = true;
          break;
        }
      }
    }
  };
  auto walk = [&](auto&& self, const VertexSet& free) -> void {
    budget.charge();
    if (att[path.back()])
      check_ends();
    if (stop || path.size() == 6)
      return;
    VertexSet cand = g.neighbors(path.back()) & free;
    for (Vertex w = cand.first(); w >= 0 && !stop; w = cand.next(w + 1)) {
      VertexSet rest = free;
      rest.reset(w);
      path.push_back(w);
      self(self, rest);
      path.pop_back();
    }
  };

  for (Vertex u = off.first(); u >= 0 && !stop; u = off.next(u + 1)) {
    if (!att[u])
      continue;
    path.assign(1, u);
    VertexSet free = off;
    free.reset(u);
    walk(walk, free);
  }
  return verdict;
}

} // namespace evencycle
