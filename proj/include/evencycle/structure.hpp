#pragma once

/**
 * Hole-centred structures for C4-free graphs: chord shortcutting down to a
 * hole, the attachment sets of a hole, good holes and the paths hanging off
 * them, and the theta(2,3,3) configuration.
 *
 * Hole indices are 0-based and taken mod m: x_0 .. x_{m-1}, with x_i x_{i+1}
 * the forward edges of the stored orientation.
 *
 * Most searches come in two flavours. `search_*` runs the search on any
 * graph and returns nullopt when nothing matches. `find_*` first verifies
 * the hypotheses under which the object is guaranteed to exist (throwing
 * PreconditionFailed with a witness otherwise) and treats a failed search as
 * a LemmaViolation.
 */

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evencycle/budget.hpp"
#include "evencycle/cycles.hpp"
#include "evencycle/graph.hpp"

namespace evencycle {

struct HoleContext {
  Cycle hole;
  VertexSet on_hole;
  /// attach[i] = N(x_i) - V(C).
  std::vector<VertexSet> attach;
  /// in_ic[i]: attach[i] and attach[i+1] meet, i.e. x_i x_{i+1} is in a triangle.
  std::vector<bool> in_ic;
  /// in_ic_plus[i] = in_ic[i-1].
  std::vector<bool> in_ic_plus;
  VertexSet ic;
  VertexSet ic_plus;

  int m() const { return hole.length(); }
  int ic_size() const { return ic.count(); }
  Vertex x(int i) const { return hole.verts[static_cast<std::size_t>(wrap(i))]; }
  int wrap(int i) const { return ((i % m()) + m()) % m(); }

  /// N(v) ∩ V(C) as hole indices, ascending.
  std::vector<int> hole_neighbors(const Graph& g, Vertex v) const;
};

/// Shortcut chords until the cycle is a hole. Throws FoundC4 if g has a
/// 4-cycle, InvalidCycle if c is not a cycle of g of length >= 4.
Cycle extract_hole(const Graph& g, const Cycle& c);

/// Throws NotAHole unless `hole` is a chordless cycle of g.
HoleContext compute_hole_context(const Graph& g, const Cycle& hole);

struct IcBoundVerdict {
  bool pass = true;
  int ic_size = 0;
  int bound = 0;
  HoleContext context;
};

/// |I_C| <= 7 - m for a 5..7-hole of a graph with neither C4 nor C8.
IcBoundVerdict check_ic_bound(const Graph& g, const Cycle& hole);

/**
 * A hole of minimum length >= 5 maximizing |I_C|; ties go to the
 * lexicographically smallest canonical form. Exhaustive over the holes of
 * the minimum length.
 */
HoleContext find_good_hole(const Graph& g, Budget budget = Budget{});

/// True iff no hole of length in [5, m) exists and no m-hole has larger |I_C|.
bool is_good_hole(const Graph& g, const HoleContext& ctx, Budget budget = Budget{});

/// The attachment target set X_i: {x_i, x_{i+1}} if x_i ∈ I_C, {x_{i-1}, x_i}
/// if x_i ∈ I_C⁺ \ I_C, else {x_i}. Returned as ascending hole indices.
std::vector<int> target_indices(const HoleContext& ctx, int i);

/// Order of the good path guaranteed for a good m-hole: min(m/2 - 1, 2).
int good_path_order(int m);

struct GoodPath {
  int index = 0;
  std::vector<int> targets;
  /// u_1 .. u_t, all off the hole.
  Path path;
};

/// Induced path u_1..u_order of G - C whose only edges to C are u_1 x, x ∈ X_i.
std::optional<GoodPath> search_good_path(const Graph& g, const HoleContext& ctx, int i,
                                         int order);
GoodPath find_good_path(const Graph& g, const HoleContext& ctx, int i);

/// Checks the good-path definition directly against the adjacency rows.
bool is_good_path(const Graph& g, const HoleContext& ctx, const GoodPath& gp);

/**
 * Near-good (C, x_i)-path x_i w_1 .. w_l, l ∈ {3, 4}, on a 5-hole:
 * w_1..w_l induced in G - C, N_C(w_1) = {x_i, x_{i+1}}, N_C(w_2) ⊆ {x_{i+3}},
 * N_C(w_3) = ∅, and N_C(w_4) ⊆ {x_i, x_{i+1}} when present. The search tries
 * l = 4 before l = 3. The returned path starts at x_i.
 */
std::optional<Path> search_near_good_path(const Graph& g, const HoleContext& ctx, int i);
Path find_near_good_path(const Graph& g, const HoleContext& ctx, int i);
bool is_near_good_path(const Graph& g, const HoleContext& ctx, int i, const Path& p);

/// x_i y z u with y z u induced in G - C and E({y, z, u}, V(C)) = {y x_i}.
std::optional<Path> search_good_c_path_len3(const Graph& g, const HoleContext& ctx, int i);
Path find_good_c_path_len3(const Graph& g, const HoleContext& ctx, int i);
bool is_good_c_path(const Graph& g, const HoleContext& ctx, int i, const Path& p);

/**
 * theta(2,3,3) as a (not necessarily induced) subgraph, labeled y, x1..x6:
 * the branch vertices are x1 and x4, joined by x1 y x4, x1 x2 x3 x4 and
 * x1 x6 x5 x4.
 */
struct ThetaEmbedding {
  Vertex y = -1;
  std::array<Vertex, 6> x{};

  Vertex branch_a() const { return x[0]; }
  Vertex branch_b() const { return x[3]; }
};

std::optional<ThetaEmbedding> find_theta_233(const Graph& g);
bool is_theta_233(const Graph& g, const ThetaEmbedding& t);

/// t_m(G): max number of triangulated edges over all m-holes (0 if none).
/// Throws BudgetExceeded once more than `hole_cap` holes have been seen.
int triangulated_edge_bound(const Graph& g, int m, std::uint64_t hole_cap = 1'000'000,
                            Budget budget = Budget{});

bool is_triangulated_edge(const Graph& g, Vertex u, Vertex v);

struct IndependentEdges {
  std::optional<std::pair<Edge, Edge>> edges;
  /// Set exactly when `edges` is empty: v w v2 u.
  std::optional<Cycle> c4;
};

/// Two disjoint edges from {v, v2} into `a`, where v, v2 ∈ N(u).
IndependentEdges independent_edge_pair(const Graph& g, Vertex u, Vertex v, Vertex v2,
                                       const VertexSet& a);

struct PathLengthVerdict {
  bool pass = true;
  std::uint64_t paths_checked = 0;
  int from_index = -1;
  int to_index = -1;
  Path witness;
};

/**
 * On a 5-hole of a graph with no C4 and no C8, every path of G - C of length
 * <= 5 from A_i to A_j avoids lengths {1, 2, 5} when j = i ± 1 and lengths
 * {0, 3, 4} when j = i ± 2.
 */
PathLengthVerdict check_path_length_exclusions(const Graph& g, const HoleContext& ctx,
                                        Budget budget = Budget{});

// Precondition helpers shared with the classify and harness layers.
void require_no_c4_c8(const Graph& g);
void require_min_degree_3(const Graph& g);

} // namespace evencycle
