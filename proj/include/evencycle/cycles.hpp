#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "evencycle/budget.hpp"
#include "evencycle/errors.hpp"
#include "evencycle/graph.hpp"

namespace evencycle {

// Validity predicates. These re-check a witness against the adjacency rows and
// are run on every search result before it leaves this module.

/// Distinct vertices, length >= 3, consecutive (and closing) pairs adjacent.
bool is_cycle(const Graph& g, const Cycle& c);

/// Distinct vertices, consecutive pairs adjacent. A single vertex is a path.
bool is_path(const Graph& g, const Path& p);

/// Path whose only edges among its vertices are the consecutive ones.
bool is_induced_path(const Graph& g, const Path& p);

/// True iff c has no chord. Throws InvalidCycle if c is not a cycle of g.
bool is_hole(const Graph& g, const Cycle& c);

/**
 * First cycle of exactly k vertices in depth-first order: roots ascend, the
 * root is the smallest vertex of the cycle, and neighbors are tried in
 * ascending order. Branches that cannot get back to the root in the remaining
 * steps (by breadth-first distance above the root) are cut.
 */
std::optional<Cycle> find_cycle_of_length(const Graph& g, int k);

/// Fast yes/no for k = 4: some pair of vertices has two common neighbors.
bool has_c4(const Graph& g);

/**
 * Exact set of cycle lengths <= kmax, by enumerating every simple cycle from
 * its minimum vertex. Stops early once every feasible length is seen.
 * Exponential; meant as an oracle for n <= 14.
 */
std::set<int> cycle_spectrum(const Graph& g, int kmax, Budget budget = Budget{});

/// First cycle of length 4, 8, 16, ... (ascending) not exceeding kmax.
std::optional<Cycle> has_power_of_two_cycle(const Graph& g, int kmax);

/**
 * First induced path on exactly k vertices, by depth-first search from the
 * smallest start vertex. The search keeps the closed neighborhoods of all
 * non-tip path vertices as a forbidden set.
 */
std::optional<Path> find_induced_path(const Graph& g, int k);

inline bool is_p10_free(const Graph& g) { return !find_induced_path(g, 10).has_value(); }

/// Minimum vertex first, then the smaller of its two cycle neighbors.
Cycle canonical_cycle(const Cycle& c);

/// Return false from the visitor to stop the enumeration early.
using HoleVisitor = std::function<bool(const Cycle&)>;

/**
 * Visit every m-hole exactly once, in canonical form, in lexicographic order
 * of that form. Every node of the search is charged to the budget.
 */
void for_each_hole(const Graph& g, int m, const HoleVisitor& visit, Budget& budget);

std::vector<Cycle> enumerate_holes(const Graph& g, int m, Budget budget = Budget{});

} // namespace evencycle
