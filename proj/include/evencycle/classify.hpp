#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "evencycle/cycles.hpp"
#include "evencycle/graph.hpp"

namespace evencycle {

struct Cycle4 {
  Cycle cycle;
};
struct Cycle8 {
  Cycle cycle;
};
struct InducedP10 {
  Path path;
};
struct LowDegreeVertex {
  Vertex vertex = -1;
  int degree = 0;
};

/// Exactly one witness per graph. Every simple graph admits at least one of
/// these: minimum degree >= 3 plus no induced P10 forces a C4 or a C8.
using Certificate = std::variant<LowDegreeVertex, Cycle4, Cycle8, InducedP10>;

enum class CertificateKind { LowDegreeVertex, Cycle4, Cycle8, InducedP10 };

CertificateKind kind_of(const Certificate& c);
std::string_view kind_name(CertificateKind k);

/// Witness as a flat vertex sequence (a single vertex for LowDegreeVertex).
std::vector<Vertex> witness_vertices(const Certificate& c);

/**
 * Throws UnsupportedSize on the null graph. Otherwise tries, in order: a vertex of degree < 3, a C4, a C8 (n >= 8), an induced
 * P10 (n >= 10). The result is re-verified before it is returned. Throws
 * TheoremViolation if all four branches come up empty.
 */
Certificate classify(const Graph& g);

/// Re-checks a certificate against the raw adjacency rows. Shares no code
/// with the searches.
bool verify_certificate(const Graph& g, const Certificate& cert);

/// C4 preferred over C8. Requires P10-freeness and minimum degree >= 3
/// (PreconditionFailed otherwise, carrying the offending witness).
Cycle find_c4_or_c8(const Graph& g);

/// Graph class predicates used by corpus filters.
struct GraphFilter {
  int min_degree = 0;
  bool connected = false;
  bool cubic = false;
  bool p10_free = false;

  bool accepts(const Graph& g) const;
  std::string describe() const;

  /// "min-degree=3,connected,cubic,p10-free"; empty string accepts all.
  static GraphFilter parse(std::string_view spec);
};

struct HuntCounterexample {
  std::size_t index = 0;
  std::string graph6;
  std::string reason;
};

struct HuntResult {
  std::string filter;
  int kmax = 0;
  std::size_t examined = 0;
  std::size_t filtered_out = 0;
  std::size_t errors = 0;
  std::vector<HuntCounterexample> counterexamples;
  /// Per-record failures (parse errors, budget trips); not counterexamples.
  std::vector<HuntCounterexample> record_errors;
  long long wall_time_ms = 0;

  bool bound_holds() const { return counterexamples.empty(); }
};

/// Largest order at which the hunt double-checks a candidate with the
/// exhaustive spectrum oracle.
inline constexpr int kHuntOracleCap = 14;

/**
 * Scan graph6 records for graphs in the filter class with no cycle of length
 * 4, 8, 16, ... <= kmax. Candidates are double-checked with cycle_spectrum
 * when n <= kHuntOracleCap. Records are processed by `workers` threads and
 * merged in input order.
 */
HuntResult hunt_power_of_two(const std::vector<std::string>& records, int kmax,
                             const GraphFilter& filter, int workers = 1,
                             std::uint64_t budget = Budget::kDefaultGuard,
                             Graph6Options opts = {});

} // namespace evencycle
