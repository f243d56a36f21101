#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evencycle/classify.hpp"
#include "evencycle/report.hpp"

namespace evencycle {

enum class Mode { Check, Scan, Hunt, Lemmas, Witness };

std::optional<Mode> parse_mode(std::string_view s);

namespace exit_code {
inline constexpr int kPass = 0;
inline constexpr int kViolation = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBudget = 3;
} // namespace exit_code

struct RunConfig {
  Mode mode = Mode::Check;
  std::optional<std::string> input_path;
  std::optional<std::string> inline_record;
  GraphFilter filter;
  int kmax = 16;
  int workers = 1;
  std::uint64_t budget = Budget::kDefaultGuard;
  std::optional<std::string> out_path;
  std::string bundle_path = "counterexample.json";
  bool timings = false;
  /// Accept graph6 long form (n > 62).
  bool long_graph6 = false;
};

/// EVENCYCLE_BUDGET, when set to a positive integer, replaces cfg.budget.
/// Throws std::invalid_argument on a malformed value.
void apply_budget_env(RunConfig& cfg);

/// Non-empty lines, trailing CR stripped.
std::vector<std::string> read_records(std::istream& in);

/// True when the text looks like an edge list ("n m" header) rather than graph6.
bool looks_like_edge_list(std::string_view text);

/// graph6 or edge list, auto-detected.
Graph parse_record(std::string_view text, Graph6Options opts = {});

// ---- lemma suite -------------------------------------------------------

enum class Verdict { Pass, Violation, Skipped, BudgetExceeded };
std::string_view verdict_name(Verdict v);

struct LemmaOutcome {
  Verdict verdict = Verdict::Skipped;
  std::string detail;
  /// Objects actually checked (cycles, holes, hole indices); 0 means vacuous.
  std::uint64_t instances = 0;
  /// Filled on Violation.
  std::string operation;
  std::vector<std::string> preconditions;
  Json witness;
};

/// Suite ids, in report order.
const std::vector<std::string>& lemma_ids();

using LemmaVerdicts = std::map<std::string, LemmaOutcome>;

/// Runs every structural check on g. Each check charges its own budget of
/// `budget` steps.
LemmaVerdicts run_lemma_suite(const Graph& g, std::uint64_t budget = Budget::kDefaultGuard);

// ---- per-record scanning ----------------------------------------------

struct ScanRecord {
  std::size_t index = 0;
  std::string graph6;
  bool filtered = false;
  std::optional<Certificate> certificate;
  /// Parse failure ("MalformedRecord: ...").
  std::optional<std::string> error;
  bool theorem_violation = false;
  std::optional<LemmaVerdicts> lemmas;
  /// Per-stage microseconds; only serialized when timings are requested.
  std::map<std::string, long long> timings;
};

ScanRecord scan_record(std::size_t index, const std::string& record, const RunConfig& cfg,
                       bool with_lemmas);
Json to_json(const ScanRecord& r, bool timings);

struct ScanSummary {
  std::size_t records = 0;
  std::size_t parsed = 0;
  std::size_t malformed = 0;
  std::size_t filtered = 0;
  std::map<std::string, std::size_t> tally;
  std::map<std::string, std::map<std::string, std::size_t>> lemma_tally;
  std::map<std::string, std::uint64_t> lemma_instances;
  bool violation = false;
  bool budget_exhausted = false;
  bool aborted = false;

  int exit_status() const;
};
Json to_json(const ScanSummary& s);

/**
 * Scan (or lemma-suite) run over `records`, writing one JSON line per
 * record plus a summary line to `out`. Records are processed in batches by
 * cfg.workers threads; the output is written in input order by a single
 * writer and does not depend on the worker count. A disproof-grade event
 * writes a bundle to cfg.bundle_path and stops the run.
 */
ScanSummary run_scan(const std::vector<std::string>& records, const RunConfig& cfg,
                     std::ostream& out, bool with_lemmas);

/// Dispatches on cfg.mode. Returns the process exit status.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// ---- labeled enumeration ----------------------------------------------

inline constexpr int kLabeledEnumerationCap = 7;

/// Graph on n vertices whose edges are the set bits of `mask`, bit k being
/// the k-th pair in (0,1), (0,2), (1,2), (0,3), ... order (graph6 order).
Graph labeled_graph(int n, std::uint64_t mask);

/// Calls visit on all 2^(n choose 2) labeled graphs of order n <= 7.
void for_each_labeled_graph(int n, const std::function<void(std::uint64_t, const Graph&)>& visit);

} // namespace evencycle
