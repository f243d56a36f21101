#include "evencycle/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "evencycle/parallel.hpp"

namespace evencycle {

std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "check")
    return Mode::Check;
  if (s == "scan")
    return Mode::Scan;
  if (s == "hunt")
    return Mode::Hunt;
  if (s == "lemmas")
    return Mode::Lemmas;
  if (s == "witness")
    return Mode::Witness;
  return std::nullopt;
}

void apply_budget_env(RunConfig& cfg) {
  const char* env = std::getenv("EVENCYCLE_BUDGET");
  if (!env || !*env)
    return;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0' || v == 0)
    throw std::invalid_argument(std::string("EVENCYCLE_BUDGET must be a positive integer, got ") +
                                env);
  cfg.budget = v;
}

std::vector<std::string> read_records(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (!line.empty())
      out.push_back(std::move(line));
  }
  return out;
}

bool looks_like_edge_list(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && text[pos] >= '0' && text[pos] <= '9';
}

Graph parse_record(std::string_view text, Graph6Options opts) {
  if (looks_like_edge_list(text)) {
    std::istringstream in{std::string(text)};
    return read_edge_list(in);
  }
  return from_graph6(text, opts);
}

// ---- lemma suite -------------------------------------------------------

std::string_view verdict_name(Verdict v) {
  switch (v) {
  case Verdict::Pass:
    return "Pass";
  case Verdict::Violation:
    return "Violation";
  case Verdict::Skipped:
    return "Skipped";
  case Verdict::BudgetExceeded:
    return "BudgetExceeded";
  }
  return "?";
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = {
      "hole-extraction", "long-hole",   "ic-bound",
      "good-path",       "near-good-path", "good-c-path",
      "path-length-exclusions", "theta-implication"};
  return ids;
}

namespace {

LemmaOutcome pass(std::uint64_t instances, std::string detail = {}) {
  return {Verdict::Pass, std::move(detail), instances, {}, {}, {}};
}
LemmaOutcome skipped(std::string why) { return {Verdict::Skipped, std::move(why), 0, {}, {}, {}}; }

LemmaOutcome violation(std::string op, std::vector<std::string> pre, Json witness,
                       std::string detail) {
  return {Verdict::Violation, std::move(detail), 1, std::move(op), std::move(pre),
          std::move(witness)};
}

struct Facts {
  std::optional<Cycle> c4;
  std::optional<Cycle> c8;
  std::optional<Vertex> low;

  bool c4_c8_free() const { return !c4 && !c8; }
};

template <class F>
LemmaOutcome guarded(F&& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    return {Verdict::BudgetExceeded, e.what(), 0, {}, {}, {}};
  } catch (const std::logic_error& e) {
    // A self-verification failure inside the library.
    return violation("self-check", {}, Json(), e.what());
  }
}

LemmaOutcome check_hole_extraction(const Graph& g, const Facts& f) {
  if (f.c4)
    return skipped("has C4");
  int checked = 0;
  for (int k = 5; k <= g.order(); ++k) {
    auto c = find_cycle_of_length(g, k);
    if (!c)
      continue;
    Cycle h = extract_hole(g, *c);
    VertexSet on_c;
    for (Vertex v : c->verts)
      on_c.set(v);
    bool inside = std::all_of(h.verts.begin(), h.verts.end(), [&](Vertex v) { return on_c.test(v); });
    if (!is_cycle(g, h) || !is_hole(g, h) || h.length() < 5 || h.length() > k || !inside)
      return violation("extract_hole", {"no-c4"}, Json{{"cycle", c->verts}, {"result", h.verts}},
                       "extracted cycle is not a long hole inside the input");
    ++checked;
  }
  return pass(static_cast<std::uint64_t>(checked));
}

LemmaOutcome check_long_hole(const Graph& g, const Facts& f, std::uint64_t budget) {
  if (f.c4)
    return skipped("has C4");
  if (f.low)
    return skipped("minimum degree < 3");
  try {
    auto ctx = find_good_hole(g, Budget{budget});
    return pass(1, "m=" + std::to_string(ctx.m()));
  } catch (const LemmaViolation& e) {
    return violation("find_good_hole", {"no-c4", "min-degree>=3"}, Json(), e.what());
  } catch (const NoLongHole& e) {
    return violation("find_good_hole", {"no-c4", "min-degree>=3"}, Json(), e.what());
  }
}

LemmaOutcome check_ic_bounds(const Graph& g, const Facts& f, std::uint64_t budget) {
  if (!f.c4_c8_free())
    return skipped(f.c4 ? "has C4" : "has C8");
  Budget b{budget};
  std::optional<LemmaOutcome> bad;
  int holes = 0;
  for (int m = 5; m <= std::min(7, g.order()) && !bad; ++m) {
    for_each_hole(
        g, m,
        [&](const Cycle& h) {
          ++holes;
          auto v = check_ic_bound(g, h);
          if (!v.pass) {
            bad = violation("check_ic_bound", {"no-c4", "no-c8"}, to_json(v.context),
                            "|I_C| = " + std::to_string(v.ic_size) + " exceeds " +
                                std::to_string(v.bound));
            return false;
          }
          return true;
        },
        b);
  }
  if (bad)
    return *bad;
  return pass(static_cast<std::uint64_t>(holes));
}

LemmaOutcome check_good_paths(const Graph& g, const HoleContext& ctx) {
  int order = good_path_order(ctx.m());
  for (int i = 0; i < ctx.m(); ++i) {
    try {
      find_good_path(g, ctx, i);
    } catch (const LemmaViolation& e) {
      Json w = to_json(ctx);
      w["index"] = i;
      w["order"] = order;
      return violation("find_good_path", {"no-c4", "no-c8", "min-degree>=3", "good-hole"}, w,
                       e.what());
    }
  }
  return pass(static_cast<std::uint64_t>(ctx.m()), "m=" + std::to_string(ctx.m()));
}

LemmaOutcome check_near_good_paths(const Graph& g, const HoleContext& ctx) {
  if (ctx.m() != 5)
    return skipped("good hole has length " + std::to_string(ctx.m()));
  int checked = 0;
  for (int i = 0; i < 5; ++i) {
    if (!ctx.in_ic[static_cast<std::size_t>(i)])
      continue;
    try {
      find_near_good_path(g, ctx, i);
      ++checked;
    } catch (const LemmaViolation& e) {
      Json w = to_json(ctx);
      w["index"] = i;
      return violation("find_near_good_path",
                       {"no-c4", "no-c8", "min-degree>=3", "good-hole", "hole-length=5", "x_i-in-I_C"},
                       w, e.what());
    }
  }
  return pass(static_cast<std::uint64_t>(checked));
}

LemmaOutcome check_good_c_paths(const Graph& g, const HoleContext& ctx) {
  if (ctx.m() != 5)
    return skipped("good hole has length " + std::to_string(ctx.m()));
  int checked = 0;
  for (int i = 0; i < 5; ++i) {
    auto k = static_cast<std::size_t>(i);
    if (ctx.in_ic[k] || ctx.in_ic_plus[k])
      continue;
    try {
      find_good_c_path_len3(g, ctx, i);
      ++checked;
    } catch (const LemmaViolation& e) {
      Json w = to_json(ctx);
      w["index"] = i;
      return violation("find_good_c_path_len3",
                       {"no-c4", "no-c8", "min-degree>=3", "good-hole", "hole-length=5",
                        "x_i-outside-I_C-and-I_C+"},
                       w, e.what());
    }
  }
  return pass(static_cast<std::uint64_t>(checked));
}

LemmaOutcome check_path_lengths(const Graph& g, const Facts& f, std::uint64_t budget) {
  if (!f.c4_c8_free())
    return skipped(f.c4 ? "has C4" : "has C8");
  Budget b{budget};
  std::optional<LemmaOutcome> bad;
  int holes = 0;
  for_each_hole(
      g, 5,
      [&](const Cycle& h) {
        ++holes;
        auto ctx = compute_hole_context(g, h);
        auto v = check_path_length_exclusions(g, ctx, Budget{budget});
        if (!v.pass) {
          Json w = to_json(ctx);
          w["from_index"] = v.from_index;
          w["to_index"] = v.to_index;
          w["path"] = v.witness.verts;
          bad = violation("check_path_length_exclusions", {"no-c4", "no-c8", "hole-length=5"}, w,
                          "forbidden path length between attachment sets");
          return false;
        }
        return true;
      },
      b);
  if (bad)
    return *bad;
  if (holes == 0)
    return skipped("no 5-hole");
  return pass(static_cast<std::uint64_t>(holes));
}

LemmaOutcome check_theta_implication(const Graph& g, const Facts& f, std::uint64_t budget) {
  if (f.low)
    return skipped("minimum degree < 3");
  auto theta = find_theta_233(g);
  if (!theta)
    return skipped("no theta(2,3,3)");
  if (triangulated_edge_bound(g, 5, 1'000'000, Budget{budget}) != 0)
    return skipped("t_5 > 0");
  if (auto p = find_induced_path(g, 10))
    return skipped("has induced P10");
  auto cert = classify(g);
  auto k = kind_of(cert);
  if (k != CertificateKind::Cycle4 && k != CertificateKind::Cycle8) {
    Json w{{"y", theta->y}, {"x", theta->x}, {"certificate", to_json(cert)}};
    return violation("classify", {"p10-free", "min-degree>=3", "t_5=0", "contains-theta(2,3,3)"},
                     w, "no C4 or C8 despite the hypotheses");
  }
  return pass(1, std::string(kind_name(k)));
}

} // namespace

LemmaVerdicts run_lemma_suite(const Graph& g, std::uint64_t budget) {
  Facts f;
  f.c4 = find_cycle_of_length(g, 4);
  if (g.order() >= 8)
    f.c8 = find_cycle_of_length(g, 8);
  f.low = low_degree_vertex(g);

  LemmaVerdicts out;
  out["hole-extraction"] = guarded([&] { return check_hole_extraction(g, f); });
  out["long-hole"] = guarded([&] { return check_long_hole(g, f, budget); });
  out["ic-bound"] = guarded([&] { return check_ic_bounds(g, f, budget); });

  // The good hole is shared by the three existence checks.
  std::optional<HoleContext> good;
  std::optional<LemmaOutcome> good_failed;
  if (!f.c4_c8_free() || f.low) {
    good_failed = skipped(f.low ? "minimum degree < 3" : (f.c4 ? "has C4" : "has C8"));
  } else {
    good_failed = guarded([&]() -> LemmaOutcome {
      try {
        good = find_good_hole(g, Budget{budget});
        return pass(1);
      } catch (const LemmaViolation&) {
        return skipped("no good hole");
      } catch (const NoLongHole&) {
        return skipped("no good hole");
      }
    });
    if (good)
      good_failed.reset();
  }
  auto existence = [&](auto&& body) {
    if (good_failed)
      return *good_failed;
    return guarded([&] { return body(*good); });
  };
  out["good-path"] = existence([&](const HoleContext& c) { return check_good_paths(g, c); });
  out["near-good-path"] =
      existence([&](const HoleContext& c) { return check_near_good_paths(g, c); });
  out["good-c-path"] = existence([&](const HoleContext& c) { return check_good_c_paths(g, c); });
  out["path-length-exclusions"] = guarded([&] { return check_path_lengths(g, f, budget); });
  out["theta-implication"] = guarded([&] { return check_theta_implication(g, f, budget); });
  return out;
}

// ---- per-record scanning ----------------------------------------------

namespace {

long long micros_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

} // namespace

ScanRecord scan_record(std::size_t index, const std::string& record, const RunConfig& cfg,
                       bool with_lemmas) {
  ScanRecord r;
  r.index = index;
  r.graph6 = record;
  std::optional<Graph> g;
  try {
    auto t0 = std::chrono::steady_clock::now();
    g = parse_record(record, {.long_form = cfg.long_graph6});
    if (looks_like_edge_list(record))
      r.graph6 = to_graph6(*g, {.long_form = g->order() > 62});
    r.timings["parse_us"] = micros_since(t0);
  } catch (const Error& e) {
    r.error = std::string(e.what());
    return r;
  }
  if (!cfg.filter.accepts(*g)) {
    r.filtered = true;
    return r;
  }
  try {
    auto t0 = std::chrono::steady_clock::now();
    r.certificate = classify(*g);
    r.timings["classify_us"] = micros_since(t0);
  } catch (const TheoremViolation&) {
    r.theorem_violation = true;
    return r;
  } catch (const UnsupportedSize& e) {
    r.error = std::string(e.what());
    return r;
  }
  auto t1 = std::chrono::steady_clock::now();
  if (!verify_certificate(*g, *r.certificate))
    throw std::logic_error("certificate failed independent verification");
  r.timings["verify_us"] = micros_since(t1);
  if (with_lemmas) {
    auto t2 = std::chrono::steady_clock::now();
    r.lemmas = run_lemma_suite(*g, cfg.budget);
    r.timings["lemmas_us"] = micros_since(t2);
  }
  return r;
}

Json to_json(const ScanRecord& r, bool timings) {
  Json j;
  j["index"] = r.index;
  j["graph6"] = r.graph6;
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  if (r.theorem_violation)
    j["certificate"] = nullptr;
  else if (r.certificate)
    j["certificate"] = to_json(*r.certificate);
  if (r.lemmas) {
    Json lv;
    for (const auto& id : lemma_ids())
      lv[id] = std::string(verdict_name(r.lemmas->at(id).verdict));
    j["lemma_verdicts"] = lv;
  }
  if (timings) {
    Json t;
    for (const auto& [k, v] : r.timings)
      t[k] = v;
    j["timings"] = t;
  }
  return j;
}

int ScanSummary::exit_status() const {
  if (violation)
    return exit_code::kViolation;
  if (malformed > 0)
    return exit_code::kInputError;
  if (budget_exhausted)
    return exit_code::kBudget;
  return exit_code::kPass;
}

Json to_json(const ScanSummary& s) {
  Json j;
  j["records"] = s.records;
  j["parsed"] = s.parsed;
  j["malformed"] = s.malformed;
  j["filtered"] = s.filtered;
  Json tally;
  for (auto k : {CertificateKind::LowDegreeVertex, CertificateKind::Cycle4, CertificateKind::Cycle8,
                 CertificateKind::InducedP10}) {
    std::string name(kind_name(k));
    auto it = s.tally.find(name);
    tally[name] = it == s.tally.end() ? 0 : it->second;
  }
  j["tally"] = tally;
  if (!s.lemma_tally.empty()) {
    Json lt;
    for (const auto& id : lemma_ids()) {
      Json row;
      for (auto v : {Verdict::Pass, Verdict::Violation, Verdict::Skipped, Verdict::BudgetExceeded}) {
        std::string name(verdict_name(v));
        auto it = s.lemma_tally.find(id);
        std::size_t n = 0;
        if (it != s.lemma_tally.end() && it->second.count(name))
          n = it->second.at(name);
        row[name] = n;
      }
      auto in = s.lemma_instances.find(id);
      row["instances"] = in == s.lemma_instances.end() ? 0 : in->second;
      lt[id] = row;
    }
    j["lemma_tally"] = lt;
  }
  j["violation"] = s.violation;
  j["budget_exhausted"] = s.budget_exhausted;
  j["aborted"] = s.aborted;
  return Json{{"summary", j}};
}

namespace {

constexpr std::size_t kBatch = 2048;

void write_theorem_bundle(const RunConfig& cfg, const std::string& graph6) {
  write_bundle(cfg.bundle_path,
               {graph6,
                "classify",
                {"min-degree>=3", "no-c4", "no-c8", "p10-free"},
                Json{{"graph6", graph6}}});
}

} // namespace

ScanSummary run_scan(const std::vector<std::string>& records, const RunConfig& cfg,
                     std::ostream& out, bool with_lemmas) {
  ScanSummary s;
  for (std::size_t lo = 0; lo < records.size() && !s.aborted; lo += kBatch) {
    const std::size_t hi = std::min(records.size(), lo + kBatch);
    auto batch = ordered_map<ScanRecord>(hi - lo, cfg.workers, [&](std::size_t k) {
      return scan_record(lo + k, records[lo + k], cfg, with_lemmas);
    });
    for (const auto& r : batch) {
      ++s.records;
      if (r.error) {
        ++s.malformed;
        out << to_json(r, cfg.timings).dump() << '\n';
        continue;
      }
      ++s.parsed;
      if (r.filtered) {
        ++s.filtered;
        continue;
      }
      out << to_json(r, cfg.timings).dump() << '\n';
      if (r.theorem_violation) {
        s.violation = true;
        s.aborted = true;
        write_theorem_bundle(cfg, r.graph6);
        break;
      }
      ++s.tally[std::string(kind_name(kind_of(*r.certificate)))];
      if (r.lemmas) {
        for (const auto& [id, o] : *r.lemmas) {
          ++s.lemma_tally[id][std::string(verdict_name(o.verdict))];
          if (o.verdict == Verdict::Pass)
            s.lemma_instances[id] += o.instances;
          if (o.verdict == Verdict::BudgetExceeded)
            s.budget_exhausted = true;
          if (o.verdict == Verdict::Violation && !s.violation) {
            s.violation = true;
            s.aborted = true;
            write_bundle(cfg.bundle_path, {r.graph6, o.operation, o.preconditions, o.witness});
          }
        }
        if (s.aborted)
          break;
      }
    }
  }
  out << to_json(s).dump() << '\n';
  return s;
}

// ---- modes ---------------------------------------------------------------

namespace {

std::vector<std::string> load_input(const RunConfig& cfg) {
  if (cfg.inline_record)
    return {*cfg.inline_record};
  if (!cfg.input_path)
    throw std::invalid_argument("no input: pass --input PATH or --inline RECORD");
  std::ifstream in(*cfg.input_path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot open input " + *cfg.input_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  // A file that starts with a digit is a single edge-list graph.
  if (looks_like_edge_list(text))
    return {text};
  std::istringstream lines(text);
  return read_records(lines);
}

std::string witness_text(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i)
    s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

int run_check(const RunConfig& cfg, const std::vector<std::string>& records, std::ostream& out,
              std::ostream& json_out) {
  int status = exit_code::kPass;
  RunConfig unfiltered = cfg;
  unfiltered.filter = GraphFilter{};
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto r = scan_record(i, records[i], unfiltered, false);
    if (r.error) {
      out << "record " << i << ": malformed: " << *r.error << '\n';
      status = std::max(status, exit_code::kInputError);
    } else if (r.theorem_violation) {
      out << "record " << i << " (" << r.graph6 << "): no certificate\n";
      write_theorem_bundle(cfg, r.graph6);
      status = exit_code::kViolation;
    } else {
      const auto& c = *r.certificate;
      out << "record " << i << " (" << r.graph6 << "): " << kind_name(kind_of(c)) << ' '
          << witness_text(witness_vertices(c));
      if (auto* l = std::get_if<LowDegreeVertex>(&c))
        out << " (degree " << l->degree << ')';
      out << '\n';
    }
    json_out << to_json(r, cfg.timings).dump() << '\n';
    if (status == exit_code::kViolation)
      break;
  }
  return status;
}

int run_witness(const RunConfig& cfg, const std::vector<std::string>& records, std::ostream& out) {
  int status = exit_code::kPass;
  for (std::size_t i = 0; i < records.size(); ++i) {
    Json j;
    j["index"] = i;
    j["graph6"] = records[i];
    try {
      Graph g = parse_record(records[i], {.long_form = cfg.long_graph6});
      if (looks_like_edge_list(records[i]))
        j["graph6"] = to_graph6(g, {.long_form = g.order() > 62});
      auto c = find_c4_or_c8(g);
      j["cycle"] = c.verts;
    } catch (const PreconditionFailed& e) {
      j["precondition_failed"] = to_json(e);
    } catch (const TheoremViolation&) {
      j["cycle"] = nullptr;
      write_theorem_bundle(cfg, j["graph6"].get<std::string>());
      out << j.dump() << '\n';
      return exit_code::kViolation;
    } catch (const Error& e) {
      j["error"] = e.what();
      status = exit_code::kInputError;
    }
    out << j.dump() << '\n';
  }
  return status;
}

int run_hunt(const RunConfig& cfg, const std::vector<std::string>& records, std::ostream& out) {
  auto r = hunt_power_of_two(records, cfg.kmax, cfg.filter, cfg.workers, cfg.budget,
                             {.long_form = cfg.long_graph6});
  out << to_json(r).dump(2) << '\n';
  if (!r.counterexamples.empty()) {
    const auto& c = r.counterexamples.front();
    write_bundle(cfg.bundle_path,
                 {c.graph6,
                  "hunt_power_of_two",
                  {cfg.filter.describe(), "kmax=" + std::to_string(cfg.kmax)},
                  Json{{"reason", c.reason}}});
    return exit_code::kViolation;
  }
  bool input = false, budget = false;
  for (const auto& e : r.record_errors) {
    if (e.reason.starts_with("budget-exceeded"))
      budget = true;
    else
      input = true;
  }
  if (input)
    return exit_code::kInputError;
  return budget ? exit_code::kBudget : exit_code::kPass;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> records;
  try {
    records = load_input(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (cfg.out_path) {
    file.open(*cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open output " << *cfg.out_path << '\n';
      return exit_code::kInputError;
    }
    sink = &file;
  }
  try {
    switch (cfg.mode) {
    case Mode::Check:
      return run_check(cfg, records, out, *sink);
    case Mode::Scan:
    case Mode::Lemmas: {
      auto s = run_scan(records, cfg, *sink, cfg.mode == Mode::Lemmas);
      if (s.violation)
        err << "violation found; bundle written to " << cfg.bundle_path << '\n';
      return s.exit_status();
    }
    case Mode::Hunt:
      return run_hunt(cfg, records, *sink);
    case Mode::Witness:
      return run_witness(cfg, records, *sink);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  }
  return exit_code::kPass;
}

// ---- labeled enumeration ----------------------------------------------

Graph labeled_graph(int n, std::uint64_t mask) {
  GraphBuilder b(n);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (mask >> bit & 1U)
        b.add_edge(u, v);
  return std::move(b).build();
}

void for_each_labeled_graph(int n, const std::function<void(std::uint64_t, const Graph&)>& visit) {
  if (n < 0 || n > kLabeledEnumerationCap)
    throw UnsupportedSize("labeled enumeration supports n <= " +
                          std::to_string(kLabeledEnumerationCap));
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  for (std::uint64_t mask = 0; mask < total; ++mask)
    visit(mask, labeled_graph(n, mask));
}

} // namespace evencycle
