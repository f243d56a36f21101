// evencycle: certificates, corpus scans, lemma suites and power-of-two cycle hunts.
//
//   evencycle check D??
//   evencycle scan --input graphs.g6 --workers 8 --out scan.jsonl
//   evencycle lemmas --input c4free.g6 --bundle bad.json
//   evencycle hunt --input cubic14.g6 --filter connected,cubic --kmax 16

#include <CLI11.hpp>
#include <iostream>

#include "evencycle/harness.hpp"

int main(int argc, char** argv) {
  using namespace evencycle;

  CLI::App app{"C4/C8 certificates and structure checks for simple graphs"};
  std::string mode_name = "check";
  std::string positional_record;
  std::string input, inline_record, filter, out, bundle = "counterexample.json";
  int kmax = 16, workers = 1;
  std::uint64_t budget = Budget::kDefaultGuard;
  bool timings = false;
  bool long_graph6 = false;

  app.add_option("--mode,mode", mode_name, "check | scan | hunt | lemmas | witness");
  app.add_option("record", positional_record, "inline graph6 or edge-list record");
  auto* in_opt = app.add_option("--input", input, "graph6 file (one record per line) or edge list");
  auto* inline_opt = app.add_option("--inline", inline_record, "a single inline record");
  in_opt->excludes(inline_opt);
  app.add_option("--filter", filter, "min-degree=K,connected,cubic,p10-free");
  app.add_option("--kmax", kmax, "largest cycle length tried by hunt")->check(CLI::Range(4, 1 << 20));
  app.add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--budget", budget, "per-check step budget (EVENCYCLE_BUDGET overrides)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out, "output path (default stdout)");
  app.add_option("--bundle", bundle, "where to write a counterexample bundle");
  app.add_flag("--timings", timings, "include per-stage microseconds in records");
  app.add_flag("--long-graph6", long_graph6, "accept graph6 long form (n > 62)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code::kInputError;
  }

  RunConfig cfg;
  auto mode = parse_mode(mode_name);
  if (!mode) {
    std::cerr << "error: unknown mode '" << mode_name << "'\n";
    return exit_code::kInputError;
  }
  cfg.mode = *mode;
  if (!input.empty())
    cfg.input_path = input;
  if (!inline_record.empty())
    cfg.inline_record = inline_record;
  else if (!positional_record.empty())
    cfg.inline_record = positional_record;
  if (cfg.input_path && cfg.inline_record) {
    std::cerr << "error: give either --input or an inline record, not both\n";
    return exit_code::kInputError;
  }
  try {
    cfg.filter = GraphFilter::parse(filter);
    cfg.budget = budget;
    apply_budget_env(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  }
  cfg.kmax = kmax;
  cfg.workers = workers;
  if (!out.empty())
    cfg.out_path = out;
  cfg.bundle_path = bundle;
  cfg.timings = timings;
  cfg.long_graph6 = long_graph6;

  return run(cfg, std::cout, std::cerr);
}
