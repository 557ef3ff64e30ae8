#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cli/run_config.hpp"
#include "wordorder/evolution.hpp"
#include "wordorder/theory.hpp"

namespace wordorder::cli {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitConfigError = 1,
  kExitIoError = 2,
  kExitVerificationFailed = 3,
};

struct ScenarioRun {
  Scenario scenario = Scenario::Base;
  std::vector<GenerationStats> history;
};

struct SuiteResult {
  std::vector<ScenarioRun> runs;
  double wall_clock_seconds = 0.0;
};

/// Simulates config.scenarios() and writes, into config.output_dir:
///   <scenario>.csv        per-generation stats
///   best_grammars.json    final best grammar per scenario
///   summary.json          config echo, seed, final stats per scenario
///   config.json           resolved config, usable with --config
///   lexicon-<scenario>-<kind>.txt   when emit_lexicons is set
/// Outputs are byte-identical for identical configs unless record_timing
/// adds wall-clock time to summary.json. Throws IoError before simulating
/// if the directory is unusable.
SuiteResult run_scenarios(const RunConfig& config, std::ostream* log = nullptr);

/// run_scenarios over all four scenarios.
SuiteResult run_figures_suite(RunConfig config, std::ostream* log = nullptr);

struct VerifyResult {
  std::vector<VerificationReport> reports;  // sampling, argmax
  bool pass = false;
};

/// Runs the exhaustive check for both hearer models and writes
/// verification.json into config.output_dir.
VerifyResult run_verify(const RunConfig& config);

/// Whole command-line program; returns the process exit code.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordorder::cli
