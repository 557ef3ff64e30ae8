#include "cli/runner.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "cli/outputs.hpp"
#include "wordorder/lexicon.hpp"

namespace wordorder::cli {

namespace fs = std::filesystem;

namespace {

void emit_lexicons(const fs::path& dir, Scenario scenario, const EvolutionParams& params) {
  const LexiconSet set = make_lexicons(params);
  auto write = [&](const Lexicon& lexicon) {
    std::ostringstream text;
    write_lexicon(text, lexicon);
    write_atomically(dir / ("lexicon-" + std::string(to_string(scenario)) + "-" +
                            std::string(to_string(lexicon.kind())) + ".txt"),
                     text.str());
  };
  if (set.is_split()) {
    write(set.nouns());
    write(set.verbs());
  } else {
    write(set.unified());
  }
}

}  // namespace

SuiteResult run_scenarios(const RunConfig& config, std::ostream* log) {
  config.validate();
  ensure_writable_directory(config.output_dir);
  const auto start = std::chrono::steady_clock::now();

  SuiteResult result;
  for (auto scenario : config.scenarios()) {
    const EvolutionParams params = config.params_for(scenario);
    if (log) *log << "scenario " << to_string(scenario) << ": " << params.generations << " generations\n";
    result.runs.push_back({scenario, run_experiment(params)});
    if (config.emit_lexicons) emit_lexicons(config.output_dir, scenario, params);
  }
  result.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  nlohmann::json best = nlohmann::json::object();
  nlohmann::json summary;
  summary["seed"] = config.evolution.master_seed;
  summary["config"] = to_json(config);
  summary["scenarios"] = nlohmann::json::object();
  for (const auto& run : result.runs) {
    const std::string name(to_string(run.scenario));
    write_atomically(config.output_dir / (name + ".csv"), stats_csv(run.history));
    const auto& last = run.history.back();
    nlohmann::json entry;
    entry["generation"] = last.generation;
    entry["best_distance"] = last.best_distance;
    entry["best_entropy"] = last.best_entropy;
    entry["probabilities"] = nlohmann::json::object();
    for (auto order : all_orders()) entry["probabilities"][order.name()] = last.best_grammar[order];
    best[name] = entry;
    summary["scenarios"][name] = to_json(last);
  }
  if (config.record_timing) summary["wall_clock_seconds"] = result.wall_clock_seconds;

  write_atomically(config.output_dir / "best_grammars.json", best.dump(2) + "\n");
  write_atomically(config.output_dir / "summary.json", summary.dump(2) + "\n");
  write_atomically(config.output_dir / "config.json", to_json(config).dump(2) + "\n");
  return result;
}

SuiteResult run_figures_suite(RunConfig config, std::ostream* log) {
  config.mode = Mode::Suite;
  return run_scenarios(config, log);
}

VerifyResult run_verify(const RunConfig& config) {
  config.validate();
  ensure_writable_directory(config.output_dir);
  VerifyResult result;
  result.pass = true;
  nlohmann::json doc;
  doc["resolution"] = config.verify_resolution;
  doc["reports"] = nlohmann::json::array();
  for (auto model : {HearerModel::Sampling, HearerModel::Argmax}) {
    result.reports.push_back(verify_theorem(config.verify_resolution, model));
    result.pass = result.pass && result.reports.back().pass;
    doc["reports"].push_back(to_json(result.reports.back()));
  }
  doc["pass"] = result.pass;
  write_atomically(config.output_dir / "verification.json", doc.dump(2) + "\n");
  return result;
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_config(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitSuccess;
  } catch (const ConfigError& e) {
    err << "wordorder: configuration error: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    if (config.mode == Mode::Verify) {
      const VerifyResult result = run_verify(config);
      for (const auto& r : result.reports) {
        out << "verify " << to_string(r.model) << ": resolution " << r.resolution << ", "
            << r.grid_size << " grammars, " << r.zero_set.size() << " at zero distance, "
            << (r.pass ? "PASS" : "FAIL") << '\n';
      }
      return result.pass ? kExitSuccess : kExitVerificationFailed;
    }
    const SuiteResult result = run_scenarios(config, &err);
    for (const auto& run : result.runs) {
      const auto& last = run.history.back();
      out << to_string(run.scenario) << ": generation " << last.generation
          << " avg_distance=" << format_number(last.avg_distance)
          << " avg_entropy=" << format_number(last.avg_entropy)
          << " best_max_p=" << format_number(last.best_grammar.max_probability()) << '\n';
    }
    out << "outputs written to " << config.output_dir.string() << '\n';
    return kExitSuccess;
  } catch (const ConfigError& e) {
    err << "wordorder: configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const IoError& e) {
    err << "wordorder: I/O error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const fs::filesystem_error& e) {
    err << "wordorder: I/O error: " << e.what() << '\n';
    return kExitIoError;
  }
}

}  // namespace wordorder::cli
