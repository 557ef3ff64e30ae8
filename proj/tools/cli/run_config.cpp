#include "cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>

#include <CLI11.hpp>

namespace wordorder::cli {
namespace {

const std::vector<std::string_view> kBooleanKeys{"elitism", "flip-to-self", "emit-lexicons",
                                                 "record-timing"};

bool is_boolean_key(std::string_view key) {
  return std::find(kBooleanKeys.begin(), kBooleanKeys.end(), key) != kBooleanKeys.end();
}

[[noreturn]] void malformed(std::string_view key, const nlohmann::json& value, std::string_view want) {
  throw ConfigError(std::string(key), "expected " + std::string(want) + ", got " + value.dump());
}

std::uint64_t to_unsigned(std::string_view key, const nlohmann::json& value) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec == std::errc{} && ptr == s.data() + s.size() && !s.empty()) return out;
  }
  malformed(key, value, "a nonnegative integer");
}

double to_real(std::string_view key, const nlohmann::json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec == std::errc{} && ptr == s.data() + s.size() && !s.empty()) return out;
  }
  malformed(key, value, "a number");
}

bool to_bool(std::string_view key, const nlohmann::json& value) {
  if (value.is_boolean()) return value.get<bool>();
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
  }
  malformed(key, value, "a boolean");
}

std::string to_text(std::string_view key, const nlohmann::json& value) {
  if (!value.is_string()) malformed(key, value, "a string");
  return value.get<std::string>();
}

std::string describe(std::string_view key) {
  static const std::map<std::string_view, std::string_view> text{
      {"scenario", "base | nv | case | nv-case | all (default base)"},
      {"generations", "generations to simulate (default 1000)"},
      {"population", "grammars per generation (default 100)"},
      {"selection-rate", "fraction kept as parents, in (0, 1] (default 0.3)"},
      {"mutation-variance", "Gaussian mutation variance (default 0.01)"},
      {"noise", "per-letter flip probability (default 0.01)"},
      {"trials", "communication trials per grammar (default 1)"},
      {"lexicon-size", "words in the single lexicon (default 1000)"},
      {"noun-lexicon-size", "nouns in split-lexicon scenarios (default 500)"},
      {"verb-lexicon-size", "verbs in split-lexicon scenarios (default 500)"},
      {"word-length", "letters per word (default 3)"},
      {"seed", "master seed (default 0)"},
      {"out", "output directory (default wordorder-out)"},
      {"verify-resolution", "grid resolution for verify (default 10)"},
      {"threads", "worker threads; results do not depend on it (default 1)"},
      {"elitism", "carry survivors over unmutated"},
      {"flip-to-self", "noise may replace a letter with itself"},
      {"emit-lexicons", "write the generated lexicons"},
      {"record-timing", "add wall-clock time to summary.json"},
  };
  const auto it = text.find(key);
  return it == text.end() ? std::string() : std::string(it->second);
}

}  // namespace

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys{
      "scenario",      "generations",       "population",        "selection-rate",
      "mutation-variance", "noise",         "trials",            "lexicon-size",
      "noun-lexicon-size", "verb-lexicon-size", "word-length",   "seed",
      "out",           "verify-resolution", "threads",           "elitism",
      "flip-to-self",  "emit-lexicons",     "record-timing",
  };
  return keys;
}

std::vector<Scenario> RunConfig::scenarios() const {
  if (mode == Mode::Suite || all_scenarios) return {kScenarios.begin(), kScenarios.end()};
  return {evolution.scenario};
}

EvolutionParams RunConfig::params_for(Scenario scenario) const {
  EvolutionParams p = evolution;
  p.scenario = scenario;
  return p;
}

void RunConfig::validate() const {
  if (verify_resolution < 2) {
    throw ConfigError("verify-resolution", "must be at least 2 (resolution 1 only contains vertices)");
  }
  if (output_dir.empty()) throw ConfigError("out", "must not be empty");
  if (mode == Mode::Verify) return;
  if (mode == Mode::Run && !all_scenarios) {
    const bool split = uses_split_lexicons(evolution.scenario);
    const char* unused = nullptr;
    if (split && explicit_keys.count("lexicon-size")) unused = "lexicon-size";
    if (!split && explicit_keys.count("noun-lexicon-size")) unused = "noun-lexicon-size";
    if (!split && explicit_keys.count("verb-lexicon-size")) unused = "verb-lexicon-size";
    if (unused) {
      throw ConfigError(unused, "not used by scenario '" +
                                    std::string(to_string(evolution.scenario)) + "'");
    }
  }
  for (auto s : scenarios()) params_for(s).validate();
}

void apply_setting(RunConfig& config, std::string_view key, const nlohmann::json& value) {
  auto& e = config.evolution;
  if (key == "scenario") {
    const std::string name = to_text(key, value);
    if (name == "all") {
      config.all_scenarios = true;
    } else if (auto s = parse_scenario(name)) {
      config.all_scenarios = false;
      e.scenario = *s;
    } else {
      throw ConfigError("scenario", "unknown scenario '" + name + "' (base|nv|case|nv-case|all)");
    }
  } else if (key == "generations") {
    e.generations = to_unsigned(key, value);
  } else if (key == "population") {
    e.population_size = to_unsigned(key, value);
  } else if (key == "selection-rate") {
    e.selection_rate = to_real(key, value);
  } else if (key == "mutation-variance") {
    e.mutation_variance = to_real(key, value);
  } else if (key == "noise") {
    e.noise.flip_probability = to_real(key, value);
  } else if (key == "trials") {
    e.trials_per_grammar = to_unsigned(key, value);
  } else if (key == "lexicon-size") {
    e.lexicon.unified = to_unsigned(key, value);
  } else if (key == "noun-lexicon-size") {
    e.lexicon.nouns = to_unsigned(key, value);
  } else if (key == "verb-lexicon-size") {
    e.lexicon.verbs = to_unsigned(key, value);
  } else if (key == "word-length") {
    e.lexicon.word_length = to_unsigned(key, value);
  } else if (key == "seed") {
    e.master_seed = to_unsigned(key, value);
  } else if (key == "out") {
    config.output_dir = to_text(key, value);
  } else if (key == "verify-resolution") {
    config.verify_resolution = to_unsigned(key, value);
  } else if (key == "threads") {
    e.threads = to_unsigned(key, value);
  } else if (key == "elitism") {
    e.elitism = to_bool(key, value);
  } else if (key == "flip-to-self") {
    e.noise.exclude_self = !to_bool(key, value);
  } else if (key == "emit-lexicons") {
    config.emit_lexicons = to_bool(key, value);
  } else if (key == "record-timing") {
    config.record_timing = to_bool(key, value);
  } else {
    throw ConfigError(std::string(key), "unknown setting");
  }
  config.explicit_keys.insert(std::string(key));
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path.string() + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw ConfigError("config", std::string("malformed JSON: ") + err.what());
  }
  if (!doc.is_object()) throw ConfigError("config", "top level must be a JSON object");
  for (const auto& [key, value] : doc.items()) apply_setting(config, key, value);
}

nlohmann::json to_json(const RunConfig& config) {
  const auto& e = config.evolution;
  nlohmann::json j;
  const bool every = config.mode == Mode::Suite || config.all_scenarios;
  j["scenario"] = every ? std::string("all") : std::string(to_string(e.scenario));
  j["generations"] = e.generations;
  j["population"] = e.population_size;
  j["selection-rate"] = e.selection_rate;
  j["mutation-variance"] = e.mutation_variance;
  j["noise"] = e.noise.flip_probability;
  j["trials"] = e.trials_per_grammar;
  if (every || !uses_split_lexicons(e.scenario)) j["lexicon-size"] = e.lexicon.unified;
  if (every || uses_split_lexicons(e.scenario)) {
    j["noun-lexicon-size"] = e.lexicon.nouns;
    j["verb-lexicon-size"] = e.lexicon.verbs;
  }
  j["word-length"] = e.lexicon.word_length;
  j["seed"] = e.master_seed;
  j["verify-resolution"] = config.verify_resolution;
  j["threads"] = e.threads;
  j["elitism"] = e.elitism;
  j["flip-to-self"] = !e.noise.exclude_self;
  j["emit-lexicons"] = config.emit_lexicons;
  j["record-timing"] = config.record_timing;
  return j;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Evolutionary word-order simulator", "wordorder"};
  app.allow_extras();
  app.require_subcommand(0, 1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON file of settings (keys as the long flags)");

  std::map<std::string, std::string, std::less<>> texts;
  std::map<std::string, bool, std::less<>> flags;
  std::map<std::string, CLI::Option*, std::less<>> options;
  for (auto key : config_keys()) {
    const std::string name = "--" + std::string(key);
    if (is_boolean_key(key)) {
      options[std::string(key)] = app.add_flag(name, flags[std::string(key)], describe(key));
    } else {
      options[std::string(key)] = app.add_option(name, texts[std::string(key)], describe(key));
    }
  }

  auto* run = app.add_subcommand("run", "simulate the scenario(s) chosen with --scenario");
  auto* suite = app.add_subcommand("suite", "simulate all four scenarios");
  auto* verify = app.add_subcommand("verify", "exhaustively check that only fixed orders are optimal");
  for (auto* sub : {run, suite, verify}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& err) {
    throw ConfigError("arguments", err.what());
  }
  if (auto extras = app.remaining(); !extras.empty()) {
    throw ConfigError(extras.front(), "unknown flag or argument");
  }

  RunConfig config;
  if (!config_path.empty()) apply_config_file(config, config_path);
  for (auto key : config_keys()) {
    const auto* opt = options.at(std::string(key));
    if (opt->count() == 0) continue;
    if (is_boolean_key(key)) {
      apply_setting(config, key, nlohmann::json(flags.at(std::string(key))));
    } else {
      apply_setting(config, key, nlohmann::json(texts.at(std::string(key))));
    }
  }

  if (suite->parsed()) {
    config.mode = Mode::Suite;
  } else if (verify->parsed() || (!run->parsed() && options.at("verify-resolution")->count() > 0)) {
    config.mode = Mode::Verify;
  }
  config.validate();
  return config;
}

RunConfig parse_config(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_config(args);
}

}  // namespace wordorder::cli
