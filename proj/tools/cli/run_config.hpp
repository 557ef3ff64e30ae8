#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wordorder/agents.hpp"
#include "wordorder/evolution.hpp"

namespace wordorder::cli {

enum class Mode {
  Run,     ///< the scenario(s) chosen with --scenario
  Suite,   ///< all four scenarios
  Verify,  ///< exhaustive optimality check, no simulation
};

/// Fully resolved settings for one invocation.
struct RunConfig {
  Mode mode = Mode::Run;
  EvolutionParams evolution{};
  bool all_scenarios = false;
  std::filesystem::path output_dir = "wordorder-out";
  std::size_t verify_resolution = 10;
  bool emit_lexicons = false;
  bool record_timing = false;
  /// Keys given explicitly by a config file or flag.
  std::set<std::string> explicit_keys;

  std::vector<Scenario> scenarios() const;
  /// Params for one scenario of this run.
  EvolutionParams params_for(Scenario scenario) const;

  /// Throws ConfigError naming the offending key.
  void validate() const;
};

/// Keys accepted both as `--key` flags and as JSON config-file members.
const std::vector<std::string_view>& config_keys();

/// Applies one setting. Strings are parsed strictly; JSON numbers and
/// booleans are accepted where the setting is numeric or boolean.
/// Throws ConfigError for an unknown key or malformed value.
void apply_setting(RunConfig& config, std::string_view key, const nlohmann::json& value);

/// Applies every member of a JSON object.
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

/// Resolved config as a JSON object using config_keys() spelling; feeding
/// it back through --config reproduces the run.
nlohmann::json to_json(const RunConfig& config);

/// Thrown when --help was requested; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resolution order: defaults, then --config file, then flags.
/// `args` excludes the program name.
RunConfig parse_config(const std::vector<std::string>& args);
RunConfig parse_config(int argc, const char* const* argv);

}  // namespace wordorder::cli
