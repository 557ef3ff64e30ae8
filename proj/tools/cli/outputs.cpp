#include "cli/outputs.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

namespace wordorder::cli {

namespace fs = std::filesystem;

void ensure_writable_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir.string() + "'" +
                  (ec ? ": " + ec.message() : std::string()));
  }
  const fs::path probe = dir / ".wordorder-write-probe";
  {
    std::ofstream out(probe);
    if (!(out << "probe")) throw IoError("output directory '" + dir.string() + "' is not writable");
  }
  fs::remove(probe, ec);
}

void write_atomically(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("failed renaming '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
}

std::string format_number(double value) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string stats_csv(std::span<const GenerationStats> history) {
  std::string out(kStatsCsvHeader);
  out += '\n';
  for (const auto& row : history) {
    out += std::to_string(row.generation);
    for (double v : {row.avg_distance, row.avg_entropy, row.best_distance, row.best_entropy}) {
      out += ',';
      out += format_number(v);
    }
    for (double p : row.best_grammar.probabilities()) {
      out += ',';
      out += format_number(p);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const Grammar& grammar) {
  nlohmann::json arr = nlohmann::json::array();
  for (double p : grammar.probabilities()) arr.push_back(p);
  return arr;
}

nlohmann::json to_json(const GenerationStats& stats) {
  nlohmann::json j;
  j["generation"] = stats.generation;
  j["avg_distance"] = stats.avg_distance;
  j["avg_entropy"] = stats.avg_entropy;
  j["best_distance"] = stats.best_distance;
  j["best_entropy"] = stats.best_entropy;
  j["best_grammar"] = to_json(stats.best_grammar);
  return j;
}

nlohmann::json to_json(const RationalDistribution& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : p) arr.push_back(to_string(x));
  return arr;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["model"] = std::string(to_string(report.model));
  j["resolution"] = report.resolution;
  j["grid_size"] = report.grid_size;
  j["zero_set"] = nlohmann::json::array();
  for (const auto& p : report.zero_set) j["zero_set"].push_back(to_json(p));
  j["min_nonzero_value"] =
      report.min_nonzero_value ? nlohmann::json(to_string(*report.min_nonzero_value)) : nlohmann::json();
  j["min_nonzero_point"] =
      report.min_nonzero_point ? to_json(*report.min_nonzero_point) : nlohmann::json();
  j["pass"] = report.pass;
  return j;
}

}  // namespace wordorder::cli
