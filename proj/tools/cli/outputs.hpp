#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wordorder/evolution.hpp"
#include "wordorder/grammar.hpp"
#include "wordorder/theory.hpp"

namespace wordorder::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kStatsCsvHeader =
    "generation,avg_distance,avg_entropy,best_distance,best_entropy,"
    "p_svo,p_sov,p_vso,p_vos,p_ovs,p_osv";

/// Creates `dir` if needed and proves it writable; throws IoError otherwise.
void ensure_writable_directory(const std::filesystem::path& dir);

/// Writes to a sibling temporary and renames it over `path`.
void write_atomically(const std::filesystem::path& path, std::string_view content);

/// 12 significant digits, shortest form.
std::string format_number(double value);

/// Header line plus one row per generation.
std::string stats_csv(std::span<const GenerationStats> history);

/// Six probabilities in canonical order.
nlohmann::json to_json(const Grammar& grammar);
nlohmann::json to_json(const GenerationStats& stats);
/// Entries as exact fraction strings, e.g. ["9/10","1/10","0","0","0","0"].
nlohmann::json to_json(const RationalDistribution& p);
/// {model, resolution, grid_size, zero_set, min_nonzero_value, min_nonzero_point, pass}
nlohmann::json to_json(const VerificationReport& report);

}  // namespace wordorder::cli
