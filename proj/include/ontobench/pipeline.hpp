#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontobench/report.hpp"

namespace ontobench {

/// Inputs and outputs of a full comparison run. Relative paths in the
/// config file are resolved against the file's directory.
struct RunConfig {
  std::string haystack_dir;
  std::string brick_file;
  std::string dataset;
  /// Alignment CSVs, merged into one table (duplicates are an error).
  std::vector<std::string> alignment;
  /// Relationship-alignment CSV holding both ontologies' entries.
  std::string relationships;
  /// Key relationship config (JSON).
  std::string key_config;
  std::optional<std::string> exclusions;
  std::set<System> target_systems;
  std::string output_dir;
  std::set<ReportFormat> formats;
  std::string haystack_version = "3.9.7";
  /// Raw config text, part of the config hash.
  std::string source_text;
};

/// Parses a JSON run config and checks that every referenced input exists.
/// Throws `ConfigError` naming the field and path.
RunConfig parse_run_config(std::string_view json_text, const std::string& file);
RunConfig load_run_config(const std::string& path);

/// 64-bit FNV-1a, continuing from `seed`.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

/// Hash of the config text and every input file, as 16 hex digits.
std::string config_hash(const RunConfig& config);

/// parse -> dataset -> select -> completeness (x2) -> expressiveness (x2).
/// Errors are rethrown with the stage name prefixed, keeping their exit
/// code. The two ontologies are loaded and evaluated concurrently.
ReportBundle run_pipeline(const RunConfig& config);

}  // namespace ontobench
