#pragma once

#include <filesystem>
#include <set>
#include <string>

#include "abcopt/experiment.hpp"

namespace abcopt::cli {

/// Experiment settings read from a flat `key = value` file. Lists may be
/// written as `[a, b]` or `a, b`; `#` starts a comment.
struct ExperimentFile {
  ExperimentConfig config;
  std::string output;  // empty: not set
  std::string format;  // empty: not set
  std::set<std::string> keys_seen;
};

/// Throws ConfigError with "line N:" prefixes for syntax and value errors
/// and names any missing required key (algorithms, problems).
ExperimentFile parse_experiment_text(const std::string& text);
ExperimentFile load_experiment_file(const std::filesystem::path& path);

}  // namespace abcopt::cli
