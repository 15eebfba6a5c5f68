#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "abcopt/benchmarks.hpp"
#include "abcopt/run_record.hpp"

namespace abcopt {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::vector<std::string> algorithms;
  std::vector<std::string> problems;
  int runs = 100;
  std::uint64_t base_seed = 0;
  std::uint64_t budget = 200000;
  int colony_size = 50;
  int limit = 1500;
  double memetic_epsilon = 0.01;  // q
  unsigned jobs = 1;
  ProblemOptions problem_options;

  /// Seed of run r (1-based).
  std::uint64_t seed_for_run(int r) const { return base_seed + static_cast<std::uint64_t>(r); }
};

/// One record per (algorithm, problem, run), ordered by algorithm, then
/// problem, then run, independent of `jobs`. Name errors surface as
/// ConfigError before any run starts.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config);

/// Table-style aggregate of one algorithm/problem cell.
struct Summary {
  std::string algorithm;
  std::string problem;
  int runs = 0;
  int successes = 0;
  double sd = 0.0;   // population standard deviation of error
  double me = 0.0;   // mean error
  double afe = 0.0;  // mean evaluations
  int sr = 0;        // floor(100 * successes / runs)

  friend bool operator==(const Summary&, const Summary&) = default;
};

/// Throws ContractViolation on empty input.
Summary summarize(std::span<const RunRecord> records);

/// One Summary per (algorithm, problem) cell, in first-appearance order.
std::vector<Summary> summarize_all(std::span<const RunRecord> records);

enum class Sign { plus, minus };

inline char symbol(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// '+' when `a` wins lexicographically on higher SR, then lower AFE, then
/// lower ME; '-' otherwise (including exact ties).
Sign compare_sign(const Summary& a, const Summary& b);

/// Measure x algorithm grid, one block of SD/ME/AFE/SR rows per problem.
std::string format_summary_grid(std::span<const Summary> summaries);

}  // namespace abcopt
