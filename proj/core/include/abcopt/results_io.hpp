#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "abcopt/experiment.hpp"
#include "abcopt/run_record.hpp"

namespace abcopt {

enum class ResultFormat { csv, json };

class ResultsIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kCsvHeader =
    "algorithm,problem,seed,evaluations,best_objective,error,success";

/// Shortest decimal text that parses back to exactly `v`.
std::string format_number(double v);

std::string records_to_csv(std::span<const RunRecord> records);
std::vector<RunRecord> records_from_csv(const std::string& text);

/// {"records": [...], "summaries": [...]}
std::string results_to_json(std::span<const RunRecord> records, std::span<const Summary> summaries);
void results_from_json(const std::string& text, std::vector<RunRecord>& records,
                       std::vector<Summary>& summaries);

/// CSV gets the records only; JSON gets records and summaries. I/O failures
/// throw ResultsIoError naming the path.
void write_results(const std::filesystem::path& path, ResultFormat format,
                   std::span<const RunRecord> records, std::span<const Summary> summaries);

/// Loads a results file, picking the format from the extension (.json, else
/// CSV). Summaries are recomputed from the records for CSV input.
void read_results(const std::filesystem::path& path, std::vector<RunRecord>& records,
                  std::vector<Summary>& summaries);

}  // namespace abcopt
