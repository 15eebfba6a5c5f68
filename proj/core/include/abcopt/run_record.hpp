#pragma once

#include <cstdint>
#include <string>

namespace abcopt {

/// Outcome of one seeded optimization run.
struct RunRecord {
  std::string algorithm;
  std::string problem;
  std::uint64_t seed = 0;
  std::uint64_t evaluations = 0;
  double best_objective = 0.0;
  double error = 0.0;  // |best_objective - optimum|
  bool success = false;  // error <= acceptable error

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

}  // namespace abcopt
