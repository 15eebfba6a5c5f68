#include "abcopt/variant.hpp"

#include <algorithm>
#include <cctype>

#include "abcopt/benchmarks.hpp"
#include "abcopt/problem.hpp"

namespace abcopt {

void MemeticConfig::validate() const {
  if (!(epsilon > 0.0)) throw ContractViolation("memetic epsilon must be positive");
  if (max_inner_iterations < 1) throw ContractViolation("max_inner_iterations must be positive");
  if (!(perturbation_rate >= 0.0 && perturbation_rate < 1.0)) {
    throw ContractViolation("perturbation_rate must lie in [0, 1)");
  }
  if (!(0.0 <= phi1_low && phi1_low <= phi1_high && phi1_high <= 1.0)) {
    throw ContractViolation("phi1 range must lie in [0, 1]");
  }
  if (!(-1.0 <= phi2_low && phi2_low <= phi2_high && phi2_high <= 0.0)) {
    throw ContractViolation("phi2 range must lie in [-1, 0]");
  }
  if (hj_interval < 1) throw ContractViolation("hj_interval must be positive");
  if (!(hj_step_floor > 0.0)) throw ContractViolation("hj_step_floor must be positive");
}

void VariantConfig::validate() const {
  if (colony_size < 4) throw ContractViolation("colony size must be at least 4 (two food sources)");
  if (limit < 1) throw ContractViolation("limit must be positive");
  if (!(attraction_bound > 0.0)) throw ContractViolation("C must be positive");
  if (!(selection_pressure >= 1.0 && selection_pressure <= 2.0)) {
    throw ContractViolation("selection pressure must lie in [1, 2]");
  }
  memetic.validate();
}

VariantConfig VariantConfig::preset(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  VariantConfig c;
  c.name = key;
  if (key == "abc") {
    // defaults
  } else if (key == "gabc") {
    c.employed_rule = UpdateRule::gbest;
    c.onlooker_rule = UpdateRule::gbest;
  } else if (key == "meabc") {
    c.onlooker_rule = UpdateRule::gbest;
    c.memetic_phase = MemeticPhase::gss;
  } else if (key == "rmabc") {
    c.onlooker_rule = UpdateRule::gbest;
    c.memetic_phase = MemeticPhase::randomized_gss;
  } else if (key == "hjabc") {
    c.fitness_rule = FitnessRule::rank;
    c.memetic_phase = MemeticPhase::hooke_jeeves;
  } else {
    throw UnknownNameError("unknown algorithm '" + std::string(name) +
                           "'; valid names: abc, gabc, meabc, rmabc, hjabc");
  }
  return c;
}

std::vector<std::string> VariantConfig::preset_names() {
  return {"abc", "gabc", "meabc", "rmabc", "hjabc"};
}

std::string_view to_string(UpdateRule r) {
  return r == UpdateRule::classic ? "classic" : "gbest";
}

std::string_view to_string(FitnessRule r) {
  switch (r) {
    case FitnessRule::branch: return "branch";
    case FitnessRule::classical: return "classical";
    case FitnessRule::rank: return "rank";
  }
  return "?";
}

std::string_view to_string(MemeticPhase p) {
  switch (p) {
    case MemeticPhase::none: return "none";
    case MemeticPhase::gss: return "gss";
    case MemeticPhase::randomized_gss: return "randomized_gss";
    case MemeticPhase::hooke_jeeves: return "hooke_jeeves";
  }
  return "?";
}

}  // namespace abcopt
