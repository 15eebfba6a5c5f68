#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace abcopt {

enum class UpdateRule {
  classic,  // v_j = x_j + phi (x_j - x_kj)
  gbest,    // ... + psi (best_j - x_j), psi ~ U[0, C]
};

enum class FitnessRule {
  branch,     // 1/(2f + 1) for f >= 0, 1 + |1/f| otherwise
  classical,  // 1/(1 + f) for f >= 0, 1 + |f| otherwise
  rank,       // linear ranking with selection pressure SP
};

enum class MemeticPhase { none, gss, randomized_gss, hooke_jeeves };

struct MemeticConfig {
  double epsilon = 0.01;  // interval width / step size at which local search stops
  int max_inner_iterations = 20;
  /// Probability that a memetic candidate leaves a coordinate at the best
  /// value; 0 moves every coordinate.
  double perturbation_rate = 0.4;
  double phi1_low = 0.0, phi1_high = 1.0;
  double phi2_low = -1.0, phi2_high = 0.0;
  int hj_interval = 10;  // Hooke-Jeeves runs every hj_interval cycles
  double hj_step_floor = 1e-5;

  void validate() const;
};

struct VariantConfig {
  std::string name = "abc";
  UpdateRule employed_rule = UpdateRule::classic;
  UpdateRule onlooker_rule = UpdateRule::classic;
  FitnessRule fitness_rule = FitnessRule::branch;
  MemeticPhase memetic_phase = MemeticPhase::none;
  double attraction_bound = 1.5;    // C
  int limit = 1500;
  double selection_pressure = 1.5;  // SP, rank fitness only
  int colony_size = 50;             // NP; SN = NP / 2 food sources
  MemeticConfig memetic;

  int food_sources() const noexcept { return colony_size / 2; }

  void validate() const;

  /// abc, gabc, meabc, rmabc or hjabc (case-insensitive). Throws
  /// UnknownNameError otherwise.
  static VariantConfig preset(std::string_view name);
  static std::vector<std::string> preset_names();
};

std::string_view to_string(UpdateRule r);
std::string_view to_string(FitnessRule r);
std::string_view to_string(MemeticPhase p);

}  // namespace abcopt
