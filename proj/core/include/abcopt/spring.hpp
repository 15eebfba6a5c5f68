#pragma once

#include <array>
#include <span>

#include "abcopt/problem.hpp"

namespace abcopt {

// Compression spring weight minimization with four design constraints.
// Variables: x1 active coil count (integer 1..70), x2 mean coil diameter in
// [0.6, 3], x3 wire diameter in [0.207, 0.5] on a 0.001 grid.

struct SpringConstants {
  double max_load = 1000.0;          // F_max
  double allowable_stress = 189000;  // S
  double max_free_length = 14.0;     // l_max
  double max_preload_deflection = 6.0;  // sigma_pm
  double preload = 300.0;            // F_p
  double min_deflection = 1.25;      // sigma_w
  double stiffness_coefficient = 11.5e6;

  /// Normalizers for the four constraint violations.
  std::array<double, 4> scales() const {
    return {allowable_stress, max_free_length, max_preload_deflection, min_deflection};
  }
};

struct SpringDesign {
  int active_coils = 1;            // x1
  double mean_coil_diameter = 0.6; // x2
  double wire_diameter = 0.207;    // x3
};

inline constexpr double kSpringBestKnown = 2.6254;
inline constexpr double kSpringInfeasibleSentinel = 1e10;
inline constexpr double kSpringFeasibilityTolerance = 1e-9;

struct ConstraintReport {
  std::array<double, 4> g{};          // signed g_i, feasible when <= 0
  std::array<double, 4> violation{};  // g_i / scale_i where g_i exceeds the tolerance, else 0
  bool feasible = false;
};

/// pi^2 x2 x3^2 (x1 + 2) / 4
double spring_objective(const SpringDesign& d);

/// A design with x2 <= x3 (c_f pole) is reported with every g_i and
/// violation set to kSpringInfeasibleSentinel.
ConstraintReport spring_constraints(const SpringDesign& d, const SpringConstants& c = {});

/// Raw objective plus weight * sum of normalized violations. Equal to the raw
/// objective exactly when the design is feasible.
double penalized_spring_objective(const SpringDesign& d, double weight = 1e3,
                                  const SpringConstants& c = {});

/// Rounds x1 to the nearest integer and x3 to the nearest 0.001 (ties up),
/// then clamps all three into range.
SpringDesign snap_spring(std::span<const double> raw);

Vector to_vector(const SpringDesign& d);

/// Registry entry "f10": relaxed continuous 3-vector with granularity, scored
/// by the penalized objective.
Problem spring_problem(double penalty_weight = 1e3);

}  // namespace abcopt
