#pragma once

#include <span>
#include <utility>
#include <vector>

#include "abcopt/colony.hpp"
#include "abcopt/problem.hpp"

namespace abcopt {

inline constexpr double kGoldenRatio = 0.618;

/// Step-size bracket searched by the golden-section memetic phases.
struct GssInterval {
  double a = -1.2;
  double b = 1.2;

  double width() const noexcept { return a > b ? a - b : b - a; }
};

/// F1 = b - (b - a) psi, F2 = a + (b - a) psi.
std::pair<double, double> gss_points(const GssInterval& interval);

/// (phi1 F1, phi2 F2) with phi1 in [0, 1] and phi2 in [-1, 0]; throws
/// ContractViolation outside those ranges.
std::pair<double, double> randomized_gss_points(const GssInterval& interval, double phi1,
                                                double phi2);

/// best + step (best - partner) in every dimension, projected onto the problem.
Vector memetic_candidate(std::span<const double> best, std::span<const double> partner, double step,
                         const Problem& problem);

/// As above, but each coordinate is moved only when a uniform draw is at
/// least `perturbation_rate`; the others keep the best's value.
Vector memetic_candidate(std::span<const double> best, std::span<const double> partner, double step,
                         const Problem& problem, double perturbation_rate, RandomStream& rng);

struct MemeticStats {
  int inner_iterations = 0;
  int evaluations = 0;
  int improvements = 0;
};

/// Golden-section refinement of the colony's best source.
MemeticStats meabc_memetic_phase(Colony& colony);

/// Golden-section refinement with both interior points rescaled by fresh
/// random factors each iteration.
MemeticStats rmabc_memetic_phase(Colony& colony);

/// delta_j = 0.1 * mean_i (x_ij - best_j). Throws on an empty selection.
Vector hjabc_raw_delta(std::span<const Vector> selected, std::span<const double> best);

/// |raw delta| floored at `floor`, ready to be used as pattern-search steps.
Vector hjabc_delta(std::span<const Vector> selected, std::span<const double> best, double floor);

struct HookeJeevesResult {
  Vector position;
  double objective = 0.0;
  int evaluations = 0;
};

/// Exploratory moves (+/- step_j per coordinate) alternating with pattern
/// moves; steps are halved after a failed exploration. Stops once the largest
/// step is <= epsilon or the budget is spent. Never returns a point worse
/// than `start`.
HookeJeevesResult hooke_jeeves(std::span<const double> start, double start_objective, Vector step,
                               double epsilon, const Problem& problem, EvaluationBudget& budget);

/// Every hj_interval cycles: derive steps from the better half of the colony,
/// run Hooke-Jeeves from the best source, and if it improves, put the result
/// in place of the median-ranked source.
MemeticStats hjabc_memetic_phase(Colony& colony);

}  // namespace abcopt
