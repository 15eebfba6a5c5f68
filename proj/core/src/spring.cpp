#include "abcopt/spring.hpp"

#include <cmath>
#include <numbers>

namespace abcopt {

namespace {

constexpr double kPi = std::numbers::pi;

const Bounds& spring_bounds() {
  static const Bounds b{{1.0, 0.6, 0.207}, {70.0, 3.0, 0.5}};
  return b;
}

const Vector& spring_granularity() {
  static const Vector g{1.0, 0.0, 0.001};
  return g;
}

}  // namespace

double spring_objective(const SpringDesign& d) {
  const double x1 = d.active_coils;
  const double x2 = d.mean_coil_diameter;
  const double x3 = d.wire_diameter;
  return kPi * kPi * x2 * x3 * x3 * (x1 + 2.0) / 4.0;
}

ConstraintReport spring_constraints(const SpringDesign& d, const SpringConstants& c) {
  ConstraintReport r;
  const double x1 = d.active_coils;
  const double x2 = d.mean_coil_diameter;
  const double x3 = d.wire_diameter;
  if (!(x2 > x3) || !(x1 > 0.0) || !(x3 > 0.0)) {
    r.g.fill(kSpringInfeasibleSentinel);
    r.violation.fill(kSpringInfeasibleSentinel);
    r.feasible = false;
    return r;
  }
  const double cf = 1.0 + 0.75 * x3 / (x2 - x3) + 0.615 * x3 / x2;
  const double k = c.stiffness_coefficient * std::pow(x3, 4) / (8.0 * x1 * x2 * x2 * x2);
  const double free_length = c.max_load / k + 1.05 * (x1 + 2.0) * x3;
  const double preload_deflection = c.preload / k;

  r.g[0] = 8.0 * cf * c.max_load * x2 / (kPi * x3 * x3 * x3) - c.allowable_stress;
  r.g[1] = free_length - c.max_free_length;
  r.g[2] = preload_deflection - c.max_preload_deflection;
  r.g[3] = c.min_deflection - (c.max_load - c.preload) / k;

  const auto scale = c.scales();
  r.feasible = true;
  for (std::size_t i = 0; i < 4; ++i) {
    if (r.g[i] > kSpringFeasibilityTolerance) {
      r.violation[i] = r.g[i] / scale[i];
      r.feasible = false;
    }
  }
  return r;
}

double penalized_spring_objective(const SpringDesign& d, double weight, const SpringConstants& c) {
  if (!(weight > 0.0)) throw ContractViolation("penalty weight must be positive");
  const ConstraintReport r = spring_constraints(d, c);
  double total = 0.0;
  for (double v : r.violation) total += v;
  if (total == 0.0) return spring_objective(d);
  return spring_objective(d) + weight * total;
}

SpringDesign snap_spring(std::span<const double> raw) {
  if (raw.size() != 3) throw ContractViolation("snap_spring: expected 3 coordinates");
  const Vector v = clamp_to_bounds(snap_to_granularity(raw, spring_granularity()), spring_bounds());
  return {static_cast<int>(v[0]), v[1], v[2]};
}

Vector to_vector(const SpringDesign& d) {
  return {static_cast<double>(d.active_coils), d.mean_coil_diameter, d.wire_diameter};
}

Problem spring_problem(double penalty_weight) {
  if (!(penalty_weight > 0.0)) throw ContractViolation("penalty weight must be positive");
  Problem p;
  p.name = "f10";
  p.title = "Compression spring";
  p.dimension = 3;
  p.bounds = spring_bounds();
  p.optimum_value = kSpringBestKnown;
  p.acceptable_error = 1e-4;
  p.granularity = spring_granularity();
  p.objective = [penalty_weight](std::span<const double> x) {
    return penalized_spring_objective(snap_spring(x), penalty_weight);
  };
  return p;
}

}  // namespace abcopt
